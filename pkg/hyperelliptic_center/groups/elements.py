"""The group families Cyclic(m), Dihedral(m), Dic_n and U_n in normal form x^s y^j."""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

logger = logging.getLogger(__name__)


class InvalidGroupParameter(ValueError):
    pass


class Family(Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    DICYCLIC = "dicyclic"
    U = "u"

    @classmethod
    def from_str(cls, name: str):
        for member in cls:
            if member.value == name.lower():
                return member
        raise ValueError(f"Invalid group family: {name}")

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class GroupElement:
    flip: int
    power: int

    def label(self) -> str:
        if not self.flip:
            return "1" if not self.power else ("y" if self.power == 1 else f"y^{self.power}")
        if not self.power:
            return "x"
        return "x y" if self.power == 1 else f"x y^{self.power}"

    def __str__(self) -> str:
        return self.label()


# A word is a product of generator powers, e.g. (("x", 1), ("y", 3)).
Word = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class ConjClass:
    representative: GroupElement
    members: tuple[GroupElement, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class FiniteGroup:
    """x^s y^j with y^j x = x y^(e*j) and x^2 = y^z; Cyclic groups have no x."""

    family: Family
    param: int
    # Set when the group was requested under another name, e.g. U(3) -> Dihedral(3).
    alias: Optional[str] = None

    @property
    def name(self) -> str:
        return {
            Family.CYCLIC: "Cyclic",
            Family.DIHEDRAL: "Dihedral",
            Family.DICYCLIC: "Dic",
            Family.U: "U",
        }[self.family] + f"({self.param})"

    @property
    def rotation_order(self) -> int:
        if self.family in (Family.CYCLIC, Family.DIHEDRAL):
            return self.param
        return 2 * self.param

    @property
    def has_flip(self) -> bool:
        return self.family is not Family.CYCLIC

    @property
    def conjugation_exponent(self) -> int:
        if self.family is Family.U:
            return self.param - 1
        return -1

    @property
    def flip_square(self) -> int:
        return self.param if self.family is Family.DICYCLIC else 0

    @property
    def order(self) -> int:
        return self.rotation_order * (2 if self.has_flip else 1)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(0, 0)

    @property
    def x(self) -> GroupElement:
        if not self.has_flip:
            raise InvalidGroupParameter(f"{self.name} has no generator x")
        return GroupElement(1, 0)

    @property
    def y(self) -> GroupElement:
        return GroupElement(0, 1 % self.rotation_order)

    def element(self, flip: int, power: int) -> GroupElement:
        if flip and not self.has_flip:
            raise InvalidGroupParameter(f"{self.name} has no generator x")
        return GroupElement(flip, power % self.rotation_order)

    @functools.cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        flips = (0, 1) if self.has_flip else (0,)
        return tuple(GroupElement(s, j) for s in flips for j in range(self.rotation_order))

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        n = self.rotation_order
        if not b.flip:
            return GroupElement(a.flip, (a.power + b.power) % n)
        power = self.conjugation_exponent * a.power + b.power
        if not a.flip:
            return GroupElement(1, power % n)
        return GroupElement(0, (self.flip_square + power) % n)

    def power(self, g: GroupElement, exponent: int) -> GroupElement:
        if exponent < 0:
            return self.power(self.inverse(g), -exponent)
        result = self.identity
        for _ in range(exponent):
            result = self.multiply(result, g)
        return result

    def inverse(self, g: GroupElement) -> GroupElement:
        n = self.rotation_order
        if not g.flip:
            return GroupElement(0, -g.power % n)
        return GroupElement(1, (-self.flip_square - self.conjugation_exponent * g.power) % n)

    def evaluate(self, word: Word) -> GroupElement:
        result = self.identity
        for gen, exponent in word:
            result = self.multiply(result, self.power(self.x if gen == "x" else self.y, exponent))
        return result

    def relators(self) -> list[Word]:
        """Defining relators, each equal to the identity, with nonnegative powers."""
        n = self.param
        if self.family is Family.CYCLIC:
            return [(("y", n),)]
        if self.family is Family.DIHEDRAL:
            return [(("x", 2),), (("y", n),), (("x", 1), ("y", 1), ("x", 1), ("y", 1))]
        if self.family is Family.DICYCLIC:
            return [
                (("y", 2 * n),),
                (("x", 2), ("y", n)),
                (("y", 1), ("x", 1), ("y", 1), ("x", 3)),
            ]
        return [(("x", 2),), (("y", 2 * n),), (("x", 1), ("y", 1), ("x", 1), ("y", n + 1))]

    def word_of(self, g: GroupElement) -> Word:
        word: list[tuple[str, int]] = []
        if g.flip:
            word.append(("x", 1))
        if g.power:
            word.append(("y", g.power))
        return tuple(word)


def build_group(family: Family | str, param: int) -> FiniteGroup:
    if isinstance(family, str):
        family = Family.from_str(family)
    if param < 1:
        raise InvalidGroupParameter(f"Group parameter must be positive, got {param}")
    if family is Family.U and param % 2:
        logger.debug("U(%d) is isomorphic to Dihedral(%d)", param, param)
        return FiniteGroup(Family.DIHEDRAL, param, alias=f"U({param})")
    return FiniteGroup(family, param)


def verify_presentation(group: FiniteGroup) -> bool:
    return all(group.evaluate(w) == group.identity for w in group.relators())


@functools.lru_cache(maxsize=None)
def conjugacy_classes(group: FiniteGroup) -> tuple[ConjClass, ...]:
    """Orbits under conjugation, ordered identity first, then by size and least member."""
    seen: set[GroupElement] = set()
    classes = []
    for g in group.elements:
        if g in seen:
            continue
        orbit = sorted(
            {group.multiply(group.multiply(h, g), group.inverse(h)) for h in group.elements}
        )
        seen.update(orbit)
        classes.append(ConjClass(orbit[0], tuple(orbit)))
    classes.sort(key=lambda c: (c.representative != group.identity, c.size, c.representative))
    logger.debug("%s has %d conjugacy classes", group.name, len(classes))
    return tuple(classes)


def class_index(group: FiniteGroup, g: GroupElement) -> int:
    return next(i for i, c in enumerate(conjugacy_classes(group)) if g in c.members)


def multiplication_table(group: FiniteGroup) -> list[list[GroupElement]]:
    return [[group.multiply(a, b) for b in group.elements] for a in group.elements]


def element_order(group: FiniteGroup, g: GroupElement) -> int:
    current, k = g, 1
    while current != group.identity:
        current = group.multiply(current, g)
        k += 1
    return k


def is_abelian(group: FiniteGroup, elements: Optional[Sequence[GroupElement]] = None) -> bool:
    pool = elements if elements is not None else group.elements
    return all(group.multiply(a, b) == group.multiply(b, a) for a in pool for b in pool)
