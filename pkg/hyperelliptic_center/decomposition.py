"""Decomposition of Omega_R/dR into irreducibles, and the closed-form multiplicities."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .automorphisms import AutProfile, classify_group, element_map
from .central_rep import (
    CentralRep,
    TraceCheck,
    VanishingCheck,
    flip_sum,
    general_flip_trace,
    rep_from_profile,
    trace_closed_form,
    twist_trace_vanishing,
    twist_u_trace,
)
from .curve import HyperellipticCurve
from .field import CycloElem
from .groups import (
    CharacterTable,
    Family,
    NotACharacterError,
    character_table,
    conjugacy_classes,
    multiplicity_inner_product,
)
from .linalg import InternalConsistencyError, Matrix, matmul, matpow, solve, submatrix, trace

logger = logging.getLogger(__name__)

MATCH = "match"
MISMATCH = "mismatch"
NOT_APPLICABLE = "not-applicable"


class MultiplicityError(InternalConsistencyError):
    def __init__(self, message: str, diagnostics: Optional[dict] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


@dataclass(frozen=True)
class MultiplicityVector:
    labels: tuple[str, ...]
    dims: tuple[int, ...]
    counts: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(d * m for d, m in zip(self.dims, self.counts))

    def __getitem__(self, label: str) -> int:
        return self.counts[self.labels.index(label)]

    def two_dim_total(self) -> int:
        return sum(m for d, m in zip(self.dims, self.counts) if d == 2)

    def as_dict(self) -> dict:
        return {label: m for label, m in zip(self.labels, self.counts)}


@dataclass(frozen=True)
class FormulaCheck:
    name: str
    irrep: Optional[str]
    value: Optional[Fraction | CycloElem]
    computed: Optional[int]
    note: str = ""

    @property
    def status(self) -> str:
        if self.value is None or self.computed is None:
            return NOT_APPLICABLE
        return MATCH if self.value == self.computed else MISMATCH

    def as_dict(self) -> dict:
        value = self.value
        if isinstance(value, CycloElem):
            value = value.to_fraction() if value.is_rational() else value.label()
        return {
            "name": self.name,
            "irrep": self.irrep,
            "value": None if value is None else str(value),
            "computed": self.computed,
            "status": self.status,
            "note": self.note,
        }


@dataclass(frozen=True)
class ClosedFormReport:
    checks: tuple[FormulaCheck, ...]
    traces: tuple[TraceCheck, ...]
    # Irrep-label pairs (U_1, U_2) consistent with the Xi values, per exponent variant.
    xi_matchings: dict = field(default_factory=dict, hash=False)

    def as_dict(self) -> dict:
        return {
            "checks": [c.as_dict() for c in self.checks],
            "traces": [t.as_dict() for t in self.traces],
            "xi_matchings": self.xi_matchings,
        }


@dataclass(frozen=True)
class Witness:
    indices: tuple[int, ...]
    invariant: bool
    irrep: Optional[str]
    classical: Optional[bool] = None
    # Images of the basis vector for a fixed line.
    eigenvalues: tuple = ()

    def as_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "invariant": self.invariant,
            "irrep": self.irrep,
            "classical": self.classical,
            "eigenvalues": [e.as_dict() for e in self.eigenvalues],
        }


@dataclass(frozen=True)
class DecompositionReport:
    curve: HyperellipticCurve
    profile: AutProfile
    table: CharacterTable
    rep: CentralRep
    full: MultiplicityVector
    u_part: MultiplicityVector
    omega0: str
    solved: tuple[Fraction, ...]
    closed_forms: ClosedFormReport
    witnesses: tuple[Witness, ...]
    vanishing: tuple[VanishingCheck, ...]

    @property
    def paths_agree(self) -> bool:
        return tuple(self.solved) == tuple(Fraction(m) for m in self.u_part.counts)

    @property
    def witnesses_complete(self) -> bool:
        found = sum(1 for w in self.witnesses if len(w.indices) == 2 and w.irrep is not None)
        return found == self.u_part.two_dim_total()

    @property
    def omega0_trivial(self) -> bool:
        return all(v == 1 for v in self.rep.omega0_character)

    def as_dict(self) -> dict:
        return {
            "curve": self.curve.as_dict(),
            "profile": self.profile.as_dict(),
            "irreps": [
                {"label": r.label, "dim": r.dim, "aliases": list(r.aliases)}
                for r in self.table.irreps
            ],
            "multiplicities": self.full.as_dict(),
            "u_multiplicities": self.u_part.as_dict(),
            "one_dim": [m for d, m in zip(self.u_part.dims, self.u_part.counts) if d == 1],
            "two_dim": [m for d, m in zip(self.u_part.dims, self.u_part.counts) if d == 2],
            "omega0": self.omega0,
            "omega0_trivial": self.omega0_trivial,
            "solved": [str(m) for m in self.solved],
            "paths_agree": self.paths_agree,
            "closed_forms": self.closed_forms.as_dict(),
            "witnesses": [w.as_dict() for w in self.witnesses],
            "witnesses_complete": self.witnesses_complete,
            "twist_trace_vanishing": [v.as_dict() for v in self.vanishing],
        }


def _multiplicities(table: CharacterTable, chi: Sequence[CycloElem]) -> MultiplicityVector:
    try:
        counts = multiplicity_inner_product(table, chi)
    except NotACharacterError as e:
        raise MultiplicityError(str(e), e.diagnostics) from e
    return MultiplicityVector(
        tuple(r.label for r in table.irreps),
        tuple(r.dim for r in table.irreps),
        tuple(int(m) for m in counts),
    )


def solve_multiplicities(
    table: CharacterTable, chi: Sequence[CycloElem | int]
) -> tuple[Fraction, ...]:
    """Solve sum_pi m_pi chi_pi(C) = chi(C) over all classes by elimination."""
    k = len(table.classes)
    system: Matrix = tuple(tuple(table.values[p][c] for p in range(k)) for c in range(k))
    rhs = [v if isinstance(v, CycloElem) else CycloElem.rational(v) for v in chi]
    solution = solve(system, rhs)
    if not all(m.is_rational() for m in solution):
        raise MultiplicityError(
            "Linear-system multiplicities are irrational",
            {"solution": [m.label() for m in solution]},
        )
    return tuple(m.to_fraction() for m in solution)


def closed_form_u_character(
    curve: HyperellipticCurve, profile: AutProfile
) -> tuple[CycloElem, ...]:
    """u-block traces per class from the closed forms, without any action matrix."""
    xi = profile.generators["y"].xi
    values = []
    for c in conjugacy_classes(profile.group):
        g = c.representative
        if not g.flip:
            values.append(twist_u_trace(curve, xi, g.power))
        else:
            values.append(general_flip_trace(curve, element_map(curve, profile, g)))
    return tuple(values)


def _sum_variants(curve: HyperellipticCurve, profile: AutProfile) -> dict[str, Optional[CycloElem]]:
    phi = profile.flip.map
    return {"full": flip_sum(curve, phi), "halved": flip_sum(curve, phi, halved=True)}


def closed_form_multiplicities(
    curve: HyperellipticCurve, profile: AutProfile, u_part: Optional[MultiplicityVector] = None
) -> ClosedFormReport:
    """Evaluate the closed-form multiplicities that apply to this automorphism group."""
    if u_part is None:
        table = character_table(profile.group)
        u_part = _multiplicities(table, rep_from_profile(curve, profile).u_character)
    n, k, l = curve.n, profile.k, profile.l  # noqa: E741
    group = profile.group
    checks: list[FormulaCheck] = []
    matchings: dict[str, list] = {}

    if group.family is Family.CYCLIC:
        for r in range(2 * k):
            if r % 2:
                checks.append(FormulaCheck(f"U_{r}", f"chi_{r}", Fraction(l), u_part[f"chi_{r}"]))
        checks.append(
            FormulaCheck(
                "U_0",
                "chi_0",
                Fraction(l + 1),
                u_part["chi_0"] + 1,
                "compared with chi_0 on all of Omega/dR, w_0 included",
            )
        )
    elif group.family is Family.DIHEDRAL and group.alias is None:
        for h in range(1, k):
            value = Fraction((1 - (-1) ** h) * n, k)
            checks.append(FormulaCheck(f"V_{h}", f"chi_{h}", value, u_part[f"chi_{h}"]))
        if k % 2 == 0:
            checks.append(FormulaCheck("U_3", "rho_3", Fraction(0), u_part["rho_3"]))
            checks.append(FormulaCheck("U_4", "rho_4", Fraction(0), u_part["rho_4"]))
        else:
            for variant, total in _sum_variants(curve, profile).items():
                for i, label in ((1, "rho_3"), (2, "rho_4")):
                    value = None
                    if total is not None:
                        value = (
                            Fraction((1 - (-1) ** k) * n, 2 * k)
                            + Fraction((-1) ** i * (1 - (-1) ** n), 4)
                            + total * Fraction((-1) ** i, 2)
                        )
                    note = "" if value is not None else "needs an odd power of c"
                    checks.append(
                        FormulaCheck(f"Upsilon_{i}[{variant}]", label, value, u_part[label], note)
                    )
            checks.append(
                FormulaCheck(
                    "Upsilon(eps, nu)",
                    None,
                    None,
                    None,
                    "the eps_i, nu_i variant uses symbols that are never defined",
                )
            )
        if k == n and n % 2:
            one_dims = [lab for lab, d in zip(u_part.labels, u_part.dims) if d == 1]
            for variant, total in _sum_variants(curve, profile).items():
                if total is None:
                    checks.append(
                        FormulaCheck(f"Xi[{variant}]", None, None, None, "needs an odd power of c")
                    )
                    continue
                xi1 = Fraction(1, 2) - total * Fraction(1, 2)
                xi2 = Fraction(3, 2) + total * Fraction(1, 2)
                checks.append(FormulaCheck(f"Xi_1[{variant}]", None, xi1, None, _value_note(xi1)))
                checks.append(FormulaCheck(f"Xi_2[{variant}]", None, xi2, None, _value_note(xi2)))
                matchings[variant] = [
                    [a, b]
                    for a in one_dims
                    for b in one_dims
                    if a != b and xi1 == u_part[a] and xi2 == u_part[b]
                ]
    else:
        checks.append(
            FormulaCheck(
                group.name,
                None,
                None,
                None,
                "no closed form is stated for this group; multiplicities come from orthogonality",
            )
        )

    traces = tuple(trace_closed_form(curve, profile))
    logger.debug("Closed forms: %s", [(c.name, c.status) for c in checks])
    return ClosedFormReport(tuple(checks), traces, matchings)


def _value_note(value: CycloElem) -> str:
    if not value.is_rational():
        return f"irrational value {value}"
    return "" if value.to_fraction().denominator == 1 else "non-integer value"


def two_dim_witnesses(curve: HyperellipticCurve, profile: AutProfile) -> list[Witness]:
    """Pairs span{w_i, w_(n+3-i)} with i < n+3-i <= 2n, and the fixed line when n is odd."""
    if "x" not in profile.generators:
        return []
    rep = rep_from_profile(curve, profile)
    table = character_table(profile.group)
    x, y = rep.generators["x"], rep.generators["y"]
    n = curve.n
    witnesses = []
    for i in range(1, n + 3):
        j = n + 3 - i
        if not i < j <= 2 * n:
            continue
        invariant = all(_keeps(m, (i, j)) for m in (x, y))
        irrep = None
        classical = None
        if invariant:
            xr, yr = submatrix(x, [i, j]), submatrix(y, [i, j])
            irrep = _irreducible_label(table, xr, yr)
            a = x[j][i]
            classical = (
                a * x[i][j] == 1
                and not yr[0][1]
                and not yr[1][0]
                and yr[0][0] * yr[1][1] == 1
            )
        witnesses.append(Witness((i, j), invariant, irrep, classical))
    if n % 2:
        m = (n + 3) // 2
        invariant = all(_keeps(g, (m,)) for g in (x, y))
        witnesses.append(Witness((m,), invariant, None, None, (x[m][m], y[m][m])))
    return witnesses


def _keeps(matrix: Matrix, indices: tuple[int, ...]) -> bool:
    return all(not matrix[r][c] for c in indices for r in range(len(matrix)) if r not in indices)


def _irreducible_label(table: CharacterTable, xr: Matrix, yr: Matrix) -> Optional[str]:
    chi = []
    for c in table.classes:
        g = c.representative
        m = matpow(yr, g.power)
        if g.flip:
            m = matmul(xr, m)
        chi.append(trace(m))
    try:
        counts = multiplicity_inner_product(table, chi)
    except NotACharacterError:
        return None
    if sorted(counts) != [0] * (len(counts) - 1) + [1]:
        return None
    return table.irreps[counts.index(1)].label


def decompose(curve: HyperellipticCurve) -> DecompositionReport:
    profile = classify_group(curve)
    table = character_table(profile.group)
    rep = rep_from_profile(curve, profile)
    full = _multiplicities(table, rep.character)
    u_part = _multiplicities(table, rep.u_character)
    if full.dimension != curve.rank + 1 or u_part.dimension != curve.rank:
        raise MultiplicityError(
            f"Multiplicities account for {full.dimension} dimensions, expected {curve.rank + 1}",
            {"full": full.as_dict(), "u_part": u_part.as_dict()},
        )
    line = _multiplicities(table, rep.omega0_character)
    omega0 = line.labels[line.counts.index(1)]
    solved = solve_multiplicities(table, closed_form_u_character(curve, profile))
    report = DecompositionReport(
        curve,
        profile,
        table,
        rep,
        full,
        u_part,
        omega0,
        solved,
        closed_form_multiplicities(curve, profile, u_part),
        tuple(two_dim_witnesses(curve, profile)),
        tuple(twist_trace_vanishing(curve, profile)),
    )
    if not report.paths_agree:
        logger.warning(
            "Orthogonality %s and linear-system %s multiplicities disagree",
            u_part.as_dict(),
            [str(m) for m in solved],
        )
    return report
