"""Text rendering of the JSON reports; nothing here recomputes anything."""

from typing import Optional

import mpmath
import pandas as pd

from . import config
from .field import CycloElem, approx_complex, cosine_label


def _elem(obj: dict) -> CycloElem:
    return CycloElem.from_dict(obj)


def fmt(obj: Optional[dict]) -> str:
    if obj is None:
        return "-"
    value = _elem(obj)
    return cosine_label(value) or value.label()


def approx(obj: dict, digits: int) -> str:
    re_part, im_part = approx_complex(_elem(obj), digits)
    if not im_part:
        return mpmath.nstr(re_part, digits)
    return f"{mpmath.nstr(re_part, digits)} + {mpmath.nstr(im_part, digits)}i"


def table_frame(document: dict) -> pd.DataFrame:
    """The tabular part of a report; also what --outfile writes."""
    command = document["command"]
    if command == "aut":
        return pd.DataFrame(
            [
                {"element": e["element"], "kind": e["map"]["kind"], "map": e["map"]["label"]}
                for e in document["elements"]
            ]
        )
    if command == "classes":
        return pd.DataFrame(
            [
                {
                    "representative": c["representative"],
                    "size": c["size"],
                    "members": ", ".join(c["members"]),
                }
                for c in document["classes"]
            ]
        )
    if command == "chartab":
        columns = [c["representative"] for c in document["classes"]]
        rows = []
        for irrep, values in zip(document["irreps"], document["display"]):
            row = {"irrep": irrep["label"], "dim": irrep["dim"]}
            row.update(dict(zip(columns, values)))
            rows.append(row)
        return pd.DataFrame(rows)
    if command == "action":
        rows = []
        for name, gen in document["generators"].items():
            rows.append(
                {
                    "generator": name,
                    "kind": gen["map"]["kind"],
                    "trace": fmt(gen["trace"]),
                    "u_trace": fmt(gen["u_trace"]),
                }
            )
        return pd.DataFrame(rows)
    if command == "decompose":
        return _decomposition_frame(document)
    if command == "pq-table":
        rows = []
        for kind in ("p", "q"):
            table = document[kind]
            for offset, row in enumerate(table["rows"]):
                entry = {"table": table["kind"], "index": table["first"] + offset}
                entry.update({f"w_{i + 1}": fmt(v) for i, v in enumerate(row)})
                rows.append(entry)
        return pd.DataFrame(rows)
    if command == "selftest":
        return pd.DataFrame(
            [
                {"suite": s["name"], "passed": s["passed"], "failed": s["failed"]}
                for s in document["suites"]
            ]
        )
    raise ValueError(f"Unknown report: {command}")


def _decomposition_frame(document: dict) -> pd.DataFrame:
    closed: dict[str, list[str]] = {}
    flags: dict[str, list[str]] = {}
    for check in document["closed_forms"]["checks"]:
        if check["irrep"] is None:
            continue
        closed.setdefault(check["irrep"], []).append(f"{check['name']}={check['value']}")
        flags.setdefault(check["irrep"], []).append(check["status"])
    rows = []
    for irrep in document["irreps"]:
        label = irrep["label"]
        rows.append(
            {
                "irrep": label,
                "dim": irrep["dim"],
                "multiplicity": document["u_multiplicities"][label],
                "with_w0": document["multiplicities"][label],
                "closed_form": "; ".join(closed.get(label, [])) or "-",
                "status": ", ".join(flags.get(label, [])) or "-",
            }
        )
    return pd.DataFrame(rows)


def _matrix_text(matrix: list[list[dict]]) -> str:
    frame = pd.DataFrame([[fmt(v) for v in row] for row in matrix])
    return frame.to_string(index=False, header=False)


def render_text(document: dict) -> str:
    command = document["command"]
    lines: list[str] = []
    if "curve" in document:
        curve = document["curve"]
        lines.append(f"p(t) = {curve['p']}  (n = {curve['n']}, Q(zeta_{curve['field_order']}))")
    if command == "aut":
        profile = document["profile"]
        name = profile["group"] + (f" = {profile['group_alias']}" if profile["group_alias"] else "")
        lines.append(f"Aut: {name}, order {profile['order']}")
        lines.append(f"k = {profile['k']}, l = {profile['l']}")
    elif command in ("classes", "chartab"):
        alias = f" (as {document['alias']})" if document.get("alias") else ""
        lines.append(f"{document['group']}{alias}, order {document['order']}")
    elif command == "action":
        digits = config.load_display_digits()
        lines.append(f"Group {document['group']}")
        for name, gen in document["generators"].items():
            lines.append(f"{name}: {gen['map']['label']}")
            if len(gen["matrix"]) <= config.TEXT_MATRIX_MAX_SIZE:
                lines.append(_matrix_text(gen["matrix"]))
            lines.append(f"trace {fmt(gen['trace'])} ~ {approx(gen['trace'], digits)}")
    elif command == "decompose":
        profile = document["profile"]
        lines.append(f"Aut: {profile['group']}, order {profile['order']}")
        lines.append(f"w_0 transforms by {document['omega0']}")
        flags = {
            "paths agree": document["paths_agree"],
            "witnesses complete": document["witnesses_complete"],
            "w_0 trivial": document["omega0_trivial"],
        }
        lines.append(", ".join(f"{k}: {'yes' if v else 'no'}" for k, v in flags.items()))
    elif command == "pq-table":
        lines.append(f"curve {document['curve_digest']}, m_max = {document['m_max']}")
    elif command == "selftest":
        lines.append(f"passed {document['passed']}, failed {document['failed']}")
    lines.append(table_frame(document).to_string(index=False))
    return "\n".join(lines)
