"""Golden predicates transcribed from the classification theorem's six
cases, parameterized by (p, q, l), plus the report comparator.

Ambiguous rows (the bare type-B clause and the so*(2l) parity labeling)
carry several candidate readings; a form passes when at least one reading
matches every parity row.  Rows with empty Phi (point orbits) and rows
failing finite type (outside the theorem's hypothesis) are excluded from
parity but still reported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .realform import SatakeDiagram


@dataclass(frozen=True)
class GoldenRow:
    form: str
    source_case: int | None
    predicates: tuple          # candidate readings, each a predicate doc
    ambiguous: bool


def _eval_predicate(doc: dict, params: dict, rank: int, phi: frozenset) -> bool:
    kind = doc["kind"]
    if kind == "always":
        return True
    if kind == "never":
        return False
    if kind == "su_ends":
        return not (phi & {params["p"], params["q"]})
    if kind == "cii_a":
        p, l = params["p"], params["p"] + params["q"]
        first = set(range(1, 2 * p - 1, 2)) | set(range(2 * p + 1, l + 1))
        second = set(range(1, 2 * p + 1, 2))
        return phi <= first or phi <= second
    if kind == "so_star_ends":
        l = params["l"]
        return not (phi & {l - 1, l})
    if kind == "eiii":
        return phi <= {3, 4, 5}
    if kind == "fii":
        return phi <= {1, 2}
    raise ValueError(f"unknown predicate kind {kind!r}")


# label -> (source case, readings, ambiguous)
_RULES = {
    "complex": (1, ({"kind": "always"},), False),
    "compact": (1, ({"kind": "always"},), False),
    "AII": (1, ({"kind": "always"},), False),
    "AIIIb": (1, ({"kind": "always"},), False),
    "BI": (1, ({"kind": "always"}, {"kind": "never"}), True),
    "BII": (1, ({"kind": "always"}, {"kind": "never"}), True),
    "CIIb": (1, ({"kind": "always"},), False),
    "DI": (1, ({"kind": "always"},), False),
    "DII": (1, ({"kind": "always"},), False),
    "DIIIa": (4, ({"kind": "so_star_ends"}, {"kind": "always"}), True),
    "DIIIb": (1, ({"kind": "always"}, {"kind": "so_star_ends"}), True),
    "EII": (1, ({"kind": "always"},), False),
    "EIV": (1, ({"kind": "always"},), False),
    "EVI": (1, ({"kind": "always"},), False),
    "EVII": (1, ({"kind": "always"},), False),
    "EIX": (1, ({"kind": "always"},), False),
    "AIIIa": (2, ({"kind": "su_ends"},), False),
    "AIV": (2, ({"kind": "su_ends"},), False),
    "CIIa": (3, ({"kind": "cii_a"},), False),
    "EIII": (5, ({"kind": "eiii"},), False),
    "FII": (6, ({"kind": "fii"},), False),
    # split forms absent from every clause of the theorem
    "AI": (None, ({"kind": "never"},), False),
    "CI": (None, ({"kind": "never"},), False),
    "EI": (None, ({"kind": "never"},), False),
    "EV": (None, ({"kind": "never"},), False),
    "EVIII": (None, ({"kind": "never"},), False),
    "FI": (None, ({"kind": "never"},), False),
    "GI": (None, ({"kind": "never"},), False),
}


def golden_row(diag: SatakeDiagram) -> GoldenRow:
    case, preds, amb = _RULES[diag.label]
    return GoldenRow(diag.name, case, preds, amb)


def golden_table_doc(entries) -> dict:
    rows = []
    for e in entries:
        case, preds, amb = _RULES[e.label]
        rows.append({"form": e.name, "label": e.label,
                     "params": dict(sorted(e.params.items())),
                     "source_case": case, "ambiguous": amb,
                     "predicates": list(preds)})
    return {"version": 1, "rows": rows}


def load_golden(path: str) -> dict:
    with open(path, "r") as fh:
        doc = json.load(fh)
    return {row["form"]: row for row in doc["rows"]}


def expected_values(row_doc: dict, diag: SatakeDiagram, phis) -> list[list[bool]]:
    """Per reading, the expected verdict for each phi."""
    out = []
    for pred in row_doc["predicates"]:
        out.append([_eval_predicate(pred, diag.params, diag.rank, frozenset(p))
                    for p in phis])
    return out


def compare_golden(rows: list[dict], golden: dict) -> dict:
    """Diff a report against golden predicates.

    rows: report rows (dicts with form, phi, finite_type, verdict).
    Returns {"mismatches": [...], "parity_rows": n, "forms": {...}} where a
    form passes when one reading agrees on all its parity rows."""
    by_form: dict[str, list[dict]] = {}
    for r in rows:
        by_form.setdefault(r["form"], []).append(r)
    mismatches = []
    summary = {}
    parity_total = 0
    for form, frows in sorted(by_form.items()):
        if form not in golden:
            raise KeyError(f"golden table does not cover form {form!r}")
        doc = golden[form]
        parity = [r for r in frows if r["finite_type"] and r["phi"]]
        parity_total += len(parity)
        readings = []
        for pred in doc["predicates"]:
            vals = [_eval_predicate(pred, doc["params"], 0,
                                    frozenset(r["phi"])) for r in parity]
            readings.append(vals)
        best = None
        for k, vals in enumerate(readings):
            if all(v == r["verdict"] for v, r in zip(vals, parity)):
                best = k
                break
        display = best if best is not None else 0
        parity_ids = {id(r) for r in parity}
        for v, r in zip(readings[display], parity):
            r["expected"] = v
            r["match"] = (v == r["verdict"])
            if not r["match"]:
                mismatches.append({"form": form, "phi": r["phi"],
                                   "verdict": r["verdict"], "expected": v})
        for r in frows:
            if id(r) not in parity_ids:
                r["expected"] = None
                r["match"] = None
        summary[form] = {"pass": best is not None,
                         "reading": best,
                         "ambiguous": doc["ambiguous"],
                         "parity_rows": len(parity)}
    return {"mismatches": mismatches, "parity_rows": parity_total,
            "forms": summary}
