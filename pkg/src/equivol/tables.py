"""Deterministic table emission.

Identical inputs produce byte-identical files: rows are ordered
lexicographically in (k, weight vector), rationals render as ``p/q`` in
lowest terms (plain integer string when integral), and JSON is emitted
with sorted keys and a fixed separator convention.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction


def render_rational(x) -> str:
    if x is None:
        return ""
    x = Fraction(x)
    return str(x)  # Fraction renders as p/q in lowest terms, or a bare int


def render_weight(mu) -> str:
    if isinstance(mu, tuple):
        return "(" + ",".join(str(x) for x in mu) + ")"
    return str(mu)


def multiplicity_rows(s, items):
    """(k, mu, dim) rows in lexicographic (k, weight) order."""
    rows = sorted(items, key=lambda kv: (kv[0][0], s.weight_vec(kv[0][1])))
    return [
        {"k": k, "mu": render_weight(mu), "dim": dim}
        for (k, mu), dim in rows
    ]


def volume_rows(s, pairs):
    """Rows from (mu, VolumeEstimate) pairs; header mu,value,status,residue,period."""
    out = []
    for mu, est in sorted(pairs, key=lambda p: s.weight_vec(p[0])):
        fit = est.fit
        out.append(
            {
                "mu": render_weight(mu),
                "value": render_rational(est.value),
                "status": est.status,
                "residue": "" if fit is None else fit.residue,
                "period": "" if fit is None else fit.period,
            }
        )
    return out


def to_csv(rows, fieldnames=None) -> str:
    buf = io.StringIO()
    if fieldnames is None:
        fieldnames = list(rows[0]) if rows else []
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def to_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, default=_encode) + "\n"


def _encode(obj):
    if isinstance(obj, Fraction):
        return render_rational(obj)
    if isinstance(obj, frozenset):
        return sorted(obj)
    raise TypeError(f"not JSON-serializable: {obj!r}")


def emit(text: str, destination=None) -> str:
    """Write to a path, or return the text when destination is None."""
    if destination is not None:
        with open(destination, "w") as fh:
            fh.write(text)
    return text
