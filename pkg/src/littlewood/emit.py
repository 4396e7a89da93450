"""Deterministic JSON / CSV / LaTeX rendering of results, and JSON parsing back."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .bott import Defined, Undefined
from .complexes import Acyclic, At, ComplexDescriptor, Term
from .modification import Finite, Infinite, describe
from .partitions import Partition
from .report import Report
from .symfunc import SymFunc

FORMATS = ("json", "csv", "latex")


class UnsupportedFormat(ValueError):
    pass


def rational(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def to_doc(value):
    """Plain JSON-ready structure for any result kind."""
    if isinstance(value, Defined):
        return {"defined": True, "lambda_n": list(value.result), "delta": value.delta}
    if isinstance(value, Undefined):
        return {"defined": False}
    if isinstance(value, (Finite, Infinite)):
        return describe(value)
    if isinstance(value, SymFunc):
        return {
            "basis": value.basis,
            "terms": [{"mu": list(lam), "coeff": rational(c)} for lam, c in value.sorted_terms()],
        }
    if isinstance(value, ComplexDescriptor):
        if isinstance(value.cohomology, Acyclic):
            coh = {"acyclic": True}
        else:
            coh = {"acyclic": False, "degree": value.cohomology.degree, "specht": list(value.cohomology.specht)}
        return {
            "lambda": list(value.lam),
            "n": value.n,
            "degrees": [
                {"degree": j, "terms": [{"mu": list(t.mu), "mult": t.mult, "dim": t.dim} for t in terms]}
                for j, terms in enumerate(value.degrees)
            ],
            "cohomology": coh,
        }
    if isinstance(value, Report):
        return value.to_doc()
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return rational(value)
    raise TypeError(f"no document form for {type(value).__name__}")


def from_doc(doc):
    """Inverse of :func:`to_doc`; the kind is recognized from the keys."""
    if isinstance(doc, (int, bool)):
        return doc
    if isinstance(doc, str):
        return parse_rational(doc)
    if "defined" in doc:
        return Defined(Partition(doc["lambda_n"]), doc["delta"]) if doc["defined"] else Undefined()
    if "finite" in doc:
        if not doc["finite"]:
            return Infinite()
        alpha, beta = doc["tau"]
        return Finite(doc["degree"], Partition(alpha), Partition(beta))
    if "basis" in doc:
        return SymFunc(doc["basis"], {tuple(t["mu"]): parse_rational(t["coeff"]) for t in doc["terms"]})
    if "suite" in doc:
        return Report.from_doc(doc)
    if "degrees" in doc:
        coh = doc["cohomology"]
        cohomology = Acyclic() if coh["acyclic"] else At(coh["degree"], Partition(coh["specht"]))
        degrees = tuple(
            tuple(Term(Partition(t["mu"]), t["mult"], t["dim"]) for t in row["terms"]) for row in doc["degrees"]
        )
        return ComplexDescriptor(Partition(doc["lambda"]), doc["n"], degrees, cohomology)
    raise ValueError(f"unrecognized document: {doc!r}")


def dumps(value) -> str:
    return json.dumps(to_doc(value), separators=(",", ":"))


def loads(text: str):
    return from_doc(json.loads(text))


def partition_text(lam) -> str:
    return ",".join(map(str, lam))


def latex_partition(lam) -> str:
    return partition_text(lam) if lam else r"\varnothing"


def latex_symfunc(f: SymFunc) -> str:
    r"""Render like ``s_{2} - 2 s_{1}``; fractions use ``\frac``, the empty shape ``\varnothing``."""
    pieces = []
    for lam, c in f.sorted_terms():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if a == 1:
            coeff = ""
        elif a.denominator == 1:
            coeff = f"{a.numerator} "
        else:
            coeff = rf"\frac{{{a.numerator}}}{{{a.denominator}}} "
        pieces.append((sign, f"{coeff}{f.basis}_{{{latex_partition(lam)}}}"))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _complex_rows(c: ComplexDescriptor):
    for j, terms in enumerate(c.degrees):
        for t in terms:
            yield j, t


def emit(value, fmt: str) -> str:
    """Render ``value`` in ``fmt``; tables accept csv and latex, scalars json only."""
    if fmt not in FORMATS:
        raise UnsupportedFormat(f"unknown format {fmt!r}")
    if fmt == "json":
        return dumps(value)
    if isinstance(value, ComplexDescriptor):
        if fmt == "csv":
            return _csv([("degree", "mu", "mult", "dim")] + [(j, partition_text(t.mu), t.mult, t.dim) for j, t in _complex_rows(value)])
        lines = [r"\begin{tabular}{rlrr}", r"degree & $\mu$ & mult & dim \\", r"\hline"]
        lines += [rf"{j} & ${latex_partition(t.mu)}$ & {t.mult} & {t.dim} \\" for j, t in _complex_rows(value)]
        lines.append(r"\end{tabular}")
        return "\n".join(lines)
    if isinstance(value, SymFunc):
        if fmt == "csv":
            return _csv([("mu", "coeff")] + [(partition_text(lam), rational(c)) for lam, c in value.sorted_terms()])
        return latex_symfunc(value)
    raise UnsupportedFormat(f"{type(value).__name__} results support json only")
