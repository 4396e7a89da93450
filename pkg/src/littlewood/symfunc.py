"""Exact ring of symmetric functions over the rationals.

Elements are sparse maps from partitions to ``Fraction`` tagged with one of
the bases ``m, e, h, p, s``. Every conversion goes through the power-sum
basis; products are returned in the Schur basis.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from sympy.functions.combinatorial.numbers import mobius

from . import cache
from .partitions import EMPTY, Partition, mn_strips, partitions_of, union, z_value

BASES = ("m", "e", "h", "p", "s")

Scalar = Union[int, Fraction]


class SymFunc:
    """A symmetric function written in a single basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        clean = {}
        for lam, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[Partition(lam)] = c
        self.basis = basis
        self.terms = clean

    @classmethod
    def basis_element(cls, basis: str, parts=(), coeff: Scalar = 1) -> "SymFunc":
        return cls(basis, {Partition(parts): coeff})

    @classmethod
    def scalar(cls, c: Scalar, basis: str = "s") -> "SymFunc":
        return cls(basis, {EMPTY: c})

    def to(self, basis: str) -> "SymFunc":
        return convert(self, basis)

    def coeff(self, parts) -> Fraction:
        return self.terms.get(Partition(parts), Fraction(0))

    def degree(self) -> int:
        """Largest degree present; -1 for zero."""
        return max((lam.size for lam in self.terms), default=-1)

    def homogeneous(self, d: int) -> "SymFunc":
        return SymFunc(self.basis, {lam: c for lam, c in self.terms.items() if lam.size == d})

    def truncate(self, d: int) -> "SymFunc":
        return SymFunc(self.basis, {lam: c for lam, c in self.terms.items() if lam.size <= d})

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return convert(other, self.basis)
        if isinstance(other, (int, Fraction)):
            return SymFunc.scalar(other, self.basis)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, 0) + c
        return SymFunc(self.basis, terms)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.basis, {lam: c * other for lam, c in self.terms.items()})
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFunc.scalar(other, "p")
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return _to_p_terms(self) == _to_p_terms(other)

    __hash__ = None

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        """Terms by decreasing degree, then reverse-lexicographically."""
        return sorted(self.terms.items(), key=lambda t: (-t[0].size, tuple(-x for x in t[0])))

    def __repr__(self):
        if not self.terms:
            return f"SymFunc({self.basis!r}, 0)"
        body = " + ".join(f"{c}*{self.basis}[{','.join(map(str, lam))}]" for lam, c in self.sorted_terms())
        return f"SymFunc({body})"


def s(*parts) -> SymFunc:
    return SymFunc.basis_element("s", parts)


def h(*parts) -> SymFunc:
    return SymFunc.basis_element("h", parts)


def e(*parts) -> SymFunc:
    return SymFunc.basis_element("e", parts)


def p(*parts) -> SymFunc:
    return SymFunc.basis_element("p", parts)


def m(*parts) -> SymFunc:
    return SymFunc.basis_element("m", parts)


@dataclass(frozen=True)
class TruncatedSeries:
    """A formal sum of homogeneous components, known through degree ``bound``."""

    bound: int
    components: tuple

    def component(self, d: int) -> SymFunc:
        if d > self.bound:
            raise ValueError(f"series is only known through degree {self.bound}, asked for {d}")
        return self.components[d]

    def total(self) -> SymFunc:
        out = SymFunc("p")
        for comp in self.components:
            out = out + comp
        return out


# --- characters -------------------------------------------------------------


@lru_cache(maxsize=None)
def _chi(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    rest = Partition(rho[1:])
    return sum((-1) ** ht * _chi(sigma, rest) for sigma, ht in mn_strips(lam, rho[0]))


def mn_character(lam, rho) -> int:
    """Irreducible character value ``chi^lam(rho)`` by the Murnaghan-Nakayama rule.

    Strips are removed for the cycles of ``rho`` from the largest down.
    """
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"|lambda| = {lam.size} but |rho| = {rho.size}")
    return _chi(lam, rho)


@lru_cache(maxsize=None)
def character_table(n: int) -> dict:
    """``{(lam, rho): chi^lam(rho)}`` for all partitions of ``n``."""
    name = f"chartable-{n}"
    stored = cache.load(name)
    if stored is not None:
        return {(Partition(a), Partition(b)): v for a, b, v in stored}
    shapes = list(partitions_of(n))
    table = {(lam, rho): _chi(lam, rho) for lam in shapes for rho in shapes}
    cache.store(name, [[list(a), list(b), v] for (a, b), v in table.items()])
    return table


# --- transition data --------------------------------------------------------


def _pmul(a: dict, b: dict, bound=None) -> dict:
    out = defaultdict(Fraction)
    for la, ca in a.items():
        for lb, cb in b.items():
            if bound is not None and la.size + lb.size > bound:
                continue
            out[union(la, lb)] += ca * cb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _one_row_p(kind: str, k: int) -> dict:
    # h_k = sum p_rho / z_rho, e_k the same with the sign of rho
    out = {}
    for rho in partitions_of(k):
        c = Fraction(1, z_value(rho))
        if kind == "e" and (k - len(rho)) % 2:
            c = -c
        out[rho] = c
    return out


@lru_cache(maxsize=None)
def _monomial_count(parts: tuple, bins: tuple) -> int:
    # ways to drop the parts into labelled bins filling each bin exactly
    if not parts:
        return int(all(b == 0 for b in bins))
    first, rest = parts[0], parts[1:]
    total = 0
    for i, cap in enumerate(bins):
        if cap >= first:
            new = list(bins)
            new[i] -= first
            total += _monomial_count(rest, tuple(sorted(new, reverse=True)))
    return total


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@lru_cache(maxsize=None)
def _transition(basis: str, n: int) -> tuple[dict, dict]:
    """For ``basis`` in ``h, e, m``: (basis -> p, p -> basis) in degree ``n``.

    Each is ``{lam: {rho: coeff}}``.
    """
    name = f"transition-{basis}-{n}"
    stored = cache.load(name)
    if stored is not None:
        return tuple(
            {Partition(k): {Partition(r): Fraction(c) for r, c in row} for k, row in part} for part in stored
        )
    shapes = list(partitions_of(n))
    if basis == "m":
        # p_rho = sum_mu R[rho][mu] m_mu
        forward = [[Fraction(_monomial_count(tuple(rho), tuple(mu))) for mu in shapes] for rho in shapes]
    else:
        rows = []
        for lam in shapes:
            acc = {EMPTY: Fraction(1)}
            for k in lam:
                acc = _pmul(acc, _one_row_p(basis, k))
            rows.append([acc.get(rho, Fraction(0)) for rho in shapes])
        forward = rows
    backward = _invert(forward)

    def as_dict(mat):
        return {shapes[i]: {shapes[j]: c for j, c in enumerate(row) if c} for i, row in enumerate(mat)}

    if basis == "m":
        to_p, from_p = as_dict(backward), as_dict(forward)
    else:
        to_p, from_p = as_dict(forward), as_dict(backward)
    cache.store(
        name,
        [[[list(k), [[list(r), str(c)] for r, c in row.items()]] for k, row in part.items()] for part in (to_p, from_p)],
    )
    return to_p, from_p


@lru_cache(maxsize=None)
def _p_expansion(basis: str, lam: Partition) -> dict:
    if basis == "p":
        return {lam: Fraction(1)}
    n = lam.size
    if basis == "s":
        table = character_table(n)
        return {
            rho: Fraction(table[lam, rho], z_value(rho))
            for rho in partitions_of(n)
            if table[lam, rho]
        }
    if basis in ("h", "e"):
        acc = {EMPTY: Fraction(1)}
        for k in lam:
            acc = _pmul(acc, _one_row_p(basis, k))
        return acc
    return _transition("m", n)[0][lam]


@lru_cache(maxsize=None)
def _p_in_basis(basis: str, rho: Partition) -> dict:
    if basis == "p":
        return {rho: Fraction(1)}
    n = rho.size
    if basis == "s":
        table = character_table(n)
        return {lam: Fraction(table[lam, rho]) for lam in partitions_of(n) if table[lam, rho]}
    return _transition(basis, n)[1][rho]


def _to_p_terms(f: SymFunc) -> dict:
    if f.basis == "p":
        return f.terms
    out = defaultdict(Fraction)
    for lam, c in f.terms.items():
        for rho, d in _p_expansion(f.basis, lam).items():
            out[rho] += c * d
    return {k: v for k, v in out.items() if v}


def convert(f: SymFunc, target: str) -> SymFunc:
    """Express ``f`` in ``target`` basis."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    p_terms = _to_p_terms(f)
    if target == "p":
        return SymFunc("p", p_terms)
    out = defaultdict(Fraction)
    for rho, c in p_terms.items():
        for lam, d in _p_in_basis(target, rho).items():
            out[lam] += c * d
    return SymFunc(target, out)


# --- products and pairings --------------------------------------------------


@lru_cache(maxsize=None)
def schur_product(lam: Partition, mu: Partition) -> dict:
    """Littlewood-Richardson expansion of ``s_lam * s_mu`` as ``{nu: c}``.

    Computed once through power sums and then served from the cache.
    """
    prod = _pmul(_p_expansion("s", lam), _p_expansion("s", mu))
    out = convert(SymFunc("p", prod), "s").terms
    for nu, c in out.items():
        assert c.denominator == 1, (lam, mu, nu, c)
    return {nu: int(c) for nu, c in out.items()}


def multiply(f: SymFunc, g: SymFunc, basis: str = "s") -> SymFunc:
    """Product of ``f`` and ``g``, in the Schur basis unless ``basis`` says otherwise.

    Schur products go through the cached Littlewood-Richardson table; any other
    target multiplies power sums and converts.
    """
    if basis != "s":
        return convert(SymFunc("p", _pmul(_to_p_terms(f), _to_p_terms(g))), basis)
    fs, gs = convert(f, "s"), convert(g, "s")
    out = defaultdict(Fraction)
    for lam, a in fs.terms.items():
        for mu, b in gs.terms.items():
            if not lam or not mu:
                out[union(lam, mu)] += a * b
                continue
            key = (lam, mu) if lam >= mu else (mu, lam)
            for nu, c in schur_product(*key).items():
                out[nu] += a * b * c
    return SymFunc("s", out)


def hall_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """The Hall inner product; Schur functions are orthonormal."""
    if f.basis == g.basis == "s":
        return sum((c * g.terms[lam] for lam, c in f.terms.items() if lam in g.terms), Fraction(0))
    if {f.basis, g.basis} == {"h", "m"}:
        return sum((c * g.terms[lam] for lam, c in f.terms.items() if lam in g.terms), Fraction(0))
    fp, gp = _to_p_terms(f), _to_p_terms(g)
    return sum((c * gp[rho] * z_value(rho) for rho, c in fp.items() if rho in gp), Fraction(0))


def _scale_indices(terms: dict, k: int, bound: int) -> dict:
    return {Partition(k * x for x in lam): c for lam, c in terms.items() if k * lam.size <= bound}


def plethysm(f: SymFunc, g, bound: int) -> SymFunc:
    """``f[g]`` through degree ``bound``, returned in the power-sum basis.

    ``g`` is a ``SymFunc`` or a ``TruncatedSeries`` known through at least
    ``bound``. Uses ``p_k[g] = g(p_j -> p_{kj})`` and multiplicativity.
    """
    if isinstance(g, TruncatedSeries):
        if g.bound < bound:
            raise ValueError(
                f"plethysm through degree {bound} needs the inner series through degree {bound}; "
                f"it is truncated at {g.bound}"
            )
        g = g.total()
    g_terms = {lam: c for lam, c in _to_p_terms(g).items() if lam.size <= bound}
    powers = {}
    out = defaultdict(Fraction)
    for rho, c in _to_p_terms(f).items():
        acc = {EMPTY: Fraction(1)}
        for k in rho:
            if k not in powers:
                powers[k] = _scale_indices(g_terms, k, bound)
            acc = _pmul(acc, powers[k], bound)
            if not acc:
                break
        for lam, d in acc.items():
            out[lam] += c * d
    return SymFunc("p", out)


def power_sum_at(k: int, rho) -> int:
    """``p_k`` at the eigenvalues of a permutation of cycle type ``rho``."""
    return sum(m for m in rho if k % m == 0)


def eval_at_cycle_type(f: SymFunc, rho) -> Fraction:
    """Evaluate ``f`` at the eigenvalues of a permutation matrix of cycle type ``rho``."""
    rho = Partition(rho)
    values = {}
    total = Fraction(0)
    for lam, c in _to_p_terms(f).items():
        term = c
        for k in lam:
            if k not in values:
                values[k] = power_sum_at(k, rho)
            term *= values[k]
        total += term
    return total


# --- series -----------------------------------------------------------------


def lyndon_component(deg: int) -> SymFunc:
    """Degree-``deg`` part of the free Lie algebra character, in power sums."""
    if deg < 1:
        return SymFunc("p")
    terms = {}
    for d in range(1, deg + 1):
        if deg % d == 0:
            mu_d = int(mobius(d))
            if mu_d:
                terms[Partition([d] * (deg // d))] = Fraction(mu_d, deg)
    return SymFunc("p", terms)


def lyndon_series(bound: int) -> TruncatedSeries:
    return TruncatedSeries(bound, tuple(lyndon_component(d) for d in range(bound + 1)))


def h_series(bound: int) -> TruncatedSeries:
    return TruncatedSeries(bound, tuple(SymFunc.basis_element("h", (d,) if d else ()) for d in range(bound + 1)))


def principal_value(f: SymFunc, n: int) -> Fraction:
    """Specialize every ``p_k`` to ``n`` (the dimension of a GL_n character)."""
    return sum((c * Fraction(n) ** len(lam) for lam, c in _to_p_terms(f).items()), Fraction(0))


def linear_combination(pairs: Iterable[tuple[Scalar, SymFunc]]) -> SymFunc:
    out = SymFunc("s")
    for c, f in pairs:
        out = out + f * c
    return out
