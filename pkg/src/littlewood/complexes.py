"""Littlewood complexes for symmetric groups, at the level of characters.

The cochain complex attached to ``lam`` has in degree ``j`` the terms
``M(lam, mu) (x) S^mu(k^n)`` for ``mu`` a partition of ``|lam| - j``. Its only
cohomology is the Specht module ``S^{lam[n]}`` in degree ``delta_n(lam)``, or
it is acyclic when the Bott rule is undefined.
"""

from __future__ import annotations

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .bott import Defined, bott
from .partitions import Partition, conjugate, partitions_of, partitions_up_to
from .report import Report, Violation
from .symfunc import (
    SymFunc,
    _pmul,
    _to_p_terms,
    convert,
    eval_at_cycle_type,
    h_series,
    lyndon_series,
    mn_character,
    plethysm,
    schur_product,
)


@dataclass(frozen=True)
class Acyclic:
    acyclic = True


@dataclass(frozen=True)
class At:
    degree: int
    specht: Partition

    acyclic = False


Cohomology = Union[Acyclic, At]


@dataclass(frozen=True)
class Term:
    mu: Partition
    mult: int
    dim: int


@dataclass(frozen=True)
class ComplexDescriptor:
    lam: Partition
    n: int
    degrees: tuple  # degrees[j] is a tuple of Term
    cohomology: Cohomology

    def euler_count(self) -> int:
        return sum((-1) ** j * t.mult * t.dim for j, terms in enumerate(self.degrees) for t in terms)


@lru_cache(maxsize=None)
def _module_character_p(mu: Partition, bound: int) -> dict:
    # s_{mu'}[L] * H, truncated, in power sums
    inner = plethysm(SymFunc.basis_element("s", conjugate(mu)), lyndon_series(bound), bound)
    H = _to_p_terms(h_series(bound).total())
    return _pmul(inner.terms, H, bound)


def module_character(mu, bound: int) -> SymFunc:
    """Character of ``S^{mu'}(L(V)) (x) Sym(V)`` through degree ``bound``, Schur basis."""
    return convert(SymFunc("p", _module_character_p(Partition(mu), bound)), "s")


@lru_cache(maxsize=None)
def _module_character_s(mu: Partition, bound: int) -> SymFunc:
    return module_character(mu, bound)


def mult_dim(lam, mu) -> int:
    """``dim M(lam, mu) = <s_{lam'}, s_{mu'}[L] H>``; zero when ``|mu| > |lam|``."""
    lam, mu = Partition(lam), Partition(mu)
    if mu.size > lam.size:
        return 0
    c = _module_character_s(mu, lam.size).coeff(conjugate(lam))
    if c.denominator != 1 or c < 0:
        raise ArithmeticError(f"multiplicity M({lam}, {mu}) came out as {c}")
    return int(c)


@lru_cache(maxsize=None)
def _stable_specht(lam: Partition) -> SymFunc:
    terms = {}
    for mu in partitions_up_to(lam.size):
        k = mult_dim(lam, mu)
        if k:
            terms[mu] = (-1) ** (lam.size - mu.size) * k
    return SymFunc("s", terms)


def stable_specht(lam) -> SymFunc:
    """The alternating sum of ``dim M(lam, mu) s_mu`` over ``|mu| <= |lam|``."""
    return _stable_specht(Partition(lam))


def cohomology(lam, n: int) -> Cohomology:
    result = bott(lam, n)
    if isinstance(result, Defined):
        return At(result.delta, result.result)
    return Acyclic()


def schur_dimension(mu, n: int) -> int:
    """``dim S^mu(k^n)``, i.e. ``s_mu`` at the identity of ``S_n``."""
    value = eval_at_cycle_type(SymFunc.basis_element("s", mu), Partition([1] * n))
    assert value.denominator == 1
    return int(value)


def complex_terms(lam, n: int) -> ComplexDescriptor:
    """Term table of the complex for ``lam`` over ``S_n``; only nonzero multiplicities are listed."""
    lam = Partition(lam)
    degrees = []
    for j in range(lam.size + 1):
        row = []
        for mu in partitions_of(lam.size - j):
            k = mult_dim(lam, mu)
            if k:
                row.append(Term(mu, k, schur_dimension(mu, n)))
        degrees.append(tuple(row))
    return ComplexDescriptor(lam, n, tuple(degrees), cohomology(lam, n))


def eval_stable_specht(lam, rho) -> int:
    value = eval_at_cycle_type(stable_specht(lam), rho)
    if value.denominator != 1:
        raise ArithmeticError(f"stable Specht value for {lam} at {rho} is not integral: {value}")
    return int(value)


def _evaluation_cases(lam: Partition, max_n: int) -> tuple[int, list]:
    cases = 0
    bad = []
    for n in range(max_n + 1):
        result = bott(lam, n)
        for rho in partitions_of(n):
            cases += 1
            actual = eval_stable_specht(lam, rho)
            if isinstance(result, Defined):
                expected = (-1) ** result.delta * mn_character(result.result, rho)
            else:
                expected = 0
            if actual != expected:
                bad.append(Violation({"lambda": list(lam), "n": n, "rho": list(rho)}, expected, actual))
    return cases, bad


def _fan_out(fn, args: list, jobs: int) -> list:
    if jobs <= 1:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, *zip(*args)))


def theorem61_check(max_lambda: int = 5, max_n: int = 8, jobs: int = 1) -> Report:
    """Compare evaluations of stable Specht functions with signed Specht characters."""
    start = time.perf_counter()
    args = [(lam, max_n) for lam in partitions_up_to(max_lambda)]
    cases, violations = 0, []
    for c, bad in _fan_out(_evaluation_cases, args, jobs):
        cases += c
        violations.extend(bad)
    return Report("thm61", cases, violations, time.perf_counter() - start)


class BiSymFunc:
    """Sparse ``sum c[a, b] s_a(x) s_b(y)`` over two alphabets."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    def __add__(self, other: "BiSymFunc") -> "BiSymFunc":
        out = defaultdict(Fraction, self.terms)
        for k, v in other.terms.items():
            out[k] += v
        return BiSymFunc(out)

    def __eq__(self, other):
        return isinstance(other, BiSymFunc) and self.terms == other.terms

    __hash__ = None

    def coeff(self, alpha, beta) -> Fraction:
        return self.terms.get((Partition(alpha), Partition(beta)), Fraction(0))

    @classmethod
    def tensor(cls, fx: SymFunc, fy: SymFunc, scale=1) -> "BiSymFunc":
        fx, fy = convert(fx, "s"), convert(fy, "s")
        return cls({(a, b): scale * ca * cb for a, ca in fx.terms.items() for b, cb in fy.terms.items()})


def _s_times_h(mu: Partition, k: int) -> dict:
    if k == 0:
        return {mu: 1}
    if not mu:
        return {Partition((k,)): 1}
    return schur_product(mu, Partition((k,)))


def euler_chain_side(n: int, bound: int) -> BiSymFunc:
    """Koszul-side Euler characteristic, x-degree at most ``bound``.

    ``sum_i (-1)^i sum_{mu |- i} [s_mu(x) H(x)] [s_{mu'}(y) h_{n-i}(y)]``.
    """
    out = defaultdict(Fraction)
    for i in range(n + 1):
        for mu in partitions_of(i):
            if mu.size > bound:
                continue
            x_part = defaultdict(int)
            for k in range(bound - mu.size + 1):
                for nu, c in _s_times_h(mu, k).items():
                    x_part[nu] += c
            y_part = _s_times_h(conjugate(mu), n - i)
            for a, ca in x_part.items():
                for b, cb in y_part.items():
                    out[a, b] += (-1) ** i * ca * cb
    return BiSymFunc(out)


def euler_homology_side(n: int, bound: int) -> BiSymFunc:
    """``sum (-1)^{|lam| - delta_n(lam)} s_{lam'}(x) s_{lam[n]}(y)`` over ``|lam| <= bound``."""
    out = {}
    for lam in partitions_up_to(bound):
        result = bott(lam, n)
        if isinstance(result, Defined):
            out[conjugate(lam), result.result] = (-1) ** (lam.size - result.delta)
    return BiSymFunc(out)


def theorem41_euler_check(n: int, bound: int) -> Report:
    """Coefficientwise comparison of the two Euler characteristics."""
    start = time.perf_counter()
    chain = euler_chain_side(n, bound)
    homology = euler_homology_side(n, bound)
    keys = set(chain.terms) | set(homology.terms)
    violations = []
    for a, b in keys:
        expected, actual = homology.terms.get((a, b), 0), chain.terms.get((a, b), 0)
        if expected != actual:
            violations.append(
                Violation({"n": n, "x": list(a), "y": list(b)}, str(expected), str(actual))
            )
    return Report("thm41", len(keys), violations, time.perf_counter() - start)


def euler_identity_sweep(max_n: int, bound: int) -> Report:
    start = time.perf_counter()
    cases, violations = 0, []
    for n in range(max_n + 1):
        r = theorem41_euler_check(n, bound)
        cases += r.cases
        violations.extend(r.violations)
    return Report("thm41", cases, violations, time.perf_counter() - start)

