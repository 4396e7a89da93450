"""Acceptance criteria A1-A6, all exact.

Each criterion prints one ``PASS``/``FAIL`` line. Run directly with
``python tests/test_acceptance.py`` or through pytest.
"""

import time
from fractions import Fraction

import pytest
import sympy

from littlewood.bott import bott
from littlewood.complexes import Acyclic, complex_terms, stable_specht, theorem41_euler_check, theorem61_check
from littlewood.modification import closed_form_check
from littlewood.partitions import (
    Partition,
    beta_set,
    conjugate,
    hook_dimension,
    partitions_of,
    partitions_up_to,
    z_value,
)
from littlewood.symfunc import BASES, SymFunc, convert, hall_inner, lyndon_series, mn_character, principal_value
from oracles import fixed_points_of_power, lyndon_word_count, permutation_of_type, z_brute


# --- A4 oracle: Schur coefficients recovered from Specht characters ---------


def _schur_at_permutation(mu, rho):
    # s_mu = sum_sigma chi^mu(sigma) p_sigma / z_sigma, with p_k read off an explicit permutation
    perm = permutation_of_type(rho)
    total = Fraction(0)
    for sigma in partitions_of(sum(mu)):
        term = Fraction(mn_character(mu, sigma), z_brute(sigma))
        for k in sigma:
            term *= fixed_points_of_power(perm, k)
        total += term
    return total


def recover_stable_specht(lam, max_n=8):
    """Solve for c_mu in sum c_mu s_mu(rho) = chi^{lam[n]}(rho) over n >= |lam| + lam_1."""
    lam = Partition(lam)
    unknowns = list(partitions_up_to(lam.size))
    rows, rhs = [], []
    for n in range(lam.size + (lam[0] if lam else 0), max_n + 1):
        big = Partition((n - lam.size,) + tuple(lam))
        for rho in partitions_of(n):
            rows.append([sympy.Rational(_schur_at_permutation(mu, rho)) for mu in unknowns])
            rhs.append(mn_character(big, rho))
    solution, free = sympy.Matrix(rows).gauss_jordan_solve(sympy.Matrix(rhs))
    assert free.shape[0] == 0, "character data does not determine the coefficients"
    return {mu: Fraction(int(c.p), int(c.q)) for mu, c in zip(unknowns, solution) if c != 0}


# --- criteria ---------------------------------------------------------------


def criterion_a1():
    report = closed_form_check(8, 6)
    return report.ok, f"{report.cases} pairs, {len(report.violations)} violations"


def criterion_a2():
    report = theorem61_check(5, 8)
    return report.ok, f"{report.cases} cases, {len(report.violations)} violations"


def criterion_a3():
    cases, bad = 0, 0
    for n in range(7):
        report = theorem41_euler_check(n, 6)
        cases += report.cases
        bad += len(report.violations)
    return bad == 0, f"n = 0..6, {cases} coefficients, {bad} violations"


A4_EXPECTED = {
    (1,): {(1,): 1, (): -1},
    (2,): {(2,): 1, (1,): -2},
    (1, 1): {(1, 1): 1, (1,): -1, (): 1},
}


def criterion_a4():
    ok = True
    for lam, expected in A4_EXPECTED.items():
        oracle = recover_stable_specht(lam)
        computed = stable_specht(lam).terms
        ok &= oracle == expected == computed
    return ok, "stable Specht of (1), (2), (1,1) against the character oracle"


def criterion_a5():
    checks = {}
    checks["round trips"] = all(
        convert(convert(SymFunc.basis_element(a, lam), b), a).terms == {lam: 1}
        for lam in partitions_up_to(10)
        for a in BASES
        for b in BASES
    )
    schur_p = {lam: convert(SymFunc.basis_element("s", lam), "p") for lam in partitions_up_to(8)}
    checks["orthonormality"] = all(
        hall_inner(schur_p[a], schur_p[b]) == (a == b)
        for a in schur_p
        for b in schur_p
        if a.size == b.size
    )
    checks["column orthogonality"] = all(
        sum(mn_character(lam, rho) * mn_character(lam, sigma) for lam in partitions_of(n))
        == (z_value(rho) if rho == sigma else 0)
        for n in range(8)
        for rho in partitions_of(n)
        for sigma in partitions_of(n)
    )
    checks["dimension"] = all(
        mn_character(lam, [1] * n) == hook_dimension(lam) for n in range(9) for lam in partitions_of(n)
    )
    checks["sign twist"] = all(
        mn_character(conjugate(lam), rho) == (-1) ** (n - len(rho)) * mn_character(lam, rho)
        for n in range(8)
        for lam in partitions_of(n)
        for rho in partitions_of(n)
    )
    L = lyndon_series(8)
    checks["necklaces"] = all(
        principal_value(L.component(m), N) == lyndon_word_count(N, m) for N in range(1, 5) for m in range(1, 9)
    )
    complementary = True
    for r in range(7):
        for s in range(7):
            for nu in partitions_up_to(r * s):
                if len(nu) <= r and (not nu or nu[0] <= s):
                    first = set(beta_set(nu, r))
                    second = {r + s - 1 - b for b in beta_set(conjugate(nu), s)}
                    complementary &= first.isdisjoint(second) and first | second == set(range(r + s))
    checks["beta complementarity"] = complementary
    failed = [name for name, ok in checks.items() if not ok]
    return not failed, "all kernel checks hold" if not failed else f"failed: {', '.join(failed)}"


def criterion_a6():
    bad = 0
    for lam in partitions_up_to(4):
        for n in range(9):
            c = complex_terms(lam, n)
            if isinstance(c.cohomology, Acyclic):
                expected = 0
            else:
                expected = (-1) ** c.cohomology.degree * hook_dimension(c.cohomology.specht)
                assert c.cohomology.specht == bott(lam, n).result
            bad += c.euler_count() != expected
    return bad == 0, f"{bad} mismatched Euler counts"


CRITERIA = {
    "A1 closed form vs recursion (|lam|<=8, |mu|<=6)": criterion_a1,
    "A2 stable Specht evaluations (|lam|<=5, n<=8)": criterion_a2,
    "A3 Euler identity over two alphabets (n<=6, degree<=6)": criterion_a3,
    "A4 small stable Specht functions via character oracle": criterion_a4,
    "A5 kernel suite": criterion_a5,
    "A6 complex Euler counts (|lam|<=4, n<=8)": criterion_a6,
}


def _check(name):
    start = time.perf_counter()
    ok, detail = CRITERIA[name]()
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail} ({time.perf_counter() - start:.2f}s)"
    return ok, line


@pytest.mark.parametrize("name", list(CRITERIA))
def test_criterion(name, capsys):
    ok, line = _check(name)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [_check(name) for name in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
