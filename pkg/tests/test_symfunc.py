import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from littlewood import cache
from littlewood.partitions import Partition, conjugate, hook_dimension, partitions_of, partitions_up_to, z_value
from littlewood.symfunc import (
    BASES,
    SymFunc,
    TruncatedSeries,
    convert,
    e,
    eval_at_cycle_type,
    h,
    h_series,
    hall_inner,
    lyndon_series,
    m,
    mn_character,
    multiply,
    p,
    plethysm,
    principal_value,
    s,
    schur_product,
)
from oracles import (
    fixed_points_of_power,
    lr_by_jacobi_trudi,
    lyndon_word_count,
    permutation_of_type,
    z_brute,
)
from strategies import partitions


def test_convert_examples():
    assert convert(h(3), "s").terms == {(3,): 1}
    assert convert(e(3), "s").terms == {(1, 1, 1): 1}
    assert convert(p(2), "s").terms == {(2,): 1, (1, 1): -1}


def test_monomial_expansion_of_schur():
    # Kostka numbers K_{(2,1),mu}: m_{21} + 2 m_{111}
    assert convert(s(2, 1), "m").terms == {(2, 1): 1, (1, 1, 1): 2}
    assert convert(p(2, 1), "m").terms == {(3,): 1, (2, 1): 1}


@pytest.mark.parametrize("deg", range(0, 8))
def test_basis_round_trips(deg):
    for lam in partitions_of(deg):
        for src in BASES:
            f = SymFunc.basis_element(src, lam)
            for dst in BASES:
                assert convert(convert(f, dst), src).terms == {lam: 1}, (src, dst, lam)


def test_arithmetic_across_bases():
    assert h(2) - e(2) == p(2)
    assert s(1) + 0 == s(1)
    assert 2 * s(1) - s(1) == p(1)
    assert SymFunc("s") == 0


def test_multiply_examples():
    assert multiply(s(1), s(1)).terms == {(2,): 1, (1, 1): 1}
    assert multiply(s(2, 1), SymFunc.scalar(1)).terms == {(2, 1): 1}
    assert multiply(h(1), s(2)).terms == {(3,): 1, (2, 1): 1}


def test_lr_cache_matches_jacobi_trudi_oracle():
    shapes = [lam for lam in partitions_up_to(4) if lam]
    for lam in shapes:
        for mu in shapes:
            assert schur_product(lam, mu) == lr_by_jacobi_trudi(lam, mu), (lam, mu)


def test_hall_inner_examples():
    assert hall_inner(s(2, 1), s(2, 1)) == 1
    assert hall_inner(p(2), p(1, 1)) == 0
    assert hall_inner(p(2, 1), p(2, 1)) == 2


def test_hall_inner_mixed_bases():
    assert hall_inner(h(2, 1), m(2, 1)) == 1
    assert hall_inner(h(2, 1), s(2, 1)) == 1  # Kostka K_{21,21}
    assert hall_inner(e(2), h(2)) == 0


def test_schur_orthonormality():
    for a in partitions_up_to(8):
        for b in partitions_up_to(8):
            if a.size == b.size:
                fa, fb = convert(s(*a), "p"), convert(s(*b), "p")
                assert hall_inner(fa, fb) == (a == b)


def test_z_values_against_counting():
    for n in range(1, 7):
        for rho in partitions_of(n):
            assert z_value(rho) == z_brute(rho)


@pytest.mark.parametrize(
    "lam, rho, value",
    [((2, 1), (1, 1, 1), 2), ((2, 1), (3,), -1), ((2, 1), (2, 1), 0), ((4,), (2, 1, 1), 1)],
)
def test_character_examples(lam, rho, value):
    assert mn_character(lam, rho) == value


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2, 1), (2,))


def test_character_at_identity_is_dimension():
    for n in range(9):
        for lam in partitions_of(n):
            assert mn_character(lam, [1] * n) == hook_dimension(lam)


def test_column_orthogonality():
    for n in range(8):
        shapes = list(partitions_of(n))
        for rho in shapes:
            for sigma in shapes:
                total = sum(mn_character(lam, rho) * mn_character(lam, sigma) for lam in shapes)
                assert total == (z_value(rho) if rho == sigma else 0)


def test_sign_twist():
    for n in range(8):
        for lam in partitions_of(n):
            for rho in partitions_of(n):
                sign = (-1) ** (n - len(rho))
                assert mn_character(conjugate(lam), rho) == sign * mn_character(lam, rho)


def test_plethysm_examples():
    assert plethysm(p(2), p(3), 6) == p(6)
    g = s(2) + 3 * s(1, 1)
    assert plethysm(s(1), g, 4) == g
    assert convert(plethysm(s(1, 1), s(2), 4), "s").terms == {(3, 1): 1}


def test_plethysm_h2_of_h2():
    assert convert(plethysm(h(2), h(2), 4), "s").terms == {(4,): 1, (2, 2): 1}


def test_plethysm_truncation_error_names_degree():
    with pytest.raises(ValueError, match="degree 5"):
        plethysm(s(2), lyndon_series(3), 5)


_small = st.sampled_from([lam for lam in partitions_up_to(4)])
_tiny = st.sampled_from([lam for lam in partitions_up_to(3) if lam])


@settings(max_examples=25)
@given(_small, _small, _tiny, st.sampled_from(BASES))
def test_plethysm_is_multiplicative_in_first_argument(a, b, c, basis):
    f, g = SymFunc.basis_element(basis, a), SymFunc.basis_element(basis, b)
    inner = s(*c)
    bound = (a.size + b.size) * c.size
    lhs = plethysm(multiply(f, g, basis="p"), inner, bound)
    rhs = multiply(plethysm(f, inner, bound), plethysm(g, inner, bound), basis="p")
    assert lhs.terms == rhs.terms


def test_power_sum_products_agree_with_schur_products():
    for a in partitions_up_to(3):
        for b in partitions_up_to(3):
            assert multiply(s(*a), s(*b), basis="p") == multiply(s(*a), s(*b))


@pytest.mark.parametrize("n", range(1, 6))
def test_eval_power_sums_against_permutations(n):
    for rho in partitions_of(n):
        perm = permutation_of_type(rho)
        for k in range(1, 7):
            assert eval_at_cycle_type(p(k), rho) == fixed_points_of_power(perm, k)


def test_eval_examples():
    assert eval_at_cycle_type(p(2), (2, 1)) == 3
    assert eval_at_cycle_type(p(5), (1, 1, 1, 1)) == 4
    assert eval_at_cycle_type(s(1), (3, 1)) == 1


@settings(max_examples=30)
@given(_small, _small, st.integers(0, 6).flatmap(lambda n: st.sampled_from(list(partitions_of(n)))))
def test_eval_is_ring_homomorphism(a, b, rho):
    f, g = s(*a) + p(*b), h(*b) - 2 * e(*a)
    assert eval_at_cycle_type(multiply(f, g), rho) == eval_at_cycle_type(f, rho) * eval_at_cycle_type(g, rho)


def test_schur_evaluations_are_integers():
    for mu in partitions_up_to(6):
        for n in range(8):
            for rho in partitions_of(n):
                assert eval_at_cycle_type(s(*mu), rho).denominator == 1


def test_lyndon_low_degrees():
    L = lyndon_series(4)
    assert L.component(1) == p(1)
    total = L.component(1) + L.component(2) + L.component(3)
    assert convert(total, "s").terms == {(1,): 1, (1, 1): 1, (2, 1): 1}
    assert principal_value(L.component(4), 2) == 3


def test_lyndon_component_access_past_bound():
    with pytest.raises(ValueError):
        lyndon_series(2).component(3)


def test_free_lie_dimensions_count_lyndon_words():
    L = lyndon_series(8)
    for N in range(1, 5):
        for deg in range(1, 9):
            assert principal_value(L.component(deg), N) == lyndon_word_count(N, deg), (N, deg)


def test_h_series():
    assert h_series(0).total() == 1
    assert h_series(2).total() == 1 + h(1) + h(2)
    for d in range(6):
        assert convert(h_series(6).component(d), "s").terms == {(d,) if d else (): 1}


def test_truncated_series_total_is_homogeneous_sum():
    series = TruncatedSeries(2, (SymFunc.scalar(1), p(1), p(2)))
    assert series.total() == 1 + p(1) + p(2)


def test_cache_store_and_schema_check(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    cache.store("demo", [1, 2])
    assert cache.load("demo") == [1, 2]
    (tmp_path / "demo.json").write_text(json.dumps({"schema": "old", "data": [3]}))
    assert cache.load("demo") is None
    monkeypatch.delenv(cache.ENV_VAR)
    assert cache.load("demo") is None


def test_persistent_tables_reproduce_results(tmp_path):
    script = (
        "from littlewood.symfunc import convert, s, m;"
        "print(sorted(convert(s(3,2), 'm').terms.items()))"
    )
    env = {"LITTLEWOOD_CACHE_DIR": str(tmp_path), "PATH": "/usr/bin:/bin"}
    first = subprocess.run([sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True)
    assert any(f.name.startswith("chartable-5") for f in tmp_path.iterdir())
    second = subprocess.run([sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True)
    assert first.stdout == second.stdout
    assert "Fraction(2, 1)" in first.stdout
