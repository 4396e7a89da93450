"""The border-strip modification rule and its closed form for ``d = 1``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Union

from .bott import Defined, bott
from .partitions import EMPTY, Partition, conjugate, partitions_up_to, remove_strip_bottom_left
from .report import Report, Violation


@dataclass(frozen=True)
class Finite:
    """Finite modification degree with the admissible pair ``(alpha, beta)`` reached."""

    degree: int
    alpha: Partition
    beta: Partition

    finite = True

    @property
    def weight(self) -> int:
        # only meaningful for d = 1, where the pair is ((n), ()) or ((), (-n))
        return self.alpha.size - self.beta.size


@dataclass(frozen=True)
class Infinite:
    finite = False


ModResult = Union[Finite, Infinite]


def admissible(lam, mu, d: int) -> bool:
    return len(Partition(lam)) + len(Partition(mu)) <= d


def mod_rule_recursive(lam, mu, d: int) -> ModResult:
    """Remove bottom-left border strips from both shapes until the pair is admissible.

    Each step removes strips of length ``l(lam) + l(mu) - d - 1`` and adds
    ``c(R_lam) + c(R_mu) - 1`` to the degree. A missing or empty strip makes
    the degree infinite.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    lam, mu = Partition(lam), Partition(mu)
    degree = 0
    while not admissible(lam, mu, d):
        size = len(lam) + len(mu) - d - 1
        left = remove_strip_bottom_left(lam, size)
        right = remove_strip_bottom_left(mu, size)
        if left is None or right is None:
            return Infinite()
        (lam_next, r_lam), (mu_next, r_mu) = left, right
        assert lam_next.size + mu_next.size < lam.size + mu.size
        degree += r_lam.columns + r_mu.columns - 1
        lam, mu = lam_next, mu_next
    return Finite(degree, lam, mu)


def mod_rule_closed_d1(lam, mu) -> ModResult:
    """Closed form of the ``d = 1`` rule via the Bott rule.

    With ``nu = mu'`` the pair is finite exactly when ``lam = nu[|lam|]``, and
    then the degree is ``|nu| - delta_{|lam|}(nu)`` and the weight is
    ``|lam| - |nu|``. Pairs with ``|lam| < |mu|`` are handled by swapping the
    two shapes, since the rule is symmetric.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size < mu.size:
        swapped = mod_rule_closed_d1(mu, lam)
        if isinstance(swapped, Infinite):
            return swapped
        return Finite(swapped.degree, swapped.beta, swapped.alpha)
    nu = conjugate(mu)
    result = bott(nu, lam.size)
    if not isinstance(result, Defined) or result.result != lam:
        return Infinite()
    n = lam.size - nu.size
    return Finite(nu.size - result.delta, Partition((n,)) if n else EMPTY, EMPTY)


def closed_form_check(max_lambda: int = 8, max_mu: int = 6) -> Report:
    """Compare the closed form against the recursion over all small pairs."""
    start = time.perf_counter()
    violations = []
    cases = 0
    mus = list(partitions_up_to(max_mu))
    for lam in partitions_up_to(max_lambda):
        for mu in mus:
            cases += 1
            expected = mod_rule_recursive(lam, mu, 1)
            actual = mod_rule_closed_d1(lam, mu)
            if expected != actual:
                violations.append(
                    Violation(
                        {"lambda": list(lam), "mu": list(mu)},
                        describe(expected),
                        describe(actual),
                    )
                )
    return Report("thm34", cases, violations, time.perf_counter() - start)


def describe(result: ModResult) -> dict:
    if isinstance(result, Infinite):
        return {"finite": False}
    return {
        "finite": True,
        "degree": result.degree,
        "weight": result.weight,
        "tau": [list(result.alpha), list(result.beta)],
    }
