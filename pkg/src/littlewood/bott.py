"""The one-row Bott rule: the degree ``delta_n(lam)`` and partition ``lam[n]``.

Prepend ``n - |lam|`` to ``lam``, add the Weyl vector, and sort. A repeated
entry or a negative part after subtracting the Weyl vector again means the
answer is undefined (infinite degree).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .partitions import Partition


@dataclass(frozen=True)
class Defined:
    result: Partition
    delta: int

    defined = True


@dataclass(frozen=True)
class Undefined:
    defined = False


BottResult = Union[Defined, Undefined]


def bott(lam, n: int, r: Optional[int] = None) -> BottResult:
    """Compute ``(lam[n], delta_n(lam))``.

    ``r`` is the working length of the weight vector; it defaults to the
    smallest allowed value ``l(lam) + 1`` and the result does not depend on it.
    """
    lam = Partition(lam)
    if r is None:
        r = len(lam) + 1
    elif r < len(lam) + 1:
        raise ValueError(f"r must be at least l(lambda) + 1 = {len(lam) + 1}")
    v = [n - lam.size] + [lam.part(i) for i in range(1, r)]
    shifted = [x + (r - 1 - i) for i, x in enumerate(v)]
    if len(set(shifted)) < r:
        return Undefined()
    inversions = sum(1 for i in range(r) for j in range(i + 1, r) if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    parts = [x - (r - 1 - i) for i, x in enumerate(ordered)]
    if parts[-1] < 0:
        return Undefined()
    return Defined(Partition(parts), inversions)


def delta_count(lam, n: int) -> int:
    """Count the ``i >= 1`` with ``lam_i - i > n - |lam|``.

    Agrees with ``bott(lam, n).delta`` whenever that is defined; it cannot tell
    when the result is undefined.
    """
    lam = Partition(lam)
    bound = n - lam.size
    top = max(len(lam), -bound) + 1
    return sum(1 for i in range(1, top + 1) if lam.part(i) - i > bound)
