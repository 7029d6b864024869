"""Upper bound on the period of a special orientable sequence, in closed form and by enumeration."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass

from . import _accel

DEFAULT_MAX_TUPLES = 10**7


class ResourceGuardError(ValueError):
    pass


@dataclass(frozen=True)
class BoundBreakdown:
    """Counts of n-tuples by which of s, s^R, -s, -s^R coincide."""

    q: int
    n: int
    count_fixed_both: int  # s = s^R = -s = -s^R
    count_negself: int  # s = -s != s^R
    count_palindromic: int  # s = s^R != -s^R
    count_antipalindromic: int  # s = -s^R != s^R
    count_free: int  # all four distinct
    bound: int

    def to_dict(self) -> dict:
        return asdict(self)


def _check_args(q: int, n: int) -> None:
    if q <= 1 or n <= 1:
        raise ValueError(f"need q > 1 and n > 1, got q={q}, n={n}")


def sos_bound(q: int, n: int) -> int:
    _check_args(q, n)
    if q % 2 and n % 2:
        num = q**n - q ** ((n + 1) // 2) - q ** ((n - 1) // 2) + 1
    elif q % 2:
        num = q**n - 2 * q ** (n // 2) + 1
    elif n % 2:
        num = q**n - q ** ((n + 1) // 2) - 2 * q ** ((n - 1) // 2) + 2 ** ((n + 3) // 2) - 2 ** ((n + 1) // 2)
    else:
        num = q**n - 2 * q ** (n // 2) + 2 ** ((n + 2) // 2) - 2 ** (n // 2)
    assert num % 2 == 0
    return num // 2


def max_tuples() -> int:
    return int(os.environ.get("ORIENTSEQ_MAX_TUPLES", DEFAULT_MAX_TUPLES))


def sos_bound_oracle(q: int, n: int, backend: str | None = None) -> BoundBreakdown:
    """Classify every q-ary n-tuple and halve the admissible count.

    Refuses inputs with more than ``ORIENTSEQ_MAX_TUPLES`` (default 10^7) tuples.
    """
    _check_args(q, n)
    limit = max_tuples()
    if q**n > limit:
        raise ResourceGuardError(f"q^n = {q**n} exceeds enumeration guard {limit}")
    fixed, negself, pal, anti, free = (int(c) for c in _accel.classify_tuples(q, n, backend=backend))
    # free orbits {s, s^R, -s, -s^R} admit two members, negself orbits {s, s^R} admit one
    return BoundBreakdown(q, n, fixed, negself, pal, anti, free, (negself + free) // 2)


def os2_max_period(q: int) -> int:
    """Period of a maximal order-2 orientable sequence: an Euler circuit of K_q (or K_q minus a one-factor)."""
    if q < 3:
        raise ValueError(f"need q >= 3, got {q}")
    return q * (q - 1) // 2 if q % 2 else q * (q - 2) // 2
