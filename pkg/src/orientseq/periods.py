"""Closed-form periods of the constructions, stated per residue of the alphabet size mod 4.

These are the published case formulas, kept verbatim so tests can compare
them with periods measured on constructed sequences.  ``q`` here is always
the alphabet of the *output* sequence.
"""

from __future__ import annotations


def _by_residue(q: int, cases) -> int:
    num, den = cases[q % 4]
    value, rem = divmod(num, den)
    assert rem == 0, (q, num, den)
    return value


def period_s2(q: int) -> int:
    """Negation-doubled embedding of a maximal order-2 starter, q >= 5."""
    return _by_residue(q, {
        0: (q * (q - 4), 4),
        1: ((q + 1) * (q - 1), 4),
        2: (q * (q - 2), 4),
        3: ((q + 1) * (q - 3), 4),
    })


def period_u(q: int) -> int:
    """Four-block sequence U, q >= 6."""
    return _by_residue(q, {
        0: ((q - 2) * (q - 4), 2),
        1: ((q - 1) * (q - 5), 2),
        2: ((q - 2) * (q - 6), 2),
        3: ((q - 1) * (q - 3), 2),
    })


def period_ustar(q: int) -> int:
    """Unit-weight truncation of U, q >= 11."""
    return period_u(q) - 3


def period_uprime(q: int) -> int:
    """Good (zero-free) variant of U, q >= 6."""
    return _by_residue(q, {
        0: ((q - 2) * (q - 4), 2),
        1: ((q - 3) * (q - 5), 2),
        2: ((q - 2) * (q - 6), 2),
        3: ((q - 3) * (q - 7), 2),
    })


def period_ustarstar(q: int) -> int:
    """Good unit-weight truncation, q >= 12."""
    return period_uprime(q) - 3


def period_order3(q: int) -> int:
    """Lift of the unit-weight order-2 sequence, q >= 11."""
    return _by_residue(q, {
        0: (q**3 - 6 * q**2 + 2 * q, 2),
        1: (q**3 - 6 * q**2 - q, 2),
        2: (q**3 - 8 * q**2 + 6 * q, 2),
        3: (q**3 - 4 * q**2 - 3 * q, 2),
    })


def period_general(q: int, n: int) -> int:
    """Tower over the good unit-weight base, q >= 12 and n >= 2."""
    tail = (q ** (n - 2) - 1) // (q - 1)
    return tail + _by_residue(q, {
        0: (q**n - 6 * q ** (n - 1) + 2 * q ** (n - 2), 2),
        1: (q**n - 8 * q ** (n - 1) + 9 * q ** (n - 2), 2),
        2: (q**n - 8 * q ** (n - 1) + 6 * q ** (n - 2), 2),
        3: (q**n - 10 * q ** (n - 1) + 15 * q ** (n - 2), 2),
    })


def base_for_u(q: int) -> int:
    """Starter alphabet r with q in {2r+1, 2r+2}."""
    return (q - 1) // 2


def base_for_good(q: int) -> int:
    """Starter alphabet r with q in {2r+2, 2r+3}."""
    return (q - 2) // 2


def base_for_s2(q: int) -> int:
    """Starter alphabet r with q in {2r-1, 2r}."""
    return (q + 1) // 2
