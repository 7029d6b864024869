"""The Lempel difference map, its integrating inverse, and the order-raising towers built on it."""

from __future__ import annotations

import logging
import warnings
from math import gcd

import numpy as np

from . import verify
from .bounds import os2_max_period
from .constructions import ConstructionError, make_U_star, make_U_starstar
from .seq import RingSequence, has_unit_weight, weight_mod

log = logging.getLogger(__name__)


def d_beta(s: RingSequence, beta: int = 1) -> RingSequence:
    """Scaled cyclic differences ``t_j = beta (s_{j+1} - s_j)``."""
    t = s.terms
    return RingSequence((beta * (np.roll(t, -1) - t)) % s.q, s.q)


def d_inverse(s: RingSequence, start: int = 0, beta: int = 1) -> RingSequence:
    """The lift through ``start``: ``t_0 = start``, ``t_{j+1} = t_j + beta^-1 s_j``.

    With ``w_q(s)`` a unit the lift closes after ``q`` passes over ``s``, so
    its period is ``q m``.  Otherwise it closes early and a warning is issued.
    """
    q, m = s.q, s.period
    if gcd(beta, q) != 1:
        raise ValueError(f"beta={beta} is not a unit mod {q}")
    binv = pow(beta, -1, q)
    w = weight_mod(s)
    passes = q // gcd(w * binv % q, q) if w else 1
    if passes != q:
        warnings.warn(f"weight {w} is not a unit mod {q}: lift has period {passes * m}, not {q * m}")
    steps = np.tile(s.terms * binv % q, passes)
    terms = (start + np.concatenate(([0], np.cumsum(steps[:-1])))) % q
    return RingSequence(terms, q)


def _runs(t: np.ndarray, a: int):
    """(start, length) of each maximal cyclic run of ``a``, in ring order of start."""
    m = t.shape[0]
    is_a = t == a
    if is_a.all():
        return [(0, m)]
    out = []
    for i in np.flatnonzero(is_a & ~np.roll(is_a, 1)):
        length = 1
        while is_a[(i + length) % m]:
            length += 1
        out.append((int(i), length))
    return out


def _candidates(t: np.ndarray, a: int, n: int):
    preferred = [i for i, length in _runs(t, a) if length == n - 2]
    seen = set(preferred)
    return preferred + [i for i in range(t.shape[0]) if i not in seen]


def extend_Ea(t: RingSequence, a: int, n: int) -> RingSequence:
    """Insert one copy of ``a`` into ``t`` (special of order ``n``) keeping it special and good.

    Runs of ``a`` of length ``n - 2`` are tried first: growing one to length
    ``n - 1`` only creates windows holding a constant ``(n - 1)``-tuple, which
    a lifted good sequence never contains.  Every candidate is certified; the
    first that passes wins.
    """
    a %= t.q
    want = (weight_mod(t) + a) % t.q
    for pos in _candidates(t.terms, a, n):
        cand = RingSequence(np.insert(t.terms, pos, a), t.q)
        rep = verify.report(cand, n)
        if rep.is_special and rep.is_good and rep.weight_mod == want:
            return cand
    raise ConstructionError(f"no insertion point for symbol {a} keeps the sequence special and good")


def tower(s_start: RingSequence, n_start: int, target_n: int) -> RingSequence:
    """Raise a good unit-weight special sequence from order ``n_start`` to ``target_n``.

    Each step lifts through 0 and inserts ``a = 1 - w_q(lift)``, so every
    level has weight 1 and period ``q m + 1``.
    """
    q = s_start.q
    if target_n < n_start:
        raise ValueError(f"target order {target_n} below starting order {n_start}")
    if not has_unit_weight(s_start):
        raise ValueError(f"starting weight {weight_mod(s_start)} is not a unit mod {q}")
    verify.certify(s_start, n_start, good=True, what="tower base")
    s = s_start
    for n in range(n_start + 1, target_n + 1):
        lifted = d_inverse(s, 0)
        a = (1 - weight_mod(lifted)) % q
        nxt = extend_Ea(lifted, a, n)
        if nxt.period != q * s.period + 1:
            raise ConstructionError(f"order {n}: period {nxt.period} != {q * s.period + 1}")
        log.info("order %d: period %d", n, nxt.period)
        s = nxt
    return s


def _base_q(qprime: int, offset_odd: int, offset_even: int) -> int:
    return (qprime - offset_odd) // 2 if qprime % 2 else (qprime - offset_even) // 2


def sos3(qprime: int, starter: RingSequence | None = None) -> RingSequence:
    """Order-3 special sequence over Z_q' from the lift of the unit-weight order-2 sequence."""
    if qprime < 11:
        raise ValueError(f"need q' >= 11, got {qprime}")
    q = _base_q(qprime, 1, 2)
    u = make_U_star(q, qprime, starter)
    out = d_inverse(u, 0)
    verify.certify(out, 3, what="order-3 lift")
    if out.period != qprime * u.period:
        raise ConstructionError(f"lift period {out.period} != {qprime} * {u.period}")
    return out


def sos_general(qprime: int, n: int, starter: RingSequence | None = None) -> RingSequence:
    """Good special sequence over Z_q' of order ``n`` via the tower on the good unit-weight base."""
    if qprime < 12 or n < 2:
        raise ValueError(f"need q' >= 12 and n >= 2, got q'={qprime}, n={n}")
    q = _base_q(qprime, 3, 2)
    return tower(make_U_starstar(q, qprime, starter), 2, n)


def tower_period(m: int, q: int, j: int) -> int:
    """Period after ``j`` tower steps from period ``m`` over Z_q."""
    return q**j * m + (q**j - 1) // (q - 1)


def general_period_from_base(qprime: int, n: int) -> int:
    """Closed form for :func:`sos_general`'s period, through the base alphabet size."""
    q = _base_q(qprime, 3, 2)
    return tower_period(4 * os2_max_period(q) - 3, qprime, n - 2)
