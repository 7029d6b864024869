"""Pipelines turning an orientable starter into special orientable sequences.

Every public constructor certifies its output with :func:`verify.certify`
before returning it; a failed certification raises
:class:`verify.CertificationError` rather than handing back a bad sequence.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import verify
from .bounds import os2_max_period
from .euler import os2_maximal, os2_starter
from .seq import RingSequence, embed_E, negate, weight_mod, window

VARIANTS = ("embed", "s2", "t", "t2", "u", "ustar", "uprime", "ustarstar")


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class ConstructionParams:
    q: int
    qprime: int
    n: int = 2
    variant: str = "u"
    x: int | None = None
    y: int | None = None
    z: int | None = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ConstructionError(f"unknown variant {self.variant!r}; choose from {VARIANTS}")
        q, qp = self.q, self.qprime
        ok = {
            "embed": qp > q,
            "s2": qp >= 2 * q - 1 > 2,
            "t": qp >= 2 * q > 3,
            "t2": qp >= 2 * q > 3,
            "u": qp >= 2 * q + 1 > 4,
            "ustar": q > 2 and qp in (2 * q + 1, 2 * q + 2),
            "uprime": qp >= 2 * q + 2,
            "ustarstar": q > 4 and qp in (2 * q + 2, 2 * q + 3),
        }[self.variant]
        if not ok:
            raise ConstructionError(f"variant {self.variant} does not accept q={q}, q'={qp}")


def _require_orientable(s: RingSequence, n: int) -> None:
    res = verify.check_orientable(s, n)
    if not res.ok:
        raise ConstructionError(f"starter is not orientable of order {n}: {res.violations[0]}")


def embed_qprime(s: RingSequence, qprime: int, n: int = 2) -> RingSequence:
    """The starter re-read over Z_q'; special once q' >= 2q - 1."""
    _require_orientable(s, n)
    out = embed_E(s, qprime)
    if qprime >= 2 * s.q - 1:
        verify.certify(out, n, what="embedded starter")
    else:
        warnings.warn(f"q'={qprime} < 2q-1={2 * s.q - 1}: embedding is orientable but not claimed special")
    return out


def make_S2(s: RingSequence, qprime: int, n: int = 2) -> RingSequence:
    """S' followed by -S': period 2m, weight 0 mod q'."""
    if not qprime >= 2 * s.q - 1 > 2:
        raise ConstructionError(f"need q' >= 2q-1 > 2 (q={s.q}, q'={qprime})")
    _require_orientable(s, n)
    sp = embed_E(s, qprime)
    out = sp.concat(negate(sp))
    verify.certify(out, n, what="S''")
    return out


def make_T(s: RingSequence, qprime: int, n: int = 2) -> RingSequence:
    """Alternating-sign copy of S' with each zero replaced by +-q; never contains 0."""
    q, m = s.q, s.period
    if not qprime >= 2 * q > 3:
        raise ConstructionError(f"need q' >= 2q > 3 (q={q}, q'={qprime})")
    _require_orientable(s, n)
    i = np.arange(m)
    sign = np.where((i + m - 1) % 2 == 0, 1, -1)
    base = np.where(s.terms == 0, q, s.terms)
    out = RingSequence((sign * base) % qprime, qprime)
    verify.certify(out, n, what="T")
    return out


def make_T2(s: RingSequence, qprime: int, n: int = 2) -> RingSequence:
    t = make_T(s, qprime, n)
    out = t.concat(negate(t))
    verify.certify(out, n, good=True, what="T'")
    return out


def make_U(s: RingSequence, qprime: int, n: int = 2) -> RingSequence:
    """S'' followed by T': period 4m, weight 0 mod q'.  Needs s_0 = 0."""
    q = s.q
    if not qprime >= 2 * q + 1 > 4:
        raise ConstructionError(f"need q' >= 2q+1 > 4 (q={q}, q'={qprime})")
    if s[0] != 0:
        raise ConstructionError("starter must begin with 0")
    s2, t2 = make_S2(s, qprime, n), make_T2(s, qprime, n)
    if not verify.s_disjoint(s2, t2, n):
        raise ConstructionError("S'' and T' are not s-disjoint")
    out = s2.concat(t2)
    verify.certify(out, n, what="U")
    return out


# --------------------------------------------------------------------------
# weight adjustment

_XYZ_TABLE = {(5, 12): (0, 1, 4), (6, 14): (0, 1, 2)}


def choose_xyz(q: int, qprime: int) -> tuple[int, int, int]:
    """Anchor cycle (x, y, z) whose sum is a unit mod q'."""
    if (q, qprime) in _XYZ_TABLE:
        xyz = _XYZ_TABLE[(q, qprime)]
    elif q >= 5 and qprime == 2 * q + 1:
        xyz = (2, q - 2, q - 1)
    elif q >= 7 and qprime == 2 * q + 2:
        xyz = (4, q - 2, q - 1)
    else:
        raise ConstructionError(f"no anchor cycle defined for q={q}, q'={qprime}")
    assert len(set(xyz)) == 3 and gcd(sum(xyz), qprime) == 1
    return xyz


def truncated_period(q: int) -> int:
    """Period of U* and U**: four copies of a maximal order-2 starter, less the three deleted terms."""
    return 4 * os2_max_period(q) - 3


def _starter_with_prefix(q, prefix, starter):
    if starter is None:
        return os2_starter(q, prefix)
    if starter.q != q:
        raise ConstructionError(f"starter is over Z_{starter.q}, expected Z_{q}")
    if starter.tolist()[: len(prefix)] != list(prefix):
        raise ConstructionError(f"starter must begin {list(prefix)}")
    if starter.period != os2_max_period(q):
        raise ConstructionError(f"starter period {starter.period} is not maximal ({os2_max_period(q)})")
    _require_orientable(starter, 2)
    return starter


def make_U_star(q: int, qprime: int, starter: RingSequence | None = None) -> RingSequence:
    """Order-2 special sequence of weight coprime to q', by deleting the anchor cycle [x y z] from U."""
    if not (q > 4 and qprime in (2 * q + 1, 2 * q + 2)):
        raise ConstructionError(f"need q > 4 and q' in {{2q+1, 2q+2}} (q={q}, q'={qprime})")
    x, y, z = choose_xyz(q, qprime)
    if x == 0:
        prefix, cut = [x, y, z, x], 0
    else:
        prefix, cut = [0, x, y, z, x], 1
    if starter is None:
        starter = os2_maximal(q, x, y, z, lead_zero=bool(cut))
    s = _starter_with_prefix(q, prefix, starter)
    u = make_U(s, qprime)
    terms = np.delete(u.terms, [cut, cut + 1, cut + 2])
    out = RingSequence(terms, qprime)
    rep = verify.certify(out, 2, what="U*")
    if out.period != truncated_period(q):
        raise verify.CertificationError("U* period", rep)
    if rep.weight_mod != (-(x + y + z)) % qprime or gcd(rep.weight_mod, qprime) != 1:
        raise verify.CertificationError("U* weight", rep)
    return out


# --------------------------------------------------------------------------
# good sequences

def goodify(u: RingSequence, q: int, force_first_two: bool = False, n: int = 2) -> RingSequence:
    """Replace half the zeros of ``u`` by q+1 and half by q'-q-1.

    Zeros are taken in ring order.  With ``force_first_two`` the first two
    become q+1; the rest alternate starting with q'-q-1, and trailing q+1
    assignments are flipped until the split is exactly even.
    """
    qp = u.q
    if qp < 2 * q + 2:
        raise ConstructionError(f"need q' >= 2q+2 (q={q}, q'={qp})")
    lo, hi = q + 1, qp - q - 1
    if np.isin(u.terms, [lo, hi]).any():
        raise ConstructionError(f"sequence already contains {lo} or {hi}")
    zeros = np.flatnonzero(u.terms == 0)
    if zeros.size % 2:
        raise ConstructionError(f"odd number of zeros ({zeros.size})")
    k = zeros.size
    floor = 2 if force_first_two else 0
    vals = [lo] * min(floor, k) + [hi if t % 2 == 0 else lo for t in range(k - floor)]
    if lo != hi:
        for idx in range(k - 1, floor - 1, -1):
            if vals.count(lo) <= k // 2:
                break
            if vals[idx] == lo:
                vals[idx] = hi
        if vals.count(lo) != k // 2:
            raise ConstructionError(f"cannot split {k} zeros evenly with the first two fixed")
    terms = u.terms.copy()
    terms[zeros] = vals
    out = RingSequence(terms, qp)
    rep = verify.certify(out, n, good=True, what="U'")
    if rep.weight_mod != 0:
        raise verify.CertificationError("U' weight", rep)
    return out


def make_U_prime(s: RingSequence, qprime: int, n: int = 2) -> RingSequence:
    return goodify(make_U(s, qprime, n), s.q, n=n)


def make_U_starstar(q: int, qprime: int, starter: RingSequence | None = None) -> RingSequence:
    """Good order-2 special sequence of unit weight: goodify U, then drop its first three terms."""
    if not (q > 4 and qprime in (2 * q + 2, 2 * q + 3)):
        raise ConstructionError(f"need q > 4 and q' in {{2q+2, 2q+3}} (q={q}, q'={qprime})")
    prefix = [0, 1, q - 1, 0]
    if starter is None:
        starter = os2_maximal(q, 0, 1, q - 1)
    s = _starter_with_prefix(q, prefix, starter)
    up = goodify(make_U(s, qprime), q, force_first_two=True)
    assert up.tolist()[:4] == [q + 1, 1, q - 1, q + 1]
    out = RingSequence(up.terms[3:], qprime)
    rep = verify.certify(out, 2, good=True, what="U**")
    if out.period != truncated_period(q):
        raise verify.CertificationError("U** period", rep)
    if rep.weight_mod != qprime - (2 * q + 1) or gcd(rep.weight_mod, qprime) != 1:
        raise verify.CertificationError("U** weight", rep)
    return out


def increment_embed(s: RingSequence) -> RingSequence:
    """Add one to every integer representative and read the result mod q + 1.

    The output has no zeros and stays orientable, but the shift does not
    commute with negation, so it is generally *not* special.  Not certified.
    """
    return RingSequence(s.terms + 1, s.q + 1)


def join_negative(s: RingSequence, n: int = 2) -> RingSequence:
    """Splice S and -S at a shared (n-1)-tuple into one ring of twice the period."""
    verify.certify(s, n, what="join_negative input")
    neg = negate(s)
    if not verify.check_disjoint(s, neg, n)[0]:
        raise ConstructionError("S contains an n-tuple together with its negative")
    m = s.period
    pos = {}
    for j in range(m):
        pos.setdefault(window(neg, j, n - 1), j)
    for i in range(m):
        j = pos.get(window(s, i, n - 1))
        if j is not None:
            out = s.rotate(i).concat(neg.rotate(j))
            verify.certify(out, n, what="joined S, -S")
            return out
    raise ConstructionError(f"S and -S share no {n - 1}-tuple")


# --------------------------------------------------------------------------
# dispatch

def construct(params: ConstructionParams, starter: RingSequence | None = None) -> RingSequence:
    """Run one pipeline.  Starters default to a library-generated maximal order-2 sequence beginning with 0."""
    v, q, qp, n = params.variant, params.q, params.qprime, params.n
    if v == "ustar":
        return make_U_star(q, qp, starter)
    if v == "ustarstar":
        return make_U_starstar(q, qp, starter)
    if starter is None:
        if n != 2:
            raise ConstructionError("order > 2 pipelines need an explicit starter")
        starter = os2_starter(q)
    elif starter.q != q:
        raise ConstructionError(f"starter is over Z_{starter.q}, expected Z_{q}")
    fn = {
        "embed": embed_qprime,
        "s2": make_S2,
        "t": make_T,
        "t2": make_T2,
        "u": make_U,
        "uprime": make_U_prime,
    }[v]
    return fn(starter, qp, n)
