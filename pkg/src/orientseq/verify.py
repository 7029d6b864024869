"""Decision procedures for the window, orientable, negative-orientable, special and good properties.

Each check hashes the ``m`` cyclic windows once (``O(m n)``) and reports the
lexicographically first offending index pair.  :func:`pairwise_flags` is an
independent ``O(m^2 n)`` brute-force route used for differential testing.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import NamedTuple

import numpy as np

from . import _accel
from .seq import RingSequence, Window, weight, weight_mod, window

REPEAT = "repeat"
REVERSE = "reverse"
NEGATIVE_REVERSE = "negative_reverse"

FORWARD, REVERSED, NEG_REVERSED = 0, 1, 2


@dataclass(frozen=True)
class Violation:
    """``window(S, i)`` equals ``window(S, j)`` (repeat), its reverse, or its reversed negative."""

    kind: str
    i: int
    j: int
    window: Window


class CheckResult(NamedTuple):
    ok: bool
    violations: list

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class PropertyReport:
    q: int
    n: int
    period: int
    weight: int
    weight_mod: int
    is_window: bool
    is_orientable: bool
    is_negative_orientable: bool
    is_special: bool
    is_good: bool
    violations: list = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["violations"] = [
            {"kind": v.kind, "i": v.i, "j": v.j, "window": list(v.window)} for v in self.violations
        ]
        return d


class _Interner:
    """Fallback window encoder for ``q**n`` beyond int64: maps tuples to dense ids."""

    def __init__(self):
        self.ids: dict[Window, int] = {}

    def encode(self, s: RingSequence, n: int, mode: int) -> np.ndarray:
        q, m, t = s.q, s.period, s.tolist()
        out = np.empty(m, dtype=np.int64)
        for i in range(m):
            w = tuple(t[(i + k) % m] for k in range(n))
            if mode == REVERSED:
                w = w[::-1]
            elif mode == NEG_REVERSED:
                w = tuple((-x) % q for x in w[::-1])
            out[i] = self.ids.setdefault(w, len(self.ids))
        return out


def _codes(s: RingSequence, n: int, modes, interner: _Interner | None = None):
    if _accel.codes_fit(s.q, n):
        return [_accel.window_codes(s.terms, s.q, n, mode) for mode in modes]
    interner = interner or _Interner()
    return [interner.encode(s, n, mode) for mode in modes]


def _require_order(n: int) -> None:
    if n < 2:
        raise ValueError(f"window length must be >= 2, got {n}")


def _repeat(s, n, fwd):
    i, j = _accel.first_repeat(fwd)
    return [] if i < 0 else [Violation(REPEAT, i, j, window(s, i, n))]


def _match(s, n, fwd, other, kind):
    i, j = _accel.first_match(fwd, other)
    return [] if i < 0 else [Violation(kind, i, j, window(s, i, n))]


def check_window(s: RingSequence, n: int) -> CheckResult:
    _require_order(n)
    (fwd,) = _codes(s, n, (FORWARD,))
    v = _repeat(s, n, fwd)
    return CheckResult(not v, v)


def check_orientable(s: RingSequence, n: int) -> CheckResult:
    """Window sequence in which no window equals the reverse of any window, itself included."""
    _require_order(n)
    fwd, rev = _codes(s, n, (FORWARD, REVERSED))
    v = _repeat(s, n, fwd) + _match(s, n, fwd, rev, REVERSE)
    return CheckResult(not v, v)


def check_negative_orientable(s: RingSequence, n: int) -> CheckResult:
    _require_order(n)
    fwd, nrev = _codes(s, n, (FORWARD, NEG_REVERSED))
    v = _repeat(s, n, fwd) + _match(s, n, fwd, nrev, NEGATIVE_REVERSE)
    return CheckResult(not v, v)


def check_special(s: RingSequence, n: int) -> CheckResult:
    _require_order(n)
    fwd, rev, nrev = _codes(s, n, (FORWARD, REVERSED, NEG_REVERSED))
    v = (
        _repeat(s, n, fwd)
        + _match(s, n, fwd, rev, REVERSE)
        + _match(s, n, fwd, nrev, NEGATIVE_REVERSE)
    )
    return CheckResult(not v, v)


def longest_zero_run(s: RingSequence) -> int:
    """Longest cyclic run of zeros; the period itself when every term is zero."""
    z = s.terms == 0
    if z.all():
        return s.period
    if not z.any():
        return 0
    # rotate so the ring starts just after a nonzero term, then runs cannot wrap
    k = int(np.flatnonzero(~z)[0])
    z = np.roll(z, -(k + 1))
    padded = np.concatenate(([False], z, [False])).astype(np.int8)
    d = np.diff(padded)
    return int((np.flatnonzero(d == -1) - np.flatnonzero(d == 1)).max())


def check_good(s: RingSequence, n: int) -> bool:
    """Every cyclic run of zeros has length at most ``n - 2``; an all-zero ring is never good."""
    _require_order(n)
    if (s.terms == 0).all():
        return False
    return longest_zero_run(s) <= n - 2


def check_disjoint(s: RingSequence, t: RingSequence, n: int) -> tuple[bool, bool, bool]:
    """(tuple-disjoint, o-disjoint, n-disjoint) for two window sequences over one modulus."""
    _require_order(n)
    if s.q != t.q:
        raise ValueError(f"moduli differ: {s.q} vs {t.q}")
    interner = _Interner()
    (sf,) = _codes(s, n, (FORWARD,), interner)
    tf, tr, tn = _codes(t, n, (FORWARD, REVERSED, NEG_REVERSED), interner)
    return (
        _accel.first_match(sf, tf)[0] < 0,
        _accel.first_match(sf, tr)[0] < 0,
        _accel.first_match(sf, tn)[0] < 0,
    )


def s_disjoint(s: RingSequence, t: RingSequence, n: int) -> bool:
    return all(check_disjoint(s, t, n))


def report(s: RingSequence, n: int) -> PropertyReport:
    _require_order(n)
    fwd, rev, nrev = _codes(s, n, (FORWARD, REVERSED, NEG_REVERSED))
    rep = _repeat(s, n, fwd)
    ori = _match(s, n, fwd, rev, REVERSE)
    neg = _match(s, n, fwd, nrev, NEGATIVE_REVERSE)
    is_window = not rep
    is_or = is_window and not ori
    is_neg = is_window and not neg
    return PropertyReport(
        q=s.q,
        n=n,
        period=s.period,
        weight=weight(s),
        weight_mod=weight_mod(s),
        is_window=is_window,
        is_orientable=is_or,
        is_negative_orientable=is_neg,
        is_special=is_or and is_neg,
        is_good=check_good(s, n),
        violations=rep + ori + neg,
    )


# --------------------------------------------------------------------------
# brute-force oracle

def pairwise_flags(s: RingSequence, n: int) -> dict:
    """Compare every ordered pair of windows directly.

    Returns the three first-violation pairs (or ``None``) plus the derived
    flags, in the same shape the hashed checks report.
    """
    _require_order(n)
    m, q = s.period, s.q
    t = s.terms
    idx = (np.arange(m)[:, None] + np.arange(n)[None, :]) % m
    w = t[idx]
    r = w[:, ::-1]
    nr = (-r) % q
    same = (w[:, None, :] == w[None, :, :]).all(axis=2)
    same = np.triu(same, k=1)
    rev = (w[:, None, :] == r[None, :, :]).all(axis=2)
    neg = (w[:, None, :] == nr[None, :, :]).all(axis=2)

    def first(mask):
        hits = np.argwhere(mask)
        return None if hits.shape[0] == 0 else (int(hits[0, 0]), int(hits[0, 1]))

    out = {"repeat": first(same), "reverse": first(rev), "negative_reverse": first(neg)}
    out["is_window"] = out["repeat"] is None
    out["is_orientable"] = out["is_window"] and out["reverse"] is None
    out["is_negative_orientable"] = out["is_window"] and out["negative_reverse"] is None
    out["is_special"] = out["is_orientable"] and out["is_negative_orientable"]
    return out


def certify(s: RingSequence, n: int, *, good: bool = False, what: str = "sequence") -> PropertyReport:
    """Report on ``s`` and raise :class:`CertificationError` unless it is special (and good if asked)."""
    rep = report(s, n)
    if not rep.is_special or (good and not rep.is_good):
        raise CertificationError(what, rep)
    return rep


class CertificationError(RuntimeError):
    """A constructed sequence failed the property its construction promises."""

    def __init__(self, what: str, rep: PropertyReport):
        first = rep.violations[0] if rep.violations else None
        detail = f"first violation {first}" if first else f"good={rep.is_good}"
        super().__init__(f"{what} failed certification (q={rep.q}, n={rep.n}, period={rep.period}): {detail}")
        self.report = rep
