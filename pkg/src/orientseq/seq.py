"""Cyclic words over Z_q: windows, involutions, translates, weights and alphabet maps."""

from __future__ import annotations

import json
from math import gcd
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

Window = tuple[int, ...]


class RingSequence:
    """One period of a periodic sequence over Z_q.

    Immutable.  Indexing is cyclic and equality is positional; use
    :meth:`canonical` when rotations should compare equal.
    """

    __slots__ = ("q", "_terms")

    def __init__(self, terms: Iterable[int], q: int):
        q = int(q)
        if q < 2:
            raise ValueError(f"modulus must be > 1, got {q}")
        arr = np.array(list(terms) if not isinstance(terms, np.ndarray) else terms, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a ring sequence needs at least one term")
        if arr.min() < 0 or arr.max() >= q:
            raise ValueError(f"terms must lie in [0, {q - 1}]")
        arr.setflags(write=False)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "_terms", arr)

    def __setattr__(self, name, value):
        raise AttributeError("RingSequence is immutable")

    @classmethod
    def from_residues(cls, values: Iterable[int], q: int) -> "RingSequence":
        """Build from arbitrary integers, reducing each mod ``q``."""
        return cls(np.asarray(list(values), dtype=np.int64) % q, q)

    @property
    def terms(self) -> np.ndarray:
        return self._terms

    @property
    def period(self) -> int:
        return int(self._terms.shape[0])

    def __len__(self) -> int:
        return self.period

    def __iter__(self):
        return iter(self._terms.tolist())

    def __getitem__(self, i: int) -> int:
        return int(self._terms[i % self.period])

    def tolist(self) -> list[int]:
        return self._terms.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingSequence):
            return NotImplemented
        return self.q == other.q and np.array_equal(self._terms, other._terms)

    def __hash__(self) -> int:
        return hash((self.q, self._terms.tobytes()))

    def __repr__(self) -> str:
        body = ",".join(map(str, self._terms[:40].tolist()))
        if self.period > 40:
            body += ",..."
        return f"RingSequence(q={self.q}, period={self.period}, [{body}])"

    def window(self, i: int, n: int) -> Window:
        return window(self, i, n)

    def rotate(self, k: int) -> "RingSequence":
        """Rotation starting at index ``k``."""
        return RingSequence(np.roll(self._terms, -(k % self.period)), self.q)

    def canonical(self) -> "RingSequence":
        """Lexicographically least rotation."""
        # Booth's least-rotation algorithm
        s = self.tolist() * 2
        f = [-1] * len(s)
        k = 0
        for j in range(1, len(s)):
            sj = s[j]
            i = f[j - k - 1]
            while i != -1 and sj != s[k + i + 1]:
                if sj < s[k + i + 1]:
                    k = j - i - 1
                i = f[i]
            if sj != s[k + i + 1]:
                if sj < s[k]:
                    k = j
                f[j - k] = -1
            else:
                f[j - k] = i + 1
        return self.rotate(k)

    def least_period(self) -> int:
        m = self.period
        for d in range(1, m + 1):
            if m % d == 0 and np.array_equal(self._terms, np.roll(self._terms, -d)):
                return d
        return m

    def concat(self, *others: "RingSequence") -> "RingSequence":
        """Ring sequence formed by joining the rings end to end."""
        for o in others:
            if o.q != self.q:
                raise ValueError("cannot concatenate sequences over different moduli")
        return RingSequence(np.concatenate([self._terms, *(o._terms for o in others)]), self.q)


def window(s: RingSequence, i: int, n: int) -> Window:
    """The n-tuple ``(s_i, ..., s_{i+n-1})`` read cyclically."""
    if n < 1:
        raise ValueError("window length must be >= 1")
    m = s.period
    t = s.terms
    return tuple(int(t[(i + k) % m]) for k in range(n))


def reverse(t: Sequence[int]) -> Window:
    return tuple(t)[::-1]


def negate(t: Union[Sequence[int], RingSequence], q: int | None = None):
    """Termwise negative mod ``q``.  ``q`` is taken from the sequence when omitted."""
    if isinstance(t, RingSequence):
        return RingSequence((-t.terms) % t.q, t.q)
    if q is None:
        raise ValueError("negating a bare tuple needs the modulus")
    return tuple((-x) % q for x in t)


def translate(s: RingSequence, lam: int) -> RingSequence:
    return RingSequence((s.terms + lam) % s.q, s.q)


def weight(s: RingSequence) -> int:
    return int(s.terms.sum())


def weight_mod(s: RingSequence) -> int:
    return weight(s) % s.q


def has_unit_weight(s: RingSequence) -> bool:
    return gcd(weight_mod(s), s.q) == 1


def embed_E(s: RingSequence, qprime: int) -> RingSequence:
    """Reinterpret each residue's representative in [0, q-1] as a residue mod ``qprime``."""
    if qprime <= s.q:
        raise ValueError(f"target modulus {qprime} must exceed {s.q}")
    return RingSequence(s.terms, qprime)


def map_M(s: RingSequence, q: int) -> RingSequence:
    """Fold Z_q' onto Z_q so that M(y) == M(-y) and M(E(x)) == x.

    Low band [0, q-1] maps to itself, middle band [q, q'-q] to 0, high band
    [q'-q+1, q'-1] to q' - y.
    """
    qp = s.q
    if qp < 2 * q - 1:
        raise ValueError(f"map_M needs q' >= 2q - 1 (q={q}, q'={qp})")
    y = s.terms
    out = np.where(y <= q - 1, y, np.where(y <= qp - q, 0, qp - y))
    return RingSequence(out, q)


# --------------------------------------------------------------------------
# persistence

class SequenceFormatError(ValueError):
    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


def format_text(s: RingSequence, n: int) -> str:
    return f"q={s.q} n={n} period={s.period}\n" + ",".join(map(str, s.tolist())) + "\n"


def format_json(s: RingSequence, n: int) -> str:
    return json.dumps({"q": s.q, "n": n, "period": s.period, "terms": s.tolist()}) + "\n"


def parse_text(text: str) -> tuple[RingSequence, int]:
    lines = text.split("\n")
    if len(lines) < 2:
        raise SequenceFormatError("expected header and terms lines", 1, 1)
    header = lines[0]
    fields = {}
    col = 1
    for tok in header.split(" "):
        key, eq, val = tok.partition("=")
        if not eq or key not in ("q", "n", "period") or not val.lstrip("-").isdigit():
            raise SequenceFormatError(f"bad header field {tok!r}", 1, col)
        fields[key] = int(val)
        col += len(tok) + 1
    for key in ("q", "n", "period"):
        if key not in fields:
            raise SequenceFormatError(f"header missing {key}=", 1, 1)
    terms = []
    col = 1
    for tok in lines[1].split(","):
        if not tok.isdigit():
            raise SequenceFormatError(f"bad residue {tok!r}", 2, col)
        v = int(tok)
        if v >= fields["q"]:
            raise SequenceFormatError(f"residue {v} out of range for q={fields['q']}", 2, col)
        terms.append(v)
        col += len(tok) + 1
    if len(terms) != fields["period"]:
        raise SequenceFormatError(f"period={fields['period']} but {len(terms)} terms", 1, 1)
    if any(line for line in lines[2:]):
        raise SequenceFormatError("trailing content", 3, 1)
    return RingSequence(terms, fields["q"]), fields["n"]


def parse_json(text: str) -> tuple[RingSequence, int]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SequenceFormatError(exc.msg, exc.lineno, exc.colno) from None
    for key in ("q", "n", "period", "terms"):
        if key not in obj:
            raise SequenceFormatError(f"missing key {key!r}", 1, 1)
    q, terms = obj["q"], obj["terms"]
    if len(terms) != obj["period"]:
        raise SequenceFormatError(f"period={obj['period']} but {len(terms)} terms", 1, 1)
    for k, v in enumerate(terms):
        if not isinstance(v, int) or not 0 <= v < q:
            raise SequenceFormatError(f"bad residue at terms[{k}]: {v!r}", 1, 1)
    return RingSequence(terms, q), int(obj["n"])


def loads(text: str) -> tuple[RingSequence, int]:
    """Parse either file format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def read_sequence(path: Union[str, Path]) -> tuple[RingSequence, int]:
    return loads(Path(path).read_text())


def write_sequence(path: Union[str, Path], s: RingSequence, n: int, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix == ".json" else "text"
    Path(path).write_text(format_json(s, n) if fmt == "json" else format_text(s, n))
