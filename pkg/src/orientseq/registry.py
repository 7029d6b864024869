"""Worked examples with their published starters and outputs, for bit-exact replay."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import constructions as C
from .seq import RingSequence, embed_E, weight_mod

# order-2 starters over Z_5
S_PLAIN = (0, 1, 2, 3, 4, 0, 2, 4, 1, 3)
S_ANCHOR_234 = (0, 2, 3, 4, 2, 1, 0, 3, 1, 4)
S_ANCHOR_014 = (0, 1, 4, 0, 2, 1, 3, 4, 2, 3)


@dataclass(frozen=True)
class ExampleRecord:
    id: str
    title: str
    q: int
    qprime: int
    n: int
    starter: RingSequence
    expected_output: RingSequence
    build: Callable[[RingSequence], RingSequence]

    @property
    def expected_period(self) -> int:
        return self.expected_output.period

    @property
    def expected_weight_mod(self) -> int:
        return weight_mod(self.expected_output)

    def run(self) -> RingSequence:
        return self.build(self.starter)

    def check(self) -> bool:
        return self.run() == self.expected_output


def _rec(id, title, qprime, starter, build, expected):
    return ExampleRecord(
        id=id,
        title=title,
        q=5,
        qprime=qprime,
        n=2,
        starter=RingSequence(starter, 5),
        expected_output=RingSequence(expected, qprime),
        build=build,
    )


_S2_11_PLAIN = [0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 10, 9, 8, 7, 0, 9, 7, 10, 8]
_T2_11_PLAIN = [6, 1, 9, 3, 7, 5, 9, 4, 10, 3, 5, 10, 2, 8, 4, 6, 2, 7, 1, 8]
_S2_11_ANCHOR = [0, 2, 3, 4, 2, 1, 0, 3, 1, 4, 0, 9, 8, 7, 9, 10, 0, 8, 10, 7]
_T_11_ANCHOR = [6, 2, 8, 4, 9, 1, 6, 3, 10, 4]
_T2_11_ANCHOR = _T_11_ANCHOR + [5, 9, 3, 7, 2, 10, 5, 8, 1, 7]
_S2_12_PLAIN = [0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 11, 10, 9, 8, 0, 10, 8, 11, 9]
_T2_12_PLAIN = [7, 1, 10, 3, 8, 5, 10, 4, 11, 3, 5, 11, 2, 9, 4, 7, 2, 8, 1, 9]
_S2_12_ANCHOR = [0, 1, 4, 0, 2, 1, 3, 4, 2, 3, 0, 11, 8, 0, 10, 11, 9, 8, 10, 9]
_T2_12_ANCHOR = [7, 1, 8, 5, 10, 1, 9, 4, 10, 3, 5, 11, 4, 7, 2, 11, 3, 8, 2, 9]


def _replace_zeros(seq, v):
    return [v if x == 0 else x for x in seq]


EXAMPLES: dict[str, ExampleRecord] = {
    r.id: r
    for r in [
        _rec("embed_9", "S' over Z_9", 9, S_PLAIN, lambda s: embed_E(s, 9), list(S_PLAIN)),
        _rec("s2_9", "S'' = S' || -S' over Z_9", 9, S_PLAIN, lambda s: C.make_S2(s, 9),
             [0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 8, 7, 6, 5, 0, 7, 5, 8, 6]),
        _rec("s2_10", "S'' = S' || -S' over Z_10", 10, S_PLAIN, lambda s: C.make_S2(s, 10),
             [0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 9, 8, 7, 6, 0, 8, 6, 9, 7]),
        _rec("t_10", "alternating-sign T over Z_10", 10, S_PLAIN, lambda s: C.make_T(s, 10),
             [5, 1, 8, 3, 6, 5, 8, 4, 9, 3]),
        _rec("t2_10", "T' = T || -T over Z_10", 10, S_PLAIN, lambda s: C.make_T2(s, 10),
             [5, 1, 8, 3, 6, 5, 8, 4, 9, 3, 5, 9, 2, 7, 4, 5, 2, 6, 1, 7]),
        _rec("s2_11", "S'' over Z_11", 11, S_PLAIN, lambda s: C.make_S2(s, 11), _S2_11_PLAIN),
        _rec("t2_11", "T' over Z_11", 11, S_PLAIN, lambda s: C.make_T2(s, 11), _T2_11_PLAIN),
        _rec("sos_11_2", "U = S'' || T' over Z_11", 11, S_PLAIN, lambda s: C.make_U(s, 11),
             _S2_11_PLAIN + _T2_11_PLAIN),
        _rec("ustar_11_s2", "S'' over Z_11, anchored starter", 11, S_ANCHOR_234,
             lambda s: C.make_S2(s, 11), _S2_11_ANCHOR),
        _rec("ustar_11_t", "T over Z_11, anchored starter", 11, S_ANCHOR_234,
             lambda s: C.make_T(s, 11), _T_11_ANCHOR),
        _rec("ustar_11_t2", "T' over Z_11, anchored starter", 11, S_ANCHOR_234,
             lambda s: C.make_T2(s, 11), _T2_11_ANCHOR),
        _rec("ustar_11_u", "U over Z_11, anchored starter", 11, S_ANCHOR_234,
             lambda s: C.make_U(s, 11), _S2_11_ANCHOR + _T2_11_ANCHOR),
        _rec("ustar_11", "U* over Z_11: period 37, weight 2", 11, S_ANCHOR_234,
             lambda s: C.make_U_star(5, 11, s),
             [0, 2, 1, 0, 3, 1, 4, 0, 9, 8, 7, 9, 10, 0, 8, 10, 7,
              6, 2, 8, 4, 9, 1, 6, 3, 10, 4, 5, 9, 3, 7, 2, 10, 5, 8, 1, 7]),
        _rec("u_12", "U over Z_12", 12, S_PLAIN, lambda s: C.make_U(s, 12),
             _S2_12_PLAIN + _T2_12_PLAIN),
        _rec("uprime_12", "good U' over Z_12", 12, S_PLAIN, lambda s: C.make_U_prime(s, 12),
             _replace_zeros(_S2_12_PLAIN + _T2_12_PLAIN, 6)),
        _rec("ustarstar_12_u", "U over Z_12, anchored starter", 12, S_ANCHOR_014,
             lambda s: C.make_U(s, 12), _S2_12_ANCHOR + _T2_12_ANCHOR),
        _rec("ustarstar_12_uprime", "U' over Z_12, first two zeros forced", 12, S_ANCHOR_014,
             lambda s: C.goodify(C.make_U(s, 12), 5, force_first_two=True),
             _replace_zeros(_S2_12_ANCHOR + _T2_12_ANCHOR, 6)),
        _rec("ustarstar_12", "U** over Z_12: good, period 37, weight 1", 12, S_ANCHOR_014,
             lambda s: C.make_U_starstar(5, 12, s),
             [6, 2, 1, 3, 4, 2, 3, 6, 11, 8, 6, 10, 11, 9, 8, 10, 9,
              7, 1, 8, 5, 10, 1, 9, 4, 10, 3, 5, 11, 4, 7, 2, 11, 3, 8, 2, 9]),
    ]
}
