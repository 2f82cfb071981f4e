"""Shrinking and clock-controlled shrinking keystream generators.

Both combine a control register SR1 (length l1, characteristic polynomial
c1) with a generating register SR2 (l2, c2).  The plain shrinking rule
keeps SR2's bit when SR1 outputs 1 and discards it otherwise.  The
clock-controlled variant first decimates SR2 irregularly: at step t it
reads SR2's current bit b'_t, then advances SR2 by

    X_t = 1 + sum_k 2^k * A_(taps[k])(t)

positions, where A_i(t) are SR1 stages.  The shrinking rule is then
applied to {b'_t} as before, and SR1 steps once.  Empty taps make X_t
identically 1, which is the plain generator again.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Iterator

from .engines import BitSeq, ZeroSeed, lfsr_bit_iter
from .gf2 import Gf2Poly, NonPrimitiveModulus, is_primitive

__all__ = [
    "GeneratorSpec",
    "ShrunkenStats",
    "shrink_generate",
    "ccsg_generate",
    "clocked_keystream",
    "decimated_stream",
    "clock_counts",
    "shrunken_stats",
]


@dataclass(frozen=True)
class GeneratorSpec:
    """Static parameters of a (clock-controlled) shrinking generator.

    Seeds are optional so the same object can describe the public part an
    attacker sees.  taps lists SR1 stage indices (0-based, each < l1)
    feeding the clock sum; the empty tuple means plain shrinking.
    """

    l1: int
    l2: int
    c1: Gf2Poly
    c2: Gf2Poly
    is1: tuple[int, ...] | None = None
    is2: tuple[int, ...] | None = None
    taps: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.l1 < 1:
            raise ValueError("l1 must be >= 1")
        if self.l2 <= self.l1:
            raise ValueError("l2 must exceed l1")
        if math.gcd(self.l1, self.l2) != 1:
            raise ValueError(f"register lengths {self.l1}, {self.l2} must be coprime")
        if self.c1.degree != self.l1:
            raise ValueError(f"c1 degree {self.c1.degree} != l1 {self.l1}")
        if self.c2.degree != self.l2:
            raise ValueError(f"c2 degree {self.c2.degree} != l2 {self.l2}")
        for name, poly in (("c1", self.c1), ("c2", self.c2)):
            if not is_primitive(poly):
                raise NonPrimitiveModulus(f"{name} = {poly.to_text()} is not primitive")
        for name, seed, length in (("is1", self.is1, self.l1), ("is2", self.is2, self.l2)):
            if seed is None:
                continue
            if len(seed) != length or any(b not in (0, 1) for b in seed):
                raise ValueError(f"{name} must be {length} bits")
            if not any(seed):
                raise ZeroSeed(f"{name} must be nonzero")
        if len(set(self.taps)) != len(self.taps):
            raise ValueError("taps must be distinct")
        if any(t < 0 or t >= self.l1 for t in self.taps):
            raise ValueError(f"taps must lie in [0, {self.l1})")
        if self.taps and len(self.taps) == self.l1:
            warnings.warn(
                "tap count equals the control register length; clocking leaks the whole SR1 state",
                stacklevel=3,
            )

    @classmethod
    def from_json(cls, data: dict) -> "GeneratorSpec":
        def seed(key: str) -> tuple[int, ...] | None:
            if key not in data or data[key] is None:
                return None
            return tuple(int(ch) for ch in str(data[key]))

        return cls(
            l1=int(data["l1"]),
            l2=int(data["l2"]),
            c1=Gf2Poly.parse(str(data["c1"])),
            c2=Gf2Poly.parse(str(data["c2"])),
            is1=seed("is1"),
            is2=seed("is2"),
            taps=tuple(int(t) for t in data.get("taps", ())),
        )

    @classmethod
    def from_file(cls, path: str) -> "GeneratorSpec":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        out: dict = {
            "l1": self.l1,
            "l2": self.l2,
            "c1": self.c1.to_text(),
            "c2": self.c2.to_text(),
        }
        if self.is1 is not None:
            out["is1"] = "".join(map(str, self.is1))
        if self.is2 is not None:
            out["is2"] = "".join(map(str, self.is2))
        if self.taps:
            out["taps"] = list(self.taps)
        return out

    def with_seeds(self, is1: tuple[int, ...], is2: tuple[int, ...]) -> "GeneratorSpec":
        return GeneratorSpec(self.l1, self.l2, self.c1, self.c2, is1, is2, self.taps)


def _require_seeds(spec: GeneratorSpec) -> None:
    if spec.is1 is None or spec.is2 is None:
        raise ValueError("both seeds are required to generate a keystream")


def _clocked_steps(spec: GeneratorSpec) -> Iterator[tuple[int, int, int]]:
    """Per step t: (a_t, b'_t, X_t), advancing both registers accordingly."""
    _require_seeds(spec)
    fb1 = spec.c1.mask ^ (1 << spec.l1)
    top1 = spec.l1 - 1
    state1 = 0
    assert spec.is1 is not None and spec.is2 is not None
    for k, bit in enumerate(spec.is1):
        state1 |= bit << k
    sr2 = lfsr_bit_iter(spec.c2, spec.is2)
    while True:
        bprime = next(sr2)
        x = 1
        for k, tap in enumerate(spec.taps):
            x += (state1 >> tap & 1) << k
        for _ in range(x - 1):
            next(sr2)
        yield state1 & 1, bprime, x
        new = (state1 & fb1).bit_count() & 1
        state1 = (state1 >> 1) | (new << top1)


def clocked_keystream(spec: GeneratorSpec, n: int) -> BitSeq:
    """Keystream via the variable-clock machinery; works for any tap set."""
    if n < 0:
        raise ValueError("bit count must be nonnegative")
    out = []
    for a, bprime, _ in _clocked_steps(spec):
        if len(out) >= n:
            break
        if a:
            out.append(bprime)
    return BitSeq(tuple(out[:n]))


def shrink_generate(spec: GeneratorSpec, n: int) -> BitSeq:
    """Plain shrinking generator keystream (taps must be empty)."""
    if spec.taps:
        raise ValueError("shrink_generate needs an untapped spec; use ccsg_generate")
    if n < 0:
        raise ValueError("bit count must be nonnegative")
    _require_seeds(spec)
    assert spec.is1 is not None and spec.is2 is not None
    sr1 = lfsr_bit_iter(spec.c1, spec.is1)
    sr2 = lfsr_bit_iter(spec.c2, spec.is2)
    out = []
    while len(out) < n:
        a = next(sr1)
        b = next(sr2)
        if a:
            out.append(b)
    return BitSeq(tuple(out))


def ccsg_generate(spec: GeneratorSpec, n: int) -> BitSeq:
    """Clock-controlled shrinking generator keystream (taps must be nonempty)."""
    if not spec.taps:
        raise ValueError("ccsg_generate needs at least one tap; use shrink_generate")
    return clocked_keystream(spec, n)


def decimated_stream(spec: GeneratorSpec, n: int) -> BitSeq:
    """First n bits of the irregularly decimated SR2 stream {b'_t}."""
    if n < 0:
        raise ValueError("bit count must be nonnegative")
    steps = _clocked_steps(spec)
    return BitSeq(tuple(next(steps)[1] for _ in range(n)))


def clock_counts(spec: GeneratorSpec, n: int) -> tuple[int, ...]:
    """First n clocking amounts X_0, X_1, ..."""
    if n < 0:
        raise ValueError("count must be nonnegative")
    steps = _clocked_steps(spec)
    return tuple(next(steps)[2] for _ in range(n))


@dataclass(frozen=True)
class ShrunkenStats:
    """Closed-form sequence figures for a plain shrinking generator."""

    period: int
    ones_per_period: int
    lc_lower: float
    lc_upper: int


def shrunken_stats(l1: int, l2: int) -> ShrunkenStats:
    """Period, balance, and linear-complexity bounds from the register lengths."""
    if l1 < 1 or l2 <= l1 or math.gcd(l1, l2) != 1:
        raise ValueError("need coprime lengths with l2 > l1 >= 1")
    period = ((1 << l2) - 1) << (l1 - 1)
    ones = 1 << (l1 + l2 - 2)
    upper = l2 << (l1 - 1)
    lower = l2 * 2 ** (l1 - 2) if l1 >= 2 else l2 / 2
    return ShrunkenStats(period, ones, lower, upper)
