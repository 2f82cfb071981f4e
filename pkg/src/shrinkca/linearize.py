"""Modelling a (clock-controlled) shrinking generator by 90/150 automata.

The interleaved keystream is a uniform decimation of one PN sequence: the
SR2 stream sampled at distance E = 2^l1 - 1 apart (plain shrinking), or
D = (1 + 2^w) 2^(l1-1) - 1 with w clock taps.  Its minimal polynomial is
that of lambda^E (resp. lambda^D) for a root lambda of c2; a pair of
mirror-image 90/150 automata realizes it, and (l1 - 1) concatenation steps
square the characteristic polynomial up to the full keystream length.
"""

from __future__ import annotations

from .gf2 import (
    Gf2Poly,
    RuleVector,
    _inv_mod,
    _mod_mask,
    _mul_mask,
    is_irreducible,
    min_poly_of_power,
)

__all__ = [
    "SynthesisFailed",
    "DegenerateCoset",
    "coset_exponent",
    "synthesize_ca_pair",
    "concatenate_once",
    "concatenation_chain",
    "linearize_generator",
]


class SynthesisFailed(ValueError):
    """No 90/150 rule vector has the requested characteristic polynomial."""


class DegenerateCoset(ValueError):
    """The decimation exponent's cyclotomic coset is smaller than l2.

    The decimated stream then lives in a proper subfield and the usual
    length bookkeeping breaks down; such parameter sets are rejected.
    """


def coset_exponent(l1: int, w: int) -> int:
    """Decimation distance between interleaved keystream samples.

    w = 0 is the plain shrinking generator; w >= 1 counts clock taps.
    """
    if l1 < 1:
        raise ValueError("l1 must be >= 1")
    if w < 0 or w > l1:
        raise ValueError("tap count must lie in [0, l1]")
    if w == 0:
        return (1 << l1) - 1
    return ((1 + (1 << w)) << (l1 - 1)) - 1


def synthesize_ca_pair(target: Gf2Poly) -> tuple[RuleVector, RuleVector]:
    """The two mirror-image 90/150 rule vectors with the given characteristic polynomial.

    Depth-first search over rule bits (0 before 1) with the sub-automaton
    recurrence P_i = (x + R_i) P_(i-1) + P_(i-2).  Once the head passes the
    midpoint, the cofactor B = target * P_(i-1)^(-1) mod P_i must be the
    continuant of the remaining tail, so deg B = L - i - 1 exactly; other
    residues prune the branch.  The first vector found is returned with its
    mirror (for irreducible targets these are the only two solutions).
    """
    deg = target.degree
    if deg is None or deg < 1:
        raise ValueError("target must have degree >= 1")
    if not is_irreducible(target):
        raise ValueError(f"{target.to_text()} is not irreducible")
    goal = target.mask
    found: tuple[int, ...] | None = None

    def dfs(i: int, prev: int, cur: int, rules: tuple[int, ...]) -> None:
        nonlocal found
        if found is not None:
            return
        if i == deg:
            if cur == goal:
                found = rules
            return
        if 2 * i >= deg and i >= 1:
            cofactor = _mod_mask(_mul_mask(_mod_mask(goal, cur), _inv_mod(prev, cur)), cur)
            if cofactor.bit_length() - 1 != deg - i - 1:
                return
        for r in (0, 1):
            dfs(i + 1, cur, (cur << 1) ^ (cur if r else 0) ^ prev, rules + (r,))

    dfs(0, 0, 1, ())
    if found is None:
        raise SynthesisFailed(f"no 90/150 automaton realizes {target.to_text()}")
    rv = RuleVector(found)
    return rv, rv.mirrored()


def concatenate_once(rv: RuleVector) -> RuleVector:
    """Complement the last rule, then append the mirror image.

    The result has twice the length and the squared characteristic
    polynomial.
    """
    head = rv.bits[:-1] + (rv.bits[-1] ^ 1,)
    return RuleVector(head + head[::-1])


def concatenation_chain(rv: RuleVector, steps: int) -> list[RuleVector]:
    """[rv, one concatenation, two, ...]; length steps + 1."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    chain = [rv]
    for _ in range(steps):
        chain.append(concatenate_once(chain[-1]))
    return chain


def linearize_generator(l1: int, c2: Gf2Poly, w: int = 0) -> tuple[RuleVector, RuleVector]:
    """Mirror pair of 90/150 automata modelling the full keystream.

    Each has l2 * 2^(l1-1) cells.  Raises DegenerateCoset when lambda^D
    does not generate the full field GF(2^l2).
    """
    l2 = c2.degree
    if l2 is None or l2 < 1:
        raise ValueError("c2 must have degree >= 1")
    exponent = coset_exponent(l1, w)
    base = min_poly_of_power(c2, exponent)
    if base.degree != l2:
        raise DegenerateCoset(
            f"exponent {exponent} has coset size {base.degree} < {l2} over c2 = {c2.to_text()}"
        )
    a, b = synthesize_ca_pair(base)
    for _ in range(l1 - 1):
        a, b = concatenate_once(a), concatenate_once(b)
    return a, b
