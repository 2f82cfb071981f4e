"""Tour of the two keystream generators and the structure of their output."""

from shrinkca import (
    BitSeq,
    GeneratorSpec,
    Gf2Poly,
    ccsg_generate,
    clock_counts,
    decimate,
    decimated_stream,
    linear_complexity,
    lfsr_generate,
    shrink_generate,
    shrunken_stats,
)
from shrinkca.engines import LfsrState

spec = GeneratorSpec(
    l1=3,
    l2=4,
    c1=Gf2Poly.parse("0,2,3"),
    c2=Gf2Poly.parse("0,1,4"),
    is1=(1, 0, 0),
    is2=(1, 0, 0, 0),
)

print("== plain shrinking generator ==")
print("control register SR1:", lfsr_generate(LfsrState(spec.c1, spec.is1), 14))
print("data register SR2:   ", lfsr_generate(LfsrState(spec.c2, spec.is2), 15))
z = shrink_generate(spec, 60)
print("shrunken keystream:  ", str(z)[:24], "...")

stats = shrunken_stats(spec.l1, spec.l2)
z2 = list(shrink_generate(spec, 2 * stats.period))
print(f"period {stats.period} (verified: {z2[:stats.period] == z2[stats.period:]})")
print(f"ones per period {stats.ones_per_period} (counted: {sum(z2[:stats.period])})")
print(
    f"linear complexity in ({stats.lc_lower}, {stats.lc_upper}]:",
    linear_complexity(z2),
)

print()
print("== clock-controlled variant ==")
clocked = GeneratorSpec(3, 4, spec.c1, spec.c2, spec.is1, spec.is2, taps=(0,))
print("step widths:     ", " ".join(map(str, clock_counts(clocked, 19))))
print("decimated SR2:   ", decimated_stream(clocked, 20))
print("clocked keystream:", ccsg_generate(clocked, 12))

print()
print("== interleaving structure ==")
# the keystream is 2^(l1-1) interleaved columns, each a shifted copy of one
# PN-sequence obtained by regularly decimating SR2
d = 1 << (spec.l1 - 1)
full = BitSeq(tuple(z2[: stats.period] * 2))
for col in range(d):
    print(f"column {col}:", str(decimate(full, d, col))[:15], "...")
