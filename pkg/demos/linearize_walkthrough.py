"""From generator parameters to the pair of 90/150 automata that mimic it."""

from shrinkca import (
    BitSeq,
    Gf2Poly,
    ca_generate,
    concatenation_chain,
    coset_exponent,
    decimate,
    linearize_generator,
    min_poly_of_power,
    shrink_generate,
    solve_cell_seed,
    synthesize_ca_pair,
)
from shrinkca.generators import GeneratorSpec

l1 = 4
c2 = Gf2Poly.parse("0,1,3,4,5")

dist = coset_exponent(l1, 0)
base = min_poly_of_power(c2, dist)
print(f"decimation distance {dist}, base polynomial {base}")

pair = synthesize_ca_pair(base)
print("seed automata for the base polynomial:", ", ".join(str(r) for r in pair))

print()
print("mirror-concatenation chain (each step doubles the cells and squares")
print("the characteristic polynomial):")
for step, rv in enumerate(concatenation_chain(pair[0], l1 - 1)):
    print(f"  step {step}: {rv}  ({rv.to_hex()})")

print()
final = linearize_generator(l1, c2)
for rv in final:
    assert rv.char_poly() == base ** (1 << (l1 - 1))
print("final 40-cell pair:", ", ".join(rv.to_hex() for rv in final))

print()
print("the model reproduces the generator: every interleaved keystream column")
print("is a sequence cell 1 of the automaton can emit")
spec = GeneratorSpec(l1, 5, Gf2Poly.parse("0,3,4"), c2, (1, 0, 0, 1), (1, 0, 1, 0, 1))
z = shrink_generate(spec, 248)
for col in range(3):
    column = decimate(BitSeq(z.bits), 8, col)
    st = solve_cell_seed(final[1], 1, column)
    regen = ca_generate(st, len(column))[0]
    print(f"  column {col}: {str(column)[:16]}...  regenerated: {regen.bits == column.bits}")
