"""Is a weight lattice a direct summand of the character lattice?

The answer is read off the elementary divisors of the generator matrix.
"""

from eqbundles import IntegerMatrix, LatticeInclusion, is_neutralizable
from eqbundles.fixtures import FIXTURES

for name in ["gm-square", "pgl2-mod-normalizer", "g-mod-u", "group-embedding", "pgl-v-n3"]:
    gens = IntegerMatrix(FIXTURES[name]["payload"]["generators"])
    ok, divisors = is_neutralizable(LatticeInclusion(gens))
    print(f"{name:20s} divisors {divisors}  {'summand' if ok else 'not a summand'}")
