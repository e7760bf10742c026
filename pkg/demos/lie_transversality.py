"""Filtered representations of a one-dimensional stabilizer.

The Lie algebra sits at level -1, so transversality asks the operator to
lower the filtration by at most one step.  Morphisms between such objects
are the equivariant filtered maps.
"""

from eqbundles import Filtration, RationalMatrix, category_hom, check_condition_C, pgl2_preset
from eqbundles.exact_linalg import format_rational

full = [(1, 0), (0, 1)]
raising = pgl2_preset(2, RationalMatrix([[0, 0], [1, 0]]), Filtration(2, [(0, full), (1, [(1, 0)])]))
print("xi e1 = e2, e1 at level 1:", bool(check_condition_C(raising)))

bad = pgl2_preset(2, RationalMatrix([[0, 1], [0, 0]]), Filtration(2, [(0, full), (2, [(0, 1)])]))
res = check_condition_C(bad)
print("xi e2 = e1, e2 at level 2:", bool(res))
ray, i, j, xi, w = res.violations[0]
vec = "(" + ", ".join(format_rational(x) for x in w) + ")"
print(f"  F^{i}(Lie) applied to {vec} in F^{j} leaves F^{i + j}")

nil = RationalMatrix([[0]])
low = pgl2_preset(1, nil, Filtration.trivial(1, 0))
high = pgl2_preset(1, nil, Filtration.trivial(1, 1))
print("Hom(level 0, level 1):", category_hom(low, high)[0])
print("Hom(level 1, level 0):", category_hom(high, low)[0])
