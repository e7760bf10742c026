"""Filtrations as graded free modules.

A filtration of a vector space is recorded by the levels of an adapted
basis.  Turning it into a graded module and back loses nothing, and
morphisms on both sides are counted the same way.
"""

from eqbundles import Filtration, fiber_at_one, fiber_at_zero, filtered_hom_dim, graded_hom_dim, rees
from eqbundles.filtration import tensor_filtration
from eqbundles.rees import tensor_module

# V = Q^3, with a plane at level 1 and a line inside it at level 3
f = Filtration(3, [(1, [(1, 0, 0), (0, 1, 1)]), (3, [(0, 1, 1)])])
print("filtration:", f)
for i in range(-1, 5):
    print(f"  F^{i} has dimension {f.level(i).dim}")

module, basis = rees(3, f)
print("generator levels:", module.levels)
print("associated graded:", fiber_at_zero(module))
print("recovered exactly:", fiber_at_one(module, basis) == f)

# Hom counts agree on both sides
g = Filtration.trivial(2, 2)
print("filtered Hom(f, g):", filtered_hom_dim(f, g))
print("graded Hom(rees f, rees g):", graded_hom_dim(module, rees(2, g)[0]))

# tensor products: levels add
t = tensor_filtration(f, g)
print("tensor jumps:", t.jump_dims())
print("same as tensor of modules:", rees(6, t)[0] == tensor_module(module, rees(2, g)[0]))
