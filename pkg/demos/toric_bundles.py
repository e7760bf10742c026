"""Equivariant vector bundles on P^1 and P^1 x P^1 from filtrations.

Each maximal cone gets a chart with characters read off a grading; the
charts are glued by transition matrices whose entries are monomials.
"""

from eqbundles import Fan, Filtration, MultiFiltration, Ray, build_charts, build_transitions, global_sections
from eqbundles.klyachko_bundle import check_cocycle, check_regularity

p1 = Fan(1, [Ray("+", (1,)), Ray("-", (-1,))], [("+",), ("-",)])
print("line bundles on P^1: h0 of O(n)")
for n in range(-2, 5):
    mf = MultiFiltration(1, {"+": Filtration.trivial(1, n), "-": Filtration.trivial(1, 0)})
    print(f"  n = {n:2d}: h0 = {global_sections(p1, mf)[0]}")

rays = [Ray("x+", (1, 0)), Ray("x-", (-1, 0)), Ray("y+", (0, 1)), Ray("y-", (0, -1))]
square = Fan(2, rays, [("x+", "y+"), ("x-", "y+"), ("x-", "y-"), ("x+", "y-")])
full = [(1, 0), (0, 1)]
mf = MultiFiltration(
    2,
    {
        "x+": Filtration(2, [(0, full), (1, [(1, 0)])]),
        "x-": Filtration(2, [(0, full), (1, [(0, 1)])]),
        "y+": Filtration(2, [(0, full), (2, [(1, 1)])]),
        "y-": Filtration.trivial(2),
    },
)
charts = build_charts(square, mf)
for c in charts:
    print(f"chart {c.cone}: characters {c.row_characters}")
transitions = build_transitions(charts)
t = transitions[0]
print(f"transition {t.source_cone} -> {t.target_cone}:")
for i in range(2):
    print("  ", [f"{t.coefficients[i, j]}*x^{t.characters[i][j]}" for j in range(2)])
print("cocycle:", check_cocycle(transitions))
print("regular:", bool(check_regularity(square, transitions)))
h0, chars = global_sections(square, mf)
print("h0 =", h0, "from characters", chars)
