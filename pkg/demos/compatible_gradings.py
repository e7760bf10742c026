"""When do several filtrations share one grading?

Two filtrations of a space always admit a common adapted basis.  Three
generic lines in a plane do not, and the search reports how far the piece
dimensions overshoot.
"""

from eqbundles import Filtration, MultiFiltration, check_condition_K, verify_grading
from eqbundles.exact_linalg import format_rational


def line(v):
    return Filtration(2, [(1, [v])])


mf = MultiFiltration(2, {"a": line((1, 0)), "b": line((0, 1)), "c": line((1, 1))})

two = check_condition_K(mf, ["a", "b"])
print("rays a, b:")
for tup, piece in two.pieces:
    print(f"  {tup}: spanned by", [[format_rational(x) for x in v] for v in piece.basis])
print("  certified:", verify_grading(mf, ["a", "b"], two))

three = check_condition_K(mf, ["a", "b", "c"])
print("rays a, b, c:", three.summary())
for tup, d in sorted(three.piece_dims.items()):
    print(f"  piece {tup} has dimension {d}")
