#!/usr/bin/env python3
"""Tour of the basic machinery: complexes, exact algebra, the face topology.

Run from the repository root:

    python demos/building_blocks.py
"""

from lefhom import (
    ExactMatrix,
    GF,
    QQ,
    ZZ,
    build_complex,
    closure,
    enumerate_closed_sets,
    import_cubical,
    import_simplicial,
    is_locally_closed,
    kernel_basis,
    mouth,
    open_hull,
    rank_over,
    restrict,
    smith_normal_form,
)

print("=" * 70)
print("1. Exact linear algebra")
print("=" * 70)

# Smith Normal Form works over arbitrary-precision integers: the divisors
# d1 | d2 | ... encode both the rank and the torsion of a cokernel.
m = ExactMatrix.from_rows([[2, 4], [6, 8]], ZZ)
form = smith_normal_form(m, with_transforms=True)
print("matrix [[2,4],[6,8]] has Smith divisors", form.divisors)
print("witness check: left @ M @ right == diag ->",
      (form.left_transform @ m @ form.right_transform) == form.diagonal())

m2 = ExactMatrix.from_rows([[1, 1], [-1, 1]], ZZ)
print("rank over Q:", rank_over(m2, QQ), "| rank over F2:", rank_over(m2, GF(2)))
print("kernel of [[1,1,-1,-1]] over Q has",
      len(kernel_basis(ExactMatrix.from_rows([[1, 1, -1, -1]], ZZ), QQ)),
      "basis vectors")

print()
print("=" * 70)
print("2. Building complexes")
print("=" * 70)

# Directly from cells + incidence coefficients.  Validation is eager: the
# grading and the boundary-of-boundary condition are checked on the spot.
star = build_complex(
    [("a", 0), ("b", 0), ("c", 0), ("d", 0), ("e", 1)],
    {("e", "a"): 1, ("e", "b"): 1, ("e", "c"): -1, ("e", "d"): -1},
    ZZ,
)
print("star:", star)
print("boundary matrix in degree 1 (rows a,b,c,d):",
      star.boundary_matrix(1).dense())

# From maximal simplices: all faces are generated, signs are alternating.
triangle = import_simplicial([("a", "b", "c")])
print("triangle import:", triangle, "- facets of abc:", sorted(triangle.facets("abc")))

# From elementary cubes: degenerate [k] and unit [k, k+1] intervals.
square = import_cubical([[(0, 1), (0, 1)]])
print("filled square import:", square)

print()
print("=" * 70)
print("3. The finite topology carried by the face order")
print("=" * 70)

# Closed sets are down-sets of the face order, open sets are up-sets.
print("closure of {e} in the star:", sorted(closure(star, {"e"})))
print("smallest open set around a:", sorted(open_hull(star, {"a"})))
print("mouth of {e} (closure minus the set):", sorted(mouth(star, {"e"})))

# Locally closed sets are exactly the ones that restrict to subcomplexes.
subset = {"a", "abc"}
print(f"is {sorted(subset)} locally closed in the triangle?",
      is_locally_closed(triangle, subset))
edge_star = {"ab", "abc"}
print(f"is {sorted(edge_star)} locally closed?",
      is_locally_closed(triangle, edge_star))
sub = restrict(triangle, edge_star)
print("restricting to it gives a valid complex:", sub)

closed_sets = enumerate_closed_sets(star)
print("the star has", len(closed_sets), "closed sets; the largest is",
      sorted(closed_sets[-1]))
