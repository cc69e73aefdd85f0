"""Order complexes, simplicial homology, the finite-space pipeline."""

import pytest

from lefhom import (
    GF,
    QQ,
    ZZ,
    SimplicialComplex,
    build_complex,
    finite_space_homology,
    import_simplicial,
    lefschetz_homology,
    order_complex,
    point_profile,
    relative_finite_space_homology,
    relative_simplicial_homology,
    restrict,
    simplicial_excision_check,
    simplicial_homology,
)
from lefhom import closure
from lefhom.errors import TooManySimplices, UnknownCellReference
from lefhom.formats import GeneratorConfig, random_complex


def test_order_complex_star(star):
    K = order_complex(star)
    assert set(K.simplices_of_dim(1)) == {("a", "e"), ("b", "e"), ("c", "e"), ("d", "e")}
    assert K.dim == 1 and len(K) == 9


def test_order_complex_twisted(twisted):
    K = order_complex(twisted)
    assert set(K.simplices_of_dim(1)) == {("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")}


def test_order_complex_single_cell():
    X = build_complex([("v", 0)], {}, ZZ)
    K = order_complex(X)
    assert len(K) == 1 and K.dim == 0


def test_order_complex_chain_order_refines_dimension():
    X = import_simplicial([("a", "b", "c")])
    K = order_complex(X)
    for simplex in K.simplices_of_dim(2):
        dims = [X.dim_of(v) for v in simplex]
        assert dims == sorted(dims)
        assert len(set(dims)) == len(dims)  # chains are strictly graded


def test_order_complex_cap():
    X = import_simplicial([("a", "b", "c")])
    with pytest.raises(TooManySimplices):
        order_complex(X, max_simplices=5)


def test_simplicial_homology_examples(twisted):
    four_cycle = order_complex(twisted)
    profile = simplicial_homology(four_cycle)
    assert profile.free_rank(0) == 1 and profile.free_rank(1) == 1
    cone = SimplicialComplex.from_maximal([("a", "b", "c")])
    assert simplicial_homology(cone).entries == ((0, 1, ()),)
    hollow = SimplicialComplex.from_maximal([("a", "b"), ("b", "c"), ("a", "c")])
    assert simplicial_homology(hollow).entries == ((0, 1, ()), (1, 1, ()))


def test_simplicial_complex_must_be_subset_closed():
    with pytest.raises(ValueError):
        SimplicialComplex([("a", "b")])  # vertices of the edge missing


def test_finite_space_homology_examples(star, twisted):
    assert finite_space_homology(star).entries == ((0, 1, ()),)
    sing = finite_space_homology(twisted)
    assert sing.free_rank(0) == 1 and sing.free_rank(1) == 1
    X = build_complex([("v", 0)], {}, ZZ)
    assert finite_space_homology(X).is_point()


def test_relative_finite_space_examples(star):
    rel = relative_finite_space_homology(star, {"a", "b", "c", "d"})
    assert rel.entries == ((1, 3, ()),)
    assert relative_finite_space_homology(star, star.cell_ids).is_trivial()
    assert relative_finite_space_homology(star, ()) == finite_space_homology(star)
    with pytest.raises(UnknownCellReference):
        relative_finite_space_homology(star, {"zz"})


def test_simplicial_excision_examples(star):
    K = order_complex(star)
    leaves = K.full_subcomplex({"a", "b", "c", "d"})
    assert simplicial_excision_check(leaves, K)
    assert simplicial_excision_check(K, K)
    t1 = SimplicialComplex.from_maximal([("a", "b", "c")])
    t2 = SimplicialComplex.from_maximal([("b", "c", "d")])
    assert simplicial_excision_check(t1, t2)


def test_simplicial_excision_over_rings(star):
    K = order_complex(star)
    leaves = K.full_subcomplex({"a", "b", "c", "d"})
    for ring in (ZZ, QQ, GF(2)):
        assert simplicial_excision_check(leaves, K, ring)


def test_relative_simplicial_requires_subcomplex():
    K = SimplicialComplex.from_maximal([("a", "b")])
    L = SimplicialComplex.from_maximal([("c",)])
    with pytest.raises(ValueError):
        relative_simplicial_homology(K, L)


def test_subdivision_oracle_explicit_shapes():
    shapes = [
        [("a",)],
        [("a", "b")],
        [("a", "b", "c")],
        [("a", "b"), ("b", "c"), ("a", "c")],
        [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d")],
        [("a", "b", "c"), ("c", "d")],
    ]
    for maximal in shapes:
        X = import_simplicial(maximal)
        assert lefschetz_homology(X) == finite_space_homology(X), maximal


def test_subdivision_oracle_random():
    for seed in range(40):
        cfg = GeneratorConfig(seed=seed, mode="simplicial-random",
                              max_cells_per_dim=5, max_dimension=3)
        X = random_complex(cfg)
        assert lefschetz_homology(X) == finite_space_homology(X), seed


def test_point_closure_acyclicity(corpus):
    for name, X in corpus:
        for cell in X.cells:
            sub = restrict(X, closure(X, {cell.id}))
            assert finite_space_homology(sub) == point_profile(ZZ), (name, cell.id)


def test_union_intersection_and_orders():
    t1 = SimplicialComplex.from_maximal([("a", "b", "c")])
    t2 = SimplicialComplex.from_maximal([("b", "c", "d")])
    union = t1.union(t2)
    assert len(union) == 7 + 7 - 3  # shared edge bc and its vertices
    common = t1.intersection(t2)
    assert set(common.simplices) == {frozenset("b"), frozenset("c"), frozenset("bc")}
    with pytest.raises(ValueError):
        SimplicialComplex([("x",), ("y",)], vertex_order=["x", "y"]).union(
            SimplicialComplex([("x",), ("y",)], vertex_order=["y", "x"]))


def test_vertex_order_validation():
    with pytest.raises(ValueError):
        SimplicialComplex([("a",)], vertex_order=["a", "a"])
    with pytest.raises(ValueError):
        SimplicialComplex([("a",), ("b",)], vertex_order=["a"])


def test_full_subcomplex_vertices_only(star):
    K = order_complex(star)
    L = K.full_subcomplex({"a", "e"})
    assert set(L.simplices) == {frozenset({"a"}), frozenset({"e"}), frozenset({"a", "e"})}


def test_boundary_matrix_signs():
    K = SimplicialComplex.from_maximal([("a", "b", "c")])
    mat = K.boundary_matrix(2)
    # rows: ab, ac, bc; single column abc with signs +, -, +
    assert mat.dense() == [[1], [-1], [1]]
