"""Text formats, importers, the seeded generator, DOT export."""

import random
from fractions import Fraction

import pytest

from lefhom import (
    ZZ,
    GeneratorConfig,
    export_dot,
    import_cubical,
    import_simplicial,
    is_augmentable,
    lefschetz_homology,
    parse_cubical,
    parse_lef,
    parse_simplicial,
    random_complex,
    render_lef,
    smith_normal_form,
)
from lefhom.errors import (
    DimensionMismatch,
    EmptyInput,
    LefSyntaxError,
    MalformedInterval,
)
from lefhom.exact import ExactMatrix


STAR_TEXT = """\
ring Z
cell a 0
cell b 0
cell c 0
cell d 0
cell e 1
kappa e a 1
kappa e b 1
kappa e c -1
kappa e d -1
"""


def test_parse_star(star):
    assert parse_lef(STAR_TEXT) == star


def test_parse_tolerates_comments_blanks_and_order():
    text = ("# a complex\n\nring Z\nkappa e a 1  # forward reference\n"
            "cell e 1\ncell a 0\n")
    X = parse_lef(text)
    assert X.kappa("e", "a") == 1


def test_parse_single_facet_is_valid():
    X = parse_lef("ring Z\ncell a 0\ncell e 1\nkappa e a 1\n")
    assert len(X) == 2


def test_parse_unknown_cell_reference_carries_line():
    with pytest.raises(LefSyntaxError) as err:
        parse_lef("ring Z\ncell e 1\nkappa e v 1\n")
    assert err.value.line_no == 3


@pytest.mark.parametrize("text,line", [
    ("cell a 0\n", 1),                              # ring must come first
    ("ring Z\nring Q\n", 2),                        # ring twice
    ("ring Zp 4\n", 1),                             # non-prime modulus
    ("ring X\n", 1),                                # unknown ring
    ("ring Z\ncell a 0\ncell a 1\n", 3),            # duplicate cell
    ("ring Z\ncell a zero\n", 2),                   # bad dimension
    ("ring Z\ncell a 0\ncell e 1\nkappa e a x\n", 4),   # bad coefficient
    ("ring Z\ncell a 0\ncell e 1\nkappa e a 1\nkappa e a 2\n", 5),  # dup kappa
    ("ring Z\nfrobnicate\n", 2),                    # unknown directive
    ("", 1),                                        # empty input
])
def test_parse_syntax_errors(text, line):
    with pytest.raises(LefSyntaxError) as err:
        parse_lef(text)
    assert err.value.line_no == line


def test_parse_prime_field_reduces_values():
    X = parse_lef("ring Zp 3\ncell a 0\ncell e 1\nkappa e a 5\n")
    assert X.kappa("e", "a") == 2
    # a coefficient that vanishes mod p is dropped entirely
    Y = parse_lef("ring Zp 3\ncell a 0\ncell e 1\nkappa e a 6\n")
    assert dict(Y.kappa_entries) == {}


def test_parse_rationals_accept_fractions():
    X = parse_lef("ring Q\ncell a 0\ncell e 1\nkappa e a 1/2\n")
    assert X.kappa("e", "a") == Fraction(1, 2)
    with pytest.raises(LefSyntaxError):
        parse_lef("ring Z\ncell a 0\ncell e 1\nkappa e a 1/2\n")


def test_render_is_canonical_and_roundtrips(corpus):
    for name, X in corpus:
        text = render_lef(X)
        again = parse_lef(text)
        assert again == X, name
        assert render_lef(again) == text, name


def test_render_orders_cells_and_kappa(star):
    lines = render_lef(star).splitlines()
    assert lines[0] == "ring Z"
    assert lines[1:6] == ["cell a 0", "cell b 0", "cell c 0", "cell d 0", "cell e 1"]
    assert lines[6:] == ["kappa e a 1", "kappa e b 1", "kappa e c -1", "kappa e d -1"]


# -- simplicial import --------------------------------------------------------


def test_import_triangle_signs():
    X = import_simplicial([("a", "b", "c")])
    assert len(X) == 7
    assert X.kappa("abc", "bc") == 1
    assert X.kappa("abc", "ac") == -1
    assert X.kappa("abc", "ab") == 1


def test_import_single_vertex():
    X = import_simplicial([("a",)])
    assert len(X) == 1 and X.top_dim == 0


def test_import_hollow_triangle_profile():
    X = import_simplicial([("a", "b"), ("b", "c"), ("a", "c")])
    assert len(X) == 6
    profile = lefschetz_homology(X)
    assert profile.free_rank(0) == 1 and profile.free_rank(1) == 1


def test_import_simplicial_multichar_vertices():
    X = import_simplicial([("v1", "v2")])
    assert sorted(c.id for c in X.cells) == ["v1", "v1_v2", "v2"]


def test_import_simplicial_empty():
    with pytest.raises(EmptyInput):
        import_simplicial([])
    with pytest.raises(EmptyInput):
        import_simplicial([()])


def test_parse_simplicial_lines():
    X = parse_simplicial("a b c\nc d\n")
    assert "abc" in X.cell_ids and "cd" in X.cell_ids


# -- cubical import -----------------------------------------------------------


def test_import_cubical_edge():
    X = import_cubical([[(0, 1)]])
    assert sorted(c.id for c in X.cells) == ["0", "0_1", "1"]
    assert X.kappa("0_1", "1") == 1
    assert X.kappa("0_1", "0") == -1


def test_import_cubical_point():
    X = import_cubical([[(0, 0)]])
    assert len(X) == 1 and X.top_dim == 0


def test_import_cubical_square():
    X = import_cubical([[(0, 1), (0, 1)]])
    assert len(X) == 9
    assert lefschetz_homology(X).is_point()


def test_import_cubical_negative_coordinates():
    X = import_cubical([[(-1, 0)]])
    assert sorted(c.id for c in X.cells) == ["0", "m1", "m1_0"]


def test_import_cubical_errors():
    with pytest.raises(DimensionMismatch):
        import_cubical([[(0, 1)], [(0, 1), (2, 2)]])
    with pytest.raises(MalformedInterval):
        import_cubical([[(0, 2)]])
    with pytest.raises(EmptyInput):
        import_cubical([])


def test_parse_cubical_lines():
    X = parse_cubical("[0,1]x[3]\n[1,2]x[3]\n")
    assert X.top_dim == 1
    assert lefschetz_homology(X).is_point()
    with pytest.raises(LefSyntaxError):
        parse_cubical("[0..1]\n")


# -- generator ----------------------------------------------------------------


def test_generator_determinism():
    for mode in ("simplicial-random", "cubical-random", "basis-change"):
        for seed in (0, 1, 42):
            cfg = GeneratorConfig(seed=seed, mode=mode)
            assert render_lef(random_complex(cfg)) == render_lef(random_complex(cfg))


def test_generator_config_validation():
    with pytest.raises(ValueError):
        GeneratorConfig(seed=0, mode="nope")
    with pytest.raises(ValueError):
        GeneratorConfig(seed=-1)
    with pytest.raises(ValueError):
        GeneratorConfig(seed=0, max_dimension=0)


def test_basis_change_zero_steps_is_identity():
    for seed in range(6):
        plain = random_complex(GeneratorConfig(seed=seed, mode="simplicial-random"))
        frozen = random_complex(GeneratorConfig(seed=seed, mode="basis-change",
                                                transform_steps=0))
        assert plain == frozen


def test_basis_change_preserves_profile_and_augmentability():
    for seed in range(80):
        cfg = GeneratorConfig(seed=seed, mode="basis-change")
        X = random_complex(cfg)
        base = random_complex(GeneratorConfig(seed=seed, mode="simplicial-random"))
        assert lefschetz_homology(X) == lefschetz_homology(base), seed
        assert is_augmentable(X), seed  # simplicial seeds are always augmentable


def test_column_operation_preserves_smith_divisors():
    # the elementary move used by the basis-change mode, in isolation:
    # adding a multiple of one column to another is unimodular
    rng = random.Random(4)
    for _ in range(30):
        rows = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        before = smith_normal_form(ExactMatrix.from_rows(rows, ZZ)).divisors
        m = rng.randint(1, 3)
        for row in rows:
            row[0] += m * row[1]
        after = smith_normal_form(ExactMatrix.from_rows(rows, ZZ)).divisors
        assert before == after


# -- DOT export ---------------------------------------------------------------


def test_export_dot_star(star):
    dot = export_dot(star)
    assert dot.count("->") == 4
    assert '"e" -> "a";' in dot
    assert "rank=same" in dot


def test_export_dot_single_cell():
    from lefhom import build_complex

    X = build_complex([("v", 0)], {}, ZZ)
    dot = export_dot(X)
    assert '"v";' in dot and "->" not in dot


def test_export_dot_triangle_edge_count():
    # facet pairs by hand: 3 edges x 2 vertices + 1 triangle x 3 edges = 9
    X = import_simplicial([("a", "b", "c")])
    assert export_dot(X).count("->") == 9
