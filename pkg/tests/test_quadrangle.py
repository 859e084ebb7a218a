"""Tests for the GQ axioms, the models and isomorphism machinery."""

import pytest

from gqlab.atlas import atlas, label_of, matrix_of
from gqlab.gf2 import SYM_IDENTITY, bits6
from gqlab.pg import ALL_ONES, minor_coordinates
from gqlab.quadrangle import (
    DOUBLE_SIX_ISOMORPHISM,
    AxiomViolationError,
    NotInSError,
    build_double_six_model,
    build_matrix_quadrangle,
    build_quadric_quadrangle,
    collinear_matrices,
    collinearity,
    collinearity_graph_edges,
    doily_substructure,
    find_isomorphism,
    hyperplane_section_survey,
    make_structure,
    pair_label,
    quadric_section,
    quadric_to_matrix_map,
    verify_gq_axioms,
    verify_isomorphism,
)


def grid_gq21():
    """The 3x3 grid: rows and columns as lines, a GQ of order (2,1)."""
    points = [f"p{r}{c}" for r in range(3) for c in range(3)]
    lines = [tuple(f"p{r}{c}" for c in range(3)) for r in range(3)]
    lines += [tuple(f"p{r}{c}" for r in range(3)) for c in range(3)]
    return make_structure("grid", points, lines)


def test_grid_is_gq21():
    assert verify_gq_axioms(grid_gq21()) == (2, 1)


def test_doily_substructure_is_gq22():
    inc = doily_substructure()
    assert len(inc.points) == 15 and len(inc.lines) == 15
    assert verify_gq_axioms(inc) == (2, 2)


def test_double_six_model_is_gq24():
    inc = build_double_six_model()
    assert len(inc.points) == 27 and len(inc.lines) == 45
    assert verify_gq_axioms(inc) == (2, 4)


def test_double_six_lines_examples():
    inc = build_double_six_model()
    lines = set(inc.lines)
    assert tuple(sorted(("{1,2}", "{3,4}", "{5,6}"))) in lines
    assert tuple(sorted(("1", "{1,2}", "2'"))) in lines
    assert tuple(sorted(("1", "{2,3}", "4'"))) not in lines


def test_quadric_quadrangle_is_gq24():
    inc = build_quadric_quadrangle()
    assert len(inc.points) == 27 and len(inc.lines) == 45
    assert verify_gq_axioms(inc) == (2, 4)


def test_matrix_quadrangle_is_gq24():
    inc = build_matrix_quadrangle()
    assert len(inc.points) == 27 and len(inc.lines) == 45
    assert verify_gq_axioms(inc) == (2, 4)
    assert set(inc.points) == set(atlas().labels.values())


def test_translation_map_is_isomorphism_onto_quadric_model():
    ok, witness = verify_isomorphism(
        quadric_to_matrix_map(), build_matrix_quadrangle(), build_quadric_quadrangle()
    )
    assert ok, witness


def test_each_point_collinear_with_ten():
    for build in (build_quadric_quadrangle, build_matrix_quadrangle, build_double_six_model):
        inc = build()
        adj = collinearity(inc)
        assert all(len(adj[p]) == 10 for p in inc.points)


def test_axiom_violation_reports_witness():
    # two lines through the same point pair
    bad = make_structure(
        "bad",
        ["a", "b", "c", "d"],
        [("a", "b", "c"), ("a", "b", "d")],
    )
    with pytest.raises(AxiomViolationError):
        verify_gq_axioms(bad)


def test_collinear_matrices_examples():
    u1, v2 = matrix_of("U1"), matrix_of("V2")
    d1, u3 = matrix_of("D1"), matrix_of("U3")
    assert collinear_matrices(u1, v2)  # det(U1+V2) = 0 inside the double six
    assert collinear_matrices(d1, u3)  # det(D1+U3) = 1 in the mixed case
    assert not collinear_matrices(d1, u1)  # det(D1+U1) = 0 in the mixed case


def test_collinear_matrices_rejects_non_points():
    with pytest.raises(NotInSError):
        collinear_matrices(0, matrix_of("D1"))
    with pytest.raises(NotInSError):
        collinear_matrices(SYM_IDENTITY, matrix_of("D1"))


def test_collinearity_agrees_with_lines():
    inc = build_matrix_quadrangle()
    adj = collinearity(inc)
    pts = atlas().points
    for i, x in enumerate(pts):
        for y in pts[i + 1 :]:
            assert collinear_matrices(x, y) == (label_of(y) in adj[label_of(x)])


def test_u_and_v_are_cocliques():
    at = atlas()
    for cls in (at.u, at.v):
        for i, x in enumerate(cls):
            for y in cls[i + 1 :]:
                assert not collinear_matrices(x, y)


def test_cross_class_collinearity_misses_skew_partner_only():
    # inside the double six, U_i is collinear with every V_j except V_i
    from gqlab.planes import skew_partner

    at = atlas()
    for x in at.u:
        partner = skew_partner(x)
        for y in at.v:
            assert collinear_matrices(x, y) == (y != partner)


def test_iso_table_is_isomorphism():
    ok, witness = verify_isomorphism(
        DOUBLE_SIX_ISOMORPHISM, build_matrix_quadrangle(), build_double_six_model()
    )
    assert ok, witness


def test_corrupted_iso_table_fails_with_witness():
    corrupted = dict(DOUBLE_SIX_ISOMORPHISM)
    corrupted["D1"], corrupted["D2"] = corrupted["D2"], corrupted["D1"]
    ok, witness = verify_isomorphism(
        corrupted, build_matrix_quadrangle(), build_double_six_model()
    )
    assert not ok
    assert "maps to non-line" in witness


def test_identity_map_is_automorphism():
    inc = build_matrix_quadrangle()
    ok, witness = verify_isomorphism({p: p for p in inc.points}, inc, inc)
    assert ok, witness


def test_find_isomorphism_between_models():
    found = find_isomorphism(build_matrix_quadrangle(), build_double_six_model())
    assert found is not None
    ok, witness = verify_isomorphism(found, build_matrix_quadrangle(), build_double_six_model())
    assert ok, witness


def test_find_isomorphism_deterministic():
    a = find_isomorphism(build_matrix_quadrangle(), build_quadric_quadrangle())
    b = find_isomorphism(build_matrix_quadrangle(), build_quadric_quadrangle())
    assert a == b and a is not None


def test_find_isomorphism_rejects_different_orders():
    assert find_isomorphism(doily_substructure(), build_double_six_model()) is None
    assert find_isomorphism(grid_gq21(), doily_substructure()) is None


def test_hyperplane_survey_counts():
    survey = hyperplane_section_survey()
    assert survey.nondegenerate == 36
    assert survey.tangent == 27
    assert survey.all_gq22_pass
    for section in survey.sections:
        if section.kind == "gq22":
            assert (section.n_points, section.n_lines) == (15, 15)
        else:
            # tangent cone: the point itself plus 5 lines of 2 further points
            assert (section.n_points, section.n_lines) == (11, 5)


def test_identity_section_is_translated_d():
    at = atlas()
    section = quadric_section(ALL_ONES)
    wanted = {bits6(minor_coordinates(x ^ SYM_IDENTITY)) for x in at.d}
    assert set(section.points) == wanted
    assert verify_gq_axioms(section) == (2, 2)


def test_identity_section_isomorphic_to_doily():
    assert find_isomorphism(quadric_section(ALL_ONES), doily_substructure()) is not None


def test_collinearity_graph_edge_count():
    edges = collinearity_graph_edges()
    assert len(edges) == 135  # 27 * 10 / 2


def test_d_partners_structure():
    # every D point has 2 U partners and 2 V partners pairing under the skew
    # partnership, and 6 partners inside D
    from gqlab.planes import skew_partner

    at = atlas()
    inc = build_matrix_quadrangle()
    adj = collinearity(inc)
    u_labels = {label_of(x) for x in at.u}
    v_labels = {label_of(x) for x in at.v}
    d_labels = {label_of(x) for x in at.d}
    for y in at.d:
        near = adj[label_of(y)]
        from_u = near & u_labels
        from_v = near & v_labels
        assert len(from_u) == 2 and len(from_v) == 2
        assert {label_of(skew_partner(matrix_of(lab))) for lab in from_u} == from_v
        assert len(near & d_labels) == 6


def test_pair_label_canonical():
    assert pair_label(5, 3) == "{3,5}"
    assert pair_label(1, 2) == "{1,2}"


def test_make_structure_rejects_bad_input():
    with pytest.raises(ValueError):
        make_structure("x", ["a"], [("a", "b")])
    with pytest.raises(ValueError):
        make_structure("x", ["a", "a"], [])
