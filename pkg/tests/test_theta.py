"""Tests for the cross-engine experiment suite."""

import pytest

from twistkit import sl2
from twistkit import symplectic as sp
from twistkit import theta
from twistkit.braid import BraidWord, equals_mod_center, left_normal_form

GroupTag = theta.GroupTag


def word(strands, *letters):
    return BraidWord(strands, tuple(letters))


# ---------------------------------------------------------------- lattice

def test_lattice_tags_frozen():
    expected = {
        (1, 1): GroupTag.SL2Z,
        (2, 1): GroupTag.SL2Z,
        (1, 2): GroupTag.MOD_GENUS_TWO,
        (1, 3): GroupTag.SYMMETRIC_MCG,
        (1, 6): GroupTag.SYMMETRIC_MCG,
        (2, 2): GroupTag.UNKNOWN,
        (2, 5): GroupTag.UNKNOWN,
        (3, 1): GroupTag.BRAID_MOD_CENTER,
        (4, 2): GroupTag.BRAID_MOD_CENTER,
        (6, 6): GroupTag.BRAID_MOD_CENTER,
    }
    for (n, k), tag in expected.items():
        assert theta.lattice_tag(n, k) is tag


def test_lattice_totality():
    # every point of the [1,6]^2 lattice gets exactly one tag
    for n in range(1, 7):
        for k in range(1, 7):
            tag = theta.lattice_tag(n, k)
            assert isinstance(tag, GroupTag)
            if n >= 3:
                assert tag is GroupTag.BRAID_MOD_CENTER
            elif k == 1:
                assert tag is GroupTag.SL2Z
            elif n == 2:
                assert tag is GroupTag.UNKNOWN
            elif k == 2:
                assert tag is GroupTag.MOD_GENUS_TWO
            else:
                assert tag is GroupTag.SYMMETRIC_MCG


def test_lattice_validation():
    for n, k in [(0, 1), (1, 0), (-2, 3)]:
        with pytest.raises(ValueError):
            theta.lattice_tag(n, k)


# ----------------------------------------------------------- presentations

def test_presentation_two_generator():
    p = theta.presentation_for(2, 1)
    assert p.tag is GroupTag.SL2Z
    assert p.generators == 2
    assert [r.name for r in p.relators] == ["braid", "center"]
    braid, center = p.relators
    assert braid.left == word(3, 1, 2, 1)
    assert braid.right == word(3, 2, 1, 2)
    assert center.left == word(3, 1, 2) ** 6
    assert center.right == word(3)
    # same group at (1,1)
    assert theta.presentation_for(1, 1).relators == p.relators


def test_presentation_braid_quotient():
    p = theta.presentation_for(5, 2)
    assert p.tag is GroupTag.BRAID_MOD_CENTER
    assert p.generators == 5
    names = [r.name for r in p.relators]
    assert names == [
        "braid-1", "braid-2", "braid-3", "braid-4",
        "commute-1-3", "commute-1-4", "commute-1-5",
        "commute-2-4", "commute-2-5", "commute-3-5",
        "center",
    ]
    center = p.relators[-1]
    assert center.left == word(6, 1, 2, 3, 4, 5) ** 6
    assert center.right == word(6)
    # the quotient presentation does not depend on the block count
    q = theta.presentation_for(3, 2)
    assert q.relators == p.relators and q.generators == p.generators


def test_presentation_braid_quotient_k1():
    # three generators, relators aba=bab, cbc=bcb, ac=ca, (abc)^4=1
    p = theta.presentation_for(3, 1)
    assert p.generators == 3
    assert [r.name for r in p.relators] == [
        "braid-1", "braid-2", "commute-1-3", "center",
    ]
    assert p.relators[2].left == word(4, 1, 3)
    assert p.relators[2].right == word(4, 3, 1)
    assert p.relators[3].left == word(4, 1, 2, 3) ** 4


def test_presentation_symmetric():
    p = theta.presentation_for(1, 3)
    assert p.tag is GroupTag.SYMMETRIC_MCG
    assert p.generators == 7
    names = [r.name for r in p.relators]
    assert len(names) == 6 + 15 + 1 + 2
    assert names[-2:] == ["involution-squared", "involution-central"]
    iota = word(8, 7, 6, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 7)
    sq, central = p.relators[-2:]
    assert sq.left == iota * iota
    assert sq.right == word(8)
    assert central.left == iota * word(8, 1)
    assert central.right == word(8, 1) * iota


def test_presentation_genus_two():
    p = theta.presentation_for(1, 2)
    assert p.tag is GroupTag.MOD_GENUS_TWO
    assert p.generators == 5
    assert len(p.relators) == 4 + 6 + 1 + 2


def test_presentation_unknown():
    p = theta.presentation_for(2, 2)
    assert p.tag is GroupTag.UNKNOWN
    assert p.generators == 5
    names = [r.name for r in p.relators]
    assert len(names) == 4 + 6 + 1 + 1
    assert names[-1] == "long-chain-power"
    long = p.relators[-1]
    assert long.left == word(6, 1, 2, 3, 4) ** 10
    assert long.right == word(6)
    assert "center" in names


def test_presentation_lattice_totality():
    for n in range(1, 7):
        for k in range(1, 7):
            p = theta.presentation_for(n, k)
            assert p.tag is theta.lattice_tag(n, k)
            assert p.relators
            assert p.blocks == n and p.handles == k


# ---------------------------------------------------------- check_relations

def test_check_relations_symplectic_all_pass():
    for n in range(1, 5):
        for k in range(1, 4):
            report = theta.check_relations("symplectic", n, k)
            assert report.experiment == "relations"
            assert report.engine == "symplectic"
            assert report.params["n"] == n and report.params["k"] == k
            assert len(report.checks) == len(theta.presentation_for(n, k).relators)
            assert all(c.status == "pass" for c in report.checks)
            assert report.status == "pass"


def test_check_relations_symplectic_witnesses():
    report = theta.check_relations("symplectic", 2, 1)
    assert [(c.name, c.witness) for c in report.checks] == [
        ("braid", "Id_4"), ("center", "Id_4"),
    ]
    assert theta.check_relations("symplectic", 1, 1).checks[0].witness == "Id_2"
    assert theta.check_relations("symplectic", 3, 1).checks[-1].witness == "Id_6"


def test_check_relations_braid_engine():
    for n, k in [(3, 1), (4, 2)]:
        report = theta.check_relations("braid", n, k)
        assert report.engine == "braid"
        assert all(c.status == "pass" for c in report.checks)
        by_name = {c.name: c.witness for c in report.checks}
        assert by_name["center"] == "Δ^2"
        assert by_name["braid-1"] == "Δ^0"


def test_check_relations_engine_errors():
    # braid engine only decides the braid-quotient presentations
    for n, k in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        with pytest.raises(ValueError):
            theta.check_relations("braid", n, k)
    with pytest.raises(ValueError):
        theta.check_relations("homology", 3, 1)
    with pytest.raises(ValueError):
        theta.check_relations("symplectic", 0, 1)


# ----------------------------------------------------------------- reports

def test_report_shape():
    report = theta.check_relations("symplectic", 3, 1)
    assert report.artifact_version == 1
    d = report.as_dict()
    assert list(d) == ["experiment", "params", "engine", "artifact_version", "checks"]
    assert all(list(c) == ["name", "status", "witness"] for c in d["checks"])


def test_report_status_ordering():
    pas = theta.Check("a", "pass", "w")
    inc = theta.Check("b", "inconclusive", "w")
    fail = theta.Check("c", "fail", "w")
    mk = lambda *checks: theta.Report("x", {}, tuple(checks), "e")
    assert mk(pas).status == "pass"
    assert mk(pas, inc).status == "inconclusive"
    assert mk(pas, inc, fail).status == "fail"


# ------------------------------------------------------------- hyperelliptic

def test_hyperelliptic_low_genus():
    for n, witness in [(1, "-Id_2"), (2, "-Id_4")]:
        report = theta.hyperelliptic_experiment(n)
        assert report.engine == "symplectic"
        assert report.params == {"n": n}
        assert [(c.name, c.status, c.witness) for c in report.checks] == [
            ("involution-image", "pass", witness),
        ]


def test_hyperelliptic_braid_side():
    report = theta.hyperelliptic_experiment(4)
    assert report.engine == "symplectic+braid"
    assert [(c.name, c.status, c.witness) for c in report.checks] == [
        ("involution-image", "pass", "-Id_8"),
        ("half-twist-square", "pass", "Δ^1"),
        ("conjugated-square", "pass", "Δ^0 · [3 4 2 1] · [1 2 4 3]"),
        ("full-twist-central", "pass", "Δ^2"),
    ]
    for n in range(1, 7):
        assert theta.hyperelliptic_experiment(n).status == "pass"


def test_hyperelliptic_validation():
    with pytest.raises(ValueError):
        theta.hyperelliptic_experiment(0)


# ------------------------------------------------------------- square roots

def test_square_root_family():
    report = theta.square_root_family(5)
    assert report.engine == "braid"
    assert report.params == {"m_max": 5}
    assert len(report.checks) == 2 * 11 + 2
    assert report.status == "pass"
    by_name = {c.name: c.witness for c in report.checks}
    assert by_name["square[3]"] == "conjugator b^3; square has normal form Δ^1"
    assert by_name["square[-5]"].startswith("conjugator b^-5")
    assert by_name["inverse-square[0]"].endswith("Δ^-1")
    assert by_name["pairwise-distinct"] == "11 distinct classes mod center"
    assert by_name["inverse-pairwise-distinct"] == "11 distinct classes mod center"


def test_square_root_family_degenerate():
    report = theta.square_root_family(0)
    assert len(report.checks) == 4
    assert report.status == "pass"
    with pytest.raises(ValueError):
        theta.square_root_family(-1)


def test_square_root_members_against_braid_layer():
    # recompute two family members directly
    b = word(4, 2)
    cab = word(4, 3, 1, 2)
    delta = word(4, 1, 2, 1, 3, 2, 1)
    for m in (-2, 4):
        h = b ** m * cab * b ** (-m)
        assert left_normal_form(h * h) == left_normal_form(delta)
        assert not equals_mod_center(h, cab) or m == 0


# -------------------------------------------------------------- root census

def test_root_census_squares():
    census = theta.root_census(2, 12)
    assert census.power == 2 and census.bound == 12
    assert set(census.buckets) == {sl2.QUARTER_TURN, sl2.QUARTER_TURN.inv()}
    assert census.counts() == {sl2.QUARTER_TURN: 21, sl2.QUARTER_TURN.inv(): 21}
    assert census.total() == 42
    assert census.residue == ()
    for canonical, certs in census.buckets.items():
        for cert in certs:
            assert isinstance(cert, sl2.ReductionCertificate)
            assert cert.canonical == canonical
            assert cert.source ** 2 == sl2.MINUS_IDENTITY


def test_root_census_cubes():
    census = theta.root_census(3, 12)
    assert set(census.buckets) == {
        sl2.SIXTH_TURN, sl2.SIXTH_TURN.inv(), sl2.MINUS_IDENTITY,
    }
    assert census.counts()[sl2.SIXTH_TURN] == 14
    assert census.counts()[sl2.SIXTH_TURN.inv()] == 14
    assert census.counts()[sl2.MINUS_IDENTITY] == 1
    assert census.total() == 29
    assert census.residue == ()
    for certs in census.buckets.values():
        for cert in certs:
            assert cert.source ** 3 == sl2.MINUS_IDENTITY


def test_root_census_validation():
    with pytest.raises(ValueError):
        theta.root_census(4, 5)
    with pytest.raises(ValueError):
        theta.root_census(2, 0)


def test_sl2_root_experiment():
    squares, cubes = theta.sl2_root_experiment(12)
    assert squares.power == 2 and cubes.power == 3
    assert squares.total() == 42 and cubes.total() == 29
    assert squares.residue == () and cubes.residue == ()


def test_root_experiment_report():
    report = theta.root_experiment_report(12)
    assert report.engine == "sl2"
    assert report.params == {"bound": 12}
    assert [(c.name, c.status, c.witness) for c in report.checks] == [
        ("anchor-square", "pass", "[[0,1],[-1,0]]"),
        ("anchor-cube", "pass", "[[0,1],[-1,1]]"),
        ("square-census", "pass", "42 matrices in 2 classes; residue empty"),
        ("cubic-census", "pass", "29 matrices in 3 classes; residue empty"),
    ]


# --------------------------------------------------------------- separation

def test_separation_evidence():
    for k in (1, 2, 3):
        report = theta.separation_evidence(k)
        assert report.experiment == "separation"
        assert report.engine == "symplectic+braid"
        assert report.params == {"k": k}
        assert [(c.name, c.status) for c in report.checks] == [
            ("long-chain-power-collapses", "pass"),
            ("long-chain-power-nontrivial-in-braid", "pass"),
            ("chain-square-comparison", "inconclusive"),
        ]
        assert report.checks[0].witness == f"Id_{4 * k}"
        assert report.checks[1].witness.startswith("Δ^0 · ")
        assert report.status == "inconclusive"
    with pytest.raises(ValueError):
        theta.separation_evidence(0)


def test_separation_matches_direct_computation():
    # recompute the k=2 facts without going through the report plumbing
    model = sp.surface_model(2, 2)
    long = word(6, 1, 2, 3, 4) ** 10
    assert sp.mats_equal(sp.evaluate_word(model, long), sp.identity_matrix(model))
    assert not equals_mod_center(long, word(6))
    left = sp.evaluate_word(model, word(6, 1, 2, 3) ** 4)
    right = sp.evaluate_word(model, word(6, 5) ** 2)
    assert sp.mats_equal(left, right)
