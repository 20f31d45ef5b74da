import pytest

from tspp.dets import DetRoute, a_nk_via_det, binom
from tspp.paths import (
    WU,
    LatticePath,
    Model,
    PathFamily,
    SignRule,
    allowed_steps,
    dualise_e_to_h,
    dualise_e_to_mixed,
    e_end,
    e_start,
    e_start_primed,
    enumerate_families,
    family_weight,
    gf_model,
    h_start,
    h_start_primed,
    label_weight,
    lgv_mixed_start_det,
    mixed_end,
    single_path_gf,
    validate_family,
)
from tspp.ring import ONE, ZERO, LaurentPoly, parse_poly
from tspp.schur import elementary_e

GRID = [(n, k) for n in range(1, 4) for k in range(0, 3)]
DUAL_SIZES = [(1, 0), (1, 1), (2, 0), (2, 1), (3, 1)]


def walk(corners):
    """Unit-step points along straight segments between corners."""
    pts = [corners[0]]
    for a, b in corners[1:]:
        while pts[-1] != (a, b):
            x, y = pts[-1]
            pts.append((x + (a > x) - (a < x), y + (b > y) - (b < y)))
    return pts


@pytest.fixture(scope="module")
def rank_4_1_family():
    """The rank (4,1) e-family drawn with 7 variables and start choice {S2'}."""
    want = [
        walk([(0, 0), (1, 0), (1, 1), (3, 1), (3, 2), (4, 2), (4, 3)]),
        walk([(2, -4), (3, -3), (4, -4), (4, -1), (5, -1), (5, 2)]),
        walk([(-2, 2), (1, 2), (1, 3), (3, 3), (3, 4)]),
        walk([(-3, 3), (-2, 3), (-2, 4), (0, 4), (0, 5), (2, 5)]),
    ]
    found = [
        f
        for f in enumerate_families(Model.E, 4, 1, 7, primes={2})
        if all(p.points() == w for p, w in zip(f.paths, want))
    ]
    assert len(found) == 1
    return found[0]


def test_special_points():
    assert e_start(3, 1) == (-2, 2)
    assert e_start_primed(2, 1) == (2, -4)
    assert e_end(1, 2, 1, 3) == (3, 0)
    assert h_start(1, 4) == (-3, 3)
    assert h_start_primed(4, 4, 1) == (2, -2)
    assert mixed_end(3, 1) == (2, -6)


def test_label_weight():
    assert label_weight(0) == ONE
    assert label_weight(3) == LaurentPoly.x(3)
    assert label_weight(WU) == LaurentPoly.monomial(1, u=-1, w=1)


def test_step_tables():
    # E: upper region only, region B only, and the overlap on the diagonal
    assert set(allowed_steps(Model.E, 0, 1, 1, 3)) == {(1, 0, 2), (0, 1, 0)}
    assert set(allowed_steps(Model.E, 3, -5, 1, 3)) == {(1, -1, WU), (1, 1, 0)}
    assert set(allowed_steps(Model.E, 2, -2, 1, 3)) == {(1, 0, 1), (0, 1, 0), (1, -1, WU)}
    assert set(allowed_steps(Model.H, -1, 1, 1, 3)) == {(-1, 1, 1), (0, 1, 0)}
    assert set(allowed_steps(Model.H, 3, -5, 1, 3)) == {(0, 2, WU), (1, 1, 0)}
    assert (1, -1, 2) in allowed_steps(Model.MIXED, 1, 0, 1, 3)
    assert (0, -2, WU) in allowed_steps(Model.MIXED, 3, -5, 1, 3)


def test_lattice_path():
    p = LatticePath((0, 0), ((1, 0), (0, 1), (1, -1)), (1, 0, WU))
    assert p.points() == [(0, 0), (1, 0), (1, 1), (2, 0)]
    assert p.end == (2, 0)
    assert p.weight() == LaurentPoly.monomial(1, u=-1, w=1, x1=1)


def test_e_one_one_families():
    fams = enumerate_families(Model.E, 1, 1)
    assert len(fams) == 2
    weights = sorted(str(family_weight(f)) for f in fams)
    assert weights == sorted(["v", "r*u*x1*x2"])
    unprimed = [f for f in fams if not f.chosen][0]
    assert unprimed.paths[0].labels.count(0) == 0


def test_mixed_empty_family():
    fams = [f for f in enumerate_families(Model.MIXED, 2, 1) if not f.chosen]
    assert len(fams) == 1 and fams[0].paths == ()
    assert family_weight(fams[0]) == LaurentPoly.monomial(1, v=3)


@pytest.mark.parametrize("model", list(Model))
def test_gf_examples(model):
    assert gf_model(model, 1, 1, 2) == parse_poly("v + r*u*x1*x2")


def test_parameter_checks():
    with pytest.raises(ValueError):
        enumerate_families(Model.E, 0, 1)
    with pytest.raises(ValueError):
        enumerate_families(Model.E, 2, -1)
    with pytest.raises(ValueError):
        enumerate_families(Model.E, 2, 1, 2)


@pytest.mark.parametrize("n,k", GRID)
def test_model_equivalence(n, k):
    det = a_nk_via_det(DetRoute.DJT, n, k, n + k)
    assert det == a_nk_via_det(DetRoute.JT, n, k, n + k) == a_nk_via_det(DetRoute.G2, n, k, n + k)
    for model in Model:
        assert gf_model(model, n, k) == det, model


@pytest.mark.parametrize("n,k", [(1, 0), (1, 1), (2, 1), (3, 1)])
def test_enumeration_agrees_with_fast_gf(n, k):
    for model in Model:
        fams = enumerate_families(model, n, k)
        total = ZERO
        for f in fams:
            assert validate_family(f) == []
            total = total + family_weight(f)
        assert total == gf_model(model, n, k)


@pytest.mark.parametrize("n,k", GRID)
def test_single_path_gfs(n, k):
    N = n + k
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            plain = single_path_gf(Model.E, n, k, N, (i, False), j)
            assert plain == LaurentPoly.monomial(1, r=1, u=i) * elementary_e(n + k + i - j, N)
            dip = ZERO
            for m in range(i, n + 2 - j):
                dip = dip + elementary_e(n + 1 - j - m, N) * LaurentPoly.monomial(binom(m - 1, m - i), u=i - m, w=m - i)
            assert single_path_gf(Model.E, n, k, N, (i, True), j) == LaurentPoly.monomial(1, v=i) * dip


def _e_matrices(n, k):
    N = n + k
    P = [[single_path_gf(Model.E, n, k, N, (i, False), j, False) for j in range(1, n + 1)] for i in range(1, n + 1)]
    Pp = [[single_path_gf(Model.E, n, k, N, (i, True), j, False) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return P, Pp


@pytest.mark.parametrize("n,k", GRID)
def test_lgv_first_rule_gives_djt(n, k):
    P, Pp = _e_matrices(n, k)
    a = [LaurentPoly.monomial(1, r=1, u=i) for i in range(1, n + 1)]
    b = [LaurentPoly.monomial(1, v=i) for i in range(1, n + 1)]
    assert lgv_mixed_start_det(P, Pp, a, b, SignRule.FIRST) == a_nk_via_det(DetRoute.DJT, n, k, n + k)


@pytest.mark.parametrize("n,k", GRID)
def test_lgv_second_rule_gives_jt(n, k):
    N = size = n + k
    rows = range(1, size + 1)
    P = [[single_path_gf(Model.H, n, k, N, (i, False), j, False) for j in rows] for i in rows]
    Pp = [[single_path_gf(Model.H, n, k, N, (i, True), j, False) if i <= n else ZERO for j in rows] for i in rows]
    a = [LaurentPoly.monomial(1, v=n + 1 - i) if i <= n else ONE for i in rows]
    b = [LaurentPoly.monomial(1, r=1, u=n + 1 - i) if i <= n else ZERO for i in rows]
    assert lgv_mixed_start_det(P, Pp, a, b, SignRule.SECOND) == a_nk_via_det(DetRoute.JT, n, k, N)


def test_lgv_degenerate_cases():
    P, Pp = _e_matrices(2, 1)
    a = [LaurentPoly.monomial(1, r=1, u=i) for i in (1, 2)]
    from tspp.ring import poly_det

    classical = poly_det([[a[i] * P[i][j] for j in range(2)] for i in range(2)])
    assert lgv_mixed_start_det(P, Pp, a, [ZERO, ZERO]) == classical
    p, q = [[LaurentPoly.x(1)]], [[LaurentPoly.x(2)]]
    for rule in SignRule:
        assert lgv_mixed_start_det(p, q, [ONE], [ONE], rule) == LaurentPoly.x(1) + LaurentPoly.x(2)
    with pytest.raises(ValueError):
        lgv_mixed_start_det(p, P, [ONE], [ONE])


@pytest.mark.parametrize("n,k", DUAL_SIZES)
def test_dualisation_bijections(n, k):
    e_fams = enumerate_families(Model.E, n, k)
    for dual, model in ((dualise_e_to_h, Model.H), (dualise_e_to_mixed, Model.MIXED)):
        images = [dual(f) for f in e_fams]
        keys = {(g.chosen, g.paths) for g in images}
        assert len(keys) == len(e_fams)
        assert len(keys) == len(enumerate_families(model, n, k))
        for f, g in zip(e_fams, images):
            assert g.model is model
            assert validate_family(g) == []
            assert family_weight(g) == family_weight(f)


def test_dualisation_small_cases():
    fams = {bool(f.chosen): f for f in enumerate_families(Model.E, 1, 0)}
    h = dualise_e_to_h(fams[False])
    assert h.start_labels() == ("~S1'",)
    assert family_weight(h) == parse_poly("r*u*x1")
    h = dualise_e_to_h(fams[True])
    assert h.start_labels() == ("~S1",)
    assert family_weight(h) == parse_poly("v")
    fams = {bool(f.chosen): f for f in enumerate_families(Model.E, 1, 1)}
    m = dualise_e_to_mixed(fams[False])
    assert m.chosen == {1} and m.paths[0].start == e_start(1, 1) and m.paths[0].end == mixed_end(1, 1)
    assert dualise_e_to_mixed(fams[True]).paths == ()


def test_dualisation_rejects_wrong_model():
    f = enumerate_families(Model.H, 1, 0)[0]
    with pytest.raises(ValueError):
        dualise_e_to_h(f)
    with pytest.raises(ValueError):
        dualise_e_to_mixed(f)


def test_rank_4_1_family(rank_4_1_family):
    assert validate_family(rank_4_1_family) == []
    assert rank_4_1_family.start_labels() == ("S1", "S2'", "S3", "S4")
    assert family_weight(rank_4_1_family) == parse_poly("r^3*u^7*v^2*w*x1^3*x2*x3^3*x4^3*x5*x6^3*x7")


def test_rank_4_1_h_dual(rank_4_1_family):
    h = dualise_e_to_h(rank_4_1_family)
    assert h.start_labels() == ("~S1'", "~S2'", "~S3", "~S4'", "~S5")
    drawn = [
        walk([(2, -8), (5, -5), (5, -2), (4, -1), (4, 1), (2, 3), (2, 4), (1, 5), (1, 6)]),
        [(2, -6), (3, -5)] + walk([(3, -3), (3, 0), (2, 1), (2, 2), (1, 3), (1, 4), (0, 5), (0, 7)]),
        walk([(-1, 1), (-3, 3), (-3, 10)]),
        walk([(2, -2), (2, 0), (0, 2), (0, 3), (-1, 4), (-1, 8)]),
        walk([(1, -1), (0, 0), (0, 1), (-1, 2), (-1, 3), (-2, 4), (-2, 9)]),
    ]
    assert [p.points() for p in h.paths] == drawn
    assert family_weight(h) == family_weight(rank_4_1_family)


def test_rank_4_1_mixed_dual(rank_4_1_family):
    m = dualise_e_to_mixed(rank_4_1_family)
    assert m.chosen == {1, 3, 4}
    assert validate_family(m) == []
    pts = [p.points() for p in m.paths]
    assert pts[0] == [(0, 0), (1, 0), (1, 1), (2, 0), (2, -1), (2, -2)]
    assert pts[1] == walk([(-2, 2), (1, 2), (1, 3), (2, 2), (2, 1), (3, 0), (3, -3)]) + [(3, -5), (2, -6)]
    assert pts[2] == walk(
        [(-3, 3), (-2, 3), (-2, 4), (0, 4), (0, 5), (1, 5), (2, 4), (2, 3), (4, 1), (4, -1), (5, -2), (5, -5), (2, -8)]
    )
    assert family_weight(m) == family_weight(rank_4_1_family)


def test_validate_family_catches_collisions():
    f = enumerate_families(Model.E, 2, 0)[0]
    bad = PathFamily(f.model, f.n, f.k, f.N, f.chosen, f.indices, (f.paths[0], f.paths[0]), f.ends)
    assert validate_family(bad)
