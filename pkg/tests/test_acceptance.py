"""Exit criteria. Every comparison is exact integer or exact rational equality.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion
is printed at the end of the session.
"""
import random

import pytest

from conftest import CORPUS, two_squares
from oracles import cayley_geodesic_counts, free_abelian_geodesics
from racg_growth.algebra import (
    Polynomial,
    RationalFunction,
    SingularSystemError,
    poly_gcd,
    series_coefficients,
    solve_linear_system,
)
from racg_growth.formulas import (
    GroupKind,
    build_and_solve_system,
    closed_formula_raag,
    closed_formula_racg,
    example_family_formula,
    free_product_formula,
    length3_count,
    triangle_free_formula,
)
from racg_growth.geodesics import (
    Word,
    automaton_census,
    brute_census,
    build_automaton,
    is_geodesic,
    normal_form,
    raag_census_via_double,
)
from racg_growth.graph import (
    SimplicialGraph,
    check_link_regular,
    complete_graph,
    cycle_graph,
    double,
    f_polynomial,
    generate_family,
)

P = Polynomial
SEED = 20240601
RANDOM_INSTANCES = 200


def ints(xs):
    return [int(x) for x in xs]


def census(g, k):
    return list(automaton_census(build_automaton(g), k).counts)


@pytest.mark.criterion(1, "triangle: formula, linear system, automaton, brute force give [1,3,6,6,0,0,0]")
def test_c01_triangle():
    expected = [1, 3, 6, 6, 0, 0, 0]
    tri = complete_graph(3)
    assert series_coefficients(closed_formula_racg((3, 2, 1)), 6) == expected
    assert series_coefficients(build_and_solve_system((3, 2, 1)).g, 6) == expected
    assert census(tri, 6) == expected
    assert list(brute_census(tri, 6).counts) == expected
    assert cayley_geodesic_counts(3, tri.edges(), 6) == expected


@pytest.mark.criterion(2, "octahedron: four methods agree to length 12 (brute 7); exact rational form")
def test_c02_octahedron():
    g = double(complete_graph(3))
    formula = closed_formula_racg((6, 4, 2))
    assert (formula.num, formula.den) == (P([1, 0, 5, 6]), P([1, -6, 11, -6]))
    linsys = build_and_solve_system((6, 4, 2)).g
    assert (linsys.num, linsys.den) == (formula.num, formula.den)
    coeffs = ints(series_coefficients(formula, 12))
    assert coeffs[:5] == [1, 6, 30, 126, 462]
    assert ints(series_coefficients(linsys, 12)) == coeffs
    assert census(g, 12) == coeffs
    assert list(brute_census(g, 7).counts) == coeffs[:8]


@pytest.mark.criterion(3, "formula specializations q=0 and l=0 for all n <= 30")
def test_c03_specializations():
    for n in range(1, 31):
        assert triangle_free_formula(n, 0) == free_product_formula(n)
        for l in range(n):
            assert closed_formula_racg((n, l, 0)) == triangle_free_formula(n, l)


@pytest.mark.criterion(4, "linear system = closed formula on the n <= 20 grid; length-3 anchors")
def test_c04_system_grid():
    checked = 0
    for n in range(1, 21):
        for l in range(n):
            for q in range(max(l - 1, 0) + 1):
                g = closed_formula_racg((n, l, q))
                assert build_and_solve_system((n, l, q)).g == g
                assert series_coefficients(g, 3) == [1, n, n * (n - 1), length3_count(n, l)]
                checked += 1
    assert checked == sum(max(l - 1, 0) + 1 for n in range(1, 21) for l in range(n))


@pytest.mark.criterion(5, "example family k=1..8; iterated doubles of the triangle have (3k,2k,k)")
def test_c05_example_family():
    for k in range(1, 9):
        assert example_family_formula(k) == closed_formula_racg((3 * k, 2 * k, k))
    for m in range(4):
        k = 2**m
        verdict = check_link_regular(generate_family(f"triangle_double:{m}"))
        assert verdict.params.as_tuple() == (3 * k, 2 * k, k)
        assert verdict.tetra_free


ACCEPT_CORPUS = [
    "discrete:1", "discrete:2", "discrete:3", "discrete:4", "discrete:5",
    "cycle:5", "cycle:8", "2xC4", "complete_bipartite:3,3", "cycle:3",
    "triangle_double:1", "petersen", "triangle_double:2",
]


@pytest.mark.criterion(6, "corpus: automaton = brute force to length 7, = closed formula to length 12")
def test_c06_corpus():
    for name in ACCEPT_CORPUS:
        g = CORPUS[name]
        auto = census(g, 12)
        assert list(brute_census(g, 7).counts) == auto[:8], name
        verdict = check_link_regular(g)
        if verdict.in_formula_regime:
            assert ints(series_coefficients(closed_formula_racg(verdict.params), 12)) == auto, name
    regimes = {name: check_link_regular(CORPUS[name]).in_formula_regime for name in ACCEPT_CORPUS}
    assert all(regimes.values())


@pytest.mark.criterion(7, "8-cycle and two 4-cycles: identical censuses to length 50")
def test_c07_f_polynomial_instance():
    c8, squares = cycle_graph(8), two_squares()
    assert f_polynomial(c8) == f_polynomial(squares)
    assert check_link_regular(c8).params.as_tuple() == check_link_regular(squares).params.as_tuple() == (8, 2, 0)
    # non-isomorphic: one is connected, the other is not
    assert census(c8, 50) == census(squares, 50)


@pytest.mark.criterion(8, "RAAG: double-graph census = signed brute force (length 6) = RAAG formula")
def test_c08_raag():
    graphs = {
        "point": generate_family("discrete:1"),
        "discrete:2": generate_family("discrete:2"),
        "edge": complete_graph(2),
        "triangle": complete_graph(3),
    }
    for name, g in graphs.items():
        via_double = list(raag_census_via_double(g, 10).counts)
        assert list(brute_census(g, 6, GroupKind.RAAG).counts) == via_double[:7], name
        verdict = check_link_regular(g)
        assert verdict.in_formula_regime
        assert ints(series_coefficients(closed_formula_raag(verdict.params), 10)) == via_double, name
    assert list(raag_census_via_double(graphs["edge"], 6).counts) == free_abelian_geodesics(2, 6)
    assert list(raag_census_via_double(graphs["edge"], 2).counts) == [1, 4, 12]
    f2 = list(raag_census_via_double(graphs["discrete:2"], 12).counts)
    assert f2 == [1] + [4 * 3 ** (k - 1) for k in range(1, 13)]


@pytest.mark.criterion(9, "state count = f(1); doubling gives (2n,2l,2q) and four times the edges")
def test_c09_structural_laws():
    for name, g in CORPUS.items():
        assert len(build_automaton(g)) == f_polynomial(g)(1), name
        d = double(g)
        assert d.vertex_count == 2 * g.vertex_count and d.edge_count == 4 * g.edge_count
        verdict = check_link_regular(g)
        if verdict.link_regular:
            dv = check_link_regular(d)
            assert dv.params.as_tuple() == tuple(2 * x for x in verdict.params.as_tuple()), name
            assert dv.tetra_free == verdict.tetra_free


# -- criterion 10: seeded randomized laws ------------------------------------


def random_graph(rng, max_n=6):
    n = rng.randint(1, max_n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    return SimplicialGraph.from_edges(n, edges)


def random_word(rng, g, kind, max_len=8):
    k = rng.randint(0, max_len)
    if kind is GroupKind.RACG:
        return Word(tuple(rng.randrange(g.vertex_count) for _ in range(k)), kind)
    return Word(tuple((rng.randrange(g.vertex_count), rng.choice((-1, 1))) for _ in range(k)), kind)


def random_poly(rng, max_deg=4, const_one=False):
    cs = [rng.randint(-5, 5) for _ in range(rng.randint(0, max_deg + 1))]
    return P([1] + cs) if const_one else P(cs)


@pytest.mark.criterion(10, "randomized laws (200 seeded instances each): prefix closure, normal form, ring, series, solver")
def test_c10_randomized_laws():
    rng = random.Random(SEED)
    kinds = (GroupKind.RACG, GroupKind.RAAG)

    for i in range(RANDOM_INSTANCES):
        g = random_graph(rng)
        w = random_word(rng, g, kinds[i % 2])
        if is_geodesic(g, w):
            assert all(is_geodesic(g, Word(w.letters[:j], w.kind)) for j in range(len(w)))

    for i in range(RANDOM_INSTANCES):
        g = random_graph(rng)
        w = random_word(rng, g, kinds[i % 2])
        nf = normal_form(g, w)
        assert len(nf) <= len(w)
        assert normal_form(g, nf) == nf
        assert is_geodesic(g, w) == (len(nf) == len(w))

    for _ in range(RANDOM_INSTANCES):
        a, b, c = random_poly(rng), random_poly(rng), random_poly(rng)
        assert (a + b) * c == a * c + b * c
        if b:
            q, r = divmod(a, b)
            assert q * b + r == a and r.degree < b.degree
            d = poly_gcd(a, b)
            assert not a % d and not b % d

    for _ in range(RANDOM_INSTANCES):
        f = RationalFunction(random_poly(rng), random_poly(rng, 3, const_one=True))
        h = RationalFunction(random_poly(rng), random_poly(rng, 3, const_one=True))
        k = 10
        x, y = series_coefficients(f, k), series_coefficients(h, k)
        assert series_coefficients(f * h, k) == [sum(x[i] * y[m - i] for i in range(m + 1)) for m in range(k + 1)]

    solved = 0
    while solved < RANDOM_INSTANCES:
        n = rng.randint(1, 4)
        A = [[random_poly(rng, 2) for _ in range(n)] for _ in range(n)]
        b = [random_poly(rng, 2) for _ in range(n)]
        try:
            x = solve_linear_system(A, b)
        except SingularSystemError:
            continue
        solved += 1
        for row, rhs in zip(A, b):
            assert sum((RationalFunction(a) * xi for a, xi in zip(row, x)), RationalFunction(0)) == rhs


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
