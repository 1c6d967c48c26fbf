import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diambounds.bounds import Target
from diambounds.errors import BudgetExceeded, Disconnected, DomainError, EmptyPolytope, ParseError, Unbounded
from diambounds.geometry import (
    HPolytope,
    PureComplex,
    _pykernels,
    complex_corpus,
    complex_predicates,
    cross_check,
    cross_polytope,
    cross_polytope_boundary,
    cube,
    cycle,
    dual_diameter,
    enumerate_vertices,
    format_complex,
    format_hrep,
    kernels,
    octahedron_boundary,
    parse_complex,
    parse_hrep,
    polytope_corpus,
    polytope_diameter,
    prism,
    random_polytope,
    simplex,
    simplex_boundary,
    write_corpus,
)

from oracles import fraction_rank

try:
    from diambounds.geometry import _kernels
except ImportError:
    _kernels = None

BACKENDS = ["python"] + (["cython"] if _kernels is not None else [])
KERNEL_NAMES = ("rank", "mask_rank", "solve_vertices", "has_recession_ray", "adjacent_pairs", "graph_diameter")


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    if request.param == "python":
        for name in KERNEL_NAMES:
            monkeypatch.setattr(kernels, name, getattr(_pykernels, name))
    return request.param


class TestVertices:
    def test_cube(self, backend):
        vs = enumerate_vertices(cube(3))
        assert len(vs) == 8 and all(len(v.tight_facets) == 3 for v in vs)
        assert vs[0].coordinates == (0, 0, 0)

    def test_simplex(self, backend):
        assert len(enumerate_vertices(simplex(3))) == 4

    def test_cross_polytope_is_degenerate(self, backend):
        vs = enumerate_vertices(cross_polytope(3))
        assert len(vs) == 6 and all(len(v.tight_facets) == 4 for v in vs)

    def test_vertices_are_feasible_and_tight(self, backend):
        P = random_polytope(3, 10, random.Random(3))
        for v in enumerate_vertices(P):
            assert P.contains(v.coordinates)
            rows = [P.halfspaces[i][0] for i in v.tight_facets]
            assert fraction_rank(rows) == 3

    def test_rational_input(self, backend):
        P = HPolytope.from_rows([[1, 0, Fraction(1, 2)], [0, 1, Fraction(1, 3)], [-1, 0, 0], [0, -1, 0]])
        coords = {v.coordinates for v in enumerate_vertices(P)}
        assert (Fraction(1, 2), Fraction(1, 3)) in coords

    def test_empty(self, backend):
        P = HPolytope.from_rows([[1, 0, -1], [-1, 0, -1], [0, 1, 1], [0, -1, 1]])
        with pytest.raises(EmptyPolytope):
            enumerate_vertices(P)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_vertices(cross_polytope(5))
        with pytest.raises(BudgetExceeded):
            enumerate_vertices(cube(9))


class TestDiameter:
    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_cube(self, backend, d):
        assert polytope_diameter(cube(d)) == d

    @pytest.mark.parametrize("d", range(1, 7))
    def test_simplex(self, backend, d):
        assert polytope_diameter(simplex(d)) == 1

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_cross(self, backend, d):
        assert polytope_diameter(cross_polytope(d)) == 2

    def test_products_add(self, backend):
        sq, tri = cube(2), simplex(2)
        assert polytope_diameter(cube(1) * cube(1) * cube(1)) == 3
        assert polytope_diameter(prism(tri)) == 2
        assert polytope_diameter(prism(cross_polytope(3))) == 3
        assert polytope_diameter(sq * tri) == polytope_diameter(sq) + polytope_diameter(tri)

    def test_cross_polytope_perturbation_invariant(self, backend):
        P = cross_polytope(3)
        scaled = HPolytope(3, tuple((tuple(3 * x for x in a), 3 * b) for a, b in P.halfspaces))
        doubled = HPolytope(3, P.halfspaces + P.halfspaces[:2])
        assert polytope_diameter(scaled) == polytope_diameter(doubled) == polytope_diameter(P) == 2
        assert doubled.facet_count == 8

    def test_unbounded(self, backend):
        orthant = HPolytope.from_rows([[-1, 0, 0], [0, -1, 0]])
        with pytest.raises(Unbounded):
            polytope_diameter(orthant)
        slab = HPolytope.from_rows([[1, 0, 1], [-1, 0, 1]])
        with pytest.raises(Unbounded):
            polytope_diameter(slab)
        # pointed, full rank, so only the ray search can catch it
        cone = HPolytope.from_rows([[1, -1, 0, 0], [-1, -1, 0, 0], [0, 1, -1, 0], [0, 0, -1, 1]])
        assert not cone.is_bounded()
        capped = HPolytope(3, cone.halfspaces + (((0, 0, 1), 1),))
        assert capped.is_bounded()

    def test_facets_drop_redundant(self, backend):
        P = HPolytope(2, cube(2).halfspaces + (((1, 1), 5),))
        assert P.facet_count == 4


class TestKernels:
    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=9))
    def test_rank_against_fractions(self, rows):
        assert _pykernels.rank(rows) == fraction_rank(rows)
        if _kernels is not None:
            assert _kernels.rank(rows) == fraction_rank(rows)

    @pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
    def test_backends_agree_on_random_polytopes(self):
        rng = random.Random(11)
        for _ in range(25):
            d = rng.randint(2, 4)
            P = random_polytope(d, rng.randint(2 * d + 1, 12), rng)
            A, b = P.integer_system
            assert sorted(_kernels.solve_vertices(A, b, d)) == sorted(_pykernels.solve_vertices(A, b, d))
            masks = [m for _, _, m in _pykernels.solve_vertices(A, b, d)]
            assert _kernels.adjacent_pairs(A, masks, d) == _pykernels.adjacent_pairs(A, masks, d)
            assert _kernels.has_recession_ray(A, d) == _pykernels.has_recession_ray(A, d)

    @pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
    def test_overflow_falls_back(self):
        big = 10 ** 17
        A = [[big, 1], [1, big], [-big, 1], [1, -big]]
        b = [big ** 2, big ** 2, big ** 2, big ** 2]
        with pytest.raises(OverflowError):
            _kernels.solve_vertices(A, b, 2)
        assert kernels.solve_vertices(A, b, 2) == _pykernels.solve_vertices(A, b, 2)

    def test_graph_diameter(self):
        for mod in [_pykernels] + ([_kernels] if _kernels else []):
            assert mod.graph_diameter(4, [(0, 1), (1, 2), (2, 3)]) == 3
            assert mod.graph_diameter(3, [(0, 1)]) == -1
            assert mod.graph_diameter(1, []) == 0


class TestComplexes:
    def test_simplex_boundary(self, backend):
        assert dual_diameter(simplex_boundary(3)) == 1

    def test_octahedron(self, backend):
        C = octahedron_boundary()
        assert len(C.facets) == 8 and C.n == 6
        assert dual_diameter(C) == 3
        p = complex_predicates(C)
        assert p.is_pure and p.is_pseudomanifold_without_boundary and p.is_normal

    @pytest.mark.parametrize("n", range(4, 13))
    def test_cycles(self, backend, n):
        assert dual_diameter(cycle(n)) == n // 2

    def test_removing_a_facet_breaks_pseudomanifold(self):
        C = octahedron_boundary().without(0)
        p = complex_predicates(C)
        assert not p.is_pseudomanifold_without_boundary and p.is_normal

    def test_bowtie(self):
        C = PureComplex(3, 5, ({0, 1, 2}, {0, 3, 4}))
        p = complex_predicates(C)
        assert p.is_pure and not p.is_pseudomanifold_without_boundary and not p.is_normal
        with pytest.raises(Disconnected):
            dual_diameter(C)

    def test_single_facet(self):
        p = complex_predicates(PureComplex(3, 3, ({0, 1, 2},)))
        assert p.is_pure and not p.is_pseudomanifold_without_boundary

    def test_two_spheres_joined_at_vertex_not_normal(self):
        a = list(simplex_boundary(3).facets)
        b = [frozenset(v + 3 if v else 0 for v in f) for f in a]
        C = PureComplex(3, 7, tuple(a + b))
        p = complex_predicates(C)
        assert p.is_pseudomanifold_without_boundary and not p.is_normal

    def test_validation(self):
        with pytest.raises(DomainError):
            PureComplex(3, 4, ({0, 1, 2}, {0, 1}))
        with pytest.raises(DomainError):
            PureComplex(2, 4, ({0, 1}, {1, 2}))
        with pytest.raises(DomainError):
            PureComplex(2, 3, ({0, 1}, {0, 1}, {1, 2}))

    def test_cross_boundary_dual_is_cube(self):
        for d in (2, 3, 4):
            assert dual_diameter(cross_polytope_boundary(d)) == d


class TestFormats:
    def test_hrep_round_trip(self):
        P = HPolytope.from_rows([[1, Fraction(-1, 2), 3], [0, 1, Fraction(7, 3)], [-1, 0, 0], [0, -1, 0]])
        Q = parse_hrep(format_hrep(P, ("note",)))
        assert Q.halfspaces == P.halfspaces

    def test_hrep_comments_and_whitespace(self):
        P = parse_hrep("# unit square\n 2   4 \n1 0 1  # right\n\n-1 0 0\n0 1 1\n0 -1 0\n")
        assert polytope_diameter(P) == 2

    @pytest.mark.parametrize("text,line", [
        ("2 3\n1 0 1\n0 1\n-1 -1 0\n", 3),
        ("2 2\n1 0 1\n0 x 1\n", 3),
        ("2 1\n1 0 1\n0 1 1\n", 3),
        ("2 3\n1 0 1\n", 2),
        ("two 3\n", 1),
        ("2 1\n1 0 1/0\n", 2),
    ])
    def test_hrep_errors_name_line(self, text, line):
        with pytest.raises(ParseError, match=rf"^line {line}:"):
            parse_hrep(text)

    def test_complex_round_trip(self):
        C = octahedron_boundary()
        D = parse_complex(format_complex(C))
        assert set(D.facets) == set(C.facets)

    @pytest.mark.parametrize("text,line", [
        ("3 6\n0 1 2\n0 1\n", 3),
        ("2 3\n0 1\n1 5\n", 3),
        ("2 3\n0 1\n1 0\n", 3),
        ("2 3\n0 0\n", 2),
    ])
    def test_complex_errors_name_line(self, text, line):
        with pytest.raises(ParseError, match=rf"^line {line}:"):
            parse_complex(text)

    def test_complex_unused_label(self):
        with pytest.raises(ParseError, match="appear in no facet"):
            parse_complex("2 4\n0 1\n1 2\n2 0\n")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_hrep("# nothing\n")


class TestCrossCheck:
    def test_cube_equality_with_klee(self):
        rep = cross_check(cube(3), name="cube")
        klee = next(c for c in rep.cases if c.params["bound"] == "klee3d-b")
        assert (klee.lhs, klee.rhs) == ("3", "3") and rep.ok

    def test_octahedron_against_sigma_table(self):
        rep = cross_check(octahedron_boundary())
        tilde = next(c for c in rep.cases if c.params["bound"] == "tilde-sigma")
        assert (tilde.lhs, tilde.rhs) == ("3", "4") and rep.ok

    def test_four_cube_polytope_sk(self):
        rep = cross_check(cube(4), Target.DELTA_B)
        c = next(c for c in rep.cases if c.params["bound"] == "polytope-sk")
        assert c.verdict.value == "Pass" and c.rhs.startswith("(11/3)^log2(3)")

    def test_delta_u_target_for_polytopes(self):
        rep = cross_check(cube(4), "delta-u")
        assert rep.ok and any(c.params["bound"] == "tilde-delta-u" for c in rep.cases)

    def test_non_normal_complex_gets_no_sigma_bounds(self):
        # strip of triangles whose two ends pinch at vertex 0
        C = PureComplex(3, 6, ({0, 1, 2}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {0, 3, 4}))
        assert not complex_predicates(C).is_normal
        assert dual_diameter(C) == 4
        assert cross_check(C).cases == []

    def test_disconnected_complex_propagates(self):
        with pytest.raises(Disconnected):
            cross_check(PureComplex(3, 5, ({0, 1, 2}, {0, 3, 4})))

    def test_target_mismatch(self):
        with pytest.raises(ValueError):
            cross_check(cube(3), Target.SIGMA)

    def test_corpus(self, backend):
        for name, P in polytope_corpus():
            assert cross_check(P, name=name).ok, name
        for name, C in complex_corpus():
            assert cross_check(C, name=name).ok, name

    def test_corpus_files(self, tmp_path):
        paths = write_corpus(tmp_path, seed=5)
        assert len(paths) == len(polytope_corpus(5)) + len(complex_corpus())
        random_file = next(p for p in paths if p.name == "random-00.hrep")
        assert "# seed: 5" in random_file.read_text()
        assert write_corpus(tmp_path / "again", seed=5)[0].read_text() == paths[0].read_text()

    def test_random_corpus_shape(self):
        rnd = [P for name, P in polytope_corpus() if name.startswith("random")]
        assert len(rnd) == 20
        assert all(P.d <= 4 and P.m <= 12 and P.is_bounded() for P in rnd)


def test_simplex_combinatorics_brute_force():
    # every pair of simplex vertices shares d-1 tight facets
    for d in range(2, 6):
        P = simplex(d)
        vs = enumerate_vertices(P)
        for u, v in combinations(vs, 2):
            assert len(u.tight_facets & v.tight_facets) == d - 1
