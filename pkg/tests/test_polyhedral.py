import random
from fractions import Fraction

import pytest

from toric_cartier.errors import (
    EmptyGeneratorsError,
    NegativeScaleError,
    NotFullDimensionalError,
    NotPointedError,
)
from toric_cartier.polyhedral import (
    Cone,
    cone_from_rays,
    dual_cone,
    face_lattice,
    hilbert_basis,
    iter_box,
    minimal_lattice_points,
    minkowski_sum,
    newton_polyhedron,
    relint_contains,
    scale_polyhedron,
    supporting_functional,
    translate_polyhedron,
)

from conftest import in_cone_span, in_hull_plus_cone


def random_pointed_cone(rng, dim=2):
    while True:
        rays = [tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(rng.randint(dim, dim + 2))]
        try:
            return cone_from_rays([r for r in rays if any(r)])
        except Exception:
            continue


class TestConeFromRays:
    def test_first_orthant_is_self_dual(self):
        c = cone_from_rays([(1, 0), (0, 1)])
        assert c.normals == ((0, 1), (1, 0))
        assert set(c.normals) == set(c.rays)

    def test_worked_cone_normals(self):
        c = cone_from_rays([(1, 0), (1, 3)])
        assert c.normals == ((0, 1), (3, -1))

    def test_line_is_rejected(self):
        with pytest.raises(NotPointedError):
            cone_from_rays([(1, 0), (-1, 0)])

    def test_half_plane_is_rejected(self):
        with pytest.raises(NotPointedError):
            cone_from_rays([(1, 0), (-1, 0), (0, 1)])

    def test_lower_dimensional_is_rejected(self):
        with pytest.raises(NotFullDimensionalError):
            cone_from_rays([(1, 0)])

    def test_empty_is_rejected(self):
        with pytest.raises(EmptyGeneratorsError):
            cone_from_rays([])

    def test_redundant_rays_are_dropped(self):
        c = cone_from_rays([(1, 0), (1, 1), (0, 1)])
        assert c.rays == ((0, 1), (1, 0))

    def test_three_dimensional_simplicial(self):
        c = cone_from_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert len(c.normals) == 3


class TestDualCone:
    def test_orthant(self):
        c = cone_from_rays([(1, 0), (0, 1)])
        assert dual_cone(c) == c

    def test_worked_cone(self):
        c = cone_from_rays([(1, 0), (1, 3)])
        assert dual_cone(c) == cone_from_rays([(0, 1), (3, -1)])

    def test_involution_on_random_cones(self):
        rng = random.Random(11)
        for _ in range(25):
            c = random_pointed_cone(rng)
            assert dual_cone(dual_cone(c)) == c


class TestDoubleDescriptionConsistency:
    def test_cone_descriptions_agree_on_box(self):
        rng = random.Random(5)
        for _ in range(10):
            c = random_pointed_cone(rng)
            for x in iter_box((-4, -4), (4, 4)):
                assert c.contains(x) == in_cone_span(c.rays, x)

    def test_polyhedron_descriptions_agree_on_box(self, worked_semigroup):
        sigma = worked_semigroup.cone
        p = newton_polyhedron([(2, 0), (1, 2)], sigma)
        for x in iter_box((-3, -3), (6, 8)):
            assert p.contains(x) == in_hull_plus_cone(p.vertices, p.recession.rays, x)


class TestNewtonPolyhedron:
    def test_single_origin_gives_the_cone(self, orthant_semigroup):
        sigma = orthant_semigroup.cone
        p = newton_polyhedron([(0, 0)], sigma)
        assert p == sigma.as_polyhedron()

    def test_two_generators_hrep(self, orthant_semigroup):
        p = newton_polyhedron([(2, 0), (0, 2)], orthant_semigroup.cone)
        assert p.hrep == (((0, 1), 0), ((1, 0), 0), ((1, 1), 2))
        assert set(p.vertices) == {(Fraction(2), Fraction(0)), (Fraction(0), Fraction(2))}

    def test_single_generator_translates_the_cone(self, worked_semigroup):
        sigma = worked_semigroup.cone
        p = newton_polyhedron([(1, 2)], sigma)
        assert p == translate_polyhedron(sigma.as_polyhedron(), (1, 2))

    def test_vertices_are_a_subset_of_generators(self, orthant_semigroup):
        gens = [(3, 0), (0, 3), (1, 1), (2, 2)]
        p = newton_polyhedron(gens, orthant_semigroup.cone)
        assert set(p.vertices) <= {tuple(map(Fraction, g)) for g in gens}

    def test_empty_generators_rejected(self, orthant_semigroup):
        with pytest.raises(EmptyGeneratorsError):
            newton_polyhedron([], orthant_semigroup.cone)


class TestScalePolyhedron:
    def test_cones_are_scale_invariant(self, worked_semigroup):
        p = worked_semigroup.cone.as_polyhedron()
        assert scale_polyhedron(p, Fraction(7, 3)) == p

    def test_vertex_scaling(self, orthant_semigroup):
        p = newton_polyhedron([(2, 0), (0, 2)], orthant_semigroup.cone)
        q = newton_polyhedron([(1, 0), (0, 1)], orthant_semigroup.cone)
        assert scale_polyhedron(p, Fraction(1, 2)) == q

    def test_scale_by_zero_gives_recession_cone(self, orthant_semigroup):
        p = newton_polyhedron([(2, 0), (0, 2)], orthant_semigroup.cone)
        assert scale_polyhedron(p, 0) == orthant_semigroup.cone.as_polyhedron()

    def test_negative_scale_rejected(self, orthant_semigroup):
        p = newton_polyhedron([(1, 1)], orthant_semigroup.cone)
        with pytest.raises(NegativeScaleError):
            scale_polyhedron(p, -1)


class TestMinkowskiSum:
    def test_translate_by_point(self, worked_semigroup):
        sigma = worked_semigroup.cone
        p = newton_polyhedron([(2, 3), (2, 4)], sigma)
        q = newton_polyhedron([(1, 2)], sigma)
        assert minkowski_sum(p, q) == translate_polyhedron(p, (1, 2))

    def test_pairwise_vertex_sums(self, orthant_semigroup):
        sigma = orthant_semigroup.cone
        p = newton_polyhedron([(2, 0), (0, 2)], sigma)
        q = newton_polyhedron([(1, 0)], sigma)
        expected = newton_polyhedron([(3, 0), (1, 2)], sigma)
        assert minkowski_sum(p, q) == expected

    def test_absorbs_recession_cone(self, worked_semigroup):
        sigma = worked_semigroup.cone
        p = newton_polyhedron([(1, 1), (2, 0)], sigma)
        assert minkowski_sum(p, sigma.as_polyhedron()) == p


class TestFaceLattice:
    def test_orthant_has_four_faces(self, orthant_semigroup):
        fl = face_lattice(orthant_semigroup.cone.as_polyhedron())
        assert len(fl) == 4
        assert sorted(f.dim for f in fl.faces) == [0, 1, 1, 2]

    def test_worked_cone_has_four_faces(self, worked_semigroup):
        fl = face_lattice(worked_semigroup.cone.as_polyhedron())
        assert len(fl) == 4

    def test_shifted_hull_has_six_faces(self, orthant_semigroup):
        p = newton_polyhedron([(2, 0), (0, 2)], orthant_semigroup.cone)
        fl = face_lattice(p)
        assert len(fl) == 6
        dims = sorted(f.dim for f in fl.faces)
        assert dims == [0, 0, 1, 1, 1, 2]
        bounded_edges = [f for f in fl.faces if f.dim == 1 and not f.ray_ids]
        assert len(bounded_edges) == 1

    def test_order_matches_active_facet_reversal(self, orthant_semigroup):
        p = newton_polyhedron([(2, 0), (0, 2)], orthant_semigroup.cone)
        fl = face_lattice(p)
        for f in fl.faces:
            for g in fl.faces:
                contained = (f.index, g.index) in fl.order
                assert contained == (f.vertex_ids <= g.vertex_ids and f.ray_ids <= g.ray_ids)
                if contained:
                    assert f.active_facets >= g.active_facets

    def test_supporting_functional_vanishes_exactly_on_face(self, worked_semigroup):
        p = translate_polyhedron(worked_semigroup.cone.as_polyhedron(), (1, 2))
        fl = face_lattice(p)
        for f in fl.faces:
            a, b = supporting_functional(p, f)
            verts = [p.vertices[i] for i in f.vertex_ids]
            assert all(sum(ai * vi for ai, vi in zip(a, v)) == b for v in verts)


class TestRelintContains:
    def test_orthant_interior(self, orthant_semigroup):
        p = orthant_semigroup.cone.as_polyhedron()
        top = face_lattice(p).top
        assert relint_contains(p, top, (1, 1))
        assert not relint_contains(p, top, (1, 0))

    def test_ray_relint_excludes_vertex(self, orthant_semigroup):
        p = orthant_semigroup.cone.as_polyhedron()
        fl = face_lattice(p)
        ray = next(f for f in fl.faces if f.dim == 1 and all(p.recession.rays[j] == (1, 0) for j in f.ray_ids))
        assert relint_contains(p, ray, (1, 0))
        assert not relint_contains(p, ray, (0, 0))

    def test_translated_cone_interior_point(self, worked_semigroup):
        p = translate_polyhedron(worked_semigroup.cone.as_polyhedron(), (1, 2))
        top = face_lattice(p).top
        assert relint_contains(p, top, (2, 3))

    def test_vertex_relint_is_the_vertex(self, worked_semigroup):
        p = translate_polyhedron(worked_semigroup.cone.as_polyhedron(), (1, 2))
        vert = next(f for f in face_lattice(p).faces if f.dim == 0)
        assert relint_contains(p, vert, (1, 2))
        assert not relint_contains(p, vert, (2, 3))


class TestHilbertBasis:
    def test_orthant(self, orthant_semigroup):
        assert hilbert_basis(orthant_semigroup.cone) == ((0, 1), (1, 0))

    def test_worked_cone(self, worked_semigroup):
        assert hilbert_basis(worked_semigroup.cone) == ((1, 0), (1, 1), (1, 2), (1, 3))

    def test_index_two_cone(self):
        c = cone_from_rays([(1, 0), (1, 2)])
        assert hilbert_basis(c) == ((1, 0), (1, 1), (1, 2))

    def test_regeneration_and_minimality(self):
        c = cone_from_rays([(1, 0), (2, 5)])
        basis = hilbert_basis(c)

        def generated_by(x, gens):
            # bounded search: subtract generators while staying in the cone
            if all(v == 0 for v in x):
                return True
            return any(
                c.contains(tuple(a - b for a, b in zip(x, g))) and generated_by(tuple(a - b for a, b in zip(x, g)), gens)
                for g in gens
            )

        box_points = [x for x in iter_box((0, -1), (6, 14)) if c.contains(x)]
        assert all(generated_by(x, basis) for x in box_points)
        for drop in basis:
            rest = tuple(g for g in basis if g != drop)
            assert not all(generated_by(x, rest) for x in box_points)


class TestMinimalLatticePoints:
    def test_translated_cone_single_minimal_point(self, worked_semigroup):
        sigma = worked_semigroup.cone
        region = translate_polyhedron(sigma.as_polyhedron(), (1, 2))
        assert minimal_lattice_points(region, sigma) == [(1, 2)]

    def test_relint_of_translated_cone(self, worked_semigroup):
        sigma = worked_semigroup.cone
        region = translate_polyhedron(sigma.as_polyhedron(), (1, 2))
        top = face_lattice(region).top
        assert minimal_lattice_points(region, sigma, face=top) == [(2, 3), (2, 4)]

    def test_relint_of_shifted_boundary_ray(self, worked_semigroup):
        sigma = worked_semigroup.cone
        region = translate_polyhedron(sigma.as_polyhedron(), (Fraction(1, 2), 1))
        fl = face_lattice(region)
        ray = next(
            f
            for f in fl.faces
            if f.dim == 1 and [region.recession.rays[j] for j in f.ray_ids] == [(1, 0)]
        )
        assert minimal_lattice_points(region, sigma, face=ray) == [(1, 1)]

    def test_antichain_and_domination_against_brute_force(self, worked_semigroup):
        from conftest import minimal_points_brute

        sigma = worked_semigroup.cone
        region = newton_polyhedron([(2, 1), (1, 3)], sigma)
        mins = minimal_lattice_points(region, sigma)
        box_pts = [x for x in iter_box((-2, -4), (8, 12)) if sigma.contains(x) and region.contains(x)]
        assert mins == minimal_points_brute(box_pts, sigma)


class TestRecessionFaceInvariant:
    def test_every_recession_face_is_a_face_recession(self, worked_semigroup):
        # each face of the recession cone appears as the recession cone
        # of some face of the polyhedron
        sigma = worked_semigroup.cone
        p = newton_polyhedron([(2, 1), (1, 3)], sigma)
        fl = face_lattice(p)
        face_recessions = {frozenset(p.recession.rays[j] for j in f.ray_ids) for f in fl.faces}
        rec_faces = face_lattice(sigma.as_polyhedron())
        for f in rec_faces.faces:
            rays = frozenset(sigma.rays[j] for j in f.ray_ids)
            assert rays in face_recessions, rays

    def test_lattice_closed_under_intersection(self, orthant_semigroup):
        p = newton_polyhedron([(2, 0), (0, 2)], orthant_semigroup.cone)
        fl = face_lattice(p)
        keys = {(f.vertex_ids, f.ray_ids) for f in fl.faces}
        for f in fl.faces:
            for g in fl.faces:
                meet = (f.vertex_ids & g.vertex_ids, f.ray_ids & g.ray_ids)
                assert not meet[0] or meet in keys
