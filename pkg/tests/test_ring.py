import random
from fractions import Fraction

import pytest

from frobdiag.catalog import complex_projective, point, product, sphere, torus
from frobdiag.linalg import Matrix
from frobdiag.ring import (GradedBasis, MissingTopClassError, RingStructure,
                           basis_element, change_basis, check_frobenius_chain,
                           check_poincare_duality, multiply, pairing_matrix,
                           unit_element, validate)


def degenerate_ring() -> RingStructure:
    """Basis 1, a, t with a.a = a.t = 0: valid ring, singular pairing."""
    basis = GradedBasis(labels=("1", "a", "t"), degrees=(0, 2, 4),
                        formal_dimension=4, unit_index=0, top_index=2)
    return RingStructure(basis, {
        (0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (0, 2, 2): 1, (2, 0, 2): 1,
    })


class TestGradedBasis:
    def test_unit_degree_must_vanish(self):
        with pytest.raises(ValueError):
            GradedBasis(labels=("a",), degrees=(1,), formal_dimension=1)

    def test_top_degree_must_match_dimension(self):
        with pytest.raises(ValueError):
            GradedBasis(labels=("1", "x"), degrees=(0, 2),
                        formal_dimension=3, top_index=1)

    def test_ring_requires_unit(self):
        basis = GradedBasis(labels=("x",), degrees=(1,), formal_dimension=1,
                            unit_index=None)
        with pytest.raises(ValueError):
            RingStructure(basis, {})


class TestValidate:
    def test_catalog_rings_are_valid(self):
        for ring in (point(), sphere(2), sphere(3), complex_projective(2),
                     complex_projective(3), torus(2),
                     product(sphere(2), sphere(2))):
            assert validate(ring).ok

    def test_rescaled_top_product_is_still_a_valid_ring(self):
        # doubling h.h only moves the pairing; no axiom involves the
        # fundamental-class normalization
        ring = complex_projective(2)
        tensor = dict(ring.tensor)
        tensor[(1, 1, 2)] = 2
        rescaled = RingStructure(ring.basis, tensor)
        assert validate(rescaled).ok
        assert pairing_matrix(rescaled) != pairing_matrix(ring)

    def test_missing_unit_product_is_reported(self):
        ring = complex_projective(2)
        tensor = dict(ring.tensor)
        del tensor[(0, 0, 0)]
        report = validate(RingStructure(ring.basis, tensor))
        assert not report.ok
        assert any(v.axiom == "unit" and v.indices == (0, 0) for v in report)

    def test_grading_violation_located(self):
        basis = GradedBasis(labels=("1", "x"), degrees=(0, 2),
                            formal_dimension=2, top_index=1)
        ring = RingStructure(basis, {(0, 0, 0): 1, (0, 1, 1): 1,
                                     (1, 0, 1): 1, (1, 1, 1): 1})
        report = validate(ring)
        assert any(v.axiom == "grading" and v.indices == (1, 1, 1)
                   for v in report)

    def test_associativity_violation_located(self):
        ring = complex_projective(3)
        tensor = dict(ring.tensor)
        tensor[(1, 2, 3)] = 2  # h.h^2 = 2h^3 but h^2.h = h^3
        report = validate(RingStructure(ring.basis, tensor))
        assert any(v.axiom == "associativity" for v in report)
        assert any(v.axiom == "graded-commutativity" for v in report)

    def test_allow_noncommutative_skips_only_that_axiom(self):
        literal_torus = product(sphere(1), sphere(1))  # no Koszul sign
        report = validate(literal_torus)
        assert any(v.axiom == "graded-commutativity" for v in report)
        assert all(v.axiom == "graded-commutativity" for v in report)
        assert validate(literal_torus, allow_noncommutative=True).ok


class TestMultiply:
    def test_cp2_generator_squares_to_top(self):
        ring = complex_projective(2)
        h = basis_element(ring, 1)
        assert multiply(ring, h, h) == basis_element(ring, 2)

    def test_unit_is_neutral(self):
        ring = complex_projective(3)
        rng = random.Random(7)
        a = tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                  for _ in range(ring.size))
        assert multiply(ring, unit_element(ring), a) == a
        assert multiply(ring, a, unit_element(ring)) == a

    def test_sphere_generator_squares_to_zero(self):
        ring = sphere(2)
        x = basis_element(ring, 1)
        assert multiply(ring, x, x) == (Fraction(0),) * 2

    def test_dimension_mismatch(self):
        ring = sphere(2)
        with pytest.raises(ValueError):
            multiply(ring, (Fraction(1),), basis_element(ring, 0))

    def test_elementwise_associativity_random_elements(self):
        rng = random.Random(11)
        for ring in (complex_projective(2), torus(2),
                     product(sphere(2), sphere(2))):
            for _ in range(5):
                a, b, c = (tuple(Fraction(rng.randint(-3, 3))
                                 for _ in range(ring.size))
                           for _ in range(3))
                left = multiply(ring, multiply(ring, a, b), c)
                right = multiply(ring, a, multiply(ring, b, c))
                assert left == right


class TestPairing:
    def test_sphere_pairing(self):
        assert pairing_matrix(sphere(2)) == Matrix([[0, 1], [1, 0]])

    def test_cp2_pairing_antidiagonal(self):
        assert pairing_matrix(complex_projective(2)) == Matrix(
            [[0, 0, 1], [0, 1, 0], [1, 0, 0]])

    def test_point_pairing(self):
        assert pairing_matrix(point()) == Matrix([[1]])

    def test_missing_top_raises(self):
        basis = GradedBasis(labels=("1",), degrees=(0,), formal_dimension=0)
        ring = RingStructure(basis, {(0, 0, 0): 1})
        with pytest.raises(MissingTopClassError):
            pairing_matrix(ring)

    def test_unit_row_is_top_indicator(self):
        for ring in (sphere(2), complex_projective(3), torus(2)):
            p = pairing_matrix(ring)
            unit = ring.basis.unit_index
            top = ring.basis.top_index
            for j in range(ring.size):
                assert p[unit, j] == Fraction(int(j == top))
                assert p[j, unit] == Fraction(int(j == top))


class TestDuality:
    def test_sphere_has_duality(self):
        assert check_poincare_duality(sphere(2))

    def test_degenerate_pairing_detected(self):
        ring = degenerate_ring()
        assert validate(ring).ok
        assert not check_poincare_duality(ring)

    def test_point_has_duality(self):
        assert check_poincare_duality(point())


class TestFrobeniusChain:
    def test_holds_on_catalog_rings(self):
        for ring in (complex_projective(2), sphere(2), sphere(5), torus(2),
                     product(complex_projective(1), complex_projective(1))):
            assert check_frobenius_chain(ring)

    def test_broken_associativity_breaks_chain(self):
        ring = complex_projective(3)
        tensor = dict(ring.tensor)
        tensor[(1, 2, 3)] = 2
        assert not check_frobenius_chain(RingStructure(ring.basis, tensor))


def random_degree_preserving_change(ring, rng):
    """Random invertible block matrix fixing the unit and top columns."""
    from collections import defaultdict

    from frobdiag.linalg import rank

    n = ring.size
    by_degree = defaultdict(list)
    for i, d in enumerate(ring.basis.degrees):
        by_degree[d].append(i)
    entries = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    fixed = {ring.basis.unit_index, ring.basis.top_index}
    for indices in by_degree.values():
        free = [i for i in indices if i not in fixed]
        if not free:
            continue
        while True:
            block = [[Fraction(rng.randint(-3, 3)) for _ in free]
                     for _ in free]
            if rank(Matrix(block)) == len(free):
                break
        for bi, i in enumerate(free):
            for bj, j in enumerate(free):
                entries[i][j] = block[bi][bj]
    return Matrix(entries)


class TestChangeBasis:
    def test_transported_ring_is_valid_with_same_invariants(self):
        rng = random.Random(3)
        ring = product(sphere(2), sphere(2))
        p = random_degree_preserving_change(ring, rng)
        moved = change_basis(ring, p)
        assert validate(moved).ok
        assert check_poincare_duality(moved)
        assert check_frobenius_chain(moved)

    def test_identity_change_is_identity(self):
        ring = complex_projective(2)
        assert change_basis(ring, Matrix.identity(ring.size)) == ring

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            change_basis(sphere(2), Matrix.identity(3))
