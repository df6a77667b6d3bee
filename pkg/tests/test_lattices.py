# -*- coding: utf-8 -*-
#
#  Anticanonical heights of Galois algebra pairs (python-galoisheight)
#
#  Copyright (C) 2026 python-galoisheight developers
#
#  This file is part of python-galoisheight
#
#  This program is free software; you can redistribute it and/or
#  modify it under the terms of the MIT License.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  MIT License for more details.
#
#  You should have received a copy of the MIT License along with this
#  program; if not, see <https://opensource.org/licenses/MIT>.

from fractions import Fraction
from random import Random
from unittest import TestCase

from galoisheight.exact import HNFBasis, generalized_index
from galoisheight.fields import NumberField
from galoisheight.lattices import FractionalIdeal, KLattice, Order
from galoisheight.lattices import colon, conductor, different, disc_lattice
from galoisheight.lattices import discrepancy, discrepancy_bounds
from galoisheight.lattices import ideal_norm, ideal_radical, ideal_square_root
from galoisheight.lattices import index_relations
from galoisheight.lattices import inverse_square_root_different
from galoisheight.lattices import inverse_ideal, is_gorenstein
from galoisheight.lattices import is_invertible, is_p_maximal
from galoisheight.lattices import lattice_meet, lattice_product
from galoisheight.lattices import lattice_sum_of, maximal_order
from galoisheight.lattices import multiplier_ring, p_radical, sample_ideal
from galoisheight.lattices import trace_dual
from galoisheight.exceptions import ContainmentError, NotIdealError
from galoisheight.exceptions import NotMaximalError, NotSquareError
from galoisheight.exceptions import OrderError

from . import DEDEKIND, EISENSTEIN_ROWS, SQRT2, SQRT_M3, ZETA7


# Z[2i] inside Z[i], conductor 2 Z[i]
GAUSS_2 = NumberField([4, 0, 1])

EQUATION_M3 = Order.equation_order(SQRT_M3)
EISENSTEIN = Order(SQRT_M3, HNFBasis.from_rows(EISENSTEIN_ROWS))


def _orders():
    """Non-maximal orders used for sampling"""
    orders = [EQUATION_M3, Order.equation_order(GAUSS_2),
              Order.equation_order(DEDEKIND)]
    # Z + 3 O inside the rings of integers of quadratic fields
    for field in (SQRT2, SQRT_M3):
        ring = field.maximal_order()
        rows = [field.one().coordinates] + \
            [(e * 3).coordinates for e in ring.elements()]
        orders.append(Order(field, HNFBasis.from_rows(rows)))
    return orders


class TestOrders(TestCase):

    def test_equation_order(self):
        self.assertEqual(EQUATION_M3.basis, HNFBasis.from_rows([[1, 0],
                                                                [0, 1]]))
        self.assertEqual(EQUATION_M3.discriminant(), -12)

    def test_not_an_order(self):
        with self.assertRaises(OrderError):
            Order(SQRT2, HNFBasis.from_rows([[2, 0], [0, 1]]))
        with self.assertRaises(OrderError):
            Order(SQRT2, HNFBasis.from_rows([[1, 0], [0, Fraction(1, 2)]]))

    def test_structure_constants(self):
        constants = EQUATION_M3.structure_constants()
        # t * t = -3
        self.assertEqual(constants[1][1], [-3, 0])


class TestMaximalOrder(TestCase):

    def test_eisenstein(self):
        self.assertEqual(SQRT_M3.maximal_order(), EISENSTEIN)
        self.assertEqual(EISENSTEIN.discriminant(), -3)

    def test_monogenic_fields(self):
        self.assertEqual(ZETA7.maximal_order(), Order.equation_order(ZETA7))
        self.assertEqual(SQRT2.maximal_order(), Order.equation_order(SQRT2))

    def test_dedekind_cubic(self):
        ring = DEDEKIND.maximal_order()
        self.assertEqual(disc_lattice(ring), -503)
        equation = Order.equation_order(DEDEKIND)
        self.assertEqual(generalized_index(equation.basis, ring.basis), 2)
        self.assertTrue(is_p_maximal(ring, 2))
        self.assertFalse(is_p_maximal(equation, 2))

    def test_hint(self):
        self.assertEqual(maximal_order(SQRT_M3, hint=EISENSTEIN_ROWS),
                         EISENSTEIN)
        with self.assertRaises(NotMaximalError):
            maximal_order(SQRT_M3, hint=[[1, 0], [0, 1]])
        with self.assertRaises(NotMaximalError):
            maximal_order(SQRT_M3, hint=[[1, 0], [0, Fraction(1, 2)]])

    def test_p_radical(self):
        # 2-radical of Z[sqrt -3] is (2, 1 + t)
        radical = p_radical(EQUATION_M3, 2)
        self.assertEqual(radical.basis, HNFBasis.from_rows([[2, 0], [1, 1]]))


class TestLatticeOperations(TestCase):

    def test_sum_meet_product(self):
        first = KLattice.span(SQRT2, [[2, 0], [0, 2]])
        second = KLattice.span(SQRT2, [[3, 0], [0, 3]])
        self.assertEqual(lattice_sum_of(first, second), Order.equation_order(
            SQRT2).lattice())
        self.assertEqual(lattice_meet(first, second),
                         KLattice.span(SQRT2, [[6, 0], [0, 6]]))
        self.assertEqual(lattice_product(first, second),
                         KLattice.span(SQRT2, [[6, 0], [0, 6]]))

    def test_scale_and_contains(self):
        lattice = Order.equation_order(SQRT2).lattice()
        t = SQRT2.generator()
        scaled = lattice.scale(t)
        self.assertTrue(scaled.contains(SQRT2.rational(2)))
        self.assertFalse(scaled.contains(SQRT2.one()))
        self.assertEqual(lattice.scale(Fraction(1, 2)).volume(),
                         Fraction(1, 4))

    def test_colon_and_multiplier_ring(self):
        lattice = EISENSTEIN.lattice().scale(2)
        self.assertEqual(multiplier_ring(lattice), EISENSTEIN)
        self.assertEqual(colon(EQUATION_M3, EISENSTEIN),
                         EISENSTEIN.lattice().scale(2))
        self.assertEqual(multiplier_ring(EQUATION_M3), EQUATION_M3)

    def test_trace_dual(self):
        dual = trace_dual(SQRT2.maximal_order())
        self.assertEqual(dual.basis, HNFBasis.from_rows(
            [[Fraction(1, 2), 0], [0, Fraction(1, 4)]]))

    def test_not_an_ideal(self):
        with self.assertRaises(NotIdealError):
            FractionalIdeal(EQUATION_M3, KLattice.span(SQRT_M3, [[1, 0],
                                                                 [0, 2]]))
        with self.assertRaises(OrderError):
            ideal_norm(EQUATION_M3, KLattice.span(SQRT_M3, [[1, 0], [0, 2]]))


class TestDiscrepancy(TestCase):

    def test_conductor(self):
        cond = conductor(EQUATION_M3, EISENSTEIN)
        self.assertEqual(cond.basis, EISENSTEIN.lattice().scale(2).basis)
        with self.assertRaises(ContainmentError):
            conductor(EISENSTEIN, EQUATION_M3)

    def test_conductor_discrepancy(self):
        cond = conductor(EQUATION_M3, EISENSTEIN)
        self.assertEqual(ideal_norm(EQUATION_M3, cond), 2)
        self.assertEqual(discrepancy(EQUATION_M3, cond, EISENSTEIN), 2)
        self.assertEqual(discrepancy_bounds(EQUATION_M3, EISENSTEIN),
                         (1, 8))
        self.assertFalse(is_invertible(EQUATION_M3, cond))
        self.assertNotEqual(multiplier_ring(cond), EQUATION_M3)

    def test_index_relations_of_conductor(self):
        cond = conductor(EQUATION_M3, EISENSTEIN)
        relations = index_relations(EQUATION_M3, cond, EISENSTEIN)
        self.assertEqual([(r.lhs, r.rhs) for r in relations],
                         [(4, 2), (1, Fraction(1, 2)),
                          (Fraction(1, 2), Fraction(1, 4))])
        self.assertFalse(any(r.equal for r in relations))
        self.assertTrue(all(r.contained for r in relations))
        self.assertEqual(inverse_ideal(EQUATION_M3, cond).basis,
                         EISENSTEIN.basis)

    def test_maximal_order_discrepancy(self):
        ideal = FractionalIdeal(EISENSTEIN, EISENSTEIN.lattice().scale(2))
        self.assertEqual(discrepancy(EISENSTEIN, ideal, EISENSTEIN), 1)
        self.assertEqual(discrepancy(EQUATION_M3, EQUATION_M3), 1)

    def test_gorenstein(self):
        for order in (EQUATION_M3, Order.equation_order(ZETA7),
                      Order.equation_order(DEDEKIND)):
            self.assertTrue(is_gorenstein(order))
            self.assertEqual(discrepancy(order, different(order)), 1)

    def test_different_of_monogenic_order(self):
        # D = f'(t) Z[t] = 2t Z[t] for t^2 + 3
        diff = different(EQUATION_M3)
        expected = EQUATION_M3.lattice().scale(SQRT_M3.element([0, 2]))
        self.assertEqual(diff.basis, expected.basis)


class TestSquareRoots(TestCase):

    def test_ideal_radical(self):
        # 12 O = p^4 (3) with p = (sqrt 2) and 3 inert
        ring = SQRT2.maximal_order()
        radical = ideal_radical(ring, ring.lattice().scale(12))
        self.assertEqual(radical.basis,
                         KLattice.span(SQRT2, [[6, 0], [0, 3]]).basis)
        self.assertEqual(ideal_radical(ring, ring).basis, ring.basis)
        with self.assertRaises(ContainmentError):
            ideal_radical(ring, ring.lattice().scale(Fraction(1, 2)))

    def test_square_root_of_squares(self):
        rng = Random(9)
        ring = SQRT2.maximal_order()
        for _ in range(10):
            ideal = sample_ideal(ring, rng, bound=12)
            root = ideal_square_root(ring, lattice_product(ideal, ideal))
            self.assertEqual(root.basis, ideal.basis)

    def test_zeta7_inverse_square_root_different(self):
        # D = p^2 with p = (2 - t), so D^-1/2 = p^-1 = O + Z (4 + 3t + t^2)/7
        ring = ZETA7.maximal_order()
        ideal = inverse_square_root_different(ring)
        expected = KLattice.span(ZETA7, [[Fraction(4, 7), Fraction(3, 7),
                                          Fraction(1, 7)],
                                         [1, 0, 0], [0, 1, 0]])
        self.assertEqual(ideal.basis, expected.basis)
        self.assertEqual(lattice_product(ideal, ideal).basis,
                         trace_dual(ring).basis)
        self.assertEqual(disc_lattice(ideal), 1)

    def test_non_square_different(self):
        # D = (2 sqrt 2) = p^3 and D = (sqrt -3) are odd powers
        for field in (SQRT2, SQRT_M3):
            with self.assertRaises(NotSquareError):
                inverse_square_root_different(field.maximal_order())


class TestSampledIdeals(TestCase):

    def test_norm_discriminant_identity(self):
        rng = Random(1)
        for order in _orders():
            for _ in range(20):
                ideal = sample_ideal(order, rng, bound=12)
                norm = ideal_norm(order, ideal)
                self.assertEqual(norm ** 2 * disc_lattice(order),
                                 disc_lattice(ideal))

    def test_discrepancy_bounds(self):
        rng = Random(2)
        for order in _orders():
            maximal = order.field.maximal_order()
            lower, upper = discrepancy_bounds(order, maximal)
            for _ in range(20):
                ideal = sample_ideal(order, rng, bound=12)
                value = discrepancy(order, ideal, maximal)
                self.assertTrue(lower <= value <= upper)

    def test_projective_invariance(self):
        rng = Random(3)
        for order in _orders():
            maximal = order.field.maximal_order()
            for _ in range(5):
                ideal = sample_ideal(order, rng, bound=12)
                generator = order.field.element(
                    [rng.randint(1, 9) for _ in range(order.field.degree)])
                principal = FractionalIdeal(order,
                                            order.lattice().scale(generator))
                product_ = FractionalIdeal(order,
                                           lattice_product(principal, ideal))
                self.assertEqual(discrepancy(order, product_, maximal),
                                 discrepancy(order, ideal, maximal))

    def test_invertibility_equivalences(self):
        rng = Random(4)
        quadratic = [o for o in _orders() if o.field.degree == 2]
        for order in quadratic:
            maximal = order.field.maximal_order()
            for _ in range(20):
                ideal = sample_ideal(order, rng, bound=12)
                invertible = is_invertible(order, ideal)
                relations = index_relations(order, ideal, maximal)
                self.assertEqual(relations[0].equal, invertible)
                if invertible:
                    self.assertTrue(all(r.equal for r in relations))
                self.assertEqual(
                    discrepancy(order, ideal, maximal) == 1,
                    multiplier_ring(ideal) == order)
