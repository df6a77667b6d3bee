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
from unittest import TestCase

from galoisheight.exact import RealEnclosure
from galoisheight.fields import GaloisAction, NumberField
from galoisheight.fields import apply_automorphism, verify_galois
from galoisheight.groups import FiniteGroup
from galoisheight.exceptions import DegreeError, DimensionError
from galoisheight.exceptions import DivisionByZero, GaloisError
from galoisheight.exceptions import SquarefreeError

from . import C2, C3, SQRT2, SQRT2_ACTION, SQRT_M3, ZETA7, ZETA7_ACTION
from . import ZETA7_SELFDUAL


class TestNumberField(TestCase):

    def test_construction(self):
        self.assertEqual(ZETA7.degree, 3)
        self.assertEqual(ZETA7.min_poly, (-1, -2, 1, 1))
        self.assertEqual(repr(ZETA7), "NumberField([-1, -2, 1, 1])")
        self.assertEqual(ZETA7.discriminant(), 49)

    def test_invalid_polynomials(self):
        with self.assertRaises(DegreeError):
            NumberField([5])
        with self.assertRaises(DegreeError):
            NumberField([1, 0, 2])
        with self.assertRaises(DegreeError):
            NumberField([-1, 0, 1])
        with self.assertRaises(SquarefreeError):
            NumberField([1, 2, 1])

    def test_power_traces(self):
        self.assertEqual([ZETA7.power_trace(k) for k in range(5)],
                         [3, -1, 5, -4, 13])

    def test_totally_real(self):
        self.assertTrue(ZETA7.is_totally_real())
        self.assertTrue(SQRT2.is_totally_real())
        self.assertFalse(SQRT_M3.is_totally_real())

    def test_degree_one(self):
        field = NumberField([0, 1])
        self.assertEqual(field.generator(), 0)
        self.assertEqual(field.rational(3).inverse(), Fraction(1, 3))


class TestFieldElement(TestCase):

    def test_arithmetic(self):
        t = SQRT2.generator()
        self.assertEqual(t * t, 2)
        self.assertEqual((1 + t).inverse(), SQRT2.element([-1, 1]))
        self.assertEqual((1 + t) / (1 + t), 1)
        x = ZETA7.element([1, 2, 3])
        self.assertEqual(x * x.inverse(), ZETA7.one())
        self.assertEqual(x ** -1, x.inverse())

    def test_zero_inverse(self):
        with self.assertRaises(DivisionByZero):
            ZETA7.zero().inverse()

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionError):
            ZETA7.element([1, 2])
        with self.assertRaises(DimensionError):
            ZETA7.generator() + SQRT2.generator()

    def test_trace_and_norm(self):
        self.assertEqual(ZETA7.one().trace(), 3)
        self.assertEqual(ZETA7.generator().trace(), -1)
        # norm(t) = (-1)^d f(0)
        self.assertEqual(ZETA7.generator().norm(), 1)
        self.assertEqual(SQRT2.generator().norm(), -2)
        x = ZETA7.element([2, -1, 5])
        self.assertEqual((x * x).trace(), sum(
            (ZETA7_ACTION.apply(g, x) ** 2).trace()
            for g in C3.elements()) / 3)

    def test_selfdual_trace_form(self):
        x = ZETA7.element(ZETA7_SELFDUAL)
        self.assertEqual(x.trace(), 1)
        self.assertEqual((x * x).trace(), 1)
        for g in (1, 2):
            self.assertEqual((x * ZETA7_ACTION.apply(g, x)).trace(), 0)

    def test_rational(self):
        self.assertTrue(ZETA7.rational(5).is_rational())
        self.assertEqual(ZETA7.rational(5).rational(), 5)
        with self.assertRaises(DimensionError):
            ZETA7.generator().rational()


class TestGaloisAction(TestCase):

    def test_generator_order(self):
        t = ZETA7.generator()
        value = t
        for _ in range(3):
            value = apply_automorphism(ZETA7_ACTION, 1, value)
        self.assertEqual(value, t)
        self.assertEqual(ZETA7_ACTION.images[2], ZETA7.element([1, -1, -1]))

    def test_invariance(self):
        x = ZETA7.element([Fraction(1, 2), 3, -4])
        for g in C3.elements():
            image = ZETA7_ACTION.apply(g, x)
            self.assertEqual(image.trace(), x.trace())
            self.assertEqual(image.norm(), x.norm())
        self.assertEqual(ZETA7_ACTION.apply(0, x), x)

    def test_verify_galois(self):
        self.assertTrue(verify_galois(ZETA7, ZETA7_ACTION))
        self.assertTrue(verify_galois(SQRT2, SQRT2_ACTION))
        trivial = FiniteGroup.cyclic(1)
        field = NumberField([-1, 1])
        action = GaloisAction(field, trivial, [field.generator()])
        self.assertTrue(verify_galois(field, action))

    def test_verify_galois_failures(self):
        wrong_order = GaloisAction(ZETA7, C2, [ZETA7.generator(),
                                               ZETA7.element([-2, 0, 1])])
        self.assertFalse(verify_galois(ZETA7, wrong_order))
        not_a_root = GaloisAction(SQRT2, C2, [SQRT2.generator(),
                                              SQRT2.element([1, 1])])
        self.assertFalse(verify_galois(SQRT2, not_a_root))
        trivial = GaloisAction(SQRT2, C2, [SQRT2.generator(),
                                           SQRT2.generator()])
        self.assertFalse(verify_galois(SQRT2, trivial))

    def test_conflicting_generators(self):
        with self.assertRaises(GaloisError):
            GaloisAction.from_generators(SQRT2, C3, {1: [0, -1]})


class TestEmbeddings(TestCase):

    def test_embeddings_of_one(self):
        target = Fraction(1, 2 ** 20)
        values = ZETA7.one().embeddings(target)
        self.assertEqual(len(values), 3)
        for value in values:
            self.assertTrue(value.contains(1))

    def test_embeddings_of_sqrt2(self):
        target = Fraction(1, 2 ** 30)
        values = SQRT2.generator().embeddings(target)
        self.assertEqual(len(values), 2)
        for value in values:
            self.assertLessEqual(value.radius, target)
            self.assertTrue(value.real.square().contains(2))
        self.assertTrue(values[0].real.hi < 0 < values[1].real.lo)

    def test_selfdual_embedding_sum(self):
        target = Fraction(1, 2 ** 30)
        x = ZETA7.element(ZETA7_SELFDUAL)
        total = RealEnclosure(0)
        for value in x.embeddings(target):
            total = total + value.abs_squared()
        self.assertTrue(total.contains(1))

    def test_complex_embeddings(self):
        target = Fraction(1, 2 ** 20)
        values = SQRT_M3.generator().embeddings(target)
        for value in values:
            self.assertTrue(value.abs_squared().contains(3))
