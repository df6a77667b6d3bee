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

import galoisheight

from fractions import Fraction
from logging import Logger
from unittest import TestCase

from galoisheight.fields import GaloisAction, NumberField
from galoisheight.groups import FiniteGroup
from galoisheight.pairs import GAlgebra


C2 = FiniteGroup.cyclic(2)
C3 = FiniteGroup.cyclic(3)
S3 = FiniteGroup.symmetric(3)

# Q(zeta_7)^+, t = 2 cos(2 pi / 7), sigma: t -> t^2 - 2
ZETA7 = NumberField([-1, -2, 1, 1])
ZETA7_ACTION = GaloisAction.from_generators(ZETA7, C3, {1: [-2, 0, 1]})
ZETA7_ALGEBRA = GAlgebra.galois_field(ZETA7, ZETA7_ACTION)
ZETA7_SELFDUAL = [Fraction(3, 7), Fraction(-3, 7), Fraction(-1, 7)]

# Q(sqrt 2) with sigma: t -> -t
SQRT2 = NumberField([-2, 0, 1])
SQRT2_ACTION = GaloisAction.from_generators(SQRT2, C2, {1: [0, -1]})
SQRT2_ALGEBRA = GAlgebra.galois_field(SQRT2, SQRT2_ACTION)

# Q(sqrt -3), Z[t] has conductor 2 in Z[(1 + t) / 2]
SQRT_M3 = NumberField([3, 0, 1])
EISENSTEIN_ROWS = [[1, 0], [Fraction(1, 2), Fraction(1, 2)]]

# x^3 - x^2 - 2x - 8, Z[t] has index 2 in the ring of integers
DEDEKIND = NumberField([-8, -2, -1, 1])

SPLIT_C2 = GAlgebra.split(C2)
SPLIT_C3 = GAlgebra.split(C3)


class TestLogger(TestCase):

    def test_logger_creation(self):
        self.assertIsInstance(galoisheight.basic_logger("test", 2, 1), Logger)
