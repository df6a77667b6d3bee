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

"""
galoisheight.exceptions - Galois height toolkit exceptions

Every error carries the process exit code the command line reports for it:

    ==  ==========================================
    2   schema or configuration error
    3   mathematical precondition violated
    4   scale cap or refinement cap reached
    5   internal invariant violated (a bug)
    ==  ==========================================
"""


class GaloisHeightError(Exception):
    """Base class of every galoisheight error

    :param str message: Human readable diagnostic
    """
    exit_code = 1

    def __init__(self, message):
        """Initialization"""
        super(GaloisHeightError, self).__init__(message)
        self.message = message

    def __str__(self):
        return self.message

    def __repr__(self):
        return "%s(%s)" % (self.__class__.__name__, repr(self.message))


class SchemaError(GaloisHeightError):
    """Malformed input document

    :param str source: File path (or other origin) of the document
    :param str message: Human readable diagnostic
    """
    exit_code = 2

    def __init__(self, source, message):
        """Initialization"""
        super(SchemaError, self).__init__(message)
        self.source = source

    def __str__(self):
        return "%s: %s" % (self.source, self.message)

    def __repr__(self):
        return "SchemaError(%s, %s)" % (repr(self.source), repr(self.message))


class ConfigError(GaloisHeightError):
    """Invalid workspace configuration"""
    exit_code = 2


class PreconditionError(GaloisHeightError):
    """A mathematical precondition of an operation does not hold"""
    exit_code = 3


class RankError(PreconditionError):
    """Generators do not span a full-rank lattice"""


class DimensionError(PreconditionError):
    """Lattices or vectors live in different ambient spaces"""


class DegreeError(PreconditionError):
    """Polynomial degree is not acceptable"""


class SquarefreeError(PreconditionError):
    """Polynomial is not squarefree"""


class GroupError(PreconditionError):
    """Invalid group table or mixed groups"""


class NotUnitError(PreconditionError):
    """Group algebra element is not in U_G"""


class DivisionByZero(PreconditionError, ZeroDivisionError):
    """Inverse of zero requested"""


class GaloisError(PreconditionError):
    """Galois action does not satisfy its axioms"""


class NotMaximalError(PreconditionError):
    """Maximal order hint failed verification"""


class OrderError(PreconditionError):
    """Ideal is attached to another order, or lattice is not an order"""


class ContainmentError(PreconditionError):
    """Expected lattice containment does not hold"""


class NotIdealError(PreconditionError):
    """Lattice is not stable under multiplication by its order"""


class NotSquareError(PreconditionError):
    """Ideal is not the square of a fractional ideal"""


class NotNormalError(PreconditionError):
    """Element is not normal"""


class ZeroError(PreconditionError):
    """Zero vector or zero form where a nonzero one is required"""


class SameOrbitError(PreconditionError):
    """Points lie in the same group orbit"""


class ScaleError(GaloisHeightError):
    """Input exceeds the desk-scale cap of an operation"""
    exit_code = 4


class SearchCapError(ScaleError):
    """Bounded search exhausted its candidate cap"""


class PrecisionError(ScaleError):
    """Certified refinement reached its iteration cap"""


class InternalInvariantError(GaloisHeightError):
    """Internal consistency check failed"""
    exit_code = 5
