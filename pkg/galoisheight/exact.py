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
galoisheight.exact - Exact arithmetic substrate

Rationals are :class:`fractions.Fraction` everywhere. Matrices are handed to
:mod:`sympy` for determinants, inverses and nullspaces, lattices are kept in
canonical row Hermite normal form, and real or complex quantities that are not
rational are carried as certified midpoint-radius enclosures with exact
rational ends.
"""

import logging
from fractions import Fraction
from functools import reduce

import sympy
from sympy import Matrix, Poly, Rational, Symbol
from sympy import igcd, ilcm, integer_nthroot
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from .exceptions import ContainmentError, DegreeError, DimensionError
from .exceptions import InternalInvariantError, PrecisionError, RankError
from .exceptions import SquarefreeError


LOG = logging.getLogger(__name__)

#: Polynomial variable used for every univariate polynomial.
T = Symbol('t')

#: Starting precision (bits of radius) of certified refinement loops.
START_BITS = 64

#: Number of precision doublings before giving up.
MAX_DOUBLINGS = 20


def as_fraction(value):
    """Convert an exact scalar to :class:`fractions.Fraction`

    Accepts integers, fractions, sympy rationals, ground domain rationals and
    strings such as ``"3/7"``. Floats are refused.

    :param value: Exact scalar
    :return: Value as :class:`fractions.Fraction`
    :raise TypeError: If the value is not an exact rational
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, 'numerator') and hasattr(value, 'denominator') \
            and not isinstance(value, float):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError("%s is not an exact rational" % repr(value))


def to_sympy(value):
    """Convert an exact scalar to a sympy :class:`~sympy.Rational`"""
    value = as_fraction(value)
    return Rational(value.numerator, value.denominator)


def gcd_list(values):
    """Non-negative gcd of integers (0 for an empty or all-zero list)"""
    return reduce(igcd, [int(v) for v in values], 0)


def lcm_list(values):
    """Positive lcm of non-zero integers (1 for an empty list)"""
    return reduce(ilcm, [int(v) for v in values], 1)


def content(vector):
    """Content of a rational vector

    The content is the positive rational ``c`` such that ``vector / c`` is a
    primitive integer vector.

    :param list vector: Rational coordinates, not all zero
    :return: Content as :class:`fractions.Fraction`
    """
    vector = [as_fraction(v) for v in vector]
    den = lcm_list([v.denominator for v in vector])
    num = gcd_list([v * den for v in vector])
    return Fraction(num, den)


# pylint: disable=useless-object-inheritance
class RationalMatrix(object):
    """Dense matrix of exact rationals

    :param list rows: Sequence of equally long rows of exact scalars

    Linear algebra beyond products is delegated to :class:`sympy.Matrix`.
    """
    def __init__(self, rows):
        """Initialization"""
        self.rows = tuple(tuple(as_fraction(v) for v in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise DimensionError("ragged matrix rows")

    def __repr__(self):
        return "RationalMatrix(%s)" % repr([[str(v) for v in row]
                                            for row in self.rows])

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.rows)

    def __getitem__(self, index):
        return self.rows[index]

    def __mul__(self, other):
        if not isinstance(other, RationalMatrix):
            other = as_fraction(other)
            return RationalMatrix([[v * other for v in row]
                                   for row in self.rows])
        if self.ncols != other.nrows:
            raise DimensionError("cannot multiply %dx%d by %dx%d" % (
                self.nrows, self.ncols, other.nrows, other.ncols))
        columns = other.transpose().rows
        return RationalMatrix([[sum((a * b for a, b in zip(row, col)),
                                    Fraction(0))
                                for col in columns]
                               for row in self.rows])

    @classmethod
    def identity(cls, size):
        """Identity matrix of the given size"""
        return cls([[Fraction(int(i == j)) for j in range(size)]
                    for i in range(size)])

    @classmethod
    def from_sympy(cls, matrix):
        """Build from a :class:`sympy.Matrix` of rationals"""
        return cls([[as_fraction(matrix[i, j]) for j in range(matrix.cols)]
                    for i in range(matrix.rows)])

    def to_sympy(self):
        """Convert to :class:`sympy.Matrix`"""
        return Matrix([[to_sympy(v) for v in row] for row in self.rows])

    def transpose(self):
        """Transposed matrix"""
        return RationalMatrix(list(zip(*self.rows)))

    def det(self):
        """Exact determinant of a square matrix"""
        if self.nrows != self.ncols:
            raise DimensionError("determinant of a non-square matrix")
        if self.nrows == 0:
            return Fraction(1)
        return as_fraction(self.to_sympy().det(method='bareiss'))

    def inverse(self):
        """Exact inverse

        :raise RankError: If the matrix is singular
        """
        if self.det() == 0:
            raise RankError("singular %dx%d matrix" % (self.nrows,
                                                       self.ncols))
        return RationalMatrix.from_sympy(self.to_sympy().inv())

    def rank(self):
        """Rank over the rationals"""
        if not self.nrows:
            return 0
        return self.to_sympy().rank()

    def nullspace(self):
        """Basis of the right nullspace as a list of coordinate tuples"""
        return [tuple(as_fraction(v) for v in vec)
                for vec in self.to_sympy().nullspace()]


def hnf(rows):
    """Row Hermite normal form of an integer matrix

    The rows must span a lattice of full rank ``n`` in ``Z^n`` (extra rows are
    allowed). The result is the unique ``n x n`` basis that is upper
    triangular with positive pivots and entries above each pivot reduced into
    ``[0, pivot)``.

    :param list rows: Integer rows
    :return: HNF rows as a tuple of tuples of :func:`int`
    :raise RankError: If the rows are rank deficient
    """
    work = [[int(v) for v in row] for row in rows]
    if not work or not work[0]:
        raise RankError("empty generator list")
    ncols = len(work[0])
    if any(len(row) != ncols for row in work):
        raise DimensionError("ragged generator rows")
    pivot = 0
    for col in range(ncols):
        if pivot >= len(work):
            raise RankError("fewer generators than dimensions")
        for idx in range(pivot + 1, len(work)):
            b = work[idx][col]
            if b == 0:
                continue
            a = work[pivot][col]
            s, t, g = igcdex(a, b)
            a_g, b_g = a // g, b // g
            top, low = work[pivot], work[idx]
            work[pivot] = [s * x + t * y for x, y in zip(top, low)]
            work[idx] = [a_g * y - b_g * x for x, y in zip(top, low)]
        if work[pivot][col] == 0:
            raise RankError("rank deficient generators (column %d)" % col)
        if work[pivot][col] < 0:
            work[pivot] = [-x for x in work[pivot]]
        head = work[pivot][col]
        for idx in range(pivot):
            quot = work[idx][col] // head
            if quot:
                work[idx] = [x - quot * y
                             for x, y in zip(work[idx], work[pivot])]
        pivot += 1
    return tuple(tuple(row) for row in work[:ncols])


class HNFBasis(object):
    """Canonical basis of a full-rank lattice in ``Q^n``

    The lattice is ``(1 / denominator) * rowspan(basis)`` where ``basis`` is
    in row Hermite normal form and the denominator is minimal, so that two
    lattices are equal exactly when their representatives are.

    Use :meth:`from_rows` to build one from arbitrary generators.

    :param list basis: Integer rows already in Hermite normal form
    :param int denominator: Positive common denominator
    """
    def __init__(self, basis, denominator=1):
        """Initialization"""
        self.basis = tuple(tuple(int(v) for v in row) for row in basis)
        self.denominator = int(denominator)

    def __repr__(self):
        return "HNFBasis(%s, %d)" % (repr([list(row) for row in self.basis]),
                                     self.denominator)

    def __str__(self):
        return "1/%d * %s" % (self.denominator,
                              [list(row) for row in self.basis])

    def __eq__(self, other):
        return isinstance(other, HNFBasis) and \
            self.basis == other.basis and \
            self.denominator == other.denominator

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.basis, self.denominator))

    @classmethod
    def from_rows(cls, rows):
        """Canonical basis of the lattice generated by rational rows

        :param list rows: Rational generators
        :return: :class:`HNFBasis`
        :raise RankError: If the generators do not have full rank
        """
        rows = [[as_fraction(v) for v in row] for row in rows]
        den = lcm_list([v.denominator for row in rows for v in row])
        basis = hnf([[int(v * den) for v in row] for row in rows])
        common = gcd_list([v for row in basis for v in row] + [den])
        return cls([[v // common for v in row] for row in basis],
                   den // common)

    @property
    def dimension(self):
        """Ambient dimension"""
        return len(self.basis)

    def rows(self):
        """Basis rows as rationals"""
        return [[Fraction(v, self.denominator) for v in row]
                for row in self.basis]

    def matrix(self):
        """Basis rows as :class:`RationalMatrix`"""
        return RationalMatrix(self.rows())

    def volume(self):
        """Covolume (absolute determinant of the basis)"""
        diag = 1
        for idx, row in enumerate(self.basis):
            diag *= row[idx]
        return Fraction(diag, self.denominator ** self.dimension)

    def scale(self, factor):
        """Lattice multiplied by a non-zero rational"""
        factor = as_fraction(factor)
        return HNFBasis.from_rows([[v * factor for v in row]
                                   for row in self.rows()])

    def coordinates(self, vectors):
        """Coordinates of vectors with respect to this basis

        :param list vectors: Rational vectors of the ambient space
        :return: :class:`RationalMatrix` of coordinate rows
        """
        return RationalMatrix(vectors) * self.matrix().inverse()

    def contains(self, vector):
        """Membership test for one ambient vector"""
        return self.contains_all([vector])

    def contains_all(self, vectors):
        """Membership test for several ambient vectors"""
        if not vectors:
            return True
        coords = self.coordinates(vectors)
        return all(v.denominator == 1 for row in coords.rows for v in row)


def _check_dimensions(*lattices):
    dims = set(lattice.dimension for lattice in lattices)
    if len(dims) != 1:
        raise DimensionError("lattices of dimensions %s" % sorted(dims))


def lattice_sum(first, second):
    """Sum of two lattices of the same ambient space"""
    _check_dimensions(first, second)
    return HNFBasis.from_rows(first.rows() + second.rows())


def lattice_dual(lattice):
    """Coordinate dual ``{y : y . v in Z for all v}`` of a lattice"""
    inverse = lattice.matrix().inverse()
    return HNFBasis.from_rows(inverse.transpose().rows)


def lattice_intersection(first, second):
    """Intersection of two lattices of the same ambient space"""
    _check_dimensions(first, second)
    return lattice_dual(lattice_sum(lattice_dual(first),
                                    lattice_dual(second)))


def is_sublattice(small, big):
    """Whether ``small`` is contained in ``big``"""
    _check_dimensions(small, big)
    return big.contains_all(small.rows())


def sublattice_index(small, big):
    """Group index ``|big / small|`` of a sublattice

    :raise ContainmentError: If ``small`` is not contained in ``big``
    """
    coords = big.coordinates(small.rows())
    if any(v.denominator != 1 for row in coords.rows for v in row):
        raise ContainmentError("%s is not a sublattice of %s" % (small, big))
    index = abs(coords.det())
    if index.denominator != 1:
        raise InternalInvariantError("non integral sublattice index %s"
                                     % index)
    return int(index)


def generalized_index(first, second):
    """Generalized index ``[second : first]``

    Defined through the intersection ``C`` of both lattices as
    ``[second : C] / [first : C]``; equals the group index when ``first`` is
    contained in ``second`` and is multiplicative along chains.

    :param HNFBasis first: Lattice ``A``
    :param HNFBasis second: Lattice ``B``
    :return: ``[B : A]`` as :class:`fractions.Fraction`
    :raise DimensionError: If the lattices live in different spaces
    """
    _check_dimensions(first, second)
    common = lattice_intersection(first, second)
    return Fraction(sublattice_index(common, second),
                    sublattice_index(common, first))


def integer_poly(coeffs):
    """Sympy polynomial in ``t`` from ascending integer coefficients"""
    coeffs = [int(as_fraction(c)) for c in coeffs]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return Poly(list(reversed(coeffs)), T, domain='ZZ')


def poly_discriminant(coeffs):
    """Discriminant of an integer polynomial

    :param list coeffs: Ascending coefficients ``[c0, c1, ..., cd]``
    :return: Discriminant as :class:`fractions.Fraction`
    :raise DegreeError: If the polynomial is constant
    """
    poly = integer_poly(coeffs)
    if poly.degree() < 1:
        raise DegreeError("discriminant of a constant polynomial")
    return as_fraction(poly.discriminant())


def _floor(value):
    return value.numerator // value.denominator


def _ceil(value):
    return -((-value.numerator) // value.denominator)


def floor_sqrt(value, bits):
    """Dyadic lower bound of ``sqrt(value)`` with ``bits`` fractional bits"""
    value = max(as_fraction(value), Fraction(0))
    root = integer_nthroot(_floor(value * 4 ** bits), 2)[0]
    return Fraction(int(root), 2 ** bits)


def ceil_sqrt(value, bits):
    """Dyadic upper bound of ``sqrt(value)`` with ``bits`` fractional bits"""
    value = max(as_fraction(value), Fraction(0))
    root, exact = integer_nthroot(_ceil(value * 4 ** bits), 2)
    root = int(root)
    if not exact:
        root += 1
    return Fraction(root, 2 ** bits)


def rational_sqrt(value):
    """Exact square root of a non-negative rational square

    :raise InternalInvariantError: If the value is not a rational square
    """
    value = as_fraction(value)
    if value >= 0:
        num, num_exact = integer_nthroot(value.numerator, 2)
        den, den_exact = integer_nthroot(value.denominator, 2)
        if num_exact and den_exact:
            return Fraction(int(num), int(den))
    raise InternalInvariantError("%s is not the square of a rational" % value)


def is_rational_square(value):
    """Whether a rational is the square of a rational"""
    try:
        rational_sqrt(value)
    except InternalInvariantError:
        return False
    return True


class RealEnclosure(object):
    """Certified real ball ``[mid - rad, mid + rad]``

    :param mid: Exact rational midpoint
    :param rad: Exact non-negative rational radius
    """
    def __init__(self, mid, rad=0):
        """Initialization"""
        self.mid = as_fraction(mid)
        self.rad = as_fraction(rad)
        if self.rad < 0:
            raise InternalInvariantError("negative enclosure radius")

    def __repr__(self):
        return "RealEnclosure(%s, %s)" % (repr(str(self.mid)),
                                          repr(str(self.rad)))

    def __str__(self):
        return "%.17g +/- %.3g" % (float(self.mid), float(self.rad))

    def __eq__(self, other):
        return isinstance(other, RealEnclosure) and \
            (self.mid, self.rad) == (other.mid, other.rad)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.mid, self.rad))

    @classmethod
    def from_bounds(cls, low, high):
        """Enclosure of the closed interval ``[low, high]``"""
        low, high = as_fraction(low), as_fraction(high)
        if low > high:
            low, high = high, low
        return cls((low + high) / 2, (high - low) / 2)

    @property
    def lo(self):
        """Lower end"""
        return self.mid - self.rad

    @property
    def hi(self):
        """Upper end"""
        return self.mid + self.rad

    @property
    def is_exact(self):
        """Whether the radius is zero"""
        return self.rad == 0

    def contains(self, value):
        """Whether an exact rational lies in the enclosure"""
        value = as_fraction(value)
        return self.lo <= value <= self.hi

    def overlaps(self, other):
        """Whether two enclosures intersect"""
        return self.lo <= other.hi and other.lo <= self.hi

    @staticmethod
    def _coerce(value):
        if isinstance(value, RealEnclosure):
            return value
        return RealEnclosure(value)

    def __neg__(self):
        return RealEnclosure(-self.mid, self.rad)

    def __add__(self, other):
        other = self._coerce(other)
        return RealEnclosure(self.mid + other.mid, self.rad + other.rad)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RealEnclosure(self.mid * other.mid,
                             abs(self.mid) * other.rad +
                             abs(other.mid) * self.rad +
                             self.rad * other.rad)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise PrecisionError("negative enclosure power")
        if exponent == 0:
            return RealEnclosure(1)
        low, high = self.lo, self.hi
        if exponent % 2 or low >= 0:
            return RealEnclosure.from_bounds(low ** exponent,
                                             high ** exponent)
        if high <= 0:
            return RealEnclosure.from_bounds(high ** exponent,
                                             low ** exponent)
        return RealEnclosure.from_bounds(0, max(-low, high) ** exponent)

    def square(self):
        """Tight enclosure of the square"""
        return self ** 2

    def sqrt(self, bits=START_BITS):
        """Enclosure of the square root of the non-negative part

        Exact when the enclosure is a single rational square, otherwise
        rounded outward to ``bits`` fractional bits.
        """
        if self.is_exact and is_rational_square(self.mid):
            return RealEnclosure(rational_sqrt(self.mid))
        return RealEnclosure.from_bounds(floor_sqrt(self.lo, bits),
                                         ceil_sqrt(self.hi, bits))

    def round_outward(self, bits):
        """Equivalent enclosure with a dyadic midpoint of ``bits`` bits"""
        if self.mid.denominator <= 2 ** bits and \
                self.rad.denominator <= 2 ** bits:
            return self
        scale = 2 ** bits
        mid = Fraction(_floor(self.mid * scale), scale)
        rad = Fraction(_ceil((self.rad + abs(self.mid - mid)) * scale),
                       scale)
        return RealEnclosure(mid, rad)


class ComplexEnclosure(object):
    """Certified complex box ``real + i * imaginary``

    :param RealEnclosure real: Real part
    :param RealEnclosure imaginary: Imaginary part
    """
    def __init__(self, real, imaginary=None):
        """Initialization"""
        self.real = RealEnclosure._coerce(real)
        self.imaginary = RealEnclosure._coerce(
            0 if imaginary is None else imaginary)

    def __repr__(self):
        return "ComplexEnclosure(%s, %s)" % (repr(self.real),
                                             repr(self.imaginary))

    def __str__(self):
        return "(%s) + i(%s)" % (self.real, self.imaginary)

    @property
    def radius(self):
        """Largest radius of both parts"""
        return max(self.real.rad, self.imaginary.rad)

    @property
    def is_real(self):
        """Whether the imaginary part is exactly zero"""
        return self.imaginary.is_exact and self.imaginary.mid == 0

    def contains(self, real, imaginary=0):
        """Whether an exact Gaussian rational lies in the box"""
        return self.real.contains(real) and self.imaginary.contains(imaginary)

    def overlaps(self, other):
        """Whether two boxes intersect"""
        return self.real.overlaps(other.real) and \
            self.imaginary.overlaps(other.imaginary)

    @staticmethod
    def _coerce(value):
        if isinstance(value, ComplexEnclosure):
            return value
        return ComplexEnclosure(value)

    def __add__(self, other):
        other = self._coerce(other)
        return ComplexEnclosure(self.real + other.real,
                                self.imaginary + other.imaginary)

    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        return ComplexEnclosure(
            self.real * other.real - self.imaginary * other.imaginary,
            self.real * other.imaginary + self.imaginary * other.real)

    __rmul__ = __mul__

    def abs_squared(self):
        """Enclosure of ``|z|^2``"""
        return self.real.square() + self.imaginary.square()

    def round_outward(self, bits):
        """Box with dyadic midpoints of ``bits`` bits"""
        return ComplexEnclosure(self.real.round_outward(bits),
                                self.imaginary.round_outward(bits))


def evaluate_polynomial(coeffs, point, bits=None):
    """Enclosure of a rational polynomial at a complex box (Horner)

    :param list coeffs: Ascending rational coefficients
    :param ComplexEnclosure point: Evaluation box
    :param int bits: Outward rounding precision of intermediate values
    :return: :class:`ComplexEnclosure`
    """
    value = ComplexEnclosure(0)
    for coeff in reversed([as_fraction(c) for c in coeffs]):
        value = value * point + coeff
        if bits is not None:
            value = value.round_outward(bits)
    return value


def _corner(corner):
    if isinstance(corner, tuple):
        return as_fraction(corner[0]), as_fraction(corner[1])
    return as_fraction(sympy.re(corner)), as_fraction(sympy.im(corner))


def _isolate(poly, eps):
    real_part, complex_part = poly.intervals(all=True, eps=to_sympy(eps))
    roots = []
    for (low, high), _ in real_part:
        roots.append(ComplexEnclosure(RealEnclosure.from_bounds(low, high)))
    for (lower, upper), _ in complex_part:
        (u_re, u_im), (v_re, v_im) = _corner(lower), _corner(upper)
        roots.append(ComplexEnclosure(RealEnclosure.from_bounds(u_re, v_re),
                                      RealEnclosure.from_bounds(u_im, v_im)))
    return roots


def _pairwise_disjoint(boxes):
    for idx, box in enumerate(boxes):
        for other in boxes[idx + 1:]:
            if box.overlaps(other):
                return False
    return True


def complex_roots(coeffs, target_radius):
    """Certified enclosures of all complex roots of an integer polynomial

    Real roots come first in increasing order and have an exactly zero
    imaginary part, then non-real roots in conjugate pairs.

    :param list coeffs: Ascending integer coefficients
    :param target_radius: Positive rational radius bound
    :return: :func:`list` of :class:`ComplexEnclosure`
    :raise SquarefreeError: If the polynomial has repeated roots
    :raise PrecisionError: If disjoint boxes are not reached in time
    """
    poly = integer_poly(coeffs)
    if poly.degree() < 1:
        raise DegreeError("roots of a constant polynomial")
    if not poly.is_sqf:
        raise SquarefreeError("%s is not squarefree" % poly.as_expr())
    target = as_fraction(target_radius)
    if target <= 0:
        raise PrecisionError("target radius must be positive")
    eps = target
    for _ in range(MAX_DOUBLINGS + 1):
        roots = _isolate(poly, eps)
        if len(roots) != poly.degree():
            raise InternalInvariantError("root isolation lost roots of %s"
                                         % poly.as_expr())
        if all(root.radius <= target for root in roots) and \
                _pairwise_disjoint(roots):
            LOG.debug("isolated %d roots of %s at eps %s",
                      len(roots), poly.as_expr(), eps)
            return roots
        eps /= 2
    raise PrecisionError("could not isolate roots of %s" % poly.as_expr())
