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
galoisheight.fields - Galois number fields

A :class:`NumberField` is ``Q[t]/(f)`` for a monic irreducible integer
polynomial ``f``. Elements are coordinate vectors over the power basis
``1, t, ..., t^(d-1)``; products are reduced with a precomputed table of the
powers ``t^k mod f``. A :class:`GaloisAction` attaches a finite group acting
through explicit images of ``t``.
"""

import logging
from collections import deque
from fractions import Fraction

from sympy import Poly

from .exact import MAX_DOUBLINGS, START_BITS, T, RationalMatrix
from .exact import as_fraction, complex_roots, evaluate_polynomial
from .exact import integer_poly, poly_discriminant, to_sympy
from .exceptions import DegreeError, DimensionError, DivisionByZero
from .exceptions import GaloisError, PrecisionError, SquarefreeError


LOG = logging.getLogger(__name__)


def _bits_for(radius):
    radius = as_fraction(radius)
    bits = 0
    while Fraction(1, 2 ** bits) > radius:
        bits += 1
    return bits


# pylint: disable=useless-object-inheritance
class NumberField(object):
    """Number field ``Q[t]/(f)``

    :param list min_poly: Ascending integer coefficients of ``f``, monic
    :raise DegreeError: If ``f`` is constant, not monic or reducible
    :raise SquarefreeError: If ``f`` has repeated factors

    >>> field = NumberField([-1, -2, 1, 1])
    >>> field.degree
    3
    """
    def __init__(self, min_poly):
        """Initialization"""
        coeffs = [int(as_fraction(c)) for c in min_poly]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise DegreeError("minimal polynomial must be non-constant")
        if coeffs[-1] != 1:
            raise DegreeError("minimal polynomial must be monic")
        self.min_poly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.poly = integer_poly(coeffs)
        if not self.poly.is_sqf:
            raise SquarefreeError("%s is not squarefree" % self.poly.as_expr())
        if not self.poly.is_irreducible:
            raise DegreeError("%s is reducible over Q" % self.poly.as_expr())

        self._powers = self._power_table()
        self._power_traces = self._newton_sums()
        self._discriminant = None
        self._maximal_order = None
        self._totally_real = None
        self._roots = {}

    def __repr__(self):
        return "NumberField(%s)" % list(self.min_poly)

    def __str__(self):
        return "Q[t]/(%s)" % self.poly.as_expr()

    def __eq__(self, other):
        return isinstance(other, NumberField) and \
            self.min_poly == other.min_poly

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.min_poly)

    def _power_table(self):
        d = self.degree
        table = []
        current = [Fraction(int(i == 0)) for i in range(d)]
        for _ in range(2 * d - 1):
            table.append(tuple(current))
            top = current[-1]
            current = [Fraction(0)] + current[:-1]
            if top:
                current = [c - top * a
                           for c, a in zip(current, self.min_poly[:-1])]
        return tuple(table)

    def _newton_sums(self):
        d = self.degree
        coeffs = self.min_poly
        sums = [Fraction(d)]
        # Newton identities for the power sums of the roots
        for k in range(1, 2 * d - 1):
            total = Fraction(0)
            for j in range(1, min(k - 1, d) + 1):
                total += coeffs[d - j] * sums[k - j]
            if k <= d:
                total += k * coeffs[d - k]
            sums.append(-total)
        return tuple(sums)

    def element(self, coordinates):
        """Element from power basis coordinates"""
        return FieldElement(self, coordinates)

    def rational(self, value):
        """Embedded rational number"""
        value = as_fraction(value)
        return FieldElement(self, [value] + [0] * (self.degree - 1))

    def zero(self):
        """Additive identity"""
        return self.rational(0)

    def one(self):
        """Multiplicative identity"""
        return self.rational(1)

    def generator(self):
        """Class of ``t``"""
        if self.degree == 1:
            return self.rational(-self.min_poly[0])
        return FieldElement(self, [int(i == 1) for i in range(self.degree)])

    def power_basis(self):
        """Elements ``1, t, ..., t^(d-1)``"""
        return [FieldElement(self, [int(i == j) for i in range(self.degree)])
                for j in range(self.degree)]

    def reduce(self, coefficients):
        """Element of an arbitrary rational polynomial in ``t``"""
        coefficients = [as_fraction(c) for c in coefficients]
        result = [Fraction(0)] * self.degree
        for k, coeff in enumerate(coefficients):
            if not coeff:
                continue
            if k < len(self._powers):
                power = self._powers[k]
            else:
                power = (self.generator() ** k).coordinates
            result = [r + coeff * p for r, p in zip(result, power)]
        return FieldElement(self, result)

    def evaluate(self, element):
        """Value of ``f`` at an element of this field"""
        value = self.zero()
        for coeff in reversed(self.min_poly):
            value = value * element + coeff
        return value

    def power_trace(self, exponent):
        """Trace of ``t^exponent`` for ``exponent < 2d - 1``"""
        return self._power_traces[exponent]

    def discriminant(self):
        """Discriminant of the minimal polynomial"""
        if self._discriminant is None:
            self._discriminant = poly_discriminant(self.min_poly)
        return self._discriminant

    def is_totally_real(self):
        """Whether every root of ``f`` is real"""
        if self._totally_real is None:
            self._totally_real = self.poly.count_roots() == self.degree
        return self._totally_real

    def roots(self, bits=START_BITS):
        """Root enclosures of ``f`` of radius at most ``2^-bits``"""
        if bits not in self._roots:
            self._roots[bits] = complex_roots(self.min_poly,
                                              Fraction(1, 2 ** bits))
        return self._roots[bits]

    def embeddings(self, element, target_radius):
        """Certified values of an element under every complex embedding

        Root enclosures are refined by doubling their precision until every
        value has radius at most ``target_radius``.

        :param FieldElement element: Element of this field
        :param target_radius: Positive rational radius bound
        :return: :func:`list` of :class:`~galoisheight.exact.ComplexEnclosure`
        :raise PrecisionError: If the refinement cap is reached
        """
        target = as_fraction(target_radius)
        if target <= 0:
            raise PrecisionError("target radius must be positive")
        bits = max(START_BITS, _bits_for(target) + 16)
        for _ in range(MAX_DOUBLINGS + 1):
            values = [evaluate_polynomial(element.coordinates, root)
                      for root in self.roots(bits)]
            if all(value.radius <= target for value in values):
                return values
            LOG.debug("embeddings of %s need more than %d bits",
                      element, bits)
            bits *= 2
        raise PrecisionError("embeddings of %s did not reach radius %s"
                             % (element, target))

    def maximal_order(self, hint=None):
        """Ring of integers, see :func:`galoisheight.lattices.maximal_order`"""
        # pylint: disable=import-outside-toplevel
        from .lattices import maximal_order
        if hint is not None:
            return maximal_order(self, hint=hint)
        if self._maximal_order is None:
            self._maximal_order = maximal_order(self)
        return self._maximal_order


class FieldElement(object):
    """Element of a :class:`NumberField`

    :param NumberField field: Parent field
    :param list coordinates: ``d`` exact rationals over the power basis
    """
    def __init__(self, field, coordinates):
        """Initialization"""
        coordinates = tuple(as_fraction(c) for c in coordinates)
        if len(coordinates) != field.degree:
            raise DimensionError("%d coordinates in a field of degree %d"
                                 % (len(coordinates), field.degree))
        self.field = field
        self.coordinates = coordinates

    def __repr__(self):
        return "FieldElement(%s, %s)" % (repr(self.field),
                                         [str(c) for c in self.coordinates])

    def __str__(self):
        terms = []
        for k, coeff in enumerate(self.coordinates):
            if not coeff:
                continue
            if k == 0:
                terms.append(str(coeff))
            elif k == 1:
                terms.append("%s*t" % coeff)
            else:
                terms.append("%s*t^%d" % (coeff, k))
        return " + ".join(terms) or "0"

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DimensionError("elements of %s and %s"
                                     % (self.field, other.field))
            return other
        return self.field.rational(other)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError, DimensionError):
            return NotImplemented
        return self.coordinates == other.coordinates

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self.is_rational():
            return hash(self.coordinates[0])
        return hash((self.field, self.coordinates))

    def __bool__(self):
        return any(self.coordinates)

    __nonzero__ = __bool__

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, [a + b for a, b in
                                         zip(self.coordinates,
                                             other.coordinates)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coordinates])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            try:
                scalar = as_fraction(other)
            except TypeError:
                return NotImplemented
            return FieldElement(self.field,
                                [a * scalar for a in self.coordinates])
        other = self._coerce(other)
        product = [Fraction(0)] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.coordinates):
            if not a:
                continue
            for j, b in enumerate(other.coordinates):
                if b:
                    product[i + j] += a * b
        return self.field.reduce(product)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    __div__ = __truediv__

    def __pow__(self, exponent):
        exponent = int(exponent)
        base = self if exponent >= 0 else self.inverse()
        result = self.field.one()
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def is_zero(self):
        """Whether the element is zero"""
        return not any(self.coordinates)

    def is_rational(self):
        """Whether the element lies in ``Q``"""
        return not any(self.coordinates[1:])

    def rational(self):
        """The rational value of a rational element

        :raise DimensionError: If the element is irrational
        """
        if not self.is_rational():
            raise DimensionError("%s is not rational" % self)
        return self.coordinates[0]

    def polynomial(self):
        """Coordinate polynomial as a sympy :class:`~sympy.Poly` over QQ"""
        return Poly([to_sympy(c) for c in reversed(self.coordinates)], T,
                    domain='QQ')

    def inverse(self):
        """Multiplicative inverse

        :raise DivisionByZero: If the element is zero
        """
        if self.is_zero():
            raise DivisionByZero("inverse of zero in %s" % self.field)
        if self.field.degree == 1:
            return self.field.rational(1 / self.coordinates[0])
        modulus = Poly(list(reversed(self.field.min_poly)), T, domain='QQ')
        inv = self.polynomial().invert(modulus)
        coeffs = [as_fraction(c) for c in reversed(inv.all_coeffs())]
        coeffs += [Fraction(0)] * (self.field.degree - len(coeffs))
        return FieldElement(self.field, coeffs)

    def multiplication_matrix(self):
        """Matrix of ``y -> x*y``, row ``i`` holds ``x * t^i``"""
        return RationalMatrix([(self * basis).coordinates
                               for basis in self.field.power_basis()])

    def trace(self):
        """Trace down to ``Q``"""
        return sum((c * self.field.power_trace(k)
                    for k, c in enumerate(self.coordinates)), Fraction(0))

    def norm(self):
        """Norm down to ``Q``"""
        return self.multiplication_matrix().det()

    def embeddings(self, target_radius):
        """Shortcut for :meth:`NumberField.embeddings`"""
        return self.field.embeddings(self, target_radius)


class GaloisAction(object):
    """Action of a finite group on a number field

    :param NumberField field: Acted-on field
    :param FiniteGroup group: Acting group
    :param list images: Image of ``t`` for every group element index

    Use :func:`verify_galois` to check the axioms; the constructor only
    checks shapes.
    """
    def __init__(self, field, group, images):
        """Initialization"""
        images = [img if isinstance(img, FieldElement)
                  else field.element(img) for img in images]
        if len(images) != group.order:
            raise GaloisError("%d images for a group of order %d"
                              % (len(images), group.order))
        self.field = field
        self.group = group
        self.images = tuple(images)
        self._matrices = {}

    def __repr__(self):
        return "GaloisAction(%s, %s)" % (self.group.name, self.field)

    @classmethod
    def from_generators(cls, field, group, generator_images):
        """Extend images of generators over the multiplication table

        :param NumberField field: Acted-on field
        :param FiniteGroup group: Acting group
        :param dict generator_images: Group index to image of ``t``
        :raise GaloisError: If the generators do not reach every element or
                            give conflicting images
        """
        gens = dict((int(g), img if isinstance(img, FieldElement)
                     else field.element(img))
                    for g, img in generator_images.items())
        images = {group.identity: field.generator()}
        images.update(gens)
        gen_matrices = dict((g, _substitution_matrix(field, img))
                            for g, img in gens.items())
        queue = deque(images)
        while queue:
            known = queue.popleft()
            for gen, matrix in sorted(gen_matrices.items()):
                target = group.mul(gen, known)
                image = _apply_matrix(field, matrix, images[known])
                if target not in images:
                    images[target] = image
                    queue.append(target)
                elif images[target] != image:
                    raise GaloisError("conflicting images for element %s"
                                      % group.names[target])
        if len(images) != group.order:
            raise GaloisError("generators reach %d of %d elements"
                              % (len(images), group.order))
        return cls(field, group, [images[g] for g in group.elements()])

    def matrix(self, element):
        """Matrix of the automorphism, row ``i`` holds ``sigma(t^i)``"""
        if element not in self._matrices:
            self._matrices[element] = _substitution_matrix(
                self.field, self.images[element])
        return self._matrices[element]

    def apply(self, element, value):
        """Image of a field element under the group element index"""
        return _apply_matrix(self.field, self.matrix(element), value)

    def conjugates(self, value):
        """Images ``g(x)`` in group index order"""
        return [self.apply(g, value) for g in self.group.elements()]


def _substitution_matrix(field, image):
    rows, power = [], field.one()
    for _ in range(field.degree):
        rows.append(power.coordinates)
        power = power * image
    return RationalMatrix(rows)


def _apply_matrix(field, matrix, value):
    coords = RationalMatrix([value.coordinates]) * matrix
    return FieldElement(field, coords.rows[0])


def apply_automorphism(action, element, value):
    """Image of ``value`` under the group element with index ``element``"""
    return action.apply(element, value)


def verify_galois(field, action):
    """Check every Galois action axiom

    The images must be roots of ``f``, pairwise distinct, respect the
    multiplication table, send the identity to ``t``, have as many
    elements as the degree and fix only the rationals.

    :return: :func:`bool`
    """
    group = action.group
    if action.field != field:
        LOG.info("action is attached to another field")
        return False
    if group.order != field.degree:
        LOG.info("group order %d differs from degree %d",
                 group.order, field.degree)
        return False
    if action.images[group.identity] != field.generator():
        LOG.info("identity does not fix t")
        return False
    for g, image in enumerate(action.images):
        if not field.evaluate(image).is_zero():
            LOG.info("image of t under %s is not a root", group.names[g])
            return False
    if len(set(img.coordinates for img in action.images)) != group.order:
        LOG.info("images of t are not distinct")
        return False
    for g in group.elements():
        for h in group.elements():
            composed = action.apply(g, action.images[h])
            if composed != action.images[group.mul(g, h)]:
                LOG.info("action does not respect %s * %s",
                         group.names[g], group.names[h])
                return False
    stacked = []
    for g in group.elements():
        shifted = action.matrix(g).transpose().rows
        stacked.extend([[v - int(i == j) for j, v in enumerate(row)]
                        for i, row in enumerate(shifted)])
    if len(RationalMatrix(stacked).nullspace()) != 1:
        LOG.info("fixed field is larger than Q")
        return False
    return True
