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
galoisheight.invariants - Invariant polynomials of the regular representation

The group acts on the variables ``X_h`` (one per group element) through
``g(X_h) = X_(h g^-1)``, so a monomial with exponents ``e`` is sent to the
monomial with exponents ``e'_k = e_(k g)``. Monomials are permuted, hence the
dimension of the invariants of a given degree is the number of monomial
orbits.
"""

import logging
from fractions import Fraction
from itertools import combinations_with_replacement, product

from sympy import Poly, Rational, binomial, series, symbols

from .exact import as_fraction, to_sympy
from .exceptions import GroupError, InternalInvariantError, SameOrbitError
from .exceptions import ScaleError, SearchCapError, ZeroError


LOG = logging.getLogger(__name__)

#: Largest group order accepted by the brute-force orbit count.
ORDER_CAP = 10

#: Number of linear forms tried by :func:`separates`.
SEARCH_CAP = 10 ** 4


def variables(group):
    """Sympy symbols ``X0 .. X(n-1)``, one per group element index"""
    return symbols('X0:%d' % group.order)


def permute_exponents(group, element, exponents):
    """Exponents of ``g`` applied to a monomial"""
    return tuple(exponents[group.table[k][element]]
                 for k in group.elements())


def translate_point(group, element, point):
    """Point ``g . P`` with ``(g . P)_h = P_(h g)``"""
    return tuple(point[group.table[h][element]] for h in group.elements())


# pylint: disable=useless-object-inheritance
class InvariantPolynomial(object):
    """Homogeneous polynomial invariant under the group

    :param FiniteGroup group: Acting group
    :param Poly poly: Sympy polynomial in :func:`variables`
    :raise GroupError: If the polynomial is not invariant
    """
    def __init__(self, group, poly):
        """Initialization"""
        self.group = group
        self.poly = poly
        self.linear_form = None
        if not self.is_invariant():
            raise GroupError("%s is not %s-invariant" % (poly.as_expr(),
                                                         group))

    def __repr__(self):
        return "InvariantPolynomial(%s, %s)" % (self.group.name,
                                                self.poly.as_expr())

    def __str__(self):
        return str(self.poly.as_expr())

    def __eq__(self, other):
        return isinstance(other, InvariantPolynomial) and \
            self.group == other.group and self.terms() == other.terms()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.group, tuple(sorted(self.terms().items()))))

    @property
    def degree(self):
        """Total degree"""
        return self.poly.total_degree()

    def terms(self):
        """Mapping of exponent tuples to rational coefficients"""
        return dict((monom, as_fraction(coeff))
                    for monom, coeff in self.poly.terms() if coeff)

    def is_invariant(self):
        """Exhaustive invariance check over every group element"""
        terms = self.terms()
        for g in self.group.elements():
            moved = dict((permute_exponents(self.group, g, monom), coeff)
                         for monom, coeff in terms.items())
            if moved != terms:
                return False
        return True

    def evaluate(self, point):
        """Value at a rational point"""
        point = [to_sympy(v) for v in point]
        if len(point) != self.group.order:
            raise GroupError("point of length %d for %s"
                             % (len(point), self.group))
        return as_fraction(self.poly.eval(tuple(point)))


def _check_cap(group):
    if group.order > ORDER_CAP:
        raise ScaleError("orbit count capped at order %d, got %d"
                         % (ORDER_CAP, group.order))


def _monomials(size, degree):
    for combo in combinations_with_replacement(range(size), degree):
        exponents = [0] * size
        for index in combo:
            exponents[index] += 1
        yield tuple(exponents)


def invariant_dimension(group, degree):
    """Number of monomial orbits of a given degree (Burnside)

    :raise ScaleError: If the group order exceeds :data:`ORDER_CAP`
    """
    _check_cap(group)
    fixed = 0
    monomials = list(_monomials(group.order, degree))
    for g in group.elements():
        fixed += sum(1 for monom in monomials
                     if permute_exponents(group, g, monom) == monom)
    count = Fraction(fixed, group.order)
    if count.denominator != 1:
        raise InternalInvariantError("Burnside count %s is not integral"
                                     % count)
    return int(count)


def invariant_dimension_bruteforce(group):
    """Dimension of the degree ``|G|`` invariants by orbit counting"""
    return invariant_dimension(group, group.order)


def unnormalized_formula(group):
    """``sum_(d | n) o(n/d) binom(2d - 1, d)`` without the ``1/|G|`` factor"""
    order = group.order
    counts = group.order_counts()
    total = 0
    for div in range(1, order + 1):
        if order % div == 0:
            total += counts.get(order // div, 0) * int(binomial(2 * div - 1,
                                                                div))
    return total


def invariant_dimension_formula(group):
    """Closed-form dimension of the degree ``|G|`` invariants

    An element of order ``k`` fixes ``binom(2d - 1, d)`` monomials with
    ``d = n / k``, so the normalized count is::

        (1 / n) * sum_(d | n) o(n / d) * binom(2d - 1, d)

    :raise InternalInvariantError: If the count is not integral
    """
    unnormalized = unnormalized_formula(group)
    count = Fraction(unnormalized, group.order)
    if count.denominator != 1:
        raise InternalInvariantError("formula count %s for %s is not "
                                     "integral" % (count, group))
    LOG.warning("unnormalized count for %s is %d, normalized count is %d",
                group, unnormalized, int(count))
    return int(count)


def molien_series(group, max_degree):
    """Coefficients of ``(1/|G|) sum_g 1 / det(1 - t g)`` up to ``max_degree``

    An element of order ``k`` acts on the regular representation with
    ``n / k`` cycles of length ``k``, so ``det(1 - t g) = (1 - t^k)^(n/k)``.

    :return: :func:`list` of integers, index ``m`` counts degree ``m``
    """
    t = symbols('t')
    order = group.order
    expr = 0
    for k, count in sorted(group.order_counts().items()):
        expr += Rational(count, order) / (1 - t ** k) ** (order // k)
    expanded = series(expr, t, 0, max_degree + 1).removeO()
    poly = Poly(expanded, t)
    coeffs = [int(poly.coeff_monomial(t ** m)) for m in range(max_degree + 1)]
    return coeffs


def invariant_section(group, linear_form):
    """Product of the translates ``g . l`` of a linear form

    :param FiniteGroup group: Acting group
    :param list linear_form: Coefficients ``c_h`` of ``l = sum c_h X_h``
    :return: :class:`InvariantPolynomial` of degree ``|G|``
    :raise ZeroError: If the form vanishes
    """
    coeffs = [as_fraction(c) for c in linear_form]
    if len(coeffs) != group.order:
        raise GroupError("linear form of length %d for %s"
                         % (len(coeffs), group))
    if not any(coeffs):
        raise ZeroError("zero linear form")
    gens = variables(group)
    result = Poly(1, *gens, domain='QQ')
    for g in group.elements():
        inverse = group.inv(g)
        form = sum(to_sympy(c) * gens[group.table[h][inverse]]
                   for h, c in enumerate(coeffs) if c)
        result = result * Poly(form, *gens, domain='QQ')
    section = InvariantPolynomial(group, result)
    section.linear_form = tuple(coeffs)
    return section


def _proportional(first, second):
    size = len(first)
    return all(first[i] * second[j] == first[j] * second[i]
               for i in range(size) for j in range(i + 1, size))


def _dot(first, second):
    return sum((a * b for a, b in zip(first, second)), Fraction(0))


def separates(group, point, other, cap=SEARCH_CAP):
    """Invariant section vanishing at ``point`` but not on ``other``

    Linear forms are tried by increasing max-norm, lexicographically
    inside each shell, until one vanishes at ``point`` and at no translate
    of ``other``; its :func:`invariant_section` is the witness.

    :return: ``(True, InvariantPolynomial)``
    :raise ZeroError: If a point is zero
    :raise SameOrbitError: If the points lie in the same orbit
    :raise SearchCapError: If ``cap`` forms were tried without success
    """
    point = tuple(as_fraction(v) for v in point)
    other = tuple(as_fraction(v) for v in other)
    if not any(point) or not any(other):
        raise ZeroError("points of projective space must be non-zero")
    if len(point) != group.order or len(other) != group.order:
        raise GroupError("points must have %d coordinates" % group.order)
    orbit = [translate_point(group, g, other) for g in group.elements()]
    if any(_proportional(point, image) for image in orbit):
        raise SameOrbitError("%s lies in the orbit of %s" % (point, other))

    tried = 0
    shell = 1
    while True:
        for form in product(range(-shell, shell + 1), repeat=group.order):
            if max(abs(c) for c in form) != shell:
                continue
            tried += 1
            if tried > cap:
                raise SearchCapError("no separating form among %d "
                                     "candidates" % cap)
            if _dot(form, point) != 0:
                continue
            if all(_dot(form, image) != 0 for image in orbit):
                LOG.debug("form %s separates %s from %s", form, point, other)
                return True, invariant_section(group, form)
        shell += 1
