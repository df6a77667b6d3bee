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
galoisheight.pairs - Galois algebras with a distinguished element

A :class:`GAlgebra` is either the split algebra of functions ``G -> Q``,
acted on by ``(g x)(h) = x(hg)``, or a Galois number field. A :class:`Pair`
attaches an element ``x`` to it; a pair is normal when ``Tr(x) = 1`` and the
conjugates ``g(x)`` form a basis.

In both cases the field ``K_L`` receiving the homomorphisms ``phi_k`` is
explicit: ``Q`` itself (the degree one field ``Q[t]/(t)``) for split
algebras, where ``phi_k`` evaluates at ``k``, and the field itself for
Galois fields, where ``phi_k`` is the automorphism ``k``.
"""

import logging
from fractions import Fraction
from itertools import product
from multiprocessing import Pool

from sympy import igcd

from .exact import RationalMatrix, as_fraction, gcd_list
from .fields import FieldElement, NumberField, verify_galois
from .groups import GroupAlgebraElement, in_U_G
from .lattices import KLattice, discrepancy, disc_lattice, ideal_norm
from .lattices import inverse_square_root_different, multiplier_ring
from .exceptions import DimensionError, GaloisError, GroupError
from .exceptions import NotNormalError, NotUnitError


LOG = logging.getLogger(__name__)

SPLIT = 'split'
FIELD = 'field'


def rational_field():
    """The field ``Q`` presented as ``Q[t]/(t)``"""
    return NumberField([0, 1])


# pylint: disable=useless-object-inheritance
class GAlgebra(object):
    """Galois ``G``-algebra over ``Q``

    Build with :meth:`split` or :meth:`galois_field`.

    :param str kind: ``split`` or ``field``
    :param FiniteGroup group: Acting group
    :param NumberField field: ``K_L`` (``Q`` for split algebras)
    :param GaloisAction action: Action on the field, None when split
    """
    def __init__(self, kind, group, field, action=None):
        """Initialization"""
        if kind not in (SPLIT, FIELD):
            raise GaloisError("unknown algebra kind %s" % repr(kind))
        self.kind = kind
        self.group = group
        self.field = field
        self.action = action

    def __repr__(self):
        if self.kind == SPLIT:
            return "GAlgebra(split, %s)" % self.group.name
        return "GAlgebra(field, %s, %s)" % (self.group.name, self.field)

    def __eq__(self, other):
        if not isinstance(other, GAlgebra) or self.kind != other.kind or \
                self.group != other.group or self.field != other.field:
            return False
        if self.kind == SPLIT:
            return True
        return self.action.images == other.action.images

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.group, self.field))

    @classmethod
    def split(cls, group):
        """Split algebra ``Q^G``"""
        return cls(SPLIT, group, rational_field())

    @classmethod
    def galois_field(cls, field, action):
        """Galois number field

        :raise GaloisError: If the action fails :func:`verify_galois`
        """
        if not verify_galois(field, action):
            raise GaloisError("%s is not a Galois action on %s"
                              % (action, field))
        return cls(FIELD, action.group, field, action)

    @property
    def dimension(self):
        """Dimension over ``Q`` (the group order)"""
        return self.group.order

    @property
    def degree(self):
        """Degree of ``K_L``"""
        return self.field.degree

    def is_primitive(self):
        """Whether the algebra is a field"""
        return self.kind == FIELD

    def element(self, coordinates):
        """Element from ``Q``-coordinates

        Split coordinates are indexed by group element; field coordinates
        are over the power basis.
        """
        if isinstance(coordinates, FieldElement):
            if self.kind != FIELD or coordinates.field != self.field:
                raise DimensionError("%s is not an element of %s"
                                     % (coordinates, self))
            return coordinates
        coordinates = tuple(as_fraction(c) for c in coordinates)
        if len(coordinates) != self.dimension:
            raise DimensionError("%d coordinates for an algebra of "
                                 "dimension %d" % (len(coordinates),
                                                   self.dimension))
        if self.kind == FIELD:
            return self.field.element(coordinates)
        return coordinates

    def coordinates(self, element):
        """``Q``-coordinates of an element"""
        if self.kind == FIELD:
            return element.coordinates
        return element

    def standard_basis(self):
        """Indicator functions, or the power basis of the field"""
        if self.kind == FIELD:
            return self.field.power_basis()
        return [tuple(Fraction(int(i == j)) for i in range(self.dimension))
                for j in range(self.dimension)]

    def apply(self, element, value):
        """``g(x)`` for the group element index ``element``"""
        if self.kind == FIELD:
            return self.action.apply(element, value)
        table = self.group.table
        return tuple(value[table[h][element]]
                     for h in self.group.elements())

    def conjugates(self, value):
        """``g(x)`` for every group element, in index order"""
        return [self.apply(g, value) for g in self.group.elements()]

    def add(self, first, second):
        """Sum of two elements"""
        if self.kind == FIELD:
            return first + second
        return tuple(a + b for a, b in zip(first, second))

    def scale(self, scalar, value):
        """Rational multiple of an element"""
        scalar = as_fraction(scalar)
        if self.kind == FIELD:
            return value * scalar
        return tuple(scalar * a for a in value)

    def multiply(self, first, second):
        """Product of two elements"""
        if self.kind == FIELD:
            return first * second
        return tuple(a * b for a, b in zip(first, second))

    def trace(self, value):
        """Trace down to ``Q``"""
        if self.kind == FIELD:
            return value.trace()
        return sum(value, Fraction(0))

    def phi(self, index, value):
        """Homomorphism ``phi_index: L -> K_L``"""
        if self.kind == FIELD:
            return self.action.apply(index, value)
        return self.field.rational(value[index])

    def homomorphism_images(self, value):
        """``phi_k(x)`` for every ``k``, in index order"""
        return [self.phi(k, value) for k in self.group.elements()]

    def conjugate_matrix(self, value):
        """Rows are the coordinates of ``g(x)``"""
        return RationalMatrix([self.coordinates(c)
                               for c in self.conjugates(value)])


class Pair(object):
    """Galois algebra with a distinguished element

    :param GAlgebra algebra: Algebra ``L``
    :param x: Element of ``L`` (coordinates or a field element)
    :param bool validate: Require ``x`` to be normal
    :raise NotNormalError: If validation is requested and fails
    """
    def __init__(self, algebra, x, validate=True):
        """Initialization"""
        self.algebra = algebra
        self.x = algebra.element(x)
        self._normal = None
        if validate and not is_normal(self):
            raise NotNormalError("%s is not normal in %s" % (self, algebra))

    def __repr__(self):
        return "Pair(%s, %s)" % (repr(self.algebra),
                                 [str(c) for c in self.coordinates])

    def __str__(self):
        return "(%s)" % ", ".join(str(c) for c in self.coordinates)

    def __eq__(self, other):
        return isinstance(other, Pair) and self.algebra == other.algebra \
            and self.coordinates == other.coordinates

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.algebra, self.coordinates))

    @property
    def coordinates(self):
        """``Q``-coordinates of ``x``"""
        return tuple(self.algebra.coordinates(self.x))

    @property
    def group(self):
        """Acting group"""
        return self.algebra.group


def is_normal(pair):
    """Whether ``Tr(x) = 1`` and the conjugates of ``x`` form a basis"""
    if pair._normal is None:
        algebra = pair.algebra
        pair._normal = algebra.trace(pair.x) == 1 and \
            algebra.conjugate_matrix(pair.x).det() != 0
    return pair._normal


def _require_normal(pair):
    if not is_normal(pair):
        raise NotNormalError("%s is not normal" % pair)


def is_primitive(pair):
    """Whether the algebra of the pair is a field"""
    return pair.algebra.is_primitive()


def trace_products(pair):
    """``Tr(x g(x))`` for every group element"""
    algebra = pair.algebra
    return [algebra.trace(algebra.multiply(pair.x, conj))
            for conj in algebra.conjugates(pair.x)]


def is_self_dual(pair):
    """Whether ``Tr(x g(x))`` is 1 at the identity and 0 elsewhere

    :raise NotNormalError: If the pair is not normal
    """
    _require_normal(pair)
    identity = pair.group.identity
    return all(value == int(g == identity)
               for g, value in enumerate(trace_products(pair)))


def conjugate_lattice(pair):
    """Lattice ``sum_k Z phi_k(x)`` of ``K_L``

    :raise NotNormalError: If the pair is not normal
    """
    _require_normal(pair)
    algebra = pair.algebra
    images = [img for img in algebra.homomorphism_images(pair.x)
              if not img.is_zero()]
    return KLattice.span(algebra.field, images)


def fiber_unit(pair, embedding=None):
    """Unit ``sum_g phi(g x) [g^-1]`` over ``K_L``

    :param Pair pair: Normal pair
    :param int embedding: Index ``k`` of ``phi_k``, identity by default
    :return: :class:`~galoisheight.groups.GroupAlgebraElement`
    :raise NotNormalError: If the pair is not normal
    """
    _require_normal(pair)
    algebra = pair.algebra
    group = algebra.group
    if embedding is None:
        embedding = group.identity
    coeffs = [None] * group.order
    for g, conj in enumerate(algebra.conjugates(pair.x)):
        coeffs[group.inv(g)] = algebra.phi(embedding, conj)
    return GroupAlgebraElement(group, coeffs)


def act(unit, pair):
    """Action ``u (L, x) = (L, sum_g a_g g(x))`` of ``U_G(Q)``

    :raise NotUnitError: If ``u`` is not a rational element of ``U_G``
    :raise NotNormalError: If the pair is not normal
    """
    if unit.group != pair.group:
        raise GroupError("unit of %s acting on a %s-algebra"
                         % (unit.group, pair.group))
    if not unit.is_rational or not in_U_G(unit):
        raise NotUnitError("%s is not in U_G(Q)" % unit)
    _require_normal(pair)
    algebra = pair.algebra
    result = algebra.scale(0, pair.x)
    for g, conj in enumerate(algebra.conjugates(pair.x)):
        if unit[g]:
            result = algebra.add(result, algebra.scale(unit[g], conj))
    return Pair(algebra, result)


def solve_unit(pair, other):
    """The unique ``u`` in ``U_G(Q)`` with ``act(u, pair) == other``

    :raise NotNormalError: If either pair is not normal
    """
    if pair.algebra != other.algebra:
        raise DimensionError("pairs of different algebras")
    _require_normal(pair)
    _require_normal(other)
    conj = pair.algebra.conjugate_matrix(pair.x)
    coeffs = RationalMatrix([other.coordinates]) * conj.inverse()
    unit = GroupAlgebraElement(pair.group, coeffs.rows[0])
    if not in_U_G(unit):
        raise NotUnitError("solved %s is not a unit" % unit)
    return unit


class PairInvariants(object):
    """Lattice invariants of a normal pair

    :param Pair pair: Normal pair
    :param Order maximal: Maximal order of ``K_L``, computed when omitted
    """
    def __init__(self, pair, maximal=None):
        """Initialization"""
        _require_normal(pair)
        field = pair.algebra.field
        self.pair = pair
        self.degree = field.degree
        self.lattice = conjugate_lattice(pair)
        self.multiplier_ring = multiplier_ring(self.lattice)
        self.maximal_order = maximal or field.maximal_order()
        self.disc_lattice = disc_lattice(self.lattice)
        self.disc_order = disc_lattice(self.multiplier_ring)
        self.norm = ideal_norm(self.multiplier_ring, self.lattice)
        self.discrepancy = discrepancy(self.multiplier_ring, self.lattice,
                                       self.maximal_order)

    def __repr__(self):
        return "PairInvariants(%s, disc T=%s, disc L=%s, dis=%s)" % (
            self.pair, self.disc_order, self.disc_lattice, self.discrepancy)


def pair_invariants(pair, maximal=None):
    """Compute :class:`PairInvariants`"""
    return PairInvariants(pair, maximal)


class SearchBox(object):
    """Bounded set of candidate elements ``sum_i (a_i / q) b_i``

    :param int coefficient_bound: Bound on ``|a_i|``
    :param int denominator_bound: Bound on ``q``
    :param list basis: Algebra elements ``b_i``, the standard basis when
                       None (for instance the basis of a fractional ideal)
    """
    def __init__(self, coefficient_bound, denominator_bound, basis=None):
        """Initialization"""
        self.coefficient_bound = int(coefficient_bound)
        self.denominator_bound = int(denominator_bound)
        self.basis = basis

    def __repr__(self):
        return "SearchBox(%d, %d)" % (self.coefficient_bound,
                                      self.denominator_bound)

    @classmethod
    def inverse_sqrt_different(cls, algebra, coefficient_bound,
                               denominator_bound, maximal=None):
        """Box over a basis of the ideal ``D^-1/2`` of a Galois field

        :param GAlgebra algebra: Field algebra
        :param Order maximal: Maximal order, computed when omitted
        :raise DimensionError: If the algebra is split
        :raise NotSquareError: If the different is not a square
        """
        if not algebra.is_primitive():
            raise DimensionError("%s has no different" % algebra)
        if maximal is None:
            maximal = algebra.field.maximal_order()
        ideal = inverse_square_root_different(maximal)
        return cls(coefficient_bound, denominator_bound,
                   list(ideal.basis.rows()))

    def basis_for(self, algebra):
        """Basis elements of the box inside an algebra"""
        if self.basis is None:
            return algebra.standard_basis()
        return [algebra.element(b) for b in self.basis]


def _gram_forms(algebra, basis):
    forms = []
    for g in algebra.group.elements():
        images = [algebra.apply(g, b) for b in basis]
        forms.append([[algebra.trace(algebra.multiply(a, b)) for b in images]
                      for a in basis])
    return forms


def _quadratic(form, vector):
    total = Fraction(0)
    for i, a in enumerate(vector):
        if not a:
            continue
        row = form[i]
        for j, b in enumerate(vector):
            if b:
                total += a * b * row[j]
    return total


def _search_denominator(algebra, basis, bound, denominator):
    """Self-dual coordinate vectors with one fixed denominator"""
    traces = [algebra.trace(b) for b in basis]
    solved = max(i for i, t in enumerate(traces) if t != 0)
    free = [i for i in range(len(basis)) if i != solved]
    forms = _gram_forms(algebra, basis)
    identity = algebra.group.identity
    target = [denominator ** 2 if g == identity else 0
              for g in algebra.group.elements()]
    found = []
    for values in product(range(-bound, bound + 1), repeat=len(free)):
        rest = denominator - sum((traces[i] * v
                                  for i, v in zip(free, values)),
                                 Fraction(0))
        last = rest / traces[solved]
        if last.denominator != 1 or abs(last) > bound:
            continue
        vector = [0] * len(basis)
        for i, v in zip(free, values):
            vector[i] = v
        vector[solved] = int(last)
        if igcd(gcd_list(vector), denominator) != 1:
            continue
        if all(_quadratic(form, vector) == goal
               for form, goal in zip(forms, target)):
            element = algebra.scale(0, basis[0])
            for coeff, b in zip(vector, basis):
                if coeff:
                    element = algebra.add(element,
                                          algebra.scale(Fraction(coeff,
                                                                 denominator),
                                                        b))
            found.append(tuple(algebra.coordinates(element)))
    return found


def selfdual_search(algebra, box, parallelism=1):
    """Every self-dual normal element inside a search box

    The trace condition fixes one coordinate; the others run over
    ``[-C, C]`` and the denominator over ``1 .. D``. Candidates are filtered
    with the Gram forms ``Tr(b_i g(b_j))`` and then verified exactly.

    :param GAlgebra algebra: Algebra to search
    :param SearchBox box: Search box
    :param int parallelism: Number of worker processes
    :return: :func:`list` of :class:`Pair` sorted by coordinates
    """
    basis = box.basis_for(algebra)
    if len(basis) != algebra.dimension:
        raise DimensionError("search basis of %d elements in dimension %d"
                             % (len(basis), algebra.dimension))
    denominators = range(1, box.denominator_bound + 1)
    bound = box.coefficient_bound
    if parallelism > 1 and box.denominator_bound > 1:
        with Pool(processes=parallelism) as pool:
            jobs = [pool.apply_async(_search_denominator,
                                     (algebra, basis, bound, q))
                    for q in denominators]
            pool.close()
            pool.join()
            chunks = [job.get() for job in jobs]
    else:
        chunks = [_search_denominator(algebra, basis, bound, q)
                  for q in denominators]
    coordinates = sorted(set(c for chunk in chunks for c in chunk))
    pairs = []
    for coords in coordinates:
        pair = Pair(algebra, coords, validate=False)
        if is_normal(pair) and is_self_dual(pair):
            pairs.append(pair)
        else:
            LOG.warning("discarding unverified candidate %s", pair)
    LOG.info("found %d self-dual elements of %s in %s", len(pairs),
             algebra, box)
    return pairs
