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
galoisheight.lattices - Lattices, orders and fractional ideals

Every lattice is a full-rank Z-lattice of a :class:`NumberField`, stored as
the canonical :class:`~galoisheight.exact.HNFBasis` of its power basis
coordinates. Equality of lattices is equality of those representatives.

The maximal order is computed here with the Round-2 enlargement: at each
prime ``p`` whose square divides the polynomial discriminant the order is
replaced by the multiplier ring of its ``p``-radical until it stops growing.
"""

import logging
from fractions import Fraction

from sympy import factorint, mod_inverse

from .exact import HNFBasis, RationalMatrix, as_fraction, generalized_index
from .exact import is_sublattice, lattice_intersection, lattice_sum
from .exceptions import ContainmentError, DimensionError, NotIdealError
from .exceptions import NotMaximalError, NotSquareError, OrderError
from .exceptions import RankError, ScaleError


LOG = logging.getLogger(__name__)

#: Largest polynomial discriminant factored without a maximal order hint.
DISCRIMINANT_CAP = 10 ** 12


# pylint: disable=useless-object-inheritance
class KLattice(object):
    """Full-rank Z-lattice of a number field

    :param NumberField field: Ambient field
    :param HNFBasis basis: Canonical basis over the power basis
    """
    def __init__(self, field, basis):
        """Initialization"""
        if basis.dimension != field.degree:
            raise DimensionError("lattice of rank %d in a field of degree %d"
                                 % (basis.dimension, field.degree))
        self.field = field
        self.basis = basis

    def __repr__(self):
        return "%s(%s, %s)" % (self.__class__.__name__, repr(self.field),
                               repr(self.basis))

    def __str__(self):
        return str(self.basis)

    def __eq__(self, other):
        return isinstance(other, KLattice) and self.field == other.field \
            and self.basis == other.basis

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.field, self.basis))

    @classmethod
    def span(cls, field, generators):
        """Lattice spanned by field elements or coordinate vectors

        :raise RankError: If the generators are rank deficient
        """
        rows = [g.coordinates if hasattr(g, 'coordinates') else g
                for g in generators]
        if not rows:
            raise RankError("empty generator list")
        return KLattice(field, HNFBasis.from_rows(rows))

    def lattice(self):
        """Plain :class:`KLattice` view (drops order or ideal structure)"""
        return KLattice(self.field, self.basis)

    def elements(self):
        """Basis as :class:`~galoisheight.fields.FieldElement` list"""
        return [self.field.element(row) for row in self.basis.rows()]

    def coordinates(self, elements):
        """Coordinates of field elements over this basis"""
        return self.basis.coordinates([e.coordinates for e in elements])

    def contains(self, element):
        """Membership of a field element"""
        return self.basis.contains(element.coordinates)

    def contains_all(self, elements):
        """Membership of several field elements"""
        return self.basis.contains_all([e.coordinates for e in elements])

    def is_sublattice_of(self, other):
        """Whether ``self`` is contained in ``other``"""
        _check_field(self, other)
        return is_sublattice(self.basis, other.basis)

    def scale(self, factor):
        """Lattice multiplied by a rational or a field element"""
        if hasattr(factor, 'field'):
            return KLattice.span(self.field,
                                 [factor * e for e in self.elements()])
        return KLattice(self.field, self.basis.scale(as_fraction(factor)))

    def volume(self):
        """Covolume with respect to the power basis"""
        return self.basis.volume()

    def __mul__(self, other):
        return lattice_product(self, other)


class Order(KLattice):
    """Subring of finite index in the ring of integers

    :raise OrderError: If the lattice does not contain 1 or is not closed
                       under multiplication
    """
    def __init__(self, field, basis):
        """Initialization"""
        super(Order, self).__init__(field, basis)
        elements = self.elements()
        if not self.contains(field.one()):
            raise OrderError("%s does not contain 1" % basis)
        products = [a * b for i, a in enumerate(elements)
                    for b in elements[i:]]
        if not self.contains_all(products):
            raise OrderError("%s is not closed under multiplication" % basis)
        self._constants = None

    @classmethod
    def from_lattice(cls, lattice):
        """Validate a lattice as an order"""
        return cls(lattice.field, lattice.basis)

    @classmethod
    def equation_order(cls, field):
        """The order ``Z[t]``"""
        return cls(field, HNFBasis.from_rows([e.coordinates for e in
                                              field.power_basis()]))

    def structure_constants(self):
        """Integer structure constants ``c[i][j][k]``

        ``w_i * w_j = sum_k c[i][j][k] w_k`` over the basis ``w`` of the order.
        """
        if self._constants is None:
            elements = self.elements()
            size = len(elements)
            constants = []
            for a in elements:
                coords = self.coordinates([a * b for b in elements])
                constants.append([[int(v) for v in coords.rows[j]]
                                  for j in range(size)])
            self._constants = constants
        return self._constants

    def discriminant(self):
        """Discriminant of the trace form"""
        return disc_lattice(self)


class FractionalIdeal(KLattice):
    """Lattice stable under multiplication by an order

    :param Order order: Ring of coefficients ``T``
    :param KLattice lattice: Underlying lattice ``I``
    :raise NotIdealError: If ``T * I`` is not contained in ``I``
    """
    def __init__(self, order, lattice):
        """Initialization"""
        _check_field(order, lattice)
        super(FractionalIdeal, self).__init__(lattice.field, lattice.basis)
        products = [a * b for a in order.elements() for b in self.elements()]
        if not self.contains_all(products):
            raise NotIdealError("%s is not stable under %s" % (lattice, order))
        self.order = order

    def __repr__(self):
        return "FractionalIdeal(%s, %s)" % (repr(self.basis),
                                            repr(self.order.basis))


def _check_field(first, second):
    if first.field != second.field:
        raise DimensionError("lattices of %s and %s" % (first.field,
                                                         second.field))


def span_lattice(field, generators):
    """Lattice spanned by field elements"""
    return KLattice.span(field, generators)


def lattice_product(first, second):
    """Lattice spanned by all pairwise basis products"""
    _check_field(first, second)
    return KLattice.span(first.field, [a * b for a in first.elements()
                                       for b in second.elements()])


def lattice_sum_of(first, second):
    """Sum of two lattices"""
    _check_field(first, second)
    return KLattice(first.field, lattice_sum(first.basis, second.basis))


def lattice_meet(first, second):
    """Intersection of two lattices"""
    _check_field(first, second)
    return KLattice(first.field,
                    lattice_intersection(first.basis, second.basis))


def colon(numerator, denominator):
    """Colon lattice ``(I : J) = {a : a J in I}``

    Computed as the intersection of ``b^-1 I`` over the basis ``b`` of ``J``.
    """
    _check_field(numerator, denominator)
    field = numerator.field
    num_elements = numerator.elements()
    result = None
    for element in denominator.elements():
        inverse = element.inverse()
        part = HNFBasis.from_rows([(inverse * a).coordinates
                                   for a in num_elements])
        result = part if result is None else lattice_intersection(result,
                                                                  part)
    return KLattice(field, result)


def multiplier_ring(lattice):
    """Ring of multipliers ``(L : L)`` as an :class:`Order`"""
    ring = colon(lattice, lattice)
    LOG.debug("multiplier ring of %s is %s", lattice, ring)
    return Order.from_lattice(ring)


def trace_gram(lattice):
    """Gram matrix ``Tr(b_i b_j)`` of the trace form on the basis"""
    elements = lattice.elements()
    return RationalMatrix([[(a * b).trace() for b in elements]
                           for a in elements])


def trace_dual(lattice):
    """Trace dual ``{a : Tr(a L) in Z}``"""
    gram_inverse = trace_gram(lattice).inverse()
    rows = gram_inverse * lattice.basis.matrix()
    return KLattice(lattice.field, HNFBasis.from_rows(rows.rows))


def disc_lattice(lattice):
    """Discriminant (Gram determinant of the trace form)"""
    return trace_gram(lattice).det()


def _as_ideal(order, ideal):
    if isinstance(ideal, FractionalIdeal):
        if ideal.order != order:
            raise OrderError("%s is an ideal of another order" % ideal)
        return ideal
    try:
        return FractionalIdeal(order, ideal)
    except NotIdealError:
        raise OrderError("%s is not an ideal of %s" % (ideal, order))


def ideal_norm(order, ideal):
    """Norm ``N_T(I) = [T : I]`` as a generalized index

    :raise OrderError: If ``ideal`` is not a fractional ideal of ``order``
    """
    ideal = _as_ideal(order, ideal)
    return generalized_index(ideal.basis, order.basis)


def conductor(order, maximal):
    """Conductor ``(T : O)``, the largest ``O``-ideal inside ``T``

    :raise ContainmentError: If ``T`` is not contained in ``O``
    """
    if not order.is_sublattice_of(maximal):
        raise ContainmentError("%s is not contained in %s" % (order, maximal))
    return FractionalIdeal(order, colon(order, maximal))


def different(order):
    """Different ``D_T = (T : T^dual)``"""
    return FractionalIdeal(order, colon(order, trace_dual(order)))


def discrepancy(order, ideal, maximal=None):
    """Discrepancy ``N_O(O I) / N_T(I)``

    :param Order order: Order ``T``
    :param ideal: Fractional ``T``-ideal
    :param Order maximal: Maximal order, computed when omitted
    :return: Positive :class:`fractions.Fraction`
    """
    ideal = _as_ideal(order, ideal)
    if maximal is None:
        maximal = order.field.maximal_order()
    extended = lattice_product(maximal, ideal)
    return generalized_index(extended.basis, maximal.basis) / \
        ideal_norm(order, ideal)


def inverse_ideal(order, ideal):
    """``(T : I)`` as a fractional ideal"""
    ideal = _as_ideal(order, ideal)
    return FractionalIdeal(order, colon(order, ideal))


def is_invertible(order, ideal):
    """Whether ``I (T : I) = T``"""
    ideal = _as_ideal(order, ideal)
    return lattice_product(ideal, colon(order, ideal)) == order


def is_gorenstein(order, maximal=None):
    """Whether the different has trivial discrepancy"""
    return discrepancy(order, different(order), maximal) == 1


def discrepancy_bounds(order, maximal=None):
    """Bounds ``(1, [O:T] [O:f])`` of the discrepancy over ``T``"""
    if maximal is None:
        maximal = order.field.maximal_order()
    index = generalized_index(order.basis, maximal.basis)
    cond = conductor(order, maximal)
    return Fraction(1), index * generalized_index(cond.basis, maximal.basis)


class IndexRelation(object):
    """Comparison of two generalized indices

    ``contained`` holds when ``lhs / rhs`` is an integer, meaning the
    fractional ideal ``lhs Z`` lies in ``rhs Z``; ``equal`` when they agree.
    """
    def __init__(self, name, lhs, rhs):
        """Initialization"""
        self.name = name
        self.lhs = as_fraction(lhs)
        self.rhs = as_fraction(rhs)

    def __repr__(self):
        return "IndexRelation(%s, %s, %s)" % (repr(self.name), self.lhs,
                                              self.rhs)

    @property
    def contained(self):
        """Whether ``lhs Z`` is contained in ``rhs Z``"""
        return (self.lhs / self.rhs).denominator == 1

    @property
    def equal(self):
        """Whether both indices agree"""
        return self.lhs == self.rhs


def index_relations(order, ideal, maximal=None):
    """The three index relations between ``T``, ``I`` and ``O``

    With ``I^-1 = (T : I)``:

    * ``[O : OI]`` against ``[T : I]``
    * ``[O : O I^-1]`` against ``[I : T]``
    * ``[T : I^-1]`` against ``[OI : O]``

    :return: :func:`list` of :class:`IndexRelation`
    """
    ideal = _as_ideal(order, ideal)
    if maximal is None:
        maximal = order.field.maximal_order()
    inverse = colon(order, ideal)
    extended = lattice_product(maximal, ideal)
    extended_inverse = lattice_product(maximal, inverse)
    return [
        IndexRelation("O:OI vs T:I",
                      generalized_index(extended.basis, maximal.basis),
                      generalized_index(ideal.basis, order.basis)),
        IndexRelation("O:OI^-1 vs I:T",
                      generalized_index(extended_inverse.basis,
                                        maximal.basis),
                      generalized_index(order.basis, ideal.basis)),
        IndexRelation("T:I^-1 vs OI:O",
                      generalized_index(inverse.basis, order.basis),
                      generalized_index(maximal.basis, extended.basis)),
    ]


def sample_ideal(order, rng, bound=50):
    """Random fractional ideal of an order

    Draws a full-rank integer combination of the order basis with entries
    in ``[-bound, bound]`` and saturates it: ``I <- I + T I`` until stable.

    :param Order order: Coefficient order
    :param random.Random rng: Seeded random generator
    :param int bound: Entry bound
    :return: :class:`FractionalIdeal`
    """
    field = order.field
    basis = order.elements()
    size = len(basis)
    while True:
        matrix = [[rng.randint(-bound, bound) for _ in range(size)]
                  for _ in range(size)]
        if RationalMatrix(matrix).det() != 0:
            break
    generators = []
    for row in matrix:
        element = field.zero()
        for coeff, b in zip(row, basis):
            element = element + b * coeff
        generators.append(element)
    lattice = KLattice.span(field, generators)
    while True:
        saturated = lattice_sum_of(lattice, lattice_product(order, lattice))
        if saturated == lattice:
            break
        lattice = saturated
    return FractionalIdeal(order, lattice)


def _mul_mod(constants, first, second, prime):
    size = len(first)
    result = [0] * size
    for i, a in enumerate(first):
        if not a:
            continue
        for j, b in enumerate(second):
            if not b:
                continue
            ab = a * b
            row = constants[i][j]
            for k in range(size):
                result[k] += ab * row[k]
    return [v % prime for v in result]


def _pow_mod(constants, element, exponent, prime, one):
    result = list(one)
    base = list(element)
    while exponent:
        if exponent & 1:
            result = _mul_mod(constants, result, base, prime)
        base = _mul_mod(constants, base, base, prime)
        exponent >>= 1
    return result


def _left_kernel_mod(rows, prime):
    """Basis of ``{v : v A = 0 mod p}`` by reducing ``[A | I]``"""
    size = len(rows)
    width = len(rows[0])
    work = [[v % prime for v in row] + [int(i == j) for j in range(size)]
            for i, row in enumerate(rows)]
    pivot = 0
    for col in range(width):
        found = next((r for r in range(pivot, size) if work[r][col]), None)
        if found is None:
            continue
        work[pivot], work[found] = work[found], work[pivot]
        inv = mod_inverse(work[pivot][col], prime)
        work[pivot] = [(v * inv) % prime for v in work[pivot]]
        for r in range(size):
            if r != pivot and work[r][col]:
                factor = work[r][col]
                work[r] = [(a - factor * b) % prime
                           for a, b in zip(work[r], work[pivot])]
        pivot += 1
    return [row[width:] for row in work[pivot:]]


def p_radical(order, prime):
    """``p``-radical ``{x in T : x^m in pT for some m}``

    Kernel of the Frobenius power ``x -> x^(p^j)`` (``p^j >= d``) on
    ``T / pT`` together with ``pT``.

    :return: :class:`KLattice`
    """
    prime = int(prime)
    field = order.field
    size = field.degree
    exponent = prime
    while exponent < size:
        exponent *= prime
    constants = order.structure_constants()
    one = [int(v) for v in order.coordinates([field.one()]).rows[0]]
    images = [_pow_mod(constants, [int(i == j) for j in range(size)],
                       exponent, prime, one)
              for i in range(size)]
    kernel = _left_kernel_mod(images, prime)
    elements = order.elements()
    generators = [e * prime for e in elements]
    for vector in kernel:
        element = field.zero()
        for coeff, b in zip(vector, elements):
            if coeff:
                element = element + b * coeff
        generators.append(element)
    return KLattice.span(field, generators)


def is_p_maximal(order, prime):
    """Whether the order is maximal at ``p``"""
    return multiplier_ring(p_radical(order, prime)) == order


def _square_primes(value):
    value = abs(int(value))
    return sorted(p for p, e in factorint(value).items() if e >= 2)


def _enlarge(order, prime):
    while True:
        bigger = multiplier_ring(p_radical(order, prime))
        if bigger == order:
            return order
        LOG.debug("enlarged order at %d to %s", prime, bigger)
        order = bigger


def maximal_order(field, hint=None):
    """Ring of integers of a number field

    Without a hint, Round-2 enlargement from ``Z[t]`` at every prime whose
    square divides ``disc(f)``. A hint is verified: it must be an order
    containing ``Z[t]`` with ``disc(f) = disc(hint) [hint : Z[t]]^2`` that
    is maximal at every prime whose square divides its discriminant.

    :param NumberField field: Field
    :param list hint: Optional basis rows (power basis coordinates)
    :return: :class:`Order`
    :raise NotMaximalError: If the hint fails verification
    :raise ScaleError: If ``|disc(f)|`` exceeds the cap and no hint is given
    """
    equation = Order.equation_order(field)
    disc = field.discriminant()
    if hint is not None:
        try:
            candidate = Order(field, HNFBasis.from_rows(hint))
        except (OrderError, RankError, DimensionError) as err:
            raise NotMaximalError("hint is not an order: %s" % err)
        if not equation.is_sublattice_of(candidate):
            raise NotMaximalError("hint does not contain Z[t]")
        index = generalized_index(equation.basis, candidate.basis)
        cand_disc = disc_lattice(candidate)
        if cand_disc * index ** 2 != disc:
            raise NotMaximalError("discriminant %s of the hint does not "
                                  "match %s" % (cand_disc, disc))
        for prime in _square_primes(cand_disc):
            if not is_p_maximal(candidate, prime):
                raise NotMaximalError("hint is not maximal at %d" % prime)
        LOG.info("verified maximal order hint of %s", field)
        return candidate

    if abs(disc) > DISCRIMINANT_CAP:
        raise ScaleError("|disc| = %s exceeds %d, a maximal order hint is "
                         "required" % (abs(disc), DISCRIMINANT_CAP))
    order = equation
    for prime in _square_primes(disc):
        order = _enlarge(order, prime)
    LOG.info("maximal order of %s has discriminant %s", field,
             disc_lattice(order))
    return order


def ideal_radical(order, ideal):
    """Product of the prime ideals containing an integral ideal

    The ``p``-radical of the order is the product of every prime above
    ``p``, so its sum with ``I`` keeps exactly the primes dividing ``I``.
    Only meaningful over a maximal order.

    :param Order order: Maximal order ``O``
    :param KLattice ideal: Integral ideal ``I``
    :return: :class:`KLattice`
    :raise ContainmentError: If ``I`` is not contained in ``O``
    """
    if not ideal.is_sublattice_of(order):
        raise ContainmentError("%s is not integral over %s" % (ideal, order))
    norm = int(generalized_index(ideal.basis, order.basis))
    radicals = order.lattice()
    for prime in sorted(factorint(norm)):
        radicals = lattice_product(radicals, p_radical(order, prime))
    return lattice_sum_of(ideal, radicals)


def ideal_square_root(order, ideal):
    """Integral ideal ``J`` with ``J^2 = I``

    Peels ``I = G_1 G_2 ... G_k`` where ``G_j`` is the product of the primes
    of exponent at least ``j``; the root is ``G_2 G_4 ...``.

    :param Order order: Maximal order ``O``
    :param KLattice ideal: Integral ideal ``I``
    :return: :class:`KLattice`
    :raise NotSquareError: If ``I`` is not a square
    """
    layers = []
    current = ideal.lattice()
    while current.basis != order.basis:
        layer = ideal_radical(order, current)
        smaller = colon(current, layer)
        if smaller.basis == current.basis:
            raise NotSquareError("%s is not invertible over %s"
                                 % (ideal, order))
        layers.append(layer)
        current = smaller
    root = order.lattice()
    for layer in layers[1::2]:
        root = lattice_product(root, layer)
    if lattice_product(root, root).basis != ideal.basis:
        raise NotSquareError("%s is not a square over %s" % (ideal, order))
    return root


def inverse_square_root_different(order):
    """Fractional ideal ``D^-1/2`` with ``(D^-1/2)^2 = O^dual``

    Self-dual normal elements of a Galois field whose conjugates span an
    ``O``-ideal lie in this ideal.

    :param Order order: Maximal order ``O``
    :return: :class:`FractionalIdeal`
    :raise NotSquareError: If the different is not a square
    """
    root = ideal_square_root(order, different(order))
    result = colon(order, root)
    if lattice_product(result, result).basis != trace_dual(order).basis:
        raise NotSquareError("inverse different of %s has no square root"
                             % order)
    LOG.info("inverse square root of the different of %s is %s",
             order.field, result)
    return FractionalIdeal(order, result)
