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
galoisheight.heights - Anticanonical heights of normal pairs

The height of a normal pair ``(L, x)`` with ``|G| = n`` and ``K_L`` of
degree ``d`` is::

    H(L, x) = S ** (n / 2) * F ** (n / d)

where ``S`` is the sum of ``|phi(x)|^2`` over the complex embeddings of
``L`` and ``F`` is the finite part. ``F`` is computed twice and the two
values must agree exactly:

* directly, as ``1 / N_O(O Lambda)`` from a generalized index;
* from the invariants, as ``sqrt(|disc T / disc Lambda|) / dis(Lambda)``.
"""

import logging
from fractions import Fraction
from itertools import product
from multiprocessing import Pool

from sympy import integer_nthroot

from .exact import MAX_DOUBLINGS, RealEnclosure, as_fraction, content
from .exact import generalized_index, rational_sqrt
from .lattices import is_gorenstein, lattice_product
from .pairs import GAlgebra, Pair, SPLIT, conjugate_lattice, fiber_unit
from .pairs import is_self_dual, pair_invariants
from .exceptions import GroupError, InternalInvariantError, PrecisionError
from .exceptions import PreconditionError, ZeroError


LOG = logging.getLogger(__name__)

#: Default certified radius of reported heights.
DEFAULT_RADIUS = Fraction(1, 2 ** 40)


def _bits_for(radius):
    bits = 0
    while Fraction(1, 2 ** bits) > radius:
        bits += 1
    return bits


def _power(enclosure, exponent, bits):
    """``enclosure ** exponent`` for a half-integral exponent"""
    exponent = as_fraction(exponent)
    if exponent.denominator == 1:
        return enclosure ** int(exponent)
    return enclosure.sqrt(bits) ** int(exponent * 2)


# pylint: disable=useless-object-inheritance
class HeightReport(object):
    """Height of a normal pair with both finite part routes

    :param Pair pair: Normal pair
    :param RealEnclosure archimedean_sum: Enclosure of ``S``
    :param Fraction finite_part_invariant: ``F`` from the invariants
    :param Fraction finite_part_direct: ``F`` from ``N_O(O Lambda)``
    :param tuple exponents: ``(n / 2, n / d)``
    :param RealEnclosure height: Enclosure of ``H``
    :param PairInvariants invariants: Lattice invariants of the pair
    """
    def __init__(self, pair, archimedean_sum, finite_part_invariant,
                 finite_part_direct, exponents, height, invariants):
        """Initialization"""
        self.pair = pair
        self.archimedean_sum = archimedean_sum
        self.finite_part_invariant = finite_part_invariant
        self.finite_part_direct = finite_part_direct
        self.exponents = exponents
        self.height = height
        self.invariants = invariants

    def __repr__(self):
        return "HeightReport(%s, height=%s)" % (self.pair, self.height)

    @property
    def finite_parts_agree(self):
        """Whether both finite part routes agree"""
        return self.finite_part_invariant == self.finite_part_direct

    @property
    def finite_part(self):
        """Common finite part"""
        return self.finite_part_direct


def archimedean_sum(pair, target_radius=DEFAULT_RADIUS):
    """Enclosure of ``sum |phi(x)|^2`` over the complex embeddings

    Exact for split algebras. For totally real fields the enclosure is
    checked against the exact value ``Tr(x^2)``.

    :param Pair pair: Normal pair
    :param target_radius: Radius bound of the enclosure
    :return: :class:`~galoisheight.exact.RealEnclosure`
    :raise PrecisionError: If the refinement cap is reached
    """
    algebra = pair.algebra
    if algebra.kind == SPLIT:
        return RealEnclosure(sum((c * c for c in pair.x), Fraction(0)))
    target = as_fraction(target_radius)
    radius = target / 16
    field = algebra.field
    for _ in range(MAX_DOUBLINGS + 1):
        values = field.embeddings(pair.x, radius)
        total = RealEnclosure(0)
        for value in values:
            total = total + value.abs_squared()
        if total.rad <= target:
            break
        radius /= 256
    else:
        raise PrecisionError("archimedean sum of %s did not reach radius %s"
                             % (pair, target))
    if field.is_totally_real():
        exact = (pair.x * pair.x).trace()
        if not total.contains(exact):
            raise InternalInvariantError("enclosure %s misses Tr(x^2) = %s"
                                         % (total, exact))
    return total


def finite_part_direct(pair, maximal=None):
    """``1 / N_O(O Lambda)`` computed from a generalized index only"""
    field = pair.algebra.field
    if maximal is None:
        maximal = field.maximal_order()
    extended = lattice_product(maximal, conjugate_lattice(pair))
    return 1 / generalized_index(extended.basis, maximal.basis)


def finite_part_invariant(pair, invariants=None):
    """``sqrt(|disc T / disc Lambda|) / dis(Lambda)``

    The square root is taken exactly and compared with ``1 / N_T(Lambda)``.

    :raise InternalInvariantError: If the radicand is not a rational square
                                   or disagrees with the ideal norm
    """
    if invariants is None:
        invariants = pair_invariants(pair)
    root = rational_sqrt(abs(invariants.disc_order / invariants.disc_lattice))
    if root * invariants.norm != 1:
        raise InternalInvariantError("sqrt|disc T / disc L| = %s but "
                                     "N_T(L) = %s" % (root, invariants.norm))
    return root / invariants.discrepancy


def height(pair, target_radius=DEFAULT_RADIUS, maximal=None):
    """Anticanonical height of a normal pair

    :param Pair pair: Normal pair
    :param target_radius: Radius bound of the height enclosure
    :param Order maximal: Maximal order of ``K_L``, computed when omitted
    :return: :class:`HeightReport`
    :raise InternalInvariantError: If the finite part routes disagree
    """
    target = as_fraction(target_radius)
    invariants = pair_invariants(pair, maximal)
    direct = finite_part_direct(pair, invariants.maximal_order)
    invariant = finite_part_invariant(pair, invariants)
    if direct != invariant:
        raise InternalInvariantError("finite parts disagree for %s: %s != %s"
                                     % (pair, invariant, direct))
    order = pair.group.order
    exponents = (Fraction(order, 2), Fraction(order, invariants.degree))
    finite = direct ** int(exponents[1])

    radius = target
    for _ in range(MAX_DOUBLINGS + 1):
        arch = archimedean_sum(pair, radius)
        bits = _bits_for(radius) + 8
        value = _power(arch, exponents[0], bits) * finite
        if value.rad <= target:
            break
        radius /= 2 ** 16
    else:
        raise PrecisionError("height of %s did not reach radius %s"
                             % (pair, target))
    LOG.info("height of %s is %s", pair, value)
    return HeightReport(pair, arch, invariant, direct, exponents, value,
                        invariants)


def projective_height_parts(coords):
    """Archimedean and finite parts of the standard adelic metric

    :param list coords: Non-zero rational vector
    :return: ``(sum x_i^2, 1 / content)`` so that the height is
             ``sqrt(first) * second``
    :raise ZeroError: If every coordinate vanishes
    """
    coords = [as_fraction(c) for c in coords]
    if not any(coords):
        raise ZeroError("projective height of the zero vector")
    return sum((c * c for c in coords), Fraction(0)), 1 / content(coords)


def standard_projective_height(coords, exponent=1,
                               target_radius=DEFAULT_RADIUS):
    """``H_O(1)(x) ** exponent`` for a rational point of projective space

    :param list coords: Non-zero rational vector
    :param int exponent: Positive exponent
    :param target_radius: Radius bound when the value is irrational
    :return: :class:`~galoisheight.exact.RealEnclosure`
    :raise ZeroError: If every coordinate vanishes
    """
    arch, finite = projective_height_parts(coords)
    squared = RealEnclosure(arch * finite * finite)
    bits = _bits_for(as_fraction(target_radius)) + 8
    for _ in range(MAX_DOUBLINGS + 1):
        value = _power(squared, Fraction(int(exponent), 2), bits)
        if value.rad <= as_fraction(target_radius):
            return value
        bits *= 2
    raise PrecisionError("projective height of %s did not converge" % coords)


def gorenstein_height(pair, target_radius=DEFAULT_RADIUS):
    """Closed form ``[O : T] sqrt|d_L|`` of a Gorenstein self-dual pair

    :param Pair pair: Primitive self-dual pair of odd order with a
                      Gorenstein multiplier ring
    :return: :class:`~galoisheight.exact.RealEnclosure`
    :raise PreconditionError: If one of the conditions fails
    """
    if not pair.algebra.is_primitive():
        raise PreconditionError("%s is not a field pair" % pair)
    if pair.group.order % 2 == 0:
        raise GroupError("closed form needs a group of odd order")
    if not is_self_dual(pair):
        raise PreconditionError("%s is not self-dual" % pair)
    invariants = pair_invariants(pair)
    ring = invariants.multiplier_ring
    maximal = invariants.maximal_order
    if not is_gorenstein(ring, maximal):
        raise PreconditionError("multiplier ring of %s is not Gorenstein"
                                % pair)
    index = generalized_index(ring.basis, maximal.basis)
    root = RealEnclosure(abs(maximal.discriminant()))
    return root.sqrt(_bits_for(as_fraction(target_radius)) + 8) * index


def height_checkpoints(bound):
    """Geometric checkpoints ``1, 2, 4, ... <= B`` followed by ``B``"""
    bound = as_fraction(bound)
    points = []
    value = Fraction(1)
    while value <= bound:
        points.append(value)
        value *= 2
    if not points or points[-1] != bound:
        points.append(bound)
    return points


class SplitPoint(object):
    """Normal split pair ``x = a / sum(a)`` with its height

    :param tuple vector: Primitive integer vector ``a``
    :param int height_squared: ``H^2 = (sum a_i^2)^n``
    :param Pair pair: The pair
    :param HeightReport report: Height report of the pair
    """
    def __init__(self, vector, height_squared, pair, report):
        """Initialization"""
        self.vector = tuple(vector)
        self.height_squared = height_squared
        self.pair = pair
        self.report = report

    def __repr__(self):
        return "SplitPoint(%s, H^2=%d)" % (self.vector, self.height_squared)

    def sort_key(self):
        """Exact height first, then coordinates"""
        return (self.height_squared, self.pair.coordinates)


def _split_candidates(group, coefficient_bound, bound, denominator_bound,
                      first):
    """Primitive vectors with first coordinate ``first``"""
    order = group.order
    found = []
    algebra = GAlgebra.split(group)
    for rest in product(range(-coefficient_bound, coefficient_bound + 1),
                        repeat=order - 1):
        vector = (first,) + rest
        total = sum(vector)
        if total <= 0:
            continue
        if denominator_bound is not None and (
                total > denominator_bound or
                any(abs(v) > total for v in vector)):
            continue
        if content(vector) != 1:
            continue
        norm = sum(v * v for v in vector)
        height_squared = norm ** order
        if bound is not None and \
                height_squared * bound.denominator ** 2 > bound.numerator ** 2:
            continue
        pair = Pair(algebra, [Fraction(v, total) for v in vector],
                    validate=False)
        conj = algebra.conjugate_matrix(pair.x)
        if conj.det() == 0:
            continue
        found.append((height_squared, vector))
    return found


def enumerate_split_points(group, bound=None, denominator_bound=None,
                           parallelism=1, target_radius=DEFAULT_RADIUS):
    """Normal split pairs of bounded height or bounded denominator

    Normal split points are ``x = a / sum(a)`` for primitive integer vectors
    ``a`` with ``sum(a) > 0`` and non-vanishing group determinant; their
    height is ``|a| ** n``. A height bound ``B`` confines ``|a_i|`` to
    ``B ** (1/n)``; a denominator bound ``D`` asks for ``sum(a) <= D`` and
    ``|x_i| <= 1``.

    :param FiniteGroup group: Group of the split algebra
    :param bound: Height bound ``B``
    :param int denominator_bound: Denominator bound ``D``
    :param int parallelism: Worker processes
    :return: :func:`list` of :class:`SplitPoint` sorted by height
    """
    if bound is None and denominator_bound is None:
        raise PreconditionError("a height or denominator bound is required")
    if bound is not None:
        bound = as_fraction(bound)
        if bound <= 0:
            raise PreconditionError("height bound must be positive")
        coefficient_bound = int(integer_nthroot(
            bound.numerator // bound.denominator, group.order)[0])
    else:
        coefficient_bound = int(denominator_bound)
    if denominator_bound is not None:
        coefficient_bound = min(coefficient_bound, int(denominator_bound))
    firsts = range(-coefficient_bound, coefficient_bound + 1)
    args = [(group, coefficient_bound, bound, denominator_bound, first)
            for first in firsts]
    if parallelism > 1 and len(args) > 1:
        with Pool(processes=parallelism) as pool:
            jobs = [pool.apply_async(_split_candidates, arg) for arg in args]
            pool.close()
            pool.join()
            chunks = [job.get() for job in jobs]
    else:
        chunks = [_split_candidates(*arg) for arg in args]

    algebra = GAlgebra.split(group)
    maximal = algebra.field.maximal_order()
    points = []
    for height_squared, vector in sorted(c for chunk in chunks
                                         for c in chunk):
        total = sum(vector)
        pair = Pair(algebra, [Fraction(v, total) for v in vector])
        report = height(pair, target_radius, maximal)
        if not report.height.square().contains(height_squared):
            raise InternalInvariantError("height of %s misses |a|^n" % pair)
        points.append(SplitPoint(vector, height_squared, pair, report))
    points.sort(key=lambda point: point.sort_key())
    LOG.info("%d normal split points for %s", len(points), group)
    return points


def count_split_points(points, checkpoints):
    """Running counts ``N(B')`` of points with height at most ``B'``

    :return: :func:`list` of ``(checkpoint, count)``
    """
    counts = []
    for checkpoint in checkpoints:
        checkpoint = as_fraction(checkpoint)
        limit = checkpoint * checkpoint
        counts.append((checkpoint,
                       sum(1 for point in points
                           if point.height_squared <= limit)))
    return counts


def split_unit_height(pair, target_radius=DEFAULT_RADIUS):
    """Projective height of the fiber unit coefficients raised to ``|G|``"""
    coeffs = [c.rational() for c in fiber_unit(pair).coefficients]
    return standard_projective_height(coeffs, pair.group.order,
                                      target_radius)
