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
galoisheight.groups - Finite groups and their group algebras

Groups are given by a multiplication table on the indices ``0 .. n-1`` and
validated exhaustively. Group algebra elements are coefficient vectors
indexed by those same indices, with rational coefficients or coefficients in
a number field.
"""

import logging
import re
from collections import Counter
from fractions import Fraction
from itertools import product

from sympy.combinatorics.named_groups import DihedralGroup, SymmetricGroup

from .exact import RationalMatrix, as_fraction
from .exceptions import DivisionByZero, GroupError, NotUnitError


LOG = logging.getLogger(__name__)

_BUILTIN_RE = re.compile(r'^(C|D|S)(\d+)$')


def _permutation_name(perm):
    cycles = perm.cyclic_form
    if not cycles:
        return "1"
    return "".join("(%s)" % " ".join(str(i) for i in cycle)
                   for cycle in cycles)


# pylint: disable=useless-object-inheritance
class FiniteGroup(object):
    """Finite group given by its multiplication table

    :param list table: ``n x n`` table, ``table[g][h]`` is the index of ``gh``
    :param list names: Optional element names
    :param str name: Optional group label (``C3``, ``S3``, ...)
    :raise GroupError: If the table does not define a group
    """
    def __init__(self, table, names=None, name=None):
        """Initialization"""
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.order = len(self.table)
        self.name = name or "G%d" % self.order
        self._validate()
        if names is None:
            names = [str(idx) for idx in range(self.order)]
        if len(names) != self.order:
            raise GroupError("%d names for a group of order %d"
                             % (len(names), self.order))
        self.names = tuple(str(n) for n in names)
        self._orders = None

    def _validate(self):
        size = self.order
        if size == 0:
            raise GroupError("empty multiplication table")
        for row in self.table:
            if len(row) != size:
                raise GroupError("multiplication table is not square")
            if any(v < 0 or v >= size for v in row):
                raise GroupError("table entry out of range")

        identity = None
        for cand in range(size):
            if all(self.table[cand][h] == h and self.table[h][cand] == h
                   for h in range(size)):
                identity = cand
                break
        if identity is None:
            raise GroupError("multiplication table has no identity")
        self.identity = identity

        inverse = []
        for g in range(size):
            found = [h for h in range(size)
                     if self.table[g][h] == identity and
                     self.table[h][g] == identity]
            if not found:
                raise GroupError("element %d has no inverse" % g)
            inverse.append(found[0])
        self.inverse = tuple(inverse)

        table = self.table
        for i, j, k in product(range(size), repeat=3):
            if table[i][table[j][k]] != table[table[i][j]][k]:
                raise GroupError("multiplication is not associative on "
                                 "(%d, %d, %d)" % (i, j, k))

    def __repr__(self):
        return "FiniteGroup(%s, order=%d)" % (self.name, self.order)

    def __str__(self):
        return self.name

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.table)

    @classmethod
    def from_table(cls, table, names=None, name=None):
        """Build and validate a group from a raw table"""
        return cls(table, names=names, name=name)

    @classmethod
    def cyclic(cls, order):
        """Cyclic group ``C_n`` with generator index 1"""
        order = int(order)
        if order < 1:
            raise GroupError("cyclic group of order %d" % order)
        names = ["1", "g"] + ["g^%d" % k for k in range(2, order)]
        return cls([[(i + j) % order for j in range(order)]
                    for i in range(order)],
                   names=names[:order], name="C%d" % order)

    @classmethod
    def from_permutation_group(cls, pgroup, name=None):
        """Table of a :class:`sympy.combinatorics.PermutationGroup`

        Elements are sorted by array form, so the identity comes first.
        """
        elements = sorted(pgroup.generate(), key=lambda p: p.array_form)
        position = dict((tuple(p.array_form), idx)
                        for idx, p in enumerate(elements))
        table = [[position[tuple((a * b).array_form)] for b in elements]
                 for a in elements]
        return cls(table, names=[_permutation_name(p) for p in elements],
                   name=name)

    @classmethod
    def dihedral(cls, sides):
        """Dihedral group of order ``2 * sides``"""
        return cls.from_permutation_group(DihedralGroup(int(sides)),
                                          name="D%d" % int(sides))

    @classmethod
    def symmetric(cls, degree):
        """Symmetric group on ``degree`` letters"""
        return cls.from_permutation_group(SymmetricGroup(int(degree)),
                                          name="S%d" % int(degree))

    @classmethod
    def direct_product(cls, first, second):
        """Direct product, element ``(g, h)`` has index ``g * |H| + h``"""
        size = second.order
        table = [[first.table[g1][g2] * size + second.table[h1][h2]
                  for g2 in range(first.order) for h2 in range(size)]
                 for g1 in range(first.order) for h1 in range(size)]
        names = ["(%s,%s)" % (a, b) for a in first.names for b in second.names]
        return cls(table, names=names,
                   name="%sx%s" % (first.name, second.name))

    @classmethod
    def klein_four(cls):
        """Klein four-group ``C2 x C2``"""
        group = cls.direct_product(cls.cyclic(2), cls.cyclic(2))
        group.name = "V4"
        return group

    @classmethod
    def builtin(cls, label):
        """Group from a short label

        Accepted labels are ``Cn``, ``Dn`` (order ``2n``), ``Sn``, ``V4`` and
        products such as ``C2xC3``.

        :raise GroupError: If the label is unknown
        """
        label = str(label).strip()
        if 'x' in label:
            factors = [cls.builtin(part) for part in label.split('x')]
            group = factors[0]
            for factor in factors[1:]:
                group = cls.direct_product(group, factor)
            return group
        if label == 'V4':
            return cls.klein_four()
        match = _BUILTIN_RE.match(label)
        if not match:
            raise GroupError("unknown builtin group %s" % repr(label))
        kind, size = match.group(1), int(match.group(2))
        if kind == 'C':
            return cls.cyclic(size)
        if kind == 'D':
            return cls.dihedral(size)
        return cls.symmetric(size)

    def elements(self):
        """Element indices"""
        return range(self.order)

    def mul(self, first, second):
        """Index of the product ``first * second``"""
        return self.table[first][second]

    def inv(self, element):
        """Index of the inverse"""
        return self.inverse[element]

    def power(self, element, exponent):
        """Index of ``element ** exponent`` for ``exponent >= 0``"""
        result = self.identity
        for _ in range(exponent):
            result = self.table[result][element]
        return result

    def element_order(self, element):
        """Exact order of an element"""
        value, order = element, 1
        while value != self.identity:
            value = self.table[value][element]
            order += 1
        return order

    def order_counts(self):
        """Number of elements of each exact order

        :return: :func:`dict` mapping order to count
        """
        if self._orders is None:
            self._orders = dict(Counter(self.element_order(g)
                                        for g in self.elements()))
        return dict(self._orders)

    def is_abelian(self):
        """Whether the table is symmetric"""
        return all(self.table[g][h] == self.table[h][g]
                   for g in self.elements() for h in self.elements())

    def left_translation_sign(self, element):
        """Sign of the permutation ``h -> element * h``"""
        seen = set()
        sign = 1
        for start in self.elements():
            if start in seen:
                continue
            length, current = 0, start
            while current not in seen:
                seen.add(current)
                current = self.table[element][current]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign


def _coerce_scalar(value):
    try:
        return as_fraction(value)
    except TypeError:
        return value


def _is_zero(value):
    return value == 0


def generic_determinant(rows):
    """Determinant by Gaussian elimination over any exact field

    Scalars must support ``+ - * /`` and comparison with ``0``; used for
    coefficients in a number field.
    """
    work = [list(row) for row in rows]
    size = len(work)
    det = None
    sign = 1
    for col in range(size):
        pivot = next((r for r in range(col, size)
                      if not _is_zero(work[r][col])), None)
        if pivot is None:
            return work[0][0] * 0
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            sign = -sign
        head = work[col][col]
        det = head if det is None else det * head
        for r in range(col + 1, size):
            if _is_zero(work[r][col]):
                continue
            factor = work[r][col] / head
            work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return det * sign


class GroupAlgebraElement(object):
    """Element ``sum a_g [g]`` of a group algebra

    :param FiniteGroup group: Underlying group
    :param list coefficients: One scalar per group element index
    """
    def __init__(self, group, coefficients):
        """Initialization"""
        coefficients = tuple(_coerce_scalar(c) for c in coefficients)
        if len(coefficients) != group.order:
            raise GroupError("%d coefficients for a group of order %d"
                             % (len(coefficients), group.order))
        self.group = group
        self.coefficients = coefficients

    def __repr__(self):
        return "GroupAlgebraElement(%s, %s)" % (
            self.group.name, [str(c) for c in self.coefficients])

    def __str__(self):
        terms = ["%s[%s]" % (c, self.group.names[g])
                 for g, c in enumerate(self.coefficients) if not _is_zero(c)]
        return " + ".join(terms) or "0"

    def __getitem__(self, element):
        return self.coefficients[element]

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and \
            self.group == other.group and \
            all(a == b for a, b in zip(self.coefficients,
                                       other.coefficients))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.group, tuple(str(c) for c in self.coefficients)))

    @classmethod
    def basis(cls, group, element):
        """Basis element ``[g]``"""
        return cls(group, [int(g == element) for g in group.elements()])

    @classmethod
    def one(cls, group):
        """Unit ``[1]``"""
        return cls.basis(group, group.identity)

    @property
    def is_rational(self):
        """Whether every coefficient is a rational"""
        return all(isinstance(c, Fraction) for c in self.coefficients)

    def _check_group(self, other):
        if self.group != other.group:
            raise GroupError("elements of %s and %s cannot be combined"
                             % (self.group, other.group))

    def __add__(self, other):
        self._check_group(other)
        return GroupAlgebraElement(self.group,
                                   [a + b for a, b in zip(self.coefficients,
                                                          other.coefficients)])

    def __neg__(self):
        return GroupAlgebraElement(self.group,
                                   [-a for a in self.coefficients])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        """Scalar multiple"""
        return GroupAlgebraElement(self.group,
                                   [scalar * a for a in self.coefficients])

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def augmentation(self):
        """Sum of the coefficients"""
        return augmentation(self)

    def involution(self):
        """Anti-involution ``[g] -> [g^-1]``"""
        return involution(self)

    def group_determinant(self):
        """Group determinant of the coefficients"""
        return group_determinant(self)

    def in_U_G(self):
        """Membership in the unit group ``U_G``"""
        return in_U_G(self)

    def in_SU_G(self):
        """Membership in the special unit group ``SU_G``"""
        return in_SU_G(self)


def multiply(first, second):
    """Convolution product ``sum_{g,h} a_g b_h [gh]``

    :raise GroupError: If the elements live over different groups
    """
    first._check_group(second)
    group = first.group
    result = [None] * group.order
    for g, a in enumerate(first.coefficients):
        if _is_zero(a):
            continue
        for h, b in enumerate(second.coefficients):
            term = a * b
            k = group.table[g][h]
            result[k] = term if result[k] is None else result[k] + term
    zero = first.coefficients[0] * 0
    return GroupAlgebraElement(group, [zero if v is None else v
                                       for v in result])


def augmentation(element):
    """Augmentation ``sum a_g``"""
    total = element.coefficients[0]
    for coeff in element.coefficients[1:]:
        total = total + coeff
    return total


def involution(element):
    """``sum a_g [g^-1]``"""
    group = element.group
    return GroupAlgebraElement(group, [element.coefficients[group.inv(g)]
                                       for g in group.elements()])


def group_matrix(element):
    """Matrix ``(a_{gh^-1})`` of left multiplication by ``element``

    Its columns permute those of ``(a_{gh})``; the two determinants differ
    by the sign of ``h -> h^-1``.
    """
    group = element.group
    return [[element.coefficients[group.table[g][group.inv(h)]]
             for h in group.elements()]
            for g in group.elements()]


def group_determinant(element):
    """Group determinant ``det(a_{gh^-1})``, multiplicative in ``element``"""
    rows = group_matrix(element)
    if element.is_rational:
        return RationalMatrix(rows).det()
    return generic_determinant(rows)


def in_U_G(element):
    """Whether ``augmentation == 1`` and the group determinant is non-zero"""
    return augmentation(element) == 1 and \
        not _is_zero(group_determinant(element))


def in_SU_G(element):
    """Whether ``u * involution(u) == [1]``

    :raise NotUnitError: If the element is not in ``U_G``
    """
    if not in_U_G(element):
        raise NotUnitError("%s is not in U_G" % element)
    product_ = multiply(element, involution(element))
    one = GroupAlgebraElement.one(element.group)
    return all(a == b for a, b in zip(product_.coefficients, one.coefficients))


def unit_inverse(element):
    """Inverse of a rational unit of the group algebra

    Solves ``u * v = [1]`` through the left regular representation.

    :raise DivisionByZero: If the group determinant vanishes
    """
    group = element.group
    if _is_zero(group_determinant(element)):
        raise DivisionByZero("%s is not invertible" % element)
    # column h of left multiplication by u: u * [h] = sum_g a_g [gh]
    rows = [[Fraction(0)] * group.order for _ in group.elements()]
    for g, a in enumerate(element.coefficients):
        for h in group.elements():
            rows[group.table[g][h]][h] += a
    target = [[Fraction(int(k == group.identity))] for k in group.elements()]
    solution = RationalMatrix(rows).inverse() * RationalMatrix(target)
    return GroupAlgebraElement(group, [row[0] for row in solution.rows])
