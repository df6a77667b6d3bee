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
galoisheight.schemas - JSON and CSV documents

Exact rationals are written as strings ``"p/q"`` (``"p"`` for integers) and
never as floats. Enclosures are written as ``{"mid": ..., "rad": ...}`` with
decimal strings rounded so that the written ball contains the exact one.

Documents:

* group: ``{"builtin": "C3"}`` or ``{"order": n, "table": [[...]],
  "names": [...]}``
* field: ``{"min_poly": [c0, ..., 1], "galois": {"group": <group>,
  "generator_images": {"1": [...]}}, "maximal_order_hint": [[...]]}``
* pair: ``{"algebra": <group or field>, "x": [...]}``
* order: ``{"field": <field>, "basis": [[...]]}``
* ideal: ``{"basis": [[...]]}``

Any nested document may be replaced by a file name, resolved relative to the
referring document.
"""

import csv
import json
import logging
import os
from fractions import Fraction

from .exact import HNFBasis, as_fraction
from .fields import GaloisAction, NumberField
from .groups import FiniteGroup
from .lattices import FractionalIdeal, KLattice, Order
from .pairs import GAlgebra, Pair, SearchBox
from .exceptions import GroupError, RankError, SchemaError


LOG = logging.getLogger(__name__)

#: Decimal digits of enclosure midpoints and radii.
DECIMAL_DIGITS = 30


def format_rational(value):
    """``"p/q"`` string of an exact rational, ``"p"`` for integers"""
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def parse_rational(value, source="<input>"):
    """Exact rational from an integer or a ``"p/q"`` string

    :raise SchemaError: For floats, booleans and malformed strings
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise SchemaError(source, "%s is not an exact rational" % repr(value))
    try:
        return as_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise SchemaError(source, "%s is not an exact rational" % repr(value))


def _floor(value):
    return value.numerator // value.denominator


def format_decimal(value, digits=DECIMAL_DIGITS):
    """Decimal string of a rational rounded to ``digits`` places"""
    scaled = _floor(as_fraction(value) * 10 ** digits + Fraction(1, 2))
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    if not digits:
        return sign + text
    return "%s%s.%s" % (sign, text[:-digits], text[-digits:])


class EnclosureRecord(dict):
    """Decimal ``mid``/``rad`` of an enclosure

    The radius is rounded up and widened by the rounding error of the
    midpoint, so the written ball contains the exact one.

    :param RealEnclosure enclosure: Enclosure to write
    :param int digits: Decimal places
    """
    def __init__(self, enclosure, digits=DECIMAL_DIGITS):
        """Initialization"""
        super(EnclosureRecord, self).__init__()
        scale = 10 ** digits
        mid = Fraction(_floor(enclosure.mid * scale + Fraction(1, 2)), scale)
        rad = enclosure.rad + abs(enclosure.mid - mid)
        rad = Fraction(-((-rad.numerator * scale) // rad.denominator), scale)
        self['mid'] = format_decimal(mid, digits)
        self['rad'] = format_decimal(rad, digits)

    def __repr__(self):
        return "EnclosureRecord(mid=%s, rad=%s)" % (self['mid'], self['rad'])


def load_json(path):
    """Load a JSON document

    :raise SchemaError: If the file cannot be read or parsed
    """
    try:
        with open(path) as json_fp:
            return json.load(json_fp)
    except (IOError, OSError) as err:
        raise SchemaError(path, "cannot read file: %s" % err)
    except ValueError as err:
        raise SchemaError(path, "malformed JSON: %s" % err)


def _resolve(value, source):
    """Inline document, or a document loaded from a relative file name"""
    if isinstance(value, str):
        path = os.path.join(os.path.dirname(source), value)
        return load_json(path), path
    return value, source


def _require(data, key, source, kind=None):
    if not isinstance(data, dict):
        raise SchemaError(source, "expected an object, got %s"
                          % type(data).__name__)
    if key not in data:
        raise SchemaError(source, "missing key %s" % repr(key))
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaError(source, "%s must be a %s" % (repr(key),
                                                        kind.__name__))
    return value


def _rational_rows(rows, source):
    if not isinstance(rows, list) or \
            not all(isinstance(row, list) for row in rows):
        raise SchemaError(source, "expected a list of rows")
    return [[parse_rational(v, source) for v in row] for row in rows]


def _integer(value, source, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(source, "%s must be an integer" % name)
    return value


def parse_group(data, source="<input>"):
    """:class:`~galoisheight.groups.FiniteGroup` from a group document

    :raise SchemaError: For malformed documents or unknown builtins
    :raise GroupError: If the table does not define a group
    """
    data, source = _resolve(data, source)
    if isinstance(data, dict) and 'builtin' in data:
        try:
            return FiniteGroup.builtin(data['builtin'])
        except GroupError as err:
            raise SchemaError(source, str(err))
    order = _integer(_require(data, 'order', source), source, 'order')
    table = _require(data, 'table', source, list)
    if len(table) != order or not all(isinstance(row, list) and
                                      len(row) == order for row in table):
        raise SchemaError(source, "table must be %d x %d" % (order, order))
    rows = [[_integer(v, source, 'table entry') for v in row]
            for row in table]
    names = data.get('names')
    if names is not None and (not isinstance(names, list) or
                              len(names) != order):
        raise SchemaError(source, "names must list %d entries" % order)
    return FiniteGroup(rows, names=names, name=data.get('name'))


def group_record(group):
    """Group document of a group"""
    return {'order': group.order,
            'table': [list(row) for row in group.table],
            'names': list(group.names),
            'name': group.name}


def _element_index(group, key, source):
    """Index of a decimal key, otherwise of an element name"""
    try:
        index = int(key)
    except (TypeError, ValueError):
        if key in group.names:
            return group.names.index(key)
        raise SchemaError(source, "unknown group element %s" % repr(key))
    if not 0 <= index < group.order:
        raise SchemaError(source, "group element %d out of range" % index)
    return index


def parse_field(data, source="<input>"):
    """Field, Galois action and maximal order hint of a field document

    :return: ``(NumberField, GaloisAction or None, hint rows or None)``
    """
    data, source = _resolve(data, source)
    coeffs = _require(data, 'min_poly', source, list)
    field = NumberField([_integer(c, source, 'min_poly coefficient')
                         for c in coeffs])
    action = None
    if data.get('galois') is not None:
        galois = _require(data, 'galois', source, dict)
        if 'group' in galois:
            group = parse_group(galois['group'], source)
        else:
            group = FiniteGroup.cyclic(field.degree)
        images = _require(galois, 'generator_images', source, dict)
        generator_images = {}
        for key, coords in images.items():
            row = _rational_rows([coords], source)[0]
            if len(row) != field.degree:
                raise SchemaError(source, "image of %s needs %d coordinates"
                                  % (key, field.degree))
            generator_images[_element_index(group, key, source)] = row
        action = GaloisAction.from_generators(field, group, generator_images)
    hint = data.get('maximal_order_hint')
    if hint is not None:
        hint = _rational_rows(hint, source)
    return field, action, hint


def field_record(field, action=None, hint=None):
    """Field document of a field"""
    record = {'min_poly': list(field.min_poly)}
    if action is not None:
        record['galois'] = {
            'group': group_record(action.group),
            'generator_images': dict(
                (str(g), [format_rational(c) for c in img.coordinates])
                for g, img in enumerate(action.images)),
        }
    if hint is not None:
        record['maximal_order_hint'] = [[format_rational(v) for v in row]
                                        for row in hint]
    return record


def parse_algebra(data, source="<input>"):
    """Split algebra of a group document or Galois field of a field document

    :return: ``(GAlgebra, hint rows or None)``
    """
    data, source = _resolve(data, source)
    if isinstance(data, dict) and 'min_poly' in data:
        field, action, hint = parse_field(data, source)
        if action is None:
            raise SchemaError(source, "field algebra needs a 'galois' entry")
        return GAlgebra.galois_field(field, action), hint
    return GAlgebra.split(parse_group(data, source)), None


def parse_pair(data, source="<input>"):
    """Pair of a pair document

    :return: ``(Pair, hint rows or None)``
    :raise NotNormalError: If ``x`` is not normal
    """
    data, source = _resolve(data, source)
    algebra, hint = parse_algebra(_require(data, 'algebra', source), source)
    coords = [parse_rational(v, source)
              for v in _require(data, 'x', source, list)]
    if len(coords) != algebra.dimension:
        raise SchemaError(source, "x needs %d coordinates"
                          % algebra.dimension)
    return Pair(algebra, coords), hint


def pair_record(pair):
    """Pair document (inline algebra)"""
    algebra = pair.algebra
    if algebra.is_primitive():
        algebra_doc = field_record(algebra.field, algebra.action)
    else:
        algebra_doc = group_record(algebra.group)
    return {'algebra': algebra_doc,
            'x': [format_rational(c) for c in pair.coordinates]}


def _lattice_basis(rows, source):
    try:
        return HNFBasis.from_rows(_rational_rows(rows, source))
    except RankError as err:
        raise SchemaError(source, "basis is rank deficient: %s" % err)


def parse_order(data, source="<input>"):
    """Order of an order document

    :return: ``(Order, field hint rows or None)``
    :raise OrderError: If the basis does not span an order
    """
    data, source = _resolve(data, source)
    field, _, hint = parse_field(_require(data, 'field', source), source)
    basis = _lattice_basis(_require(data, 'basis', source, list), source)
    if basis.dimension != field.degree:
        raise SchemaError(source, "basis must have %d rows" % field.degree)
    return Order(field, basis), hint


def parse_ideal(data, order, source="<input>"):
    """Fractional ideal of an ideal document over a given order

    :raise NotIdealError: If the lattice is not stable under the order
    """
    data, source = _resolve(data, source)
    basis = _lattice_basis(_require(data, 'basis', source, list), source)
    if basis.dimension != order.field.degree:
        raise SchemaError(source, "basis must have %d rows"
                          % order.field.degree)
    return FractionalIdeal(order, KLattice(order.field, basis))


def lattice_record(lattice):
    """``{"denominator": ..., "basis": [[...]]}`` of a lattice"""
    return {'denominator': lattice.basis.denominator,
            'basis': [list(row) for row in lattice.basis.basis]}


#: ``basis`` value of a search box document selecting the ideal ``D^-1/2``.
INVERSE_SQRT_DIFFERENT = 'inverse_sqrt_different'


def parse_search_box(data, source="<input>", algebra=None, maximal=None):
    """Search box of ``{"coefficient_bound": C, "denominator_bound": D}``

    An optional ``basis`` holds coordinate rows, or the string
    ``"inverse_sqrt_different"`` to search the ideal ``D^-1/2`` of the
    field algebra ``algebra``.

    :raise SchemaError: If the ideal basis is requested without a field
    """
    data, source = _resolve(data, source)
    coefficient_bound = _integer(_require(data, 'coefficient_bound', source),
                                 source, 'coefficient_bound')
    denominator_bound = _integer(_require(data, 'denominator_bound', source),
                                 source, 'denominator_bound')
    basis = data.get('basis')
    if basis == INVERSE_SQRT_DIFFERENT:
        if algebra is None or not algebra.is_primitive():
            raise SchemaError(source, "%s needs a field algebra"
                              % repr(INVERSE_SQRT_DIFFERENT))
        return SearchBox.inverse_sqrt_different(
            algebra, coefficient_bound, denominator_bound, maximal)
    if basis is not None:
        basis = _rational_rows(basis, source)
    return SearchBox(coefficient_bound, denominator_bound, basis)


def height_record(report):
    """JSON document of a height report"""
    inv = report.invariants
    return {
        'pair': [format_rational(c) for c in report.pair.coordinates],
        'algebra': report.pair.algebra.kind,
        'group': report.pair.group.name,
        'archimedean_sum': EnclosureRecord(report.archimedean_sum),
        'finite_part_invariant': format_rational(
            report.finite_part_invariant),
        'finite_part_direct': format_rational(report.finite_part_direct),
        'finite_parts_agree': report.finite_parts_agree,
        'exponents': [format_rational(e) for e in report.exponents],
        'height': EnclosureRecord(report.height),
        'invariants': {
            'degree': inv.degree,
            'lattice': lattice_record(inv.lattice),
            'multiplier_ring': lattice_record(inv.multiplier_ring),
            'disc_lattice': format_rational(inv.disc_lattice),
            'disc_order': format_rational(inv.disc_order),
            'norm': format_rational(inv.norm),
            'discrepancy': format_rational(inv.discrepancy),
        },
    }


HEIGHT_CSV_HEADER = ['x', 'height_mid', 'height_rad',
                     'finite_part_invariant', 'finite_part_direct',
                     'finite_parts_agree', 'discrepancy']


def height_csv_row(report):
    """CSV row of a height report, see :data:`HEIGHT_CSV_HEADER`"""
    record = height_record(report)
    return [" ".join(record['pair']), record['height']['mid'],
            record['height']['rad'], record['finite_part_invariant'],
            record['finite_part_direct'],
            str(record['finite_parts_agree']).lower(),
            record['invariants']['discrepancy']]


def write_json(data, output):
    """Write a JSON document (2 spaces, sorted keys) and a newline"""
    json.dump(data, output, ensure_ascii=True, indent=2, sort_keys=True)
    output.write("\n")


def write_csv(header, rows, output):
    """Write a header row and data rows with LF line endings"""
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
