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
galoisheight.cli - Command line interface

Sub-commands::

    galoisheight height PAIR_FILE
    galoisheight discrepancy ORDER_FILE IDEAL_FILE
    galoisheight enumerate GROUP_FILE --bound B [--output out.csv]
    galoisheight molien GROUP_FILE [GROUP_FILE ...]
    galoisheight selfdual-search ALGEBRA_FILE --coefficient-bound C
                                 --denominator-bound D
                                 [--inverse-sqrt-different]

The process exit code is 0 on success and the ``exit_code`` of the raised
:class:`~galoisheight.exceptions.GaloisHeightError` otherwise.
"""

import argparse
import logging
import sys
from fractions import Fraction

from . import LOG_LEVELS, __version__, basic_logger
from .cache import FieldCache
from .exceptions import ConfigError, GaloisHeightError, SchemaError
from .heights import count_split_points, enumerate_split_points
from .heights import height, height_checkpoints
from .invariants import invariant_dimension_bruteforce
from .invariants import invariant_dimension_formula, unnormalized_formula
from .lattices import conductor, discrepancy, discrepancy_bounds
from .lattices import index_relations
from .lattices import is_gorenstein, is_invertible
from .pairs import selfdual_search
from .schemas import HEIGHT_CSV_HEADER, INVERSE_SQRT_DIFFERENT
from .schemas import format_decimal, format_rational
from .schemas import height_csv_row, height_record, lattice_record
from .schemas import load_json, parse_algebra, parse_group, parse_ideal
from .schemas import parse_order, parse_pair, parse_rational
from .schemas import parse_search_box, write_csv
from .schemas import write_json


LOG = logging.getLogger(__name__)

OUTPUT_FORMATS = ('json', 'csv')


# pylint: disable=useless-object-inheritance
class WorkspaceConfig(object):
    """Settings shared by every command

    :param int precision_bits: Enclosure radii are at most ``2^-bits``
    :param str cache_dir: Field cache directory, falls back to
                          ``$GALOISHEIGHT_CACHE_DIR``; no cache when unset
    :param int parallelism: Worker processes for enumeration and search
    :param str output_format: ``json`` or ``csv``
    :raise ConfigError: If a setting is out of range
    """
    def __init__(self, precision_bits=40, cache_dir=None, parallelism=1,
                 output_format='json'):
        """Initialization"""
        super(WorkspaceConfig, self).__init__()
        if isinstance(precision_bits, bool) or \
                not isinstance(precision_bits, int) or precision_bits < 1:
            raise ConfigError("precision bits must be a positive integer, "
                              "got %s" % repr(precision_bits))
        if isinstance(parallelism, bool) or \
                not isinstance(parallelism, int) or parallelism < 1:
            raise ConfigError("parallelism must be at least 1, got %s"
                              % repr(parallelism))
        if output_format not in OUTPUT_FORMATS:
            raise ConfigError("output format must be one of %s, got %s"
                              % (", ".join(OUTPUT_FORMATS),
                                 repr(output_format)))
        self.precision_bits = precision_bits
        self.parallelism = parallelism
        self.output_format = output_format
        self.cache = FieldCache.from_environment(cache_dir)

    def __repr__(self):
        return "WorkspaceConfig(precision_bits=%d, parallelism=%d, " \
               "output_format=%s, cache=%s)" % (
                   self.precision_bits, self.parallelism,
                   repr(self.output_format), repr(self.cache))

    @property
    def target_radius(self):
        """``2^-precision_bits``, always inside ``(0, 1)``"""
        return Fraction(1, 2 ** self.precision_bits)

    def maximal_order(self, field, action=None, hint=None):
        """Maximal order through the cache when one is configured"""
        if self.cache is not None:
            return self.cache.maximal_order(field, action, hint)
        return field.maximal_order(hint=hint)


def cmd_height(pair_file, config, output):
    """Write the height report of a pair document

    :return: :class:`~galoisheight.heights.HeightReport`
    """
    pair, hint = parse_pair(load_json(pair_file), pair_file)
    algebra = pair.algebra
    maximal = config.maximal_order(algebra.field, algebra.action, hint)
    report = height(pair, config.target_radius, maximal)
    if config.output_format == 'csv':
        write_csv(HEIGHT_CSV_HEADER, [height_csv_row(report)], output)
    else:
        write_json(height_record(report), output)
    return report


def discrepancy_record(order, ideal, maximal, cond):
    """Report of an ideal over an order"""
    lower, upper = discrepancy_bounds(order, maximal)
    return {
        'order': lattice_record(order),
        'ideal': lattice_record(ideal),
        'maximal_order': lattice_record(maximal),
        'conductor': lattice_record(cond),
        'discrepancy': format_rational(discrepancy(order, ideal, maximal)),
        'bounds': [format_rational(lower), format_rational(upper)],
        'invertible': is_invertible(order, ideal),
        'gorenstein': is_gorenstein(order, maximal),
        'index_relations': [
            {'name': rel.name, 'lhs': format_rational(rel.lhs),
             'rhs': format_rational(rel.rhs), 'contained': rel.contained,
             'equal': rel.equal}
            for rel in index_relations(order, ideal, maximal)],
    }


DISCREPANCY_CSV_HEADER = ['discrepancy', 'lower_bound', 'upper_bound',
                          'invertible', 'gorenstein']


def cmd_discrepancy(order_file, ideal_file, config, output):
    """Write the discrepancy report of an ideal document over an order

    :return: Report :class:`dict`
    """
    order, hint = parse_order(load_json(order_file), order_file)
    ideal = parse_ideal(load_json(ideal_file), order, ideal_file)
    field = order.field
    maximal = config.maximal_order(field, hint=hint)
    if config.cache is not None:
        cond = config.cache.conductor(order, maximal)
    else:
        cond = conductor(order, maximal)
    record = discrepancy_record(order, ideal, maximal, cond)
    if config.output_format == 'csv':
        write_csv(DISCREPANCY_CSV_HEADER,
                  [[record['discrepancy']] + record['bounds'] +
                   [str(record['invertible']).lower(),
                    str(record['gorenstein']).lower()]], output)
    else:
        write_json(record, output)
    return record


ENUMERATE_CSV_HEADER = ['height_squared', 'height', 'x']
CHECKPOINT_CSV_HEADER = ['bound', 'count']


def cmd_enumerate(group_file, bound, config, output, checkpoints=None,
                  denominator_bound=None):
    """Write normal split points of height at most ``bound`` as CSV

    Rows are sorted by exact height, then by coordinates, so the output does
    not depend on the parallelism degree. Running counts ``N(B')`` go to
    ``checkpoints`` when given and to the log otherwise.

    :return: :func:`list` of :class:`~galoisheight.heights.SplitPoint`
    """
    group = parse_group(load_json(group_file), group_file)
    bound = parse_rational(bound, "--bound")
    if bound <= 0:
        raise ConfigError("--bound must be positive, got %s" % bound)
    points = enumerate_split_points(group, bound, denominator_bound,
                                    config.parallelism, config.target_radius)
    rows = [[format_rational(point.height_squared),
             format_decimal(point.report.height.mid, 12),
             " ".join(format_rational(c) for c in point.pair.coordinates)]
            for point in points]
    write_csv(ENUMERATE_CSV_HEADER, rows, output)
    counts = count_split_points(points, height_checkpoints(bound))
    if checkpoints is not None:
        write_csv(CHECKPOINT_CSV_HEADER,
                  [[format_rational(b), str(n)] for b, n in counts],
                  checkpoints)
    for checkpoint, count in counts:
        LOG.info("N(%s) = %d", format_rational(checkpoint), count)
    return points


MOLIEN_CSV_HEADER = ['group', 'order', 'bruteforce', 'formula',
                     'unnormalized', 'agree']


def cmd_molien(group_files, output):
    """Write one CSV row of invariant counts per group document

    :raise ScaleError: If a group exceeds the orbit count cap
    """
    rows = []
    for group_file in group_files:
        group = parse_group(load_json(group_file), group_file)
        brute = invariant_dimension_bruteforce(group)
        formula = invariant_dimension_formula(group)
        rows.append([group.name, str(group.order), str(brute), str(formula),
                     str(unnormalized_formula(group)),
                     str(brute == formula).lower()])
    write_csv(MOLIEN_CSV_HEADER, rows, output)
    return rows


def cmd_selfdual_search(algebra_file, box, config, output):
    """Write the self-dual elements of a search box as a JSON list

    :param dict box: Search box document, see
                     :func:`~galoisheight.schemas.parse_search_box`
    :return: :func:`list` of :class:`~galoisheight.pairs.Pair`
    """
    algebra, hint = parse_algebra(load_json(algebra_file), algebra_file)
    maximal = None
    if box.get('basis') == INVERSE_SQRT_DIFFERENT and \
            algebra.is_primitive():
        maximal = config.maximal_order(algebra.field, algebra.action, hint)
    search_box = parse_search_box(box, algebra_file, algebra, maximal)
    pairs = selfdual_search(algebra, search_box, config.parallelism)
    write_json([[format_rational(c) for c in pair.coordinates]
                for pair in pairs], output)
    return pairs


def build_parser():
    """Argument parser of the ``galoisheight`` command"""
    fmt_class = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(
        prog='galoisheight', formatter_class=fmt_class,
        description="Exact anticanonical heights of Galois algebra pairs")
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="increase log verbosity")
    parser.add_argument('--precision-bits', type=int, default=40,
                        help="enclosure radii are at most 2^-bits")
    parser.add_argument('--parallelism', type=int, default=1,
                        help="worker processes for enumeration and search")
    parser.add_argument('--cache-dir', default=None,
                        help="field cache directory "
                             "(default: $GALOISHEIGHT_CACHE_DIR)")
    parser.add_argument('--format', dest='output_format', default='json',
                        choices=OUTPUT_FORMATS, help="report format")
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    sub = subparsers.add_parser('height', help="height of a pair")
    sub.add_argument('pair_file')

    sub = subparsers.add_parser('discrepancy',
                                help="discrepancy of an ideal")
    sub.add_argument('order_file')
    sub.add_argument('ideal_file')

    sub = subparsers.add_parser('enumerate',
                                help="split points of bounded height")
    sub.add_argument('group_file')
    sub.add_argument('--bound', required=True,
                     help="height bound, an exact rational such as 3/2")
    sub.add_argument('--denominator-bound', type=int, default=None)
    sub.add_argument('--output', default=None,
                     help="points CSV (default: stdout)")
    sub.add_argument('--checkpoints', default=None,
                     help="N(B') CSV (default: logged)")

    sub = subparsers.add_parser('molien', help="invariant counts")
    sub.add_argument('group_files', nargs='+')

    sub = subparsers.add_parser('selfdual-search',
                                help="self-dual elements in a box")
    sub.add_argument('algebra_file')
    sub.add_argument('--coefficient-bound', type=int, required=True)
    sub.add_argument('--denominator-bound', type=int, required=True)
    sub.add_argument('--inverse-sqrt-different', action='store_true',
                     help="search the ideal D^-1/2 of a field algebra")
    return parser


def _open_output(path):
    if path is None:
        return None
    try:
        return open(path, 'w', newline='')
    except (IOError, OSError) as err:
        raise SchemaError(path, "cannot write file: %s" % err)


def run(args, output):
    """Dispatch parsed arguments to a command"""
    config = WorkspaceConfig(args.precision_bits, args.cache_dir,
                             args.parallelism, args.output_format)
    LOG.debug("running %s with %s", args.command, config)
    if args.command == 'height':
        cmd_height(args.pair_file, config, output)
    elif args.command == 'discrepancy':
        cmd_discrepancy(args.order_file, args.ideal_file, config, output)
    elif args.command == 'enumerate':
        points_fp = _open_output(args.output)
        counts_fp = _open_output(args.checkpoints)
        try:
            cmd_enumerate(args.group_file, args.bound, config,
                          points_fp or output, counts_fp,
                          args.denominator_bound)
        finally:
            for handle in (points_fp, counts_fp):
                if handle is not None:
                    handle.close()
    elif args.command == 'molien':
        cmd_molien(args.group_files, output)
    elif args.command == 'selfdual-search':
        box = {'coefficient_bound': args.coefficient_bound,
               'denominator_bound': args.denominator_bound}
        if args.inverse_sqrt_different:
            box['basis'] = INVERSE_SQRT_DIFFERENT
        cmd_selfdual_search(args.algebra_file, box, config, output)


def main(argv=None, output=None):
    """Entry point of the ``galoisheight`` command

    :param list argv: Arguments, ``sys.argv[1:]`` when None
    :param output: Stream receiving reports, ``sys.stdout`` when None
    :return: Process exit code
    """
    args = build_parser().parse_args(argv)
    logger = logging.getLogger('galoisheight')
    clevel = min(1 + args.verbose, len(LOG_LEVELS) - 1)
    if not logger.handlers:
        basic_logger('galoisheight', clevel)
    logger.setLevel(LOG_LEVELS[clevel])
    try:
        run(args, output or sys.stdout)
    except GaloisHeightError as err:
        LOG.error("%s", err)
        return err.exit_code
    return 0
