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
galoisheight.cache - On-disk cache of per-field data

One JSON file per field, named after a SHA-256 fingerprint of the minimal
polynomial and the Galois images. Cached maximal orders are only ever used
as hints: they go through the same verification as user supplied hints, and
a stale entry is recomputed and overwritten.
"""

import hashlib
import json
import logging
import os

from .exact import HNFBasis
from .exceptions import NotMaximalError, SchemaError
from .lattices import conductor
from .schemas import format_rational, lattice_record, load_json


LOG = logging.getLogger(__name__)

#: Environment variable overriding the cache directory.
CACHE_DIR_ENV = "GALOISHEIGHT_CACHE_DIR"


def fingerprint(field, action=None):
    """Hex SHA-256 of the minimal polynomial and the Galois images"""
    payload = {'min_poly': list(field.min_poly), 'images': []}
    if action is not None:
        payload['images'] = [[format_rational(c) for c in img.coordinates]
                             for img in action.images]
    text = json.dumps(payload, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(text.encode('ascii')).hexdigest()


def _basis_key(lattice):
    return json.dumps(lattice_record(lattice), sort_keys=True,
                      separators=(',', ':'))


class CachedFieldRecord(dict):
    """Cached data of one field

    :param str key: Field fingerprint
    :param list min_poly: Minimal polynomial coefficients
    :param dict maximal_order: Lattice record of the maximal order
    :param str discriminant: Discriminant of the maximal order
    :param dict conductors: Order lattice key to conductor lattice record
    """
    def __init__(self, key, min_poly, maximal_order=None, discriminant=None,
                 conductors=None):
        """Initialization"""
        super(CachedFieldRecord, self).__init__()
        self['fingerprint'] = key
        self['min_poly'] = list(min_poly)
        self['maximal_order'] = maximal_order
        self['discriminant'] = discriminant
        self['conductors'] = dict(conductors or {})

    def __repr__(self):
        return "CachedFieldRecord(%s, %s)" % (repr(self['fingerprint']),
                                              repr(self['min_poly']))

    @classmethod
    def from_dict(cls, data, source):
        """Validate a loaded document

        :raise SchemaError: If keys are missing or unknown
        """
        expected = set(['fingerprint', 'min_poly', 'maximal_order',
                        'discriminant', 'conductors'])
        if not isinstance(data, dict) or set(data) != expected:
            raise SchemaError(source, "cache record keys must be %s"
                              % sorted(expected))
        return cls(data['fingerprint'], data['min_poly'],
                   data['maximal_order'], data['discriminant'],
                   data['conductors'])

    def hint(self):
        """Maximal order basis rows, or None"""
        record = self['maximal_order']
        if not record:
            return None
        basis = HNFBasis(record['basis'], record['denominator'])
        return [list(row) for row in basis.rows()]


# pylint: disable=useless-object-inheritance
class FieldCache(object):
    """Directory of :class:`CachedFieldRecord` files

    :param str directory: Cache directory, created on first store
    """
    def __init__(self, directory):
        """Initialization"""
        super(FieldCache, self).__init__()
        self.directory = directory

    def __repr__(self):
        return "FieldCache(%s)" % repr(self.directory)

    @classmethod
    def from_environment(cls, directory=None):
        """Cache of ``directory``, else of ``$GALOISHEIGHT_CACHE_DIR``

        :return: :class:`FieldCache` or None when neither is set
        """
        directory = directory or os.environ.get(CACHE_DIR_ENV)
        if not directory:
            return None
        return cls(directory)

    def path(self, key):
        """File of a fingerprint"""
        return os.path.join(self.directory, "%s.json" % key)

    def load(self, field, action=None):
        """Cached record of a field, None when absent or unreadable"""
        key = fingerprint(field, action)
        json_file = self.path(key)
        if not os.path.exists(json_file):
            return None
        try:
            record = CachedFieldRecord.from_dict(load_json(json_file),
                                                 json_file)
        except SchemaError as err:
            LOG.warning("ignoring cache entry: %s", err)
            return None
        if record['fingerprint'] != key or \
                record['min_poly'] != list(field.min_poly):
            LOG.warning("ignoring cache entry %s: fingerprint mismatch",
                        json_file)
            return None
        return record

    def store(self, record):
        """Write a record, replacing any previous entry"""
        if not os.path.isdir(self.directory):
            os.makedirs(self.directory)
        json_file = self.path(record['fingerprint'])
        LOG.info("cache file is %s", json_file)
        with open(json_file, 'w') as cache_fp:
            json.dump(record, cache_fp, ensure_ascii=True, indent=2,
                      sort_keys=True)
        return json_file

    def _record(self, field, action):
        record = self.load(field, action)
        if record is None:
            record = CachedFieldRecord(fingerprint(field, action),
                                       field.min_poly)
        return record

    def maximal_order(self, field, action=None, hint=None):
        """Maximal order through a verified hint, the cache, or Round-2

        An explicit hint is verified and wins over the cache. A cached basis
        failing verification is logged and recomputed.

        :raise NotMaximalError: If an explicit hint fails verification
        """
        record = self._record(field, action)
        if hint is not None:
            order = field.maximal_order(hint=hint)
        else:
            order = None
            cached = record.hint()
            if cached is not None:
                try:
                    order = field.maximal_order(hint=cached)
                    LOG.debug("reusing cached maximal order of %s", field)
                except NotMaximalError as err:
                    LOG.warning("stale cached maximal order of %s: %s",
                                field, err)
            if order is None:
                order = field.maximal_order()
        entry = lattice_record(order)
        if record['maximal_order'] != entry:
            record['maximal_order'] = entry
            record['discriminant'] = format_rational(order.discriminant())
            self.store(record)
        return order

    def conductor(self, order, maximal, action=None):
        """Conductor of an order, recorded next to the maximal order

        The conductor is always recomputed; a differing cached value is
        logged and replaced.
        """
        result = conductor(order, maximal)
        record = self._record(order.field, action)
        key = _basis_key(order)
        entry = lattice_record(result)
        cached = record['conductors'].get(key)
        if cached != entry:
            if cached is not None:
                LOG.warning("cached conductor of %s differs, replacing", order)
            record['conductors'][key] = entry
            self.store(record)
        return result
