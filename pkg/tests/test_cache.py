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

import json
import os
import shutil
import tempfile
from unittest import TestCase
from unittest.mock import patch

from galoisheight.cache import CACHE_DIR_ENV, CachedFieldRecord, FieldCache
from galoisheight.cache import fingerprint
from galoisheight.exact import HNFBasis
from galoisheight.lattices import Order
from galoisheight.schemas import lattice_record
from galoisheight.exceptions import NotMaximalError, SchemaError

from . import EISENSTEIN_ROWS, SQRT_M3, ZETA7, ZETA7_ACTION


EISENSTEIN = HNFBasis.from_rows(EISENSTEIN_ROWS)


class TestFingerprint(TestCase):

    def test_fingerprint(self):
        key = fingerprint(ZETA7, ZETA7_ACTION)
        self.assertEqual(len(key), 64)
        self.assertEqual(key, fingerprint(ZETA7, ZETA7_ACTION))
        self.assertNotEqual(key, fingerprint(ZETA7))
        self.assertNotEqual(fingerprint(ZETA7), fingerprint(SQRT_M3))

    def test_record_validation(self):
        record = CachedFieldRecord("abc", [3, 0, 1])
        self.assertEqual(CachedFieldRecord.from_dict(dict(record), "f.json"),
                         record)
        self.assertIsNone(record.hint())
        with self.assertRaises(SchemaError):
            CachedFieldRecord.from_dict({"fingerprint": "abc"}, "f.json")


class TestFieldCache(TestCase):

    def setUp(self):
        self.workdir = tempfile.mkdtemp()
        self.cache = FieldCache(os.path.join(self.workdir, "cache"))

    def tearDown(self):
        shutil.rmtree(self.workdir)

    def test_from_environment(self):
        with patch.dict(os.environ, {CACHE_DIR_ENV: self.workdir}):
            self.assertEqual(FieldCache.from_environment().directory,
                             self.workdir)
            self.assertEqual(FieldCache.from_environment("other").directory,
                             "other")
        with patch.dict(os.environ, {}, clear=True):
            self.assertIsNone(FieldCache.from_environment())

    def test_store_and_reuse(self):
        order = self.cache.maximal_order(SQRT_M3)
        self.assertEqual(order.basis, EISENSTEIN)
        json_file = self.cache.path(fingerprint(SQRT_M3))
        self.assertTrue(os.path.exists(json_file))
        record = self.cache.load(SQRT_M3)
        self.assertEqual(record['discriminant'], "-3")
        self.assertEqual(HNFBasis.from_rows(record.hint()), EISENSTEIN)
        self.assertEqual(self.cache.maximal_order(SQRT_M3), order)

    def test_stale_entry_is_replaced(self):
        equation = Order.equation_order(SQRT_M3)
        record = CachedFieldRecord(fingerprint(SQRT_M3), SQRT_M3.min_poly,
                                   lattice_record(equation), "-12")
        self.cache.store(record)
        with self.assertLogs('galoisheight.cache', level='WARNING'):
            order = self.cache.maximal_order(SQRT_M3)
        self.assertEqual(order.basis, EISENSTEIN)
        self.assertEqual(self.cache.load(SQRT_M3)['discriminant'], "-3")

    def test_corrupt_entry_is_ignored(self):
        os.makedirs(self.cache.directory)
        with open(self.cache.path(fingerprint(SQRT_M3)), 'w') as cache_fp:
            json.dump({"fingerprint": "other"}, cache_fp)
        with self.assertLogs('galoisheight.cache', level='WARNING'):
            self.assertIsNone(self.cache.load(SQRT_M3))
        self.assertEqual(self.cache.maximal_order(SQRT_M3).basis, EISENSTEIN)

    def test_explicit_hint_is_verified(self):
        with self.assertRaises(NotMaximalError):
            self.cache.maximal_order(SQRT_M3, hint=[[1, 0], [0, 1]])
        order = self.cache.maximal_order(SQRT_M3, hint=EISENSTEIN_ROWS)
        self.assertEqual(order.basis, EISENSTEIN)

    def test_conductor(self):
        equation = Order.equation_order(SQRT_M3)
        maximal = self.cache.maximal_order(SQRT_M3)
        cond = self.cache.conductor(equation, maximal)
        self.assertEqual(cond.basis, EISENSTEIN.scale(2))
        conductors = self.cache.load(SQRT_M3)['conductors']
        self.assertEqual(list(conductors.values()), [lattice_record(cond)])
        self.assertEqual(self.cache.conductor(equation, maximal), cond)
