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

import io
import json
import os
import shutil
import tempfile
from fractions import Fraction
from unittest import TestCase

from galoisheight.cli import WorkspaceConfig, build_parser, main
from galoisheight.exceptions import ConfigError


SQRT_M3_DOC = {"min_poly": [3, 0, 1]}


class TestWorkspaceConfig(TestCase):

    def test_defaults(self):
        config = WorkspaceConfig()
        self.assertEqual(config.target_radius, Fraction(1, 2 ** 40))
        self.assertEqual(config.parallelism, 1)
        self.assertEqual(config.output_format, 'json')

    def test_invalid_settings(self):
        for kwargs in ({'precision_bits': 0}, {'precision_bits': 1.5},
                       {'parallelism': 0}, {'parallelism': True},
                       {'output_format': 'xml'}):
            with self.assertRaises(ConfigError):
                WorkspaceConfig(**kwargs)

    def test_parser(self):
        args = build_parser().parse_args(
            ['-vv', '--parallelism', '2', 'enumerate', 'c2.json',
             '--bound', '3/2'])
        self.assertEqual(args.verbose, 2)
        self.assertEqual(args.parallelism, 2)
        self.assertEqual(args.command, 'enumerate')
        self.assertEqual(args.bound, '3/2')

    def test_format_choices(self):
        with self.assertRaises(SystemExit) as ctx:
            build_parser().parse_args(['--format', 'xml', 'height', 'p.json'])
        self.assertEqual(ctx.exception.code, 2)
        args = build_parser().parse_args(['--format', 'csv', 'height', 'p'])
        self.assertEqual(args.output_format, 'csv')


class TestCommands(TestCase):

    def setUp(self):
        self.workdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.workdir)

    def _write(self, name, data):
        path = os.path.join(self.workdir, name)
        with open(path, 'w') as json_fp:
            json.dump(data, json_fp)
        return path

    def _path(self, name):
        return os.path.join(self.workdir, name)

    def _run(self, *argv):
        output = io.StringIO()
        code = main(list(argv), output)
        return code, output.getvalue()

    def _read(self, name):
        with open(self._path(name)) as read_fp:
            return read_fp.read()

    def test_height(self):
        pair = self._write("pair.json", {"algebra": {"builtin": "C2"},
                                         "x": ["2", "-1"]})
        code, text = self._run('height', pair)
        self.assertEqual(code, 0)
        report = json.loads(text)
        self.assertTrue(report['height']['mid'].startswith("5.000"))
        self.assertEqual(report['finite_part_direct'], "1")

    def test_height_csv(self):
        pair = self._write("pair.json", {"algebra": {"builtin": "C2"},
                                         "x": ["1", "0"]})
        code, text = self._run('--format', 'csv', 'height', pair)
        self.assertEqual(code, 0)
        lines = text.splitlines()
        self.assertEqual(lines[0], "x,height_mid,height_rad,"
                                   "finite_part_invariant,finite_part_direct,"
                                   "finite_parts_agree,discrepancy")
        self.assertTrue(lines[1].startswith("1 0,1.000"))

    def test_selfdual_height_with_file_reference(self):
        self._write("zeta7.json", {
            "min_poly": [-1, -2, 1, 1],
            "galois": {"generator_images": {"1": ["-2", "0", "1"]}}})
        pair = self._write("pair.json", {"algebra": "zeta7.json",
                                         "x": ["3/7", "-3/7", "-1/7"]})
        code, text = self._run('--precision-bits', '20', 'height', pair)
        self.assertEqual(code, 0)
        report = json.loads(text)
        self.assertEqual(report['finite_part_direct'], "7")
        self.assertEqual(report['invariants']['disc_order'], "49")

    def test_exit_codes(self):
        missing = self._path("missing.json")
        self.assertEqual(self._run('height', missing)[0], 2)
        pair = self._write("pair.json", {"algebra": {"builtin": "C2"},
                                         "x": ["1/2", "1/2"]})
        self.assertEqual(self._run('height', pair)[0], 3)
        bad_galois = self._write("galois.json", {
            "algebra": {"min_poly": [-2, 0, 1], "galois": 5},
            "x": ["1/2", "1/4"]})
        self.assertEqual(self._run('height', bad_galois)[0], 2)
        big = self._write("c11.json", {"builtin": "C11"})
        self.assertEqual(self._run('molien', big)[0], 4)

    def test_enumerate(self):
        group = self._write("c2.json", {"builtin": "C2"})
        code, _ = self._run('enumerate', group, '--bound', '3/2',
                            '--output', self._path("points.csv"))
        self.assertEqual(code, 0)
        lines = self._read("points.csv").splitlines()
        self.assertEqual(lines[0], "height_squared,height,x")
        self.assertEqual(lines[1:], ["1,1.000000000000,0 1",
                                     "1,1.000000000000,1 0"])

    def test_enumerate_empty(self):
        group = self._write("c2.json", {"builtin": "C2"})
        code, text = self._run('enumerate', group, '--bound', '1/2')
        self.assertEqual(code, 0)
        self.assertEqual(text, "height_squared,height,x\n")
        self.assertEqual(self._run('enumerate', group, '--bound', '0')[0], 2)

    def test_enumerate_checkpoints(self):
        group = self._write("c2.json", {"builtin": "C2"})
        code, _ = self._run('enumerate', group, '--bound', '10',
                            '--output', self._path("points.csv"),
                            '--checkpoints', self._path("counts.csv"))
        self.assertEqual(code, 0)
        self.assertEqual(self._read("counts.csv"),
                         "bound,count\n1,2\n2,2\n4,2\n8,6\n10,10\n")
        self.assertEqual(len(self._read("points.csv").splitlines()), 11)

    def test_enumerate_parallelism(self):
        group = self._write("c3.json", {"builtin": "C3"})
        outputs = []
        for degree in ('1', '2', '3'):
            code, text = self._run('--parallelism', degree, 'enumerate',
                                   group, '--bound', '30')
            self.assertEqual(code, 0)
            outputs.append(text)
        self.assertEqual(outputs[0], outputs[1])
        self.assertEqual(outputs[0], outputs[2])

    def test_discrepancy(self):
        order = self._write("order.json", {"field": SQRT_M3_DOC,
                                           "basis": [[1, 0], [0, 1]]})
        ideal = self._write("ideal.json", {"basis": [[2, 0], [1, 1]]})
        cache_dir = self._path("cache")
        code, text = self._run('--cache-dir', cache_dir, 'discrepancy',
                               order, ideal)
        self.assertEqual(code, 0)
        report = json.loads(text)
        self.assertEqual(report['discrepancy'], "2")
        self.assertEqual(report['bounds'], ["1", "8"])
        self.assertFalse(report['invertible'])
        self.assertTrue(report['gorenstein'])
        self.assertEqual([rel['equal'] for rel in report['index_relations']],
                         [False, False, False])
        self.assertEqual(len(os.listdir(cache_dir)), 1)

    def test_discrepancy_csv(self):
        order = self._write("order.json", {"field": SQRT_M3_DOC,
                                           "basis": [[1, 0], [0, 1]]})
        ideal = self._write("ideal.json", {"basis": [[1, 0], [0, 1]]})
        code, text = self._run('--format', 'csv', 'discrepancy', order,
                               ideal)
        self.assertEqual(code, 0)
        self.assertEqual(text, "discrepancy,lower_bound,upper_bound,"
                               "invertible,gorenstein\n1,1,8,true,true\n")

    def test_discrepancy_not_an_ideal(self):
        order = self._write("order.json", {"field": SQRT_M3_DOC,
                                           "basis": [[1, 0], [0, 1]]})
        ideal = self._write("ideal.json", {"basis": [[1, 0], [0, 2]]})
        self.assertEqual(self._run('discrepancy', order, ideal)[0], 3)

    def test_molien(self):
        c2 = self._write("c2.json", {"builtin": "C2"})
        s3 = self._write("s3.json", {"builtin": "S3"})
        code, text = self._run('molien', c2, s3)
        self.assertEqual(code, 0)
        self.assertEqual(text, "group,order,bruteforce,formula,unnormalized,"
                               "agree\nC2,2,2,2,4,true\n"
                               "S3,6,83,83,498,true\n")

    def test_selfdual_search(self):
        algebra = self._write("c2.json", {"builtin": "C2"})
        code, text = self._run('selfdual-search', algebra,
                               '--coefficient-bound', '1',
                               '--denominator-bound', '2')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(text), [["0", "1"], ["1", "0"]])

    def test_selfdual_search_in_inverse_sqrt_different(self):
        algebra = self._write("zeta7.json", {
            "min_poly": [-1, -2, 1, 1],
            "galois": {"generator_images": {"1": ["-2", "0", "1"]}}})
        code, text = self._run('selfdual-search', algebra,
                               '--coefficient-bound', '3',
                               '--denominator-bound', '7',
                               '--inverse-sqrt-different')
        self.assertEqual(code, 0)
        self.assertIn(["3/7", "-3/7", "-1/7"], json.loads(text))
        split = self._write("c2.json", {"builtin": "C2"})
        self.assertEqual(self._run('selfdual-search', split,
                                   '--coefficient-bound', '1',
                                   '--denominator-bound', '1',
                                   '--inverse-sqrt-different')[0], 2)
