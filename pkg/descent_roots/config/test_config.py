# Copyright (c) 2026, itsyosefali and Contributors
# See license.txt

import json
import os
import tempfile
import unittest
from unittest.mock import patch

from descent_roots import hooks
from descent_roots.config import CONFIG_ENV, get_conf, get_solver_config
from descent_roots.exceptions import ValidationError
from descent_roots.install import get_fixtures


class TestConfig(unittest.TestCase):
	def setUp(self):
		self.tmp = tempfile.TemporaryDirectory()
		self.addCleanup(self.tmp.cleanup)

	def write_conf(self, data):
		path = os.path.join(self.tmp.name, "conf.json")
		with open(path, "w", encoding="utf-8") as f:
			json.dump(data, f)
		return path

	def test_defaults(self):
		with patch.dict(os.environ, {}, clear=True):
			self.assertEqual(get_conf(), hooks.solver_defaults)
			self.assertEqual(get_solver_config().shrink, hooks.solver_defaults["shrink"])

	def test_file_overlay(self):
		"""Known keys override defaults; unknown keys are dropped with a warning"""
		path = self.write_conf({"shrink": 0.5, "colour": "blue"})
		with self.assertLogs("descent_roots", level="WARNING") as logs:
			conf = get_conf(path)
		self.assertEqual(conf["shrink"], 0.5)
		self.assertNotIn("colour", conf)
		self.assertIn("colour", logs.output[0])

	def test_override_order(self):
		"""Explicit overrides beat the file named in the environment; None leaves it alone"""
		path = self.write_conf({"shrink": 0.5, "max_iters": 10})
		with patch.dict(os.environ, {CONFIG_ENV: path}):
			self.assertEqual(get_solver_config(shrink=None).shrink, 0.5)
			cfg = get_solver_config(shrink=0.25)
			self.assertEqual(cfg.shrink, 0.25)
			self.assertEqual(cfg.max_iters, 10)

	def test_invalid(self):
		with self.assertRaises(ValidationError):
			get_conf(self.write_conf([1, 2]))

		path = os.path.join(self.tmp.name, "broken.json")
		with open(path, "w", encoding="utf-8") as f:
			f.write("{bad")
		with self.assertRaises(ValidationError):
			get_conf(path)
		with self.assertRaises(ValidationError):
			get_solver_config(self.write_conf({"tol_residual": -1}))

	def test_fixtures(self):
		"""Every fixture lists one root per degree and the roots are genuine"""
		fixtures = get_fixtures()
		self.assertGreaterEqual(len(fixtures), 5)
		for fixture in fixtures:
			p = fixture["polynomial"]
			self.assertEqual(len(fixture["roots"]), p.degree)
			for root in fixture["roots"]:
				self.assertLessEqual(abs(p(root)), 1e-9 * p.scale, msg=fixture["name"])


if __name__ == "__main__":
	unittest.main()
