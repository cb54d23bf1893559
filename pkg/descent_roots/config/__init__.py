# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt

import json
import os

from descent_roots import hooks
from descent_roots.utils import logger, throw

CONFIG_ENV = "DESCENT_ROOTS_CONFIG"

log = logger(__name__)


def get_conf(path=None):
	"""Hook defaults overlaid with the JSON config file, if one is configured"""
	conf = dict(hooks.solver_defaults)
	path = path or os.environ.get(CONFIG_ENV)
	if not path:
		return conf

	with open(path, encoding="utf-8") as f:
		try:
			overrides = json.load(f)
		except ValueError as e:
			throw(f"Config file {path} is not valid JSON: {e}")
	if not isinstance(overrides, dict):
		throw(f"Config file {path} must hold a JSON object")

	for key, value in overrides.items():
		if key not in conf:
			log.warning("Ignoring unknown config key %r in %s", key, path)
			continue
		conf[key] = value
	return conf


def get_solver_config(path=None, **overrides):
	"""Build a validated SolverConfig from defaults, config file and explicit overrides"""
	from descent_roots.descent_roots.solver.solver import SolverConfig

	conf = get_conf(path)
	conf.update({k: v for k, v in overrides.items() if v is not None})
	return SolverConfig(**conf)
