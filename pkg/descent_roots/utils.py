# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt

import importlib
import logging
import sys
import traceback

from descent_roots.exceptions import ValidationError

LOGGER_ROOT = "descent_roots"


def logger(module=None):
	"""Return a logger under the app's logger hierarchy"""
	if not module:
		return logging.getLogger(LOGGER_ROOT)
	if module.startswith(LOGGER_ROOT):
		return logging.getLogger(module)
	return logging.getLogger(f"{LOGGER_ROOT}.{module}")


def setup_logging(verbose=False, stream=None):
	"""Attach a single stderr handler to the app logger"""
	root = logger()
	root.setLevel(logging.DEBUG if verbose else logging.WARNING)
	if not any(getattr(h, "_descent_roots", False) for h in root.handlers):
		handler = logging.StreamHandler(stream or sys.stderr)
		handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
		handler._descent_roots = True
		root.addHandler(handler)
	return root


def log_error(message=None, title=None):
	"""Log an error with a title; inside an except block the traceback is appended"""
	exc_type = sys.exc_info()[0]
	if exc_type is not None:
		trace = traceback.format_exc()
		message = f"{message}\n{trace}" if message else trace
	logger().error("%s: %s", title or "Error", message)


def throw(message, exc=ValidationError):
	"""Raise `exc` with a one-line message"""
	raise exc(" ".join(str(message).split()))


def get_attr(method_string):
	"""Resolve a dotted path registered in hooks"""
	module_name, _, attr = method_string.rpartition(".")
	return getattr(importlib.import_module(module_name), attr)


def fmt_number(value):
	"""Format a float with 17 significant digits (round-trip exact for doubles)"""
	return format(float(value), ".17g")
