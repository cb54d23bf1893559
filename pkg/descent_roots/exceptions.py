# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt


class DescentRootsError(Exception):
	pass


class ValidationError(DescentRootsError):
	pass


class UsageError(ValidationError):
	pass


class NotUnimodular(ValidationError):
	pass


class DegreeZero(ValidationError):
	pass


class ZeroAtCenter(DescentRootsError):
	"""p vanishes at the requested center, so the center is already a root"""

	def __init__(self, message, center=None):
		super().__init__(message)
		self.center = center


class EffectivelyConstant(DescentRootsError):
	"""No non-constant coefficient of the normalized polynomial passes the zero threshold"""


class SolverError(DescentRootsError):
	def __init__(self, message, depth=None):
		super().__init__(message)
		self.depth = depth

	def __str__(self):
		message = super().__str__()
		if self.depth is None:
			return message
		return f"{message} (deflation depth {self.depth})"


class IterationBudgetExhausted(SolverError):
	def __init__(self, message, best, best_value, iterations, depth=None):
		super().__init__(message, depth=depth)
		self.best = best
		self.best_value = best_value
		self.iterations = iterations


class StagnationFailure(SolverError):
	def __init__(self, message, center, center_value, diagnostics=None, depth=None):
		super().__init__(message, depth=depth)
		self.center = center
		self.center_value = center_value
		self.diagnostics = diagnostics or {}


class OutOfRange(DescentRootsError):
	"""Magnitudes needed by the search leave the double-precision range"""
