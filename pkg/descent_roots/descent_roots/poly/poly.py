# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt

"""Dense complex polynomials, stored low-to-high: coeffs[j] is the coefficient of z**j."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from descent_roots.exceptions import DegreeZero, ZeroAtCenter
from descent_roots.utils import throw

ZERO_RTOL = 1e-12
EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class Polynomial:
	coeffs: tuple[complex, ...]

	def __post_init__(self):
		coeffs = tuple(complex(c) for c in self.coeffs) or (0j,)

		# trim trailing zeros so that the leading coefficient is nonzero
		n = len(coeffs)
		while n > 1 and coeffs[n - 1] == 0:
			n -= 1
		object.__setattr__(self, "coeffs", coeffs[:n])

	@classmethod
	def from_pairs(cls, pairs: Iterable[Sequence[float]]) -> "Polynomial":
		return cls(tuple(complex(re, im) for re, im in pairs))

	def to_pairs(self) -> list[list[float]]:
		return [[c.real, c.imag] for c in self.coeffs]

	@property
	def degree(self) -> int:
		return len(self.coeffs) - 1

	@property
	def leading(self) -> complex:
		return self.coeffs[-1]

	@property
	def scale(self) -> float:
		"""1 + max_j |a_j|, the reference magnitude for relative tolerances"""
		return 1.0 + max(abs(c) for c in self.coeffs)

	@property
	def eps_zero(self) -> float:
		"""Threshold below which a coefficient counts as zero"""
		return ZERO_RTOL * self.scale

	def __call__(self, z):
		return eval(self, z)

	def __mul__(self, c):
		if isinstance(c, Polynomial):
			return NotImplemented
		return Polynomial(tuple(complex(c) * a for a in self.coeffs))

	__rmul__ = __mul__


def eval(p: Polynomial, z: complex) -> complex:
	"""Horner's scheme, highest coefficient first"""
	coeffs = p.coeffs
	acc = coeffs[-1]
	for c in reversed(coeffs[:-1]):
		acc = acc * z + c
	return acc


def eval_many(p: Polynomial, zs) -> np.ndarray:
	"""Vectorized Horner evaluation over an array of points"""
	zs = np.asarray(zs, dtype=np.complex128)
	coeffs = p.coeffs
	acc = np.full(zs.shape, coeffs[-1], dtype=np.complex128)
	for c in reversed(coeffs[:-1]):
		acc = acc * zs + c
	return acc


def eval_error_bound(p: Polynomial, z: complex) -> float:
	"""Rounding error bound for eval(p, z): n eps sum_j |a_j| |z|^j"""
	r = abs(complex(z))
	total = 0.0
	for c in reversed(p.coeffs):
		total = total * r + abs(c)
	return p.degree * EPS * total


def taylor_shift(p: Polynomial, a: complex) -> Polynomial:
	"""Return s with s(z) = p(z + a), by n passes of synthetic division at a"""
	a = complex(a)
	b = list(reversed(p.coeffs))
	n = p.degree
	for i in range(n):
		for j in range(1, n - i + 1):
			b[j] += a * b[j - 1]
	return Polynomial(tuple(reversed(b)))


def normalize_at(p: Polynomial, a: complex) -> Polynomial:
	"""Return q(z) = p(z + a) / p(a), so that q(0) = 1"""
	center = eval(p, a)
	if center == 0:
		raise ZeroAtCenter(f"p vanishes at {a!r}", center=complex(a))

	shifted = taylor_shift(p, a)
	coeffs = [c / center for c in shifted.coeffs]
	# set, not computed: absorbs the rounding of s(0) / p(a)
	coeffs[0] = 1 + 0j
	return Polynomial(tuple(coeffs))


def deflate(p: Polynomial, r: complex) -> tuple[Polynomial, complex]:
	"""Divide p by (z - r); returns (quotient, remainder)"""
	if p.degree < 1:
		throw("Cannot deflate a constant polynomial", DegreeZero)

	r = complex(r)
	coeffs = p.coeffs
	n = p.degree
	quotient = [0j] * n
	acc = coeffs[n]
	for k in range(n - 1, -1, -1):
		quotient[k] = acc
		acc = coeffs[k] + r * acc
	return Polynomial(tuple(quotient)), acc


def derivative(p: Polynomial) -> Polynomial:
	if p.degree == 0:
		return Polynomial((0j,))
	return Polynomial(tuple(j * c for j, c in enumerate(p.coeffs) if j > 0))


def from_roots(roots: Iterable[complex], leading: complex = 1) -> Polynomial:
	"""leading * prod(z - r), expanded by repeated linear multiplication"""
	if abs(leading) == 0:
		throw("Leading coefficient must be nonzero")

	coeffs = [complex(leading)]
	for r in roots:
		r = complex(r)
		expanded = [0j] * (len(coeffs) + 1)
		for j, c in enumerate(coeffs):
			expanded[j + 1] += c
			expanded[j] -= r * c
		coeffs = expanded
	return Polynomial(tuple(coeffs))
