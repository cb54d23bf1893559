# Copyright (c) 2026, itsyosefali and Contributors
# See license.txt

import unittest

import numpy as np

from descent_roots.exceptions import DegreeZero, ValidationError, ZeroAtCenter
from descent_roots.descent_roots.poly.poly import (
	EPS,
	Polynomial,
	deflate,
	derivative,
	eval,
	eval_error_bound,
	eval_many,
	from_roots,
	normalize_at,
	taylor_shift,
)


def random_polynomial(rng, degree, box=10.0):
	re = rng.uniform(-box, box, degree + 1)
	im = rng.uniform(-box, box, degree + 1)
	coeffs = list(re + 1j * im)
	if coeffs[-1] == 0:
		coeffs[-1] = 1
	return Polynomial(tuple(coeffs))


def random_points(rng, count, box=2.0):
	return rng.uniform(-box, box, count) + 1j * rng.uniform(-box, box, count)


class TestPolynomial(unittest.TestCase):
	def setUp(self):
		self.rng = np.random.default_rng(7)

	def test_trailing_zeros_trimmed(self):
		"""Highest-index zeros are dropped on construction"""
		p = Polynomial((1, 2, 0, 0))
		self.assertEqual(p.degree, 1)
		self.assertEqual(p.coeffs, (1 + 0j, 2 + 0j))
		self.assertEqual(Polynomial(()).coeffs, (0j,))
		self.assertEqual(Polynomial((0, 0)).degree, 0)

	def test_pairs_round_trip(self):
		"""Coefficients survive a trip through [re, im] pairs unchanged"""
		p = random_polynomial(self.rng, 6)
		self.assertEqual(Polynomial.from_pairs(p.to_pairs()), p)

	def test_eval_examples(self):
		"""Horner evaluation on hand-checked values"""
		self.assertEqual(eval(Polynomial((1,)), 5), 1)
		self.assertEqual(eval(Polynomial((1, 0, 1)), 1j), 0)
		self.assertEqual(eval(Polynomial((1, 1, 1)), 2), 7)
		self.assertEqual(Polynomial((1, 1, 1))(2), 7)

	def test_eval_many_matches_eval(self):
		"""The vectorized scheme agrees with the scalar one"""
		p = random_polynomial(self.rng, 9)
		zs = random_points(self.rng, 50)
		values = eval_many(p, zs)
		for z, value in zip(zs, values, strict=True):
			self.assertAlmostEqual(abs(value - eval(p, z)), 0.0, delta=1e-9 * abs(value) + 1e-12)

	def test_eval_error_bound(self):
		"""n eps sum |a_j| |z|^j, zero for constants"""
		self.assertEqual(eval_error_bound(Polynomial((1, -2, 3j)), 2), 34 * EPS)
		self.assertEqual(eval_error_bound(Polynomial((7,)), 100), 0.0)

		# the computed value of an exact root stays inside the bound
		p = from_roots([1, 2, 3, 4, 5], 1)
		for r in (1, 2, 3, 4, 5):
			self.assertLessEqual(abs(eval(p, r)), eval_error_bound(p, r))

	def test_complex_modulus_multiplicative(self):
		"""|z w| = |z| |w| within tolerance"""
		for z, w in zip(random_points(self.rng, 100), random_points(self.rng, 100), strict=True):
			self.assertAlmostEqual(abs(z * w), abs(z) * abs(w), delta=1e-14 * (1 + abs(z) * abs(w)))

	def test_taylor_shift_examples(self):
		"""Linear shift and binomial identity"""
		self.assertEqual(taylor_shift(Polynomial((0, 1)), 3).coeffs, (3, 1))
		self.assertEqual(taylor_shift(Polynomial((0, 0, 1)), 1).coeffs, (1, 2, 1))

	def test_taylor_shift_point_evaluation(self):
		"""s(z) = p(z + a) for random polynomials up to degree 12"""
		for degree in [8, *range(1, 13)]:
			p = random_polynomial(self.rng, degree)
			a = complex(self.rng.uniform(-1, 1), self.rng.uniform(-1, 1))
			if degree == 8:
				a = 0.3 - 0.7j
			s = taylor_shift(p, a)
			self.assertEqual(s.degree, p.degree)
			for z in random_points(self.rng, 100, box=1.0):
				expected = eval(p, z + a)
				self.assertLessEqual(abs(eval(s, z) - expected), 1e-9 * max(1.0, abs(expected)))

	def test_normalize_at(self):
		"""q = p(z + a) / p(a) with q(0) set to exactly 1"""
		self.assertEqual(normalize_at(Polynomial((2, 2)), 0).coeffs, (1, 1))
		self.assertEqual(normalize_at(Polynomial((0, 1)), 1).coeffs, (1, 1))

		for _ in range(20):
			p = random_polynomial(self.rng, 6)
			a = complex(*self.rng.uniform(-2, 2, 2))
			q = normalize_at(p, a)
			self.assertEqual(q.coeffs[0], 1 + 0j)
			self.assertLessEqual(abs(eval(q, 0) - 1), 1e-14)

	def test_normalize_at_root(self):
		"""Normalizing at a root signals that a root was already found"""
		with self.assertRaises(ZeroAtCenter):
			normalize_at(Polynomial((-1, 0, 1)), 1)

	def test_deflate_examples(self):
		"""Synthetic division by (z - r)"""
		q, rem = deflate(Polynomial((-1, 0, 1)), 1)
		self.assertEqual(q.coeffs, (1, 1))
		self.assertEqual(rem, 0)

		q, rem = deflate(Polynomial((1, 1)), 0)
		self.assertEqual(q.coeffs, (1,))
		self.assertEqual(rem, 1)

		p = from_roots([2, 3j, -3j], 1)
		q, rem = deflate(p, 2)
		self.assertEqual(q.degree, 2)
		self.assertLessEqual(abs(rem), 1e-10)
		self.assertLessEqual(abs(eval(q, 3j)), 1e-10)
		self.assertLessEqual(abs(eval(q, -3j)), 1e-10)

	def test_deflate_round_trip(self):
		"""Dividing out a generating root leaves a negligible remainder"""
		for degree in range(1, 11):
			roots = random_points(self.rng, degree)
			leading = complex(*self.rng.uniform(0.5, 3, 2))
			p = from_roots(roots, leading)
			for r in roots:
				_, rem = deflate(p, r)
				self.assertLessEqual(abs(rem), 1e-9 * p.scale)

	def test_deflate_constant(self):
		"""A constant has no linear factor to divide out"""
		with self.assertRaises(DegreeZero):
			deflate(Polynomial((3,)), 1)

	def test_derivative(self):
		"""Power rule, and the derivative of a constant is [0]"""
		self.assertEqual(derivative(Polynomial((5,))).coeffs, (0,))
		self.assertEqual(derivative(Polynomial((1, 2, 3))).coeffs, (2, 6))

		p = random_polynomial(self.rng, 7)
		dp = derivative(p)
		h = 1e-5
		for z in random_points(self.rng, 20, box=1.0):
			fd = (eval(p, z + h) - eval(p, z - h)) / (2 * h)
			self.assertLessEqual(abs(fd - eval(dp, z)), 1e-6 * max(1.0, abs(eval(dp, z))))

	def test_from_roots(self):
		"""Expansion of leading * prod(z - r)"""
		self.assertEqual(from_roots([], 4).coeffs, (4,))
		self.assertEqual(from_roots([1, -1], 1).coeffs, (-1, 0, 1))
		self.assertEqual(from_roots([1, 2, 3, 4, 5], 1).coeffs, (-120, 274, -225, 85, -15, 1))

		with self.assertRaises(ValidationError):
			from_roots([1], 0)

	def test_single_root_evaluation(self):
		"""(z - r) evaluated at r is zero to rounding"""
		for r in random_points(self.rng, 100, box=10.0):
			self.assertLessEqual(abs(eval(from_roots([r], 1), r)), 1e-12 * (1 + abs(r)))

	def test_scalar_multiple(self):
		p = Polynomial((1, 2))
		self.assertEqual((2 * p).coeffs, (2, 4))
		self.assertEqual((p * 1j).coeffs, (1j, 2j))


if __name__ == "__main__":
	unittest.main()
