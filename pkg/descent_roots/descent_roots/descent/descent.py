# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt

"""
The constructive descent step.

At a point a with p(a) != 0, normalize to q(z) = p(z + a) / p(a) = 1 + a_m z^m + r(z),
pick a radius rho inside the certified disc min(rho1, rho2, 1) and a direction zeta with
a_m zeta^m = -|a_m|. Then |q(rho zeta)| <= 1 - |a_m| rho^m + |r(rho zeta)| < 1, so the landing
point a + rho zeta has strictly smaller modulus than a.
"""

import cmath
import math
from dataclasses import dataclass

from descent_roots.exceptions import EffectivelyConstant, NotUnimodular, ValidationError
from descent_roots.descent_roots.poly.poly import Polynomial, eval, normalize_at
from descent_roots.utils import throw

DEFAULT_SHRINK = 0.9
UNIMODULAR_TOL = 1e-9


@dataclass(frozen=True)
class DescentStep:
	center: complex
	m: int
	a_m: complex
	rho1: float
	rho2: float
	rho: float
	zeta: complex
	landing: complex
	# 1 - |a_m| rho^m + |r(rho zeta)|
	predicted_bound: float
	center_value: float
	landing_value: float
	residual: float

	@property
	def x(self) -> float:
		"""The point 1 - |a_m| rho^m on the real axis"""
		return 1.0 - abs(self.a_m) * self.rho**self.m

	@property
	def ratio(self) -> float:
		return self.landing_value / self.center_value


def minor_index(q: Polynomial) -> tuple[int, complex]:
	"""Smallest m >= 1 whose coefficient passes the zero threshold"""
	eps = q.eps_zero
	for m in range(1, q.degree + 1):
		if abs(q.coeffs[m]) > eps:
			return m, q.coeffs[m]
	raise EffectivelyConstant(f"no coefficient of degree >= 1 exceeds {eps:.3g}")


def step_radii(q: Polynomial, m: int, a_m: complex) -> tuple[float, float]:
	"""
	Radii inside which |r(z)| < |a_m z^m| < 1 holds for 0 < |z| <= rho.

	rho1 = |a_m|^(-1/m) bounds the second inequality. For the first, |r(z)| <= |z|^(m+1) S with
	S = sum_{j > m} |a_j| when |z| < 1, which stays below |a_m| |z|^m while |z| < |a_m| / S.
	"""
	modulus = abs(a_m)
	rho1 = modulus ** (-1.0 / m)
	tail = math.fsum(abs(c) for c in q.coeffs[m + 1 :])
	rho2 = math.inf if tail == 0 else modulus / tail
	return rho1, rho2


def unimodular_mth_root(u: complex, m: int) -> complex:
	"""Principal m-th root of a complex number on the unit circle"""
	if m < 1:
		throw(f"Root order must be at least 1, got {m}")
	if abs(abs(u) - 1.0) > UNIMODULAR_TOL:
		throw(f"|u| = {abs(u)!r} is not 1", NotUnimodular)

	phi = cmath.phase(u)
	# keep arg(u) in (-pi, pi]; phase(-1 - 0j) is -pi
	if phi <= -math.pi:
		phi = math.pi
	return complex(math.cos(phi / m), math.sin(phi / m))


def descent_direction(a_m: complex, m: int) -> complex:
	"""zeta with a_m zeta^m = -|a_m|"""
	modulus = abs(a_m)
	if modulus == 0:
		throw("Descent direction needs a nonzero coefficient")
	return unimodular_mth_root(-complex(a_m).conjugate() / modulus, m)


def descent_candidates(zeta: complex, m: int) -> list[complex]:
	"""All m admissible directions: zeta times the m-th roots of unity"""
	return [zeta * cmath.exp(2j * math.pi * k / m) for k in range(m)]


def residual_tail(q: Polynomial, m: int, w: complex) -> complex:
	"""r(w) = w^(m+1) (a_(m+1) + ... + a_n w^(n-m-1))"""
	tail = q.coeffs[m + 1 :]
	if not tail:
		return 0j
	return w ** (m + 1) * eval(Polynomial(tail), w)


def build_step(
	p: Polynomial, a: complex, shrink: float = DEFAULT_SHRINK, best_of_m: bool = False
) -> DescentStep:
	"""Compute one guaranteed descent step from the center a"""
	if not 0 < shrink < 1:
		throw(f"shrink must lie in (0, 1), got {shrink}", ValidationError)

	a = complex(a)
	q = normalize_at(p, a)
	m, a_m = minor_index(q)
	rho1, rho2 = step_radii(q, m, a_m)
	rho = shrink * min(rho1, rho2, 1.0)

	zeta = descent_direction(a_m, m)
	landing = a + rho * zeta
	landing_value = abs(eval(p, landing))

	if best_of_m and m > 1:
		# the certificate is a worst-case bound shared by all m directions
		for candidate in descent_candidates(zeta, m)[1:]:
			point = a + rho * candidate
			value = abs(eval(p, point))
			if value < landing_value:
				zeta, landing, landing_value = candidate, point, value

	residual = abs(residual_tail(q, m, rho * zeta))
	return DescentStep(
		center=a,
		m=m,
		a_m=a_m,
		rho1=rho1,
		rho2=rho2,
		rho=rho,
		zeta=zeta,
		landing=landing,
		predicted_bound=1.0 - abs(a_m) * rho**m + residual,
		center_value=abs(eval(p, a)),
		landing_value=landing_value,
		residual=residual,
	)
