# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt

"""
Independent checks of the descent inequalities and of solver output.

Only polynomial evaluation, expansion from roots and the public step and region objects are
used here; nothing from the solver's internals. Every check records a margin (positive passes)
so near-violations under rounding stay visible.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from descent_roots import hooks
from descent_roots.descent_roots.bounds.bounds import search_radius
from descent_roots.descent_roots.descent.descent import build_step
from descent_roots.descent_roots.poly.poly import (
	Polynomial,
	eval,
	eval_many,
	from_roots,
	normalize_at,
)
from descent_roots.utils import get_attr, log_error, logger

NEGATIVITY_RTOL = 1e-12
BOUND_RTOL = 1e-12
CONSISTENCY_RTOL = 1e-12
RESIDUAL_SLACK = 10.0

log = logger(__name__)


@dataclass
class PropertyReport:
	property_name: str
	trials: int = 0
	failures: int = 0
	worst_margin: float = math.inf
	worst_case: dict | None = None

	@property
	def passed(self) -> bool:
		return self.failures == 0

	def record(self, margin, case, passed=None):
		"""Record one trial; `case` may be a callable building the serialized inputs"""
		self.record_batch(np.asarray([margin], dtype=float), lambda _: case() if callable(case) else case, passed)

	def record_batch(self, margins, case_at, passed=None):
		"""Record a batch of trials; case_at(i) serializes the inputs of trial i"""
		margins = np.asarray(margins, dtype=float)
		if not margins.size:
			return
		if passed is None:
			passed = margins > 0
		passed = np.broadcast_to(np.asarray(passed, dtype=bool), margins.shape)

		self.trials += int(margins.size)
		self.failures += int(np.count_nonzero(~passed))

		# NaN margins count as the worst possible outcome
		ranked = np.where(np.isnan(margins), -np.inf, margins)
		index = int(np.argmin(ranked))
		if ranked[index] < self.worst_margin:
			self.worst_margin = float(ranked[index])
			self.worst_case = case_at(index)

	def merge(self, other: "PropertyReport"):
		self.trials += other.trials
		self.failures += other.failures
		if other.worst_margin < self.worst_margin:
			self.worst_margin = other.worst_margin
			self.worst_case = other.worst_case
		return self

	def to_dict(self):
		return {
			"property_name": self.property_name,
			"trials": self.trials,
			"failures": self.failures,
			"worst_margin": self.worst_margin,
			"worst_case": self.worst_case,
		}


def pair(z) -> list[float]:
	z = complex(z)
	return [z.real, z.imag]


def check_lemma_inequalities(p: Polynomial, a: complex, samples: int = 1000, rng=None) -> PropertyReport:
	"""
	Check at the center a:
	- |r(z)| < |a_m z^m| < 1 on random z with 0 < |z| <= rho,
	- a_m zeta^m = -|a_m|,
	- |q(w)| <= 1 - |a_m| rho^m + |r(w)| < 1 for w = rho zeta,
	- |q(w) - x| < 1 - x with x = 1 - |a_m| rho^m.
	"""
	rng = rng if rng is not None else np.random.default_rng(0)
	report = PropertyReport("lemma_inequalities")
	a = complex(a)
	step = build_step(p, a)
	q = normalize_at(p, a)
	m, a_m, rho = step.m, step.a_m, step.rho
	modulus = abs(a_m)

	def case(check, z=None):
		serialized = {"check": check, "coeffs": p.to_pairs(), "center": pair(a)}
		if z is not None:
			serialized["z"] = pair(z)
		return serialized

	# punctured certified disc: radius in (0, rho], uniform angle
	zs = rho * (1.0 - rng.random(samples)) * np.exp(1j * rng.uniform(-math.pi, math.pi, samples))
	lead = modulus * np.abs(zs) ** m
	tail = q.coeffs[m + 1 :]
	if tail:
		residual = np.abs(zs ** (m + 1) * eval_many(Polynomial(tail), zs))
	else:
		residual = np.zeros(samples)
	report.record_batch((lead - residual) / lead, lambda i: case("residual_below_leading", zs[i]))
	report.record_batch(1.0 - lead, lambda i: case("leading_below_one", zs[i]))

	negativity = abs(a_m * step.zeta**m + modulus) / modulus
	report.record(NEGATIVITY_RTOL - negativity, lambda: case("negativity_identity"), passed=negativity <= NEGATIVITY_RTOL)

	center_value = eval(p, a)
	value = eval(p, step.landing) / center_value
	decrease = modulus * rho**m
	bound = 1.0 - decrease + step.residual
	report.record(1.0 - bound, lambda: case("final_bound_below_one"))
	report.record(
		(bound * (1 + BOUND_RTOL) - abs(value)) / bound,
		lambda: case("value_within_bound"),
		passed=abs(value) <= bound * (1 + BOUND_RTOL),
	)

	x = step.x
	report.record(((1.0 - x) - abs(value - x)) / (1.0 - x), lambda: case("landing_in_disc"))
	return report


def check_boundary_floor(p: Polynomial, samples: int = 4096) -> PropertyReport:
	"""|p| >= |a_n| R^n / 2 at equispaced points of |z| = R, and the floor exceeds |p(0)|"""
	report = PropertyReport("boundary_floor")
	region = search_radius(p)
	floor = region.boundary_floor

	angles = 2.0 * math.pi * np.arange(samples) / samples
	zs = region.radius * np.exp(1j * angles)
	values = np.abs(eval_many(p, zs))
	margins = (values - floor) / floor
	report.record_batch(
		margins,
		lambda i: {"check": "boundary_floor", "coeffs": p.to_pairs(), "z": pair(zs[i])},
		passed=margins >= 0,
	)
	report.record(
		(floor - region.center_value) / floor,
		lambda: {"check": "floor_above_center", "coeffs": p.to_pairs()},
	)
	return report


def check_report(
	p: Polynomial, report, tol_residual: float = 1e-10, max_reconstruction_error: float = 1e-6
) -> PropertyReport:
	"""Recompute residuals and reconstruction error; compare with the report and with tolerances"""
	result = PropertyReport("report")
	roots = [complex(r) for r in report.roots]
	scale = p.scale

	def case(check, index=None):
		serialized = {"check": check, "coeffs": p.to_pairs(), "roots": [pair(r) for r in roots]}
		if index is not None:
			serialized["index"] = index
		return serialized

	result.record(
		1.0 if len(roots) == p.degree else -1.0,
		lambda: case("root_count"),
	)

	allowance = tol_residual * scale * RESIDUAL_SLACK
	tolerance = CONSISTENCY_RTOL * scale
	for index, (root, reported) in enumerate(zip(roots, report.residuals, strict=False)):
		residual = abs(eval(p, root))
		result.record(
			(tolerance - abs(residual - reported)) / tolerance,
			lambda index=index: case("residual_consistency", index),
			passed=abs(residual - reported) <= tolerance,
		)
		result.record(
			(allowance - residual) / allowance,
			lambda index=index: case("residual_quality", index),
			passed=residual <= allowance,
		)

	rebuilt = from_roots(roots, p.leading) if roots else Polynomial((p.leading,))
	size = max(len(p.coeffs), len(rebuilt.coeffs))
	original = p.coeffs + (0j,) * (size - len(p.coeffs))
	expanded = rebuilt.coeffs + (0j,) * (size - len(rebuilt.coeffs))
	error = max(abs(u - v) for u, v in zip(original, expanded, strict=True)) / scale

	gap = abs(error - report.reconstruction_error)
	result.record(
		(CONSISTENCY_RTOL - gap) / CONSISTENCY_RTOL,
		lambda: case("reconstruction_consistency"),
		passed=gap <= CONSISTENCY_RTOL,
	)
	result.record(
		(max_reconstruction_error - error) / max_reconstruction_error,
		lambda: case("reconstruction_quality"),
		passed=error <= max_reconstruction_error,
	)
	return result


def match_roots(found, expected) -> float:
	"""Largest distance between matched roots under the minimal-cost assignment"""
	found = np.asarray(list(found), dtype=np.complex128)
	expected = np.asarray(list(expected), dtype=np.complex128)
	if found.size != expected.size:
		return math.inf
	if not found.size:
		return 0.0

	cost = np.abs(found[:, None] - expected[None, :])
	rows, cols = linear_sum_assignment(cost)
	return float(cost[rows, cols].max())


def run_suites(seed: int = 42, sizes: dict | None = None, suites: list | None = None) -> list[PropertyReport]:
	"""Run every registered verification suite with its own seeded stream"""
	sizes = {**hooks.verify_suite_sizes, **(sizes or {})}
	suites = suites if suites is not None else hooks.verify_suites
	streams = np.random.SeedSequence(seed).spawn(len(suites))

	reports = []
	for method, stream in zip(suites, streams, strict=True):
		name = method.rsplit(".", 1)[-1]
		try:
			suite = get_attr(method)
			report = suite(np.random.default_rng(stream), sizes.get(name, 1))
		except Exception as e:
			log_error(f"Suite {name} raised {e!r}", "Verification Suite Error")
			report = PropertyReport(name, trials=1, failures=1, worst_margin=-math.inf, worst_case={"error": repr(e)})

		log.info("%s: %d trials, %d failures, worst margin %.3g", name, report.trials, report.failures, report.worst_margin)
		reports.append(report)
	return reports
