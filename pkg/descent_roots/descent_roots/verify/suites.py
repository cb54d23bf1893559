# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt

"""
Verification suites registered in hooks.verify_suites.

Each suite is called as suite(rng, size) and returns one PropertyReport. Random polynomials have
coefficients uniform in the box [-10, 10]^2 and degrees 1..12; centers are uniform in [-3, 3]^2.
"""

import numpy as np

from descent_roots import hooks
from descent_roots.exceptions import SolverError
from descent_roots.descent_roots.bounds.bounds import grid_min, search_radius
from descent_roots.descent_roots.descent.descent import build_step
from descent_roots.descent_roots.poly.poly import Polynomial, eval, from_roots
from descent_roots.descent_roots.solver.solver import SolverConfig, descend, find_all_roots
from descent_roots.descent_roots.verify.verify import (
	PropertyReport,
	check_boundary_floor,
	check_lemma_inequalities,
	check_report,
	match_roots,
	pair,
)
from descent_roots.install import get_fixtures

COEFF_BOX = 10.0
CENTER_BOX = 3.0
ROOT_BOX = 2.0
MIN_SEPARATION = 0.2
ROOT_TOL = 1e-6
FIXTURE_RESIDUAL_TOL = 1e-8
DOUBLE_ROOT_TOL = 1e-4
CONTAINMENT_SLACK = 1.0


def random_polynomial(rng, degree, box=COEFF_BOX) -> Polynomial:
	coeffs = rng.uniform(-box, box, degree + 1) + 1j * rng.uniform(-box, box, degree + 1)
	if coeffs[-1] == 0:
		coeffs[-1] = 1
	return Polynomial(tuple(coeffs))


def random_pair(rng, max_degree=12) -> tuple[Polynomial, complex]:
	"""A random polynomial and a center where it does not vanish"""
	while True:
		p = random_polynomial(rng, int(rng.integers(1, max_degree + 1)))
		a = complex(*rng.uniform(-CENTER_BOX, CENTER_BOX, 2))
		if eval(p, a) != 0:
			return p, a


def separated_roots(rng, count, separation=MIN_SEPARATION, box=ROOT_BOX) -> list[complex]:
	"""Random points of [-box, box]^2, pairwise at least `separation` apart"""
	roots = []
	while len(roots) < count:
		z = complex(*rng.uniform(-box, box, 2))
		if all(abs(z - r) >= separation for r in roots):
			roots.append(z)
	return roots


def descent_certainty(rng, size) -> PropertyReport:
	"""Every descent step strictly lowers |p|"""
	report = PropertyReport("descent_certainty")
	for _ in range(size):
		p, a = random_pair(rng)
		step = build_step(p, a)
		report.record(
			(step.center_value - step.landing_value) / step.center_value,
			lambda p=p, a=a: {"coeffs": p.to_pairs(), "center": pair(a)},
		)
	return report


def lemma_inequalities(rng, size) -> PropertyReport:
	report = PropertyReport("lemma_inequalities")
	for _ in range(size):
		p, a = random_pair(rng)
		report.merge(check_lemma_inequalities(p, a, hooks.lemma_samples, rng))
	return report


def boundary_floor(rng, size) -> PropertyReport:
	report = PropertyReport("boundary_floor")
	for _ in range(size):
		p = random_polynomial(rng, int(rng.integers(1, 13)))
		report.merge(check_boundary_floor(p, hooks.boundary_samples))
	return report


def _solve_and_match(report, p, expected, cfg, root_tol, residual_tol=None):
	"""Solve p, check the report and match roots against the expected multiset"""
	try:
		result = find_all_roots(p, cfg)
	except SolverError as e:
		report.record(-1.0, {"coeffs": p.to_pairs(), "error": str(e)})
		return

	report.merge(check_report(p, result, cfg.tol_residual))
	distance = match_roots(result.roots, expected)
	report.record(
		(root_tol - distance) / root_tol,
		lambda: {"check": "root_match", "coeffs": p.to_pairs(), "roots": [pair(r) for r in result.roots]},
	)
	if residual_tol is not None:
		worst = max(result.residuals)
		report.record(
			(residual_tol - worst) / residual_tol,
			lambda: {"check": "fixture_residual", "coeffs": p.to_pairs()},
			passed=worst <= residual_tol,
		)


def root_recovery(rng, size) -> PropertyReport:
	"""Generating roots are recovered from random well-separated root sets"""
	report = PropertyReport("root_recovery")
	cfg = SolverConfig()
	for _ in range(size):
		expected = separated_roots(rng, int(rng.integers(1, 11)))
		_solve_and_match(report, from_roots(expected, 1), expected, cfg, ROOT_TOL)
	return report


def closed_form_fixtures(rng, size) -> PropertyReport:
	"""Polynomials with known closed-form roots"""
	report = PropertyReport("closed_form_fixtures")
	cfg = SolverConfig()
	for _ in range(size):
		for fixture in get_fixtures():
			_solve_and_match(
				report, fixture["polynomial"], fixture["roots"], cfg, ROOT_TOL, FIXTURE_RESIDUAL_TOL
			)
	return report


def double_root(rng, size) -> PropertyReport:
	"""Both computed roots of (z - r)^2 stay near r"""
	report = PropertyReport("double_root")
	cfg = SolverConfig()
	for _ in range(size):
		r = complex(*rng.uniform(-ROOT_BOX, ROOT_BOX, 2))
		p = from_roots([r, r], 1)
		try:
			result = find_all_roots(p, cfg)
		except SolverError as e:
			report.record(-1.0, {"coeffs": p.to_pairs(), "error": str(e)})
			continue
		distance = max(abs(root - r) for root in result.roots)
		report.record(
			(DOUBLE_ROOT_TOL - distance) / DOUBLE_ROOT_TOL,
			lambda p=p, result=result: {"coeffs": p.to_pairs(), "roots": [pair(z) for z in result.roots]},
		)
	return report


def trace_monotonicity(rng, size) -> PropertyReport:
	"""Recorded traces strictly decrease and stay within R + 1 of the origin"""
	report = PropertyReport("trace_monotonicity")
	cfg = SolverConfig(record_trace=True)
	for _ in range(size):
		p = random_polynomial(rng, int(rng.integers(1, 11)))
		region = search_radius(p)
		start = grid_min(p, region, cfg.resolution)
		try:
			trace = descend(p, start, cfg).trace
		except SolverError as e:
			report.record(-1.0, {"coeffs": p.to_pairs(), "error": str(e)})
			continue

		moduli = np.asarray(trace.moduli)
		if moduli.size > 1:
			report.record_batch(
				(moduli[:-1] - moduli[1:]) / moduli[:-1],
				lambda i, p=p: {"check": "strict_decrease", "coeffs": p.to_pairs(), "iter": i + 1},
			)
		limit = region.radius + CONTAINMENT_SLACK
		distances = np.abs([z for z, _ in trace.iterates])
		report.record_batch(
			(limit - distances) / limit,
			lambda i, p=p: {"check": "containment", "coeffs": p.to_pairs(), "iter": i},
			passed=distances <= limit,
		)
	return report
