# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt

"""
A closed disc guaranteed to hold a global minimizer of |p| in its interior.

For |z| >= 1, |p(z)| >= |a_n| |z|^n - |z|^(n-1) (|a_(n-1)| + ... + |a_0|), and once also
|z| >= 2 sum / |a_n| the right side is at least |a_n| |z|^n / 2. Taking R past
(2 (|a_0| + 1) / |a_n|)^(1/n) as well pushes that floor above |p(0)|.
"""

import math
import sys
from dataclasses import dataclass

import numpy as np

from descent_roots.exceptions import DegreeZero, OutOfRange, ValidationError
from descent_roots.descent_roots.poly.poly import Polynomial, eval_many
from descent_roots.utils import throw

RADIUS_SLACK = 1e-6
DEFAULT_RESOLUTION = 64
# |p| on the disc stays below 3 |a_n| R^n / 2; keep that and the Horner partial sums finite
FLOOR_LIMIT = sys.float_info.max / 8


@dataclass(frozen=True)
class SearchRegion:
	radius: float
	# certified lower bound for |p| on |z| = radius
	boundary_floor: float
	center_value: float

	@property
	def is_certified(self) -> bool:
		return self.boundary_floor > self.center_value


def radius_terms(p: Polynomial) -> tuple[float, float, float]:
	"""The three lower limits whose maximum, padded, is the search radius"""
	if p.degree < 1:
		throw("A constant polynomial has no search region", DegreeZero)

	n = p.degree
	leading = abs(p.leading)
	lower = math.fsum(abs(c) for c in p.coeffs[:-1])
	constant = abs(p.coeffs[0])
	return 1.0, 2.0 * lower / leading, (2.0 * (constant + 1.0) / leading) ** (1.0 / n)


def search_radius(p: Polynomial) -> SearchRegion:
	radius = max(radius_terms(p)) * (1.0 + RADIUS_SLACK)
	try:
		floor = abs(p.leading) * radius**p.degree / 2.0
	except OverflowError:
		floor = math.inf
	if not floor <= FLOOR_LIMIT:
		throw(f"Search disc of radius {radius:.6g} needs |p| beyond the double range", OutOfRange)

	return SearchRegion(
		radius=radius,
		boundary_floor=floor,
		center_value=abs(p.coeffs[0]),
	)


def grid_points(region: SearchRegion, resolution: int = DEFAULT_RESOLUTION) -> np.ndarray:
	"""Cartesian grid over [-R, R]^2, ordered lexicographically by (re, im)"""
	if resolution < 2:
		throw(f"Grid resolution must be at least 2, got {resolution}", ValidationError)

	axis = np.linspace(-region.radius, region.radius, resolution)
	re, im = np.meshgrid(axis, axis, indexing="ij")
	return (re + 1j * im).ravel()


def grid_min(p: Polynomial, region: SearchRegion, resolution: int = DEFAULT_RESOLUTION) -> complex:
	"""Grid point inside the disc with the smallest |p|; a starting point only"""
	points = grid_points(region, resolution)
	values = np.abs(eval_many(p, points))
	values[np.abs(points) > region.radius] = np.inf
	# argmin keeps the first occurrence, i.e. the lexicographically least tie
	return complex(points[int(np.argmin(values))])
