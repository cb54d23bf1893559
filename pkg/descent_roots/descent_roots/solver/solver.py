# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt

"""
Root finding by repeated descent steps, deflation and Newton polishing.

Every accepted step strictly lowers |p|, so a recorded trace is strictly decreasing. That the
iterates converge to a root at this step-size schedule is observed, not proven: the existence
argument behind each step only says a smaller value exists near any non-root.
"""

from dataclasses import dataclass, field

from descent_roots import hooks
from descent_roots.exceptions import (
	DegreeZero,
	EffectivelyConstant,
	IterationBudgetExhausted,
	SolverError,
	StagnationFailure,
)
from descent_roots.descent_roots.bounds.bounds import grid_min, search_radius
from descent_roots.descent_roots.descent.descent import DescentStep, build_step
from descent_roots.descent_roots.poly.poly import (
	Polynomial,
	deflate,
	derivative,
	eval,
	eval_error_bound,
	from_roots,
)
from descent_roots.utils import log_error, logger, throw

STAGNATION_RATIO = 0.999
MAX_HALVINGS = 40
# multiple of the evaluation error bound below which a stalled |p| counts as zero
ROUNDING_SLACK = 8.0
TINY_SLOPE = 1e-300

log = logger(__name__)


@dataclass(frozen=True)
class SolverConfig:
	tol_residual: float = hooks.solver_defaults["tol_residual"]
	max_iters: int = hooks.solver_defaults["max_iters"]
	shrink: float = hooks.solver_defaults["shrink"]
	best_of_m: bool = hooks.solver_defaults["best_of_m"]
	polish: bool = hooks.solver_defaults["polish"]
	polish_steps: int = hooks.solver_defaults["polish_steps"]
	record_trace: bool = hooks.solver_defaults["record_trace"]
	resolution: int = hooks.solver_defaults["resolution"]

	def __post_init__(self):
		self.validate()

	def validate(self):
		"""Validate numeric settings"""
		if not (isinstance(self.tol_residual, int | float) and self.tol_residual > 0):
			throw(f"tol_residual must be positive, got {self.tol_residual!r}")
		if not (isinstance(self.max_iters, int) and self.max_iters > 0):
			throw(f"max_iters must be a positive integer, got {self.max_iters!r}")
		if not (isinstance(self.shrink, int | float) and 0 < self.shrink < 1):
			throw(f"shrink must lie in (0, 1), got {self.shrink!r}")
		if not (isinstance(self.polish_steps, int) and self.polish_steps > 0):
			throw(f"polish_steps must be a positive integer, got {self.polish_steps!r}")
		if not (isinstance(self.resolution, int) and self.resolution >= 2):
			throw(f"resolution must be an integer >= 2, got {self.resolution!r}")


@dataclass(frozen=True)
class DescentTrace:
	iterates: tuple[tuple[complex, float], ...]

	def __len__(self):
		return len(self.iterates)

	@property
	def moduli(self) -> list[float]:
		return [value for _, value in self.iterates]

	def is_strictly_decreasing(self) -> bool:
		moduli = self.moduli
		return all(b < a for a, b in zip(moduli, moduli[1:], strict=False))


@dataclass(frozen=True)
class DescentResult:
	root: complex
	value: float
	iterations: int
	trace: DescentTrace | None = None


@dataclass(frozen=True)
class RootReport:
	roots: tuple[complex, ...]
	residuals: tuple[float, ...]
	reconstruction_error: float
	iterations_per_root: tuple[int, ...]
	traces: tuple[DescentTrace | None, ...] = field(default=(), compare=False)

	@property
	def degree(self) -> int:
		return len(self.roots)

	def to_dict(self):
		return {
			"degree": self.degree,
			"roots": [[r.real, r.imag] for r in self.roots],
			"residuals": list(self.residuals),
			"reconstruction_error": self.reconstruction_error,
			"iterations": list(self.iterations_per_root),
		}


def _advance(p: Polynomial, z: complex, value: float, cfg: SolverConfig) -> DescentStep:
	"""One accepted descent step from z, with shrink halving on stagnation"""
	shrink = cfg.shrink
	best = build_step(p, z, shrink, cfg.best_of_m)
	halvings = 0
	while best.landing_value > STAGNATION_RATIO * value and halvings < MAX_HALVINGS:
		shrink /= 2
		halvings += 1
		retry = build_step(p, z, shrink, cfg.best_of_m)
		improved = retry.landing_value < best.landing_value
		if improved:
			best = retry
		elif best.landing_value < value:
			# halving no longer helps and the best landing already descends
			break

	if halvings:
		log.debug(
			"stagnation at %r: %d halvings, ratio %.6g", z, halvings, best.landing_value / value
		)
	if not best.landing_value < value:
		raise StagnationFailure(
			f"no descent from {z!r} after {halvings} shrink halvings",
			center=z,
			center_value=value,
			diagnostics={
				"m": best.m,
				"rho1": best.rho1,
				"rho2": best.rho2,
				"rho": best.rho,
				"landing_value": best.landing_value,
				"halvings": halvings,
			},
		)
	return best


def at_rounding_floor(p: Polynomial, z: complex, value: float) -> bool:
	"""|p(z)| is within the rounding error of evaluating p at z"""
	return value <= ROUNDING_SLACK * eval_error_bound(p, z)


def descend(p: Polynomial, start: complex, cfg: SolverConfig) -> DescentResult:
	"""
	Iterate descent steps from start until |p| <= tol_residual * scale.

	Below that tolerance only rounding can stop the descent: a stalled point whose |p| is within
	the evaluation error bound is accepted as a root, with a warning.
	"""
	if p.degree < 1:
		throw("Cannot search for a root of a constant polynomial", DegreeZero)

	threshold = cfg.tol_residual * p.scale
	z = complex(start)
	value = abs(eval(p, z))
	iterates = [(z, value)]

	def finish(iterations):
		trace = DescentTrace(tuple(iterates)) if cfg.record_trace else None
		return DescentResult(root=z, value=value, iterations=iterations, trace=trace)

	def accept_at_floor():
		log.warning(
			"accepting %r at the rounding floor: |p| = %.3g, tolerance %.3g", z, value, threshold
		)

	for iteration in range(cfg.max_iters + 1):
		if value <= threshold:
			return finish(iteration)
		if iteration == cfg.max_iters:
			break

		try:
			step = _advance(p, z, value, cfg)
		except EffectivelyConstant as e:
			raise StagnationFailure(str(e), center=z, center_value=value) from e
		except StagnationFailure:
			if not at_rounding_floor(p, z, value):
				raise
			accept_at_floor()
			return finish(iteration)

		z, value = step.landing, step.landing_value
		if cfg.record_trace:
			iterates.append((z, value))

		# still descending, but only by rounding noise
		if step.ratio > STAGNATION_RATIO and at_rounding_floor(p, z, value):
			accept_at_floor()
			return finish(iteration + 1)

	raise IterationBudgetExhausted(
		f"|p| = {value:.6g} above {threshold:.6g} after {cfg.max_iters} iterations",
		best=z,
		best_value=value,
		iterations=cfg.max_iters,
	)


def find_root(
	p: Polynomial, start: complex, cfg: SolverConfig | None = None
) -> tuple[complex, DescentTrace | None]:
	result = descend(p, start, cfg or SolverConfig())
	return result.root, result.trace


def newton_polish(p: Polynomial, z: complex, max_steps: int = 50) -> complex:
	"""Newton refinement that never returns a point with larger |p| than z"""
	dp = derivative(p)
	best = complex(z)
	best_value = abs(eval(p, best))
	for _ in range(max_steps):
		if best_value == 0:
			break
		slope = eval(dp, best)
		if abs(slope) < TINY_SLOPE:
			break
		candidate = best - eval(p, best) / slope
		value = abs(eval(p, candidate))
		if not value < best_value:
			break
		best, best_value = candidate, value
	return best


def reconstruction_error(p: Polynomial, roots) -> float:
	"""Max coefficient-wise distance between p and a_n prod(z - r), relative to p.scale"""
	rebuilt = from_roots(roots, p.leading)
	size = max(len(p.coeffs), len(rebuilt.coeffs))
	original = p.coeffs + (0j,) * (size - len(p.coeffs))
	expanded = rebuilt.coeffs + (0j,) * (size - len(rebuilt.coeffs))
	return max(abs(a - b) for a, b in zip(original, expanded, strict=True)) / p.scale


def find_all_roots(p: Polynomial, cfg: SolverConfig | None = None) -> RootReport:
	"""All n roots by descent, deflation and polishing against the original polynomial"""
	cfg = cfg or SolverConfig()
	if p.degree < 1:
		throw("A constant polynomial has no roots to find", DegreeZero)

	roots, iterations, traces = [], [], []
	current = p
	for depth in range(p.degree):
		region = search_radius(current)
		start = grid_min(current, region, cfg.resolution)
		try:
			result = descend(current, start, cfg)
		except SolverError as e:
			e.depth = depth
			log_error(str(e), "Root Search Error")
			raise

		root = result.root
		if cfg.polish:
			root = newton_polish(p, root, cfg.polish_steps)
		log.debug(
			"root %d at %r after %d iterations, |p| = %.3g", depth, root, result.iterations, abs(eval(p, root))
		)

		roots.append(root)
		iterations.append(result.iterations)
		traces.append(result.trace)
		current, _ = deflate(current, root)

	report = RootReport(
		roots=tuple(roots),
		residuals=tuple(abs(eval(p, r)) for r in roots),
		reconstruction_error=reconstruction_error(p, roots),
		iterations_per_root=tuple(iterations),
		traces=tuple(traces) if cfg.record_trace else (),
	)
	log.info(
		"degree %d solved in %d iterations, reconstruction error %.3g",
		p.degree,
		sum(iterations),
		report.reconstruction_error,
	)
	return report
