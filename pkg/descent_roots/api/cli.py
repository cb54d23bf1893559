# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt

"""
Command-line front end.

	descent-roots solve  --coeffs '[[-1,0],[0,0],[0,0],[1,0]]'
	descent-roots trace  --in poly.json --start '[0,0]' --out trace.csv
	descent-roots verify --seed 42

Polynomials are JSON arrays of [re, im] pairs, lowest degree first. Standard output carries only
the result; log lines go to standard error.
"""

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from descent_roots import __version__
from descent_roots.config import get_solver_config
from descent_roots.exceptions import DescentRootsError, UsageError, ValidationError
from descent_roots.descent_roots.bounds.bounds import grid_min, search_radius
from descent_roots.descent_roots.poly.poly import Polynomial
from descent_roots.descent_roots.solver.solver import DescentTrace, descend, find_all_roots
from descent_roots.descent_roots.verify.verify import run_suites
from descent_roots.utils import fmt_number, log_error, logger, setup_logging

COMMANDS = ("solve", "verify", "trace")
TRACE_COLUMNS = ("iter", "re", "im", "modulus")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3

log = logger(__name__)


@dataclass(frozen=True)
class JobSpec:
	command: str
	polynomial: Polynomial | None = None
	input_path: str | None = None
	output_path: str | None = None
	trace_path: str | None = None
	start: complex | None = None
	seed: int = 42
	verbose: bool = False
	overrides: dict = field(default_factory=dict)

	def load_polynomial(self) -> Polynomial:
		if self.polynomial is not None:
			return self.polynomial
		with open(self.input_path, encoding="utf-8") as f:
			try:
				text = f.read()
			except UnicodeDecodeError as e:
				raise UsageError(f"{self.input_path} is not UTF-8: {e}") from e
		return parse_polynomial(text, source=self.input_path)


class ArgumentParser(argparse.ArgumentParser):
	def error(self, message):
		raise UsageError(message)


def to_json(value) -> str:
	"""Single-line JSON with floats at 17 significant digits and non-finite numbers as null"""
	if value is None:
		return "null"
	if isinstance(value, bool | np.bool_):
		return "true" if value else "false"
	if isinstance(value, int | np.integer):
		return str(int(value))
	if isinstance(value, float | np.floating):
		return fmt_number(value) if math.isfinite(value) else "null"
	if isinstance(value, complex | np.complexfloating):
		return to_json([value.real, value.imag])
	if isinstance(value, str):
		return json.dumps(value)
	if isinstance(value, dict):
		return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in value.items()) + "}"
	if isinstance(value, list | tuple | np.ndarray):
		return "[" + ", ".join(to_json(v) for v in value) + "]"
	raise TypeError(f"Cannot serialize {type(value).__name__}")


def format_polynomial(p: Polynomial) -> str:
	"""The polynomial in the input format; parse_polynomial reads it back unchanged"""
	return to_json(p.to_pairs())


def _number(value, what):
	if isinstance(value, bool) or not isinstance(value, int | float):
		raise UsageError(f"{what} must be a number, got {value!r}")
	if not math.isfinite(value):
		raise UsageError(f"{what} must be finite, got {value!r}")
	return float(value)


def parse_complex(value, what="value") -> complex:
	"""A [re, im] pair or a bare real number"""
	if isinstance(value, list):
		if len(value) != 2:
			raise UsageError(f"{what} must be a [re, im] pair, got {value!r}")
		return complex(_number(value[0], what), _number(value[1], what))
	return complex(_number(value, what), 0.0)


def parse_polynomial(text: str, source="--coeffs") -> Polynomial:
	try:
		data = json.loads(text)
	except ValueError as e:
		raise UsageError(f"{source} is not valid JSON: {e}") from e

	if isinstance(data, dict):
		if "coeffs" not in data:
			raise UsageError(f"{source} holds an object without a coeffs field")
		data = data["coeffs"]
	if not isinstance(data, list):
		raise UsageError(f"{source} must hold a JSON array of [re, im] pairs")
	return Polynomial(tuple(parse_complex(c, f"coefficient {j} in {source}") for j, c in enumerate(data)))


def build_parser() -> ArgumentParser:
	parser = ArgumentParser(
		prog="descent-roots",
		description="Complex polynomial roots by guaranteed minimum-modulus descent.",
	)
	parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
	parser.add_argument("command", choices=COMMANDS)

	source = parser.add_argument_group("input")
	source.add_argument("--coeffs", help="JSON array of [re, im] pairs, lowest degree first")
	source.add_argument("--in", dest="input_path", help="file holding the coefficient JSON")

	output = parser.add_argument_group("output")
	output.add_argument("--out", dest="output_path", help="write the result here instead of standard output")
	output.add_argument("--trace", dest="trace_path", help="solve: write the first root search as CSV")

	solver = parser.add_argument_group("solver")
	solver.add_argument("--tol", dest="tol_residual", type=float)
	solver.add_argument("--max-iters", dest="max_iters", type=int)
	solver.add_argument("--shrink", type=float)
	solver.add_argument("--resolution", type=int, help="grid points per side for the starting point")
	solver.add_argument("--best-of-m", dest="best_of_m", action="store_const", const=True, default=None)
	solver.add_argument("--no-polish", dest="polish", action="store_const", const=False, default=None)
	solver.add_argument("--start", help="trace: JSON [re, im] start point (default: grid minimum)")

	parser.add_argument("--seed", type=int, default=42, help="verify: corpus seed")
	parser.add_argument("--verbose", action="store_true", help="debug logging on standard error")
	return parser


def parse_args(argv=None) -> JobSpec:
	args = build_parser().parse_args(argv)

	has_input = args.coeffs is not None or args.input_path is not None
	if args.command == "verify":
		if has_input:
			raise UsageError("verify takes no polynomial input")
		if args.trace_path or args.start:
			raise UsageError("--trace and --start do not apply to verify")
	else:
		if args.coeffs is not None and args.input_path is not None:
			raise UsageError("give either --coeffs or --in, not both")
		if not has_input:
			raise UsageError(f"{args.command} needs --coeffs or --in")
	if args.command == "trace" and args.trace_path:
		raise UsageError("trace writes its CSV to --out; --trace belongs to solve")
	if args.command == "solve" and args.start:
		raise UsageError("--start applies to trace only")

	start = None
	if args.start:
		try:
			start = parse_complex(json.loads(args.start), "--start")
		except ValueError as e:
			raise UsageError(f"--start is not valid JSON: {e}") from e

	overrides = {
		key: getattr(args, key)
		for key in ("tol_residual", "max_iters", "shrink", "resolution", "best_of_m", "polish")
		if getattr(args, key) is not None
	}
	return JobSpec(
		command=args.command,
		polynomial=parse_polynomial(args.coeffs) if args.coeffs is not None else None,
		input_path=args.input_path,
		output_path=args.output_path,
		trace_path=args.trace_path,
		start=start,
		seed=args.seed,
		verbose=args.verbose,
		overrides=overrides,
	)


def trace_csv(trace: DescentTrace) -> str:
	buffer = io.StringIO()
	writer = csv.writer(buffer, lineterminator="\n")
	writer.writerow(TRACE_COLUMNS)
	for k, (z, modulus) in enumerate(trace.iterates):
		writer.writerow((k, fmt_number(z.real), fmt_number(z.imag), fmt_number(modulus)))
	return buffer.getvalue()


def write_output(path, text):
	if not text.endswith("\n"):
		text += "\n"
	if path:
		with open(path, "w", encoding="utf-8", newline="\n") as f:
			f.write(text)
	else:
		sys.stdout.write(text)
		sys.stdout.flush()


def solve(job: JobSpec) -> int:
	cfg = get_solver_config(**job.overrides)
	if job.trace_path:
		cfg = dataclasses.replace(cfg, record_trace=True)

	report = find_all_roots(job.load_polynomial(), cfg)
	write_output(job.output_path, to_json(report.to_dict()))
	if job.trace_path:
		write_output(job.trace_path, trace_csv(report.traces[0]))
	return EXIT_OK


def trace(job: JobSpec) -> int:
	cfg = dataclasses.replace(get_solver_config(**job.overrides), record_trace=True)
	p = job.load_polynomial()

	start = job.start
	if start is None:
		start = grid_min(p, search_radius(p), cfg.resolution)
	result = descend(p, start, cfg)
	write_output(job.output_path, trace_csv(result.trace))
	return EXIT_OK


def verify(job: JobSpec) -> int:
	reports = run_suites(job.seed)
	write_output(job.output_path, to_json({"seed": job.seed, "reports": [r.to_dict() for r in reports]}))

	failed = [r.property_name for r in reports if not r.passed]
	if failed:
		log.warning("Failing suites: %s", ", ".join(failed))
		return EXIT_FAILURE
	return EXIT_OK


def run(job: JobSpec) -> int:
	setup_logging(job.verbose)
	handler = {"solve": solve, "trace": trace, "verify": verify}[job.command]
	try:
		return handler(job)
	except ValidationError as e:
		print(f"descent-roots: {e}", file=sys.stderr)
		return EXIT_USAGE
	except DescentRootsError as e:
		log_error(str(e), f"{job.command.title()} Error")
		print(f"descent-roots: {e}", file=sys.stderr)
		return EXIT_FAILURE
	except ArithmeticError as e:
		log_error(repr(e), f"{job.command.title()} Error")
		print(f"descent-roots: floating-point failure: {e}", file=sys.stderr)
		return EXIT_FAILURE
	except OSError as e:
		print(f"descent-roots: {e}", file=sys.stderr)
		return EXIT_IO


def main(argv=None) -> int:
	try:
		job = parse_args(argv)
	except UsageError as e:
		print(f"descent-roots: {e}", file=sys.stderr)
		return EXIT_USAGE
	return run(job)


if __name__ == "__main__":
	sys.exit(main())
