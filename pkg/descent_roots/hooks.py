app_name = "descent_roots"
app_title = "Descent Roots"
app_publisher = "itsyosefali"
app_description = "complex polynomial roots by guaranteed minimum-modulus descent"
app_email = "joeyxjoey123@gmail.com"
app_license = "mit"

# Solver Defaults
# ---------------
# Overridden by the file named in DESCENT_ROOTS_CONFIG, then by command-line flags

solver_defaults = {
	"tol_residual": 1e-10,
	"max_iters": 100_000,
	"shrink": 0.9,
	"best_of_m": False,
	"polish": True,
	"polish_steps": 50,
	"record_trace": False,
	"resolution": 64,
}

# Verification Suites
# -------------------
# Each entry is called as suite(rng, size) and returns a PropertyReport

verify_suites = [
	"descent_roots.descent_roots.verify.suites.descent_certainty",
	"descent_roots.descent_roots.verify.suites.lemma_inequalities",
	"descent_roots.descent_roots.verify.suites.boundary_floor",
	"descent_roots.descent_roots.verify.suites.root_recovery",
	"descent_roots.descent_roots.verify.suites.closed_form_fixtures",
	"descent_roots.descent_roots.verify.suites.double_root",
	"descent_roots.descent_roots.verify.suites.trace_monotonicity",
]

verify_suite_sizes = {
	"descent_certainty": 10_000,
	"lemma_inequalities": 1_000,
	"boundary_floor": 1_000,
	"root_recovery": 500,
	"closed_form_fixtures": 1,
	"double_root": 100,
	"trace_monotonicity": 200,
}

# samples drawn per polynomial by the sampling suites
lemma_samples = 1_000
boundary_samples = 4_096

# Fixtures
# --------

fixtures = ["closed_form.json"]
