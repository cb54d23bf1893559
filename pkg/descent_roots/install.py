# Copyright (c) 2026, itsyosefali and contributors
# For license information, please see license.txt

import json
from pathlib import Path

from descent_roots import hooks
from descent_roots.descent_roots.poly.poly import Polynomial
from descent_roots.utils import logger, throw

FIXTURES_DIR = Path(__file__).parent / "fixtures"

log = logger(__name__)


def get_fixtures():
	"""Closed-form fixture polynomials with their known roots"""
	fixtures = []
	for filename in hooks.fixtures:
		with open(FIXTURES_DIR / filename, encoding="utf-8") as f:
			records = json.load(f)

		for record in records:
			# Check that the fixture is complete before using it
			for field in ("name", "coeffs", "roots"):
				if field not in record:
					throw(f"Fixture in {filename} is missing {field}")

			polynomial = Polynomial.from_pairs(record["coeffs"])
			if len(record["roots"]) != polynomial.degree:
				throw(f"Fixture {record['name']} lists {len(record['roots'])} roots for degree {polynomial.degree}")

			fixtures.append(
				{
					"name": record["name"],
					"polynomial": polynomial,
					"roots": [complex(re, im) for re, im in record["roots"]],
				}
			)

	log.debug("Loaded %d fixtures", len(fixtures))
	return fixtures
