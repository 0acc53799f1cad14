#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import unittest
from pathlib import Path

import numpy as np
from test_config import TestConfig


def load_pairs_problem(budget=TestConfig.test_pairs_budget):
    from aws.osml.qcl.allocator import make_problem
    from aws.osml.qcl.confidence_fn import parse_components
    from aws.osml.qcl.fault_tree import parse_ft

    ft = parse_ft(Path(TestConfig.test_redundant_pairs_fault_tree_path).read_text())
    components = parse_components(Path(TestConfig.test_pair_components_path).read_text())
    return make_problem(ft, components, budget)


def random_problem(rng):
    from aws.osml.qcl.allocator import make_problem
    from aws.osml.qcl.confidence_fn import ComponentModel, exponential
    from aws.osml.qcl.fault_tree import basic_events, random_ft

    n = int(rng.integers(2, 5))
    ft = random_ft(n, int(rng.integers(0, 2**32)))
    components = [
        ComponentModel(name=name, fn=exponential(float(rng.uniform(0.4, 0.95))), spent=float(rng.uniform(0.0, 5.0)))
        for name in basic_events(ft)
    ]
    return make_problem(ft, components, float(rng.uniform(1.0, 10.0)))


class TestSimulatedAnnealing(unittest.TestCase):
    """Unit tests for the simulated annealing allocator."""

    def test_zero_budget(self):
        from aws.osml.qcl.allocator import Strategy, solve_sa

        result = solve_sa(load_pairs_problem(0.0), seed=TestConfig.test_seed)
        self.assertEqual(result.strategy, Strategy.SA)
        self.assertEqual(result.split, {"A": 0.0, "B": 0.0, "C": 0.0, "D": 0.0})
        self.assertEqual(result.predicted_after, result.predicted_before)

    def test_single_component(self):
        from aws.osml.qcl.allocator import make_problem, solve_sa
        from aws.osml.qcl.confidence_fn import ComponentModel, exponential
        from aws.osml.qcl.fault_tree import BasicEvent

        problem = make_problem(BasicEvent(name="X"), [ComponentModel(name="X", fn=exponential(0.5))], 5.0)
        result = solve_sa(problem, seed=TestConfig.test_seed)
        self.assertEqual(result.split, {"X": 5.0})
        self.assertEqual(result.predicted_after, 0.96875)

    def test_deterministic_given_seed(self):
        from aws.osml.qcl.allocator import SAParams, solve_sa

        problem = load_pairs_problem()
        params = SAParams(iterations=2000)
        self.assertEqual(solve_sa(problem, params, seed=7), solve_sa(problem, params, seed=7))

    def test_split_spends_the_budget(self):
        from aws.osml.qcl.allocator import SAParams, solve_sa

        for budget in (0.5, 3.0, 10.0, 25.0):
            result = solve_sa(load_pairs_problem(budget), SAParams(iterations=3000), seed=TestConfig.test_seed)
            self.assertAlmostEqual(result.total, budget, delta=1e-6)
            self.assertTrue(all(value >= 0.0 for value in result.split.values()))
            self.assertGreaterEqual(result.predicted_after, result.predicted_before - 1e-9)

    def test_pairs_match_grid_oracle(self):
        from aws.osml.qcl.allocator import solve_grid, solve_sa

        problem = load_pairs_problem()
        annealed = solve_sa(problem, seed=TestConfig.test_seed)
        oracle = solve_grid(problem, 0.05)
        self.assertGreaterEqual(annealed.predicted_after, oracle.predicted_after - 1e-3)
        self.assertGreater(annealed.split["A"], 1.0)
        self.assertGreater(abs(annealed.split["B"] - annealed.split["C"]), 1.0)

    def test_unverified_pair_shares_the_budget(self):
        from aws.osml.qcl.allocator import make_problem, solve_sa
        from aws.osml.qcl.confidence_fn import ComponentModel, exponential
        from aws.osml.qcl.fault_tree import parse_ft

        ft = parse_ft(Path(TestConfig.test_redundant_pairs_fault_tree_path).read_text())
        families = {"A": exponential(0.5), "B": exponential(0.5), "C": exponential(0.9), "D": exponential(0.9)}
        components = [ComponentModel(name=name, fn=fn) for name, fn in families.items()]
        result = solve_sa(make_problem(ft, components, 10.0), seed=TestConfig.test_seed)
        self.assertGreater(result.split["A"], 1.0)
        self.assertGreater(result.split["B"], 1.0)

    def test_random_problems_against_oracle_and_baselines(self):
        from aws.osml.qcl.allocator import solve_grid, solve_proportional, solve_sa, solve_uniform

        rng = np.random.default_rng(TestConfig.test_seed)
        for trial in range(50):
            problem = random_problem(rng)
            annealed = solve_sa(problem, seed=trial).predicted_after
            self.assertGreaterEqual(annealed, solve_grid(problem, 0.05).predicted_after - 1e-3)
            self.assertGreaterEqual(annealed, solve_uniform(problem).predicted_after - 1e-6)
            self.assertGreaterEqual(annealed, solve_proportional(problem).predicted_after - 1e-6)

    def test_objective_grows_with_budget(self):
        from aws.osml.qcl.allocator import solve_sa

        budgets = (1, 2, 5, 10)
        values = [solve_sa(load_pairs_problem(budget), seed=TestConfig.test_seed).predicted_after for budget in budgets]
        for smaller, larger in zip(values, values[1:]):
            self.assertGreaterEqual(larger, smaller - 1e-9)

    def test_params_validation(self):
        from pydantic import ValidationError

        from aws.osml.qcl.allocator import SAParams

        with self.assertRaises(ValidationError):
            SAParams(iterations=-1)
        with self.assertRaises(ValidationError):
            SAParams(cooling=1.5)
        with self.assertRaises(ValidationError):
            SAParams(initial_temperature=0.0)


class TestSolver(unittest.TestCase):
    """Unit tests for the strategy dispatcher."""

    def test_dispatch(self):
        from aws.osml.qcl.allocator import SAParams, Strategy, solve

        problem = load_pairs_problem()
        for strategy in Strategy:
            result = solve(problem, strategy, SAParams(iterations=500), seed=1, grid_step=0.5)
            self.assertEqual(result.strategy, strategy)
            self.assertAlmostEqual(result.total, 10.0, delta=1e-6)

    def test_annealing_dominates_baselines(self):
        from aws.osml.qcl.allocator import Strategy, solve

        problem = load_pairs_problem()
        scores = {strategy: solve(problem, strategy, seed=TestConfig.test_seed).predicted_after for strategy in Strategy}
        self.assertGreaterEqual(scores[Strategy.SA], scores[Strategy.UNIFORM])
        self.assertGreaterEqual(scores[Strategy.SA], scores[Strategy.PROPORTIONAL])


if __name__ == "__main__":
    unittest.main()
