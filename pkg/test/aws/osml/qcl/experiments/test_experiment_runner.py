#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import io
import math
import unittest
from pathlib import Path

from test_config import TestConfig


def rows_by_key(rows):
    return {(row.budget, row.strategy): row for row in rows}


class TestRelativeDifference(unittest.TestCase):
    """Unit tests for the relative difference of unreliability."""

    def test_relative_difference(self):
        from aws.osml.qcl.experiments import relative_difference

        self.assertAlmostEqual(relative_difference(0.9812, 0.9711), -53.72, delta=0.01)
        self.assertEqual(relative_difference(0.5, 0.5), 0.0)
        self.assertAlmostEqual(relative_difference(0.5, 0.75), 50.0, places=12)

    def test_certain_reference(self):
        from aws.osml.qcl.experiments import relative_difference

        self.assertEqual(relative_difference(1.0, 1.0), 0.0)
        self.assertTrue(math.isnan(relative_difference(1.0, 0.9)))


class TestInstances(unittest.TestCase):
    """Unit tests for the construction of experiment instances."""

    def test_derive_seed(self):
        from aws.osml.qcl.experiments import derive_seed

        self.assertEqual(derive_seed(1, 2, 3), derive_seed(1, 2, 3))
        self.assertNotEqual(derive_seed(1, 2, 3), derive_seed(1, 3, 2))
        self.assertTrue(0 <= derive_seed(0) < 2**64)

    def test_build_instance(self):
        from aws.osml.qcl.experiments import Rq1Config, build_instance
        from aws.osml.qcl.fault_tree import basic_events

        cfg = Rq1Config(n_fts=3, n_sps=3, seed=TestConfig.test_seed)
        ft, sp = build_instance(cfg, 1, 2)
        self.assertEqual(list(sp), basic_events(ft))
        self.assertEqual(len(sp), cfg.ft_leaves)
        self.assertTrue(all(100.0 <= spent <= 300.0 for spent in sp.values()))
        self.assertEqual(build_instance(cfg, 1, 2), (ft, sp))

        same_tree, other_sp = build_instance(cfg, 1, 0)
        self.assertEqual(same_tree, ft)
        self.assertNotEqual(other_sp, sp)

    def test_allocate_instance(self):
        from aws.osml.qcl.allocator import SAParams, Strategy
        from aws.osml.qcl.experiments import Rq1Config, allocate_instance, build_instance

        cfg = Rq1Config(n_fts=1, n_sps=1, budgets=[10.0, 100.0], sa=SAParams(iterations=500))
        ft, sp = build_instance(cfg, 0, 0)
        allocations = allocate_instance(cfg, ft, sp, 0, 0)
        self.assertEqual(len(allocations), 6)
        for (budget_index, strategy), result in allocations.items():
            self.assertEqual(result.strategy, strategy)
            self.assertAlmostEqual(result.total, cfg.budgets[budget_index], delta=1e-6)
        self.assertGreaterEqual(
            allocations[(1, Strategy.SA)].predicted_after, allocations[(1, Strategy.UNIFORM)].predicted_after
        )


class TestAggregate(unittest.TestCase):
    """Unit tests for the aggregation of instance scores."""

    def test_aggregate(self):
        from aws.osml.qcl.allocator import Strategy
        from aws.osml.qcl.experiments import ExperimentName, Rq1Config, aggregate

        cfg = Rq1Config(n_fts=1, n_sps=2, budgets=[10.0], strategies=(Strategy.SA, Strategy.UNIFORM))
        instances = [
            {(0, Strategy.SA): 0.9, (0, Strategy.UNIFORM): 0.8},
            {(0, Strategy.SA): 0.7, (0, Strategy.UNIFORM): 0.6},
        ]
        rows = aggregate(ExperimentName.RQ1, cfg, instances)
        self.assertEqual([row.strategy for row in rows], [Strategy.SA, Strategy.UNIFORM])
        sa, uniform = rows
        self.assertAlmostEqual(sa.score, 0.8, places=12)
        self.assertEqual(sa.rel_diff_pct, 0.0)
        self.assertAlmostEqual(sa.stderr, 0.1, places=12)
        self.assertAlmostEqual(uniform.score, 0.7, places=12)
        self.assertAlmostEqual(uniform.rel_diff_pct, -50.0, places=9)
        self.assertEqual(uniform.n_instances, 2)


class TestRq1(unittest.TestCase):
    """Tests of the predicted confidence gain experiment."""

    def test_zero_budget(self):
        from aws.osml.qcl.experiments import Rq1Config, load_config, run_rq1

        cfg = load_config(Rq1Config, Path(TestConfig.test_rq1_zero_budget_config_path).read_text())
        rows = run_rq1(cfg)
        self.assertEqual(len(rows), 3)
        self.assertEqual(len({row.score for row in rows}), 1)
        for row in rows:
            self.assertEqual(row.rel_diff_pct, 0.0)
            self.assertEqual(row.n_instances, 4)

    def test_desk_scale(self):
        from aws.osml.qcl.allocator import Strategy
        from aws.osml.qcl.experiments import Rq1Config, run_rq1

        budgets = [1.0, 10.0, 100.0, 1000.0]
        cfg = Rq1Config(n_fts=20, n_sps=10, budgets=budgets, seed=TestConfig.test_seed)
        rows = rows_by_key(run_rq1(cfg))
        for budget in budgets[1:]:
            qcl = rows[(budget, Strategy.SA)].score
            proportional = rows[(budget, Strategy.PROPORTIONAL)].score
            uniform = rows[(budget, Strategy.UNIFORM)].score
            self.assertGreaterEqual(qcl, proportional)
            self.assertGreaterEqual(proportional, uniform)
            self.assertLessEqual(rows[(budget, Strategy.UNIFORM)].rel_diff_pct, 0.0)
        self.assertGreaterEqual(rows[(1000.0, Strategy.SA)].score, 0.97)
        for strategy in Strategy.SA, Strategy.UNIFORM, Strategy.PROPORTIONAL:
            for lower, higher in zip(budgets, budgets[1:]):
                row = rows[(higher, strategy)]
                self.assertGreaterEqual(row.score, rows[(lower, strategy)].score - 2.0 * row.stderr)

        uniform_gaps = [abs(rows[(budget, Strategy.UNIFORM)].rel_diff_pct) for budget in budgets]
        self.assertEqual(uniform_gaps, sorted(uniform_gaps))
        proportional_gaps = [abs(rows[(budget, Strategy.PROPORTIONAL)].rel_diff_pct) for budget in budgets[1:]]
        self.assertEqual(proportional_gaps, sorted(proportional_gaps))
        self.assertGreater(uniform_gaps[-1], 10.0 * uniform_gaps[0])

    def test_workers_do_not_change_results(self):
        from aws.osml.qcl.experiments import Rq1Config, run_rq1

        cfg = Rq1Config(n_fts=2, n_sps=2, budgets=[10.0], sa={"iterations": 300}, seed=TestConfig.test_seed)
        self.assertEqual(run_rq1(cfg), run_rq1(cfg.model_copy(update={"workers": 2})))


class TestRq2(unittest.TestCase):
    """Tests of the fault seeding experiment."""

    def test_desk_scale(self):
        from aws.osml.qcl.allocator import Strategy
        from aws.osml.qcl.experiments import Rq2Config, run_rq2

        cfg = Rq2Config(n_fts=5, n_sps=5, n_fds=20, n_runs=20, budgets=[60.0, 600.0], seed=TestConfig.test_seed)
        rows = rows_by_key(run_rq2(cfg))
        for budget in cfg.budgets:
            qcl = rows[(budget, Strategy.SA)]
            for strategy in Strategy.UNIFORM, Strategy.PROPORTIONAL:
                self.assertGreaterEqual(qcl.score, rows[(budget, strategy)].score)
            for row in (rows[(budget, strategy)] for strategy in cfg.strategies):
                self.assertTrue(0.0 <= row.score <= 1.0)
        self.assertGreater(rows[(600.0, Strategy.SA)].score, rows[(60.0, Strategy.SA)].score)

    def test_csv_is_reproducible(self):
        from aws.osml.qcl.experiments import CSV_COLUMNS, Rq2Config, load_config, run_rq2, write_csv

        cfg = load_config(Rq2Config, Path(TestConfig.test_rq2_small_config_path).read_text())
        cfg = cfg.model_copy(update={"seed": TestConfig.test_seed})
        outputs = []
        for _ in range(2):
            buffer = io.StringIO()
            write_csv(run_rq2(cfg), buffer)
            outputs.append(buffer.getvalue())
        self.assertEqual(outputs[0], outputs[1])
        lines = outputs[0].splitlines()
        self.assertEqual(lines[0], ",".join(CSV_COLUMNS))
        self.assertEqual(len(lines), 1 + 2 * 3)
        self.assertTrue(lines[1].startswith("rq2,60,sa,"))


if __name__ == "__main__":
    unittest.main()
