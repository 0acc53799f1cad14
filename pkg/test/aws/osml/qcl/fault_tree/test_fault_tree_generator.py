#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import unittest


class TestRandomFaultTree(unittest.TestCase):
    """Unit tests for the random fault tree generator."""

    def test_two_leaves(self):
        from aws.osml.qcl.fault_tree import AndGate, OrGate, basic_events, random_ft

        for seed in range(10):
            ft = random_ft(2, seed)
            self.assertIsInstance(ft, (AndGate, OrGate))
            self.assertEqual(basic_events(ft), ["c0", "c1"])

    def test_six_leaves(self):
        from aws.osml.qcl.fault_tree import basic_events, count_gates, random_ft

        for seed in range(20):
            ft = random_ft(6, seed)
            self.assertEqual(count_gates(ft), 5)
            self.assertEqual(basic_events(ft), [f"c{i}" for i in range(6)])

    def test_deterministic(self):
        from aws.osml.qcl.fault_tree import dump_ft, random_ft

        self.assertEqual(random_ft(6, 123), random_ft(6, 123))
        shapes = {dump_ft(random_ft(6, seed)) for seed in range(20)}
        self.assertGreater(len(shapes), 1)

    def test_bad_leaf_count(self):
        from aws.osml.qcl.errors import BadParameter
        from aws.osml.qcl.fault_tree import random_ft

        with self.assertRaises(BadParameter):
            random_ft(1, 0)


if __name__ == "__main__":
    unittest.main()
