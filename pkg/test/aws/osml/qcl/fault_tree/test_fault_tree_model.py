#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import unittest
from pathlib import Path

from test_config import TestConfig


class TestFaultTreeModel(unittest.TestCase):
    """Unit tests for fault tree parsing and serialization."""

    def test_parse_pairs_of_components(self):
        from aws.osml.qcl.fault_tree import AndGate, OrGate, basic_events, count_gates, parse_ft

        ft = parse_ft(Path(TestConfig.test_or_of_pairs_fault_tree_path).read_text())
        self.assertIsInstance(ft, OrGate)
        self.assertTrue(all(isinstance(child, AndGate) for child in ft.children))
        self.assertEqual(basic_events(ft), ["A", "B", "C", "D"])
        self.assertEqual(count_gates(ft), 3)

    def test_parse_single_leaf(self):
        from aws.osml.qcl.fault_tree import BasicEvent, basic_events, count_gates, parse_ft

        ft = parse_ft(Path(TestConfig.test_single_leaf_fault_tree_path).read_text())
        self.assertEqual(ft, BasicEvent(name="X"))
        self.assertEqual(basic_events(ft), ["X"])
        self.assertEqual(count_gates(ft), 0)

    def test_parse_rejects_invalid_trees(self):
        from aws.osml.qcl.errors import SchemaError
        from aws.osml.qcl.fault_tree import parse_ft

        with self.assertRaises(SchemaError):
            parse_ft(Path(TestConfig.test_unary_gate_fault_tree_path).read_text())
        with self.assertRaises(SchemaError):
            parse_ft('{"type": "xor", "children": [{"type": "basic", "name": "A"}, {"type": "basic", "name": "B"}]}')
        with self.assertRaises(SchemaError):
            parse_ft('{"type": "and", "children": [{"type": "basic", "name": "A"}, {"type": "basic", "name": "A"}]}')
        with self.assertRaises(SchemaError):
            parse_ft('{"type": "basic", "name": "A", "weight": 2}')
        with self.assertRaises(SchemaError):
            parse_ft("not json")

    def test_gates_keep_their_arity(self):
        from aws.osml.qcl.fault_tree import basic_events, count_gates, parse_ft

        ft = parse_ft(
            '{"type": "or", "children": [{"type": "basic", "name": "A"}, {"type": "basic", "name": "B"},'
            ' {"type": "basic", "name": "C"}]}'
        )
        self.assertEqual(len(ft.children), 3)
        self.assertEqual(count_gates(ft), 1)
        self.assertEqual(basic_events(ft), ["A", "B", "C"])

    def test_json_round_trip(self):
        from aws.osml.qcl.fault_tree import dump_ft, parse_ft

        ft = parse_ft(Path(TestConfig.test_redundant_pairs_fault_tree_path).read_text())
        self.assertEqual(parse_ft(dump_ft(ft)), ft)


if __name__ == "__main__":
    unittest.main()
