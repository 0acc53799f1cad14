#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import unittest

import numpy as np
from pydantic import ValidationError


class TestConfidenceExpr(unittest.TestCase):
    """Unit tests for the confidence function expression language."""

    def test_evaluate(self):
        from aws.osml.qcl.confidence_fn import add, const, div, evaluate, power, sub, var

        spent_shift = sub(const(1.0), power(const(0.99), add(var(), const(1.0))))
        self.assertAlmostEqual(evaluate(spent_shift, 100.0), 1.0 - 0.99**101, places=12)
        self.assertAlmostEqual(evaluate(spent_shift, 100.0), 0.637, delta=1e-3)

        halving = sub(const(1.0), div(const(1.0), power(const(2.0), var())))
        self.assertEqual(evaluate(halving, 0.0), 0.0)
        self.assertEqual(evaluate(halving, 5.0), 0.96875)

    def test_remaining_operators(self):
        from aws.osml.qcl.confidence_fn import const, evaluate, maximum, minimum, mul, neg, var

        self.assertEqual(evaluate(minimum(mul(var(), const(0.1)), const(1.0)), 30.0), 1.0)
        self.assertAlmostEqual(evaluate(maximum(const(0.2), mul(var(), const(0.1))), 1.0), 0.2)
        self.assertAlmostEqual(evaluate(neg(neg(mul(var(), const(0.25)))), 2.0), 0.5)

    def test_negative_resources(self):
        from aws.osml.qcl.confidence_fn import evaluate, var
        from aws.osml.qcl.errors import BadParameter

        with self.assertRaises(BadParameter):
            evaluate(var(), -1.0)

    def test_evaluation_errors(self):
        from aws.osml.qcl.confidence_fn import const, div, evaluate, power, var
        from aws.osml.qcl.errors import EvalError, QclComputationError

        with self.assertRaises(EvalError):
            evaluate(div(const(1.0), var()), 0.0)
        with self.assertRaises(EvalError):
            evaluate(power(const(-1.0), const(0.5)), 0.0)
        with self.assertRaises(EvalError) as context:
            evaluate(power(const(10.0), var()), 400.0)
        self.assertIsInstance(context.exception, QclComputationError)

    def test_clamping_is_reported(self):
        from aws.osml.qcl.confidence_fn import const, evaluate_detailed, sub, var

        with self.assertLogs("aws.osml.qcl.confidence_fn.expression", level="WARNING"):
            result = evaluate_detailed(sub(const(2.0), var()), 0.0)
        self.assertEqual(result.value, 1.0)
        self.assertEqual(result.raw, 2.0)
        self.assertTrue(result.clamped)
        self.assertFalse(evaluate_detailed(var(), 0.5).clamped)

    def test_vectorized_matches_scalar(self):
        from aws.osml.qcl.confidence_fn import (
            add,
            compile_expr,
            const,
            evaluate_scalar,
            evaluate_vector,
            power,
            sub,
            var,
        )

        expr = sub(const(1.0), power(const(0.99), add(var(), const(1.0))))
        points = np.linspace(0.0, 500.0, 11)
        vector = evaluate_vector(compile_expr(expr, vectorized=True), points)
        scalar = [evaluate_scalar(compile_expr(expr), float(point)) for point in points]
        np.testing.assert_allclose(vector, scalar, rtol=0, atol=1e-12)
        self.assertEqual(evaluate_vector(compile_expr(const(0.5), vectorized=True), points).shape, points.shape)

    def test_vectorized_errors(self):
        from aws.osml.qcl.confidence_fn import compile_expr, const, div, evaluate_vector, var
        from aws.osml.qcl.errors import EvalError

        with self.assertRaises(EvalError):
            evaluate_vector(compile_expr(div(const(1.0), var()), vectorized=True), np.array([0.0, 1.0]))

    def test_arity_validation(self):
        from aws.osml.qcl.confidence_fn import ConfidenceExpr, ExprOp, const, var

        with self.assertRaises(ValidationError):
            ConfidenceExpr(op=ExprOp.CONST)
        with self.assertRaises(ValidationError):
            ConfidenceExpr(op=ExprOp.VAR, args=(const(1.0),))
        with self.assertRaises(ValidationError):
            ConfidenceExpr(op=ExprOp.SUB, args=(var(), var(), var()))
        with self.assertRaises(ValidationError):
            ConfidenceExpr(op=ExprOp.NEG, args=(var(), var()))
        with self.assertRaises(ValidationError):
            ConfidenceExpr(op=ExprOp.ADD, args=(var(),))
        with self.assertRaises(ValidationError):
            ConfidenceExpr(op=ExprOp.ADD, value=1.0, args=(var(), var()))

    def test_json_round_trip(self):
        from aws.osml.qcl.confidence_fn import ConfidenceExpr, const, power, sub, var

        expr = sub(const(1.0), power(const(0.5), var()))
        text = expr.dump_json()
        self.assertEqual(
            text,
            '{"op":"sub","args":[{"op":"const","value":1.0},{"op":"pow","args":[{"op":"const","value":0.5},{"op":"var"}]}]}',
        )
        self.assertEqual(ConfidenceExpr.model_validate_json(text), expr)

    def test_substitute_var(self):
        from aws.osml.qcl.confidence_fn import add, const, evaluate, power, sub, substitute_var, var

        expr = sub(const(1.0), power(const(0.5), var()))
        shifted = substitute_var(expr, add(var(), const(3.0)))
        for r in (0.0, 1.5, 7.0):
            self.assertAlmostEqual(evaluate(shifted, r), evaluate(expr, r + 3.0), places=12)

    def test_check_monotone(self):
        from aws.osml.qcl.confidence_fn import check_monotone, const, exponential, sub, var
        from aws.osml.qcl.errors import BadParameter

        self.assertTrue(check_monotone(exponential(0.99, 1.0).to_expr(), 1000.0, 1001))
        self.assertTrue(check_monotone(const(0.5), 10.0, 5))
        self.assertFalse(check_monotone(sub(const(1.0), var()), 2.0, 3))
        with self.assertRaises(BadParameter):
            check_monotone(var(), 1.0, 1)


if __name__ == "__main__":
    unittest.main()
