#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from typing import Annotated

from pydantic import PlainSerializer

from aws.osml.qcl.app_config import QclConfig


def format_significant(value: float, digits: int = QclConfig.SIGNIFICANT_DIGITS) -> float:
    """
    Round a float to a fixed number of significant digits so that written reports are stable across runs and
    platforms.

    :param value: the number to round
    :param digits: the number of significant digits to keep
    :return: the rounded number
    """
    return float(f"{value:.{digits}g}")


def _serialize_significant(value: float) -> float:
    return format_significant(value)


# Floats written to allocation reports keep 9 significant digits in JSON mode only.
SignificantFloat = Annotated[float, PlainSerializer(_serialize_significant, return_type=float, when_used="json")]
