#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import logging
import os
from dataclasses import dataclass


@dataclass
class QclConfig:
    """
    QclConfig class to house the high-level configuration settings.

    The QclConfig is a dataclass meant to house the settings shared by the logic, allocation and experiment
    packages. Values that operators may want to tune are provided through ENV variables using os.getenv(), every
    other value is a fixed constant of the numerical model.

    :param log_level: The log level of the package loggers, defaults to INFO
    :param max_enumeration_atoms: Largest number of distinct atoms the exact semantics will enumerate, defaults to 24
    :param enumeration_block_size: Number of assignments evaluated per vectorized block, defaults to 2^20
    :param monte_carlo_samples: Number of samples drawn by the Monte Carlo estimator, defaults to 10^6
    :param grid_max_points: Largest simplex lattice the grid oracle will enumerate, defaults to 10^7
    :param workers: Number of processes used to run experiment instances, defaults to 1 (inline)
    """

    log_level: int = logging.getLevelName(os.getenv("QCL_LOG_LEVEL", "INFO"))
    max_enumeration_atoms: int = int(os.getenv("QCL_MAX_ENUMERATION_ATOMS", 24))
    enumeration_block_size: int = 2**20
    monte_carlo_samples: int = 10**6
    grid_max_points: int = int(os.getenv("QCL_GRID_MAX_POINTS", 10**7))
    workers: int = int(os.getenv("QCL_WORKERS", 1))

    TOLERANCE = 1e-9
    FEASIBILITY_TOLERANCE = 1e-6
    SIGNIFICANT_DIGITS = 9
