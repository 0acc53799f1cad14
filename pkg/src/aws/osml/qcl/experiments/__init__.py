#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .config import ExperimentConfig, ExperimentName, ExperimentRow, Rq1Config, Rq2Config, load_config
from .faults import (
    FaultAssignment,
    reliability_from_counts,
    remove_faults,
    seed_faults,
    simulate_testing,
    survival_probability,
    system_reliability,
)
from .runner import (
    CSV_COLUMNS,
    aggregate,
    allocate_instance,
    build_instance,
    derive_seed,
    relative_difference,
    rows_to_frame,
    run_rq1,
    run_rq2,
    write_csv,
)
