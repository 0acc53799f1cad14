#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from .test_config import TestConfig
