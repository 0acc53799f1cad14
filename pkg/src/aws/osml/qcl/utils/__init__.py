#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

# flake8: noqa
from .log_tools import ThreadingLocalContextFilter, configure_logger, log_context
from .serialization import SignificantFloat, format_significant
from .string_enums import AutoLowerStringEnum, AutoStringEnum
