#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

# flake8: noqa
