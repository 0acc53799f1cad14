#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from enum import Enum


class AutoStringEnum(Enum):
    """
    An Enum whose member values are the member names, e.g. the rule tags written into proof JSON.
    """

    @staticmethod
    def _generate_next_value_(name, start, count, last_values) -> str:
        return name


class AutoLowerStringEnum(Enum):
    """
    An Enum whose member values are the lowercase member names, e.g. the strategy names accepted on the command line.
    """

    @staticmethod
    def _generate_next_value_(name, start, count, last_values) -> str:
        """
        Compute the value of the next member.

        :param: name: The name of the Enum member.
        :param: start: The initial integer.
        :param: count: The number of existing members.
        :param: last_values: The list of values associated with existing members.

        :return: The lowercase version of the member name.
        """
        return name.lower()
