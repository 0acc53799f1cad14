#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import threading
from contextlib import contextmanager
from logging import Filter, Formatter, Logger, LogRecord
from typing import Iterator, List, Optional

_LOG_CONTEXT = threading.local()


class ThreadingLocalContextFilter(Filter):
    """
    A filter that copies per-thread context (for example the experiment and instance currently being evaluated)
    onto every log record so the JSON formatter can emit them as fields.
    """

    def __init__(self, attribute_names: List[str]) -> None:
        super().__init__()
        self.attribute_names = attribute_names

    def filter(self, record: LogRecord) -> bool:
        """
        Inject the context attributes of the current thread into the record.

        :param record: the log record to filter
        :return: True, this filter never drops records
        """
        for attribute_name in self.attribute_names:
            setattr(record, attribute_name, getattr(_LOG_CONTEXT, attribute_name, None))
        return True

    @staticmethod
    def set_context(context: Optional[dict] = None) -> None:
        """
        Set the context for the current thread. If None all context information is cleared.

        :param context: the context attributes to set
        :return: None
        """
        if context is None:
            _LOG_CONTEXT.__dict__.clear()
        else:
            _LOG_CONTEXT.__dict__.update(context)


@contextmanager
def log_context(**context) -> Iterator[None]:
    """
    Scope a set of context attributes to a `with` block. Attributes are cleared when the block exits, even on error.

    :param context: attribute names and values to attach to log records emitted inside the block
    """
    ThreadingLocalContextFilter.set_context(context)
    try:
        yield
    finally:
        for name in context:
            _LOG_CONTEXT.__dict__.pop(name, None)


def configure_logger(logger: Logger, log_level: int, log_formatter: Formatter = None, log_filter: Filter = None) -> None:
    """
    Configure a given logger with the provided parameters.

    :param logger: An instance of the Logger to configure
    :param log_level: The log level to set
    :param log_formatter: The log formatter to set on all handlers
    :param log_filter: Log filter to apply to the logger and its handlers, records propagated from child loggers
        only pass through the handler filters
    :return: None
    """
    logger.setLevel(log_level)
    if log_formatter:
        for handler in logger.handlers:
            handler.setFormatter(log_formatter)
    if log_filter:
        logger.addFilter(log_filter)
        for handler in logger.handlers:
            handler.addFilter(log_filter)
