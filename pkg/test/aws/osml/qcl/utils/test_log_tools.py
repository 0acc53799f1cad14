#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import logging
from threading import Thread
from unittest import TestCase, main

from pythonjsonlogger.jsonlogger import JsonFormatter


class TestThread(TestCase):
    """Unit tests for threading and logger configuration utilities."""

    def tearDown(self):
        from aws.osml.qcl.utils import ThreadingLocalContextFilter

        ThreadingLocalContextFilter.set_context(None)

    def test_filter_adds_thread_local_context(self):
        """Test that ThreadingLocalContextFilter adds thread-local context to log records."""
        from aws.osml.qcl.utils import ThreadingLocalContextFilter

        context_filter = ThreadingLocalContextFilter(attribute_names=["instance"])

        # Set context in the main thread
        context_filter.set_context({"instance": "ft0-sp0"})
        test_log_record = logging.LogRecord("test-name", logging.DEBUG, "some_module.py", 1, "test message", None, None)

        self.assertTrue(context_filter.filter(test_log_record))
        self.assertEqual(test_log_record.instance, "ft0-sp0")

        # Set context in a separate thread
        thread_log_record = logging.LogRecord("test-name", logging.DEBUG, "some_module.py", 1, "test message", None, None)

        def sample_task():
            context_filter.set_context({"instance": "ft1-sp3"})
            self.assertTrue(context_filter.filter(thread_log_record))

        thread = Thread(target=sample_task)
        thread.start()
        thread.join()

        self.assertEqual(thread_log_record.instance, "ft1-sp3")

        # Ensure the main thread context is unchanged
        test_log_record = logging.LogRecord("test-name", logging.DEBUG, "some_module.py", 1, "test message", None, None)
        self.assertTrue(context_filter.filter(test_log_record))
        self.assertEqual(test_log_record.instance, "ft0-sp0")

    def test_log_context_is_scoped(self):
        """Test that log_context attributes disappear when the block exits, even on error."""
        from aws.osml.qcl.utils import ThreadingLocalContextFilter, log_context

        context_filter = ThreadingLocalContextFilter(attribute_names=["experiment", "instance"])
        record = logging.LogRecord("test-name", logging.INFO, "some_module.py", 1, "inside", None, None)
        with self.assertRaises(RuntimeError):
            with log_context(experiment="rq1", instance="ft2-sp5"):
                context_filter.filter(record)
                raise RuntimeError("boom")
        self.assertEqual(record.experiment, "rq1")
        self.assertEqual(record.instance, "ft2-sp5")

        outside = logging.LogRecord("test-name", logging.INFO, "some_module.py", 1, "outside", None, None)
        context_filter.filter(outside)
        self.assertIsNone(outside.experiment)
        self.assertIsNone(outside.instance)

    def test_configure_logger(self):
        """Test the logger configuration with a custom formatter and filter."""
        from aws.osml.qcl.utils import ThreadingLocalContextFilter, configure_logger

        logger = logging.getLogger("config_test")
        stream_handler = logging.StreamHandler()
        logger.addHandler(stream_handler)

        default_formatter = JsonFormatter(fmt="%(asctime)s %(levelname)s %(message)s", datefmt="%Y-%m-%dT%H:%M:%S")
        worker_filter = ThreadingLocalContextFilter(["instance"])

        configure_logger(logger, logging.INFO, log_formatter=default_formatter, log_filter=worker_filter)

        self.assertEqual(logger.level, logging.INFO)
        self.assertEqual(logger.handlers[0].formatter, default_formatter)
        self.assertEqual(logger.filters, [worker_filter])
        self.assertIn(worker_filter, stream_handler.filters)
        logger.removeHandler(stream_handler)


if __name__ == "__main__":
    main()
