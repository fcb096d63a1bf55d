"""
Logging module for curvkit.
Provides structured logging with coloured console output and an optional
rotating file log that is safe to share between worker threads.
"""

import logging
import os
import sys
from datetime import datetime
from functools import wraps
from typing import Optional

from colorama import Fore, Style
from colorama import init as colorama_init
from concurrent_log_handler import ConcurrentRotatingFileHandler

from config import APP_CONFIG, get_log_dir, get_log_level

colorama_init()


class ColorFormatter(logging.Formatter):
    """Formatter with colours for different log levels."""

    COLORS = {
        'DEBUG': Fore.CYAN,
        'INFO': Fore.GREEN,
        'WARNING': Fore.YELLOW,
        'ERROR': Fore.RED,
        'CRITICAL': Fore.MAGENTA,
    }

    def __init__(self, fmt: str, datefmt: Optional[str] = None, use_color: bool = True):
        super().__init__(fmt, datefmt=datefmt)
        self.use_color = use_color

    def format(self, record):
        levelname = record.levelname
        if self.use_color:
            color = self.COLORS.get(levelname, "")
            record.levelname = f"{color}{levelname}{Style.RESET_ALL}"
        try:
            return super().format(record)
        finally:
            record.levelname = levelname


class ApplicationLogger:
    """Main logger class for curvkit."""

    def __init__(self, name: str = APP_CONFIG["name"]):
        self.name = name
        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        # Prevent duplicate handlers
        if not self.logger.handlers:
            self._setup_handlers()

    def _setup_handlers(self):
        """Setup console handler and, when configured, the file handler."""
        # stdout carries reports
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(getattr(logging, get_log_level(), logging.WARNING))
        console_handler.setFormatter(ColorFormatter(
            '%(asctime)s - %(levelname)s - %(message)s',
            datefmt='%H:%M:%S',
            use_color=sys.stderr.isatty(),
        ))
        self.logger.addHandler(console_handler)

        log_dir = get_log_dir()
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
            file_handler = ConcurrentRotatingFileHandler(
                os.path.join(log_dir, f"{self.name.lower()}.log"),
                maxBytes=10 * 1024 * 1024,  # 10MB
                backupCount=5,
            )
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(module)s:%(lineno)d - %(message)s'
            ))
            self.logger.addHandler(file_handler)

    def debug(self, message: str, **kwargs):
        """Log debug message."""
        self.logger.debug(message, extra=kwargs)

    def info(self, message: str, **kwargs):
        """Log info message."""
        self.logger.info(message, extra=kwargs)

    def warning(self, message: str, **kwargs):
        """Log warning message."""
        self.logger.warning(message, extra=kwargs)

    def error(self, message: str, exception: Optional[Exception] = None, **kwargs):
        """Log error message with optional exception."""
        if exception:
            self.logger.error(f"{message}: {str(exception)}", exc_info=True, extra=kwargs)
        else:
            self.logger.error(message, extra=kwargs)

    def critical(self, message: str, exception: Optional[Exception] = None, **kwargs):
        """Log critical message."""
        if exception:
            self.logger.critical(f"{message}: {str(exception)}", exc_info=True, extra=kwargs)
        else:
            self.logger.critical(message, extra=kwargs)

    def log_performance(self, operation: str, duration: float, **metrics):
        """Log stage timings at debug level."""
        self.debug(
            f"Performance: {operation} completed in {duration:.3f}s",
            operation=operation,
            duration=duration,
            **metrics
        )


# Global logger instance
app_logger = ApplicationLogger()


def get_logger() -> ApplicationLogger:
    """Get the global application logger."""
    return app_logger


def log_function_call(func_name: str, **kwargs):
    """Decorator to log function calls."""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **func_kwargs):
            start_time = datetime.now()
            app_logger.debug(f"Starting {func_name}", **kwargs)

            try:
                result = func(*args, **func_kwargs)
                duration = (datetime.now() - start_time).total_seconds()
                app_logger.debug(f"Completed {func_name} in {duration:.3f}s")
                return result
            except Exception as e:
                duration = (datetime.now() - start_time).total_seconds()
                app_logger.debug(f"Failed {func_name} after {duration:.3f}s: {e}")
                raise
        return wrapper
    return decorator
