import json
import logging
import sys

import colorlog

from config import GlobalConfig

# stderr handler always, file handler only when PA_SECDEG_LOG_FILE is set
# stdout is reserved for command output


class Logger:

    _instances = {}

    def __new__(cls, *args, **kwargs):
        """
        Returned existing logger class if already initialised
        """
        if cls not in cls._instances:
            cls._instances[cls] = super(Logger, cls).__new__(cls)
        return cls._instances[cls]

    def __init__(self, file: str | None = None, level: str | None = None):
        self.file = file or GlobalConfig.LOG_FILE
        self.level = level or GlobalConfig.LOG_LEVEL

    def configure(self, level: str, json_lines: bool = False):
        """
        Re-levels every logger handed out so far and the ones still to come.
        With json_lines the stderr handler writes one JSON object per record,
        so stderr carries nothing but JSON lines

        Args:
            level (str): logging level name
            json_lines (bool): format stderr records as JSON
        """
        GlobalConfig.LOG_LEVEL = self.level = level
        GlobalConfig.LOG_JSON_LINES = json_lines

        for logger in self._instances.values():
            if not isinstance(logger, logging.Logger):
                continue
            logger.setLevel(level)
            # a fresh handler picks up the current sys.stderr
            for handler in list(logger.handlers):
                if not isinstance(handler, logging.FileHandler):
                    logger.removeHandler(handler)
            logger.addHandler(self._stderr_handler())

    def _stderr_handler(self) -> logging.Handler:
        handler = logging.StreamHandler(stream=sys.stderr)
        if GlobalConfig.LOG_JSON_LINES:
            handler.setFormatter(JsonLineFormatter())
        else:
            handler.setFormatter(self._color_formatter())
        return handler

    def _color_formatter(self) -> logging.Formatter:
        return colorlog.ColoredFormatter(
            "%(log_color)s[%(asctime)s] %(levelname)s [%(name)s.%(funcName)s:%(lineno)d] %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
            log_colors={
                "DEBUG": "cyan",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "bold_red",
            },
        )

    def get_logger(self, name: str) -> logging.Logger:
        """
        Returns a logger configured for the specific name provided

        Args:
            name (str): name of logger to return
        """

        if name in self._instances:
            return self._instances[name]

        logger = logging.getLogger(name)

        logger.addHandler(self._stderr_handler())

        if self.file:
            file_handler = logging.FileHandler(filename=self.file)
            file_handler.setFormatter(self._color_formatter())
            logger.addHandler(file_handler)

        logger.setLevel(self.level)
        logger.propagate = False

        self._instances[name] = logger

        return logger


class JsonLineFormatter(logging.Formatter):
    """Log record as {"level", "event": "log", "logger", "message"} on one line."""

    def format(self, record: logging.LogRecord) -> str:
        return json.dumps(
            {
                "level": record.levelname.lower(),
                "event": "log",
                "logger": record.name,
                "message": record.getMessage(),
            }
        )
