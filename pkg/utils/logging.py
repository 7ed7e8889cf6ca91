import logging
import os
from datetime import datetime
from logging.handlers import RotatingFileHandler

from constants import LOG_BACKUP_COUNT, LOG_DIR, LOG_MAX_BYTES, LOGGER_NAME

# Create logs directory if it doesn't exist
os.makedirs(LOG_DIR, exist_ok=True)

# Configure the logger
logger = logging.getLogger(LOGGER_NAME)
logger.setLevel(logging.DEBUG)
logger.propagate = False

# Create formatters
console_formatter = logging.Formatter("%(asctime)s - %(levelname)s - %(message)s")
file_formatter = logging.Formatter(
    "%(asctime)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s"
)

# Console handler writes to stderr so stdout stays reserved for output documents
console_handler = logging.StreamHandler()
console_handler.setLevel(logging.INFO)
console_handler.setFormatter(console_formatter)

# Create file handler with DEBUG level and rotation
log_file = os.path.join(LOG_DIR, f"{LOGGER_NAME}_{datetime.now().strftime('%Y%m%d')}.log")
file_handler = RotatingFileHandler(
    log_file,
    maxBytes=LOG_MAX_BYTES,
    backupCount=LOG_BACKUP_COUNT,
)
file_handler.setLevel(logging.DEBUG)
file_handler.setFormatter(file_formatter)

# Add the handlers once, even if the module is reloaded
if not logger.handlers:
    logger.addHandler(console_handler)
    logger.addHandler(file_handler)


def set_console_level(level: int) -> None:
    """Change the verbosity of the console handler.

    Args:
        level: A ``logging`` level such as ``logging.DEBUG``
    """
    for handler in logger.handlers:
        if not isinstance(handler, RotatingFileHandler):
            handler.setLevel(level)


logger.debug("Logger initialized")
