"""Logging configuration."""
import logging
import os
import sys

LOG_LEVEL = os.environ.get("HYPERCHROMA_LOG_LEVEL", "INFO").upper()

# stderr keeps stdout clean for csv/json reports
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    handlers=[logging.StreamHandler(sys.stderr)],
)

logger = logging.getLogger("hyperchroma")
