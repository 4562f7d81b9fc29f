from __future__ import annotations

import logging

import uvicorn.logging

from jacq.constants import LOGGER_NAME

handler = logging.StreamHandler()
formatter = uvicorn.logging.DefaultFormatter(fmt="%(levelprefix)s %(message)s")
handler.setFormatter(formatter)

logger = logging.getLogger(LOGGER_NAME)
logger.setLevel(logging.INFO)
logger.propagate = False
logger.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(f"{LOGGER_NAME}.{name}")


def set_level(level: int) -> None:
    logger.setLevel(level)
