# app/utils/setup_logger.py

import logging
import os
from datetime import datetime


def setup_logger(
    name: str = "arith_billiards",
    level=logging.INFO,
    log_dir: str = "logs",
    to_file: bool = True,
) -> logging.Logger:
    logger = logging.getLogger(name)
    logger.setLevel(level)

    if logger.hasHandlers():
        return logger  # Prevent duplicate handlers

    formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(name)s - %(message)s')

    # stderr only: stdout carries the JSON result
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if to_file:
        os.makedirs(log_dir, exist_ok=True)
        timestamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        logfile = os.path.join(log_dir, f"{name}_{timestamp}.log")
        file_handler = logging.FileHandler(logfile, encoding='utf-8')
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
        logger.debug(f"Logger initialized. Logging to: {logfile}")
    else:
        logger.debug("Logger initialized. Console only.")

    return logger
