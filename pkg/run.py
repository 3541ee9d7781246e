#!/usr/bin/env python3
"""
Main entry point for radialis

Loads .env, configures logging and hands over to the click CLI:
1. Read RADIALIS_* settings from the environment
2. Route log records to stderr (and RADIALIS_LOG_FILE if set)
3. Dispatch the subcommand
"""

import logging
import sys
from typing import Optional, Sequence

import structlog
from dotenv import load_dotenv

from radialis.cli import EXIT_USAGE, cli
from radialis.config import Config

logger = logging.getLogger(__name__)


def configure_logging(config: Config) -> None:
    """Render stdlib log records through structlog onto stderr"""
    formatter = structlog.stdlib.ProcessorFormatter(
        processor=structlog.dev.ConsoleRenderer(colors=False),
        foreign_pre_chain=[
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso"),
        ],
    )

    handlers: list = [logging.StreamHandler(sys.stderr)]
    if config.LOG_FILE:
        handlers.append(logging.FileHandler(config.LOG_FILE))
    for handler in handlers:
        handler.setFormatter(formatter)

    logging.basicConfig(level=config.LOG_LEVEL, handlers=handlers, force=True)


def main(argv: Optional[Sequence[str]] = None):
    """Command-line entry point"""
    load_dotenv()

    try:
        config = Config()
    except ValueError as e:
        print(f"Error: malformed RADIALIS_* setting: {e}", file=sys.stderr)
        sys.exit(EXIT_USAGE)

    if not config.validate():
        print("Error: invalid configuration, check RADIALIS_* variables", file=sys.stderr)
        sys.exit(EXIT_USAGE)

    configure_logging(config)
    logger.debug("Starting radialis with log level %s", config.LOG_LEVEL)
    cli.main(args=argv, obj=config, prog_name="radialis")


if __name__ == "__main__":
    main()
