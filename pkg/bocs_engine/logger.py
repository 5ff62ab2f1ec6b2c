import logging
import pathlib

# One logger for the whole package
logger = logging.getLogger("bocs_engine")

# Terminal handler; reduction moves only show with --verbose
shell_handler = logging.StreamHandler()

logger.setLevel(logging.DEBUG)
shell_handler.setLevel(logging.INFO)

fmt_shell = (
    "%(levelname)s %(asctime)s [%(filename)s:%(funcName)s:%(lineno)d] %(message)s"
)
fmt_file = "%(levelname)s (%(asctime)s): %(message)s"

shell_handler.setFormatter(logging.Formatter(fmt_shell))
logger.addHandler(shell_handler)


def set_verbosity(verbose: bool) -> None:
    """Show DEBUG messages (every reduction move) on the terminal."""
    shell_handler.setLevel(logging.DEBUG if verbose else logging.INFO)


def log_to_file(path: pathlib.Path | str) -> logging.FileHandler:
    """Also write every message, moves included, to ``path``.

    Returns:
        The new handler, so that callers can remove and close it.
    """
    handler = logging.FileHandler(pathlib.Path(path), mode="w", encoding="utf-8")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(fmt_file))
    logger.addHandler(handler)
    return handler
