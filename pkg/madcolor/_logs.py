import logging

logger = logging.getLogger("madcolor")
logger.setLevel(logging.INFO)

_handler = logging.StreamHandler()
_handler.setFormatter(
    logging.Formatter("%(name)s | %(levelname)s | %(asctime)s | %(message)s")
)
logger.addHandler(_handler)


def set_verbose(verbose: bool = True) -> None:
    "DEBUG shows per-batch, per-level and density-search records"
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)
