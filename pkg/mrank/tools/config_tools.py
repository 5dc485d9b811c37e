import logging
import os

DEFAULT_SEED = 1729
DEFAULT_GENERIC_TRIALS = 3
DEFAULT_WORKERS = 1


def _int_from_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logging.warning(f"{name}={raw!r} is not an integer, using {default}")
        return default
    if value < minimum:
        logging.warning(f"{name}={value} is below {minimum}, using {default}")
        return default
    return value


def get_seed() -> int:
    return _int_from_env("MRANK_SEED", DEFAULT_SEED, 0)


def get_generic_trials() -> int:
    return _int_from_env("MRANK_GENERIC_TRIALS", DEFAULT_GENERIC_TRIALS, 1)


def get_workers() -> int:
    return _int_from_env("MRANK_WORKERS", DEFAULT_WORKERS, 1)
