"""
Runtime configuration read from the environment (and a .env file when present)
"""
import os
from dataclasses import dataclass

# Try to import python-dotenv, but keep working with plain environment variables
try:
    from dotenv import load_dotenv
    DOTENV_AVAILABLE = True
except ImportError:
    DOTENV_AVAILABLE = False

from fibsetgraph.errors import ConfigError

# Full multiplicity tables are never built above this ground-set size (4095 vertices)
MATERIALIZATION_LIMIT = 12


@dataclass(frozen=True)
class Settings:
    max_n: int = 7
    budget: int = 2_000_000
    hamiltonian_max_n: int = 5
    loop_max_n: int = 16
    dot_edge_cap: int = 10
    workers: int = 1
    log_level: str = "WARNING"


def _read_int(name, default, minimum=1):
    """
    Reads a positive integer from the environment

    Args:
        name (str): Environment variable name
        default (int): Value used when the variable is unset or empty
        minimum (int): Smallest accepted value

    Returns:
        int: The parsed value
    """
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def load_settings():
    """
    Builds Settings from the environment, loading a .env file first if possible

    Returns:
        Settings: The effective configuration
    """
    if DOTENV_AVAILABLE:
        load_dotenv()

    defaults = Settings()
    max_n = min(_read_int("FIBSET_MAX_N", defaults.max_n), MATERIALIZATION_LIMIT)
    return Settings(
        max_n=max_n,
        budget=_read_int("FIBSET_BUDGET", defaults.budget),
        hamiltonian_max_n=_read_int("FIBSET_HAMILTONIAN_MAX_N", defaults.hamiltonian_max_n),
        loop_max_n=_read_int("FIBSET_LOOP_MAX_N", defaults.loop_max_n),
        dot_edge_cap=_read_int("FIBSET_DOT_EDGE_CAP", defaults.dot_edge_cap),
        workers=_read_int("FIBSET_WORKERS", defaults.workers),
        log_level=os.environ.get("FIBSET_LOG_LEVEL", defaults.log_level).upper(),
    )
