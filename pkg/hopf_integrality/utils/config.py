import os

from hopf_integrality.utils.const import (
    DEFAULT_GB_BUDGET,
    DEFAULT_POWER_DEGREE_LIMIT,
    DEFAULT_WITNESS_BUDGET,
    HOPF_INTEGRALITY_GB_BUDGET,
    HOPF_INTEGRALITY_POWER_DEGREE_LIMIT,
    HOPF_INTEGRALITY_WITNESS_BUDGET,
)


class ConfigError(ValueError):
    """Exception raised for an invalid environment setting."""


def _positive_int(name: str, default: int) -> int:
    if (raw := os.getenv(name)) is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise ConfigError(f"{name} must be a positive integer, got {value}")
    return value


def get_gb_budget() -> int:
    return _positive_int(HOPF_INTEGRALITY_GB_BUDGET, DEFAULT_GB_BUDGET)


def get_witness_budget() -> int:
    return _positive_int(HOPF_INTEGRALITY_WITNESS_BUDGET, DEFAULT_WITNESS_BUDGET)


def get_power_degree_limit() -> int:
    return _positive_int(HOPF_INTEGRALITY_POWER_DEGREE_LIMIT, DEFAULT_POWER_DEGREE_LIMIT)
