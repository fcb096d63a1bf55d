"""
Configuration module for curvkit.
Contains all constants, default values, and configuration settings.
"""

import os
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

from dotenv import load_dotenv

load_dotenv()

# Application Configuration
APP_CONFIG = {
    "name": "curvkit",
    "version": "1.0.0",
    "max_workers_default": 4,
    "max_workers_limit": 32,
    "threads_env_var": "CURVKIT_THREADS",
    "log_level_env_var": "CURVKIT_LOG_LEVEL",
    "log_dir_env_var": "CURVKIT_LOG_DIR",
}

# Jet engine limits
JET_CONFIG = {
    "max_dim": 8,
    "max_order": 6,
    "invertibility_threshold": 1e-12,
}

# Tolerances used by zero tests, rank decisions and causal character
TOLERANCE_CONFIG = {
    "tol_abs": 1e-10,
    "tol_rel": 1e-8,
    "svd_relative": 1e-7,
    "null_threshold": 1e-7,
    "generic_ratio": 1e-7,
    "generic_floor": 1e-10,
    "degenerate_metric": 1e-12,
    "domain_slack": 1e-12,
}

# Sampling defaults
SAMPLING_CONFIG = {
    "points": 20,
    "seed": 42,
    "default_domain": (-1.0, 1.0),
}

# Command-line defaults and bounds
RUN_DEFAULTS = {
    "order": 4,
    "k_depth": 2,
    "min_order": 2,
    "max_order": 6,
}

# Metric file format
METRIC_FILE_CONFIG = {
    "version": 1,
    "extension": ".met",
    "max_file_size": 1024 * 1024,
    "functions": ("sin", "cos", "tan", "exp", "log", "sqrt", "sinh", "cosh", "tanh"),
    "constants": {"pi": 3.141592653589793, "e": 2.718281828459045},
}

# Error Messages
ERROR_MESSAGES = {
    "jet_shape": "jet shape mismatch: (dim={dim_a}, order={order_a}) vs (dim={dim_b}, order={order_b})",
    "jet_index": "coordinate index {index} out of range for dim {dim}",
    "jet_limits": "jet dim {dim} / order {order} outside supported range (dim <= {max_dim}, order <= {max_order})",
    "near_zero_germ": "division by near-zero germ (value {value:.3e})",
    "function_domain": "function domain error: {function}({value:.6g})",
    "jet_budget": "jet budget exhausted; raise --order ({detail})",
    "unknown_function": "unknown function '{function}'",
    "parse_error": "line {line}, column {column}: {message}",
    "duplicate_entry": "duplicate symmetric entry g {i} {j}",
    "unknown_identifier": "unknown identifier '{name}'",
    "non_integer_exponent": "non-integer exponent",
    "dim_mismatch": "dim = {dim} but {count} coordinates declared",
    "point_outside_domain": "point {point} outside domain of '{name}'",
    "degenerate_metric": "degenerate metric at point {point} (|det| = {det:.3e})",
    "component_domain": "component g[{i}][{j}]: {error}",
    "tensor_symmetry": "tensor symmetry violated: {detail} (max deviation {deviation:.3e})",
    "v_dependence": "v-dependence detected in {field}",
    "signature_violation": "flat extension would give {negatives} timelike directions",
    "degree_over_budget": "profile degree {degree} exceeds jet budget (max {max_degree})",
    "unknown_catalog_entry": "unknown catalog entry '{name}'",
    "zero_points": "zero requested points",
    "no_valid_points": "no valid sample points ({skipped} skipped)",
    "missing_file": "metric file not found: {path}",
    "empty_file": "metric file is empty: {path}",
    "file_too_large": "metric file too large: {path} ({size} bytes)",
}

# Success Messages
SUCCESS_MESSAGES = {
    "run_complete": "{command} on '{name}' completed: {valid} points evaluated, {skipped} skipped",
    "catalog_emitted": "catalog entry '{name}' emitted",
    "config_validated": "Configuration validated successfully",
}


@dataclass(frozen=True)
class RunConfig:
    """Settings of one classification run."""
    command: str = "classify"
    target: str = ""
    points: int = SAMPLING_CONFIG["points"]
    seed: int = SAMPLING_CONFIG["seed"]
    order: int = RUN_DEFAULTS["order"]
    tol_rel: float = TOLERANCE_CONFIG["tol_rel"]
    tol_abs: float = TOLERANCE_CONFIG["tol_abs"]
    json: bool = False
    k_depth: int = RUN_DEFAULTS["k_depth"]
    force: bool = False
    workers: Optional[int] = None
    progress: bool = False

    def with_overrides(self, **changes: Any) -> "RunConfig":
        """Return a copy with the given fields replaced."""
        return replace(self, **changes)

    def public_dict(self) -> Dict[str, Any]:
        """Fields that identify a run; worker count and progress are excluded."""
        return {
            "command": self.command,
            "target": self.target,
            "points": self.points,
            "seed": self.seed,
            "order": self.order,
            "tol_rel": self.tol_rel,
            "tol_abs": self.tol_abs,
            "k_depth": self.k_depth,
            "force": self.force,
        }


def get_worker_count(default: Optional[int] = None) -> int:
    """Resolve the worker pool size from CURVKIT_THREADS.

    Args:
        default: Fallback when the variable is unset or invalid

    Returns:
        int: Number of worker threads (at least 1)
    """
    fallback = default if default is not None else APP_CONFIG["max_workers_default"]
    raw = os.environ.get(APP_CONFIG["threads_env_var"], "").strip()
    if not raw:
        return fallback
    try:
        value = int(raw)
    except ValueError:
        # imported lazily: logger reads this module at import time
        from logger import get_logger
        get_logger().warning(f"Ignoring invalid {APP_CONFIG['threads_env_var']}={raw!r}")
        return fallback
    return max(1, min(value, APP_CONFIG["max_workers_limit"]))


def get_log_level() -> str:
    """Console log level from CURVKIT_LOG_LEVEL (default WARNING)."""
    return os.environ.get(APP_CONFIG["log_level_env_var"], "WARNING").strip().upper() or "WARNING"


def get_log_dir() -> Optional[str]:
    """Directory for the rotating file log, or None when file logging is off."""
    value = os.environ.get(APP_CONFIG["log_dir_env_var"], "").strip()
    return value or None


def validate_config() -> Dict[str, Any]:
    """Validate configuration and return any issues."""
    issues = []

    if TOLERANCE_CONFIG["tol_abs"] <= 0 or TOLERANCE_CONFIG["tol_rel"] <= 0:
        issues.append("Default tolerances must be positive")

    if not RUN_DEFAULTS["min_order"] <= RUN_DEFAULTS["order"] <= RUN_DEFAULTS["max_order"]:
        issues.append("Default order outside [min_order, max_order]")

    if RUN_DEFAULTS["order"] < RUN_DEFAULTS["k_depth"] + 2:
        issues.append("Default order too small for default k-depth")

    if RUN_DEFAULTS["max_order"] > JET_CONFIG["max_order"]:
        issues.append("max_order exceeds jet engine limit")

    if APP_CONFIG["max_workers_limit"] < APP_CONFIG["max_workers_default"]:
        issues.append("max_workers_limit should be >= max_workers_default")

    return {
        'valid': len(issues) == 0,
        'issues': issues
    }
