"""
Input validation for curvkit.
Validates metric files, run configurations and parsed metric definitions
before any numeric work starts.
"""

import os
from typing import Any, Dict

from config import ERROR_MESSAGES, JET_CONFIG, METRIC_FILE_CONFIG, RUN_DEFAULTS
from curvature.point_data import tower_depth
from logger import get_logger

logger = get_logger()


def _result() -> Dict[str, Any]:
    return {
        'valid': True,
        'errors': [],
        'warnings': [],
        'info': {}
    }


class MetricFileValidator:
    """Validates metric files on disk."""

    MAX_FILE_SIZE = METRIC_FILE_CONFIG["max_file_size"]
    EXTENSION = METRIC_FILE_CONFIG["extension"]

    @staticmethod
    def validate_path(path: str) -> Dict[str, Any]:
        """
        Validate that a metric file exists, is non-empty and not oversized.

        Args:
            path: Path to the metric file

        Returns:
            Validation result dictionary
        """
        result = _result()

        if not os.path.isfile(path):
            result['valid'] = False
            result['errors'].append(ERROR_MESSAGES["missing_file"].format(path=path))
            return result

        size = os.path.getsize(path)
        result['info'] = {'name': os.path.basename(path), 'size': size}

        if size == 0:
            result['valid'] = False
            result['errors'].append(ERROR_MESSAGES["empty_file"].format(path=path))
        elif size > MetricFileValidator.MAX_FILE_SIZE:
            result['valid'] = False
            result['errors'].append(ERROR_MESSAGES["file_too_large"].format(path=path, size=size))

        extension = os.path.splitext(path)[1].lower()
        if extension != MetricFileValidator.EXTENSION:
            result['warnings'].append(
                f"File '{os.path.basename(path)}' has extension '{extension}', expected '{MetricFileValidator.EXTENSION}'"
            )

        return result


class RunConfigValidator:
    """Validates the numeric settings of a run."""

    @staticmethod
    def validate(run_config) -> Dict[str, Any]:
        """
        Validate order, point count, tolerances and k-depth.

        Args:
            run_config: RunConfig to check

        Returns:
            Validation result dictionary
        """
        result = _result()
        errors = result['errors']

        if not RUN_DEFAULTS["min_order"] <= run_config.order <= RUN_DEFAULTS["max_order"]:
            errors.append(
                f"--order must be in [{RUN_DEFAULTS['min_order']}, {RUN_DEFAULTS['max_order']}], "
                f"got {run_config.order}"
            )
        if run_config.points < 1:
            errors.append(ERROR_MESSAGES["zero_points"])
        if not run_config.tol_rel > 0 or not run_config.tol_abs > 0:
            errors.append("tolerances must be positive")
        if run_config.k_depth < 0:
            errors.append(f"--k must be >= 0, got {run_config.k_depth}")
        elif run_config.order < run_config.k_depth + 2:
            errors.append(f"--k {run_config.k_depth} needs --order >= {run_config.k_depth + 2}")
        if run_config.workers is not None and run_config.workers < 1:
            errors.append("worker count must be >= 1")

        result['info']['tower_depth'] = tower_depth(run_config.order, run_config.k_depth)
        if run_config.order == RUN_DEFAULTS["min_order"] and not errors:
            result['warnings'].append("order 2: only R itself is available (no k-symmetry, gradients or holonomy)")
        elif run_config.order < 4 and not errors:
            result['warnings'].append("order below 4: nabla nabla R and holonomy are not available")

        result['valid'] = not errors
        return result


class MetricSpecValidator:
    """Validates a parsed metric definition against the jet engine limits.

    Structural checks (distinct names, domain order, index ranges) already
    run when a MetricSpec is built.
    """

    @staticmethod
    def validate(spec) -> Dict[str, Any]:
        """
        Validate dimension and component count.

        Args:
            spec: MetricSpec to check

        Returns:
            Validation result dictionary
        """
        result = _result()
        errors = result['errors']

        if spec.dim > JET_CONFIG["max_dim"]:
            errors.append(f"dim must be in [2, {JET_CONFIG['max_dim']}], got {spec.dim}")
        if not spec.components:
            result['warnings'].append("metric has no components")

        result['info'] = {'name': spec.name, 'dim': spec.dim, 'components': len(spec.components)}
        result['valid'] = not errors
        if errors:
            logger.debug(f"metric '{spec.name}' failed validation: {errors}")
        return result
