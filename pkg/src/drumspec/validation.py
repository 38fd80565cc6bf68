"""Small input-validation helpers used by the estimator classes and the CLI."""

import numbers

import numpy as np

from .errors import RangeError


def check_positive_int(name, value, minimum=1, maximum=None):
    if not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if value < minimum:
        raise RangeError(f"{name} must be >= {minimum}, got {value}")
    if maximum is not None and value > maximum:
        raise RangeError(f"{name} must be <= {maximum}, got {value}")
    return value


def check_real(name, value):
    if not isinstance(value, numbers.Real) or not np.isfinite(value):
        raise TypeError(f"{name} must be a finite real number, got {value!r}")
    return float(value)


def check_choice(name, value, choices):
    if value not in choices:
        raise ValueError(f"{name} must be one of {sorted(choices)}, got {value!r}")
    return value


def check_vector(name, value):
    v = np.asarray(value, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ValueError(f"{name} must be a non-empty 1-d array")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite entries")
    return v
