"""
Helpers shared across the core modules: parameter parsing, validation and
logging decorators, deterministic number formatting and atomic file output.
"""

import functools
import inspect
import logging
import os
import re
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from typing import Any, Callable, List, Optional, Sequence, TypeVar, Union

from .. import constants

T = TypeVar("T")
R = TypeVar("R")

Number = Union[Fraction, float]

_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*/\s*\d+\s*$")
_INTEGER = re.compile(r"^\s*[+-]?\d+\s*$")


def parse_t(value: Any) -> Optional[Number]:
    """
    Parse a deformation parameter.

    "p/q" and integer literals become exact Fractions, decimal literals become
    floats. Fractions and ints pass through as Fractions, floats stay floats.

    :param value: str, int, float, Fraction or None
    :return: Fraction, float or None
    """
    if value is None:
        return None
    if isinstance(value, bool):
        raise ValueError("t must be a number, not a bool")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        if _RATIONAL.match(value):
            numerator, denominator = value.split("/")
            if int(denominator) == 0:
                raise ValueError(f"zero denominator in t: {value!r}")
            return Fraction(int(numerator), int(denominator))
        if _INTEGER.match(value):
            return Fraction(int(value))
        try:
            return float(value)
        except ValueError:
            raise ValueError(f"cannot parse t from {value!r}")
    raise ValueError(f"unsupported type for t: {type(value).__name__}")


def as_exact(t: Number) -> Fraction:
    """Exact value of t; floats are read as their shortest decimal literal."""
    if isinstance(t, Fraction):
        return t
    return Fraction(repr(float(t)))


def format_number(value: Any) -> str:
    """Locale-free, platform-stable text for CSV/JSON cells."""
    if value is None:
        return ""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return format(value, constants.FLOAT_FORMAT)
    return str(value)


def validate_params(**validations):
    """
    Decorator to validate parameter types of a function.

    Usage:
    @validate_params(n=int, j=int)
    def count_walks(n, j, model):
        ...
    """

    def decorator(func):
        sig = inspect.signature(func)

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            bound = sig.bind(*args, **kwargs)
            bound.apply_defaults()

            for param_name, expected_type in validations.items():
                if param_name in bound.arguments:
                    value = bound.arguments[param_name]
                    # bool is an int subclass but never a valid size or index
                    if isinstance(value, bool) or not isinstance(
                        value, expected_type
                    ):
                        from ..exceptions import InvalidParameterError

                        type_name = (
                            " or ".join(t.__name__ for t in expected_type)
                            if isinstance(expected_type, tuple)
                            else expected_type.__name__
                        )
                        raise InvalidParameterError(
                            f"{param_name} must be a {type_name}"
                        )

            return func(*args, **kwargs)

        return wrapper

    return decorator


def log_method_call(include_params: bool = True):
    """
    Decorator to log calls of heavy operations for debugging purposes.

    :param include_params: Whether to include parameter values in logs
    """

    def decorator(func: Callable) -> Callable:
        sig = inspect.signature(func)

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            method_name = func.__name__
            if include_params:
                bound_args = sig.bind(*args, **kwargs)
                bound_args.apply_defaults()
                filtered_params = {
                    k: v
                    for k, v in bound_args.arguments.items()
                    if k not in ("self", "limits")
                }
                logging.debug(f"Calling {method_name} with params: {filtered_params}")
            else:
                logging.debug(f"Calling {method_name}")

            started = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logging.debug(f"{method_name} failed: {str(e)}")
                raise
            elapsed = time.perf_counter() - started
            logging.debug(f"{method_name} completed in {elapsed:.3f}s")
            return result

        return wrapper

    return decorator


def fan_out(
    function: Callable[[T], R],
    items: Sequence[T],
    max_workers: Optional[int] = None,
) -> List[R]:
    """
    Run ``function`` over ``items`` on a thread pool and return results in
    input order. Exceptions propagate from the first failing item.
    """
    if not items:
        return []
    if max_workers is None:
        max_workers = min(
            os.cpu_count() or 1,
            len(items),
            constants.MAX_SWEEP_WORKERS,
        )
    results: List[Any] = [None] * len(items)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_index = {
            executor.submit(function, item): index for index, item in enumerate(items)
        }
        for future in as_completed(future_to_index):
            results[future_to_index[future]] = future.result()
    return results


def atomic_write(path: str, content: Union[str, bytes]) -> None:
    """
    Write ``content`` to ``path`` through a temporary file and a rename so
    readers never observe a partial file.
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, temp_path = tempfile.mkstemp(
        dir=directory, prefix=".rainbowtn-", suffix=".tmp"
    )
    try:
        if isinstance(content, bytes):
            handle = os.fdopen(fd, "wb")
        else:
            handle = os.fdopen(fd, "w", newline="", encoding="utf-8")
        with handle as f:
            f.write(content)
        os.replace(temp_path, path)
    except Exception:
        try:
            os.unlink(temp_path)
        except OSError:
            pass
        raise
