# MIT License
#
# Copyright (c) 2022 Spill-Tea
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
"""
    QCoherentPy/config.py

    Packaged defaults and environment overrides.

"""
# Python Dependencies
import copy
import os
import yaml

from pathlib import Path
from typing import Any, Dict

from .errors import DomainError


with Path(__file__).parent.joinpath("qcs_defaults.yml").open("r") as f:
    _defaults = yaml.load(f, Loader=yaml.SafeLoader)

THREADS_ENV = "QCS_THREADS"


def get_defaults() -> Dict[str, Any]:
    """Returns a private copy of the packaged defaults."""
    return copy.deepcopy(_defaults)


def setting(section: str, key: str) -> Any:
    """Looks up one default value, e.g. setting("quadrature", "order")."""
    try:
        return _defaults[section][key]
    except KeyError as e:
        raise ValueError(f"Unknown setting: {section}.{key}") from e


def tolerance(suite: str) -> float:
    """Default acceptance tolerance of a verification suite."""
    return float(setting("tolerances", suite))


def worker_count() -> int:
    """Number of worker threads, capped by the QCS_THREADS environment variable.

    Raises:
        DomainError: QCS_THREADS is set but is not a positive integer.

    """
    fallback = min(4, os.cpu_count() or 1)
    value = os.environ.get(THREADS_ENV)
    if value is None or value.strip() == "":
        return fallback

    try:
        count = int(value)
    except ValueError as e:
        raise DomainError(f"{THREADS_ENV} must be a positive integer: {value!r}") from e

    if count < 1:
        raise DomainError(f"{THREADS_ENV} must be a positive integer: {value!r}")

    return count
