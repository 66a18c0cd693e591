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
    QCoherentPy/tables.py

    CSV tables: energy levels, kernel values, classical-limit errors and coefficients.

"""
# Python Dependencies
import logging
import math
import numpy as np

from pandas import DataFrame
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Union

from .cstates import coefficient
from .kernels import arik_coon_kernel, kernel_qm_closed, kernel_qm_series
from .oscillator import energy
from .utils import Constants, check_index, check_q, split_complex
from .verify import LIMITS, limit_errors


logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


def _frame(records: List[dict], columns: Sequence[str]) -> DataFrame:
    return DataFrame.from_records(records, columns=list(columns))


def energies(q: float, j_max: int = 10) -> DataFrame:
    """Columns: j, energy, classical (= j + 1/2)."""
    check_q(q)
    check_index(j_max, "j_max")
    return _frame([{"j": j, "energy": energy(j, q), "classical": j + 0.5} for j in range(j_max + 1)],
                  ["j", "energy", "classical"])


def kernel(q: float, m: int = 0, z: Optional[complex] = None,
           fractions: Sequence[float] = (0.2, 0.4, 0.6), angles: int = 4) -> DataFrame:
    """Closed kernel K(z, w) on a polar w-grid inside the domain, next to a reference value.

    The reference is e_q(z conj(w)) for m = 0 and the truncated series otherwise. The grid
    radii are fractions of the domain radius q**(m/2)/sqrt(1-q), and z defaults to 0.3 of it.

    Columns: z_re, z_im, w_re, w_im, kernel_re, kernel_im, reference_re, reference_im.

    """
    check_q(q)
    check_index(m, "m")
    radius = q ** (m / 2) / math.sqrt(1.0 - q)
    z = 0.3 * radius * complex(math.cos(0.5), math.sin(0.5)) if z is None else complex(z)
    records = []
    for fraction in fractions:
        for k in range(angles):
            w = complex(fraction * radius * np.exp(2j * math.pi * k / angles))
            value = kernel_qm_closed(z, w, m, q)
            reference = arik_coon_kernel(z, w, q) if m == 0 else kernel_qm_series(z, w, m, q).value
            records.append(dict(split_complex("z", z) + split_complex("w", w) + split_complex("kernel", value)
                                + split_complex("reference", reference)))
    columns = ["z_re", "z_im", "w_re", "w_im", "kernel_re", "kernel_im", "reference_re", "reference_im"]
    return _frame(records, columns)


def limits(m: Optional[int] = None, q_values: Sequence[float] = Constants.limit_sweep) -> DataFrame:
    """Classical-limit errors; with m set, level-dependent quantities are reported for that m only.

    Columns: quantity, m, q, error.

    """
    for q in q_values:
        check_q(q)
    levels = range(4) if m is None else [check_index(m, "m")]
    records = []
    for quantity, (_, per_level) in LIMITS.items():
        for level in (levels if per_level else [0]):
            errors = limit_errors(quantity, level, q_values)
            records.extend({"quantity": quantity, "m": level, "q": q, "error": e} for q, e in zip(q_values, errors))
    return _frame(records, ["quantity", "m", "q", "error"])


def coefficients(q: float, m: int = 0, j_max: int = 8, levels: int = 10, angle: float = 0.0) -> DataFrame:
    """Phi_j^(q,m) at the radial nodes r_l = q**(l/2)/sqrt(1-q), l < levels, on one ray.

    Columns: l, r, j, value_re, value_im.

    """
    check_q(q)
    check_index(m, "m")
    check_index(j_max, "j_max")
    radii = q ** (np.arange(levels) / 2) / math.sqrt(1.0 - q)
    points = radii * np.exp(1j * angle)
    records = []
    for j in range(j_max + 1):
        values = coefficient(j, m, points, q)
        for l, (r, value) in enumerate(zip(radii, values)):
            records.append(dict((("l", l), ("r", float(r)), ("j", j)) + split_complex("value", value)))
    return _frame(records, ["l", "r", "j", "value_re", "value_im"])


TABLES: Dict[str, Callable[..., DataFrame]] = {
    "energies": energies,
    "kernel": kernel,
    "limits-q1": limits,
    "coefficients": coefficients,
}


def to_csv_text(frame: DataFrame) -> str:
    """UTF-8 CSV text with LF line endings and 17 significant digits."""
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def write_csv(frame: DataFrame, path: Union[str, Path]) -> Path:
    """Writes a table; returns the resolved path.

    Raises:
        OSError: the path cannot be written.

    """
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as f:
        f.write(to_csv_text(frame))
    logger.info("wrote %d rows to %s", len(frame), path)
    return path
