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
    QCoherentPy/errors.py

    Exception hierarchy. Every error is a ValueError so callers may catch broadly.

"""


class QCoherentError(ValueError):
    """Base class for all QCoherentPy failures."""


class DomainError(QCoherentError):
    """Argument lies outside the domain where the quantity is defined."""


class PoleError(QCoherentError):
    """A denominator factor vanishes."""


class DivergentSeriesError(QCoherentError):
    """Non-terminating series evaluated outside its disk of convergence."""


class TruncationError(QCoherentError):
    """Series did not meet its tail bound within max_terms."""


class QuadratureError(QCoherentError):
    """Quadrature rule and its companion rule disagree."""


class ShiftDomainError(QCoherentError):
    """Complex shift leaves the strip where a function may be evaluated."""
