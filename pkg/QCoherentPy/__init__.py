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
    Spill-Tea/QCoherentPy

"""
from .errors import DivergentSeriesError  # noqa
from .errors import DomainError  # noqa
from .errors import PoleError  # noqa
from .errors import QCoherentError  # noqa
from .errors import QuadratureError  # noqa
from .errors import ShiftDomainError  # noqa
from .errors import TruncationError  # noqa
from .qcore import QDeformation  # noqa
from .qcore import SeriesValue  # noqa
from .qcore import Truncation  # noqa
from .qcore import qbinomial  # noqa
from .qcore import qexp  # noqa
from .qcore import qfactorial  # noqa
from .qcore import qnumber  # noqa
from .qcore import qpochhammer  # noqa
from .qcore import qpochhammer_multi  # noqa
from .qseries import phi21  # noqa
from .qseries import phi32  # noqa
from .qpoly import al_salam_chihara  # noqa
from .qpoly import qhermite2d  # noqa
from .qpoly import rogers_szego  # noqa
from .qpoly import stieltjes_wigert  # noqa
from .qpoly import wall  # noqa
from .qpoly import wall_reduced  # noqa
from .oscillator import AnalyticFunction  # noqa
from .oscillator import apply_annihilation  # noqa
from .oscillator import apply_creation  # noqa
from .oscillator import apply_hamiltonian  # noqa
from .oscillator import energy  # noqa
from .oscillator import quadrature_rule  # noqa
from .oscillator import rs_eigenfunction  # noqa
from .cstates import PhaseSpacePoint  # noqa
from .cstates import coeff_phi  # noqa
from .cstates import cs_wavefunction_closed  # noqa
from .cstates import cs_wavefunction_series  # noqa
from .cstates import fock_inner  # noqa
from .cstates import g_factor  # noqa
from .cstates import measure  # noqa
from .cstates import normalization  # noqa
from .kernels import kernel_qm_closed  # noqa
from .kernels import kernel_qm_series  # noqa
from .transforms import cst  # noqa
from .transforms import cst0  # noqa
from .transforms import polyanalytic_bargmann  # noqa
from .verify import SuiteOptions  # noqa
from .verify import VerificationReport  # noqa
from .verify import run_suite  # noqa

__all__ = [i for i in dir() if not i.startswith("_")]

__version__ = "0.1.0"
