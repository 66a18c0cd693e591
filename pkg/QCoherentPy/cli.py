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
    QCoherentPy/cli.py

    The qcoherent console script: eval, verify and table subcommands.

    Exit codes: 0 success (all cases passed), 1 verification failure or numeric error,
    2 usage error.

"""
# Python Dependencies
import argparse
import logging
import sys

from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .config import setting, worker_count
from .cstates import PhaseSpacePoint, coefficient, cs_wavefunction_closed, cs_wavefunction_series, normalization
from .errors import QCoherentError
from .kernels import kernel_classical, kernel_qm_closed, kernel_qm_intermediate, kernel_qm_series
from .oscillator import energy, rs_eigenfunction
from .qcore import (
    INF, QDeformation, SeriesValue, qbinomial, qbinomial_general, qexp, qfactorial, qnumber, qpochhammer
)
from .qpoly import PolynomialEval, al_salam_chihara, qhermite2d, rogers_szego, stieltjes_wigert, wall_eval
from .qseries import phi21, phi32
from .tables import TABLES, to_csv_text, write_csv
from .utils import format_complex, parse_complex
from .verify import SuiteOptions, run_suite, suite_names


logger = logging.getLogger(__name__)


def _int_or_inf(text: str):
    return INF if text.strip().lower() in ("inf", "infinity") else int(text)


PARSERS: Dict[str, Callable[[str], Any]] = {"complex": parse_complex, "float": float, "int": int, "n": _int_or_inf}


def _qd(q: float) -> QDeformation:
    return QDeformation.from_q(q)


# name -> (callable taking the parsed parameters, ordered (parameter, kind) pairs, optional defaults)
EVALUATORS: Dict[str, Tuple[Callable[..., Any], Tuple[Tuple[str, str], ...], Dict[str, Any]]] = {
    "qnumber": (qnumber, (("n", "int"), ("q", "float")), {}),
    "qfactorial": (qfactorial, (("n", "int"), ("q", "float")), {}),
    "qbinomial": (qbinomial, (("n", "int"), ("k", "int"), ("q", "float")), {}),
    "qbinomial_general": (qbinomial_general, (("s", "complex"), ("k", "int"), ("q", "float")), {}),
    "qpochhammer": (qpochhammer, (("a", "complex"), ("q", "float"), ("n", "n")), {"n": INF}),
    "qexp": (qexp, (("xi", "complex"), ("q", "float")), {}),
    "energy": (energy, (("j", "int"), ("q", "float")), {}),
    "phi21": (phi21, (("a", "complex"), ("b", "complex"), ("c", "complex"), ("q", "float"), ("z", "complex")), {}),
    "phi32": (phi32, (("a1", "complex"), ("a2", "complex"), ("a3", "complex"), ("b1", "complex"),
                      ("b2", "complex"), ("q", "float"), ("z", "complex")), {}),
    "wall": (wall_eval, (("n", "int"), ("x", "complex"), ("a", "complex"), ("q", "float")), {}),
    "rogers_szego": (rogers_szego, (("n", "int"), ("xi", "complex"), ("q", "float")), {}),
    "stieltjes_wigert": (stieltjes_wigert, (("n", "int"), ("x", "complex"), ("q", "float")), {}),
    "al_salam_chihara": (al_salam_chihara, (("m", "int"), ("u", "complex"), ("alpha", "complex"),
                                            ("beta", "complex"), ("q", "float")), {}),
    "qhermite2d": (qhermite2d, (("m", "int"), ("j", "int"), ("z", "complex"), ("zeta", "complex"),
                                ("q", "float")), {}),
    "rs_eigenfunction": (lambda j, x, q: rs_eigenfunction(j, x, _qd(q)),
                         (("j", "int"), ("x", "complex"), ("q", "float")), {}),
    "coefficient": (coefficient, (("j", "int"), ("m", "int"), ("z", "complex"), ("q", "float")), {}),
    "normalization": (normalization, (("m", "int"), ("x", "float"), ("q", "float")), {}),
    "cs_wavefunction": (lambda z, m, xi, q: cs_wavefunction_closed(PhaseSpacePoint(z, m, _qd(q)), xi),
                        (("z", "complex"), ("m", "int"), ("xi", "float"), ("q", "float")), {}),
    "cs_wavefunction_series": (lambda z, m, xi, q: cs_wavefunction_series(PhaseSpacePoint(z, m, _qd(q)), xi),
                               (("z", "complex"), ("m", "int"), ("xi", "float"), ("q", "float")), {}),
    "kernel_qm_series": (kernel_qm_series, (("z", "complex"), ("w", "complex"), ("m", "int"), ("q", "float")), {}),
    "kernel_qm_closed": (kernel_qm_closed, (("z", "complex"), ("w", "complex"), ("m", "int"), ("q", "float")), {}),
    "kernel_qm_intermediate": (kernel_qm_intermediate,
                               (("z", "complex"), ("w", "complex"), ("m", "int"), ("q", "float")), {}),
    "kernel_classical": (kernel_classical, (("z", "complex"), ("w", "complex"), ("m", "int")), {}),
}


class UsageError(ValueError):
    """Bad command-line input detected after argparse (exit code 2)."""


def _q_list(text: str) -> Tuple[float, ...]:
    try:
        values = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Not a comma separated list of numbers: {text!r}") from e
    if not values:
        raise argparse.ArgumentTypeError("Empty q list")
    return values


def _parse_args(argv: Optional[Sequence[str]]) -> argparse.Namespace:
    from . import __version__

    parser = argparse.ArgumentParser(
        prog="qcoherent", description="q-coherent states: evaluation, verification, tables."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG (on stderr).")
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", help="Evaluate one registered function.")
    evaluate.add_argument("function", help=f"One of: {', '.join(sorted(EVALUATORS))}.")
    evaluate.add_argument("params", nargs=argparse.REMAINDER, help="--name value pairs.")

    verify = commands.add_parser("verify", help="Run a verification suite and print its JSON report.")
    verify.add_argument("suite", choices=suite_names())
    verify.add_argument("--q", type=_q_list, default=tuple(setting("cli", "q_list")), help="Comma separated q values.")
    verify.add_argument("--m-max", type=int, default=setting("cli", "m_max"))
    verify.add_argument("--m", type=int, default=None, help="Run a single Landau level instead of 0..m-max.")
    verify.add_argument("--j-max", type=int, default=setting("cli", "j_max"))
    verify.add_argument("--tol", type=float, default=None, help="Override every per-check tolerance.")
    verify.add_argument("--seed", type=int, default=setting("cli", "seed"))
    verify.add_argument("--draws", type=int, default=setting("cli", "draws"))
    verify.add_argument("--output", type=Path, default=None, help="Write the report here instead of stdout.")
    verify.add_argument("--timing", action="store_true", help="Record the measured wall time (otherwise 0).")

    table = commands.add_parser("table", help="Emit a CSV table.")
    table.add_argument("quantity", choices=sorted(TABLES))
    table.add_argument("--q", type=float, default=0.5)
    table.add_argument("--m", type=int, default=None)
    table.add_argument("--j-max", type=int, default=None)
    table.add_argument("--output", type=Path, default=None, help="Write the CSV here instead of stdout.")

    return parser.parse_args(argv)


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def _eval_params(function: str, tokens: List[str]) -> Dict[str, Any]:
    """Matches --name value tokens against the evaluator signature."""
    if function not in EVALUATORS:
        raise UsageError(f"Unknown function: {function!r}; choose from {', '.join(sorted(EVALUATORS))}")
    _, signature, defaults = EVALUATORS[function]
    kinds = dict(signature)
    if len(tokens) % 2:
        raise UsageError(f"Parameters must come in --name value pairs: {' '.join(tokens)}")

    values = dict(defaults)
    for flag, text in zip(tokens[::2], tokens[1::2]):
        name = flag.lstrip("-").replace("-", "_")
        if not flag.startswith("--") or name not in kinds:
            raise UsageError(f"Unknown parameter {flag!r} for {function}; expected {', '.join(kinds)}")
        try:
            values[name] = PARSERS[kinds[name]](text)
        except ValueError as e:
            raise UsageError(f"Malformed value for {flag}: {text!r}") from e

    missing = [name for name in kinds if name not in values]
    if missing:
        raise UsageError(f"Missing parameters for {function}: {', '.join(missing)}")
    return {name: values[name] for name in kinds}


def _format_result(result: Any) -> str:
    if isinstance(result, SeriesValue):
        return f"{format_complex(result.value)} error={result.abs_error_estimate:.3g} terms={result.terms_used}"
    if isinstance(result, PolynomialEval):
        return f"{format_complex(result.value)} error=0 degree={result.degree}"
    return f"{format_complex(complex(result))} error=0"


def cmd_eval(args: argparse.Namespace) -> int:
    params = _eval_params(args.function, list(args.params))
    result = EVALUATORS[args.function][0](**params)
    print(_format_result(result))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    opts = SuiteOptions(q_list=args.q, m_max=args.m_max, j_max=args.j_max, seed=args.seed, draws=args.draws,
                        tol=args.tol, m_values=None if args.m is None else (args.m,))
    report = run_suite(args.suite, opts, timing=args.timing)
    text = report.to_json()
    if args.output is None:
        sys.stdout.write(text)
    else:
        with args.output.open("w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    summary = report.summary()
    logger.info("%s: %d passed, %d failed", args.suite, summary["passed"], summary["failed"])
    return 0 if report.all_passed else 1


def cmd_table(args: argparse.Namespace) -> int:
    kwargs: Dict[str, Any] = {}
    if args.quantity != "limits-q1":
        kwargs["q"] = args.q
        if args.m is not None:
            kwargs["m"] = args.m
        if args.j_max is not None and args.quantity in ("energies", "coefficients"):
            kwargs["j_max"] = args.j_max
    elif args.m is not None:
        kwargs["m"] = args.m

    frame = TABLES[args.quantity](**kwargs)
    if args.output is None:
        sys.stdout.write(to_csv_text(frame))
    else:
        write_csv(frame, args.output)
    return 0


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "table": cmd_table}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    _configure_logging(args.verbose)
    try:
        worker_count()
    except QCoherentError as e:
        print(f"qcoherent: error: {e}", file=sys.stderr)
        return 2

    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"qcoherent: error: {e}", file=sys.stderr)
        return 2
    except QCoherentError as e:
        print(f"qcoherent: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"qcoherent: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"qcoherent: cannot write output: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
