"""Shared helpers for the test suite."""

import contextlib
import io
from fractions import Fraction

from tunnel_slopes import INFINITY, MAT_IDENTITY, MAT_L, MAT_U
from tunnel_slopes.cli import main


def matrix_cf_value(entries):
    """Continued-fraction value via alternating U/L matrix products.

    U^n1 L^n2 U^n3 ... applied to the right basis column gives
    n1 + 1/(n2 + 1/(...)) including the formal infinite value, so this is an
    independent oracle for the recursive evaluation.
    """
    prod = MAT_IDENTITY
    for i, n in enumerate(entries):
        prod = prod * ((MAT_U if i % 2 == 0 else MAT_L) ** n)
    num, den = prod.column(0 if len(entries) % 2 == 0 else 1)
    return INFINITY if den == 0 else Fraction(num, den)


def run_cli(argv):
    """Run the command line in-process; return (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()
