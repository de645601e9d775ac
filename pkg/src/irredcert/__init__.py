"""Exact certification of irreducibility for integer polynomials.

Perron-type coefficient dominance (zeros inside a disk, or outside an
annulus) combined with prime-power data for f(n) at an integer n.
"""

__version__ = "0.1.0"

from .poly import Polynomial, ShiftedPolynomial, evaluate, taylor_shift, reciprocal, content, is_primitive  # noqa: E402
from .expr import parse, parse_polynomial, format_polynomial  # noqa: E402
from .report import ArithmeticWitness, CheckReport, Status, Theorem  # noqa: E402
from .zerobounds import DominanceKind, DominanceWitness  # noqa: E402
from .criteria import SearchConfig, Outcome, certify, search, check_t1, check_t2, check_t3  # noqa: E402
from .certificate import Certificate, verify, serialize, deserialize  # noqa: E402
