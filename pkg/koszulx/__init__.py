__version__ = "0.1.0"

from koszulx.exception import (
    AmbientMismatchError,
    CodimensionError,
    FieldError,
    HomogeneityError,
    InconsistencyError,
    KoszulXError,
    KoszulXException,
    KoszulXNotImplementedError,
    PolynomialParseError,
    PreconditionError,
    StabilizationError,
)

from .algorithms.groebner import GroebnerBasis, buchberger, submodule_equal
from .algorithms.hilbert import HilbertData, hilbert_function, hilbert_polynomial
from .algorithms.kv import KVReport, kv_verdict
from .algorithms.modules import intersect, koszul_submodule, quotient, saturate, syzygies
from .algorithms.resolution import GradedResolution, minimal_resolution
from .algorithms.sym2 import Sym2Report, sym2_euler_check
from .classes.field import GF, FieldElement, PrimeField
from .classes.module import FreeModule, ModuleElement, QuotientModule, Submodule
from .classes.monomial import Monomial
from .classes.order import MonomialOrder
from .classes.polynomial import Polynomial, jacobian
from .config import SessionConfig
from .datasets.arrangements import ArrangementSpec, arrangement_report, build_arrangement
from .datasets.random_ideals import five_points_counterexample
from .read_write import parse_polynomial, parse_polynomials
