"""Exact computer algebra for parametric Apostol-Bernoulli type polynomial families."""

from .errors import (
    ApostolError,
    BranchUnavailableError,
    InsufficientOrderError,
    InvalidKernelError,
    NotAUnitError,
    PoleError,
    RingMismatchError,
    TruncationError,
    UnboundVariableError,
    UnknownVariableError,
)
from .exactq import DEFAULT_RING, I, GaussRational, MultiPoly, VarSet, parse_gauss, parse_poly, parse_rational
from .families import (
    CorruptedSource,
    FamilySource,
    FamilySpec,
    UFactory,
    apostol_bernoulli_number,
    apostol_bernoulli_number_closed,
    apostol_genocchi,
    bernoulli_number,
    bernoulli_polynomial,
    cs_closed_form,
    family_poly,
    family_series,
    general_t_poly,
    u_factory,
)
from .fps import KernelSpec, TruncSeries, apostol_kernel, extract_family
from .report import VerdictReport
from .theorems import SampleSet, run_suite

__version__ = "0.1.0"
