"""Exact initial degenerations, ray stratifications and Bergman fans over Q(t)."""

from .groebner import (HomogeneitySpace, PolyIdeal, ReducedGB, StepLimitExceeded,
                       buchberger, homogeneity_space, ideal_equal, member,
                       normal_form, saturate)
from .initial import (InitialIdeal, SupportVerdict, TorusIdeal, initial_ideal,
                      lift, support_equal, trop_member)
from .laurent import LaurentPoly, ResiduePoly, ZeroPolynomial
from .matroids import Matroid, bergman_member, from_matrix, loops, restrict_to_min, verify_linear_initial
from .orders import DEGREVLEX, LEX, NegativeExponent, TermOrder, weighted
from .parsing import ParseError, parse_poly, parse_scalar
from .scalars import NegativeValuation, TScalar, residue, split, val
from .series import TruncatedSeries, eval_poly, series_inv, series_sqrt
from .strata import (DegenerateDirection, OutsideTropicalVariety, RayStratification,
                     StratumReport, SupportMismatch, SupportUnverified,
                     compare_stratifications, groebner_dim, stratify_ray,
                     topological_dim)

__version__ = "0.1.0"
