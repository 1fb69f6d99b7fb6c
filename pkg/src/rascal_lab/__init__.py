"""Exact-arithmetic laboratory for the Pascal and Rascal triangles."""
from .errors import (EmptyInputError, GeometryError, InsufficientDataError, IntegralityError,
                     ParseError, PatternApplicabilityError, PositionError, RascalError,
                     RuleApplicabilityError)
from .patterns import (PatternReport, RingKind, RingSpec, ashley_predict, ashley_verify,
                       even_diamond_check, even_diamond_verify, hockey_stick_check,
                       odd_diamond_check, odd_diamond_verify, ring_cells, tmeg_predict, tmeg_verify)
from .rules import (AffineDiamondRule, RelativeOffset, RuleReport, check_rule, generate_with_rule,
                    infer_affine_rule, parse_rule)
from .sequences import APProfile, DiagonalFamily, ap_profile, diagonal, representable_values
from .triangle import (Cell, DiamondNeighborhood, Triangle, build_pascal, build_rascal_additive,
                       build_rascal_closed_form, build_rascal_diagonal, build_rascal_diamond, entry,
                       rascal_entry, row)

__version__ = "0.1.0"
