"""Weighted restricted sumsets W⊙S over finite abelian groups, distinct-residue
linear congruences, and rank-2 maximal minimal zero-sum sequences.
"""

from .config import override, settings
from .congruence import (
    CongruenceInstance,
    CongruenceVerdict,
    construct,
    decide,
    decide_all_alpha,
    decide_alpha_one,
    detect_special_family,
    normalize,
)
from .errors import (
    BudgetExceededError,
    GroupMismatchError,
    NotApplicableError,
    PreconditionError,
    TheoremViolation,
    WodotError,
)
from .groups import (
    ElementSet,
    GroupElement,
    GroupSpec,
    add,
    coset_decompose,
    neg,
    order_of,
    scalar_mul,
    span,
    stabilizer,
    star_span,
    sumset,
)
from .sequences import (
    GSequence,
    is_minimal_zero_sum,
    is_zero_sum,
    is_zero_sum_free,
    sigma,
    sigma_n,
    subsequence_sums,
    translate,
)
from .theorem import (
    Classification,
    Kind,
    VerificationReport,
    check_key_lemma,
    check_punctured,
    classify_full_length,
    find_special_subset,
    lower_bound,
    verify_main_theorem,
)
from .weighted import (
    WeightSeq,
    check_sequence_shift,
    check_weight_shift,
    odot,
    odot_naive,
    shift_weights,
)
from .zerosum import (
    ConstructionResult,
    Rank2Target,
    construct_from_pattern,
    construct_with_support,
    feasible_support_sizes,
    max_minimal_length,
)

__version__ = "0.1.0"
