"""Hall bases, free Lie ring arithmetic and the series shadow of the Hilton-Milnor splitting."""

from .errors import BoundError, DomainError, LieShadowError, ParseError
from .free_lie import (
    LieElement,
    TensorElement,
    embed_tensor,
    lie_bracket,
    rewrite_to_hall,
    verify_hall_basis,
    witt_dimension,
)
from .hall_words import (
    Bracket,
    HallBasisTable,
    Leaf,
    OrderPolicy,
    RankedWord,
    enumerate_hall_basis,
    format_word,
    multidegree,
    parse_word,
    split_step,
)
from .hilton_milnor import (
    Decomposition,
    DecompositionFactor,
    decompose,
    verify_fundamental_split,
    verify_half2,
    verify_hm_series,
    verify_james,
)
from .homotopy_series import FormalObject, MultiSeries, geom_sum, word_connectivity

__version__ = "0.1.0"
