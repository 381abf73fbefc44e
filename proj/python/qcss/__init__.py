"""Self-orthogonal binary codes, CSS codes and their decoders."""

import json

from ._core import (
    ConsistencyError,
    CssCode,
    InvalidInput,
    LinearCode,
    PreconditionError,
    ResourceError,
    bch_code,
    build_css,
    construct,
    cyclic_code_from_hex,
    dual,
    dual_distance,
    dual_weight_distribution,
    golay24,
    is_self_orthogonal,
    min_distance,
    projective_code,
    reed_muller,
    search_self_orthogonal_bch,
    weight_distribution,
)
from ._core import verify_table as _verify_table


def verify_table(which="1"):
    """Verification report for table '1', '2' or 'rm' as a dict."""
    return json.loads(_verify_table(str(which)))


__all__ = [name for name in dir() if not name.startswith("_")]
