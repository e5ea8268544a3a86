"""Zariski-like topologies on finite lattices and spectra of finite semirings."""

from ._xtop import (
    AxiomError,
    CycleError,
    Error,
    NotALatticeError,
    NotXTopError,
    ParseError,
    Poset,
    RangeError,
    Semiring,
    Space,
    TooLargeError,
    antichain,
    bni,
    boolean_semiring,
    chain,
    dual_tree,
    forest,
    is_isomorphic,
    is_xtop,
    run_suite,
    s3,
    tree,
    verify_bni,
    zn,
)

__all__ = [
    "AxiomError",
    "CycleError",
    "Error",
    "NotALatticeError",
    "NotXTopError",
    "ParseError",
    "Poset",
    "RangeError",
    "Semiring",
    "Space",
    "TooLargeError",
    "antichain",
    "bni",
    "boolean_semiring",
    "chain",
    "dual_tree",
    "forest",
    "is_isomorphic",
    "is_xtop",
    "run_suite",
    "s3",
    "tree",
    "verify_bni",
    "zn",
]
