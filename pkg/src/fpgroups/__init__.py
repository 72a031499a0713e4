"""Generalized Thompson groups F(p): tree diagrams, normal forms, metrics,
piecewise-linear representations and embeddings between the F(p)."""

from __future__ import annotations

from .diagrams import (
    TreeDiagram,
    equal,
    generator_diagram,
    identity_diagram,
    invert,
    is_reduced,
    multiply,
    parse_diagram,
    power,
    reduce,
    unreduce,
)
from .errors import (
    ArityError,
    ArityMismatch,
    DivisibilityError,
    DomainError,
    FPError,
    InternalError,
    ParseError,
    ResourceError,
    VariantMismatch,
)
from .metrics import (
    Ball,
    CapExceeded,
    LengthOracle,
    MetricReport,
    ball,
    exact_length,
    metric_D,
    metric_N,
    metric_N2,
    metric_report,
)
from .morphisms import (
    EmbeddingSpec,
    embed_dense,
    embed_general,
    embed_power,
    embed_sparse,
    shift,
    shift_caret,
    stretch_factor,
)
from .plmaps import (
    LINE,
    UNIT,
    PLMap,
    compose_maps,
    diagram_to_map,
    generator_map_line,
    generator_map_unit,
    last_breakpoint,
    word_to_line_map,
    word_to_unit_map,
)
from .trees import (
    CaretClass,
    Interval,
    PTree,
    caret,
    caret_count,
    classify_carets,
    complete_tree,
    leaf_intervals,
    parse_tree,
    serialize_tree,
)
from .words import (
    NormalForm,
    Word,
    diagram_to_normal_form,
    normalize_word,
    parse_word,
    random_element,
    word_to_diagram,
)

__version__ = "0.1.0"
