"""Word sets as linear subspaces of an embedding space."""

from ._core import (
    DegenerateInput,
    DimensionMismatch,
    EmptySpan,
    EmptyTestSet,
    InsufficientPairs,
    InvalidCombination,
    InvalidInput,
    MissingSentence,
    NumericalFailure,
    OutOfVocabulary,
    ParseError,
    SubspaceSetsError,
    EmbeddingTable,
    ScoreTriple,
    SentenceEmbedding,
    Subspace,
    avg_cos,
    bertscore,
    complement,
    expand_set,
    gen_derived_sets,
    hard_membership,
    intersection,
    load_token_embeddings,
    load_word_embeddings,
    median_rank,
    orthonormal_rows,
    projector_of,
    recall_at_k,
    soft_membership,
    span,
    spearman,
    subspace_bertscore,
    subspace_equal,
    thin_svd,
    union,
    vector_indicator,
)

__all__ = [
    "DegenerateInput",
    "DimensionMismatch",
    "EmptySpan",
    "EmptyTestSet",
    "InsufficientPairs",
    "InvalidCombination",
    "InvalidInput",
    "MissingSentence",
    "NumericalFailure",
    "OutOfVocabulary",
    "ParseError",
    "SubspaceSetsError",
    "EmbeddingTable",
    "ScoreTriple",
    "SentenceEmbedding",
    "Subspace",
    "avg_cos",
    "bertscore",
    "complement",
    "expand_set",
    "gen_derived_sets",
    "hard_membership",
    "intersection",
    "load_token_embeddings",
    "load_word_embeddings",
    "median_rank",
    "orthonormal_rows",
    "projector_of",
    "recall_at_k",
    "soft_membership",
    "span",
    "spearman",
    "subspace_bertscore",
    "subspace_equal",
    "thin_svd",
    "union",
    "vector_indicator",
]
