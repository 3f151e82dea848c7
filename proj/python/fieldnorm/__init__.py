"""Python bindings for the fieldnorm pre-annotation toolkit."""

from ._fieldnorm import (
    AlignedRecord,
    ConfigError,
    CorpusDocument,
    Lexicon,
    LexiconEntry,
    Outcome,
    ParseError,
    SerializationError,
    SymbolClassTable,
    bleu,
    compute_stats,
    convert_score,
    evaluate,
    format_report,
    format_stats,
    levenshtein,
    mean_wer,
    normalize_token,
    normalized_edit_distance,
    parse_document,
    preannotate,
    symbol_series,
    validate_text,
    write_document,
)

__all__ = [
    "AlignedRecord",
    "ConfigError",
    "CorpusDocument",
    "Lexicon",
    "LexiconEntry",
    "Outcome",
    "ParseError",
    "SerializationError",
    "SymbolClassTable",
    "bleu",
    "compute_stats",
    "convert_score",
    "evaluate",
    "format_report",
    "format_stats",
    "levenshtein",
    "mean_wer",
    "normalize_token",
    "normalized_edit_distance",
    "parse_document",
    "preannotate",
    "symbol_series",
    "validate_text",
    "write_document",
]
