"""Text analysis shared by every index: tokenization, normalization,
edge n-grams, bi-grams, and query parsing."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

from .errors import ConfigError, EmptyQueryError

# Characters kept inside a token even when they sit at its edge would be
# punctuation; intra-word hyphens and slashes are meaningful in biomedical
# names (SARS-CoV-2, IL-6, mg/kg).
_QUOTE_CHARS = {'"', "“", "”"}


@dataclass(frozen=True)
class AnalyzerConfig:
    min_gram: int = 4
    max_gram: int = 30
    lowercase: bool = True
    ascii_fold: bool = True

    def __post_init__(self):
        if not (1 <= self.min_gram <= self.max_gram):
            raise ConfigError(
                f"require 1 <= min_gram <= max_gram, got {self.min_gram}..{self.max_gram}"
            )

    def to_dict(self) -> dict:
        return {
            "min_gram": self.min_gram,
            "max_gram": self.max_gram,
            "lowercase": self.lowercase,
            "ascii_fold": self.ascii_fold,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AnalyzerConfig":
        return cls(**d)


@dataclass(frozen=True)
class Token:
    term: str
    position: int


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _strip_edges(word: str) -> str:
    start, end = 0, len(word)
    while start < end and _is_punct(word[start]):
        start += 1
    while end > start and _is_punct(word[end - 1]):
        end -= 1
    return word[start:end]


def tokenize(text: str) -> list[Token]:
    """Whitespace split with edge punctuation stripped; hyphens and
    slashes inside a word are kept."""
    out = []
    for word in text.split():
        term = _strip_edges(word)
        if term:
            out.append(Token(term, len(out)))
    return out


def tokenize_spans(text: str) -> list[tuple[str, int, int]]:
    """Like tokenize() but returns (term, char_start, char_end) against the
    original string, so extracted spans can be cited byte-exactly."""
    out = []
    i, n = 0, len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not text[j].isspace():
            j += 1
        word = text[i:j]
        stripped = _strip_edges(word)
        if stripped:
            lead = 0
            while lead < len(word) and _is_punct(word[lead]):
                lead += 1
            out.append((stripped, i + lead, i + lead + len(stripped)))
        i = j
    return out


def fold_ascii(text: str) -> str:
    """Drop diacritics via compatibility decomposition; characters without
    an ASCII equivalent pass through unchanged."""
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def normalize(term: str, cfg: AnalyzerConfig) -> str:
    if cfg.lowercase:
        term = term.lower()
    if cfg.ascii_fold:
        term = fold_ascii(term)
    return term


def normalize_text(text: str, cfg: AnalyzerConfig) -> list[str]:
    """Tokenize then normalize; the per-unit term stream used by indexes."""
    return [normalize(t.term, cfg) for t in tokenize(text)]


def edge_ngrams(term: str, cfg: AnalyzerConfig) -> list[str]:
    """Prefixes of length min_gram..min(max_gram, len); the full term is
    always emitted as well so short terms stay searchable."""
    grams = [term[:n] for n in range(cfg.min_gram, min(cfg.max_gram, len(term)) + 1)]
    if not grams or grams[-1] != term:
        grams.append(term)
    return grams


def extract_bigrams(tokens: list[Token]) -> list[tuple[Token, Token]]:
    return [(tokens[i], tokens[i + 1]) for i in range(len(tokens) - 1)]


@dataclass(frozen=True)
class QuerySegment:
    kind: str  # "phrase" | "free"
    tokens: tuple[str, ...]


@dataclass
class QueryAst:
    raw: str
    segments: list[QuerySegment] = field(default_factory=list)
    corrected: bool = False

    @property
    def phrases(self) -> list[list[str]]:
        return [list(s.tokens) for s in self.segments if s.kind == "phrase"]

    @property
    def free_terms(self) -> list[str]:
        out = []
        for s in self.segments:
            if s.kind == "free":
                out.extend(s.tokens)
        return out

    def all_tokens(self) -> list[str]:
        """Every query token in original order, quoted or not."""
        out = []
        for s in self.segments:
            out.extend(s.tokens)
        return out


def parse_query(raw: str) -> QueryAst:
    """Split a raw query into maximal double-quoted phrases and free terms.

    An unbalanced quote is treated as a literal character (and is then
    stripped as edge punctuation by the tokenizer).
    """
    if not raw or not raw.strip():
        raise EmptyQueryError("query is empty")
    text = raw
    for q in _QUOTE_CHARS:
        text = text.replace(q, '"')

    segments: list[QuerySegment] = []

    def add_free(chunk: str):
        terms = tuple(t.term for t in tokenize(chunk))
        if terms:
            segments.append(QuerySegment("free", terms))

    pos = 0
    while True:
        open_q = text.find('"', pos)
        if open_q < 0:
            add_free(text[pos:])
            break
        close_q = text.find('"', open_q + 1)
        if close_q < 0:  # unbalanced: literal character
            add_free(text[pos:])
            break
        add_free(text[pos:open_q])
        phrase_terms = tuple(t.term for t in tokenize(text[open_q + 1 : close_q]))
        if phrase_terms:
            segments.append(QuerySegment("phrase", phrase_terms))
        pos = close_q + 1

    ast = QueryAst(raw=raw, segments=segments)
    if not ast.all_tokens():
        raise EmptyQueryError("query has no tokens")
    return ast
