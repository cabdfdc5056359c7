"""Lexer for ADL compilation units.

Produces a flat token list that always ends in an end-of-input token, plus
diagnostics for malformed input.  Lexing is lossless: concatenating token
texts together with the skipped whitespace/comments reproduces the source.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .diagnostics import Diagnostic, SourcePos, error


class TokenKind(enum.Enum):
    KEYWORD = "keyword"
    IDENT = "identifier"
    INT = "integer-literal"
    FLOAT = "float-literal"
    STRING = "string-literal"
    PUNCT = "punctuator"
    END = "end-of-input"


# Keywords of the supported language subset.
SUPPORTED_KEYWORDS = frozenset(
    {
        "module",
        "class",
        "enum",
        "typedef",
        "extern",
        "relationship",
        "persistent",
        "private",
        "const",
        "sequence",
        "void",
        "boolean",
        "octet",
        "short",
        "long",
        "float",
        "double",
        "string",
        "DataObject",
        "ContainedObject",
        "CollectionObject",
    }
)

# IDL words outside the subset.  Reserved anyway so the parser can reject the
# construct by name instead of tripping over a bare identifier.
REJECTED_KEYWORDS = frozenset(
    {
        "interface",
        "struct",
        "union",
        "any",
        "exception",
        "raises",
        "attribute",
        "readonly",
        "unsigned",
        "in",
        "out",
        "inout",
        "oneway",
        "fixed",
        "wchar",
        "valuetype",
        "native",
        "abstract",
        "custom",
    }
)

KEYWORDS = SUPPORTED_KEYWORDS | REJECTED_KEYWORDS


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    start: SourcePos
    end: SourcePos

    def is_keyword(self, word: str) -> bool:
        return self.kind is TokenKind.KEYWORD and self.text == word

    def is_punct(self, text: str) -> bool:
        return self.kind is TokenKind.PUNCT and self.text == text

    def __str__(self) -> str:
        if self.kind is TokenKind.END:
            return "end of input"
        return f"'{self.text}'"


_TOKEN_RE = re.compile(
    r"""
      (?P<ws>[ \t\r\n]+)
    | (?P<line_comment>//[^\n]*)
    | (?P<block_comment>/\*.*?\*/)
    | (?P<float>(?:\d+\.\d*|\.\d+)(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)
    | (?P<int>0[xX][0-9a-fA-F]+|\d+)
    | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<string>"(?:\\.|[^"\\\n])*")
    | (?P<punct>::|[{}()\[\]<>;,:=+\-*/%.|&^~?])
    """,
    re.VERBOSE | re.DOTALL,
)

_IDENT_CHAR = re.compile(r"[A-Za-z0-9_]")


class _Cursor:
    """Tracks offset/line/column while consuming source text."""

    def __init__(self, source: str, file: str) -> None:
        self.source = source
        self.file = file
        self.offset = 0
        self.line = 1
        self.column = 1

    def pos(self) -> SourcePos:
        return SourcePos(self.file, self.line, self.column)

    def advance(self, text: str) -> None:
        newlines = text.count("\n")
        if newlines:
            self.line += newlines
            self.column = len(text) - text.rfind("\n")
        else:
            self.column += len(text)
        self.offset += len(text)


def tokenize(source: str, file: str = "<string>") -> tuple[list[Token], list[Diagnostic]]:
    """Split ``source`` into tokens.

    Always returns a token list ending in an end-of-input token; lexical
    problems are reported as diagnostics and the offending text is skipped.
    """
    cur = _Cursor(source, file)
    tokens: list[Token] = []
    diagnostics: list[Diagnostic] = []

    while cur.offset < len(source):
        m = _TOKEN_RE.match(source, cur.offset)
        if m is not None and m.lastgroup == "punct" and source.startswith("/*", cur.offset):
            # '/*' fell through to the bare-'/' punctuator, so the comment never closes
            diagnostics.append(error("unterminated-comment", "unterminated block comment", cur.pos()))
            cur.advance(source[cur.offset:])
            continue
        if m is None:
            ch = source[cur.offset]
            if ch == '"':
                diagnostics.append(error("unterminated-string", "unterminated string literal", cur.pos()))
                eol = source.find("\n", cur.offset)
                cur.advance(source[cur.offset:] if eol < 0 else source[cur.offset:eol])
            else:
                diagnostics.append(error("illegal-char", f"illegal character {ch!r}", cur.pos()))
                cur.advance(ch)
            continue

        text = m.group()
        kind = m.lastgroup
        if kind in ("ws", "line_comment", "block_comment"):
            cur.advance(text)
            continue

        start = cur.pos()
        if kind in ("int", "float") and cur.offset + len(text) < len(source) and _IDENT_CHAR.match(
            source[cur.offset + len(text)]
        ):
            run = _IDENT_CHAR.match(source, cur.offset + len(text))
            while run and _IDENT_CHAR.match(source, run.end()):
                run = _IDENT_CHAR.match(source, run.end())
            bad = source[cur.offset : run.end()]  # type: ignore[union-attr]
            diagnostics.append(error("bad-number", f"malformed numeric literal '{bad}'", start))
            cur.advance(bad)
            continue

        cur.advance(text)
        end = cur.pos()
        if kind == "ident":
            token_kind = TokenKind.KEYWORD if text in KEYWORDS else TokenKind.IDENT
        else:
            token_kind = {
                "int": TokenKind.INT,
                "float": TokenKind.FLOAT,
                "string": TokenKind.STRING,
                "punct": TokenKind.PUNCT,
            }[kind]
        tokens.append(Token(token_kind, text, start, end))

    end_pos = cur.pos()
    tokens.append(Token(TokenKind.END, "", end_pos, end_pos))
    return tokens, diagnostics
