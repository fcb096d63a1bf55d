"""
Tokenizer for component expressions.
"""

import re
from dataclasses import dataclass
from typing import List

from exceptions import MetricParseError

NUMBER = "NUMBER"
IDENT = "IDENT"
OP = "OP"
EOF = "EOF"

TOKEN_PATTERN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int  # 1-based within the reported line


def tokenize(text: str, line: int = 0, column_offset: int = 0) -> List[Token]:
    """Split an expression into tokens; columns are shifted by ``column_offset``."""
    tokens = []
    pos = 0
    while pos < len(text):
        match = TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise MetricParseError(f"unexpected character {text[pos]!r}", line, column_offset + pos + 1)
        kind = match.lastgroup
        if kind == "number":
            tokens.append(Token(NUMBER, match.group(), column_offset + pos + 1))
        elif kind == "ident":
            tokens.append(Token(IDENT, match.group(), column_offset + pos + 1))
        elif kind == "op":
            tokens.append(Token(OP, match.group(), column_offset + pos + 1))
        pos = match.end()
    tokens.append(Token(EOF, "", column_offset + len(text) + 1))
    return tokens
