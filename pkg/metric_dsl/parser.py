"""
Recursive-descent parser for component expressions and the metric file format.

Expression grammar (``^`` binds tighter than unary minus, which binds tighter
than ``*`` and ``/``)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := primary ('^' ['-'] INT)*
    primary := NUMBER | IDENT | IDENT '(' expr ')' | '(' expr ')'

Metric file format, one ``key = value`` per line, ``#`` starts a comment::

    version = 1
    name = <string>
    dim = <int>
    coords = <id> <id> ...
    param <id> = <real or "constant expression">
    domain <id> = <lo> <hi>
    g <i> <j> = "<expression>"
"""

import re
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from config import ERROR_MESSAGES, METRIC_FILE_CONFIG
from exceptions import CurvkitError, MetricParseError, MetricSpecError
from logger import get_logger
from metric_dsl.ast_nodes import BinOp, Call, CoordRef, Expr, Neg, Number, ParamRef, Power, format_number, emit_expression
from metric_dsl.evaluator import constant_value
from metric_dsl.lexer import EOF, IDENT, NUMBER, OP, Token, tokenize
from metric_dsl.spec import MetricSpec, default_domain

logger = get_logger()

Resolver = Callable[[str], Optional[Expr]]

FUNCTIONS = frozenset(METRIC_FILE_CONFIG["functions"])
CONSTANTS = METRIC_FILE_CONFIG["constants"]

LINE_PATTERN = re.compile(r"^\s*(?P<key>[A-Za-z_]+)(?P<args>[^=]*?)\s*=\s*(?P<value>.*?)\s*$")
VALUE_ITEM = re.compile(r'"[^"]*"|\S+')
INTEGER = re.compile(r"^\d+$")


class ExpressionParser:
    """Parses one token stream into an expression tree."""

    def __init__(self, tokens: List[Token], resolve: Resolver, line: int = 0):
        self.tokens = tokens
        self.resolve = resolve
        self.line = line
        self.pos = 0

    def parse(self) -> Expr:
        node = self._expr()
        tok = self._peek()
        if tok.kind != EOF:
            self._fail(f"unexpected token {tok.text!r}", tok)
        return node

    # helpers

    def _peek(self) -> Token:
        return self.tokens[self.pos]

    def _next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _is_op(self, text: str) -> bool:
        tok = self._peek()
        return tok.kind == OP and tok.text == text

    def _fail(self, message: str, tok: Token):
        raise MetricParseError(message, self.line, tok.column)

    # grammar

    def _expr(self) -> Expr:
        node = self._term()
        while self._is_op("+") or self._is_op("-"):
            op = self._next().text
            node = BinOp(op, node, self._term())
        return node

    def _term(self) -> Expr:
        node = self._unary()
        while self._is_op("*") or self._is_op("/"):
            op = self._next().text
            node = BinOp(op, node, self._unary())
        return node

    def _unary(self) -> Expr:
        if self._is_op("-"):
            self._next()
            operand = self._unary()
            # negated literals fold into the literal
            if isinstance(operand, Number):
                return Number(-operand.value)
            return Neg(operand)
        return self._power()

    def _power(self) -> Expr:
        node = self._primary()
        while self._is_op("^"):
            self._next()
            sign = 1
            if self._is_op("-"):
                self._next()
                sign = -1
            tok = self._next()
            if tok.kind != NUMBER or not INTEGER.match(tok.text):
                self._fail(ERROR_MESSAGES["non_integer_exponent"], tok)
            node = Power(node, sign * int(tok.text))
        return node

    def _primary(self) -> Expr:
        tok = self._next()
        if tok.kind == NUMBER:
            return Number(float(tok.text))
        if tok.kind == IDENT:
            if self._is_op("("):
                if tok.text not in FUNCTIONS:
                    self._fail(ERROR_MESSAGES["unknown_function"].format(function=tok.text), tok)
                return Call(tok.text, self._parenthesized(self._next()))
            if tok.text in FUNCTIONS:
                self._fail(f"function '{tok.text}' needs an argument", tok)
            node = self.resolve(tok.text)
            if node is None:
                self._fail(ERROR_MESSAGES["unknown_identifier"].format(name=tok.text), tok)
            return node
        if tok.kind == OP and tok.text == "(":
            return self._parenthesized(tok)
        if tok.kind == EOF:
            self._fail("unexpected end of expression", tok)
        self._fail(f"unexpected token {tok.text!r}", tok)

    def _parenthesized(self, open_tok: Token) -> Expr:
        node = self._expr()
        tok = self._peek()
        if tok.kind == EOF:
            self._fail("unclosed parenthesis", open_tok)
        if not self._is_op(")"):
            self._fail(f"expected ')' but found {tok.text!r}", tok)
        self._next()
        return node


def make_resolver(coords: Sequence[str] = (), params: Sequence[str] = ()) -> Resolver:
    coord_index = {name: i for i, name in enumerate(coords)}
    param_names = set(params)

    def resolve(name: str) -> Optional[Expr]:
        if name in coord_index:
            return CoordRef(name, coord_index[name])
        if name in param_names:
            return ParamRef(name)
        if name in CONSTANTS:
            return Number(CONSTANTS[name])
        return None

    return resolve


def parse_expression(text: str, coords: Sequence[str] = (), params: Sequence[str] = (),
                     line: int = 0, column_offset: int = 0) -> Expr:
    """Parse one expression; names resolve against ``coords`` then ``params``."""
    tokens = tokenize(text, line, column_offset)
    return ExpressionParser(tokens, make_resolver(coords, params), line).parse()


def _constant(text: str, line: int, column: int) -> float:
    """Numeric literal or quoted constant expression (``pi`` and ``e`` allowed)."""
    if text.startswith('"'):
        if not text.endswith('"') or len(text) < 2:
            raise MetricParseError("unterminated string", line, column)
        ast = parse_expression(text[1:-1], line=line, column_offset=column)
    else:
        ast = parse_expression(text, line=line, column_offset=column - 1)
    try:
        return constant_value(ast)
    except CurvkitError as exc:
        raise MetricParseError(str(exc), line, column)


def _strip_comment(line: str) -> str:
    in_quote = False
    for i, ch in enumerate(line):
        if ch == '"':
            in_quote = not in_quote
        elif ch == "#" and not in_quote:
            return line[:i]
    return line


def parse_metric_file(text: str) -> MetricSpec:
    """Parse metric file text (format version 1) into a validated MetricSpec."""
    header: Dict[str, Tuple[str, int]] = {}
    params: List[Tuple[str, str, int, int]] = []
    domains: List[Tuple[str, List[Tuple[str, int]], int]] = []
    entries: List[Tuple[int, int, str, int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        match = LINE_PATTERN.match(line)
        if match is None:
            raise MetricParseError("expected 'key = value'", lineno, len(line) - len(line.lstrip()) + 1)
        key = match.group("key")
        args = match.group("args").split()
        value = match.group("value")
        value_col = match.start("value") + 1

        if key in ("version", "name", "dim", "coords"):
            if args:
                raise MetricParseError(f"'{key}' takes no arguments", lineno, match.start("args") + 1)
            if key in header:
                raise MetricParseError(f"duplicate '{key}' line", lineno, 1)
            header[key] = (value, lineno)
        elif key == "param":
            if len(args) != 1:
                raise MetricParseError("expected 'param <id> = <value>'", lineno, 1)
            params.append((args[0], value, lineno, value_col))
        elif key == "domain":
            if len(args) != 1:
                raise MetricParseError("expected 'domain <id> = <lo> <hi>'", lineno, 1)
            items = [(m.group(), value_col + m.start()) for m in VALUE_ITEM.finditer(value)]
            domains.append((args[0], items, lineno))
        elif key == "g":
            if len(args) != 2 or not all(INTEGER.match(a) for a in args):
                raise MetricParseError("expected 'g <i> <j> = \"<expression>\"'", lineno, 1)
            if len(value) < 2 or not (value.startswith('"') and value.endswith('"')):
                raise MetricParseError("component expression must be double-quoted", lineno, value_col)
            # column_offset: 1-based column of the opening quote
            entries.append((int(args[0]), int(args[1]), value[1:-1], lineno, value_col))
        else:
            raise MetricParseError(f"unknown key '{key}'", lineno, match.start("key") + 1)

    for required in ("version", "dim", "coords"):
        if required not in header:
            raise MetricParseError(f"missing '{required}' line", 0, 0)

    version_text, version_line = header["version"]
    if version_text != str(METRIC_FILE_CONFIG["version"]):
        raise MetricParseError(f"unsupported version {version_text!r}", version_line, 1)
    dim_text, dim_line = header["dim"]
    if not INTEGER.match(dim_text):
        raise MetricParseError(f"dim must be a positive integer, got {dim_text!r}", dim_line, 1)
    dim = int(dim_text)
    coords = tuple(header["coords"][0].split())
    if len(coords) != dim:
        raise MetricSpecError(ERROR_MESSAGES["dim_mismatch"].format(dim=dim, count=len(coords)))
    name = header.get("name", ("unnamed", 0))[0]

    param_values = []
    for pname, ptext, lineno, col in params:
        param_values.append((pname, _constant(ptext, lineno, col)))

    domain = list(default_domain(dim))
    coord_index = {c: i for i, c in enumerate(coords)}
    seen_domains = set()
    for cname, items, lineno in domains:
        if cname not in coord_index:
            raise MetricParseError(ERROR_MESSAGES["unknown_identifier"].format(name=cname), lineno, 1)
        if cname in seen_domains:
            raise MetricParseError(f"duplicate domain for '{cname}'", lineno, 1)
        if len(items) != 2:
            raise MetricParseError("domain needs exactly two values", lineno, items[0][1] if items else 1)
        seen_domains.add(cname)
        (lo_text, lo_col), (hi_text, hi_col) = items
        domain[coord_index[cname]] = (_constant(lo_text, lineno, lo_col), _constant(hi_text, lineno, hi_col))

    param_names = [p for p, _ in param_values]
    components = {}
    for i, j, expr_text, lineno, col in entries:
        if i >= dim or j >= dim:
            raise MetricParseError(f"component index ({i}, {j}) out of range for dim {dim}", lineno, 1)
        key = (min(i, j), max(i, j))
        if key in components:
            raise MetricParseError(ERROR_MESSAGES["duplicate_entry"].format(i=i, j=j), lineno, 1)
        components[key] = parse_expression(expr_text, coords, param_names, lineno, col)

    spec = MetricSpec(
        name=name,
        dim=dim,
        coords=coords,
        params=tuple(param_values),
        components=tuple(components.items()),
        domain=tuple(domain),
    )
    logger.debug(f"Parsed metric '{spec.name}' (dim {spec.dim}, {len(spec.components)} components)")
    return spec


def emit_metric_file(spec: MetricSpec) -> str:
    """Metric file text for ``spec``; parses back to an equal spec."""
    lines = [
        f"version = {METRIC_FILE_CONFIG['version']}",
        f"name = {spec.name}",
        f"dim = {spec.dim}",
        f"coords = {' '.join(spec.coords)}",
    ]
    for pname, pvalue in spec.params:
        lines.append(f"param {pname} = {format_number(pvalue)}")
    for cname, (lo, hi) in zip(spec.coords, spec.domain):
        lines.append(f"domain {cname} = {format_number(lo)} {format_number(hi)}")
    for (i, j), expr in spec.components:
        lines.append(f'g {i} {j} = "{emit_expression(expr)}"')
    return "\n".join(lines) + "\n"
