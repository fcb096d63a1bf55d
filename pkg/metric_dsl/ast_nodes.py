"""
Expression tree for metric component expressions.
"""

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class CoordRef:
    name: str
    index: int


@dataclass(frozen=True)
class ParamRef:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    function: str
    argument: "Expr"


Expr = Union[Number, CoordRef, ParamRef, Neg, BinOp, Power, Call]

# emitter precedence levels
PREC_ADD = 1
PREC_MUL = 2
PREC_UNARY = 3
PREC_POW = 4
PREC_ATOM = 5


def precedence(node: Expr) -> int:
    if isinstance(node, BinOp):
        return PREC_ADD if node.op in "+-" else PREC_MUL
    if isinstance(node, Neg):
        return PREC_UNARY
    if isinstance(node, Power):
        return PREC_POW
    if isinstance(node, Number) and node.value < 0:
        return PREC_UNARY
    return PREC_ATOM


def format_number(value: float) -> str:
    if float(value).is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def emit_expression(node: Expr) -> str:
    """Source text that parses back to the same tree, with minimal parentheses."""
    if isinstance(node, Number):
        return format_number(node.value)
    if isinstance(node, (CoordRef, ParamRef)):
        return node.name
    if isinstance(node, Call):
        return f"{node.function}({emit_expression(node.argument)})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, precedence(node.operand) < PREC_UNARY)
    if isinstance(node, Power):
        return f"{_wrap(node.base, precedence(node.base) < PREC_POW)}^{node.exponent}"
    if isinstance(node, BinOp):
        prec = precedence(node)
        left = _wrap(node.left, precedence(node.left) < prec)
        right = _wrap(node.right, precedence(node.right) <= prec)
        return f"{left} {node.op} {right}"
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(node: Expr, parens: bool) -> str:
    text = emit_expression(node)
    return f"({text})" if parens else text


def free_names(node: Expr) -> set:
    """Identifiers (coordinates and parameters) referenced by an expression."""
    if isinstance(node, (CoordRef, ParamRef)):
        return {node.name}
    if isinstance(node, Neg):
        return free_names(node.operand)
    if isinstance(node, Power):
        return free_names(node.base)
    if isinstance(node, Call):
        return free_names(node.argument)
    if isinstance(node, BinOp):
        return free_names(node.left) | free_names(node.right)
    return set()
