"""
Operator Expressions
Tokenizer, recursive-descent parser and printer for the operator DSL

Grammar:
    expr  := sum
    sum   := prod (("+" | "-") prod)*
    prod  := unary (("*" | "/" | "%") unary)*
    unary := "-" unary | atom
    atom  := number | "x" | "y" | "(" expr ")"
           | ("min" | "max" | "pow") "(" expr "," expr ")"
"""

import re
from dataclasses import dataclass
from typing import FrozenSet, List, NamedTuple, Union

from .errors import OpSpecSyntaxError, UnknownIdentifierError

VARIABLES = ('x', 'y')
INFIX_OPERATORS = ('+', '-', '*', '/', '%')
FUNCTION_OPERATORS = ('min', 'max', 'pow')

PRECEDENCE = {'+': 1, '-': 1, '*': 2, '/': 2, '%': 2}


@dataclass(frozen=True, eq=False)
class Num:
    value: Union[int, float]

    # 1 and 1.0 are different literals
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Num):
            return NotImplemented
        return type(self.value) is type(other.value) and self.value == other.value

    def __hash__(self) -> int:
        return hash((type(self.value).__name__, self.value))


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: 'OpExpr'


@dataclass(frozen=True)
class BinOp:
    op: str
    left: 'OpExpr'
    right: 'OpExpr'


OpExpr = Union[Num, Var, Neg, BinOp]


class Token(NamedTuple):
    kind: str       # 'number' | 'name' | 'op' | 'end'
    text: str
    column: int


_TOKEN_PATTERN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/%(),])
""", re.VERBOSE)


def tokenize(text: str, line: int = 1, column_offset: int = 0) -> List[Token]:
    """
    Pecah teks expression menjadi token

    Raises:
        OpSpecSyntaxError: karakter yang tidak dikenal
    """
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise OpSpecSyntaxError(
                f"unexpected character {text[position]!r}",
                line=line, column=column_offset + position + 1
            )
        kind = match.lastgroup
        if kind != 'ws':
            tokens.append(Token(kind, match.group(), column_offset + position + 1))
        position = match.end()
    tokens.append(Token('end', '', column_offset + len(text) + 1))
    return tokens


class ExpressionParser:
    """Recursive-descent parser, satu method per rule grammar"""

    def __init__(self, text: str, line: int = 1, column_offset: int = 0):
        self.line = line
        self.tokens = tokenize(text, line, column_offset)
        self.position = 0

    # Token helpers

    def _peek(self) -> Token:
        return self.tokens[self.position]

    def _advance(self) -> Token:
        token = self.tokens[self.position]
        self.position += 1
        return token

    def _error(self, message: str, token: Token) -> OpSpecSyntaxError:
        return OpSpecSyntaxError(message, line=self.line, column=token.column)

    def _expect(self, text: str) -> Token:
        token = self._peek()
        if token.text != text or token.kind == 'end':
            found = token.text or 'end of expression'
            raise self._error(f"expected {text!r}, found {found!r}", token)
        return self._advance()

    # Grammar rules

    def parse(self) -> OpExpr:
        if self._peek().kind == 'end':
            raise self._error("empty expression", self._peek())
        expr = self._sum()
        token = self._peek()
        if token.kind != 'end':
            raise self._error(f"unexpected {token.text!r}", token)
        return expr

    def _sum(self) -> OpExpr:
        left = self._prod()
        while self._peek().kind == 'op' and self._peek().text in ('+', '-'):
            op = self._advance().text
            left = BinOp(op, left, self._prod())
        return left

    def _prod(self) -> OpExpr:
        left = self._unary()
        while self._peek().kind == 'op' and self._peek().text in ('*', '/', '%'):
            op = self._advance().text
            left = BinOp(op, left, self._unary())
        return left

    def _unary(self) -> OpExpr:
        if self._peek().kind == 'op' and self._peek().text == '-':
            self._advance()
            return Neg(self._unary())
        return self._atom()

    def _atom(self) -> OpExpr:
        token = self._peek()
        if token.kind == 'number':
            self._advance()
            return Num(_number_value(token.text))
        if token.kind == 'name':
            return self._name(token)
        if token.kind == 'op' and token.text == '(':
            self._advance()
            expr = self._sum()
            self._expect(')')
            return expr
        found = token.text or 'end of expression'
        raise self._error(f"unexpected {found!r}", token)

    def _name(self, token: Token) -> OpExpr:
        self._advance()
        name = token.text
        if name in FUNCTION_OPERATORS:
            self._expect('(')
            left = self._sum()
            self._expect(',')
            right = self._sum()
            self._expect(')')
            return BinOp(name, left, right)
        if name in VARIABLES:
            return Var(name)
        if self._peek().text == '(':
            raise UnknownIdentifierError(
                f"unknown function {name}", line=self.line, column=token.column
            )
        raise UnknownIdentifierError(
            f"unknown variable {name}", line=self.line, column=token.column
        )


def _number_value(text: str) -> Union[int, float]:
    if any(ch in text for ch in '.eE'):
        return float(text)
    return int(text)


def parse_expr(text: str, line: int = 1, column_offset: int = 0) -> OpExpr:
    """
    Parse satu expression operator

    Args:
        text: Source expression, misalnya "max(x, y) + 1"
        line: Nomor baris untuk pesan error
        column_offset: Offset kolom teks di dalam baris

    Returns:
        AST expression
    """
    return ExpressionParser(text, line, column_offset).parse()


def print_expr(expr: OpExpr) -> str:
    """Print AST dengan parentheses minimal; parse(print(e)) == e"""
    if isinstance(expr, Num):
        return repr(expr.value) if isinstance(expr.value, float) else str(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Neg):
        inner = print_expr(expr.operand)
        if _is_infix(expr.operand):
            inner = f"({inner})"
        return f"-{inner}"
    if expr.op in FUNCTION_OPERATORS:
        return f"{expr.op}({print_expr(expr.left)}, {print_expr(expr.right)})"

    level = PRECEDENCE[expr.op]
    left = print_expr(expr.left)
    if _is_infix(expr.left) and PRECEDENCE[expr.left.op] < level:
        left = f"({left})"
    right = print_expr(expr.right)
    # left-associative: equal precedence on the right needs parentheses
    if _is_infix(expr.right) and PRECEDENCE[expr.right.op] <= level:
        right = f"({right})"
    return f"{left} {expr.op} {right}"


def _is_infix(expr: OpExpr) -> bool:
    return isinstance(expr, BinOp) and expr.op in PRECEDENCE


def free_variables(expr: OpExpr) -> FrozenSet[str]:
    if isinstance(expr, Num):
        return frozenset()
    if isinstance(expr, Var):
        return frozenset((expr.name,))
    if isinstance(expr, Neg):
        return free_variables(expr.operand)
    return free_variables(expr.left) | free_variables(expr.right)
