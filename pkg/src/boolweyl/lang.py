"""Proposition and operator language: lexer, parser, valuations, entailment.

Core grammar (products bind tighter than sums; products associate left;
juxtaposition and '.' both denote the product):

    expr    := term ('+' term)*
    term    := factor (('.')? factor)*
    factor  := '0' | '1' | IDENT | '~' IDENT | MONO | '(' expr ')'

'~a' is the tilde-marked (operator) copy of the variable a.  MONO is a
coefficient-monomial literal such as x{1,2}, m{}, y{1} or s{2}: one of
the letters m x w y s immediately followed by a braced list of 1-based
indices.  Juxtaposed monomial literals multiply like any other factors,
so operator dumps like "x{1,2}y{1} + y{2}" read back directly.

On top of the core grammar, the classical connectives are accepted as
sugar and expand at parse time ('!' binds tightest, then products, '+',
'|', '->' loosest):

    !p      ->  p + 1
    p & q   ->  p q
    p | q   ->  p + q + p q
    p -> q  ->  1 + p + p q

Valuations: a classical expression (no tilde variables, no y/s
literals) denotes a ring element; any expression denotes an operator,
with plain variables going to multiplication operators and tilde
variables to Boolean derivatives.  Equivalence and entailment are
decided on the operator matrices: equivalence is matrix equality,
classical entailment is pointwise order of truth functions, quantum
entailment of p by q is solvability of p-hat = q-hat * r over GF(2),
i.e. column-space containment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .bweyl import (
    OpCoeffs,
    convert_op_basis,
    op_add,
    op_identity,
    op_monomial,
    op_mul,
    op_zero,
    to_matrix,
)
from .gf2lin import Gf2Matrix, colspace_contains, solve_right
from .ring import (
    RingElem,
    check_dim,
    convert_ring_basis,
    mask_from_indices,
    ring_add,
    ring_monomial,
    ring_mul,
    ring_one,
    ring_zero,
)


class LangError(ValueError):
    """Base for lexing, parsing and valuation errors."""


class LexError(LangError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ParseError(LangError):
    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} at offset {pos}")
        self.pos = pos


class EvalError(LangError):
    pass


# --- expression trees ---------------------------------------------------------


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class TildeVar:
    name: str


@dataclass(frozen=True)
class Mono:
    kind: str  # one of m x w y s
    indices: tuple[int, ...]  # sorted 1-based


@dataclass(frozen=True)
class Sum:
    parts: tuple["Expr", ...]


@dataclass(frozen=True)
class Prod:
    parts: tuple["Expr", ...]


Expr = Union[Zero, One, Var, TildeVar, Mono, Sum, Prod]


def make_sum(parts: Sequence[Expr]) -> Expr:
    if not parts:
        return Zero()
    if len(parts) == 1:
        return parts[0]
    return Sum(tuple(parts))


def make_prod(parts: Sequence[Expr]) -> Expr:
    if not parts:
        return One()
    if len(parts) == 1:
        return parts[0]
    return Prod(tuple(parts))


# --- lexer --------------------------------------------------------------------

MONO_LETTERS = "mxwys"

_SIMPLE_TOKENS = {
    "+": "PLUS",
    ".": "DOT",
    "&": "AMP",
    "|": "PIPE",
    "!": "BANG",
    "~": "TILDE",
    "(": "LPAREN",
    ")": "RPAREN",
    "0": "ZERO",
    "1": "ONE",
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int
    value: tuple[str, tuple[int, ...]] | None = None


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_"


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


def tokenize(src: str) -> list[Token]:
    """Token stream for the expression grammar; whitespace separates."""
    tokens: list[Token] = []
    i = 0
    length = len(src)
    while i < length:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "-":
            if i + 1 < length and src[i + 1] == ">":
                tokens.append(Token("ARROW", "->", i))
                i += 2
                continue
            raise LexError("illegal character '-'", i)
        if ch in _SIMPLE_TOKENS:
            tokens.append(Token(_SIMPLE_TOKENS[ch], ch, i))
            i += 1
            continue
        if _is_ident_start(ch):
            start = i
            while i < length and _is_ident_char(src[i]):
                i += 1
            ident = src[start:i]
            if (
                len(ident) == 1
                and ident in MONO_LETTERS
                and i < length
                and src[i] == "{"
            ):
                close = src.find("}", i + 1)
                if close < 0:
                    raise LexError("unterminated set literal", i)
                body = src[i + 1 : close]
                indices: list[int] = []
                if body:
                    for item in body.split(","):
                        item = item.strip()
                        if not item.isdigit():
                            raise LexError(f"bad set element {item!r}", i + 1)
                        value = int(item)
                        if value < 1:
                            raise LexError("set elements are 1-based", i + 1)
                        indices.append(value)
                tokens.append(
                    Token(
                        "MONO",
                        src[start : close + 1],
                        start,
                        (ident, tuple(sorted(set(indices)))),
                    )
                )
                i = close + 1
                continue
            tokens.append(Token("IDENT", ident, start))
            continue
        raise LexError(f"illegal character {ch!r}", i)
    tokens.append(Token("EOF", "", length))
    return tokens


# --- parser -------------------------------------------------------------------

_FACTOR_STARTS = frozenset(
    {"ZERO", "ONE", "IDENT", "TILDE", "MONO", "LPAREN", "BANG"}
)


class _Parser:
    def __init__(self, tokens: Sequence[Token]) -> None:
        self.tokens = list(tokens)
        if not self.tokens or self.tokens[-1].kind != "EOF":
            self.tokens.append(Token("EOF", "", self.tokens[-1].pos if self.tokens else 0))
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.kind}", tok.pos)
        return self.next()

    def parse_expr(self) -> Expr:
        left = self.parse_or()
        if self.peek().kind == "ARROW":
            self.next()
            right = self.parse_expr()  # right assoc
            return make_sum([One(), left, make_prod([left, right])])
        return left

    def parse_or(self) -> Expr:
        acc = self.parse_sum()
        while self.peek().kind == "PIPE":
            self.next()
            rhs = self.parse_sum()
            acc = make_sum([acc, rhs, make_prod([acc, rhs])])
        return acc

    def parse_sum(self) -> Expr:
        parts = [self.parse_term()]
        while self.peek().kind == "PLUS":
            self.next()
            parts.append(self.parse_term())
        return make_sum(parts)

    def parse_term(self) -> Expr:
        parts = [self.parse_unary()]
        while True:
            kind = self.peek().kind
            if kind in ("DOT", "AMP"):
                self.next()
                parts.append(self.parse_unary())
            elif kind in _FACTOR_STARTS:
                parts.append(self.parse_unary())
            else:
                return make_prod(parts)

    def parse_unary(self) -> Expr:
        if self.peek().kind == "BANG":
            self.next()
            return make_sum([self.parse_unary(), One()])
        return self.parse_factor()

    def parse_factor(self) -> Expr:
        tok = self.next()
        if tok.kind == "ZERO":
            return Zero()
        if tok.kind == "ONE":
            return One()
        if tok.kind == "IDENT":
            return Var(tok.text)
        if tok.kind == "TILDE":
            name = self.expect("IDENT")
            return TildeVar(name.text)
        if tok.kind == "MONO":
            assert tok.value is not None
            return Mono(tok.value[0], tok.value[1])
        if tok.kind == "LPAREN":
            inner = self.parse_expr()
            self.expect("RPAREN")
            return inner
        raise ParseError(f"unexpected token {tok.kind}", tok.pos)


def parse(tokens: Sequence[Token]) -> Expr:
    """Parse a token stream into an expression tree."""
    parser = _Parser(tokens)
    expr = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "EOF":
        raise ParseError(f"unexpected token {tail.kind}", tail.pos)
    return expr


def parse_text(src: str) -> Expr:
    return parse(tokenize(src))


def format_expr(e: Expr) -> str:
    """Canonical text; parses back to an equal tree."""
    if isinstance(e, Zero):
        return "0"
    if isinstance(e, One):
        return "1"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, TildeVar):
        return "~" + e.name
    if isinstance(e, Mono):
        return e.kind + "{%s}" % ",".join(str(i) for i in e.indices)
    if isinstance(e, Sum):
        return " + ".join(
            f"({format_expr(p)})" if isinstance(p, Sum) else format_expr(p)
            for p in e.parts
        )
    if isinstance(e, Prod):
        return " ".join(
            f"({format_expr(p)})" if isinstance(p, (Sum, Prod)) else format_expr(p)
            for p in e.parts
        )
    raise TypeError(f"not an expression: {e!r}")


# --- contexts -----------------------------------------------------------------


@dataclass(frozen=True)
class VarContext:
    """Ordered variable names; position i (1-based) is the i-th coordinate."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        check_dim(len(self.names))

    @property
    def n(self) -> int:
        return len(self.names)

    def position(self, name: str) -> int:
        try:
            return self.names.index(name) + 1
        except ValueError:
            raise EvalError(f"unknown variable {name!r}") from None


def _walk(e: Expr):
    yield e
    if isinstance(e, (Sum, Prod)):
        for p in e.parts:
            yield from _walk(p)


def infer_context(exprs: Iterable[Expr], n: int | None = None) -> VarContext:
    """Context from first-occurrence order of variables.

    The dimension grows to cover the largest monomial-literal index;
    padding positions get fresh names x<i>.
    """
    names: list[str] = []
    max_index = 0
    for e in exprs:
        for node in _walk(e):
            if isinstance(node, (Var, TildeVar)) and node.name not in names:
                names.append(node.name)
            elif isinstance(node, Mono) and node.indices:
                max_index = max(max_index, node.indices[-1])
    want = max(len(names), max_index, 1)
    if n is not None:
        if n < want:
            raise EvalError(f"explicit n={n} too small; expression needs n>={want}")
        want = n
    while len(names) < want:
        filler = f"x{len(names) + 1}"
        while filler in names:
            filler += "_"
        names.append(filler)
    return VarContext(tuple(names))


# --- valuations ---------------------------------------------------------------

_CLASSICAL_MONO = {"m": "M", "x": "X", "w": "W"}


def _mono_mask(mono: Mono, n: int) -> int:
    if mono.indices and mono.indices[-1] > n:
        raise EvalError(f"monomial index {mono.indices[-1]} out of range for n={n}")
    return mask_from_indices(mono.indices, n)


def eval_classical(e: Expr, ctx: VarContext) -> RingElem:
    """Truth-function valuation into the Boolean ring (X-basis result)."""
    n = ctx.n

    def go(node: Expr) -> RingElem:
        if isinstance(node, Zero):
            return ring_zero(n, "X")
        if isinstance(node, One):
            return ring_one(n, "X")
        if isinstance(node, Var):
            return ring_monomial("X", 1 << (ctx.position(node.name) - 1), n)
        if isinstance(node, TildeVar):
            raise EvalError("operator expression in classical context")
        if isinstance(node, Mono):
            kind = _CLASSICAL_MONO.get(node.kind)
            if kind is None:
                raise EvalError("operator expression in classical context")
            return ring_monomial(kind, _mono_mask(node, n), n)
        if isinstance(node, Sum):
            acc = ring_zero(n, "X")
            for p in node.parts:
                acc = ring_add(acc, go(p))
            return acc
        if isinstance(node, Prod):
            acc = ring_one(n, "X")
            for p in node.parts:
                acc = ring_mul(acc, go(p))
            return acc
        raise TypeError(f"not an expression: {node!r}")

    return convert_ring_basis(go(e), "X")


_QUANTUM_MONO_BASIS = {"m": "MY", "x": "XY", "w": "WY"}


def eval_quantum(e: Expr, ctx: VarContext) -> OpCoeffs:
    """Operator valuation: variables multiply, tilde variables derive.

    The result is expressed in the XY basis.
    """
    n = ctx.n

    def go(node: Expr) -> OpCoeffs:
        if isinstance(node, Zero):
            return op_zero(n, "XY")
        if isinstance(node, One):
            return op_identity(n, "XY")
        if isinstance(node, Var):
            return op_monomial(n, "XY", 1 << (ctx.position(node.name) - 1), 0)
        if isinstance(node, TildeVar):
            return op_monomial(n, "XY", 0, 1 << (ctx.position(node.name) - 1))
        if isinstance(node, Mono):
            mask = _mono_mask(node, n)
            if node.kind == "y":
                return op_monomial(n, "XY", 0, mask)
            if node.kind == "s":
                return op_monomial(n, "XS", 0, mask)
            return op_monomial(n, _QUANTUM_MONO_BASIS[node.kind], mask, 0)
        if isinstance(node, Sum):
            acc = op_zero(n, "XY")
            for p in node.parts:
                acc = op_add(acc, go(p))
            return acc
        if isinstance(node, Prod):
            acc = op_identity(n, "XY")
            for p in node.parts:
                acc = op_mul(acc, go(p))
            return acc
        raise TypeError(f"not an expression: {node!r}")

    return convert_op_basis(go(e), "XY")


def is_classical(e: Expr) -> bool:
    """True when the expression stays in the proposition language."""
    for node in _walk(e):
        if isinstance(node, TildeVar):
            return False
        if isinstance(node, Mono) and node.kind in ("y", "s"):
            return False
    return True


# --- equivalence and entailment -----------------------------------------------


def equivalent(p: Expr, q: Expr, ctx: VarContext) -> bool:
    """True iff both expressions denote the same operator."""
    return to_matrix(eval_quantum(p, ctx)) == to_matrix(eval_quantum(q, ctx))


def entails_classical(p: Expr, q: Expr, ctx: VarContext) -> bool:
    """True iff the truth function of p is pointwise below that of q."""
    pv = convert_ring_basis(eval_classical(p, ctx), "M").bits
    qv = convert_ring_basis(eval_classical(q, ctx), "M").bits
    return pv & ~qv == 0


def entails_quantum(p: Expr, q: Expr, ctx: VarContext) -> bool:
    """True iff p-hat = q-hat * r is solvable for some operator r."""
    s = to_matrix(eval_quantum(p, ctx))
    t = to_matrix(eval_quantum(q, ctx))
    return colspace_contains(t, s)


def entailment_witness(p: Expr, q: Expr, ctx: VarContext) -> Gf2Matrix | None:
    """A matrix r with q-hat * r = p-hat, or None when p is not entailed."""
    s = to_matrix(eval_quantum(p, ctx))
    t = to_matrix(eval_quantum(q, ctx))
    return solve_right(t, s)


# --- normalization ------------------------------------------------------------


def normalize(e: Expr, ctx: VarContext) -> Expr:
    """Canonical form: sum of ordered monomials in the XY valuation.

    Terms are emitted in decreasing order of their (left, right) index
    pair; inside a term, plain variables precede tilde variables, each
    in position order.  Idempotent, and equivalent to the input.
    """
    op = eval_quantum(e, ctx)
    terms = sorted(op.terms, reverse=True)
    if not terms:
        return Zero()
    parts: list[Expr] = []
    for a, b in terms:
        factors: list[Expr] = []
        for i in range(1, ctx.n + 1):
            if (a >> (i - 1)) & 1:
                factors.append(Var(ctx.names[i - 1]))
        for i in range(1, ctx.n + 1):
            if (b >> (i - 1)) & 1:
                factors.append(TildeVar(ctx.names[i - 1]))
        parts.append(make_prod(factors))
    return make_sum(parts)


# --- rewrite rules (each preserves the operator valuation) ---------------------

REWRITE_RULE_NAMES = (
    "assoc-prod",
    "assoc-sum",
    "comm-sum",
    "distrib",
    "unit-sum",
    "unit-prod",
    "nilpotent-sum",
    "idempotent-var",
    "nilpotent-tilde",
    "commute-vars",
    "commute-tildes",
    "commute-mixed",
    "twisted-commutation",
)


def rewrite_rule_instance(name: str, p: Expr, q: Expr, r: Expr, a: str, b: str):
    """A (lhs, rhs) pair instantiating one named rewrite relation.

    p, q, r are arbitrary subexpressions; a and b are distinct variable
    names used by the variable-level rules.
    """
    if name == "assoc-prod":
        return Prod((p, Prod((q, r)))), Prod((Prod((p, q)), r))
    if name == "assoc-sum":
        return Sum((Sum((p, q)), r)), Sum((p, Sum((q, r))))
    if name == "comm-sum":
        return Sum((p, q)), Sum((q, p))
    if name == "distrib":
        return Prod((p, Sum((q, r)))), Sum((Prod((p, q)), Prod((p, r))))
    if name == "unit-sum":
        return Sum((Zero(), p)), p
    if name == "unit-prod":
        return Prod((One(), p)), p
    if name == "nilpotent-sum":
        return Sum((p, p)), Zero()
    if name == "idempotent-var":
        return Prod((Var(a), Var(a))), Var(a)
    if name == "nilpotent-tilde":
        return Prod((TildeVar(a), TildeVar(a))), Zero()
    if name == "commute-vars":
        return Prod((Var(b), Var(a))), Prod((Var(a), Var(b)))
    if name == "commute-tildes":
        return Prod((TildeVar(b), TildeVar(a))), Prod((TildeVar(a), TildeVar(b)))
    if name == "commute-mixed":
        # distinct names only: same-name pairs obey the twisted rule instead
        return Prod((TildeVar(b), Var(a))), Prod((Var(a), TildeVar(b)))
    if name == "twisted-commutation":
        lhs = Prod((TildeVar(a), Var(a)))
        rhs = Sum((Prod((Var(a), TildeVar(a))), TildeVar(a), One()))
        return lhs, rhs
    raise ValueError(f"unknown rewrite rule {name!r}")
