"""Text format for Weyl algebra elements.

Grammar (whitespace between tokens is ignored, "*" is mandatory):

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" uint)?
    atom   := "(" expr ")" | var | uint | uint "/" uint
    var    := "x" | "d"            (only when n = 1)
            | "x" uint | "d" uint  (1-based index <= n)

Products are evaluated in the written order, so "d*x" is x*d + 1. Over F_p
integer literals are reduced mod p and fraction literals are rejected.
"""

import logging
from typing import Any

from lark import Lark, Token, Transformer, Tree
from lark.exceptions import UnexpectedInput, VisitError

from .errors import NegativeExponent, OperatorSyntaxError, UnknownVariable, WeylError
from .exact_arith import QQ, CoefficientDomain, Prime, domain_for
from .weyl_core import MonomialKey, WeylElement

logger = logging.getLogger(__name__)

GRAMMAR = r"""
    start: sum

    sum: first_term (addop term)*
    first_term: neg? term
    term: factor ("*" factor)*
    factor: atom ("^" exponent)?
    exponent: neg? INT

    ?atom: "(" sum ")"  -> group
         | VAR          -> var
         | INT "/" INT  -> fraction
         | INT          -> integer

    !addop: "+" | "-"
    !neg: "-"

    VAR: /[xd][0-9]*/

    %import common.INT
    %import common.WS
    %ignore WS
"""

_parser = Lark(GRAMMAR, parser="lalr")

# AST produced by the grammar above
OpExpr = Tree


class _Evaluator(Transformer):
    """Evaluates an operator AST inside A_n over a coefficient domain."""

    def __init__(self, nvars: int, domain: CoefficientDomain):
        super().__init__()
        self.nvars = nvars
        self.domain = domain

    def start(self, items: list[Any]) -> WeylElement:
        return items[0]

    def sum(self, items: list[Any]) -> WeylElement:
        total = items[0]
        for op, term in zip(items[1::2], items[2::2]):
            total = total + term if op == "+" else total - term
        return total

    def first_term(self, items: list[Any]) -> WeylElement:
        if len(items) == 2:
            return -items[1]
        return items[0]

    def term(self, factors: list[WeylElement]) -> WeylElement:
        product = factors[0]
        for factor in factors[1:]:
            product = product * factor
        return product

    def factor(self, items: list[Any]) -> WeylElement:
        if len(items) == 1:
            return items[0]
        return items[0] ** items[1]

    def exponent(self, items: list[Any]) -> int:
        if len(items) == 2:
            raise NegativeExponent(f"negative exponent -{items[1]}")
        return int(items[0])

    def addop(self, items: list[Token]) -> str:
        return str(items[0])

    def neg(self, items: list[Token]) -> str:
        return "-"

    def group(self, items: list[Any]) -> WeylElement:
        return items[0]

    def var(self, items: list[Token]) -> WeylElement:
        name = str(items[0])
        letter, digits = name[0], name[1:]
        if not digits:
            if self.nvars != 1:
                raise UnknownVariable(
                    f"{name!r} is ambiguous in {self.nvars} variables;"
                    f" use {letter}1..{letter}{self.nvars}"
                )
            index = 1
        else:
            index = int(digits)
            if not 1 <= index <= self.nvars:
                raise UnknownVariable(f"unknown variable {name!r} (n = {self.nvars})")
        if letter == "x":
            return WeylElement.x(index, self.nvars, self.domain)
        return WeylElement.d(index, self.nvars, self.domain)

    def integer(self, items: list[Token]) -> WeylElement:
        return WeylElement.scalar(self.domain.literal(int(items[0])), self.nvars, self.domain)

    def fraction(self, items: list[Token]) -> WeylElement:
        value = self.domain.literal(int(items[0]), int(items[1]))
        return WeylElement.scalar(value, self.nvars, self.domain)


def parse_ast(text: str) -> OpExpr:
    """Parse text into its syntax tree without evaluating it."""
    try:
        return _parser.parse(text)
    except UnexpectedInput as e:
        expected = getattr(e, "expected", None) or getattr(e, "allowed", None) or []
        position = e.pos_in_stream
        if position is None or position < 0:
            position = len(text)
        raise OperatorSyntaxError(text, position, list(expected)) from None


def parse(
    text: str,
    nvars: int = 1,
    domain: "CoefficientDomain | Prime | int | None" = None,
) -> WeylElement:
    """Parse an operator expression into normal form.

    ``domain`` is a coefficient domain, a prime (meaning F_p) or None (QQ).
    """
    if not isinstance(domain, CoefficientDomain):
        domain = domain_for(domain) if domain is not None else QQ
    tree = parse_ast(text)
    try:
        element = _Evaluator(nvars, domain).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, WeylError):
            raise e.orig_exc from None
        raise
    logger.debug(f"Parsed {text!r} in A_{nvars}({domain}) -> {element}")
    return element


def format_monomial(key: MonomialKey) -> str:
    """Text of a monomial without coefficient; empty for the unit monomial."""
    indexed = key.nvars > 1
    factors = []
    for letter, exps in (("x", key.xexp), ("d", key.dexp)):
        for i, e in enumerate(exps, start=1):
            if e == 0:
                continue
            name = f"{letter}{i}" if indexed else letter
            factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors)


def format_element(a: WeylElement) -> str:
    """Canonical text of an element, monomials in descending graded-lex order."""
    if a.is_zero():
        return "0"
    out = []
    for key, c in a.items():
        magnitude = a.domain.format(c)
        mono = format_monomial(key)
        if not mono:
            text = magnitude
        elif magnitude == "1":
            text = mono
        else:
            text = f"{magnitude}*{mono}"
        negative = a.domain.is_negative(c)
        if not out:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(out)


# The name used by the command line and the documentation
print_element = format_element
