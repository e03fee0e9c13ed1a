"""Text syntax for step sets.

Grammar (whitespace between tokens is ignored, keywords are
case-insensitive)::

    spec     := term ("|" term)*
    term     := "all" | "even" | "odd" | "primes" | "fibonacci"
              | range | explicit
    range    := INT ".." [INT]
    explicit := "{" INT ("," INT)* "}"
    INT      := decimal integer >= 1

``a..`` is the open range of all steps >= a.
"""
from __future__ import annotations

from typing import Optional

from .steps import (ALL, EVEN, FIBONACCI, ODD, PRIMES, All, Even, Explicit,
                    Fibonacci, Odd, Primes, Range, StepSet, Union)

KEYWORDS = {
    "all": ALL,
    "even": EVEN,
    "odd": ODD,
    "primes": PRIMES,
    "fibonacci": FIBONACCI,
}


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected=()):
        self.message = message
        self.position = position
        self.expected = list(expected)
        super().__init__(f"{message} at position {position}")

    def caret(self, text: str) -> str:
        """The input with a marker under the offending position."""
        return f"{text}\n{' ' * self.position}^"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message, expected=(), pos=None):
        raise ParseError(message, self.pos if pos is None else pos, expected)

    def expect(self, token: str):
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
        else:
            self.fail(f"expected {token!r}", [repr(token)])

    def parse(self) -> StepSet:
        terms = [self.term()]
        while self.peek() == "|":
            self.pos += 1
            terms.append(self.term())
        if self.peek():
            self.fail(f"unexpected {self.text[self.pos]!r}", ["'|'", "end of input"])
        return terms[0] if len(terms) == 1 else Union(terms)

    def term(self) -> StepSet:
        ch = self.peek()
        if ch == "{":
            return self.explicit()
        if ch.isdigit() and ch.isascii():
            return self.range()
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.pos += 1
            word = self.text[start:self.pos]
            try:
                return KEYWORDS[word.lower()]
            except KeyError:
                self.fail(f"unknown keyword {word!r}", sorted(KEYWORDS), pos=start)
        self.fail("expected a step set" if ch else "unexpected end of input",
                  sorted(KEYWORDS) + ["integer", "'{'"])

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.text[start:start + 1] == "-":
            self.fail("step sizes must be positive", ["integer >= 1"])
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if self.pos == start:
            self.fail("expected an integer", ["integer >= 1"])
        value = int(self.text[start:self.pos])
        if value < 1:
            self.fail("step sizes must be positive", ["integer >= 1"], pos=start)
        return value

    def range(self) -> StepSet:
        lo = self.integer()
        self.skip_ws()
        self.expect("..")
        hi: Optional[int] = None
        ch = self.peek()
        if ch.isdigit() and ch.isascii() or ch == "-":
            hi_pos = self.pos
            hi = self.integer()
            if hi < lo:
                self.fail(f"empty range {lo}..{hi}", [f"integer >= {lo}"], pos=hi_pos)
        return Range(lo, hi)

    def explicit(self) -> StepSet:
        self.expect("{")
        if self.peek() == "}":
            self.fail("empty explicit set", ["integer >= 1"])
        values = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            values.append(self.integer())
        self.skip_ws()
        if self.peek() != "}":
            self.fail("expected ',' or '}'", ["','", "'}'"])
        self.pos += 1
        return Explicit(values)


def parse(text: str) -> StepSet:
    """Parse step-set syntax into a :class:`StepSet`; raises :class:`ParseError`."""
    if not isinstance(text, str):
        raise TypeError("parse() expects a str")
    return _Parser(text).parse()


def format(spec: StepSet) -> str:  # noqa: A001 - mirrors parse()
    """Canonical text for ``spec``."""
    if isinstance(spec, Union):
        return "|".join(format(m) for m in spec.members)
    if isinstance(spec, All):
        return "all"
    if isinstance(spec, Even):
        return "even"
    if isinstance(spec, Odd):
        return "odd"
    if isinstance(spec, Primes):
        return "primes"
    if isinstance(spec, Fibonacci):
        return "fibonacci"
    if isinstance(spec, Range):
        return f"{spec.lo}.." if spec.hi is None else f"{spec.lo}..{spec.hi}"
    if isinstance(spec, Explicit):
        return "{" + ",".join(str(v) for v in spec.values) + "}"
    raise TypeError(f"not a step set: {spec!r}")
