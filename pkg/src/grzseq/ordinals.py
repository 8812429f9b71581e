"""Cantor normal form ordinal terms below epsilon_0.

An ordinal is a finite sum  w^{a_1} n_1 + ... + w^{a_m} n_m  with strictly
decreasing ordinal exponents and positive integer coefficients; the empty
sum is 0.  Construction normalizes nothing and validates everything, so an
``Ordinal`` in hand is always in normal form.

Supported arithmetic is what descending-chain bookkeeping needs: comparison,
addition, left multiplication by w^w, towers w_0 = 1, w_{n+1} = w^{w_n},
left subtraction of a single w, and the hereditary maximal-coefficient
measure C.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import total_ordering

from .order import Ordering


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    terms: tuple[tuple["Ordinal", int], ...] = ()

    def __post_init__(self):
        prev = None
        for e, c in self.terms:
            if not isinstance(e, Ordinal):
                raise ValueError(f"exponent {e!r} is not an Ordinal")
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"coefficient {c!r} must be a positive integer")
            if prev is not None and compare(prev, e) != Ordering.GT:
                raise ValueError("exponents must be strictly decreasing")
            prev = e

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    def as_int(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def __lt__(self, other: "Ordinal") -> bool:
        return compare(self, other) == Ordering.LT

    def __str__(self) -> str:
        return print_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal<{print_ordinal(self)}>"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def from_int(n: int) -> Ordinal:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"expected a non-negative integer, got {n!r}")
    return Ordinal(((ZERO, n),)) if n else ZERO


def omega_pow(e: Ordinal, coeff: int = 1) -> Ordinal:
    """w^e * coeff as a single-term ordinal."""
    return Ordinal(((e, coeff),))


def compare(a: Ordinal, b: Ordinal) -> Ordering:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        ec = compare(ea, eb)
        if ec != Ordering.EQ:
            return ec
        if ca != cb:
            return Ordering.LT if ca < cb else Ordering.GT
    la, lb = len(a.terms), len(b.terms)
    return Ordering.from_cmp((la > lb) - (la < lb))


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal addition: terms of a below b's leading exponent are absorbed."""
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    lead = b.terms[0][0]
    kept = []
    merged_head: tuple[Ordinal, int] | None = None
    for e, c in a.terms:
        rel = compare(e, lead)
        if rel == Ordering.GT:
            kept.append((e, c))
        elif rel == Ordering.EQ:
            merged_head = (lead, c + b.terms[0][1])
            break
        else:
            break
    if merged_head is not None:
        return Ordinal(tuple(kept) + (merged_head,) + b.terms[1:])
    return Ordinal(tuple(kept) + b.terms)


def coeff_measure(a: Ordinal) -> int:
    """C(a): the largest coefficient occurring hereditarily; C(0) = 0."""
    best = 0
    for e, c in a.terms:
        best = max(best, c, coeff_measure(e))
    return best


def mul_omega_omega(a: Ordinal) -> Ordinal:
    """w^w * a: every exponent gains a leading w (order-preserving)."""
    return Ordinal(tuple((add(OMEGA, e), c) for e, c in a.terms))


def omega_tower(n: int) -> Ordinal:
    """w_0 = 1 and w_{n+1} = w^{w_n}."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"tower height must be a non-negative integer, got {n!r}")
    t = ONE
    for _ in range(n):
        t = omega_pow(t)
    return t


def left_subtract_omega(e: Ordinal) -> Ordinal:
    """The unique b with w + b = e; requires e >= w."""
    if e.is_finite:
        raise ValueError(f"{e} is below w, nothing to subtract")
    (lead, c), rest = e.terms[0], e.terms[1:]
    if compare(lead, ONE) == Ordering.GT:
        return e  # the leading term already absorbs a left w
    # lead == ONE: peel one copy of w
    if c > 1:
        return Ordinal(((ONE, c - 1),) + rest)
    return Ordinal(rest)


# ---------------------------------------------------------------------------
# Text form.  Canonical printer output:
#   0                        for zero
#   terms joined by "+", finite term as a bare number,
#   infinite term as  w^(E)*c  with E printed recursively.
# The parser also accepts the sugar  w,  w*c,  w^w,  w^NAT,  and evaluates
# the "+" chain with ordinal addition, so any sum is accepted and normalized.


def print_ordinal(a: Ordinal) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero:
            parts.append(str(c))
        else:
            parts.append(f"w^({print_ordinal(e)})*{c}")
    return "+".join(parts)


class _OrdScanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, lit: str) -> bool:
        self.skip_ws()
        if self.text.startswith(lit, self.pos):
            self.pos += len(lit)
            return True
        return False

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ValueError(f"expected a number at offset {start} in {self.text!r}")
        return int(self.text[start : self.pos])


def _parse_term(s: _OrdScanner) -> Ordinal:
    if s.take("w"):
        exp = ONE
        if s.take("^"):
            if s.take("("):
                exp = _parse_sum(s)
                if not s.take(")"):
                    raise ValueError(f"missing ')' at offset {s.pos} in {s.text!r}")
            elif s.peek() == "w":
                s.take("w")
                exp = OMEGA  # w^w sugar
            else:
                exp = from_int(s.nat())
        coeff = s.nat() if s.take("*") else 1
        if coeff == 0:
            return ZERO
        return omega_pow(exp, coeff)
    return from_int(s.nat())


def _parse_sum(s: _OrdScanner) -> Ordinal:
    total = _parse_term(s)
    while s.take("+"):
        total = add(total, _parse_term(s))
    return total


def parse_ordinal(text: str) -> Ordinal:
    s = _OrdScanner(text)
    total = _parse_sum(s)
    s.skip_ws()
    if s.pos != len(s.text):
        raise ValueError(f"trailing input at offset {s.pos} in {text!r}")
    return total


def ordinal_to_json(a: Ordinal) -> list:
    return [[ordinal_to_json(e), str(c)] for e, c in a.terms]


def ordinal_from_json(obj) -> Ordinal:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return Ordinal(tuple((ordinal_from_json(e), int(c)) for e, c in obj))
