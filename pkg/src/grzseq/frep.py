"""Canonical representation of naturals by towers of fast-growing functions.

A number x >= k (k >= 2 the base) decomposes uniquely as

    x = F_{e_l}^(c_l)( ... F_{e_1}^(c_1)(k) ... )

with strictly decreasing exponents e_1 > ... > e_l >= 0, written
``[(e_1,c_1),...,(e_l,c_l)]_k``.  Numbers below the base are atoms, and the
base itself is the degenerate ``[(0,0)]_k``.  The module provides the codec
(encode/decode), the order-isomorphic comparison, base-shift (exponents
re-encoded at the new base, hereditarily), the fully hereditary variant in
which counts shift as well, validation, and the text/JSON interchange forms.

Everything is cutoff-aware: a decode or shift whose value would exceed the
cap reports ExceedsCap instead of computing it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .grzeval import BoundedNat, Exact, ExceedsCap, _iter, exceeds
from .order import Ordering

Pairs = tuple[tuple[int, int], ...]


class RepError(ValueError):
    """A structurally broken representation."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at offset {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class FRep:
    """Representation with plain integer exponents and counts.

    ``body`` is an int (atom, value below the base) or a tuple of
    (exponent, count) pairs.
    """

    base: int
    body: int | Pairs

    def __post_init__(self):
        if not isinstance(self.base, int) or self.base < 2:
            raise RepError(f"base must be an integer >= 2, got {self.base!r}")

    @property
    def is_atom(self) -> bool:
        return isinstance(self.body, int)

    @property
    def pairs(self) -> Pairs:
        if self.is_atom:
            raise RepError("atom has no pairs")
        return self.body  # type: ignore[return-value]

    def __str__(self) -> str:
        return print_rep(self)


@dataclass(frozen=True)
class TRep:
    """Hereditary representation: exponents and counts are themselves TReps."""

    base: int
    body: int | tuple[tuple["TRep", "TRep"], ...]

    def __post_init__(self):
        if not isinstance(self.base, int) or self.base < 2:
            raise RepError(f"base must be an integer >= 2, got {self.base!r}")

    @property
    def is_atom(self) -> bool:
        return isinstance(self.body, int)

    @property
    def pairs(self) -> tuple[tuple["TRep", "TRep"], ...]:
        if self.is_atom:
            raise RepError("atom has no pairs")
        return self.body  # type: ignore[return-value]

    def __str__(self) -> str:
        return print_rep(self)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


# ---------------------------------------------------------------------------
# Encoding


def _least_exponent(x: int, base: int) -> int:
    # least e with x < F_{e+1}(base); terminates since F_e(base) >= base + e
    e = 0
    while not exceeds(e + 1, 1, base, x):
        e += 1
    return e


def _max_iterate(e: int, base: int, x: int) -> int:
    # largest i with F_e^(i)(base) <= x, given F_e(base) <= x; gallop + bisect
    lo, hi = 1, 2
    while not exceeds(e, hi, base, x):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if exceeds(e, mid, base, x):
            hi = mid
        else:
            lo = mid
    return lo


def encode(x: int, k: int) -> FRep:
    """The unique representation of x with base k (greedy tower search)."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"base must be an integer >= 2, got {k!r}")
    if not isinstance(x, int) or x < 0:
        raise ValueError(f"value must be a non-negative integer, got {x!r}")
    if x < k:
        return FRep(k, x)
    if x == k:
        return FRep(k, ((0, 0),))
    pairs = []
    base = k
    while x > base:
        e = _least_exponent(x, base)
        i = _max_iterate(e, base, x)
        pairs.append((e, i))
        nxt = _iter(e, i, base, x)
        assert nxt is not None  # bounded by x by choice of i
        base = nxt
    return FRep(k, tuple(pairs))


# ---------------------------------------------------------------------------
# Decoding


def _check_shape(r: FRep) -> None:
    if r.is_atom:
        v = r.body
        if not isinstance(v, int) or not 0 <= v < r.base:
            raise RepError(f"atom value {v!r} not in [0, base {r.base})")
        return
    pairs = r.body
    if not isinstance(pairs, tuple) or len(pairs) == 0:
        raise RepError("pair list must be non-empty")
    prev = None
    for e, c in pairs:
        if not isinstance(e, int) or not isinstance(c, int) or e < 0 or c < 0:
            raise RepError(f"pair ({e!r},{c!r}) must hold non-negative integers")
        if prev is not None and e >= prev:
            raise RepError(f"exponents not strictly decreasing at {e}")
        prev = e


def decode(r: FRep, cap: int) -> BoundedNat:
    """Fold the tower back into a number, cutoff-aware.

    Requires the shape invariants (atom below base, strictly decreasing
    exponents); the deeper canonicity constraints are ``validate``'s job.
    """
    _check_shape(r)
    if r.is_atom:
        v = r.body
        return Exact(v) if v <= cap else ExceedsCap(cap)
    y = r.base
    for e, c in r.pairs:
        y = _iter(e, c, y, cap)
        if y is None:
            return ExceedsCap(cap)
    return Exact(y)


# ---------------------------------------------------------------------------
# Comparison: lexicographic on pairs, strict prefix smaller.  This matches
# numeric order of the represented values (same base required).


def compare(a: FRep, b: FRep) -> Ordering:
    if a.base != b.base:
        raise ValueError(f"cannot compare representations with bases {a.base} and {b.base}")
    if a.is_atom and b.is_atom:
        return Ordering.from_cmp((a.body > b.body) - (a.body < b.body))
    if a.is_atom:
        return Ordering.LT  # atoms are below the base, pair forms are >= base
    if b.is_atom:
        return Ordering.GT
    pa, pb = a.body, b.body
    if pa == pb:
        return Ordering.EQ
    return Ordering.LT if pa < pb else Ordering.GT


# ---------------------------------------------------------------------------
# Base shift.  Exponent values are re-encoded at the old base and shifted
# recursively; counts stay put (the hereditary variant below shifts both).
# Internal workers use int-or-None with None meaning "exceeds cap"; any
# oversized component forces the total over the cap because the folded value
# dominates every exponent and count that occurs with a positive count.


def _shift_component(v: int, k: int, m: int, cap: int, hereditary: bool) -> int | None:
    if v < k:
        return v
    r = encode(v, k)
    y = m
    for e, c in r.pairs:
        e2 = _shift_component(e, k, m, cap, hereditary)
        if e2 is None:
            return None
        c2 = _shift_component(c, k, m, cap, hereditary) if hereditary else c
        if c2 is None:
            return None
        y = _iter(e2, c2, y, cap)
        if y is None:
            return None
    return y


def _shift_pre(x: int, k: int, m: int) -> None:
    if not (isinstance(k, int) and isinstance(m, int) and 2 <= k <= m):
        raise ValueError(f"need 2 <= from-base <= to-base, got {k!r}, {m!r}")
    if not isinstance(x, int) or x < 0:
        raise ValueError(f"value must be a non-negative integer, got {x!r}")


def shift_value(x: int, k: int, m: int, cap: int) -> BoundedNat:
    """Value of x with base k re-read at base m (exponents shifted, counts kept).

    Values below the base shift to themselves.
    """
    _shift_pre(x, k, m)
    v = _shift_component(x, k, m, cap, hereditary=False)
    return Exact(v) if v is not None else ExceedsCap(cap)


def shift_total_value(x: int, k: int, m: int, cap: int) -> BoundedNat:
    """Hereditary base shift: counts are shifted along with the exponents."""
    _shift_pre(x, k, m)
    v = _shift_component(x, k, m, cap, hereditary=True)
    return Exact(v) if v is not None else ExceedsCap(cap)


# ---------------------------------------------------------------------------
# Validation.  The full invariants, including count bounds against the
# intermediate-base chain k_1 = base, k_{p+1} = F_{e_p}^(c_p)(k_p), which is
# astronomically large in general and therefore only ever probed under a cap.


def validate(r: FRep) -> ValidationReport:
    violations: list[str] = []
    if r.is_atom:
        v = r.body
        if not 0 <= v < r.base:
            violations.append(f"atom value {v} not in [0, base {r.base})")
        return ValidationReport(not violations, tuple(violations))

    pairs = r.body
    if len(pairs) == 0:
        return ValidationReport(False, ("pair list is empty",))
    is_degenerate = pairs == ((0, 0),)
    prev = None
    for p, (e, c) in enumerate(pairs, start=1):
        if e < 0 or c < 0:
            violations.append(f"pair {p} holds a negative component")
        if prev is not None and e >= prev:
            violations.append(f"exponents not strictly decreasing at pair {p}")
        prev = e
        if c == 0 and not is_degenerate:
            violations.append(f"count 0 at pair {p} (only the bare-base [(0,0)] may carry it)")

    # count bounds: c_p < k_p, probed with the running maximum count as cap
    maxc = max(c for _, c in pairs)
    chain: int | None = r.base
    for p, (e, c) in enumerate(pairs, start=1):
        if chain is not None:
            if c >= chain:
                violations.append(f"count {c} at pair {p} not below intermediate base {chain}")
            chain = _iter(e, c, chain, maxc)
            # once the chain passes every count, all later bounds hold
    return ValidationReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# Hereditary (total) representation


def to_total(x: int, k: int) -> TRep:
    """Represent x with both exponents and counts recursively represented."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"base must be an integer >= 2, got {k!r}")
    if not isinstance(x, int) or x < 0:
        raise ValueError(f"value must be a non-negative integer, got {x!r}")
    if x < k:
        return TRep(k, x)
    r = encode(x, k)
    return TRep(k, tuple((to_total(e, k), to_total(c, k)) for e, c in r.pairs))


def _decode_total(t: TRep, cap: int) -> int | None:
    if t.is_atom:
        v = t.body
        if not 0 <= v < t.base:
            raise RepError(f"atom value {v!r} not in [0, base {t.base})")
        return v if v <= cap else None
    y = t.base
    for e, c in t.pairs:
        ev = _decode_total(e, cap)
        if ev is None:
            return None
        cv = _decode_total(c, cap)
        if cv is None:
            return None
        y = _iter(ev, cv, y, cap)
        if y is None:
            return None
    return y


def decode_total(t: TRep, cap: int) -> BoundedNat:
    v = _decode_total(t, cap)
    return Exact(v) if v is not None else ExceedsCap(cap)


# ---------------------------------------------------------------------------
# Text form.  Grammar:
#   rep  ::= NAT | "[" pair ("," pair)* "]_" NAT
#   pair ::= "(" item "," item ")"
#   item ::= NAT | rep          (nested bracket items make the rep hereditary)


def print_rep(r: FRep | TRep) -> str:
    if r.is_atom:
        return str(r.body)
    items = []
    for e, c in r.pairs:
        es = print_rep(e) if isinstance(e, TRep) else str(e)
        cs = print_rep(c) if isinstance(c, TRep) else str(c)
        items.append(f"({es},{cs})")
    return "[" + ",".join(items) + "]_" + str(r.base)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, lit: str):
        self.skip_ws()
        if not self.text.startswith(lit, self.pos):
            raise ParseError(f"expected {lit!r}", self.pos)
        self.pos += len(lit)

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        return int(self.text[start : self.pos])


def _parse_item(s: _Scanner):
    # returns int or (pairs, base) raw tree
    if s.peek() == "[":
        return _parse_bracket(s)
    return s.nat()


def _parse_bracket(s: _Scanner):
    s.expect("[")
    pairs = []
    while True:
        s.expect("(")
        e = _parse_item(s)
        s.expect(",")
        c = _parse_item(s)
        s.expect(")")
        pairs.append((e, c))
        if s.peek() == ",":
            s.expect(",")
            continue
        break
    s.expect("]_")
    base = s.nat()
    return pairs, base


def _raw_is_flat(raw) -> bool:
    pairs, _ = raw
    return all(isinstance(e, int) and isinstance(c, int) for e, c in pairs)


def _raw_to_trep(raw, fallback_base: int | None = None) -> TRep:
    if isinstance(raw, int):
        base = fallback_base if fallback_base is not None else max(2, raw + 1)
        return TRep(base, raw)
    pairs, base = raw
    return TRep(base, tuple((_raw_to_trep(e, base), _raw_to_trep(c, base)) for e, c in pairs))


def parse_rep(text: str, base: int | None = None) -> FRep | TRep:
    """Parse the bracket grammar.

    A bare number parses as an atom; its base comes from the ``base``
    argument when given, else the smallest legal one.  Bracketed forms carry
    their base in the ``]_k`` suffix.  The result is an FRep when every item
    is a plain number and a TRep when any item nests.
    """
    s = _Scanner(text)
    s.skip_ws()
    if s.peek() == "[":
        raw = _parse_bracket(s)
        s.skip_ws()
        if s.pos != len(s.text):
            raise ParseError("trailing input", s.pos)
        if _raw_is_flat(raw):
            pairs, b = raw
            return FRep(b, tuple(pairs))
        return _raw_to_trep(raw)
    v = s.nat()
    s.skip_ws()
    if s.pos != len(s.text):
        raise ParseError("trailing input", s.pos)
    b = base if base is not None else max(2, v + 1)
    if v >= b:
        raise ParseError(f"atom {v} not below base {b}", 0)
    return FRep(b, v)


# ---------------------------------------------------------------------------
# JSON form.  Big integers travel as decimal strings; hereditary components
# nest objects in place of strings.


def _component_to_json(v):
    # plain numbers (and hereditary atoms) travel as decimal strings,
    # nested pair-forms as objects
    if isinstance(v, int):
        return str(v)
    if v.is_atom:
        return str(v.body)
    return rep_to_json(v)


def rep_to_json(r: FRep | TRep) -> dict:
    if r.is_atom:
        return {"base": str(r.base), "atom": str(r.body)}
    return {
        "base": str(r.base),
        "pairs": [[_component_to_json(e), _component_to_json(c)] for e, c in r.pairs],
    }


def _component_from_json(obj, base: int) -> int | TRep:
    if isinstance(obj, str):
        return int(obj)
    nested = rep_from_json(obj)
    if isinstance(nested, FRep):  # flat numbers inside, still a hereditary node
        return TRep(nested.base, nested.body if nested.is_atom else tuple(
            (TRep(nested.base, e), TRep(nested.base, c)) for e, c in nested.pairs))
    return nested


def rep_from_json(text_or_obj) -> FRep | TRep:
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    base = int(obj["base"])
    if "atom" in obj:
        return FRep(base, int(obj["atom"]))
    comps = [(_component_from_json(e, base), _component_from_json(c, base))
             for e, c in obj["pairs"]]
    if all(isinstance(e, int) and isinstance(c, int) for e, c in comps):
        return FRep(base, tuple(comps))

    def lift(v) -> TRep:
        return TRep(base, v) if isinstance(v, int) else v

    return TRep(base, tuple((lift(e), lift(c)) for e, c in comps))
