"""Bridges between numbers and ordinal terms.

For x >= k >= 2 with representation ``[(e_1,c_1),...,(e_l,c_l)]_k`` the
associated ordinal is

    o_k(x) = w^{code(e_1)} c_1 + ... + w^{code(e_l)} c_l

where ``code`` maps exponent values into ordinal exponents.  Two codings
ship:

* ``Coding.LITERAL``  - code(v) = v below the base and o_k(v) above it.
  This reading is *not* monotone (o_2(4) = w while o_2(9) = 2) and is kept
  only so the defect is reproducible.
* ``Coding.REPAIRED`` - code(v) = v below the base and w + o_k(v) above it.
  Prefixing w separates the finite and recursive exponent regimes, restores
  strict monotonicity, and is invariant under base shift.  This is the
  default everywhere.

On top of the map sit: the membership test for its image D_k (structural,
never materializing the astronomically large preimages), the inverse L_k,
the predecessor-inside-D_k operator Q_k, the zero-padded count profiles
with their flipped variant, and the descending ordinal assignment g_n used
by the slowdown construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .frep import encode
from .grzeval import BoundedNat, CapExceededError, Exact, ExceedsCap, _iter, exceeds
from .ordinals import (
    OMEGA,
    ZERO,
    Ordinal,
    add,
    coeff_measure,
    from_int,
    left_subtract_omega,
    omega_pow,
)


class Coding(enum.Enum):
    LITERAL = "literal"
    REPAIRED = "repaired"


class NotInDError(ValueError):
    """The ordinal is not the image of any number at this base."""

    def __init__(self, base: int, reason: str):
        super().__init__(f"not in D_{base}: {reason}")
        self.base = base
        self.reason = reason


class CodingError(ValueError):
    """Operation undefined under the requested exponent coding."""


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    base: int
    skeleton: tuple[tuple[BoundedNat, int], ...] | None
    reason: str | None


@dataclass(frozen=True)
class PaddedProfile:
    """Counts of x placed into n slots (slot q holds the count of exponent n-q),
    together with the chain of intermediate bases m_1 = base,
    m_{q+1} = F_{n-q}^(j_q)(m_q)."""

    n: int
    base: int
    j: tuple[int, ...]
    m: tuple[int, ...]


# ---------------------------------------------------------------------------
# The forward map


def _code_exponent(v: int, k: int, coding: Coding) -> Ordinal:
    if v < k:
        return from_int(v)
    if coding is Coding.LITERAL:
        return o_map(v, k, Coding.LITERAL)
    return add(OMEGA, o_map(v, k, Coding.REPAIRED))


def o_map(x: int, k: int, coding: Coding = Coding.REPAIRED) -> Ordinal:
    """The ordinal associated with x at base k; requires x >= k >= 2."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"base must be an integer >= 2, got {k!r}")
    if not isinstance(x, int) or x < k:
        raise ValueError(f"the map needs x >= base, got x={x!r}, base={k}")
    total = ZERO
    for e, c in encode(x, k).pairs:
        if c == 0:
            continue  # the bare-base [(0,0)] contributes nothing: o_k(k) = 0
        total = add(total, omega_pow(_code_exponent(e, k, coding), c))
    return total


# ---------------------------------------------------------------------------
# Structural inversion.  A term list decodes to a representation skeleton
# [(v_1,c_1),...]: finite exponents must sit below the base, infinite ones
# split as w + b with b decoded recursively.  Count bounds c_p < k_p are then
# probed against the intermediate-base chain under a bound derived from the
# ordinal itself (the chain outgrows every coefficient as soon as any piece
# leaves the bound, so membership never materializes the full preimage).


def _require_repaired(coding: Coding, what: str) -> None:
    if coding is not Coding.REPAIRED:
        raise CodingError(
            f"{what} is only defined under the repaired coding; the literal "
            "coding is not injective (o_2(4) = o_2(2048) = w)"
        )


def _skeleton(a: Ordinal, k: int, bound: int) -> list[tuple[int | None, int]]:
    """Decode to [(value-or-None, count)] with None meaning "above bound".

    Raises NotInDError when the ordinal has no preimage at base k.
    """
    entries: list[tuple[int | None, int]] = []
    for e, c in a.terms:
        if e.is_finite:
            v = e.as_int()
            if v >= k:
                raise NotInDError(k, f"finite exponent {v} not below base {k}")
            entries.append((v, c))
        else:
            inner = _skeleton(left_subtract_omega(e), k, bound)
            entries.append((_fold(inner, k, bound), c))
    # count bounds against the intermediate-base chain
    chain: int | None = k
    for p, (v, c) in enumerate(entries, start=1):
        if chain is None:
            continue  # chain already above bound >= every coefficient of a
        if c >= chain:
            raise NotInDError(k, f"count {c} at position {p} not below intermediate base {chain}")
        chain = _iter(v, c, chain, bound) if v is not None else None
    return entries


def _fold(entries: list[tuple[int | None, int]], k: int, cap: int) -> int | None:
    y: int | None = k
    for v, c in entries:
        if v is None or y is None:
            return None
        y = _iter(v, c, y, cap)
    return y


def _membership_bound(a: Ordinal, k: int) -> int:
    return max(4, k, coeff_measure(a)) + 1


def in_D(a: Ordinal, k: int, coding: Coding = Coding.REPAIRED) -> MembershipReport:
    """Decide whether a is the image of some number at base k, structurally."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"base must be an integer >= 2, got {k!r}")
    if a.is_zero:
        return MembershipReport(True, k, ((Exact(0), 0),), None)
    _require_repaired(coding, "membership testing beyond the zero ordinal")
    bound = _membership_bound(a, k)
    try:
        entries = _skeleton(a, k, bound)
    except NotInDError as err:
        return MembershipReport(False, k, None, err.reason)
    skel = tuple(
        (Exact(v) if v is not None else ExceedsCap(bound), c) for v, c in entries
    )
    return MembershipReport(True, k, skel, None)


def L_inverse(a: Ordinal, k: int, coding: Coding = Coding.REPAIRED, cap: int = 10**7) -> BoundedNat:
    """The unique x >= k with o_map(x, k) = a, cutoff-aware.

    Raises NotInDError when no preimage exists; returns ExceedsCap when the
    preimage exists structurally but its value is above the cap.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"base must be an integer >= 2, got {k!r}")
    if a.is_zero:
        return Exact(k) if k <= cap else ExceedsCap(cap)
    _require_repaired(coding, "inversion")
    _skeleton(a, k, _membership_bound(a, k))  # membership gate
    v = _value(a, k, cap)
    return Exact(v) if v is not None else ExceedsCap(cap)


def _value(a: Ordinal, k: int, cap: int) -> int | None:
    y: int | None = k
    for e, c in a.terms:
        if e.is_finite:
            v: int | None = e.as_int()
        else:
            v = _value(left_subtract_omega(e), k, cap)
        if v is None or y is None:
            return None
        y = _iter(v, c, y, cap)
    return y


def Q_pred(a: Ordinal, k: int, coding: Coding = Coding.REPAIRED, cap: int = 10**7) -> Ordinal:
    """The largest member of D_k strictly below a; requires a in D_k, a > 0."""
    _require_repaired(coding, "the predecessor operator")
    if a.is_zero:
        raise ValueError("the zero ordinal has no predecessor inside D_k")
    x = L_inverse(a, k, coding, cap)
    if isinstance(x, ExceedsCap):
        raise CapExceededError(cap)
    return o_map(x.value - 1, k, coding)


# ---------------------------------------------------------------------------
# Padded count profiles and their flip


def profile(x: int, n: int, k: int) -> PaddedProfile:
    """Spread the counts of x over n slots (zeros where an exponent is absent).

    Defined for base <= x < F_n(base) with n > 0; the bound is checked
    without evaluating F_n(base).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"slot count must be a positive integer, got {n!r}")
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"base must be an integer >= 2, got {k!r}")
    if not isinstance(x, int) or x < k:
        raise ValueError(f"need x >= base, got x={x!r}, base={k}")
    if not exceeds(n, 1, k, x):
        raise ValueError(f"x={x} is not below F_{n}({k})")
    j = [0] * n
    for e, c in encode(x, k).pairs:
        assert e < n  # guaranteed by x < F_n(k)
        j[n - e - 1] = c
    m = [k]
    for q in range(1, n):  # m_{q+1} = F_{n-q}^(j_q)(m_q), all values <= x
        nxt = _iter(n - q, j[q - 1], m[-1], x)
        assert nxt is not None
        m.append(nxt)
    return PaddedProfile(n=n, base=k, j=tuple(j), m=tuple(m))


def flip(p: PaddedProfile) -> tuple[int, ...]:
    """The flipped profile (m_1 - j_1, ..., m_n - j_n); entries are positive
    and reverse the order: larger x gives a lexicographically smaller flip."""
    out = tuple(mq - jq for mq, jq in zip(p.m, p.j))
    assert all(v >= 1 for v in out)
    return out


# ---------------------------------------------------------------------------
# The descending assignment g_n


def g(n: int, k: int, x: int) -> Ordinal:
    """Ordinal rank of x in the window [0, F_n(k)): strictly decreasing in x,
    zero from F_n(k) on, with all coefficients below max(n, k+1, x)+1."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"base must be an integer >= 2, got {k!r}")
    if not isinstance(n, int) or n < 0 or not isinstance(x, int) or x < 0:
        raise ValueError("slot count and value must be non-negative integers")
    if n == 0:
        return from_int(max(0, (k + 1) - x))
    if x < k:
        return omega_pow(from_int(n), k - x)
    if not exceeds(n, 1, k, x):
        return ZERO  # x >= F_n(k)
    fl = flip(profile(x, n, k))
    return Ordinal(tuple((from_int(n - q), fl[q - 1]) for q in range(1, n + 1)))
