"""Ordinal term arithmetic: order laws, addition, the w^w shift, towers, measure C."""

import itertools
import json
from functools import cmp_to_key

import pytest

from grzseq.order import Ordering
from grzseq.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    add,
    coeff_measure,
    compare,
    from_int,
    left_subtract_omega,
    mul_omega_omega,
    omega_pow,
    omega_tower,
    ordinal_from_json,
    ordinal_to_json,
    parse_ordinal,
    print_ordinal,
)


def gen_ordinals(depth: int, max_coeff: int = 2, max_len: int = 2) -> list[Ordinal]:
    """All CNF terms of bounded depth, term count, and coefficient size."""
    pool = [ZERO]
    for _ in range(depth):
        exps = list(pool)
        nxt = set(pool)
        singles = [omega_pow(e, c) for e in exps for c in range(1, max_coeff + 1)]
        nxt.update(singles)
        for (e1, e2) in itertools.combinations(exps, 2):
            lo, hi = (e1, e2) if compare(e1, e2) == Ordering.LT else (e2, e1)
            for c1 in range(1, max_coeff + 1):
                for c2 in range(1, max_coeff + 1):
                    nxt.add(Ordinal(((hi, c1), (lo, c2))))
        pool = list(nxt)
        if len(pool) > 400:
            break
    return pool


SMALL = gen_ordinals(3)


def test_compare_examples():
    assert compare(OMEGA, from_int(2)) == Ordering.GT
    w_to_w = omega_pow(OMEGA)
    five_w_plus_3 = add(omega_pow(ONE, 5), from_int(3))
    assert compare(w_to_w, five_w_plus_3) == Ordering.GT
    a = omega_pow(from_int(2), 3)
    assert compare(a, omega_pow(from_int(2), 3)) == Ordering.EQ


def test_compare_antisymmetric_on_samples():
    for a, b in itertools.combinations(SMALL, 2):
        ab, ba = compare(a, b), compare(b, a)
        assert ab != Ordering.EQ  # generator yields distinct terms
        assert (ab == Ordering.LT) == (ba == Ordering.GT)


def test_compare_transitive_on_samples():
    subset = SMALL[:40]
    for a, b, c in itertools.combinations(subset, 3):
        trio = sorted([a, b, c], key=cmp_to_key(lambda u, v: compare(u, v).value))
        assert compare(trio[0], trio[1]) == Ordering.LT
        assert compare(trio[1], trio[2]) == Ordering.LT
        assert compare(trio[0], trio[2]) == Ordering.LT


def test_sorting_is_consistent():
    ordered = sorted(SMALL, key=cmp_to_key(lambda u, v: compare(u, v).value))
    for a, b in zip(ordered, ordered[1:]):
        assert compare(a, b) == Ordering.LT


def test_add_examples():
    # absorption of the finite tail: (w^2 + 3) + w = w^2 + w
    lhs = add(add(omega_pow(from_int(2)), from_int(3)), OMEGA)
    assert lhs == Ordinal(((from_int(2), 1), (ONE, 1)))
    assert add(parse_ordinal("w^(2)*1+3"), OMEGA) == parse_ordinal("w^(2)*1+w")


def test_add_laws_on_samples():
    subset = SMALL[:30]
    for a in subset:
        assert add(a, ZERO) == a
        assert add(ZERO, a) == a
    for a, b in itertools.product(subset, repeat=2):
        s = add(a, b)
        assert compare(s, a) != Ordering.LT  # a <= a + b
        assert compare(s, b) != Ordering.LT  # b <= a + b
    for a, b, c in itertools.product(subset[:12], repeat=3):
        assert add(add(a, b), c) == add(a, add(b, c))


def test_mul_omega_omega_example():
    # w^w * (w*2 + 1) = w^(w+1)*2 + w^w
    a = parse_ordinal("w*2+1")
    assert mul_omega_omega(a) == parse_ordinal("w^(w+1)*2+w^(w)*1")


def test_mul_omega_omega_preserves_order():
    subset = SMALL[:60]
    for a, b in itertools.combinations(subset, 2):
        rel = compare(a, b)
        assert compare(mul_omega_omega(a), mul_omega_omega(b)) == rel


def test_mul_omega_omega_coefficient_bounds():
    # the measure can grow by one when an exponent's leading w-coefficient
    # absorbs the added w: w^w * w^(w*2) = w^(w*3)
    bump = omega_pow(parse_ordinal("w*2"))
    assert coeff_measure(bump) == 2
    assert coeff_measure(mul_omega_omega(bump)) == 3
    assert mul_omega_omega(ZERO) == ZERO
    for a in SMALL:
        if a.is_zero:
            continue
        c0, c1 = coeff_measure(a), coeff_measure(mul_omega_omega(a))
        assert max(1, c0) <= c1 <= c0 + 1


def test_omega_tower():
    assert omega_tower(0) == ONE
    assert omega_tower(1) == OMEGA
    assert omega_tower(2) == omega_pow(OMEGA)
    assert compare(omega_tower(4), omega_tower(3)) == Ordering.GT


def test_left_subtract_omega():
    w_to_w = omega_pow(OMEGA)
    assert left_subtract_omega(w_to_w) == w_to_w  # w + w^w = w^w
    assert left_subtract_omega(OMEGA) == ZERO
    assert left_subtract_omega(parse_ordinal("w*3+2")) == parse_ordinal("w*2+2")
    with pytest.raises(ValueError):
        left_subtract_omega(from_int(7))


def test_left_subtract_omega_inverts_on_samples():
    for e in SMALL:
        if e.is_finite:
            continue
        assert add(OMEGA, left_subtract_omega(e)) == e


def test_coeff_measure_examples():
    assert coeff_measure(ZERO) == 0
    a = add(omega_pow(parse_ordinal("w*2")), from_int(3))
    assert coeff_measure(a) == 3
    assert coeff_measure(OMEGA) == 1


def test_cnf_invariants_enforced():
    with pytest.raises(ValueError):
        Ordinal(((ZERO, 0),))  # zero coefficient
    with pytest.raises(ValueError):
        Ordinal(((ZERO, 1), (ONE, 1)))  # increasing exponents
    with pytest.raises(ValueError):
        Ordinal(((ONE, 1), (ONE, 1)))  # duplicated exponents


# ---------------------------------------------------------------------------
# Text and JSON forms


def test_parse_sugar():
    assert parse_ordinal("w") == OMEGA
    assert parse_ordinal("w^w") == omega_pow(OMEGA)
    assert parse_ordinal("w*2") == omega_pow(ONE, 2)
    assert parse_ordinal("w^(w*2)+3") == add(omega_pow(parse_ordinal("w*2")), from_int(3))
    assert parse_ordinal("w^2") == omega_pow(from_int(2))
    assert parse_ordinal("0") == ZERO
    assert parse_ordinal(" w + w ") == omega_pow(ONE, 2)  # sums normalize


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_ordinal("w^")
    with pytest.raises(ValueError):
        parse_ordinal("3w")
    with pytest.raises(ValueError):
        parse_ordinal("")


def test_print_parse_roundtrip():
    for a in SMALL:
        assert parse_ordinal(print_ordinal(a)) == a
    assert print_ordinal(ZERO) == "0"
    assert print_ordinal(OMEGA) == "w^(1)*1"


def test_json_roundtrip():
    for a in SMALL[:80]:
        assert ordinal_from_json(json.dumps(ordinal_to_json(a))) == a
