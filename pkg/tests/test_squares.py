from fractions import Fraction
from itertools import combinations

from locus.squares import decide_square, decide_two_power
from locus.verdicts import FAILS, HOLDS, INCONCLUSIVE


def brute_square_decision(elems):
    """Odd-cardinality subset with perfect-square product, by full search."""
    xs = [Fraction(e) for e in elems]
    for r in range(1, len(xs) + 1, 2):
        for idx in combinations(range(len(xs)), r):
            prod = Fraction(1)
            for i in idx:
                prod *= xs[i]
            if prod > 0:
                num, den = prod.numerator, prod.denominator
                rn, rd = round(num**0.5), round(den**0.5)
                if any(a * a == num for a in (rn - 1, rn, rn + 1)) and \
                   any(a * a == den for a in (rd - 1, rd, rd + 1)):
                    return True
    return False


def test_examples():
    v = decide_square([3, 5, 15])
    assert v.status == HOLDS
    assert v.certificate.indices == (1, 2, 3)
    assert v.certificate.root == "15"

    v = decide_square([9])
    assert v.status == HOLDS and v.certificate.indices == (1,)
    assert v.certificate.root == "3"

    v = decide_square([2, 3])
    assert v.status == FAILS
    assert v.certificate.counterexample_prime == 5


def test_negative_elements_need_sign_row():
    assert decide_square([-1]).status == FAILS
    assert decide_square([-1, -4]).status == FAILS   # only even subsets square
    # -2 and -8 share the class -1*2 mod squares; a single non-square remains
    assert decide_square([-2, -8]).status == FAILS
    # signs cancel over the odd triple (-2)(-3)(6) = 36
    v = decide_square([-2, -3, 6])
    assert v.status == HOLDS
    assert v.certificate.indices == (1, 2, 3)
    assert Fraction(v.certificate.root) ** 2 == 36


def test_witness_minimality():
    # 9 is a square on its own, so the singleton beats the triple 3*9*27
    v = decide_square([3, 9, 27])
    assert v.status == HOLDS
    assert v.certificate.indices == (2,)


def test_duplicate_classes_collapse():
    # 3 and 12 share the class mod squares; the pair cannot hold
    v = decide_square([3, 12])
    assert v.status == FAILS


def test_rationals_enter_mod_two():
    v = decide_square([Fraction(1, 3), 27])
    # 1/3 and 27 are both the class of 3; dedupe -> single non-square
    assert v.status == FAILS
    v = decide_square([Fraction(5, 4)])
    assert v.status == FAILS
    v = decide_square([Fraction(9, 4)])
    assert v.status == HOLDS
    assert Fraction(v.certificate.root) ** 2 == Fraction(9, 4)


def test_exhaustive_equivalence_squarefree_support_357():
    values = []
    for mask in range(1, 8):
        v = 1
        for bit, p in enumerate((3, 5, 7)):
            if mask >> bit & 1:
                v *= p
        values.extend([v, -v])
    values.extend([1, -1])
    for r in range(1, 4):
        for elems in combinations(values, r):
            got = decide_square(list(elems), want_counterexample=False)
            want = brute_square_decision(list(elems))
            assert (got.status == HOLDS) == want, elems


def test_fails_certificate_row_combination():
    v = decide_square([2, 3], want_counterexample=False)
    assert v.status == FAILS
    assert v.certificate.kind == "parity_obstruction"
    # rows XOR to the all-ones functional over the two columns
    assert set(v.certificate.rows) <= {"sign", "2", "3"}


def test_decide_two_power_examples():
    v = decide_two_power([16], 3)
    assert v.status == HOLDS and v.certificate.kind == "wang_exception"

    v = decide_two_power([3, 5, 15], 1)
    assert v.status == HOLDS and v.certificate.kind == "odd_subset_witness"

    v = decide_two_power([2, 3, 5], 2)
    assert v.status == INCONCLUSIVE

    v = decide_two_power([-4, 9], 2)
    assert v.status == HOLDS and v.certificate.kind == "exceptional_form"
    assert v.certificate.case_tag == "A0eq2_neg2"

    v = decide_two_power([256], 3)
    assert v.status == HOLDS and v.certificate.kind == "perfect_power_member"

    v = decide_two_power([2, 3], 2)
    assert v.status == FAILS
