from fractions import Fraction
from itertools import permutations

import pytest

from gerstenhaber.genv import (GerstBasis, exterior_of_lie, h_bracket,
                               h_bracket_raw, h_mu, polyvec_basis,
                               sandbox_gerstenhaber, zero_gerstenhaber)
from gerstenhaber.graded import koszul_sign
from gerstenhaber.prng import SplitMix64
from gerstenhaber.shuffleco import ShuffleQuotient, word_deg
from gerstenhaber.suites import suite_genv
from gerstenhaber.tensorco import add_term


def brute_bracket(a, b, basis):
    """Independent route: filter all permutations for the shuffle condition."""
    p, q = len(a), len(b)
    letters = a + b
    degs = [x.degree for x in letters]
    out = {}
    for perm in permutations(range(p + q)):
        # perm[k] = original index at position k; shuffle condition
        pos_of = [0] * (p + q)
        for k, orig in enumerate(perm):
            pos_of[orig] = k
        if any(pos_of[i] > pos_of[i + 1] for i in range(p - 1)):
            continue
        if any(pos_of[i] > pos_of[i + 1] for i in range(p, p + q - 1)):
            continue
        sign = koszul_sign(degs, list(perm))
        for k in range(p + q - 1):
            if perm[k] < p <= perm[k + 1]:
                br = basis.bracket(letters[perm[k]], letters[perm[k + 1]])
                head = tuple(letters[perm[i]] for i in range(k))
                tail = tuple(letters[perm[i]] for i in range(k + 2, p + q))
                for letter, c in br.items():
                    add_term(out, head + (letter,) + tail, Fraction(sign) * c)
    return out


def test_bracket_single_letters_is_table():
    basis = polyvec_basis(2)
    for a in basis.letters[:6]:
        for b in basis.letters[:6]:
            got = h_bracket_raw((a,), (b,), basis)
            want = {(c,): v for c, v in basis.bracket(a, b).items()}
            assert got == want


def test_bracket_matches_brute_force():
    rng = SplitMix64(51)
    for trial in range(25):
        basis = sandbox_gerstenhaber(rng) if trial % 2 else polyvec_basis(2)
        p, q = rng.randint(1, 2), rng.randint(2, 3)
        a = tuple(rng.choice(basis.letters) for _ in range(p))
        b = tuple(rng.choice(basis.letters) for _ in range(q))
        assert h_bracket_raw(a, b, basis) == brute_bracket(a, b, basis)


def test_mu_small_cases():
    basis = polyvec_basis(2)
    quo = ShuffleQuotient()
    a = basis.letters[0]
    assert h_mu((a,), basis, quo) == {}
    vf = [x for x in basis.letters if x.degree == 0]
    got = h_mu((vf[0], vf[1]), basis, quo)
    want = {}
    for c, v in basis.mu2(vf[0], vf[1]).items():
        want[(c,)] = v
    assert got == {k: v for k, v in want.items() if v}


def test_exterior_of_lie_is_validated():
    basis = exterior_of_lie(2, {(1, 2): {1: Fraction(1)}, (2, 1): {1: Fraction(-1)}})
    assert len(basis.letters) == 4
    # degree of the top generator product
    assert max(a.degree for a in basis.letters) == 1


def test_corrupt_bracket_caught_by_validation():
    table = {(1, 2): {1: Fraction(1)}, (2, 1): {1: Fraction(1)}}  # not antisymmetric
    with pytest.raises(ValueError):
        exterior_of_lie(2, table)


def test_zero_sandbox_kills_everything():
    basis = zero_gerstenhaber(3)
    quo = ShuffleQuotient()
    a = tuple(basis.letters[:2])
    assert h_bracket(a, a, basis, quo) == {}
    assert h_mu(a, basis, quo) == {}


def test_theorem_identities_suite():
    # antisymmetry, Jacobi, derivation property, shuffle compatibility
    for name, ok, bad in suite_genv(7, 60):
        assert ok, f"{name}: {bad}"


def test_corrupted_sandbox_fails_suite():
    results = suite_genv(7, 40, corrupt=True)
    assert any(not ok for _, ok, _ in results)
    # and a counterexample is reported
    assert any(bad for _, ok, bad in results if not ok)
