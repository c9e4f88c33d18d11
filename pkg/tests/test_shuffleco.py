from fractions import Fraction

import pytest

from gerstenhaber.graded import Letter
from gerstenhaber.prng import SplitMix64
from gerstenhaber.shuffleco import (ShuffleQuotient, bat, bat3, bat_elem,
                                    build_quotient, d_harrison, delta,
                                    lift_coderivation, lift_morphism, mu,
                                    shifted, validate_harrison_cochain)
from gerstenhaber.suites import suite_shuffle
from gerstenhaber.tensorco import Bimodule, FiniteAlgebra

A = Letter(("w", "a"), 0)   # even
B = Letter(("w", "b"), 0)
E = Letter(("w", "e"), 1)   # odd


def test_bat_two_letters():
    out = bat((A,), (B,))
    assert out == {(A, B): Fraction(1), (B, A): Fraction(1)}
    out = bat((E,), (E,))
    assert out == {}  # (-1)^(1*1) cancels the two shuffles
    out = bat((A,), (B, E))
    assert len(out) == 3  # C(3,1) shuffles


def test_bat3_matches_nested():
    rng = SplitMix64(31)
    letters = [A, B, E, Letter(("w", "f"), -1)]
    for _ in range(25):
        a = tuple(rng.choice(letters) for _ in range(rng.randint(1, 2)))
        b = tuple(rng.choice(letters) for _ in range(rng.randint(1, 2)))
        c = tuple(rng.choice(letters) for _ in range(rng.randint(1, 2)))
        tri = bat3(a, b, c)
        assert tri == bat_elem(bat(a, b), {c: Fraction(1)})
        assert tri == bat_elem({a: Fraction(1)}, bat(b, c))


def test_quotient_dimensions_small():
    quo = ShuffleQuotient()
    assert quo.dim([A, B]) == 1     # T^2 is 2-dim, shuffles span 1
    assert quo.dim([E, E]) == 1     # bat(e,e) = 0
    assert quo.dim([A, A]) == 0     # bat(a,a) = 2 a(x)a
    assert quo.dim([A]) == 1


def test_reduction_properties():
    quo = ShuffleQuotient()
    rng = SplitMix64(32)
    letters = [A, B, E]
    for _ in range(30):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(1, 4)))
        red = quo.reduce_word(w)
        for rep in red:
            assert quo.reduce_word(rep) == {rep: Fraction(1)}  # idempotent
        p = rng.randint(1, max(1, len(w) - 1))
        if p < len(w):
            assert quo.reduce(bat(w[:p], w[p:])) == {}


def necklace_dim(m: int, n: int) -> int:
    """Free Lie algebra dimension by the necklace count, independent route."""

    def mobius(k):
        out, d, kk = 1, 2, k
        while d * d <= kk:
            if kk % d == 0:
                kk //= d
                if kk % d == 0:
                    return 0
                out = -out
            d += 1
        if kk > 1:
            out = -out
        return out

    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += mobius(d) * m ** (n // d)
    return total // n


def test_dimension_matches_necklace_count():
    for m, n in ((2, 2), (2, 3), (3, 2)):
        letters = [Letter(("v", i), 0) for i in range(m)]
        quo = build_quotient(letters, n)
        from itertools import combinations_with_replacement

        total = 0
        for ms in combinations_with_replacement(letters, n):
            total += quo.dim(list(ms))
        assert total == necklace_dim(m, n)


def test_delta_cases():
    quo = ShuffleQuotient()
    assert delta((A,), quo) == {}
    w = quo.representatives([A, B])[0]
    out = delta(w, quo)
    a1, a2 = w
    assert out == {
        ((a1,), (a2,)): Fraction(1),
        ((a2,), (a1,)): Fraction(-1),
    }


def test_lift_morphism_identity_and_comorphism():
    quo = ShuffleQuotient()
    rng = SplitMix64(33)
    letters = [A, B, E]
    ident = lift_morphism({1: lambda w: {w[0]: Fraction(1)}}, quo)
    for _ in range(10):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(1, 3)))
        red = quo.reduce_word(w)
        if not red:
            continue
        rep = sorted(red)[0]
        assert ident(rep) == {rep: Fraction(1)}

    # degree-0 2-level Taylor family: comorphism identity (F x F) delta = delta F
    out_letters = [Letter(("o", i), d) for i, d in enumerate((-1, 0, 0, 1, 1, 2))]
    by_deg = {}
    for letter in out_letters:
        by_deg.setdefault(letter.degree, []).append(letter)
    table2 = {}
    for _ in range(10):
        w = tuple(rng.choice(letters) for _ in range(2))
        red = quo.reduce_word(w)
        if red:
            rep = sorted(red)[0]
            choices = by_deg.get(sum(a.degree for a in rep), [])
            if choices:
                table2[rep] = {rng.choice(choices): Fraction(rng.randint(-2, 2))}

    def f2(word):
        red = quo.reduce_word(word)
        out = {}
        for rep, c in red.items():
            for k, v in table2.get(rep, {}).items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    fmap = {A: by_deg[0][0], B: by_deg[0][1], E: by_deg[1][0]}
    F = lift_morphism({1: lambda w: {fmap[w[0]]: Fraction(1)}, 2: f2}, quo)
    from gerstenhaber.shuffleco import delta_elem
    from gerstenhaber.tensorco import add_term

    for _ in range(15):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(1, 4)))
        red = quo.reduce_word(w)
        if not red:
            continue
        rep = sorted(red)[0]
        lhs = {}
        for (u, v), c in delta(rep, quo).items():
            for u2, c2 in F(u).items():
                for v2, c3 in F(v).items():
                    add_term(lhs, (u2, v2), c * c2 * c3)
        rhs = delta_elem(F(rep), quo)
        assert lhs == rhs


def commutative_square_zero():
    one, x = Letter(("c", 0), 0), Letter(("c", 1), 0)
    prod = {
        (one.ident, one.ident): {one.ident: Fraction(1)},
        (one.ident, x.ident): {x.ident: Fraction(1)},
        (x.ident, one.ident): {x.ident: Fraction(1)},
    }
    return FiniteAlgebra([one, x], prod, commutative=True)


def test_mu_displayed_formula():
    alg = commutative_square_zero()
    quo = ShuffleQuotient()
    mufun = mu(alg, quo)
    s1, sx = (shifted(a) for a in alg.letters)
    # length 2: single term m2; m2(x,x) = 0, m2(1,x) = -x
    assert mufun((s1, sx)) == {(sx,): Fraction(-1)}
    # mu  . mu = 0 on anything
    rng = SplitMix64(34)
    for _ in range(20):
        w = tuple(rng.choice([s1, sx]) for _ in range(rng.randint(1, 4)))
        red = quo.reduce_word(w)
        if not red:
            continue
        rep = sorted(red)[0]
        out = mufun(rep)
        again = {}
        for w2, c in out.items():
            for w3, c2 in mufun(w2).items():
                again[w3] = again.get(w3, 0) + c * c2
        assert not {k: v for k, v in again.items() if v}


def test_harrison_example_and_errors():
    alg = commutative_square_zero()
    module = Bimodule.regular(alg)
    quo = ShuffleQuotient()
    s1, sx = (shifted(a) for a in alg.letters)
    one, x = alg.letters
    C = {(sx,): {one: Fraction(1)}}
    validate_harrison_cochain(C, quo)
    dC = d_harrison(C, 2, alg, module, quo)
    # d_Ha C(x (x) x) = x.C(x) - C(x^2) + C(x).x = 2x
    (rep,) = quo.representatives([sx, sx])
    assert dC(rep) == {x: Fraction(2)}
    zero = d_harrison({}, 2, alg, module, quo)
    assert zero(rep) == {}
    # non-representative support is rejected
    w_bad = (sx, s1) if not quo.is_representative((sx, s1)) else (s1, sx)
    with pytest.raises(ValueError):
        d_harrison({w_bad: {one: Fraction(1)}}, 3, alg, module, quo)


def test_quotient_json_dump():
    import json

    quo = ShuffleQuotient()
    payload = json.loads(quo.dump_json([[A, B], [E, E]]))
    assert payload[0]["dim"] == 1 and payload[1]["dim"] == 1


def test_suite_green():
    for name, ok, bad in suite_shuffle(7, 40):
        assert ok, f"{name}: {bad}"
