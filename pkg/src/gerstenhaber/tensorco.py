"""Tensor coalgebra of a shifted associative algebra and the Hochschild coboundary.

Letters of a ``FiniteAlgebra`` carry their unshifted degree.  Tensor words
live over the shifted copy of the basis: their letters are the same symbols
with the degree lowered by one (``shifted_letter``), and every sign below
reads those shifted degrees directly.  An element is a sparse dict
word -> Fraction.
"""

from __future__ import annotations

from fractions import Fraction

from .graded import Letter

Word = tuple  # tuple[Letter, ...] with shifted degrees
Elem = dict   # dict[Word, Fraction]
Vec = dict    # dict[Letter, Fraction], an element of the algebra or module


def shifted_letter(letter: Letter) -> Letter:
    """The same symbol one shift down."""
    return Letter(letter.ident, letter.degree - 1)


def word_sdeg(word: Word) -> int:
    """Degree of a word of shifted letters."""
    return sum(a.degree for a in word)


def add_term(acc: dict, key, coeff: Fraction):
    if not coeff:
        return
    s = acc.get(key, 0) + coeff
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def add_scaled(acc: dict, other: dict, coeff=Fraction(1)):
    if not coeff:
        return acc
    for k, v in other.items():
        add_term(acc, k, coeff * v)
    return acc


def elem_eq(a: dict, b: dict) -> bool:
    return {k: v for k, v in a.items() if v} == {k: v for k, v in b.items() if v}


class FiniteAlgebra:
    """Graded associative algebra given by structure constants on a basis.

    ``product[(i, j)]`` maps the pair of letter idents to a dict
    ident -> Fraction.  Associativity (and graded commutativity when the flag
    is set) is checked on all basis triples at construction; a bad table is a
    caller bug, not something the coboundary operators detect later.
    """

    def __init__(self, letters, product, commutative=False):
        self.letters = list(letters)
        self.by_ident = {a.ident: a for a in self.letters}
        self.product = {
            key: {i: Fraction(c) for i, c in val.items() if c}
            for key, val in product.items()
        }
        self.commutative = commutative
        self._validate()

    def mul_letters(self, a: Letter, b: Letter) -> Vec:
        tab = self.product.get((a.ident, b.ident))
        if not tab:
            return {}
        return {self.by_ident[i]: c for i, c in tab.items()}

    def mul(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for a, ca in x.items():
            for b, cb in y.items():
                add_scaled(out, self.mul_letters(a, b), ca * cb)
        return out

    def _validate(self):
        for a in self.letters:
            for b in self.letters:
                for c, coeff in self.mul_letters(a, b).items():
                    if coeff and c.degree != a.degree + b.degree:
                        raise ValueError(
                            f"product not degree 0: {a.ident}*{b.ident} -> {c.ident}"
                        )
        for a in self.letters:
            for b in self.letters:
                ab = self.mul_letters(a, b)
                if self.commutative:
                    sign = -1 if (a.degree % 2 and b.degree % 2) else 1
                    ba = self.mul_letters(b, a)
                    if not elem_eq(ab, {k: sign * v for k, v in ba.items()}):
                        raise ValueError(
                            f"not graded commutative on {a.ident},{b.ident}"
                        )
                for c in self.letters:
                    left = self.mul(ab, {c: Fraction(1)})
                    right = self.mul({a: Fraction(1)}, self.mul_letters(b, c))
                    if not elem_eq(left, right):
                        raise ValueError(
                            f"not associative on {a.ident},{b.ident},{c.ident}"
                        )


class Bimodule:
    """Graded bimodule over a FiniteAlgebra, with explicit action tables.

    ``left[(a, v)]`` and ``right[(v, a)]`` map idents to dicts over module
    letter idents.  ``regular(alg)`` gives the algebra acting on itself.
    """

    def __init__(self, alg: FiniteAlgebra, letters, left, right, check=True):
        self.alg = alg
        self.letters = list(letters)
        self.by_ident = {v.ident: v for v in self.letters}
        self.left = left
        self.right = right
        if check:
            self._validate()

    @classmethod
    def regular(cls, alg: FiniteAlgebra) -> "Bimodule":
        left = {
            (a.ident, b.ident): alg.product.get((a.ident, b.ident), {})
            for a in alg.letters
            for b in alg.letters
        }
        right = {
            (a.ident, b.ident): alg.product.get((a.ident, b.ident), {})
            for a in alg.letters
            for b in alg.letters
        }
        return cls(alg, alg.letters, left, right, check=False)

    def act_left(self, a: Letter, v: Vec) -> Vec:
        out: Vec = {}
        for w, cw in v.items():
            tab = self.left.get((a.ident, w.ident), {})
            for i, c in tab.items():
                add_term(out, self.by_ident[i], cw * Fraction(c))
        return out

    def act_right(self, v: Vec, a: Letter) -> Vec:
        out: Vec = {}
        for w, cw in v.items():
            tab = self.right.get((w.ident, a.ident), {})
            for i, c in tab.items():
                add_term(out, self.by_ident[i], cw * Fraction(c))
        return out

    def _validate(self):
        alg = self.alg
        one = Fraction(1)
        for a in alg.letters:
            for b in alg.letters:
                ab = alg.mul_letters(a, b)
                for v in self.letters:
                    lhs: Vec = {}
                    for c, cc in ab.items():
                        add_scaled(lhs, self.act_left(c, {v: one}), cc)
                    rhs = self.act_left(a, self.act_left(b, {v: one}))
                    if not elem_eq(lhs, rhs):
                        raise ValueError("left action not associative")
                    lhs = {}
                    for c, cc in ab.items():
                        add_scaled(lhs, self.act_right({v: one}, c), cc)
                    rhs = self.act_right(self.act_right({v: one}, a), b)
                    if not elem_eq(lhs, rhs):
                        raise ValueError("right action not associative")
                    mid1 = self.act_right(self.act_left(a, {v: one}), b)
                    mid2 = self.act_left(a, self.act_right({v: one}, b))
                    if not elem_eq(mid1, mid2):
                        raise ValueError("actions do not commute")


def extended_algebra(alg: FiniteAlgebra, module: Bimodule, shift: int) -> FiniteAlgebra:
    """The square-zero extension A (+) V[shift], with V.V = 0.

    Module letters are re-graded by ``-shift``; the product is the algebra
    product on A and the module actions between A and V.
    """
    vletters = [Letter(("mod", v.ident), v.degree - shift) for v in module.letters]
    letters = list(alg.letters) + vletters
    product: dict = dict(alg.product)
    for a in alg.letters:
        for v in module.letters:
            lv = module.left.get((a.ident, v.ident), {})
            if lv:
                product[(a.ident, ("mod", v.ident))] = {
                    ("mod", i): c for i, c in lv.items()
                }
            vr = module.right.get((v.ident, a.ident), {})
            if vr:
                product[(("mod", v.ident), a.ident)] = {
                    ("mod", i): c for i, c in vr.items()
                }
    return FiniteAlgebra(letters, product)


def deconcat(word: Word) -> dict:
    """Deconcatenation coproduct of a word: sum of all proper front/back splits.

    Returns {(left_word, right_word): coefficient}; empty for a single letter.
    """
    out = {}
    for k in range(1, len(word)):
        add_term(out, (word[:k], word[k:]), Fraction(1))
    return out


def m2(a: Letter, b: Letter, alg: FiniteAlgebra) -> Vec:
    """Shifted product of two shifted letters: (-1)^(deg a) times the algebra
    product, returned over shifted letters."""
    sign = -1 if a.degree % 2 else 1
    prod = alg.mul_letters(alg.by_ident[a.ident], alg.by_ident[b.ident])
    return {shifted_letter(c): sign * v for c, v in prod.items()}


def coderivation_lift_tensor(taylor: dict, q: int):
    """Unique coderivation of the deconcatenation coproduct with given parts.

    ``taylor[r]`` maps an r-letter word to an element of A[1] (dict
    Letter -> Fraction); ``q`` is the common degree of the parts.  The lift is

        Q(a_1 (x) ... (x) a_n) =
            sum_(r,j) (-1)^(q * (a_1+...+a_j)) a_[1,j] (x) Q_r(a_[j+1,j+r]) (x) a_[j+r+1,n]

    with shifted degrees in the exponent.
    """

    def lift(elem: Elem) -> Elem:
        out: Elem = {}
        for word, coeff in elem.items():
            n = len(word)
            for r, Qr in taylor.items():
                if r > n:
                    continue
                for j in range(0, n - r + 1):
                    sign = 1
                    if q % 2:
                        if word_sdeg(word[:j]) % 2:
                            sign = -1
                    val = Qr(word[j : j + r])
                    for letter, c in val.items():
                        neww = word[:j] + (letter,) + word[j + r :]
                        add_term(out, neww, coeff * sign * c)
        return out

    return lift


def m_differential(alg: FiniteAlgebra):
    """The square-zero codifferential lifting the shifted product m2."""
    return coderivation_lift_tensor({2: lambda w: m2(w[0], w[1], alg)}, 1)


def d_hochschild(C, n: int, alg: FiniteAlgebra, module: Bimodule,
                 value_parity: int = 0):
    """Hochschild coboundary of an (n-1)-cochain C on words of shifted letters.

    C maps an (n-1)-letter word to a module element.  The value on an n-letter
    word is

        (-1)^(a_[1,n-1]+1) C(a_[1,n-1]).a_n  +  (-1)^(a_1+1) a_1.C(a_[2,n])
        - sum_j (-1)^(a_[1,j]+1) C(a_1 (x) ... (x) a_j a_(j+1) (x) ... (x) a_n)

    with shifted degrees in the exponents and plain products / module actions
    in the terms.  ``value_parity`` is the parity of C as a graded map; it
    twists the left boundary term by (-1)^((a_1+1) * parity), which is what
    makes the coboundary square to zero across the whole complex (the
    coboundary of a parity-p cochain has parity p+1).  For ungraded algebras
    the twist never fires.  Returns the n-cochain as a callable on words.
    """

    def dC(word: Word) -> Vec:
        if len(word) != n:
            raise ValueError(f"expected word of length {n}")
        out: Vec = {}
        sign = -1 if (word_sdeg(word[:-1]) + 1) % 2 else 1
        last = alg.by_ident[word[-1].ident]
        add_scaled(out, module.act_right(C(word[:-1]), last), Fraction(sign))
        e = (word[0].degree + 1) * (1 + value_parity)
        sign = -1 if e % 2 else 1
        first = alg.by_ident[word[0].ident]
        add_scaled(out, module.act_left(first, C(word[1:])), Fraction(sign))
        for j in range(n - 1):
            sign = -1 if (word_sdeg(word[: j + 1]) + 1) % 2 else 1
            prod = alg.mul_letters(
                alg.by_ident[word[j].ident], alg.by_ident[word[j + 1].ident]
            )
            for letter, c in prod.items():
                neww = word[:j] + (shifted_letter(letter),) + word[j + 2 :]
                add_scaled(out, C(neww), -Fraction(sign) * c)
        return out

    return dC
