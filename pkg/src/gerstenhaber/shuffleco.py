"""Shuffle products, shuffle-quotient spaces and the Harrison coboundary.

Letters here carry the degree of the *shifted* space directly (for an algebra
letter of unshifted degree k this is k - 1); all shuffle signs are Koszul
signs on these degrees.  The quotient of the n-fold tensor space by the span
of all proper shuffle images is presented, per letter multiset, by a fixed
reduction table computed once by exact Gaussian elimination: words are ordered
lexicographically by ident, eliminated (pivot) words are rewritten into the
chosen representative words.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations

from .graded import Letter, koszul_sign
from .tensorco import add_scaled, add_term

Word = tuple   # tuple[Letter, ...]
Elem = dict    # dict[Word, Fraction]


def word_deg(word: Word) -> int:
    return sum(a.degree for a in word)


def shifted(letter: Letter) -> Letter:
    """The same symbol viewed one shift down (degree lowered by 1)."""
    return Letter(letter.ident, letter.degree - 1)


def bat(a: Word, b: Word) -> Elem:
    """Signed sum of all (p,q)-shuffles of the words a and b."""
    p, q = len(a), len(b)
    if p < 1 or q < 1:
        raise ValueError("shuffle factors must be nonempty")
    letters = a + b
    degs = [x.degree for x in letters]
    out: Elem = {}
    for pos in combinations(range(p + q), p):
        perm = [0] * (p + q)
        bi = p
        posset = set(pos)
        ai = 0
        for k in range(p + q):
            if k in posset:
                perm[k] = ai
                ai += 1
            else:
                perm[k] = bi
                bi += 1
        sign = koszul_sign(degs, perm)
        add_term(out, tuple(letters[i] for i in perm), Fraction(sign))
    return out


def bat_elem(x: Elem, y: Elem) -> Elem:
    out: Elem = {}
    for wa, ca in x.items():
        for wb, cb in y.items():
            add_scaled(out, bat(wa, wb), ca * cb)
    return out


def bat3(a: Word, b: Word, c: Word) -> Elem:
    """Sum over (p,q,r)-shuffles; equals either nested two-fold shuffle."""
    p, q, r = len(a), len(b), len(c)
    letters = a + b + c
    degs = [x.degree for x in letters]
    n = p + q + r
    out: Elem = {}
    for pos_a in combinations(range(n), p):
        rest = [k for k in range(n) if k not in pos_a]
        for pos_b_idx in combinations(range(q + r), q):
            perm = [0] * n
            for i, k in enumerate(pos_a):
                perm[k] = i
            pos_b = [rest[i] for i in pos_b_idx]
            for i, k in enumerate(pos_b):
                perm[k] = p + i
            pos_c = [k for k in rest if k not in set(pos_b)]
            for i, k in enumerate(pos_c):
                perm[k] = p + q + i
            sign = koszul_sign(degs, perm)
            add_term(out, tuple(letters[i] for i in perm), Fraction(sign))
    return out


def _distinct_permutations(pool: list) -> list:
    """All distinct orderings of a sorted multiset, in lexicographic order."""
    if not pool:
        return [()]
    out = []
    last = None
    for i, x in enumerate(pool):
        if last is not None and x == last:
            continue
        last = x
        for tail in _distinct_permutations(pool[:i] + pool[i + 1 :]):
            out.append((x,) + tail)
    return out


class ShuffleQuotient:
    """Reduction to representatives modulo shuffle images, per letter multiset.

    Tables are built lazily per multiset and cached; the construction is
    deterministic (lexicographic word order, lowest-word pivots), so the
    representative basis does not depend on call order.
    """

    def __init__(self, max_len: int | None = None):
        self.max_len = max_len
        self.tables: dict[tuple, dict] = {}
        self.reps: dict[tuple, list] = {}

    def _table(self, multiset: tuple) -> dict:
        table = self.tables.get(multiset)
        if table is not None:
            return table
        if self.max_len is not None and len(multiset) > self.max_len:
            raise ValueError(
                f"word length {len(multiset)} exceeds quotient bound {self.max_len}"
            )
        words = _distinct_permutations(list(multiset))
        n = len(multiset)
        if n == 1:
            table = {words[0]: {words[0]: Fraction(1)}}
            self.tables[multiset] = table
            self.reps[multiset] = words
            return table
        word_index = {w: i for i, w in enumerate(words)}
        # Row echelon basis of the shuffle subspace, rows keyed by pivot word.
        pivots: dict[Word, dict[Word, Fraction]] = {}
        order: list[Word] = []

        def insert(row: dict):
            for w in order:
                c = row.get(w)
                if c:
                    prow = pivots[w]
                    for u, v in prow.items():
                        s = row.get(u, 0) - c * v
                        if s:
                            row[u] = s
                        else:
                            row.pop(u, None)
            if not row:
                return
            piv = min(row, key=lambda w: word_index[w])
            inv = 1 / row[piv]
            if inv != 1:
                for u in list(row):
                    row[u] *= inv
            for w in order:
                prow = pivots[w]
                c = prow.get(piv)
                if c:
                    for u, v in row.items():
                        s = prow.get(u, 0) - c * v
                        if s:
                            prow[u] = s
                        else:
                            prow.pop(u, None)
            pivots[piv] = row
            order.append(piv)

        for w in words:
            for p in range(1, n):
                insert(dict(bat(w[:p], w[p:])))
        reps = [w for w in words if w not in pivots]
        table = {}
        for w in words:
            if w in pivots:
                table[w] = {u: -v for u, v in pivots[w].items() if u != w}
            else:
                table[w] = {w: Fraction(1)}
        self.tables[multiset] = table
        self.reps[multiset] = reps
        return table

    def representatives(self, letters) -> list:
        multiset = tuple(sorted(letters))
        self._table(multiset)
        return list(self.reps[multiset])

    def dim(self, letters) -> int:
        return len(self.representatives(letters))

    def reduce_word(self, word: Word) -> dict:
        table = self._table(tuple(sorted(word)))
        return table[word]

    def reduce(self, elem: Elem) -> Elem:
        out: Elem = {}
        for word, coeff in elem.items():
            add_scaled(out, self.reduce_word(word), coeff)
        return out

    def is_representative(self, word: Word) -> bool:
        red = self.reduce_word(word)
        return red == {word: Fraction(1)}

    def dump_json(self, multisets) -> str:
        """JSON description {multiset, dim, representatives} per multiset."""
        out = []
        for ms in multisets:
            reps = self.representatives(ms)
            out.append(
                {
                    "multiset": [str(a.ident) for a in sorted(ms)],
                    "dim": len(reps),
                    "representatives": [[str(a.ident) for a in w] for w in reps],
                }
            )
        return json.dumps(out)


def build_quotient(alphabet, max_len: int) -> ShuffleQuotient:
    """Quotient tables for every letter multiset of size <= max_len."""
    from itertools import combinations_with_replacement

    q = ShuffleQuotient(max_len)
    for n in range(1, max_len + 1):
        for ms in combinations_with_replacement(sorted(alphabet), n):
            q._table(tuple(ms))
    return q


def delta(word: Word, quotient: ShuffleQuotient) -> dict:
    """Lie cocrochet on a quotient class, returned on representative pairs.

    delta(a_[1,n]) = sum_(0<j<n) a_[1,j] (x) a_[j+1,n]
                     - (-1)^(deg left * deg right) a_[j+1,n] (x) a_[1,j].
    """
    out: dict = {}
    n = len(word)
    for j in range(1, n):
        left, right = word[:j], word[j:]
        rl = quotient.reduce_word(left)
        rr = quotient.reduce_word(right)
        sign = -1 if (word_deg(left) % 2 and word_deg(right) % 2) else 1
        for u, cu in rl.items():
            for v, cv in rr.items():
                add_term(out, (u, v), cu * cv)
                add_term(out, (v, u), -Fraction(sign) * cu * cv)
    return out


def delta_elem(elem: Elem, quotient: ShuffleQuotient) -> dict:
    out: dict = {}
    for word, coeff in elem.items():
        for pair, c in delta(word, quotient).items():
            add_term(out, pair, coeff * c)
    return out


def lift_morphism(taylor: dict, quotient_out: ShuffleQuotient):
    """Unique cocrochet-coalgebra morphism with the given Taylor parts.

    ``taylor[r]`` maps an r-letter word to a dict Letter' -> Fraction over the
    target alphabet.  On a word the lift is the signless sum over compositions
    n = r_1 + ... + r_k of F_(r_1)(first block) (x) ... (x) F_(r_k)(last block),
    reduced in the target quotient.
    """

    def blocks(word, parts_out):
        if not word:
            yield parts_out
            return
        for r in taylor:
            if r <= len(word):
                yield from blocks(word[r:], parts_out + [word[:r]])

    def F(word: Word) -> Elem:
        out: Elem = {}
        for split in blocks(word, []):
            factors = []
            for block in split:
                val = taylor[len(block)](block)
                if not val:
                    factors = None
                    break
                factors.append(val)
            if factors is None:
                continue
            partial: Elem = {(): Fraction(1)}
            for val in factors:
                nxt: Elem = {}
                for w, cw in partial.items():
                    for letter, c in val.items():
                        add_term(nxt, w + (letter,), cw * c)
                partial = nxt
            add_scaled(out, partial)
        return quotient_out.reduce(out)

    return F


def lift_coderivation(taylor: dict, q: int, quotient: ShuffleQuotient):
    """Unique cocrochet coderivation of degree q with the given Taylor parts.

        Q(a_[1,n]) = sum_(r,j) (-1)^(q * deg a_[1,j])
                     a_[1,j] (x) Q_r(a_[j+1,j+r]) (x) a_[j+r+1,n]
    """

    def Q(word: Word) -> Elem:
        out: Elem = {}
        n = len(word)
        for r, Qr in taylor.items():
            if r > n:
                continue
            for j in range(0, n - r + 1):
                sign = 1
                if q % 2 and word_deg(word[:j]) % 2:
                    sign = -1
                for letter, c in Qr(word[j : j + r]).items():
                    add_term(out, word[:j] + (letter,) + word[j + r :], Fraction(sign) * c)
        return quotient.reduce(out)

    return Q


def mu(alg, quotient: ShuffleQuotient):
    """C-infinity differential: the degree 1 coderivation lifting the shifted product.

    ``alg`` is a graded-commutative FiniteAlgebra; words are over the shifted
    letters of its basis.  mu(a_[1,n]) = sum_k (-1)^(a_1+...+a_(k-1))
    a_[1,k-1] (x) m2(a_k, a_(k+1)) (x) a_[k+2,n], reduced.
    """
    if not alg.commutative:
        raise ValueError("mu needs a graded-commutative algebra")

    def m2s(word: Word) -> dict:
        a, b = word
        sign = -1 if a.degree % 2 else 1
        return {
            shifted(c): Fraction(sign) * v
            for c, v in alg.mul_letters(
                alg.by_ident[a.ident], alg.by_ident[b.ident]
            ).items()
        }

    return lift_coderivation({2: m2s}, 1, quotient)


def validate_harrison_cochain(C: dict, quotient: ShuffleQuotient):
    """A Harrison cochain must be stored on representative words only."""
    for word in C:
        if not quotient.is_representative(word):
            raise ValueError(f"cochain supported on a non-representative word: {word}")


def d_harrison(C: dict, n: int, alg, module, quotient: ShuffleQuotient):
    """Harrison coboundary of an (n-1)-cochain over a commutative algebra.

    ``C`` maps representative (n-1)-letter words (shifted letters) to module
    elements; the algebra must be concentrated in degree 0 (the classical
    case).  The value on an n-letter class is

        a_1.C(a_2...a_n) + sum_j (-1)^j C(a_1 ... a_j a_(j+1) ... a_n)
        + (-1)^n C(a_1...a_(n-1)).a_n

    and again kills shuffle images.  Returns a callable on length-n words.
    """
    for a in alg.letters:
        if a.degree != 0:
            raise ValueError("Harrison coboundary is for ungraded algebras")
    validate_harrison_cochain(C, quotient)

    def evalC(elem: Elem) -> dict:
        out: dict = {}
        for word, coeff in quotient.reduce(elem).items():
            add_scaled(out, C.get(word, {}), coeff)
        return out

    def dC(word: Word) -> dict:
        if len(word) != n:
            raise ValueError(f"expected word of length {n}")
        out: dict = {}
        a1 = alg.by_ident[word[0].ident]
        an = alg.by_ident[word[-1].ident]
        add_scaled(out, module.act_left(a1, evalC({word[1:]: Fraction(1)})))
        for j in range(n - 1):
            prod = alg.mul_letters(
                alg.by_ident[word[j].ident], alg.by_ident[word[j + 1].ident]
            )
            sign = -1 if (j + 1) % 2 else 1
            for letter, c in prod.items():
                neww = word[:j] + (shifted(letter),) + word[j + 2 :]
                add_scaled(out, evalC({neww: Fraction(1)}), Fraction(sign) * c)
        sign = -1 if n % 2 else 1
        add_scaled(
            out, module.act_right(evalC({word[:-1]: Fraction(1)}), an), Fraction(sign)
        )
        return out

    return dC
