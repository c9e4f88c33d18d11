"""Polyvector fields with polynomial coefficients over Q, exact throughout.

A monomial is a pair (exponent vector, strictly increasing direction tuple);
a polyvector of tensor degree k is a sparse dict of such monomials.  The
homogeneous subalgebra keeps coefficient degree equal to tensor degree, which
closes under wedge and the Schouten bracket and is finite dimensional.

Directions behave like odd generators: sorting a direction product picks up
the ordinary signature of the sort.  The Schouten bracket is the standard
contraction formula; its normalization is fixed by two requirements checked
in the test suite: on vector fields it is the Lie bracket, and the graded
Leibniz rule holds exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .graded import Letter

Mono = tuple  # (exps: tuple[int, ...], dirs: tuple[int, ...]) with dirs 1-based


class Polyvec:
    """Homogeneous-in-tensor-degree polyvector field on R^d."""

    def __init__(self, d: int, k: int, terms=None):
        self.d = d
        self.k = k
        self.terms: dict[Mono, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                self.add(mono, c)

    def add(self, mono: Mono, coeff):
        coeff = Fraction(coeff)
        if not coeff:
            return
        exps, dirs = mono
        assert len(exps) == self.d and len(dirs) == self.k
        assert all(dirs[i] < dirs[i + 1] for i in range(len(dirs) - 1))
        s = self.terms.get(mono, 0) + coeff
        if s:
            self.terms[mono] = s
        else:
            self.terms.pop(mono, None)

    def __eq__(self, other):
        return (
            isinstance(other, Polyvec)
            and self.d == other.d
            and self.k == other.k
            and self.terms == other.terms
        )

    def __add__(self, other):
        assert self.d == other.d and self.k == other.k
        out = Polyvec(self.d, self.k, self.terms)
        for mono, c in other.terms.items():
            out.add(mono, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "Polyvec":
        c = Fraction(c)
        return Polyvec(self.d, self.k, {m: v * c for m, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        """Coefficient degree equals tensor degree on every monomial."""
        return all(sum(exps) == self.k for exps, _ in self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (exps, dirs), c in sorted(self.terms.items()):
            xs = "*".join(
                "x%d" % (i + 1) if e == 1 else "x%d^%d" % (i + 1, e)
                for i, e in enumerate(exps)
                for _ in [0]
                if e
            )
            ds = "d" + "".join(str(i) for i in dirs) if dirs else ""
            body = " ".join(b for b in (xs, ds) if b)
            bits.append(f"({c}){body if body else '1'}")
        return " + ".join(bits)


def unit(d: int, c=1) -> Polyvec:
    return Polyvec(d, 0, {((0,) * d, ()): Fraction(c)})


def mono_vf(d: int, coord: int, direction: int) -> Polyvec:
    """The linear vector field x_coord d_direction (1-based indices)."""
    exps = [0] * d
    exps[coord - 1] = 1
    return Polyvec(d, 1, {(tuple(exps), (direction,)): Fraction(1)})


def basis(d: int, k: int) -> list[Mono]:
    """All homogeneous basis monomials at tensor degree k.

    Count is C(d, k) * C(d+k-1, k): direction subsets times degree-k exponent
    vectors.
    """
    if not 0 <= k <= d:
        raise ValueError(f"tensor degree {k} out of range for d={d}")
    out = []
    for dirs in combinations(range(1, d + 1), k):
        for bars in combinations_with_replacement(range(d), k):
            exps = [0] * d
            for i in bars:
                exps[i] += 1
            out.append((tuple(exps), dirs))
    return out


def _merge_dirs(da: tuple, db: tuple):
    """Sorted concatenation of direction tuples with its signature, or None."""
    if set(da) & set(db):
        return None, 0
    merged = list(da) + list(db)
    sign = 1
    # insertion sort counting transpositions; directions are odd symbols
    for i in range(1, len(merged)):
        j = i
        while j > 0 and merged[j - 1] > merged[j]:
            merged[j - 1], merged[j] = merged[j], merged[j - 1]
            sign = -sign
            j -= 1
    return tuple(merged), sign


def wedge(a: Polyvec, b: Polyvec) -> Polyvec:
    if a.d != b.d:
        raise ValueError("dimension mismatch")
    out = Polyvec(a.d, a.k + b.k)
    for (ea, da), ca in a.terms.items():
        for (eb, db), cb in b.terms.items():
            dirs, sign = _merge_dirs(da, db)
            if dirs is None:
                continue
            exps = tuple(x + y for x, y in zip(ea, eb))
            out.add((exps, dirs), ca * cb * sign)
    return out


def _dxi(mono: Mono, i: int):
    """Right derivative with respect to the odd direction i, or None."""
    exps, dirs = mono
    if i not in dirs:
        return None, 0
    pos = dirs.index(i)
    sign = -1 if (len(dirs) - 1 - pos) % 2 else 1
    return (exps, dirs[:pos] + dirs[pos + 1 :]), sign


def _dx(mono: Mono, i: int):
    """Derivative of the coefficient in the coordinate x_i (1-based)."""
    exps, dirs = mono
    e = exps[i - 1]
    if not e:
        return None, 0
    newe = list(exps)
    newe[i - 1] -= 1
    return (tuple(newe), dirs), e


def _dot(a: Polyvec, b: Polyvec) -> Polyvec:
    """sum_i (da/dxi_i) wedge (db/dx_i), the half of the Schouten bracket."""
    out = Polyvec(a.d, a.k + b.k - 1)
    for (ea, da), ca in a.terms.items():
        for i in da:
            (ma, sa) = _dxi((ea, da), i)[0], _dxi((ea, da), i)[1]
            for (eb, db), cb in b.terms.items():
                mb, eb_coeff = _dx((eb, db), i)
                if mb is None:
                    continue
                dirs, sign = _merge_dirs(ma[1], mb[1])
                if dirs is None:
                    continue
                exps = tuple(x + y for x, y in zip(ma[0], mb[0]))
                out.add((exps, dirs), ca * cb * sa * eb_coeff * sign)
    return out


def schouten(a: Polyvec, b: Polyvec) -> Polyvec:
    """Schouten bracket, tensor degree k_a + k_b - 1.

    [a, b] = a.b - (-1)^((k_a - 1)(k_b - 1)) b.a  with
    a.b = sum_i (da/dxi_i) wedge (db/dx_i).
    """
    if a.d != b.d:
        raise ValueError("dimension mismatch")
    first = _dot(a, b)
    second = _dot(b, a)
    sign = -1 if ((a.k - 1) * (b.k - 1)) % 2 else 1
    return first - second.scale(sign)


def mu2(a: Polyvec, b: Polyvec) -> Polyvec:
    """Shifted product on G[1]: (-1)^(k_a - 1) a wedge b."""
    sign = -1 if (a.k - 1) % 2 else 1
    return wedge(a, b).scale(sign)


def shifted_bracket(a: Polyvec, b: Polyvec) -> Polyvec:
    """The Schouten bracket seen on G[1], where it has degree 0."""
    return schouten(a, b)


def f1(a: Polyvec) -> Fraction:
    """Projection onto the constants: the value for k = 0, else 0.

    This is a morphism of Gerstenhaber algebras onto the base field with the
    trivial bracket.
    """
    if a.k != 0:
        return Fraction(0)
    return a.terms.get(((0,) * a.d, ()), Fraction(0))


_TERM_RE = re.compile(
    r"^\s*(?P<coef>[+-]?\d+(?:/\d+)?)?\s*\*?\s*(?P<xs>(?:x\d+(?:\^\d+)?\s*\*?\s*)*)"
    r"(?P<dirs>d\d+)?\s*$"
)


def parse_polyvec(text: str, d: int) -> Polyvec:
    """Parse expressions like "x1*x2 d23", "3/2 x1^2 d1 - x2*x3 d13", "5".

    Terms are separated by + and -; each term is an optional rational, a
    product of x factors, and an optional direction block dI...I (single digit
    indices).
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polyvector expression")
    chunks = re.findall(r"[+-]?[^+-]+", text)
    parsed = []
    for chunk in chunks:
        sign = Fraction(1)
        body = chunk.strip()
        if body.startswith("+"):
            body = body[1:]
        elif body.startswith("-"):
            sign = Fraction(-1)
            body = body[1:]
        m = _TERM_RE.match(body)
        if not m:
            raise ValueError(f"cannot parse term {chunk!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        exps = [0] * d
        for xm in re.finditer(r"x(\d+)(?:\^(\d+))?", m.group("xs") or ""):
            idx = int(xm.group(1))
            if not 1 <= idx <= d:
                raise ValueError(f"coordinate x{idx} out of range for d={d}")
            exps[idx - 1] += int(xm.group(2) or 1)
        dirs = ()
        if m.group("dirs"):
            digits = [int(ch) for ch in m.group("dirs")[1:]]
            if any(not 1 <= i <= d for i in digits):
                raise ValueError(f"direction out of range in {chunk!r}")
            dirs = tuple(digits)
            if sorted(set(dirs)) != list(dirs):
                raise ValueError(f"directions must be strictly increasing: {chunk!r}")
        parsed.append((tuple(exps), dirs, sign * coef))
    k = len(parsed[0][1])
    if any(len(dirs) != k for _, dirs, _ in parsed):
        raise ValueError("mixed tensor degrees in one expression")
    out = Polyvec(d, k)
    for exps, dirs, c in parsed:
        out.add((exps, dirs), c)
    return out


def hom_letter(d: int, mono: Mono) -> Letter:
    """Letter for a homogeneous basis monomial, graded in the shifted space."""
    exps, dirs = mono
    return Letter((len(dirs), dirs, exps), len(dirs) - 1)


def letter_polyvec(d: int, letter: Letter) -> Polyvec:
    k, dirs, exps = letter.ident
    return Polyvec(d, k, {(exps, dirs): Fraction(1)})
