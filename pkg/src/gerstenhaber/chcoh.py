"""Cochain complexes on packet monomials and their combined coboundary.

A level-N cochain assigns, to every canonical monomial whose packet lengths
sum to N, an element of a target Gerstenhaber algebra; it is symmetric with
Koszul signs (built into monomial canonicalization) and kills shuffle images
(packets are quotient representatives).  The coboundary has a product part
(detach the first or last letter of one packet through the declared letter
morphism, or apply the packet differential) and a bracket part (merge two
packets through the bracket extension, or pull a single-letter packet out
through the morphism into the target bracket).  Everything is exact.

Evaluated on a monomial W the terms are, writing x_i for packet degrees:

  product part, for each packet X_j of length >= 2 with letters a_1..a_p:
    (-1)^(deg a_1 * sum_(i<j) x_i)  mu2'(f1(a_1), f(... X_j minus first ...))
    (-1)^(deg a_p * sum_(i>j) x_i)  mu2'(f(... X_j minus last ...), f1(a_p))
    -(-1)^(sum_(i<j) x_i)           f(... mu(X_j) ...)
  bracket part:
    -eps(x / x_j x_k rest)          f(l2(X_j, X_k) . rest)      for j < k
    eps(x / x_j rest)               l2'(f1(X_j), f(rest))       for length-1 X_j
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from .exactlin import SparseMat, solve_in_column_span
from .genv import GerstBasis, h_bracket, h_mu
from .graded import Letter, koszul_sign
from .ginfty import Mono, mono_deg, mono_key, packet_sort_key, pdeg, add_mono
from .shuffleco import ShuffleQuotient
from .tensorco import add_scaled, add_term

Vec = dict  # dict[Letter, Fraction] over the target basis


class TruncationError(Exception):
    """A required shape or length falls outside the declared truncation."""


class Truncation:
    """Finite window: spatial dimension, max letter tensor degree, max level N,
    max packet count n."""

    def __init__(self, d: int, kmax: int, Nmax: int, nmax: int):
        self.d = d
        self.kmax = kmax
        self.Nmax = Nmax
        self.nmax = nmax

    def __repr__(self):
        return f"Truncation(d={self.d}, kmax={self.kmax}, Nmax={self.Nmax}, nmax={self.nmax})"

    def as_dict(self):
        return {"d": self.d, "kmax": self.kmax, "Nmax": self.Nmax, "nmax": self.nmax}


def real_target() -> GerstBasis:
    """The base field as a Gerstenhaber algebra: degree 0, product, zero bracket."""
    one = Letter(("R",), -1)
    return GerstBasis([one], {(one.ident, one.ident): {one.ident: Fraction(1)}}, {})


class ChContext:
    """Source algebra, its shuffle quotient, target algebra and letter morphism.

    ``f1`` maps source letters to target elements; it must be a degree 0
    morphism of the unshifted algebras (checked for the instances built here
    by their own tests, not at construction).
    """

    def __init__(self, source: GerstBasis, target: GerstBasis, f1: dict,
                 quotient: ShuffleQuotient | None = None):
        self.source = source
        self.target = target
        self.f1 = {a: {b: Fraction(c) for b, c in val.items() if c}
                   for a, val in f1.items() if val}
        self.quotient = quotient if quotient is not None else ShuffleQuotient()
        # when f1 only hits degree -1 letters, every coboundary term references
        # arguments of degree exactly deg(W)+1, enabling exact degree pruning
        self.f1_shifts_by_one = all(a.degree == -1 for a in self.f1)
        self._rep_words: dict[int, list] = {}

    def rep_words(self, length: int) -> list:
        """All representative words of the given length, in canonical order."""
        words = self._rep_words.get(length)
        if words is None:
            words = []
            for ms in combinations_with_replacement(self.source.letters, length):
                words.extend(self.quotient.representatives(ms))
            words.sort(key=packet_sort_key)
            self._rep_words[length] = words
        return words


def real_polyvec_context(d: int, kmax: int | None = None) -> ChContext:
    """Homogeneous polyvector fields mapped onto the base field by the
    constants projection."""
    from .genv import polyvec_basis

    source = polyvec_basis(d, kmax)
    target = real_target()
    one = target.letters[0]
    f1 = {}
    for a in source.letters:
        if a.degree == -1:  # tensor degree 0: the constants
            f1[a] = {one: Fraction(1)}
    return ChContext(source, target, f1)


# ---------------------------------------------------------------------------
# coboundary terms

def _linmap_apply(ctx: ChContext, spec, v: Vec) -> Vec:
    """Apply one of the target-side linear maps to a target element.

    All degree signs are resolved during term generation (the shifted degree
    of a cochain value is the degree of its argument plus one), so these maps
    are plain structure-constant products.
    """
    kind = spec[0]
    if kind == "id":
        return v
    out: Vec = {}
    if kind == "mul_l":
        a = spec[1]
        for b, cb in v.items():
            add_scaled(out, ctx.target.wedge(a, b), cb)
    elif kind == "mul_r":
        a = spec[1]
        for b, cb in v.items():
            add_scaled(out, ctx.target.wedge(b, a), cb)
    elif kind == "ell_l":
        a = spec[1]
        for b, cb in v.items():
            add_scaled(out, ctx.target.bracket(a, b), cb)
    else:
        raise ValueError(spec)
    return out


def d_ch_terms(mono: Mono, ctx: ChContext, product_part=True, bracket_part=True):
    """Yield (coefficient, linmap spec, canonical argument monomial)."""
    n = len(mono)
    degs = [pdeg(w) for w in mono]
    quo = ctx.quotient

    def splice(j: int, values: dict, base: Fraction, spec):
        """Replace slot j by each word of ``values`` and canonicalize."""
        out = []
        for w, cw in values.items():
            packs = [mono[k] if k != j else w for k in range(n)]
            key, sign = mono_key(packs)
            if key is not None:
                out.append((base * cw * sign, spec, key))
        return out

    terms = []
    if product_part:
        total_deg = sum(degs)
        for j in range(n):
            packet = mono[j]
            if len(packet) < 2:
                continue
            a_first, a_last = packet[0], packet[-1]
            f1a = ctx.f1.get(a_first)
            if f1a:
                # mu2' sign (-1)^(deg of the detached letter)
                e = a_first.degree * sum(degs[:j]) + a_first.degree
                base = Fraction(-1 if e % 2 else 1)
                red = quo.reduce_word(packet[1:])
                for ap, cf in f1a.items():
                    terms += splice(j, red, base * cf, ("mul_l", ap))
            f1b = ctx.f1.get(a_last)
            if f1b:
                # mu2' sign (-1)^(deg f(M)) with deg f(M) = deg M + 1
                # and deg M = total - deg a_last
                e = a_last.degree * sum(degs[j + 1:]) + (total_deg - a_last.degree + 1)
                base = Fraction(-1 if e % 2 else 1)
                red = quo.reduce_word(packet[:-1])
                for ap, cf in f1b.items():
                    terms += splice(j, red, base * cf, ("mul_r", ap))
            base = Fraction(-1 if sum(degs[:j]) % 2 == 0 else 1)  # -(-1)^(sum)
            terms += splice(j, h_mu(packet, ctx.source, quo), base, ("id",))
    if bracket_part:
        for j in range(n):
            for k in range(j + 1, n):
                rest = [mono[i] for i in range(n) if i != j and i != k]
                perm = [j, k] + [i for i in range(n) if i != j and i != k]
                eps = koszul_sign(degs, perm)
                lsign = -1 if degs[j] % 2 else 1  # l2 = (-1)^(x_j) [ , ]
                base = Fraction(-eps * lsign)
                for w, cw in h_bracket(mono[j], mono[k], ctx.source, quo).items():
                    key, sign = mono_key([w] + rest)
                    if key is not None:
                        terms.append((base * cw * sign, ("id",), key))
        for j in range(n):
            if len(mono[j]) != 1 or n == 1:
                continue
            f1a = ctx.f1.get(mono[j][0])
            if not f1a:
                continue
            if not ctx.target.bracket_table:
                continue
            rest = [mono[i] for i in range(n) if i != j]
            perm = [j] + [i for i in range(n) if i != j]
            eps = koszul_sign(degs, perm)
            # l2' sign (-1)^(packet degree of the pulled-out letter)
            if degs[j] % 2:
                eps = -eps
            key, sign = mono_key(rest)
            if key is None:
                continue
            for ap, cf in f1a.items():
                terms.append((Fraction(eps * sign) * cf, ("ell_l", ap), key))
    return terms


def d_ch_value(feval, mono: Mono, ctx: ChContext, product_part=True,
               bracket_part=True) -> Vec:
    """Value of the coboundary of the cochain ``feval`` on one monomial."""
    out: Vec = {}
    for coeff, spec, arg in d_ch_terms(mono, ctx, product_part, bracket_part):
        v = feval(arg)
        if v:
            add_scaled(out, _linmap_apply(ctx, spec, v), coeff)
    return out


def d_m_value(feval, mono, ctx) -> Vec:
    return d_ch_value(feval, mono, ctx, True, False)


def d_ell_value(feval, mono, ctx) -> Vec:
    return d_ch_value(feval, mono, ctx, False, True)


def d_ch(f, ctx: ChContext, trunc: "Truncation") -> "Cochain":
    """The coboundary of a cochain as a stored cochain, one level up.

    Evaluates on every monomial of every shape reachable from the level's
    shapes inside the truncation; raises TruncationError when a shape
    reachable from f's own support would fall outside the window.
    """
    fshapes = set(f.shapes())
    bad = [s for s in reachable_shapes(fshapes)
           if sum(s) > trunc.Nmax or len(s) > trunc.nmax]
    if bad:
        raise TruncationError(f"required shapes outside truncation: {bad}")
    skip_ok = ctx.f1_shifts_by_one and f.degree_support is not None
    values: dict = {}
    for shape in reachable_shapes(level_shapes(f.level, trunc.nmax)):
        if sum(shape) > trunc.Nmax or len(shape) > trunc.nmax:
            continue
        if not referenced_shapes(shape) & fshapes:
            continue
        for mono in monomials_for_shape(ctx, shape):
            if skip_ok and (mono_deg(mono) + 1) not in f.degree_support:
                continue  # every term evaluates f in degrees where it vanishes
            val = d_ch_value(f.eval, mono, ctx)
            if val:
                values[mono] = val
    return Cochain(values, f.level + 1)


def d_ch_row(mono: Mono, ctx: ChContext) -> dict:
    """Symbolic expansion: {(argument mono, out letter, in letter): coeff}."""
    row: dict = {}
    for coeff, spec, arg in d_ch_terms(mono, ctx):
        for b in ctx.target.letters:
            img = _linmap_apply(ctx, spec, {b: Fraction(1)})
            for lo, c in img.items():
                add_term(row, (arg, lo, b), coeff * c)
    return row


# ---------------------------------------------------------------------------
# cochains

class Cochain:
    """A stored cochain: canonical monomial -> target element, plus metadata."""

    def __init__(self, values: dict, level: int, degree_support=None):
        self.values = {m: {a: Fraction(c) for a, c in v.items() if c}
                       for m, v in values.items() if v}
        self.values = {m: v for m, v in self.values.items() if v}
        self.level = level
        if degree_support is None:
            degree_support = {mono_deg(m) for m in self.values}
        self.degree_support = degree_support

    def eval(self, mono: Mono) -> Vec:
        return self.values.get(mono, {})

    def shapes(self):
        return {tuple(sorted(len(w) for w in m)) for m in self.values}

    def is_zero(self):
        return not self.values


class FormulaCochain:
    """A cochain given by a formula on canonical monomials."""

    def __init__(self, fn, level: int, shapes, degree_support=None):
        self.fn = fn
        self.level = level
        self._shapes = set(shapes)
        self.degree_support = degree_support

    def eval(self, mono: Mono) -> Vec:
        return self.fn(mono)

    def shapes(self):
        return set(self._shapes)


def f3_111(d: int, ctx: ChContext) -> FormulaCochain:
    """The scalar 3-cochain on triples of single vector-field packets.

    On linear vector fields with basis letters x_a d_b the value is

        [b1=a2][b2=a3][b3=a1] - [b1=a3][b3=a2][b2=a1]

    (the two cyclic index contractions of the three Jacobians), and 0 whenever
    any packet is longer than one letter or any letter is not a vector field.
    """
    one = ctx.target.letters[0]

    def coords(letter: Letter):
        k, dirs, exps = letter.ident
        if k != 1:
            return None
        a = exps.index(1) + 1
        return (a, dirs[0])

    def fn(mono: Mono) -> Vec:
        if len(mono) != 3 or any(len(w) != 1 for w in mono):
            return {}
        cs = [coords(w[0]) for w in mono]
        if any(c is None for c in cs):
            return {}
        (a1, b1), (a2, b2), (a3, b3) = cs
        val = Fraction(0)
        if b1 == a2 and b2 == a3 and b3 == a1:
            val += 1
        if b1 == a3 and b3 == a2 and b2 == a1:
            val -= 1
        return {one: val} if val else {}

    return FormulaCochain(fn, 3, {(1, 1, 1)}, degree_support={-3})


# ---------------------------------------------------------------------------
# shape and monomial enumeration

def level_shapes(N: int, nmax: int) -> list:
    """Partitions of N into at most nmax parts, as sorted tuples."""
    out = []

    def rec(remaining, maxpart, acc):
        if remaining == 0:
            out.append(tuple(sorted(acc)))
            return
        if len(acc) == nmax:
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, acc + [p])

    rec(N, N, [])
    return sorted(set(out))


def reachable_shapes(shapes) -> list:
    """Shapes one coboundary step away from the given ones."""
    out = set()
    for shape in shapes:
        parts = list(shape)
        for j, p in enumerate(parts):
            out.add(tuple(sorted(parts[:j] + [p + 1] + parts[j + 1:])))
            rest = parts[:j] + parts[j + 1:]
            for q1 in range(1, p + 1):
                out.add(tuple(sorted(rest + [q1, p + 1 - q1])))
    return sorted(out)


def referenced_shapes(shape) -> set:
    """Shapes of the cochain arguments appearing in the coboundary on ``shape``.

    Letter detachment and the packet differential shorten one part, the
    bracket merges two parts into one of their combined length minus one, and
    the target bracket term drops one length-1 part.
    """
    parts = list(shape)
    out = set()
    for j, p in enumerate(parts):
        rest = parts[:j] + parts[j + 1:]
        if p > 1:
            out.add(tuple(sorted(rest + [p - 1])))
        elif rest:
            out.add(tuple(sorted(rest)))
    for j in range(len(parts)):
        for k in range(j + 1, len(parts)):
            rest = [parts[i] for i in range(len(parts)) if i not in (j, k)]
            out.add(tuple(sorted(rest + [parts[j] + parts[k] - 1])))
    return out


def monomials_for_shape(ctx: ChContext, shape) -> list:
    """Canonical basis monomials of one shape over the context letters."""
    by_len: dict[int, int] = {}
    for p in shape:
        by_len[p] = by_len.get(p, 0) + 1
    groups = []
    for p in sorted(by_len):
        words = ctx.rep_words(p)
        choices = []
        for combo in combinations_with_replacement(range(len(words)), by_len[p]):
            packs = [words[i] for i in combo]
            ok = True
            for a, b in zip(packs, packs[1:]):
                if a == b and pdeg(a) % 2:
                    ok = False
                    break
            if ok:
                choices.append(packs)
        groups.append(choices)
    out = []

    def rec(i, acc):
        if i == len(groups):
            out.append(tuple(acc))
            return
        for packs in groups[i]:
            rec(i + 1, acc + packs)

    rec(0, [])
    return out


def monomials_for_level(ctx: ChContext, N: int, nmax: int):
    for shape in level_shapes(N, nmax):
        for mono in monomials_for_shape(ctx, shape):
            yield mono


# ---------------------------------------------------------------------------
# cocycle / coboundary decisions

def is_cocycle(f, ctx: ChContext, trunc: Truncation, report=False):
    """Whether d(f) vanishes on every monomial inside the truncation.

    The target shapes reachable from f's shapes must fit inside the declared
    window, otherwise a TruncationError reports the missing shapes instead of
    silently shrinking the check.
    """
    fshapes = set(f.shapes())
    targets = reachable_shapes(fshapes)
    bad = [s for s in targets if sum(s) > trunc.Nmax or len(s) > trunc.nmax]
    if bad:
        raise TruncationError(f"required shapes outside truncation: {bad}")
    skip_ok = ctx.f1_shifts_by_one and f.degree_support is not None
    checked = 0
    for shape in reachable_shapes(level_shapes(f.level, trunc.nmax)):
        if sum(shape) > trunc.Nmax or len(shape) > trunc.nmax:
            continue
        if not referenced_shapes(shape) & fshapes:
            continue  # every coboundary term evaluates f where it vanishes
        for mono in monomials_for_shape(ctx, shape):
            if skip_ok and (mono_deg(mono) + 1) not in f.degree_support:
                continue
            checked += 1
            val = d_ch_value(f.eval, mono, ctx)
            if val:
                return (False, mono) if report else False
    return (True, checked) if report else True


def is_coboundary(f, ctx: ChContext, trunc: Truncation):
    """Exact solve of d(g) = f over all level-(N-1) shapes, or None.

    The system splits into independent blocks by monomial degree (every
    coboundary term references arguments of degree deg(W)+1 when the letter
    morphism is supported in degree -1); each block is decided by an exact
    rank comparison, and a preimage is assembled when every block is solvable.
    """
    N = f.level
    if N < 1:
        raise ValueError("level must be >= 1")
    if not ctx.f1_shifts_by_one:
        raise ValueError("degree-blocked solve needs a degree -1 letter morphism")
    src_shapes = level_shapes(N - 1, trunc.nmax)
    row_shapes = level_shapes(N, trunc.nmax)
    missing = [s for s in f.shapes() if s not in row_shapes]
    if missing:
        raise TruncationError(f"cochain shapes outside truncation: {missing}")

    cols_by_deg: dict[int, list] = {}
    for shape in src_shapes:
        for mono in monomials_for_shape(ctx, shape):
            cols_by_deg.setdefault(mono_deg(mono), []).append(mono)

    rows_by_deg: dict[int, list] = {}
    for shape in row_shapes:
        for mono in monomials_for_shape(ctx, shape):
            rows_by_deg.setdefault(mono_deg(mono), []).append(mono)

    tletters = ctx.target.letters
    tindex = {a: i for i, a in enumerate(tletters)}
    nt = len(tletters)
    preimage: dict = {}
    for dW, rows in rows_by_deg.items():
        cols = cols_by_deg.get(dW + 1, [])
        col_index = {m: i for i, m in enumerate(cols)}
        mat = SparseMat(len(rows) * nt, len(cols) * nt)
        b: dict[int, Fraction] = {}
        any_b = False
        for ri, W in enumerate(rows):
            for (arg, lo, li), c in d_ch_row(W, ctx).items():
                ci = col_index.get(arg)
                if ci is not None:
                    r = ri * nt + tindex[lo]
                    cc = ci * nt + tindex[li]
                    mat[r, cc] = mat[r, cc] + c
            fv = f.eval(W)
            for lo, c in fv.items():
                b[ri * nt + tindex[lo]] = c
                any_b = True
        if not any_b and not cols:
            continue
        x = solve_in_column_span(mat, b)
        if x is None:
            return None
        for ci, c in x.items():
            if c:
                mono = cols[ci // nt]
                letter = tletters[ci % nt]
                preimage.setdefault(mono, {})[letter] = c
    return Cochain(preimage, N - 1)


def assemble_matrix(ctx: ChContext, src_shapes, row_shapes=None):
    """Exact matrix of the coboundary from the given source shapes.

    Rows run over all monomials of ``row_shapes`` (by default every shape
    reachable from the sources) times target letters, columns over source
    monomials times target letters.  Returns (matrix, row index list, column
    index list).
    """
    if row_shapes is None:
        row_shapes = reachable_shapes(src_shapes)
    cols = []
    for shape in src_shapes:
        cols.extend(monomials_for_shape(ctx, shape))
    rows = []
    for shape in row_shapes:
        rows.extend(monomials_for_shape(ctx, shape))
    tletters = ctx.target.letters
    tindex = {a: i for i, a in enumerate(tletters)}
    nt = len(tletters)
    col_index = {m: i for i, m in enumerate(cols)}
    mat = SparseMat(len(rows) * nt, len(cols) * nt)
    for ri, W in enumerate(rows):
        for (arg, lo, li), c in d_ch_row(W, ctx).items():
            ci = col_index.get(arg)
            if ci is None:
                continue
            r = ri * nt + tindex[lo]
            cc = ci * nt + tindex[li]
            mat[r, cc] = mat[r, cc] + c
    return mat, rows, cols


# ---------------------------------------------------------------------------
# morphism reconstruction (tableaux)

def _compositions(p: int):
    """All ways to cut a length-p packet into contiguous nonempty parts."""
    out = []
    for mask in range(1 << (p - 1)):
        parts = []
        start = 0
        for i in range(p - 1):
            if mask & (1 << i):
                parts.append((start, i + 1))
                start = i + 1
        parts.append((start, p))
        out.append(parts)
    return out


def _column_assignments(part_counts, t):
    """Assignments of each row's parts to strictly increasing columns in 1..t."""
    from itertools import combinations as comb

    rows = []
    for r in part_counts:
        rows.append(list(comb(range(t), r)))
    out = []

    def rec(i, acc):
        if i == len(rows):
            out.append(list(acc))
            return
        for choice in rows[i]:
            rec(i + 1, acc + [choice])

    rec(0, [])
    return out


def _wdeg(word) -> int:
    return sum(a.degree for a in word)


def tableau_sign(cols, tcells) -> int:
    """Sign carrying a tableau from reading order to column order.

    Cells are consumed column by column, inside a column in row order; pulling
    a cell out of the remaining reading-order sequence crosses every cell
    still in front of it.  Crossing factors are Koszul signs on word degrees,
    with a suspension marker on one side in all but one case:

      crossing cell   crossed cell    factor exponent (word degrees)
      whole           whole           (ws+1)(wc+1)
      whole           piece            ws (wc+1)
      piece joining   piece            ws (wc+1)
      piece opening   piece            ws  wc
      piece           whole           (ws+1) wc

    and a piece that opens a new column, is not the last piece of its row and
    crossed at least one piece contributes one extra (-1)^(its word degree).
    The convention is pinned by the comorphism identities; it has been checked
    against the cocrochet-recursion lift on every shape with at most two cut
    packets of length at most 2 plus uncut packets, and on single packets of
    length up to 4.
    """
    remaining = list(tcells)
    e = 0
    for col in cols:
        for ci, c in enumerate(col):
            idx = next(i for i, r in enumerate(remaining) if r[0] == c[0])
            skipped = remaining[:idx]
            opens = ci == 0
            not_row_last = c[3] and c[4] < c[5] - 1
            wc = _wdeg(c[2]) % 2
            skipped_piece = any(s[3] for s in skipped)
            for s in skipped:
                ws = _wdeg(s[2]) % 2
                if not c[3]:
                    e += (ws + 1) * (wc + 1) if not s[3] else ws * (wc + 1)
                elif not s[3]:
                    e += (ws + 1) * wc
                elif not opens:
                    e += ws * (wc + 1)
                else:
                    e += ws * wc
            if c[3] and opens and not_row_last and skipped_piece:
                e += wc
            remaining.pop(idx)
    return -1 if e % 2 else 1


# shapes on which tableau_sign has been verified against the recursion lift;
# all-singleton shapes only admit the trivial tableau and are always safe
TABLEAU_SAFE_SHAPES = {
    (1,), (2,), (3,), (4,), (1, 1), (1, 2), (1, 3), (2, 2), (1, 1, 1),
    (1, 1, 2), (1, 1, 3), (1, 1, 1, 1), (1, 1, 1, 2), (1, 1, 1, 1, 1),
}


def _tableau_safe(shape) -> bool:
    return shape in TABLEAU_SAFE_SHAPES or all(p == 1 for p in shape)


def _iter_tableaux(mono: Mono):
    """Yield (columns, reading-order cells) over all admissible tableaux.

    A cell is (uid, row, word, is_piece, piece_index, row_piece_count).
    Cut parts are contiguous, occupy strictly increasing columns, every
    column holds at least one part (wholes attach to part columns) and the
    column count exceeds the cut count by one.
    """
    n = len(mono)
    all_cuts = [_compositions(len(w)) for w in mono]

    def rec(j, chosen):
        if j < n:
            for cuts in all_cuts[j]:
                yield from rec(j + 1, chosen + [cuts])
            return
        tcells = []
        uid = 0
        rowcells = {}
        for i in range(n):
            rowcells[i] = []
            cnt = len(chosen[i])
            for piidx, (s, e) in enumerate(chosen[i]):
                c = (uid, i, mono[i][s:e], cnt > 1, piidx, cnt)
                tcells.append(c)
                rowcells[i].append(c)
                uid += 1
        cut_rows = [i for i in range(n) if len(chosen[i]) > 1]
        if not cut_rows:
            yield [list(tcells)], tcells
            return
        t = sum(len(c) - 1 for c in chosen) + 1
        part_counts = [len(chosen[i]) for i in cut_rows]
        whole_rows = [i for i in range(n) if len(chosen[i]) == 1]
        for assign in _column_assignments(part_counts, t):
            colparts = [[] for _ in range(t)]
            for ri, row in enumerate(cut_rows):
                for piidx, colu in enumerate(assign[ri]):
                    colparts[colu].append(rowcells[row][piidx])
            if any(not cp for cp in colparts):
                continue

            def place(w, acc):
                if w == len(whole_rows):
                    cols = [
                        sorted(colparts[cidx] + acc[cidx], key=lambda c: c[1])
                        for cidx in range(t)
                    ]
                    yield cols, tcells
                    return
                row = whole_rows[w]
                for cidx in range(t):
                    if colparts[cidx]:
                        acc2 = [list(c) for c in acc]
                        acc2[cidx].append(rowcells[row][0])
                        yield from place(w + 1, acc2)

            yield from place(0, [[] for _ in range(t)])

    yield from rec(0, [])


def tableau_terms(mono: Mono, taylor, source_quotient: ShuffleQuotient,
                  target_quotient: ShuffleQuotient) -> dict:
    """Single-packet component of the lifted bicoalgebra morphism.

    Sums the signed tableaux: each column's cells (reduced to representative
    words) form a monomial handed to the Taylor family, the column values form
    one output word, reduced in the target quotient.  Returns
    {representative output word: coefficient}.
    """
    out: dict = {}
    for cols, tcells in _iter_tableaux(mono):
        sign = Fraction(tableau_sign(cols, tcells))
        val = {(): sign}
        dead = False
        for col in cols:
            colvec: dict = {}
            stack = [([], Fraction(1), 0)]
            while stack:
                ws, c, i = stack.pop()
                if i == len(col):
                    cm, csign = mono_key(ws)
                    if cm is not None:
                        for a, ca in taylor(cm).items():
                            add_term(colvec, a, c * ca * csign)
                    continue
                for rw, rc in source_quotient.reduce_word(col[i][2]).items():
                    stack.append((ws + [rw], c * rc, i + 1))
            if not colvec:
                dead = True
                break
            nxt: dict = {}
            for w, cw in val.items():
                for a, ca in colvec.items():
                    add_term(nxt, w + (a,), cw * ca)
            val = nxt
        if dead:
            continue
        for w, cw in val.items():
            add_scaled(out, target_quotient.reduce_word(w), cw)
    return out


def _kappa1_word(w, quo: ShuffleQuotient) -> dict:
    """Packet cocrochet of one word, on representative pairs."""
    from .ginfty import pdeg as _pdeg

    out: dict = {}
    for j in range(1, len(w)):
        u, v = w[:j], w[j:]
        ud, vd = _pdeg(u), _pdeg(v)
        cut = Fraction(-1 if ud % 2 == 0 else 1)
        for uw, cu in quo.reduce_word(u).items():
            for vw, cv in quo.reduce_word(v).items():
                add_term(out, (uw, vw), cut * cu * cv)
                s = cut if (ud * vd) % 2 == 0 else -cut
                add_term(out, (vw, uw), s * cu * cv)
    return out


def recursion_single(mono: Mono, taylor, source_quotient: ShuffleQuotient,
                     target_quotient: ShuffleQuotient, cache: dict) -> dict:
    """Single-packet lift via the cocrochet comorphism identity.

    The component on a monomial is the Taylor value plus the unique solution P
    of  kappa(P) = (F (x) F) kappa(monomial)  restricted to single-packet
    pairs; the uncut solve is an exact linear system over candidate
    representative words.  Used as the independent oracle for the tableau
    convention and as the lift on shapes outside TABLEAU_SAFE_SHAPES.
    """
    from .ginfty import kappa as _kappa

    if mono in cache:
        return cache[mono]
    base: dict = {}
    for a, c in taylor(mono).items():
        add_term(base, (a,), c)
    if sum(len(w) for w in mono) == 1:
        cache[mono] = base
        return base
    R: dict = {}
    for (m1, m2), c in _kappa(mono, source_quotient).items():
        F1 = recursion_single(m1, taylor, source_quotient, target_quotient, cache)
        F2 = recursion_single(m2, taylor, source_quotient, target_quotient, cache)
        for w1, c1 in F1.items():
            for w2, c2 in F2.items():
                add_term(R, (w1, w2), c * c1 * c2)
    P = dict(base)
    if R:
        multisets = sorted({tuple(sorted(w1 + w2)) for (w1, w2) in R})
        cands: list = []
        for ms in multisets:
            cands.extend(target_quotient.representatives(ms))
        cands = sorted(set(cands))
        pairs = sorted(R.keys())
        pidx = {p: i for i, p in enumerate(pairs)}
        ents: dict = {}
        for ci, w in enumerate(cands):
            for pr, c in _kappa1_word(w, target_quotient).items():
                if pr not in pidx:
                    pidx[pr] = len(pidx)
                    pairs.append(pr)
                ents[(pidx[pr], ci)] = ents.get((pidx[pr], ci), Fraction(0)) + c
        mat = SparseMat(len(pairs), len(cands))
        for rc, v in ents.items():
            if v:
                mat[rc] = v
        x = solve_in_column_span(mat, {pidx[p]: c for p, c in R.items()})
        if x is None:
            raise ArithmeticError(f"uncut solve failed on {mono}")
        for ci, c in x.items():
            add_term(P, cands[ci], c)
    cache[mono] = P
    return P


class TaylorFamily:
    """A finite family of Taylor coefficients for a bicoalgebra morphism.

    ``coeffs`` maps shape tuples to dicts {canonical source monomial: Vec over
    target letters}; monomials must be built from representative packets.
    """

    def __init__(self, coeffs: dict):
        self.coeffs = {tuple(sorted(s)): v for s, v in coeffs.items()}

    def shapes(self):
        return set(self.coeffs)

    def __call__(self, mono: Mono) -> Vec:
        shape = tuple(sorted(len(w) for w in mono))
        return self.coeffs.get(shape, {}).get(mono, {})


def reconstruct_morphism(taylor: TaylorFamily, source_quotient: ShuffleQuotient,
                         target_quotient: ShuffleQuotient):
    """Lift a Taylor family to the bicoalgebra morphism.

    Returns (full, single): ``single`` maps a canonical source monomial to its
    single-packet component {output word: coefficient} via the signed tableau
    sum (falling back to the recursion lift on shapes where the tableau sign
    convention has not been pinned); ``full`` assembles the whole morphism as
    the sum over unordered packet partitions of products of single components,
    with the Koszul regrouping sign.  The lift satisfies both comorphism
    identities, which is how the sign conventions are validated.
    """
    rec_cache: dict = {}

    def single(mono: Mono) -> dict:
        shape = tuple(sorted(len(w) for w in mono))
        if _tableau_safe(shape):
            return tableau_terms(mono, taylor, source_quotient, target_quotient)
        return recursion_single(mono, taylor, source_quotient, target_quotient,
                                rec_cache)

    def full(mono: Mono) -> dict:
        from itertools import combinations as comb

        n = len(mono)
        degs = [pdeg(w) for w in mono]
        out: dict = {}

        def partitions(indices):
            if not indices:
                yield []
                return
            first, rest = indices[0], indices[1:]
            for k in range(len(rest) + 1):
                for others in comb(rest, k):
                    block = (first,) + others
                    remaining = [i for i in rest if i not in others]
                    for tail in partitions(remaining):
                        yield [block] + tail

        for blocks in partitions(list(range(n))):
            flat = [i for block in blocks for i in block]
            sign = koszul_sign(degs, flat)
            acc = [([], Fraction(sign))]
            for block in blocks:
                fac = single(tuple(mono[i] for i in block))
                nxt = []
                for packs_sofar, c in acc:
                    for w, cw in fac.items():
                        nxt.append((packs_sofar + [w], c * cw))
                acc = nxt
            for packs_sofar, c in acc:
                add_mono(out, packs_sofar, c)
        return out

    return full, single
