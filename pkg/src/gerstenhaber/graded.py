"""Graded basis symbols and Koszul sign bookkeeping.

Every sign in this package is a product of factors (-1)^(u*v) coming from
transposing two adjacent graded objects of degrees u and v.  The helpers here
are the single source of those signs; only parities of degrees matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True, order=True)
class Letter:
    """A basis symbol with an integer degree.

    ``degree`` is the Koszul degree in the space the letter is used in; which
    shift convention that is (shifted or not) is fixed by the owning module.
    ``ident`` must be orderable within one alphabet, it fixes all canonical
    word and factor orderings.
    """

    ident: object
    degree: int

    def __repr__(self):
        return f"L({self.ident},{self.degree})"


def koszul_sign(degrees: Sequence[int], perm: Sequence[int]) -> int:
    """Sign of the graded permutation sending position k to ``perm[k]``.

    ``perm[k]`` is the index, in the original list, of the object standing at
    position k after the permutation (so the permuted degree list is
    ``[degrees[p] for p in perm]``).  Each inversion of two odd-degree objects
    contributes -1; the result does not depend on a decomposition into
    adjacent transpositions.
    """
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
    odd = [degrees[p] % 2 for p in perm]
    sign = 1
    for k in range(n):
        if not odd[k]:
            continue
        for l in range(k + 1, n):
            if odd[l] and perm[k] > perm[l]:
                sign = -sign
    return sign


def unshuffle_sign(degrees: Sequence[int], left: Sequence[int]) -> int:
    """Koszul sign of pulling the positions ``left`` (in order) to the front.

    This is the sign written eps(x_1...x_n / x_I, x_J) for the bipartition
    I = left, J = complement, both kept in their natural order.
    """
    leftset = set(left)
    right = [i for i in range(len(degrees)) if i not in leftset]
    return koszul_sign(degrees, list(left) + right)


def swap_sign(deg_a: int, deg_b: int) -> int:
    """Sign of the graded flip a (x) b -> b (x) a."""
    return -1 if (deg_a % 2) and (deg_b % 2) else 1


def decalage_sign(degrees: Sequence[int]) -> int:
    """Sign of the chosen isomorphism between a wedge word and a symmetric word.

    For letters of (shifted) degrees x_1..x_n the sign is
    (-1)^(sum_j (n-j) * x_j), with j starting at 1.
    """
    n = len(degrees)
    e = sum((n - j) * degrees[j - 1] for j in range(1, n + 1))
    return -1 if e % 2 else 1


def shift_degree(shift: int, unshifted: int) -> int:
    """Degree in V[shift] of an element of degree ``unshifted`` in V."""
    return unshifted - shift


def parity(degree: int) -> int:
    return degree % 2
