"""Symbolic one-way LOCC distinguishability decisions for GBS sets.

The engine works entirely on the difference set Delta(S) = {a - b} of the
input.  A discriminant symbol T commuting with nothing in Delta(S) turns the
eigenbasis of its matrix into a perfect one-way protocol; a fully
commutative Delta(S) admits a common eigenvector witness; and for composite
d a difference set whose members each carry an invertible coordinate admits
a shared eigenstate of a factor pair of shift/clock powers.  Those three
sufficient conditions are checked in a fixed order.  For (d, k) = (4, 4)
and d = 5 with k in {4, 5} the condition family is known to be exhaustive,
so a fully negative outcome there is a proof of indistinguishability rather
than an unknown.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .gpm import (
    INF,
    GbsSet,
    Gpm,
    all_gpms,
    difference_set,
    index_set,
    is_commutative,
)
from .modring import is_prime, smallest_prime_factor, solve_linear_congruence, solve_weyl_congruence

__all__ = [
    "DISTINGUISHABLE",
    "INDISTINGUISHABLE",
    "INCONCLUSIVE",
    "ONE_WAY",
    "FULL_LOCC",
    "SMALL_SET",
    "TOO_MANY",
    "DISCRIMINANT",
    "COMMUTATIVE",
    "INVERTIBLE",
    "COMPLETE_D4",
    "COMPLETE_D5",
    "SlopeGap",
    "DecisionReport",
    "discriminant_set",
    "condition_commutative",
    "condition_invertible",
    "slope_gap",
    "decide",
]

# Verdicts.
DISTINGUISHABLE = "DISTINGUISHABLE"
INDISTINGUISHABLE = "INDISTINGUISHABLE"
INCONCLUSIVE = "INCONCLUSIVE"

# Protocol modes the verdict speaks to.
ONE_WAY = "ONE_WAY"
FULL_LOCC = "FULL_LOCC"

# Which rule fired.
SMALL_SET = "SMALL_SET"          # at most three states, always distinguishable
TOO_MANY = "TOO_MANY"            # more than d states, never distinguishable
DISCRIMINANT = "DISCRIMINANT"    # a symbol commuting with nothing in Delta(S)
COMMUTATIVE = "COMMUTATIVE"      # Delta(S) pairwise commutes
INVERTIBLE = "INVERTIBLE"        # composite d, every difference has an invertible coordinate
COMPLETE_D4 = "COMPLETE_D4"      # all conditions failed; family exhaustive at (4, 4)
COMPLETE_D5 = "COMPLETE_D5"      # all conditions failed; family exhaustive at d = 5


@dataclass(frozen=True)
class SlopeGap:
    """Measurement-parameter bookkeeping for the standard one-way protocol.

    Alice's projective measurement is indexed by y in Z_d plus INF.  A pair
    of set elements i, j excludes the y solving
    (m_i - m_j) * y = n_j - n_i (mod d), plus INF when m_i = m_j.  Any
    admissible y left over (the gap) hands Bob orthogonal residual states,
    and a finite leftover y always produces the discriminant symbol
    (d - 1, y).
    """

    d: int
    admissible: frozenset
    excluded: frozenset
    gap: frozenset


@dataclass(frozen=True)
class DecisionReport:
    verdict: str
    mode: str
    condition: str | None = None
    witness: tuple[int, int] | None = None
    index_cardinality: int | None = None


def discriminant_set(S: GbsSet) -> frozenset[Gpm]:
    """All symbols that commute with no member of the difference set."""
    if len(S) < 2:
        raise ValueError("discriminant set needs at least two elements")
    covered = frozenset().union(
        *(solve_weyl_congruence(m, n, S.d) for m, n in difference_set(S))
    )
    return frozenset(all_gpms(S.d) - covered)


def condition_commutative(S: GbsSet) -> bool:
    """Whether the difference set is pairwise commutative."""
    if len(S) < 2:
        raise ValueError("condition needs at least two elements")
    return is_commutative(difference_set(S), S.d)


def condition_invertible(S: GbsSet) -> bool:
    """Whether every difference has an invertible coordinate (composite d only)."""
    if len(S) < 2:
        raise ValueError("condition needs at least two elements")
    d = S.d
    if is_prime(d):
        raise ValueError(f"condition is only defined for composite moduli, got {d}")
    return all(
        gcd(m, d) == 1 or gcd(n, d) == 1 for m, n in difference_set(S)
    )


def slope_gap(S: GbsSet) -> SlopeGap:
    """Excluded measurement parameters and whatever the pairs leave open."""
    if len(S) < 2:
        raise ValueError("slope gap needs at least two elements")
    d = S.d
    excluded = set()
    for (mi, ni), (mj, nj) in combinations(S.elements, 2):
        a = (mi - mj) % d
        if a == 0:
            excluded.add(INF)
        else:
            excluded |= solve_linear_congruence(a, nj - ni, d)
    admissible = frozenset(range(d)) | {INF}
    excluded = frozenset(excluded)
    return SlopeGap(d, admissible, excluded, admissible - excluded)


def _maybe_index_cardinality(S: GbsSet) -> int | None:
    if len(S) >= 2 and is_prime(S.d):
        return len(index_set(S))
    return None


def decide(S: GbsSet) -> DecisionReport:
    """Classify S, in a fixed rule order so reports are reproducible.

    Size rules come first, then the three sufficient conditions, then the
    exhaustiveness results for (4, 4) and d = 5.  Anything else is
    INCONCLUSIVE: the conditions are only sufficient in general.
    """
    d, size = S.d, len(S)
    idx = _maybe_index_cardinality(S)

    if size <= 3 and (size <= 2 or d >= 3):
        return DecisionReport(DISTINGUISHABLE, FULL_LOCC, SMALL_SET, index_cardinality=idx)
    if size >= d + 1:
        return DecisionReport(INDISTINGUISHABLE, FULL_LOCC, TOO_MANY, index_cardinality=idx)

    witnesses = discriminant_set(S)
    if witnesses:
        return DecisionReport(
            DISTINGUISHABLE, ONE_WAY, DISCRIMINANT,
            witness=min(witnesses), index_cardinality=idx,
        )
    if condition_commutative(S):
        return DecisionReport(DISTINGUISHABLE, ONE_WAY, COMMUTATIVE, index_cardinality=idx)
    if not is_prime(d) and condition_invertible(S):
        s = smallest_prime_factor(d)
        return DecisionReport(
            DISTINGUISHABLE, ONE_WAY, INVERTIBLE,
            witness=(s, d // s), index_cardinality=idx,
        )

    if d == 4 and size == 4:
        return DecisionReport(INDISTINGUISHABLE, FULL_LOCC, COMPLETE_D4)
    if d == 5 and size in (4, 5):
        mode = ONE_WAY if size == 4 else FULL_LOCC
        return DecisionReport(INDISTINGUISHABLE, mode, COMPLETE_D5, index_cardinality=idx)
    return DecisionReport(INCONCLUSIVE, FULL_LOCC, index_cardinality=idx)
