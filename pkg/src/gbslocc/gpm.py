"""Generalized Pauli symbols and Bell-state sets at the exponent level.

A symbol (m, n) stands for the shift-and-clock unitary X^m Z^n on C^d with
its overall phase dropped, so the product rule is plain addition mod d.  A
GBS set is an ordered, duplicate-free collection of symbols over a single
modulus; it labels the family of maximally entangled states obtained by
acting with the symbols on one half of the standard maximally entangled
state.  Everything here is exact integer work; dense matrices live in the
numerics module.

Two symbols commute exactly when n*x - m*y = 0 (mod d), and for prime d the
nonzero symbols organize into d + 1 lines through the origin indexed by the
projective slope m^{-1} n (INF on the clock axis m = 0).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .modring import is_prime, mod_inverse

__all__ = [
    "INF",
    "Gpm",
    "GbsSet",
    "SetFormatError",
    "parse_gbs_set",
    "gpm_product",
    "gpm_inverse",
    "commutes",
    "weyl_exponent",
    "all_gpms",
    "difference_set",
    "is_commutative",
    "slope",
    "index_set",
]

INF = float("inf")

Gpm = tuple[int, int]


class SetFormatError(ValueError):
    """A GBS set literal or element collection violates the wire format."""


def gpm_product(a: Gpm, b: Gpm, d: int) -> Gpm:
    """Phaseless product: exponents add componentwise mod d."""
    return ((a[0] + b[0]) % d, (a[1] + b[1]) % d)


def gpm_inverse(a: Gpm, d: int) -> Gpm:
    return (-a[0] % d, -a[1] % d)


def weyl_exponent(a: Gpm, b: Gpm, d: int) -> int:
    """Exponent e with U_a U_b = omega^e U_b U_a, namely a.n*b.m - a.m*b.n mod d."""
    return (a[1] * b[0] - a[0] * b[1]) % d


def commutes(a: Gpm, b: Gpm, d: int) -> bool:
    return (a[1] * b[0] - a[0] * b[1]) % d == 0


@lru_cache(maxsize=256)
def all_gpms(d: int) -> frozenset[Gpm]:
    """All d^2 symbols over Z_d."""
    return frozenset((m, n) for m in range(d) for n in range(d))


@dataclass(frozen=True)
class GbsSet:
    """Ordered, duplicate-free set of symbols over one modulus.

    Input order is preserved for reporting; comparisons that care about set
    identity should go through the canonical sorted form (see equivalence).
    """

    d: int
    elements: tuple[Gpm, ...]

    def __post_init__(self):
        if self.d < 2:
            raise SetFormatError(f"modulus must be >= 2, got {self.d}")
        elems = tuple((int(m), int(n)) for m, n in self.elements)
        object.__setattr__(self, "elements", elems)
        if not elems:
            raise SetFormatError("a GBS set needs at least one element")
        seen = set()
        for m, n in elems:
            if not (0 <= m < self.d and 0 <= n < self.d):
                raise SetFormatError(
                    f"coordinate out of range in ({m},{n}): must lie in [0, {self.d})"
                )
            if (m, n) in seen:
                raise SetFormatError(f"duplicate element ({m},{n})")
            seen.add((m, n))

    @classmethod
    def parse(cls, text: str, d: int) -> "GbsSet":
        return parse_gbs_set(text, d)

    def literal(self) -> str:
        """Wire form: elements joined by ';', coordinates by ','."""
        return ";".join(f"{m},{n}" for m, n in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def parse_gbs_set(text: str, d: int) -> GbsSet:
    """Parse a set literal like '0,0;0,1;1,0;1,2'.

    Raises SetFormatError with a distinct message for a malformed token, an
    out-of-range coordinate, or a duplicate element.
    """
    elements = []
    for token in text.strip().split(";"):
        parts = token.strip().split(",")
        if len(parts) != 2:
            raise SetFormatError(
                f"malformed element {token.strip()!r}: expected 'm,n'"
            )
        try:
            pair = (int(parts[0]), int(parts[1]))
        except ValueError:
            raise SetFormatError(
                f"malformed element {token.strip()!r}: coordinates must be integers"
            ) from None
        elements.append(pair)
    return GbsSet(d, tuple(elements))


def difference_set(S: GbsSet) -> frozenset[Gpm]:
    """All nonzero pairwise differences of S; empty for a singleton.

    Closed under negation and invariant under reordering or translating S.
    """
    elems = S.elements
    d = S.d
    out = set()
    for i, (mi, ni) in enumerate(elems):
        for j, (mj, nj) in enumerate(elems):
            if i != j:
                out.add(((mi - mj) % d, (ni - nj) % d))
    return frozenset(out)


def is_commutative(symbols, d: int) -> bool:
    """Whether the symbols pairwise commute."""
    return all(commutes(a, b, d) for a, b in combinations(sorted(symbols), 2))


def slope(g: Gpm, d: int):
    """Projective slope m^{-1} n of a nonzero symbol over prime d; INF when m = 0."""
    if not is_prime(d):
        raise ValueError(f"slopes need a prime modulus, got {d}")
    m, n = g[0] % d, g[1] % d
    if m == 0 and n == 0:
        raise ValueError("the identity symbol has no slope")
    if m == 0:
        return INF
    return mod_inverse(m, d) * n % d


def index_set(S: GbsSet) -> frozenset:
    """Slopes of the difference set; at most d + 1 values for prime d."""
    if len(S) < 2:
        raise ValueError("index set needs at least two elements")
    return frozenset(slope(g, S.d) for g in difference_set(S))
