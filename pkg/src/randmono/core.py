"""Monomials and monomial ideals in a polynomial ring k[x_1..x_n].

A monomial is an exponent tuple (e_1, ..., e_n).  The constant monomial
(0, ..., 0) is a valid monomial but never a member of a generating set.
Enumeration and serialization use graded-lex order: degree ascending,
and within a degree lex descending with x_1 > x_2 > ... > x_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Monomial = tuple  # exponent tuple of length n


class ZeroIdealError(ValueError):
    """Raised for statistics that are undefined for the zero ideal."""


class GuardError(RuntimeError):
    """Raised when an enumeration guard, meant to keep runtime sane, is exceeded."""


def degree(m: Monomial) -> int:
    """Total degree of a monomial."""
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    """True when monomial a divides monomial b (componentwise <=)."""
    if len(a) != len(b):
        raise ValueError(f"ambient dimension mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def support(m: Monomial) -> frozenset:
    """Indices (1-based) of variables appearing in m."""
    return frozenset(i + 1 for i, e in enumerate(m) if e > 0)


def squarefree_part(m: Monomial) -> Monomial:
    """Radical of a single monomial: cap every exponent at 1."""
    return tuple(1 if e > 0 else 0 for e in m)


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def count_monomials_exact(n: int, d: int) -> int:
    """Number of degree-d monomials in n variables."""
    return math.comb(n + d - 1, d)


def count_monomials_up_to(n: int, D: int) -> int:
    """Number of non-constant monomials of degree <= D in n variables."""
    return math.comb(n + D, D) - 1


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """Yield all degree-d exponent tuples in lex-descending order."""
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            yield (e,) + rest


def monomials_up_to(n: int, D: int) -> Iterator[Monomial]:
    """Yield all non-constant monomials of degree <= D in graded-lex order."""
    for d in range(1, D + 1):
        yield from monomials_of_degree(n, d)


def enumerate_monomials(n: int, d: int, up_to: bool = False) -> list:
    """Monomials of degree exactly d, or of degree 1..d when up_to is set."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if up_to:
        return list(monomials_up_to(n, d))
    return list(monomials_of_degree(n, d))


def grlex_key(m: Monomial):
    """Sort key realizing the graded-lex order used for enumeration."""
    return (sum(m), tuple(-e for e in m))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored by its unique minimal generating set.

    Generators are kept in graded-lex order and always form an antichain
    under divisibility.  The zero ideal has an empty generator tuple.
    Use minimalize() to build one from an arbitrary monomial set.
    """

    n: int
    gens: tuple

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.n:
                raise ValueError("generator arity does not match ambient n")
            if sum(g) == 0:
                raise ValueError("constant monomial cannot generate a proper ideal")
        # equality and hashing rely on the canonical form
        for i, a in enumerate(self.gens):
            for b in self.gens[i + 1:]:
                if divides(a, b) or divides(b, a):
                    raise ValueError(
                        "generators must form an antichain; use minimalize()"
                    )
        if list(self.gens) != sorted(self.gens, key=grlex_key):
            raise ValueError("generators must be in graded-lex order; use minimalize()")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Ideal membership: some generator divides m."""
        return any(divides(g, m) for g in self.gens)

    def hilbert_function(self, d: int) -> int:
        """Number of degree-d standard monomials of S/I."""
        if d < 1:
            raise ValueError("hilbert_function is defined for d >= 1")
        return sum(1 for m in monomials_of_degree(self.n, d) if not self.contains(m))

    def hilbert_vector(self, D: int) -> tuple:
        """(h(1), ..., h(D))."""
        return tuple(self.hilbert_function(d) for d in range(1, D + 1))

    def standard_count(self, D: int) -> int:
        """Number of non-constant standard monomials of degree <= D."""
        return sum(self.hilbert_vector(D))

    @property
    def beta1(self) -> int:
        """Number of minimal generators."""
        return len(self.gens)

    def graded_betti1(self, D: int) -> tuple:
        """(beta_{1,1}, ..., beta_{1,D}): minimal generator counts by degree."""
        if self.gens and max(degree(g) for g in self.gens) > D:
            raise ValueError("a generator exceeds the degree cap D")
        counts = [0] * D
        for g in self.gens:
            counts[degree(g) - 1] += 1
        return tuple(counts)

    def initdeg(self) -> int:
        """Smallest degree of a generator.  Undefined for the zero ideal."""
        if self.is_zero:
            raise ZeroIdealError("initial degree is undefined for the zero ideal")
        return min(degree(g) for g in self.gens)

    def degree_complexity(self) -> int:
        """Largest degree of a minimal generator.  Undefined for the zero ideal."""
        if self.is_zero:
            raise ZeroIdealError("degree complexity is undefined for the zero ideal")
        return max(degree(g) for g in self.gens)

    def radical(self) -> "MonomialIdeal":
        """The radical: generated by squarefree parts of the generators."""
        return minimalize(self.n, [squarefree_part(g) for g in self.gens])

    def is_strongly_generic(self) -> bool:
        """No two distinct generators share a positive exponent in any variable."""
        gs = self.gens
        for i in range(len(gs)):
            for j in range(i + 1, len(gs)):
                for a, b in zip(gs[i], gs[j]):
                    if a == b and a > 0:
                        return False
        return True

    def __str__(self) -> str:
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(" ".join(map(str, g)) for g in self.gens) + ">"


def minimalize(n: int, monomials: Iterable[Monomial]) -> MonomialIdeal:
    """Build the ideal generated by a monomial set, reduced to minimal generators.

    Keeps exactly the divisibility-minimal elements; the result generates the
    same ideal as the input.
    """
    pool = sorted(set(tuple(m) for m in monomials), key=grlex_key)
    minimal: list = []
    for m in pool:
        if not any(divides(g, m) for g in minimal):
            minimal.append(m)
    return MonomialIdeal(n, tuple(minimal))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def maximal_ideal(n: int) -> MonomialIdeal:
    """The ideal <x_1, ..., x_n>."""
    gens = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    return MonomialIdeal(n, gens)


def hilbert_series_ring(n: int, d: int) -> int:
    """Hilbert function of the full ring S = k[x_1..x_n] at degree d."""
    return count_monomials_exact(n, d)


# ---------------------------------------------------------------------------
# text format: header line "n D", then one generator per line as exponents

def format_ideal(ideal: MonomialIdeal, D: int) -> str:
    lines = ["# randmono-ideal-v1", f"{ideal.n} {D}"]
    lines.extend(" ".join(map(str, g)) for g in ideal.gens)
    return "\n".join(lines) + "\n"


def parse_ideal(text: str):
    """Parse the ideal text format.  Returns (MonomialIdeal, D)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty ideal file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError('header must be "n D"')
    n, D = int(header[0]), int(header[1])
    if n < 1 or D < 1:
        raise ValueError("need n >= 1 and D >= 1")
    gens = []
    for ln in lines[1:]:
        g = tuple(int(t) for t in ln.split())
        if len(g) != n:
            raise ValueError(f"generator {ln!r} does not have {n} exponents")
        gens.append(g)
    if any(degree(g) > D for g in gens):
        raise ValueError("a generator exceeds the degree cap D")
    ideal = minimalize(n, gens)
    return ideal, D


def parse_probability(text: str) -> Fraction:
    """Parse an exact rational probability like '1/3' or '0.25'."""
    p = Fraction(text)
    if not 0 <= p <= 1:
        raise ValueError(f"probability {text} outside [0, 1]")
    return p
