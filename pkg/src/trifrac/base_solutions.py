"""Exhaustive enumeration of positive triples with 1/a + 1/b + 1/c = m/n0.

These are the zeroth-order instances of the residue-class equation (the
lambda = 0 case), used as the finite certificate behind the complete decision
procedure.  Enumeration is pure integer arithmetic: a ranges over
n0/m < a <= 3*n0/m, the remainder after 1/a fixes the window for b, and c is
forced, so no solution can be missed and no float ever decides a boundary.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple


class BaseTriple(NamedTuple):
    """Canonical unordered solution, stored sorted a <= b <= c."""

    a: int
    b: int
    c: int

    def contains(self, member: int) -> bool:
        return member in (self.a, self.b, self.c)

    def unit_sum(self) -> Fraction:
        return Fraction(1, self.a) + Fraction(1, self.b) + Fraction(1, self.c)

    def role_assignments(self) -> Iterator[tuple[int, int, int]]:
        """Distinct ordered assignments of the three members to roles."""
        seen = set()
        members = (self.a, self.b, self.c)
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    if {i, j, k} == {0, 1, 2}:
                        rt = (members[i], members[j], members[k])
                        if rt not in seen:
                            seen.add(rt)
                            yield rt


@lru_cache(maxsize=None)
def enumerate_base_solutions(m: int, n0: int) -> tuple[BaseTriple, ...]:
    """All unordered positive triples {a <= b <= c} with 1/a + 1/b + 1/c = m/n0.

    gcd(m, n0) > 1 is allowed; the empty tuple is a valid result.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n0 < 1:
        raise ValueError(f"n0 must be >= 1, got {n0}")
    out = []
    a_lo = n0 // m + 1            # smallest a with a*m > n0
    a_hi = (3 * n0) // m          # largest a with a*m <= 3*n0
    for a in range(a_lo, a_hi + 1):
        # m/n0 - 1/a = p/q with p > 0 by the choice of a_lo
        p = m * a - n0
        q = n0 * a
        b_lo = max(a, q // p + 1)     # 1/b strictly below p/q, else c blows up
        b_hi = (2 * q) // p           # b <= c forces p/q <= 2/b
        for b in range(b_lo, b_hi + 1):
            den = p * b - q
            num = q * b
            if num % den == 0:
                c = num // den
                out.append(BaseTriple(a, b, c))
    return tuple(sorted(out))


def triples_with_member(m: int, n0: int, member: int) -> tuple[BaseTriple, ...]:
    """The base solutions of m/n0 whose canonical form contains ``member``."""
    if member < 1:
        raise ValueError(f"member must be >= 1, got {member}")
    return tuple(t for t in enumerate_base_solutions(m, n0) if t.contains(member))
