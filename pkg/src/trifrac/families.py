"""The two rational solution families grown from a zeroth-order triple.

Given positive x0, y0, z0 with 1/x0 + 1/y0 + 1/z0 = m/n0, there are exactly
two rational polynomial solutions of the residue-class equation with degree
pattern (1, 1, 2), the "plus" branch

    x = x0*(1 + (n1/n0)*lambda)
    z = z0 + (n1/n0)*(y0*z0/(y0 + z0))*lambda
    y = y0 + y0*(n1/n0)*(1 + y0/(y0 + z0))*lambda + (y0*n1/n0)^2/(y0 + z0)*lambda^2

and the "minus" branch

    x = x0 + (n1/m)*((x0 + z0)/z0)*lambda
    z = z0 + (n1/m)*((x0 + z0)/x0)*lambda
    y = y0 + (2*y0*n1/n0 - n1/m)*lambda + (n1/n0)*(y0*n1/n0 - n1/m)*lambda^2.

The minus branch can only be integral when m divides n1, which the residue
class forbids, so its integral flag is always False here.  The remaining
degree candidates die elsewhere: a third-degree member would need real
first-order coefficients whose discriminant n0^2 - (m*x0 - n0)*(m*z0 - n0)
equals -m*n0*x0*z0/y0 < 0 (``discriminant_identity`` certifies this per
triple), and the all-degree-1 pattern forces m < 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .qpoly import RationalPoly
from .theorem import PolyTriple, ResidueClass, identity_holds


class RoleTriple(NamedTuple):
    """An ordered role assignment of a base triple's members."""

    x0: int
    y0: int
    z0: int

    def check(self, m: int, n0: int) -> None:
        for name, v in zip(("x0", "y0", "z0"), self):
            if v < 1:
                raise ValueError(f"{name} must be >= 1, got {v}")
        # cross-multiplied form of 1/x0 + 1/y0 + 1/z0 = m/n0
        lhs = n0 * (self.y0 * self.z0 + self.x0 * self.z0 + self.x0 * self.y0)
        rhs = m * self.x0 * self.y0 * self.z0
        if lhs != rhs:
            raise ValueError(
                f"role triple {tuple(self)} does not solve 1/x0 + 1/y0 + 1/z0 = {m}/{n0}"
            )


@dataclass(frozen=True)
class FamilySolution:
    branch: str  # "plus" | "minus"
    triple: PolyTriple
    integral: bool
    degenerate: bool = False  # quadratic coefficient of y vanished


def _checked(rc: ResidueClass, branch: str, x: RationalPoly, y: RationalPoly,
             z: RationalPoly) -> FamilySolution:
    triple = PolyTriple(x=x, y=y, z=z)
    if not identity_holds(rc, triple):
        raise ArithmeticError(f"{branch}-family construction broke the identity for {rc}")
    integral = all(p.is_positive_integral() for p in (x, y, z))
    return FamilySolution(branch=branch, triple=triple, integral=integral,
                          degenerate=y.degree is not None and y.degree < 2)


def plus_family(rc: ResidueClass, rt: RoleTriple) -> FamilySolution:
    """The plus branch through (x0, y0, z0); the one integer solutions live on."""
    rt.check(rc.m, rc.n0)
    x0, y0, z0 = rt
    q = Fraction(rc.n1, rc.n0)
    share = Fraction(y0, y0 + z0)
    x = RationalPoly([x0, x0 * q])
    z = RationalPoly([z0, q * z0 * share])
    y = RationalPoly([y0, y0 * q * (1 + share), (y0 * q) ** 2 / (y0 + z0)])
    return _checked(rc, "plus", x, y, z)


def minus_family(rc: ResidueClass, rt: RoleTriple) -> FamilySolution:
    """The minus branch through (x0, y0, z0); never integral when gcd(m, n1) = 1."""
    rt.check(rc.m, rc.n0)
    x0, y0, z0 = rt
    q = Fraction(rc.n1, rc.n0)
    u = Fraction(rc.n1, rc.m)
    x = RationalPoly([x0, u * Fraction(x0 + z0, z0)])
    z = RationalPoly([z0, u * Fraction(x0 + z0, x0)])
    y = RationalPoly([y0, 2 * y0 * q - u, q * (y0 * q - u)])
    return _checked(rc, "minus", x, y, z)


@dataclass(frozen=True)
class DiscriminantReport:
    """Exact certificate that the degree-(1, 1, 3) pattern has no real
    solution over this base: lhs = n0^2 - (m*x0 - n0)*(m*z0 - n0) equals
    -m*n0*x0*z0/y0, which is negative."""

    xbar0: int
    zbar0: int
    lhs: int
    rhs: Fraction


def discriminant_identity(rc: ResidueClass, rt: RoleTriple) -> DiscriminantReport:
    rt.check(rc.m, rc.n0)
    x0, y0, z0 = rt
    m, n0 = rc.m, rc.n0
    xbar0 = m * x0 - n0
    zbar0 = m * z0 - n0
    lhs = n0 * n0 - xbar0 * zbar0
    rhs = Fraction(-m * n0 * x0 * z0, y0)
    if lhs != rhs or lhs >= 0:
        raise ArithmeticError(
            f"discriminant identity violated for {rt}: lhs = {lhs}, rhs = {rhs}"
        )
    return DiscriminantReport(xbar0=xbar0, zbar0=zbar0, lhs=lhs, rhs=rhs)
