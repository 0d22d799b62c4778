"""Combinatorics of the irreducible components: dimension vectors, orbits, dims.

A component of the quotient variety is tracked by its five-part dimension
vector beta = (a,b;x,y,z) with a+b = x+y+z = n.  Six-tuples alpha record the
multiplicities of the six one-dimensional simples; beta_of_alpha links the
two pictures.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional, Sequence


@dataclass(frozen=True, order=True)
class Q0DimVector:
    """Dimension vector (a,b;x,y,z) with a+b = x+y+z."""

    a: int
    b: int
    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        parts = (self.a, self.b, self.x, self.y, self.z)
        if any(v < 0 for v in parts):
            raise ValueError(f"negative entries in dimension vector {parts}")
        if self.a + self.b != self.x + self.y + self.z:
            raise ValueError(
                f"a+b = {self.a + self.b} but x+y+z = {self.x + self.y + self.z}"
            )

    @property
    def n(self) -> int:
        return self.a + self.b

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.a, self.b, self.x, self.y, self.z)

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.x},{self.y},{self.z})"


@dataclass(frozen=True, order=True)
class MultiplicityVector:
    """Multiplicities (a1..a6) of the six one-dimensional simples."""

    a1: int
    a2: int
    a3: int
    a4: int
    a5: int
    a6: int

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.as_tuple()):
            raise ValueError(f"negative multiplicities {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a5, self.a6)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.as_tuple()) + ")"


@dataclass(frozen=True)
class GammaComponent:
    """A canonical component with its dimensions and optional mirror partner."""

    beta: Q0DimVector
    dim_gamma: int
    dim_b3: int
    has_simples: bool
    mirror_of: Optional[Q0DimVector]


class NoSimplesError(ValueError):
    """The component contains no simple representations."""


# Euler form matrix of the five-vertex quiver, coordinates (a,b,x,y,z).
EULER_MATRIX: tuple[tuple[int, ...], ...] = (
    (1, 0, -1, -1, -1),
    (0, 1, -1, -1, -1),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
)


def has_simple(beta: Q0DimVector) -> bool:
    """True when the component contains simple representations."""
    if beta.x * beta.y * beta.z == 0:
        return False
    return max(beta.x, beta.y, beta.z) <= min(beta.a, beta.b)


def component_dims(beta: Q0DimVector) -> tuple[int, int]:
    """(dim over the modular group, dim over the braid group)."""
    if not has_simple(beta):
        raise NoSimplesError(f"component {beta} has no simple representations")
    n = beta.n
    squares = sum(v * v for v in beta.as_tuple())
    dim_gamma = 1 + n * n - squares
    return dim_gamma, dim_gamma + 1


def mu6_step(beta: Q0DimVector) -> Q0DimVector:
    """One step of the sixth-root-of-unity twist: (a,b;x,y,z) -> (b,a;z,x,y)."""
    return Q0DimVector(beta.b, beta.a, beta.z, beta.x, beta.y)


def mu6_orbit(beta: Q0DimVector) -> list[Q0DimVector]:
    """The six-step twist cycle, duplicates retained."""
    orbit = [beta]
    for _ in range(5):
        orbit.append(mu6_step(orbit[-1]))
    return orbit


def mirror(beta: Q0DimVector) -> Q0DimVector:
    """Swap the last two legs: (a,b;x,y,z) -> (a,b;x,z,y)."""
    return Q0DimVector(beta.a, beta.b, beta.x, beta.z, beta.y)


def canonical_rep(beta: Q0DimVector) -> tuple[Q0DimVector, bool]:
    """Normal form across the twist orbit and its mirror.

    Returns the unique orbit-or-mirror element with a >= b and x >= y >= z,
    plus a flag marking mirror pairs (true when y != z in the normal form).
    """
    candidates = mu6_orbit(beta) + mu6_orbit(mirror(beta))
    best = min(
        c
        for c in candidates
        if c.a >= c.b and c.x >= c.y >= c.z
    )
    return best, best.y != best.z


def enumerate_components(n: int) -> list[GammaComponent]:
    """All canonical components of size n containing simples, sorted."""
    if n < 1:
        raise ValueError("dimension must be positive")
    rows = []
    for a in range((n + 1) // 2, n + 1):
        b = n - a
        for x in range(1, min(b, n - 2) + 1):
            for y in range(1, x + 1):
                z = n - x - y
                if z < 1 or z > y:
                    continue
                beta = Q0DimVector(a, b, x, y, z)
                if not has_simple(beta):
                    continue
                dim_gamma, dim_b3 = component_dims(beta)
                rows.append(
                    GammaComponent(
                        beta=beta,
                        dim_gamma=dim_gamma,
                        dim_b3=dim_b3,
                        has_simples=True,
                        mirror_of=mirror(beta) if y != z else None,
                    )
                )
    rows.sort(key=lambda row: row.beta)
    return rows


def euler_form(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Bilinear form alpha . M . beta^t on five-part dimension vectors."""
    if len(alpha) != 5 or len(beta) != 5:
        raise ValueError("euler_form expects five-part vectors")
    return sum(
        alpha[i] * EULER_MATRIX[i][j] * beta[j] for i in range(5) for j in range(5)
    )


def local_quiver(simples: Sequence[Sequence[int]]) -> list[list[int]]:
    """Arrow counts between stable points: entry (i,j) = delta_ij - chi(a_i, a_j)."""
    k = len(simples)
    return [
        [(1 if i == j else 0) - euler_form(simples[i], simples[j]) for j in range(k)]
        for i in range(k)
    ]


def beta_of_alpha(alpha: MultiplicityVector) -> Q0DimVector:
    """Total dimension vector of a semi-simple with the given multiplicities."""
    a1, a2, a3, a4, a5, a6 = alpha.as_tuple()
    return Q0DimVector(a1 + a3 + a5, a2 + a4 + a6, a1 + a4, a2 + a5, a3 + a6)


def mu6_step_alpha(alpha: MultiplicityVector) -> MultiplicityVector:
    """Rotate the hexagon one notch; matches mu6_step through beta_of_alpha."""
    t = alpha.as_tuple()
    return MultiplicityVector(t[5], t[0], t[1], t[2], t[3], t[4])


def mirror_alpha(alpha: MultiplicityVector) -> MultiplicityVector:
    """Reflect the hexagon (2<->6, 3<->5); matches mirror through beta_of_alpha."""
    a1, a2, a3, a4, a5, a6 = alpha.as_tuple()
    return MultiplicityVector(a1, a6, a5, a4, a3, a2)


def is_simple_root(alpha: MultiplicityVector) -> bool:
    """Whether a simple representation with these multiplicities exists.

    The cyclic conditions a_i <= a_{i-1} + a_{i+1} characterise simples
    supported on the whole hexagon; coordinate vectors are the simples
    themselves and are accepted directly.
    """
    t = alpha.as_tuple()
    if all(v == 0 for v in t):
        return False
    if sum(t) == 1:
        return True
    return all(t[i] <= t[i - 1] + t[(i + 1) % 6] for i in range(6))


def rationality_params(alpha: MultiplicityVector) -> tuple[int, int]:
    """(h, p) such that the component is birational to p-tuples of h x h matrices."""
    if not is_simple_root(alpha):
        raise ValueError(f"{alpha} is not the multiplicity vector of a simple")
    t = alpha.as_tuple()
    h = gcd(*t)
    cross = sum(t[i] * t[(i + 1) % 6] for i in range(6))
    squares = sum(v * v for v in t)
    p = 1 + (2 * cross - squares) // (h * h)
    return h, p


def simple_roots_for_beta(beta: Q0DimVector) -> list[MultiplicityVector]:
    """All multiplicity vectors of simples totalling beta, sorted."""
    found = []
    for a1 in range(0, min(beta.a, beta.x) + 1):
        a4 = beta.x - a1
        if a4 > beta.b:
            continue
        for a3 in range(0, min(beta.z, beta.a - a1) + 1):
            a6 = beta.z - a3
            a5 = beta.a - a1 - a3
            a2 = beta.y - a5
            if a2 < 0 or a6 < 0:
                continue
            alpha = MultiplicityVector(a1, a2, a3, a4, a5, a6)
            if is_simple_root(alpha):
                found.append(alpha)
    return sorted(found)
