"""Closed-form geodesic growth series and the linear system behind them.

All series include the constant term 1 for the empty word.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ONE, Z, Polynomial, RationalFunction, solve_linear_system
from .graph import LinkRegularParams


class GroupKind(enum.Enum):
    RACG = "racg"
    RAAG = "raag"


def _params(params) -> tuple[int, int, int]:
    if isinstance(params, LinkRegularParams):
        return params.as_tuple()
    n, l, q = params
    return int(n), int(l), int(q)


def p_delta(n: int, l: int, q: int) -> Polynomial:
    return Polynomial(
        (1, -(n + l - 2 * q - 3), 2 * (n - l - 1) * (l - q - 1) - l * (n - 2 * l + q))
    )


def p_e(n: int, l: int, q: int) -> Fraction:
    return Fraction(
        n * n + l * l - 2 * q * q + n * l - 2 * n * q - 2 * l * q - 4 * n - 6 * l + 10 * q + 7
    )


def p_v(n: int, l: int, q: int) -> Fraction:
    return Fraction((n - l - 1) ** 3 + 2 * l * (n - 2 * l + q) * (n - q - 2) + l * q * (n - 3 * l + 3 * q))


def length3_count(n: int, l: int) -> int:
    """Geodesics of length 3: all-distinct words plus ``aba`` with ``b`` outside Star(a)."""
    return n * (n - 1) * (n - 2) + n * (n - l - 1)


def closed_formula_racg(params) -> RationalFunction:
    """Geodesic growth of the RACG on a link-regular tetrahedron-free graph."""
    n, l, q = _params(params)
    num = Polynomial((0, n, n * (5 - l - q), n * (l * q - 3 * l + 6)))
    den = Polynomial(
        (
            1,
            6 - n - l - q,
            n * l + l * q + q * n - 5 * n - 3 * l - q + 11,
            3 * n * l + 6 - n * l * q - 6 * n,
        )
    )
    return 1 + RationalFunction(num, den)


def triangle_free_formula(n: int, l: int) -> RationalFunction:
    num = Polynomial((0, n, n * (2 - l)))
    den = Polynomial((1, 3 - n - l, n * l - 2 * n + 2))
    return 1 + RationalFunction(num, den)


def free_product_formula(n: int) -> RationalFunction:
    """``n`` copies of Z/2 freely multiplied: ``1 + nz / (1 - (n-1)z)``."""
    return 1 + RationalFunction(Polynomial((0, n)), Polynomial((1, -(n - 1))))


def closed_formula_raag(params) -> RationalFunction:
    """Geodesic growth of the RAAG on the graph: the RACG series of its double."""
    n, l, q = _params(params)
    return closed_formula_racg((2 * n, 2 * l, 2 * q))


def raag_displayed_formula(params) -> RationalFunction:
    """The RAAG series written directly in terms of ``(n, l, q)`` of the base graph."""
    n, l, q = _params(params)
    num = Polynomial((0, 2 * n, 2 * n * (5 - 2 * l - 2 * q), 2 * n * (4 * l * q - 6 * l + 6)))
    den = Polynomial(
        (
            1,
            6 - 2 * n - 2 * l - 2 * q,
            4 * n * l + 4 * l * q + 4 * q * n - 10 * n - 6 * l - 2 * q + 11,
            12 * n * l + 6 - 8 * n * l * q - 12 * n,
        )
    )
    return 1 + RationalFunction(num, den)


def example_family_formula(k: int) -> RationalFunction:
    """Series for ``(n, l, q) = (3k, 2k, k)``, from its factored form."""
    if k < 1:
        raise ValueError("k must be >= 1")
    num = Polynomial((1, -3 * (k - 2), 2 * k * k - 7 * k + 11, 6))
    den = (
        Polynomial((-1, k - 1))
        * Polynomial((-1, 2 * (k - 1)))
        * Polynomial((-1, 3 * (k - 1)))
    )
    return -RationalFunction(num, den)


@dataclass(frozen=True)
class SystemBundle:
    """Solved unknowns of the suffix system.

    ``e_v``, ``e_e``, ``e_delta`` and ``e_abcd`` are the generating series of
    geodesics ending in a vertex, an ordered edge, an ordered triangle, and any
    four letters, each summed over all such suffixes. ``g`` is the full series.
    """

    params: tuple[int, int, int]
    e_v: RationalFunction
    e_e: RationalFunction
    e_delta: RationalFunction
    e_abcd: RationalFunction
    g: RationalFunction

    def __post_init__(self):
        bad = [name for name, lhs, rhs in self.relations() if lhs != rhs]
        if bad:
            raise ArithmeticError(f"system relations violated: {', '.join(bad)}")

    def relations(self) -> list[tuple[str, RationalFunction, RationalFunction]]:
        n, l, q = self.params
        x = self.g - 1
        nz = n * Z
        return [
            ("vertex", self.e_v, x),
            ("edge", self.e_e, x * Polynomial((1, -(n - l - 1))) - nz),
            (
                "triangle",
                self.e_delta,
                x * p_delta(n, l, q) - nz + Polynomial.monomial(2, n * (l - 2 * q - 2)),
            ),
            (
                "length4",
                self.e_abcd,
                x - Polynomial((0, n, n * (n - 1), length3_count(n, l))),
            ),
            (
                "recursion",
                self.e_abcd,
                (n + l + q - 6) * Z * self.e_delta
                + p_e(n, l, q) * Z.shift(1) * self.e_e
                + p_v(n, l, q) * Z.shift(2) * self.e_v,
            ),
        ]


def system_matrix(params) -> tuple[list[list[Polynomial]], list[Polynomial]]:
    """Rows for unknowns ``(G-1, E_v, E_e, E_delta, E_abcd)``."""
    n, l, q = _params(params)
    P = Polynomial
    zero = P()
    A = [
        [P((-1,)), ONE, zero, zero, zero],
        [-P((1, -(n - l - 1))), zero, ONE, zero, zero],
        [-p_delta(n, l, q), zero, zero, ONE, zero],
        [P((-1,)), zero, zero, zero, ONE],
        [
            zero,
            -(p_v(n, l, q) * Z.shift(2)),
            -(p_e(n, l, q) * Z.shift(1)),
            P((0, -(n + l + q - 6))),
            ONE,
        ],
    ]
    b = [
        zero,
        P((0, -n)),
        P((0, -n, n * (l - 2 * q - 2))),
        P((0, -n, -n * (n - 1), -length3_count(n, l))),
        zero,
    ]
    return A, b


def build_and_solve_system(params) -> SystemBundle:
    n, l, q = _params(params)
    A, b = system_matrix((n, l, q))
    x, e_v, e_e, e_delta, e_abcd = solve_linear_system(A, b)
    return SystemBundle((n, l, q), e_v, e_e, e_delta, e_abcd, x + 1)
