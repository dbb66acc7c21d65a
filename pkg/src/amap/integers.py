"""The rational integers as an arithmetic domain.

Ideals are their positive generators, so ideal arithmetic is plain integer
arithmetic; factorization is trial division, which is all desk-scale inputs
need.
"""

from __future__ import annotations

import math

from .base import Domain, Factorization, check_positive_int, factor_int

__all__ = ["IntegerDomain"]


class IntegerDomain(Domain):
    """Z with ideals normalized to positive generators."""

    @property
    def unit_ideal(self) -> int:
        return 1

    @property
    def one_element(self) -> int:
        return 1

    def is_zero(self, a: int) -> bool:
        return a == 0

    def principal(self, a: int) -> int:
        return check_positive_int(a, "generator")

    def norm(self, n: int) -> int:
        return check_positive_int(n)

    def factor(self, n: int) -> Factorization:
        return Factorization(tuple(factor_int(n)))

    def ideal_mul(self, m: int, n: int) -> int:
        return m * n

    def ideal_div(self, n: int, m: int) -> int:
        q, r = divmod(n, m)
        if r:
            raise ValueError(f"{m} does not divide {n}")
        return q

    def ideal_gcd(self, m: int, n: int) -> int:
        return math.gcd(m, n)

    def element_in_ideal(self, a: int, n: int) -> bool:
        return a % check_positive_int(n) == 0

    def reduce(self, a: int, n: int) -> int:
        return a % check_positive_int(n)

    def mul(self, a: int, b: int) -> int:
        return a * b

    def residues(self, n: int) -> list[int]:
        return list(range(check_positive_int(n)))

    def ideal_sort_key(self, n: int) -> int:
        return n

    def describe_element(self, a: int) -> int:
        return a

    def describe_ideal(self, n: int) -> int:
        return n

    def domain_json(self) -> dict:
        return {"kind": "Z"}

    def __repr__(self) -> str:
        return "IntegerDomain()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerDomain)

    def __hash__(self) -> int:
        return hash("IntegerDomain")
