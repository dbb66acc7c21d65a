"""Shared interface of residually finite arithmetic domains.

A domain bundles the ideal arithmetic of one concrete ring: factorization
into primes, gcd/exact division, residue enumeration and modular element
arithmetic.  Everything derivable from those primitives (Euler phi, divisor
lattices, multiplicative orders, the a-decomposition, linear-congruence
counts) is computed here once and shared by all implementations.

Ideals are represented by normalized values whose ``==`` is ideal equality:
positive integers, monic polynomials, or Hermite-normal-form lattices.  All
values are immutable and all operations pure, so domains are safe to share
across threads.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterator

__all__ = ["Domain", "Factorization", "ZeroIdealError", "NotCoprimeError"]


class ZeroIdealError(ValueError):
    """An operation received the zero ideal (or a zero generator)."""


class NotCoprimeError(ValueError):
    """A multiplicative order was requested for a non-invertible residue."""


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs in a fixed order."""

    factors: tuple[tuple[Any, int], ...]

    def __iter__(self) -> Iterator[tuple[Any, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def exponent(self, prime: Any) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def primes(self) -> list[Any]:
        return [p for p, _ in self.factors]

    def as_dict(self) -> dict[Any, int]:
        return dict(self.factors)


class Domain(ABC):
    """Arithmetic of one residually finite Dedekind domain."""

    # ---- primitives supplied by each concrete domain ----

    @property
    @abstractmethod
    def unit_ideal(self):
        """The whole ring, as an ideal value."""

    @property
    @abstractmethod
    def one_element(self):
        """The ring identity."""

    @abstractmethod
    def is_zero(self, a) -> bool:
        """Whether an element is zero."""

    @abstractmethod
    def principal(self, a):
        """Normalized ideal generated by a nonzero element."""

    @abstractmethod
    def norm(self, n) -> int:
        """Cardinality of the residue ring modulo n."""

    @abstractmethod
    def factor(self, n) -> Factorization:
        """Prime factorization of a nonzero ideal, primes normalized."""

    @abstractmethod
    def ideal_mul(self, m, n):
        """Product of two ideals."""

    @abstractmethod
    def ideal_div(self, n, m):
        """Exact quotient n/m; raises ValueError if m does not divide n."""

    @abstractmethod
    def ideal_gcd(self, m, n):
        """gcd of two ideals (their sum)."""

    @abstractmethod
    def element_in_ideal(self, a, n) -> bool:
        """Membership a in n."""

    @abstractmethod
    def reduce(self, a, n):
        """Canonical representative of a modulo n."""

    @abstractmethod
    def mul(self, a, b):
        """Ring product of two elements."""

    @abstractmethod
    def residues(self, n) -> list:
        """All canonical representatives modulo n, in a fixed order."""

    @abstractmethod
    def ideal_sort_key(self, n):
        """Total-order key for deterministic ideal listings."""

    @abstractmethod
    def describe_element(self, a):
        """JSON-able encoding of an element."""

    @abstractmethod
    def describe_ideal(self, n):
        """JSON-able encoding of an ideal."""

    @abstractmethod
    def domain_json(self) -> dict:
        """JSON-able tag identifying the domain instance."""

    # ---- derived operations ----

    def mul_mod(self, a, b, n):
        return self.reduce(self.mul(a, b), n)

    def ideal_pow(self, p, e: int):
        out = self.unit_ideal
        for _ in range(e):
            out = self.ideal_mul(out, p)
        return out

    def euler_phi(self, n) -> int:
        """Unit count of the residue ring, by the product over prime powers."""
        phi = 1
        for p, e in self.factor(n):
            np = self.norm(p)
            phi *= np**e - np ** (e - 1)
        return phi

    def divisors(self, n) -> list:
        """All ideal divisors, sorted by norm then by canonical encoding."""
        divs = [self.unit_ideal]
        for p, e in self.factor(n):
            powers = [self.unit_ideal]
            for _ in range(e):
                powers.append(self.ideal_mul(powers[-1], p))
            divs = [self.ideal_mul(d, pk) for d in divs for pk in powers]
        divs.sort(key=lambda m: (self.norm(m), self.ideal_sort_key(m)))
        return divs

    def a_decomposition(self, a, n):
        """Split n = n0 * n1 with n0 carrying exactly the primes dividing <a>."""
        if self.is_zero(a):
            raise ValueError("a-decomposition requires a nonzero element")
        n0 = n1 = self.unit_ideal
        for p, e in self.factor(n):
            pk = self.ideal_pow(p, e)
            if self.element_in_ideal(a, p):
                n0 = self.ideal_mul(n0, pk)
            else:
                n1 = self.ideal_mul(n1, pk)
        return n0, n1

    def congruence_solution_count(self, a, b, n) -> int:
        """Number of residues x mod n with a*x = b, per the gcd criterion."""
        g = n if self.is_zero(a) else self.ideal_gcd(self.principal(a), n)
        return self.norm(g) if self.element_in_ideal(b, g) else 0

    def mult_order(self, a, n) -> int:
        """Order of a in the unit group mod n; requires gcd(<a>, n) = 1."""
        g = n if self.is_zero(a) else self.ideal_gcd(self.principal(a), n)
        if g != self.unit_ideal:
            raise NotCoprimeError(
                f"element is not invertible modulo {self.describe_ideal(n)}")
        bound = self.euler_phi(n)
        one_r = self.reduce(self.one_element, n)
        ar = self.reduce(a, n)
        y = ar
        order = 1
        while y != one_r:
            y = self.reduce(self.mul(y, ar), n)
            order += 1
            if order > bound:
                raise RuntimeError("order exceeded Euler phi; broken arithmetic")
        return order


def check_positive_int(n: int, what: str = "ideal") -> int:
    """Validate and normalize an integer ideal generator."""
    if not isinstance(n, int):
        raise TypeError(f"{what} must be an int, got {type(n).__name__}")
    if n == 0:
        raise ZeroIdealError(f"the zero {what} is not allowed")
    return abs(n)


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_int(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization of a positive integer."""
    n = check_positive_int(n)
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return out
