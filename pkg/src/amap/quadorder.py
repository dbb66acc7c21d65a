"""Maximal orders of imaginary quadratic fields, with non-principal ideals.

For a squarefree d < 0 the ring of integers is Z[w] with w = sqrt(d) when
d = 2, 3 (mod 4) and w = (1 + sqrt(d))/2 when d = 1 (mod 4).  Elements are
integer pairs x + y*w.  An ideal is stored by the Hermite normal form of
its lattice: an upper-triangular basis {a, b + c*w} with c | a, c | b and
0 <= b < a, which is unique, so ideal equality is matrix equality and the
norm is the determinant a*c.

The domain interface matches the Euclidean domains, so the dynamics layer
runs unchanged here; quotients of ideals are taken on factorizations
(every quotient we need divides exactly), never by colon-ideal algebra.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .base import (Domain, Factorization, ZeroIdealError, factor_int,
                   is_prime)

__all__ = ["QuadInt", "QuadIdeal", "QuadOrder", "SplitType"]


@dataclass(frozen=True)
class QuadInt:
    """Element x + y*w of a quadratic order, in the {1, w} basis."""

    x: int
    y: int

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __add__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.x + other.x, self.y + other.y)

    def __sub__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.x - other.x, self.y - other.y)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.x, -self.y)

    def __repr__(self) -> str:
        return f"QuadInt({self.x}, {self.y})"


class SplitType(enum.Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"


class QuadIdeal:
    """Nonzero ideal in HNF: lattice basis {a, b + c*w}."""

    __slots__ = ("d", "a", "b", "c", "_fact")

    def __init__(self, d: int, a: int, b: int, c: int):
        self.d = d
        self.a = a
        self.b = b
        self.c = c
        self._fact: Factorization | None = None

    @property
    def norm(self) -> int:
        return self.a * self.c

    @property
    def hnf(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (0, self.c))

    def contains(self, z: QuadInt) -> bool:
        if z.y % self.c:
            return False
        return (z.x - (z.y // self.c) * self.b) % self.a == 0

    def contains_ideal(self, other: QuadIdeal) -> bool:
        return (self.contains(QuadInt(other.a, 0))
                and self.contains(QuadInt(other.b, other.c)))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, QuadIdeal) and self.d == other.d
                and (self.a, self.b, self.c) == (other.a, other.b, other.c))

    def __hash__(self) -> int:
        return hash((self.d, self.a, self.b, self.c))

    def __repr__(self) -> str:
        return f"QuadIdeal(d={self.d}, [[{self.a},{self.b}],[0,{self.c}]])"


def _hnf_from_vectors(vectors: list[tuple[int, int]]) -> tuple[int, int, int]:
    """HNF (a, b, c) of the lattice spanned by (x, y) coordinate vectors."""
    xs = []
    pivot = None  # (x, y) with minimal positive y reachable by combinations
    for vx, vy in vectors:
        if vy == 0:
            if vx:
                xs.append(vx)
            continue
        if pivot is None:
            pivot = (vx, vy)
            continue
        px, py = pivot
        g, s, t = _xgcd(py, vy)
        # s*py + t*vy = g; the combination keeps the lattice span
        nx, ny = s * px + t * vx, g
        q1, q2 = py // g, vy // g
        xs.append(q2 * px - q1 * vx)  # y-part cancels
        pivot = (nx, ny)
    if pivot is None:
        raise ZeroIdealError("vectors span a rank-deficient lattice")
    px, py = pivot
    if py < 0:
        px, py = -px, -py
    a = 0
    for v in xs:
        a = math.gcd(a, abs(v))
    if a == 0:
        raise ZeroIdealError("vectors span a rank-deficient lattice")
    return a, px % a, py


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class QuadOrder(Domain):
    """Ring of integers of Q(sqrt(d)) for squarefree d < 0."""

    def __init__(self, d: int):
        if d >= 0:
            raise ValueError("d must be negative")
        if any(e > 1 for _, e in factor_int(-d)):
            raise ValueError("d must be squarefree")
        self.d = d
        if d % 4 == 1:
            self.discriminant = d
            self._t, self._s = 1, (d - 1) // 4  # w^2 = w + (d-1)/4
        else:
            self.discriminant = 4 * d
            self._t, self._s = 0, d  # w^2 = d

    # ---- element arithmetic ----

    def mul(self, z1: QuadInt, z2: QuadInt) -> QuadInt:
        yy = z1.y * z2.y
        return QuadInt(z1.x * z2.x + self._s * yy,
                       z1.x * z2.y + z1.y * z2.x + self._t * yy)

    def pow_element(self, z: QuadInt, e: int) -> QuadInt:
        result = QuadInt(1, 0)
        base = z
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def norm_element(self, z: QuadInt) -> int:
        if self._t:
            return z.x * z.x + z.x * z.y + z.y * z.y * (1 - self.d) // 4
        return z.x * z.x - self.d * z.y * z.y

    # ---- ideal construction ----

    def _make_ideal(self, a: int, b: int, c: int) -> QuadIdeal:
        if a <= 0 or c <= 0:
            raise ZeroIdealError("degenerate HNF")
        if a % c or b % c:
            raise ValueError(f"not an ideal lattice: c={c} must divide a={a}, b={b}")
        ideal = QuadIdeal(self.d, a, b % a, c)
        for basis in (QuadInt(a, 0), QuadInt(b % a, c)):
            if not ideal.contains(self.mul(QuadInt(0, 1), basis)):
                raise ValueError("lattice is not closed under multiplication by w")
        return ideal

    def ideal_from_generators(self, gens: list[QuadInt]) -> QuadIdeal:
        """Ideal generated by the given elements (HNF of {g, w*g})."""
        vectors = []
        for g in gens:
            if g.is_zero:
                continue
            wg = self.mul(QuadInt(0, 1), g)
            vectors.append((g.x, g.y))
            vectors.append((wg.x, wg.y))
        if not vectors:
            raise ZeroIdealError("at least one nonzero generator required")
        return self._make_ideal(*_hnf_from_vectors(vectors))

    def ideal_sum(self, i: QuadIdeal, j: QuadIdeal) -> QuadIdeal:
        self._check_pair(i, j)
        return self._make_ideal(*_hnf_from_vectors(
            [(i.a, 0), (i.b, i.c), (j.a, 0), (j.b, j.c)]))

    def _check_pair(self, i: QuadIdeal, j: QuadIdeal) -> None:
        if i.d != self.d or j.d != self.d:
            raise ValueError("ideals from a different order")

    # ---- prime splitting and factorization ----

    def minimal_poly_of_w(self) -> tuple[int, int, int]:
        """Coefficients (c0, c1, 1) of the minimal polynomial of w over Z."""
        return (-self._s, -self._t, 1)

    def rational_prime_splitting(self, p: int) -> tuple[SplitType, list[QuadIdeal]]:
        """Primes above p, classified by the roots of w's minimal polynomial."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        roots = [r for r in range(p) if (r * r - self._t * r - self._s) % p == 0]
        if not roots:
            return SplitType.INERT, [self.principal(QuadInt(p, 0))]
        primes = [self.ideal_from_generators([QuadInt(p, 0), QuadInt(-r, 1)])
                  for r in roots]
        primes.sort(key=self.ideal_sort_key)
        if len(roots) == 2:
            return SplitType.SPLIT, primes
        # single root: p divides the discriminant
        return SplitType.RAMIFIED, primes

    def factor(self, n: QuadIdeal) -> Factorization:
        self._check_pair(n, n)
        if n._fact is not None:
            return n._fact
        pairs: list[tuple[QuadIdeal, int]] = []
        for p, _ in factor_int(n.norm):
            _, primes = self.rational_prime_splitting(p)
            for prime in primes:
                e = 0
                power = self.ideal_mul(self.unit_ideal, prime)
                while power.contains_ideal(n):
                    e += 1
                    power = self.ideal_mul(power, prime)
                if e:
                    pairs.append((prime, e))
        pairs.sort(key=lambda pe: self.ideal_sort_key(pe[0]))
        fact = Factorization(tuple(pairs))
        check = self.unit_ideal
        for prime, e in pairs:
            check = self.ideal_mul(check, self.ideal_pow(prime, e))
        assert check == n, "factorization failed to reconstruct the ideal"
        n._fact = fact
        return fact

    # ---- domain interface ----

    @property
    def unit_ideal(self) -> QuadIdeal:
        return QuadIdeal(self.d, 1, 0, 1)

    @property
    def one_element(self) -> QuadInt:
        return QuadInt(1, 0)

    def is_zero(self, a: QuadInt) -> bool:
        return a.is_zero

    def principal(self, a: QuadInt) -> QuadIdeal:
        if a.is_zero:
            raise ZeroIdealError("the zero ideal is not allowed")
        return self.ideal_from_generators([a])

    def norm(self, n: QuadIdeal) -> int:
        self._check_pair(n, n)
        return n.norm

    def ideal_mul(self, m: QuadIdeal, n: QuadIdeal) -> QuadIdeal:
        self._check_pair(m, n)
        basis_m = [QuadInt(m.a, 0), QuadInt(m.b, m.c)]
        basis_n = [QuadInt(n.a, 0), QuadInt(n.b, n.c)]
        vectors = []
        for u in basis_m:
            for v in basis_n:
                uv = self.mul(u, v)
                wuv = self.mul(QuadInt(0, 1), uv)
                vectors.append((uv.x, uv.y))
                vectors.append((wuv.x, wuv.y))
        return self._make_ideal(*_hnf_from_vectors(vectors))

    def ideal_div(self, n: QuadIdeal, m: QuadIdeal) -> QuadIdeal:
        """Exact quotient via exponent subtraction on factorizations."""
        self._check_pair(n, m)
        fn = dict(self.factor(n).factors)
        out = self.unit_ideal
        for p, e in self.factor(m):
            have = fn.pop(p, 0)
            if have < e:
                raise ValueError("ideal does not divide")
            if have > e:
                out = self.ideal_mul(out, self.ideal_pow(p, have - e))
        for p, e in fn.items():
            out = self.ideal_mul(out, self.ideal_pow(p, e))
        return out

    def ideal_gcd(self, m: QuadIdeal, n: QuadIdeal) -> QuadIdeal:
        return self.ideal_sum(m, n)

    def element_in_ideal(self, a: QuadInt, n: QuadIdeal) -> bool:
        self._check_pair(n, n)
        return n.contains(a)

    def reduce(self, a: QuadInt, n: QuadIdeal) -> QuadInt:
        self._check_pair(n, n)
        y = a.y % n.c
        k = (a.y - y) // n.c
        x = (a.x - k * n.b) % n.a
        return QuadInt(x, y)

    def residues(self, n: QuadIdeal) -> list[QuadInt]:
        self._check_pair(n, n)
        return [QuadInt(x, y) for y in range(n.c) for x in range(n.a)]

    def ideal_sort_key(self, n: QuadIdeal):
        return (n.norm, n.a, n.b, n.c)

    def describe_element(self, a: QuadInt) -> list[int]:
        return [a.x, a.y]

    def describe_ideal(self, n: QuadIdeal) -> list[list[int]]:
        return [[n.a, n.b], [0, n.c]]

    def domain_json(self) -> dict:
        return {"kind": "quad", "d": self.d}

    def ideal_from_json(self, spec: dict) -> QuadIdeal:
        """Parse {"d": int, "gens": [[x, y], ...]} into an ideal."""
        if spec.get("d") != self.d:
            raise ValueError(f"ideal JSON is for d={spec.get('d')}, order has d={self.d}")
        if "gens" not in spec:
            raise ValueError("ideal JSON needs a 'gens' list")
        gens = [QuadInt(int(x), int(y)) for x, y in spec["gens"]]
        return self.ideal_from_generators(gens)

    def __repr__(self) -> str:
        return f"QuadOrder({self.d})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuadOrder) and self.d == other.d

    def __hash__(self) -> int:
        return hash(("QuadOrder", self.d))
