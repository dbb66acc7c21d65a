"""Univariate polynomials over a finite field, and F_q[x] as a domain.

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial is the empty tuple.  Ideals of F_q[x] are represented by
their monic generators.

Factorization runs squarefree / distinct-degree / equal-degree splitting.
The equal-degree stage derandomizes its splitting elements with a PRNG
seeded from the polynomial itself, so results are reproducible.  A trial
division fallback against low-degree irreducibles is provided for
cross-checking at small degrees.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Iterator, Sequence

from .base import Domain, Factorization, ZeroIdealError
from .finitefield import GF

__all__ = ["Poly", "PolyDomain", "factor_poly", "trial_division_factor",
           "is_irreducible", "irreducibles"]


class Poly:
    """Polynomial over a fixed finite field."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: GF, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)
        self._hash = hash((field.p, field.k, self.coeffs))

    # ---- constructors ----

    @classmethod
    def zero(cls, field: GF) -> Poly:
        return cls(field)

    @classmethod
    def one(cls, field: GF) -> Poly:
        return cls(field, (1,))

    @classmethod
    def x(cls, field: GF) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: GF, c: int) -> Poly:
        return cls(field, (c,))

    @classmethod
    def x_pow_minus_one(cls, field: GF, n: int) -> Poly:
        coeffs = [field.neg(1)] + [0] * (n - 1) + [1]
        return cls(field, coeffs)

    # ---- basic queries ----

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # ---- arithmetic ----

    def _check(self, other: Poly) -> None:
        if self.field != other.field:
            raise ValueError("mixed coefficient fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(F, (F.add(a[i] if i < len(a) else 0,
                              b[i] if i < len(b) else 0) for i in range(n)))

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(F, (F.sub(a[i] if i < len(a) else 0,
                              b[i] if i < len(b) else 0) for i in range(n)))

    def __neg__(self) -> Poly:
        F = self.field
        return Poly(F, (F.neg(c) for c in self.coeffs))

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, out)

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = len(dv) - 1
        inv_lead = F.inv(dv[-1])
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                q = F.mul(c, inv_lead)
                quot[i - dd] = q
                for j in range(dd + 1):
                    rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(q, dv[j]))
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero:
            raise ZeroIdealError("cannot normalize the zero polynomial")
        if self.is_monic:
            return self
        F = self.field
        inv = F.inv(self.leading)
        return Poly(F, (F.mul(c, inv) for c in self.coeffs))

    def gcd(self, other: Poly) -> Poly:
        """Monic gcd; gcd(0, 0) is 0."""
        self._check(other)
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def pow_mod(self, e: int, modulus: Poly) -> Poly:
        result = Poly.one(self.field)
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def __pow__(self, e: int) -> Poly:
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> Poly:
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            c = self.coeffs[i]
            s = 0
            for _ in range(i % F.p):
                s = F.add(s, c)
            out.append(s)
        return Poly(F, out)

    def evaluate(self, c: int) -> int:
        F = self.field
        acc = 0
        for a in reversed(self.coeffs):
            acc = F.add(F.mul(acc, c), a)
        return acc

    # ---- identity and display ----

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        return (len(self.coeffs), self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xi = "x" if i == 1 else f"x^{i}"
                terms.append(xi if c == 1 else f"{c}*{xi}")
        return "Poly(%s)" % " + ".join(terms)


# ---- factorization ----

def _pth_root(f: Poly) -> Poly:
    """Preimage of f under the Frobenius on coefficients; f must be a p-th power."""
    F = f.field
    p = F.p
    out = []
    for i in range(0, len(f.coeffs), p):
        c = f.coeffs[i]
        out.append(F.pow(c, F.q // p))  # p-th root via Frobenius inverse
    return Poly(F, out)


def _squarefree_parts(f: Poly) -> list[tuple[Poly, int]]:
    """Decompose monic f into pairwise-coprime squarefree parts with multiplicity."""
    F = f.field
    parts: list[tuple[Poly, int]] = []

    def rec(g: Poly, mult: int) -> None:
        if g.degree < 1:
            return
        d = g.derivative()
        if d.is_zero:
            rec(_pth_root(g), mult * F.p)
            return
        c = g.gcd(d)
        w = g // c  # product of factors with multiplicity not divisible by p
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            part = w // y
            if part.degree > 0:
                parts.append((part, i * mult))
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            rec(_pth_root(c), mult * F.p)

    rec(f.monic(), 1)
    return parts


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split squarefree monic f into products of irreducibles of equal degree."""
    F = f.field
    out = []
    h = Poly.x(F)
    x = Poly.x(F)
    g = f
    d = 0
    while g.degree > 2 * (d + 1) - 1 and g.degree > 0:
        d += 1
        h = h.pow_mod(F.q, g)
        common = g.gcd(h - x)
        if common.degree > 0:
            out.append((common, d))
            g = g // common
            h = h % g
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _edf_seed(f: Poly) -> int:
    seed = f.field.q
    for c in f.coeffs:
        seed = seed * f.field.q + c + 1
    return seed


def _equal_degree(f: Poly, d: int) -> list[Poly]:
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    F = f.field
    if f.degree == d:
        return [f]
    rng = random.Random(_edf_seed(f))
    while True:
        h = Poly(F, [rng.randrange(F.q) for _ in range(f.degree)])
        if h.degree < 1:
            continue
        g = f.gcd(h)
        if 0 < g.degree < f.degree:
            break
        if F.p == 2:
            # trace map over GF(2): h + h^2 + h^4 + ...
            t = h % f
            acc = t
            for _ in range(d * F.k - 1):
                t = (t * t) % f
                acc = acc + t
            g = f.gcd(acc)
        else:
            e = h.pow_mod((F.q**d - 1) // 2, f)
            g = f.gcd(e - Poly.one(F))
        if 0 < g.degree < f.degree:
            break
    return sorted(_equal_degree(g, d) + _equal_degree(f // g, d),
                  key=Poly.sort_key)


def factor_poly(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with exponents, sorted deterministically."""
    if f.is_zero:
        raise ZeroIdealError("cannot factor the zero polynomial")
    found: dict[Poly, int] = {}
    for part, mult in _squarefree_parts(f.monic()):
        for prod, d in _distinct_degree(part):
            for irr in _equal_degree(prod, d):
                found[irr] = found.get(irr, 0) + mult
    return sorted(found.items(), key=lambda pe: pe[0].sort_key())


def is_irreducible(f: Poly) -> bool:
    """Rabin irreducibility test over F_q."""
    if f.degree < 1:
        return False
    F = f.field
    n = f.degree
    x = Poly.x(F)
    primes = set()
    m = n
    d = 2
    while d * d <= m:
        while m % d == 0:
            primes.add(d)
            m //= d
        d += 1
    if m > 1:
        primes.add(m)
    for r in sorted(primes):
        h = x.pow_mod(F.q ** (n // r), f)
        if f.gcd(h - x).degree != 0:
            return False
    return x.pow_mod(F.q**n, f) == x % f


def irreducibles(field: GF, degree: int) -> Iterator[Poly]:
    """Monic irreducibles of the given degree, in lexicographic order.

    The order matches the modulus search: the constant coefficient is the
    most significant position.
    """
    for tail in itertools.product(range(field.q), repeat=degree):
        f = Poly(field, list(tail) + [1])
        if is_irreducible(f):
            yield f


def trial_division_factor(f: Poly, max_irreducible_degree: int = 4) -> list[tuple[Poly, int]]:
    """Factor by dividing out low-degree irreducibles; valid for deg <= 9.

    After removing every irreducible factor of degree at most
    `max_irreducible_degree`, a nontrivial remainder of degree at most
    2*max_irreducible_degree + 1 must itself be irreducible.
    """
    if f.is_zero:
        raise ZeroIdealError("cannot factor the zero polynomial")
    if f.degree > 2 * max_irreducible_degree + 1:
        raise ValueError("degree too large for the trial-division fallback")
    g = f.monic()
    found: dict[Poly, int] = {}
    for d in range(1, max_irreducible_degree + 1):
        if g.degree < d:
            break
        for p in irreducibles(f.field, d):
            e = 0
            while True:
                q, r = divmod(g, p)
                if not r.is_zero:
                    break
                g = q
                e += 1
            if e:
                found[p] = e
    if g.degree > 0:
        found[g] = found.get(g, 0) + 1
    return sorted(found.items(), key=lambda pe: pe[0].sort_key())


class PolyDomain(Domain):
    """F_q[x] with ideals normalized to monic generators."""

    def __init__(self, field: GF):
        self.field = field

    @property
    def unit_ideal(self) -> Poly:
        return Poly.one(self.field)

    @property
    def one_element(self) -> Poly:
        return Poly.one(self.field)

    def is_zero(self, a: Poly) -> bool:
        return a.is_zero

    def principal(self, a: Poly) -> Poly:
        if a.is_zero:
            raise ZeroIdealError("the zero ideal is not allowed")
        return a.monic()

    def norm(self, n: Poly) -> int:
        if n.is_zero:
            raise ZeroIdealError("the zero ideal has no norm")
        return self.field.q**n.degree

    def factor(self, n: Poly) -> Factorization:
        if n.degree < 0:
            raise ZeroIdealError("cannot factor the zero ideal")
        return Factorization(tuple(factor_poly(n)))

    def ideal_mul(self, m: Poly, n: Poly) -> Poly:
        return m * n

    def ideal_div(self, n: Poly, m: Poly) -> Poly:
        q, r = divmod(n, m)
        if not r.is_zero:
            raise ValueError(f"{m!r} does not divide {n!r}")
        return q

    def ideal_gcd(self, m: Poly, n: Poly) -> Poly:
        return m.gcd(n)

    def element_in_ideal(self, a: Poly, n: Poly) -> bool:
        if n.is_zero:
            raise ZeroIdealError("membership in the zero ideal")
        return (a % n).is_zero

    def reduce(self, a: Poly, n: Poly) -> Poly:
        return a % n

    def mul(self, a: Poly, b: Poly) -> Poly:
        return a * b

    def residues(self, n: Poly) -> list[Poly]:
        if n.is_zero:
            raise ZeroIdealError("cannot enumerate modulo the zero ideal")
        d = n.degree
        return [Poly(self.field, coeffs)
                for coeffs in itertools.product(range(self.field.q), repeat=d)]

    def ideal_sort_key(self, n: Poly):
        return n.sort_key()

    def describe_element(self, a: Poly) -> list[int]:
        return list(a.coeffs)

    def describe_ideal(self, n: Poly) -> list[int]:
        return list(n.coeffs)

    def domain_json(self) -> dict:
        out = {"kind": "poly", "p": self.field.p, "k": self.field.k}
        if self.field.k > 1:
            out["modulus"] = list(self.field.modulus)
        return out

    def poly(self, coeffs: Sequence[int]) -> Poly:
        return Poly(self.field, coeffs)

    def __repr__(self) -> str:
        return f"PolyDomain({self.field!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyDomain) and self.field == other.field

    def __hash__(self) -> int:
        return hash(("PolyDomain", self.field))
