"""Finite fields F_{p^k} with integer-encoded elements.

An element is an int in [0, p^k) whose base-p digits are the coefficients
of its polynomial representative, lowest degree first.  This makes
``range(q)`` the element enumeration and keeps elements hashable.

For k > 1 arithmetic a monic irreducible modulus of degree k over F_p is
required; if none is supplied the constructor picks the first irreducible
polynomial in lexicographic coefficient order (constant coefficient most
significant), so field construction is reproducible.  GF(2^k) arithmetic
runs on bit operations; other extensions use digit vectors.
"""

from __future__ import annotations

from functools import lru_cache

from .base import is_prime

__all__ = ["GF", "field", "quadratic_character"]


# ---- polynomial helpers over the prime field, on plain digit lists ----

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_mod(a: list[int], m: list[int], p: int) -> list[int]:
    # m monic
    a = a[:]
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - dm
            for j in range(dm + 1):
                a[shift + j] = (a[shift + j] - c * m[j]) % p
        a.pop()
    return _fp_trim(a)


def _fp_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _fp_mod(a, m, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        base = _fp_mod(_fp_mul(base, base, p), m, p)
        e >>= 1
    return result


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _fp_mod(a, bm, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _fp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _fp_trim(out)


def _fp_is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test for a monic polynomial over F_p."""
    k = len(f) - 1
    if k < 1:
        return False
    x = [0, 1]
    for r in sorted({r for r, _ in _int_factor(k)}):
        h = _fp_powmod(x, p ** (k // r), f, p)
        if len(_fp_gcd(_fp_sub(h, x, p), f, p)) > 1:
            return False
    return _fp_powmod(x, p**k, f, p) == _fp_mod(x, f, p)


def _int_factor(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


class GF:
    """The finite field with p^k elements."""

    __slots__ = ("p", "k", "q", "modulus", "_modbits", "_mul_table",
                 "_inv_table", "_pow_tables", "_embed_cache")

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus = None
        else:
            if modulus is None:
                modulus = self._find_modulus(p, k)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {k}")
            if not _fp_is_irreducible(list(modulus), p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
            self.modulus = modulus
        self._modbits = (sum(c << i for i, c in enumerate(self.modulus))
                         if p == 2 and k > 1 else 0)
        if 1 < self.q <= 64 and k > 1:
            self._mul_table = [[self._mul_raw(a, b) for b in range(self.q)]
                               for a in range(self.q)]
            self._inv_table = [0] + [self.pow(a, self.q - 2)
                                     for a in range(1, self.q)]
        else:
            self._mul_table = None
            self._inv_table = None
        self._pow_tables: dict[int, list[int]] = {}
        self._embed_cache: dict[tuple, list[int]] = {}

    @staticmethod
    def _find_modulus(p: int, k: int) -> tuple[int, ...]:
        # first irreducible in lexicographic order of (c_0, ..., c_{k-1})
        import itertools

        for tail in itertools.product(range(p), repeat=k):
            cand = list(tail) + [1]
            if _fp_is_irreducible(cand, p):
                return tuple(cand)
        raise RuntimeError("no irreducible polynomial found")  # unreachable

    # ---- encoding ----

    def decode(self, a: int) -> tuple[int, ...]:
        """Base-p digits of an element code, lowest degree first."""
        digits = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            digits.append(r)
        return tuple(digits)

    def encode(self, digits) -> int:
        out = 0
        for d in reversed(tuple(digits)):
            out = out * self.p + d % self.p
        return out

    def elements(self) -> range:
        return range(self.q)

    # ---- arithmetic ----

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.encode(x + y for x, y in zip(self.decode(a), self.decode(b)))

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.encode(x - y for x, y in zip(self.decode(a), self.decode(b)))

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def _mul_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                a <<= 1
                b >>= 1
            m = self.k
            mb = self._modbits
            for i in range(r.bit_length() - 1, m - 1, -1):
                if (r >> i) & 1:
                    r ^= mb << (i - m)
            return r
        prod = _fp_mul(list(self.decode(a)), list(self.decode(b)), self.p)
        prod = _fp_mod(prod, list(self.modulus), self.p)
        return self.encode(prod + [0] * (self.k - len(prod)))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self._inv_table is not None:
            return self._inv_table[a]
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # ---- towers ----

    def power_table(self, e: int) -> list[int]:
        """Cached table of x**e for every field element."""
        table = self._pow_tables.get(e)
        if table is None:
            table = [self.pow(x, e) for x in range(self.q)]
            self._pow_tables[e] = table
        return table

    def embedding(self, sub: GF) -> list[int]:
        """Table embedding a subfield, mapping its codes into this field.

        The subfield generator is sent to the smallest root of its modulus
        here, so the embedding is deterministic.
        """
        if sub.p != self.p or self.k % sub.k:
            raise ValueError(f"F_{sub.q} is not a subfield of F_{self.q}")
        key = (sub.p, sub.k, sub.modulus)
        table = self._embed_cache.get(key)
        if table is not None:
            return table
        if sub.k == 1:
            table = list(range(sub.p))
        else:
            root = None
            for x in range(self.q):
                acc = 0
                for c in reversed(sub.modulus):
                    acc = self.add(self.mul(acc, x), c)
                if acc == 0:
                    root = x
                    break
            assert root is not None, "subfield modulus has a root in any extension"
            table = []
            for s in range(sub.q):
                acc = 0
                for d in reversed(sub.decode(s)):
                    acc = self.add(self.mul(acc, root), d)
                table.append(acc)
        self._embed_cache[key] = table
        return table

    # ---- identity ----

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GF) and self.p == other.p
                and self.k == other.k and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> GF:
    """Shared field instances with the default modulus."""
    return GF(p, k)


def quadratic_character(f: GF, a: int) -> int:
    """+1 on nonzero squares, -1 on nonsquares, 0 at zero (odd q only)."""
    if f.q % 2 == 0:
        raise ValueError("the quadratic character needs odd field order")
    if a == 0:
        return 0
    return 1 if f.pow(a, (f.q - 1) // 2) == 1 else -1
