"""Exact arithmetic in prime fields GF(p) and extension fields GF(p^k).

Elements are stored as fully reduced polynomials over GF(p), encoded as the
base-p integer of their coefficient list (constant term = least significant
digit).  A FieldSpec fixes (p, k) together with a monic irreducible modulus;
`make_field` always picks the lexicographically smallest modulus so that every
run, on every machine, produces the same field and the same serialized output.

Extension-field multiplication goes through discrete log/antilog tables built
once per field (all fields here have at most a few thousand elements), so a
single multiply is three table lookups.
"""

from __future__ import annotations

import functools
from typing import Iterator, Optional


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient lists, constant term first
# ---------------------------------------------------------------------------

def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod(a, m, p):
    """Reduce a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    del a[dm:]
    while len(a) < dm:
        a.append(0)
    return a


def _poly_divides(d, a, p):
    """True if monic d divides a over GF(p)."""
    r = list(a)
    dd = len(d) - 1
    while len(r) - 1 >= dd:
        c = r[-1] % p
        if c:
            off = len(r) - 1 - dd
            for j in range(dd + 1):
                r[off + j] = (r[off + j] - c * d[j]) % p
        r.pop()
    return all(c % p == 0 for c in r)


def _monic_polys(degree, p):
    """All monic polynomials of the given degree, in base-p value order."""
    for m in range(p ** degree):
        coeffs = []
        v = m
        for _ in range(degree):
            coeffs.append(v % p)
            v //= p
        coeffs.append(1)
        yield coeffs


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree <= deg/2.

    Fine at desk scale (p^k at most a few thousand); no probabilistic test.
    """
    k = len(poly) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for cand in _monic_polys(d, p):
            if _poly_divides(cand, poly, p):
                return False
    return True


class FieldSpec:
    """The field GF(p^k) with a fixed monic irreducible modulus.

    Immutable after construction; arithmetic tables are built lazily and only
    ever appended, so instances are safe to share between threads.
    """

    __slots__ = ("p", "k", "modulus", "size",
                 "_ctab", "_exp", "_log", "_zero", "_one")

    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = _smallest_irreducible(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _is_irreducible(list(modulus), p):
            raise ValueError("modulus is reducible over GF(p)")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.size = p ** k
        self._ctab = None   # val -> coefficient tuple
        self._exp = None    # i -> val of generator^i
        self._log = None    # val -> discrete log
        self._zero = FieldElement(self, 0)
        self._one = FieldElement(self, 1 % self.size)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.k, self.modulus)
                == (other.p, other.k, other.modulus))

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    # -- element construction ----------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return self._zero

    @property
    def one(self) -> "FieldElement":
        return self._one

    def element(self, val: int) -> "FieldElement":
        if not 0 <= val < self.size:
            raise ValueError(f"element value {val} out of range for {self}")
        return FieldElement(self, val)

    def from_coeffs(self, coeffs) -> "FieldElement":
        if len(coeffs) != self.k:
            raise ValueError("coefficient list has wrong length")
        val = 0
        for c in reversed(coeffs):
            val = val * self.p + (c % self.p)
        return FieldElement(self, val)

    def embed(self, n: int) -> "FieldElement":
        """The image (n mod p) * 1 of an integer in this field."""
        return FieldElement(self, n % self.p)

    def elements(self) -> Iterator["FieldElement"]:
        """All elements in canonical (base-p value) order."""
        for val in range(self.size):
            yield FieldElement(self, val)

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> "FieldSpec":
        return cls(d["p"], d["k"], d["modulus"])

    # -- internal arithmetic on encoded values ------------------------------

    def _coeffs(self, val: int) -> tuple:
        if self.k == 1:
            return (val,)
        self._ensure_tables()
        return self._ctab[val]

    def _ensure_tables(self):
        if self._ctab is not None:
            return
        p, k, size = self.p, self.k, self.size
        ctab = []
        for val in range(size):
            v, cs = val, []
            for _ in range(k):
                cs.append(v % p)
                v //= p
            ctab.append(tuple(cs))
        self._ctab = ctab

        def slow_mul(a, b):
            ca = _poly_mod(_poly_mul(list(ctab[a]), list(ctab[b]), p),
                           list(self.modulus), p)
            val = 0
            for c in reversed(ca):
                val = val * p + c
            return val

        # find a multiplicative generator by exhaustive order check
        gen = None
        for cand in range(2, size):
            y, order = cand, 1
            while y != 1:
                y = slow_mul(y, cand)
                order += 1
            if order == size - 1:
                gen = cand
                break
        if gen is None:  # size == 2 has generator 1
            gen = 1
        exp = [1]
        for _ in range(size - 2):
            exp.append(slow_mul(exp[-1], gen))
        log = [0] * size
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def _add(self, a: int, b: int) -> int:
        p = self.p
        if self.k == 1:
            return (a + b) % p
        self._ensure_tables()
        ca, cb = self._ctab[a], self._ctab[b]
        val, pw = 0, 1
        for x, y in zip(ca, cb):
            val += ((x + y) % p) * pw
            pw *= p
        return val

    def _neg(self, a: int) -> int:
        p = self.p
        if self.k == 1:
            return (-a) % p
        self._ensure_tables()
        val, pw = 0, 1
        for x in self._ctab[a]:
            val += ((-x) % p) * pw
            pw *= p
        return val

    def _mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        self._ensure_tables()
        return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        self._ensure_tables()
        return self._exp[(-self._log[a]) % (self.size - 1)]

    def _pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1 % self.size
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero field element")
            return 0
        if self.k == 1:
            if e < 0:
                a, e = pow(a, self.p - 2, self.p), -e
            return pow(a, e, self.p)
        self._ensure_tables()
        return self._exp[(self._log[a] * e) % (self.size - 1)]


class FieldElement:
    """An element of GF(p^k), stored fully reduced.

    Immutable value object; arithmetic with plain ints coerces the int through
    the prime subfield.
    """

    __slots__ = ("spec", "val")

    def __init__(self, spec: FieldSpec, val: int):
        self.spec = spec
        self.val = val

    @property
    def coeffs(self) -> list:
        return list(self.spec._coeffs(self.val))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError("field mismatch")
            return other.val
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec._add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec._add(self.val, self.spec._neg(v)))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec._add(v, self.spec._neg(self.val)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec._neg(self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec._mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec._mul(self.val, self.spec._inv(v)))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec._pow(self.val, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec._inv(self.val))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.spec.p and \
                self.val < self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.k, self.val))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        if self.spec.k == 1:
            return f"{self.val}"
        return f"{self.spec}:{self.val}"


# ---------------------------------------------------------------------------
# module operations
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _smallest_irreducible(p: int, k: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree k over GF(p),
    candidates ordered by the base-p value of their lower coefficients."""
    for cand in _monic_polys(k, p):
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("irreducible polynomial search failed")  # unreachable


def required_degree(p: int, q: int) -> int:
    """Least k with q | p^k - 1, i.e. the multiplicative order of p mod q."""
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise ValueError("p and q must be distinct primes")
    k, r = 1, p % q
    while r != 1:
        r = (r * p) % q
        k += 1
    return k


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int) -> FieldSpec:
    """GF(p^k) with the deterministic smallest modulus; cached per (p, k)."""
    return FieldSpec(p, k)


def primitive_qth_root(F: FieldSpec, q: int) -> FieldElement:
    """The first element of multiplicative order exactly q in canonical
    enumeration order."""
    if (F.size - 1) % q != 0:
        raise ValueError(f"no such root: {q} does not divide |{F}*| = {F.size - 1}")
    for x in F.elements():
        if x.val == 0 or x == F.one:
            continue
        if x ** q == F.one:
            # q prime, so x != 1 and x^q = 1 force order exactly q
            return x
    raise ValueError(f"no such root: no element of order {q} in {F}")


def element_order(x: FieldElement) -> int:
    if x.val == 0:
        raise ValueError("zero has no multiplicative order")
    one = x.spec.one
    y, m = x, 1
    while y != one:
        y = y * x
        m += 1
    return m


def in_prime_subfield(x: FieldElement) -> Optional[int]:
    """Residue mod p when x lies in the prime subfield, else None."""
    cs = x.spec._coeffs(x.val)
    if any(cs[1:]):
        return None
    return cs[0]


def embed_int(F: FieldSpec, n: int) -> FieldElement:
    return F.embed(n)
