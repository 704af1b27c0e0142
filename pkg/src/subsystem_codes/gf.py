"""Finite field arithmetic for GF(p^m) and quadratic extension towers.

Field elements are encoded as integers in [0, p^m - 1] whose base-p digits
are the coefficients of the polynomial-basis representation (least
significant digit = constant term).  The default modulus for GF(p^m) is the
Conway polynomial, computed on first use and cached, so that serialized
codes are reproducible across implementations.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    "conway_polynomial",
    "FieldSpec",
    "FieldElement",
    "TowerSpec",
]


# ---------------------------------------------------------------------------
# polynomial helpers (dense coefficient tuples over F_p, low degree first)
# ---------------------------------------------------------------------------

def _poly_mod(a: list, f: Sequence[int], p: int) -> list:
    """Reduce polynomial a modulo the monic polynomial f, in place."""
    df = len(f) - 1
    while len(a) > df:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - df
            for i in range(df + 1):
                a[shift + i] = (a[shift + i] - lead * f[i]) % p
        a.pop()
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list:
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_mod(prod, f, p)


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list:
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _is_one(a: Sequence[int]) -> bool:
    return len(a) >= 1 and a[0] == 1 and all(c == 0 for c in a[1:])


def _prime_factors(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _x_is_primitive(f: Sequence[int], p: int) -> bool:
    """True iff x generates the multiplicative group of F_p[x]/(f).

    Implies irreducibility of f provided f(0) != 0 and deg f >= 1.
    """
    m = len(f) - 1
    order = p**m - 1
    # x^order must be 1 ...
    if not _is_one(_poly_powmod([0, 1], order, f, p)):
        return False
    # ... and no proper divisor of the order may already give 1.
    for ell in _prime_factors(order):
        if _is_one(_poly_powmod([0, 1], order // ell, f, p)):
            return False
    return True


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p."""
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    # x^(p^m) == x mod f
    xq = list(x)
    for _ in range(m):
        xq = _poly_powmod(xq, p, f, p)
    if _poly_sub(xq, x, p):
        return False
    # gcd(x^(p^(m/r)) - x, f) == 1 for every prime r | m
    for r in _prime_factors(m):
        xq = list(x)
        for _ in range(m // r):
            xq = _poly_powmod(xq, p, f, p)
        g = _poly_sub(xq, x, p)
        if not g:
            return False
        if len(_poly_gcd(g, list(f), p)) > 1:
            return False
    return True


def _poly_gcd(a: list, b: list, p: int) -> list:
    """Monic gcd of two polynomials over F_p."""

    def norm(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    a, b = norm(list(a)), norm(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        db, da = len(b) - 1, len(a) - 1
        while da >= db and a:
            coef = a[-1] * inv % p
            for i in range(db + 1):
                a[da - db + i] = (a[da - db + i] - coef * b[i]) % p
            a = norm(a)
            da = len(a) - 1
        a, b = b, a
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


@lru_cache(maxsize=None)
def conway_polynomial(p: int, m: int) -> Tuple[int, ...]:
    """Conway polynomial of degree m over F_p, low-degree-first coefficients.

    Computed by searching candidates in the standard Conway ordering for the
    first primitive polynomial compatible with the Conway polynomials of all
    proper subfields.  Cached per (p, m).
    """
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    divisors = [d for d in range(1, m) if m % d == 0]
    sub = {d: conway_polynomial(p, d) for d in divisors}
    order = p**m - 1

    # Candidates f = x^m + a_{m-1} x^{m-1} + ... + a_0 are enumerated in the
    # standard ordering: lexicographic in the word (b_{m-1}, ..., b_0) with
    # b_i = (-1)^(m-i) a_i mod p, most significant digit first.
    for word in range(p**m):
        coeffs = [0] * (m + 1)
        coeffs[m] = 1
        t = word
        for i in range(m):          # b_i is digit i of the word
            b = t % p
            t //= p
            coeffs[i] = b if (m - i) % 2 == 0 else (-b) % p
        if coeffs[0] == 0:
            continue
        f = tuple(coeffs)
        if not _x_is_primitive(f, p):
            continue
        ok = True
        for d in divisors:
            e = order // (p**d - 1)
            # the image of the degree-d generator must be a root of C(p, d)
            y = _poly_powmod([0, 1], e, f, p)
            acc = [0]
            ypow = [1]
            for c in sub[d]:
                if c:
                    term = [v * c % p for v in ypow]
                    acc = [(u + v) % p for u, v in
                           zip(acc + [0] * (len(term) - len(acc)),
                               term + [0] * (len(acc) - len(term)))]
                ypow = _poly_mulmod(ypow, y, f, p)
            if any(acc):
                ok = False
                break
        if ok:
            return f
    raise RuntimeError(f"no Conway polynomial found for p={p}, m={m}")


# ---------------------------------------------------------------------------
# FieldSpec
# ---------------------------------------------------------------------------

_MUL_TABLE_CAP = 1 << 9      # build dense q x q multiplication table below this
_MAX_Q = 1 << 16             # practical cap on field size


class FieldSpec:
    """Arithmetic in GF(p^m) on integer-encoded elements.

    Parameters
    ----------
    p : prime characteristic.
    m : extension degree.
    modulus : optional monic irreducible polynomial over F_p given as a
        sequence of m+1 coefficients, low degree first.  Defaults to the
        Conway polynomial.
    """

    def __init__(self, p: int, m: int = 1, modulus: Optional[Sequence[int]] = None):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > _MAX_Q:
            raise ValueError(f"field size {q} exceeds supported cap {_MAX_Q}")
        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            modulus = conway_polynomial(p, m)
            self.is_conway = True
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _poly_is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is not irreducible over F_{p}")
            self.is_conway = modulus == conway_polynomial(p, m)
        self.modulus = tuple(modulus)
        self._build_tables()

    # -- encoding -----------------------------------------------------------

    def digits(self, a: int) -> Tuple[int, ...]:
        """Base-p digit vector (polynomial coefficients) of an element."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_digits(self, ds: Iterable[int]) -> int:
        v = 0
        for i, d in enumerate(ds):
            v += (int(d) % self.p) * self.p**i
        return v

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        # digit decomposition, used for vectorized addition
        self._dig = np.zeros((q, m), dtype=np.int64)
        t = np.arange(q)
        for i in range(m):
            self._dig[:, i] = t % p
            t //= p
        self._pw = p ** np.arange(m)

        # log/exp tables when x is primitive (always true for Conway moduli)
        self._primitive = _x_is_primitive(self.modulus, p) if m > 1 else True
        if m == 1:
            # prime field: use a generator for exp/log only if needed
            self._exp = None
            self._log = None
        elif self._primitive:
            exp = np.zeros(q - 1, dtype=np.int64)
            log = np.full(q, -1, dtype=np.int64)
            cur = [1]
            for i in range(q - 1):
                v = self.from_digits(cur + [0] * (m - len(cur)))
                exp[i] = v
                log[v] = i
                cur = _poly_mulmod(cur, [0, 1], self.modulus, p)
            self._exp = exp
            self._log = log
        else:
            self._exp = None
            self._log = None

        # dense multiplication table for small fields
        if q <= _MUL_TABLE_CAP:
            mt = np.zeros((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(a, q):
                    v = self._mul_slow(a, b)
                    mt[a, b] = v
                    mt[b, a] = v
            self._mul_table = mt
        else:
            self._mul_table = None

        # inverses
        self._inv_table = np.zeros(q, dtype=np.int64)
        if self._exp is not None:
            self._inv_table[1:] = self._exp[(-self._log[1:]) % (q - 1)]
        else:
            for a in range(1, q):
                self._inv_table[a] = self._pow_int(a, q - 2)

        # trace to F_p
        tr = np.zeros(q, dtype=np.int64)
        for a in range(q):
            acc, x = 0, a
            for _ in range(m):
                acc = self.add(acc, x)
                x = self._pow_int(x, p)
            tr[a] = acc  # element of the prime subfield, encoded as itself
        if np.any(tr >= p):
            raise AssertionError("trace left the prime subfield")
        self._trace_table = tr

    # -- scalar ops ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return int(((self._dig[a] + self._dig[b]) % self.p) @ self._pw)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return int(((-self._dig[a]) % self.p) @ self._pw)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _poly_mulmod(list(self.digits(a)), list(self.digits(b)),
                            self.modulus, self.p)
        return self.from_digits(prod + [0] * (self.m - len(prod)))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return int(self._inv_table[a])

    def _pow_int(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_slow(result, base) if self.m > 1 else (result * base) % self.p
            base = self._mul_slow(base, base) if self.m > 1 else (base * base) % self.p
            e >>= 1
        return result

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self._log is not None:
            return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])
        return self._pow_int(a, e % (self.q - 1))

    def trace(self, a: int) -> int:
        """Trace down to the prime field F_p (returned as an int < p)."""
        return int(self._trace_table[a])

    @property
    def generator(self) -> int:
        """The residue class of x (a primitive element for Conway moduli)."""
        return self.p if self.m > 1 else self._prime_generator()

    def _prime_generator(self) -> int:
        for g in range(2, self.p):
            if all(pow(g, (self.p - 1) // ell, self.p) != 1
                   for ell in _prime_factors(self.p - 1)):
                return g
        return 1

    # -- vectorized ops on integer-encoded ndarrays -------------------------

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return ((self._dig[a] + self._dig[b]) % self.p) @ self._pw

    def neg_arr(self, a: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        return ((-self._dig[a]) % self.p) @ self._pw

    def mul_arr(self, a: np.ndarray, b) -> np.ndarray:
        if self.m == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a, b]
        a = np.asarray(a)
        b = np.broadcast_to(np.asarray(b), a.shape)
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        out[nz] = self._exp[(self._log[a[nz]] + self._log[b[nz]]) % (self.q - 1)]
        return out

    def scale_row(self, row: np.ndarray, c: int) -> np.ndarray:
        return self.mul_arr(row, np.full(row.shape, c, dtype=np.int64))

    # -- misc ---------------------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


class FieldElement:
    """A field element: owning spec plus integer-encoded coefficient vector."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        if not 0 <= value < field.q:
            raise ValueError(f"value {value} out of range for {field}")
        self.field = field
        self.value = int(value)

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.field.digits(self.value)

    def _check(self, other: "FieldElement"):
        if self.field != other.field:
            raise ValueError("elements belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def trace(self) -> "FieldElement":
        prime = FieldSpec(self.field.p, 1)
        return FieldElement(prime, self.field.trace(self.value))

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.value == other.value)

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}@{self.field!r}"


# ---------------------------------------------------------------------------
# quadratic extension tower GF(q^2) / GF(q)
# ---------------------------------------------------------------------------

class TowerSpec:
    """The tower F_p <= F_q <= F_{q^2} with distinguished basis {1, beta}.

    beta is the residue class of the Conway generator of GF(p^{2m}); the
    subfield embedding GF(p^m) -> GF(p^{2m}) follows the Conway norm
    compatibility, so arithmetic is consistent across the tower.
    """

    def __init__(self, base: FieldSpec):
        if not base.is_conway:
            raise ValueError("tower construction requires Conway moduli")
        self.base = base
        self.top = FieldSpec(base.p, 2 * base.m)
        q, q2 = base.q, self.top.q
        e = (q2 - 1) // (q - 1)

        # subfield embedding via generator powers
        embed = np.zeros(q, dtype=np.int64)
        gb = base.generator
        gt_e = self.top.pow(self.top.generator, e)
        cur_b, cur_t = 1, 1
        embed[1] = 1
        for _ in range(q - 2):
            cur_b = base.mul(cur_b, gb)
            cur_t = self.top.mul(cur_t, gt_e)
            embed[cur_b] = cur_t
        self._embed = embed
        self._section = {int(v): i for i, v in enumerate(embed)}
        if len(self._section) != q:
            raise AssertionError("subfield embedding is not injective")

        self.beta = self.top.generator
        # beta must lie outside F_q so that {1, beta} spans F_{q^2} over F_q
        if self.beta in self._section:
            raise AssertionError("beta lies in the base field")
        bq = self.top.pow(self.beta, q)
        beta0_top = self.top.add(self.beta, bq)
        if beta0_top not in self._section:
            raise AssertionError("tr(beta) is not in the base field")
        self.beta0 = self._section[beta0_top]

        # basis expansion table: x = u + beta*v  <->  (u, v)
        ex_u = np.zeros(q2, dtype=np.int64)
        ex_v = np.zeros(q2, dtype=np.int64)
        seen = np.zeros(q2, dtype=bool)
        for u in range(q):
            eu = int(embed[u])
            for v in range(q):
                x = self.top.add(eu, self.top.mul(self.beta, int(embed[v])))
                if seen[x]:
                    raise AssertionError("{1, beta} does not span the extension")
                seen[x] = True
                ex_u[x] = u
                ex_v[x] = v
        self._ex_u = ex_u
        self._ex_v = ex_v

    def embed(self, a: int) -> int:
        """Embed an element of F_q into F_{q^2}."""
        return int(self._embed[a])

    def section(self, x: int) -> int:
        """Inverse of embed; raises if x is not in the base field."""
        try:
            return self._section[int(x)]
        except KeyError:
            raise ValueError(f"element {x} is not in the base field") from None

    def expand(self, x: int) -> Tuple[int, int]:
        """Write x in F_{q^2} as u + beta*v with u, v in F_q."""
        return int(self._ex_u[x]), int(self._ex_v[x])

    def combine(self, u: int, v: int) -> int:
        """Inverse of expand."""
        return self.top.add(self.embed(u), self.top.mul(self.beta, self.embed(v)))

    def trace_to_base(self, x: int) -> int:
        """Relative trace tr_{q^2/q}(x) = x + x^q, as an element of F_q."""
        return self.section(self.top.add(x, self.top.pow(x, self.base.q)))

    def conj(self, x: int) -> int:
        """Frobenius conjugation x -> x^q."""
        return self.top.pow(x, self.base.q)
