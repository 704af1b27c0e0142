"""Vectors of F_q^{2n}, additive and F_q-linear codes, duals and weights.

An :class:`AdditiveCode` is stored in canonical form: the reduced row
echelon basis of its generator matrix over the coefficient subfield
F_{p^t}, where t = 1 gives an additive (F_p-linear) code and t = m an
F_q-linear one.  For t = 1 each F_q coordinate is expanded into m prime
field columns; the fixed column order is x-block then y-block,
coordinate-major, basis-coefficient-minor.  Two codes are equal iff their
canonical matrices are equal, which makes equality and hashing cheap.

Minimum symplectic weights are computed by exhaustive span enumeration
(:mod:`subsystem_codes._enum`), with a randomized witness search as the
upper-bound fallback beyond the enumeration threshold.
"""

from __future__ import annotations

import json
from itertools import combinations, product
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import _enum, linalg
from .gf import FieldElement, FieldSpec

__all__ = [
    "EnumerationLimitError",
    "SympVector",
    "swt",
    "trace_symp",
    "AdditiveCode",
    "dual_symp",
    "intersect",
    "min_swt",
    "min_swt_coset",
    "ClassicalCode",
    "dual_classical",
    "DEFAULT_THRESHOLD",
    "WITNESS_RANDOM_SAMPLES",
]

DEFAULT_THRESHOLD = 1 << 26
WITNESS_RANDOM_SAMPLES = 10**6
_WITNESS_COMBO_CAP = 10**6


class EnumerationLimitError(RuntimeError):
    """Raised when an exact enumeration would exceed the threshold."""


# ---------------------------------------------------------------------------
# symplectic vectors
# ---------------------------------------------------------------------------

class SympVector:
    """An element (x|y) of F_q^{2n}, stored as 2n integer-encoded entries."""

    __slots__ = ("n", "field", "values")

    def __init__(self, field: FieldSpec, values: Sequence[int]):
        values = np.asarray(values, dtype=np.int64)
        if values.ndim != 1 or values.size % 2 != 0:
            raise ValueError("a symplectic vector needs 2n entries")
        if values.size and (values.min() < 0 or values.max() >= field.q):
            raise ValueError("entries out of field range")
        self.field = field
        self.n = values.size // 2
        self.values = values

    @property
    def x_part(self) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, int(v)) for v in self.values[: self.n])

    @property
    def y_part(self) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, int(v)) for v in self.values[self.n:])

    def __eq__(self, other):
        return (isinstance(other, SympVector) and self.field == other.field
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.field, self.values.tobytes()))

    def __repr__(self):
        x = ",".join(str(v) for v in self.values[: self.n])
        y = ",".join(str(v) for v in self.values[self.n:])
        return f"({x}|{y})"


def swt(v: Union[SympVector, Sequence[int]]) -> int:
    """Symplectic weight: positions i with (x_i, y_i) != (0, 0)."""
    vals = v.values if isinstance(v, SympVector) else np.asarray(v, dtype=np.int64)
    n = vals.size // 2
    return int(((vals[:n] != 0) | (vals[n:] != 0)).sum())


def trace_symp(u: SympVector, v: SympVector) -> int:
    """Trace-symplectic product tr_{q/p}(a'.b - a.b') for u=(a|b), v=(a'|b')."""
    if not isinstance(u, SympVector) or not isinstance(v, SympVector):
        raise TypeError("expected SympVector operands")
    if u.field != v.field or u.n != v.n:
        raise ValueError("length or field mismatch")
    f = u.field
    acc = 0
    for i in range(u.n):
        acc = f.add(acc, f.mul(int(v.values[i]), int(u.values[u.n + i])))
        acc = f.sub(acc, f.mul(int(u.values[i]), int(v.values[v.n + i])))
    return f.trace(acc)


# ---------------------------------------------------------------------------
# additive codes
# ---------------------------------------------------------------------------

def _coeff_field(field: FieldSpec, t: int) -> FieldSpec:
    if t == field.m:
        return field
    if t == 1:
        return FieldSpec(field.p, 1)
    raise NotImplementedError(
        f"coefficient degree t={t} unsupported (only t=1 and t=m={field.m})")


class AdditiveCode:
    """An F_{p^t}-linear subspace of F_q^{2n} in canonical generator form."""

    def __init__(self, n: int, field: FieldSpec, generators,
                 coeff_degree: int = 1):
        if coeff_degree < 1 or field.m % coeff_degree != 0:
            raise ValueError(f"coeff_degree {coeff_degree} does not divide m={field.m}")
        self.n = int(n)
        self.field = field
        self.t = int(coeff_degree)
        self.coeff_field = _coeff_field(field, self.t)
        rows = self._expand_rows(generators)
        self.mat, self.pivots = linalg.rref(rows, self.coeff_field)
        self.rank = self.mat.shape[0]

    # -- representation helpers --------------------------------------------

    @property
    def u(self) -> int:
        """Coefficient-field columns per F_q coordinate."""
        return self.field.m // self.t

    @property
    def ncols(self) -> int:
        return 2 * self.n * self.u

    @property
    def rank_p(self) -> int:
        """log_p of the code cardinality."""
        return self.rank * self.t

    def _expand_row(self, row) -> np.ndarray:
        if isinstance(row, SympVector):
            if row.field != self.field or row.n != self.n:
                raise ValueError("generator has wrong length or field")
            row = row.values
        row = np.asarray(row, dtype=np.int64)
        if row.size != 2 * self.n:
            raise ValueError(f"generator must have {2 * self.n} entries")
        if self.t == self.field.m:
            return row
        # expand each F_q entry into its m prime-field digits
        return self.field._dig[row].reshape(-1)

    def _expand_rows(self, generators) -> np.ndarray:
        rows = [self._expand_row(g) for g in generators]
        if not rows:
            return np.zeros((0, self.ncols), dtype=np.int64)
        return np.stack(rows)

    def _contract_row(self, row: np.ndarray) -> np.ndarray:
        """Inverse of _expand_row, giving 2n integer-encoded F_q entries."""
        if self.t == self.field.m:
            return np.asarray(row, dtype=np.int64)
        return np.asarray(row, dtype=np.int64).reshape(2 * self.n, self.field.m) @ self.field._pw

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int, field: FieldSpec, coeff_degree: int = 1) -> "AdditiveCode":
        return cls(n, field, [], coeff_degree)

    @classmethod
    def full(cls, n: int, field: FieldSpec, coeff_degree: int = 1) -> "AdditiveCode":
        code = cls.zero(n, field, coeff_degree)
        gens = np.eye(code.ncols, dtype=np.int64)
        return cls._from_coeff_matrix(n, field, coeff_degree, gens)

    @classmethod
    def _from_coeff_matrix(cls, n, field, coeff_degree, mat) -> "AdditiveCode":
        code = cls.zero(n, field, coeff_degree)
        code.mat, code.pivots = linalg.rref(mat, code.coeff_field)
        code.rank = code.mat.shape[0]
        return code

    def as_additive(self) -> "AdditiveCode":
        """The same set of vectors as a t=1 (prime-field) code."""
        if self.t == 1:
            return self
        # an F_q-basis row expands into m prime-field generators
        gens = []
        for row in self.mat:
            for j in range(self.field.m):
                scale = self.field.p**j  # encoded basis element alpha^j
                gens.append(self.field.mul_arr(row, scale))
        out = AdditiveCode(self.n, self.field, [], 1)
        rows = (np.stack([self.field._dig[g].reshape(-1) for g in gens])
                if gens else np.zeros((0, out.ncols), dtype=np.int64))
        return AdditiveCode._from_coeff_matrix(self.n, self.field, 1, rows)

    # -- membership, comparison --------------------------------------------

    def generators(self) -> List[SympVector]:
        return [SympVector(self.field, self._contract_row(r)) for r in self.mat]

    def contains_vector(self, v) -> bool:
        row = self._expand_row(v)
        return linalg.row_space_contains(self.mat, self.pivots, row,
                                         self.coeff_field) is not None

    def contains_code(self, other: "AdditiveCode") -> bool:
        self._check_compatible(other)
        return all(
            linalg.row_space_contains(self.mat, self.pivots, r, self.coeff_field)
            is not None for r in other.mat)

    def _check_compatible(self, other: "AdditiveCode"):
        if (self.n, self.field, self.t) != (other.n, other.field, other.t):
            raise ValueError("codes live in different spaces")

    def __eq__(self, other):
        return (isinstance(other, AdditiveCode)
                and (self.n, self.field, self.t) == (other.n, other.field, other.t)
                and np.array_equal(self.mat, other.mat))

    def __hash__(self):
        return hash((self.n, self.field, self.t, self.mat.tobytes()))

    def __repr__(self):
        return (f"AdditiveCode(n={self.n}, {self.field!r}, t={self.t}, "
                f"rank={self.rank})")

    # -- the trace-symplectic form ------------------------------------------

    def _gram(self) -> np.ndarray:
        return _symplectic_gram(self.n, self.field, self.t)

    def form(self, u: np.ndarray, v: np.ndarray) -> int:
        """Evaluate the (trace-)symplectic form on two coefficient rows."""
        M = self._gram()
        w = linalg.matmul(u.reshape(1, -1), M, self.coeff_field)
        out = linalg.matmul(w, v.reshape(-1, 1), self.coeff_field)
        return int(out[0, 0])

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": self.field.p,
            "m": self.field.m,
            "modulus": list(self.field.modulus),
            "n": self.n,
            "coeff_degree": self.t,
            "generators": [[int(v) for v in self._contract_row(r)]
                           for r in self.mat],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AdditiveCode":
        field = FieldSpec(int(data["p"]), int(data.get("m", 1)),
                          data.get("modulus"))
        return cls(int(data["n"]), field, data["generators"],
                   int(data.get("coeff_degree", 1)))

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "AdditiveCode":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _symplectic_gram(n: int, field: FieldSpec, t: int) -> np.ndarray:
    """Gram matrix of the form on coefficient coordinates.

    t = m: the untraced symplectic form over F_q on 2n coordinates.
    t = 1: the trace-symplectic form as an F_p-bilinear form on 2nm
    coordinates, with per-coordinate blocks T_ab = tr(alpha_a alpha_b).
    """
    if t == field.m:
        M = np.zeros((2 * n, 2 * n), dtype=np.int64)
        one, neg1 = 1, field.neg(1)
        for i in range(n):
            M[i, n + i] = neg1
            M[n + i, i] = one
        return M
    p, m = field.p, field.m
    T = np.zeros((m, m), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            T[a, b] = field.trace(field.mul(p**a, p**b))
    M = np.zeros((2 * n * m, 2 * n * m), dtype=np.int64)
    for i in range(n):
        x0, y0 = i * m, (n + i) * m
        M[x0:x0 + m, y0:y0 + m] = (-T) % p
        M[y0:y0 + m, x0:x0 + m] = T
    return M


def dual_symp(code: AdditiveCode) -> AdditiveCode:
    """Trace-symplectic dual, with the same coefficient degree.

    For an F_q-linear code the trace-symplectic dual coincides with the dual
    under the untraced symplectic form and is again F_q-linear, so the
    computation stays over F_q.
    """
    M = code._gram()
    if code.rank == 0:
        return AdditiveCode.full(code.n, code.field, code.t)
    a = linalg.matmul(code.mat, M, code.coeff_field)
    basis = linalg.nullspace(a, code.coeff_field)
    return AdditiveCode._from_coeff_matrix(code.n, code.field, code.t, basis)


def intersect(c1: AdditiveCode, c2: AdditiveCode) -> AdditiveCode:
    """Intersection of two codes over the same space, in canonical form."""
    c1._check_compatible(c2)
    if c1.rank == 0 or c2.rank == 0:
        return AdditiveCode.zero(c1.n, c1.field, c1.t)
    stacked = np.concatenate([c1.mat, c2.mat], axis=0)
    ker = linalg.nullspace(stacked.T, c1.coeff_field)
    if ker.shape[0] == 0:
        return AdditiveCode.zero(c1.n, c1.field, c1.t)
    vecs = linalg.matmul(ker[:, : c1.rank], c1.mat, c1.coeff_field)
    return AdditiveCode._from_coeff_matrix(c1.n, c1.field, c1.t, vecs)


# ---------------------------------------------------------------------------
# minimum weights by enumeration
# ---------------------------------------------------------------------------

def _enum_layout(code: AdditiveCode) -> np.ndarray:
    """Prime-field generator rows with per-coordinate contiguous columns."""
    add = code.as_additive()
    m, n = code.field.m, code.n
    perm = np.empty(2 * n * m, dtype=np.int64)
    for i in range(n):
        perm[i * 2 * m: i * 2 * m + m] = np.arange(i * m, (i + 1) * m)
        perm[i * 2 * m + m: (i + 1) * 2 * m] = np.arange((n + i) * m, (n + i + 1) * m)
    return add.mat[:, perm], add.rank


def min_swt(code: AdditiveCode, threshold: int = DEFAULT_THRESHOLD,
            workers: int = 1, backend: Optional[str] = None) -> int:
    """Exact minimum symplectic weight by full span enumeration."""
    if code.rank == 0:
        raise ValueError("minimum weight of the zero code is undefined")
    gens, k = _enum_layout(code)
    p = code.field.p
    if p**k > threshold:
        raise EnumerationLimitError(
            f"span size {p}^{k} exceeds threshold {threshold}")
    w, _ = _enum.min_weight_range(gens, p, code.n, 2 * code.field.m,
                                  1, p**k, stop_at=1, workers=workers,
                                  backend=backend)
    return w


def _split_basis(a: AdditiveCode, b: AdditiveCode):
    """Prime-field generators of A ordered as [B basis, extension rows]."""
    a_add, b_add = a.as_additive(), b.as_additive()
    fp = a_add.coeff_field
    cur = b_add.mat.copy()
    cur_rank = b_add.rank
    ext = []
    for row in a_add.mat:
        trial = np.concatenate([cur, row.reshape(1, -1)], axis=0)
        r = linalg.rank(trial, fp)
        if r > cur_rank:
            ext.append(row)
            cur, cur_rank = linalg.rref(trial, fp)[0], r
    assert cur_rank == a_add.rank, "B is not contained in A"
    return b_add, np.array(ext, dtype=np.int64).reshape(len(ext), a_add.ncols)


def min_swt_coset(a: AdditiveCode, b: AdditiveCode, mode: str = "exact",
                  bound: Optional[int] = None,
                  threshold: int = DEFAULT_THRESHOLD, workers: int = 1,
                  seed: int = 0,
                  backend: Optional[str] = None) -> Tuple[int, str]:
    """Minimum symplectic weight over A \\ B (with B a subcode of A).

    ``exact`` enumerates the coset space fully and returns the tag
    ``"exhaustive"``; ``witness`` runs a bounded search (generator
    combinations plus seeded random sampling) and returns an upper bound
    with tag ``"witness"``.
    """
    a._check_compatible(b)
    if not a.contains_code(b):
        raise ValueError("B is not a subcode of A")
    if a.rank_p == b.rank_p:
        raise ValueError("A equals B: the difference set is empty")
    b_add, ext = _split_basis(a, b)
    p = a.field.p
    kb, ke = b_add.rank, ext.shape[0]
    gens = np.concatenate([b_add.mat, ext], axis=0)
    # permute columns into per-coordinate groups
    m, n = a.field.m, a.n
    perm = np.empty(2 * n * m, dtype=np.int64)
    for i in range(n):
        perm[i * 2 * m: i * 2 * m + m] = np.arange(i * m, (i + 1) * m)
        perm[i * 2 * m + m: (i + 1) * 2 * m] = np.arange((n + i) * m, (n + i + 1) * m)
    gens = gens[:, perm]
    if mode == "exact":
        if p**(kb + ke) > threshold:
            raise EnumerationLimitError(
                f"span size {p}^{kb + ke} exceeds threshold {threshold}")
        w, _ = _enum.min_weight_range(gens, p, n, 2 * m, p**kb, p**(kb + ke),
                                      stop_at=1, workers=workers,
                                      backend=backend)
        return w, "exhaustive"
    if mode != "witness":
        raise ValueError(f"unknown mode {mode!r}")
    w = _witness_search(gens, p, n, 2 * m, kb, ke, bound, seed)
    return w, "witness"


def _witness_search(gens, p, n_groups, group_size, kb, ke, bound, seed) -> int:
    """Upper bound on the coset minimum weight.

    Tries all small combinations of extension generators (joined with small
    B-side combinations) and then seeded random sampling of coefficient
    vectors with a nonzero extension part.
    """
    k = kb + ke
    best = n_groups + 1

    def weight_of(coeffs: np.ndarray) -> int:
        v = (coeffs @ gens) % p
        return int(v.reshape(n_groups, group_size).any(axis=1).sum())

    # combinations of up to 3 generators with nonzero extension support
    combo_count = 0
    idx_ext = range(kb, k)
    done = False
    for size in (1, 2, 3):
        if done:
            break
        for subset in combinations(range(k), size):
            if all(i < kb for i in subset):
                continue  # stays inside B
            for coefs in product(range(1, p), repeat=size):
                coeffs = np.zeros(k, dtype=np.int64)
                for i, c in zip(subset, coefs):
                    coeffs[i] = c
                w = weight_of(coeffs)
                if w < best:
                    best = w
                combo_count += 1
                if combo_count >= _WITNESS_COMBO_CAP:
                    done = True
                    break
            if done:
                break
    del idx_ext

    rng = np.random.default_rng(seed)
    block = 1 << 12
    remaining = WITNESS_RANDOM_SAMPLES
    while remaining > 0:
        bsz = min(block, remaining)
        coeffs = rng.integers(0, p, size=(bsz, k), dtype=np.int64)
        # force a nonzero extension coefficient to stay outside B
        fix = rng.integers(kb, k, size=bsz)
        vals = rng.integers(1, p, size=bsz, dtype=np.int64)
        coeffs[np.arange(bsz), fix] = vals
        vecs = (coeffs @ gens) % p
        wts = vecs.reshape(bsz, n_groups, group_size).any(axis=2).sum(axis=1)
        w = int(wts.min())
        if w < best:
            best = w
        remaining -= bsz
        if bound is not None and best <= bound:
            break
        if best == 1:
            break
    return best


def swt_distribution(code: AdditiveCode, threshold: int = DEFAULT_THRESHOLD,
                     backend: Optional[str] = None) -> np.ndarray:
    """Histogram of symplectic weights over the whole code (index = weight)."""
    gens, k = _enum_layout(code)
    p = code.field.p
    if p**k > threshold:
        raise EnumerationLimitError(
            f"span size {p}^{k} exceeds threshold {threshold}")
    return _enum.weight_distribution(gens, p, code.n, 2 * code.field.m,
                                     0, p**k, backend=backend)


# ---------------------------------------------------------------------------
# classical codes
# ---------------------------------------------------------------------------

class ClassicalCode:
    """A linear code over F_q (or F_{q^2}) in canonical generator form."""

    def __init__(self, length: int, field: FieldSpec, generators):
        self.n = int(length)
        self.field = field
        rows = self._as_rows(generators)
        self.mat, self.pivots = linalg.rref(rows, field)
        self.rank = self.mat.shape[0]

    def _as_rows(self, generators) -> np.ndarray:
        rows = [np.asarray(g, dtype=np.int64) for g in generators]
        for r in rows:
            if r.size != self.n:
                raise ValueError(f"generator must have {self.n} entries")
        if not rows:
            return np.zeros((0, self.n), dtype=np.int64)
        return np.stack(rows)

    @classmethod
    def _from_matrix(cls, length, field, mat) -> "ClassicalCode":
        return cls(length, field, mat)

    def contains_vector(self, v) -> bool:
        row = np.asarray(v, dtype=np.int64)
        return linalg.row_space_contains(self.mat, self.pivots, row,
                                         self.field) is not None

    def contains_code(self, other: "ClassicalCode") -> bool:
        return all(self.contains_vector(r) for r in other.mat)

    def __eq__(self, other):
        return (isinstance(other, ClassicalCode)
                and (self.n, self.field) == (other.n, other.field)
                and np.array_equal(self.mat, other.mat))

    def __hash__(self):
        return hash((self.n, self.field, self.mat.tobytes()))

    def __repr__(self):
        return f"ClassicalCode([{self.n},{self.rank}] over {self.field!r})"

    # -- duals ---------------------------------------------------------------

    def conj_entry(self, x: int) -> int:
        """Frobenius x -> x^{sqrt(q)} for codes over a square field."""
        if self.field.m % 2 != 0:
            raise ValueError("Hermitian operations need a square field")
        return self.field.pow(int(x), self.field.p**(self.field.m // 2))

    def dual(self, kind: str = "euclidean") -> "ClassicalCode":
        if kind == "euclidean":
            mat = self.mat
        elif kind == "hermitian":
            if self.field.m % 2 != 0:
                raise ValueError("Hermitian dual requested over a non-square field")
            conj = np.vectorize(self.conj_entry, otypes=[np.int64])
            mat = conj(self.mat) if self.mat.size else self.mat
        else:
            raise ValueError(f"unknown dual kind {kind!r}")
        if self.rank == 0:
            return ClassicalCode(self.n, self.field, np.eye(self.n, dtype=np.int64))
        basis = linalg.nullspace(mat, self.field)
        return ClassicalCode(self.n, self.field, basis)

    def hermitian_product(self, x, y) -> int:
        """<x|y>_h = sum x_i^q y_i."""
        f = self.field
        acc = 0
        for xi, yi in zip(np.asarray(x), np.asarray(y)):
            acc = f.add(acc, f.mul(self.conj_entry(int(xi)), int(yi)))
        return acc

    def is_hermitian_self_orthogonal(self) -> bool:
        return all(self.hermitian_product(gi, gj) == 0
                   for gi in self.mat for gj in self.mat)

    def intersect(self, other: "ClassicalCode") -> "ClassicalCode":
        if (self.n, self.field) != (other.n, other.field):
            raise ValueError("codes live in different spaces")
        if self.rank == 0 or other.rank == 0:
            return ClassicalCode(self.n, self.field, [])
        stacked = np.concatenate([self.mat, other.mat], axis=0)
        ker = linalg.nullspace(stacked.T, self.field)
        if ker.shape[0] == 0:
            return ClassicalCode(self.n, self.field, [])
        vecs = linalg.matmul(ker[:, : self.rank], self.mat, self.field)
        return ClassicalCode(self.n, self.field, vecs)

    # -- weights -------------------------------------------------------------

    def _prime_generators(self) -> np.ndarray:
        """Prime-field generator rows, columns coordinate-major digit-minor."""
        f = self.field
        gens = []
        for row in self.mat:
            for j in range(f.m):
                scaled = f.mul_arr(row, f.p**j)
                gens.append(f._dig[scaled].reshape(-1))
        if not gens:
            return np.zeros((0, self.n * f.m), dtype=np.int64)
        return np.stack(gens)

    def size_log_p(self) -> int:
        return self.rank * self.field.m

    def min_wt(self, threshold: int = DEFAULT_THRESHOLD,
               workers: int = 1, backend: Optional[str] = None) -> int:
        """Exact minimum Hamming weight by enumeration."""
        if self.rank == 0:
            raise ValueError("minimum weight of the zero code is undefined")
        gens = self._prime_generators()
        p, k = self.field.p, gens.shape[0]
        if p**k > threshold:
            raise EnumerationLimitError(
                f"span size {p}^{k} exceeds threshold {threshold}")
        w, _ = _enum.min_weight_range(gens, p, self.n, self.field.m, 1, p**k,
                                      stop_at=1, workers=workers,
                                      backend=backend)
        return w

    def weight_distribution(self, threshold: int = DEFAULT_THRESHOLD,
                            backend: Optional[str] = None) -> np.ndarray:
        gens = self._prime_generators()
        p, k = self.field.p, gens.shape[0]
        if p**k > threshold:
            raise EnumerationLimitError(
                f"span size {p}^{k} exceeds threshold {threshold}")
        return _enum.weight_distribution(gens, p, self.n, self.field.m,
                                         0, p**k, backend=backend)

    def min_wt_coset(self, sub: "ClassicalCode", mode: str = "exact",
                     threshold: int = DEFAULT_THRESHOLD,
                     backend: Optional[str] = None) -> Tuple[int, str]:
        """Minimum Hamming weight over self \\ sub."""
        if not self.contains_code(sub):
            raise ValueError("sub is not a subcode")
        if self.rank == sub.rank:
            raise ValueError("difference set is empty")
        gens_b = sub._prime_generators()
        fp = FieldSpec(self.field.p, 1)
        cur, cur_rank = linalg.rref(gens_b, fp)
        ext = []
        for row in self._prime_generators():
            trial = np.concatenate([cur, row.reshape(1, -1)], axis=0)
            red, piv = linalg.rref(trial, fp)
            if red.shape[0] > cur.shape[0]:
                ext.append(row)
                cur = red
        kb = gens_b.shape[0]
        gens = np.concatenate(
            [gens_b, np.array(ext, dtype=np.int64).reshape(len(ext), -1)], axis=0)
        p, k = self.field.p, gens.shape[0]
        if mode != "exact":
            raise ValueError("only exact mode is supported for classical cosets")
        if p**k > threshold:
            raise EnumerationLimitError(
                f"span size {p}^{k} exceeds threshold {threshold}")
        w, _ = _enum.min_weight_range(gens, p, self.n, self.field.m,
                                      p**kb, p**k, stop_at=1, backend=backend)
        return w, "exhaustive"

    # -- classical modifications --------------------------------------------

    def puncture(self, coord: int) -> "ClassicalCode":
        if not 0 <= coord < self.n:
            raise ValueError(f"coordinate {coord} out of range for length {self.n}")
        mat = np.delete(self.mat, coord, axis=1)
        return ClassicalCode(self.n - 1, self.field, mat)

    def extend_parity(self) -> "ClassicalCode":
        """Append an overall-parity coordinate (negated coordinate sum)."""
        f = self.field
        extra = np.zeros((self.mat.shape[0], 1), dtype=np.int64)
        for i, row in enumerate(self.mat):
            acc = 0
            for v in row:
                acc = f.add(acc, int(v))
            extra[i, 0] = f.neg(acc)
        mat = np.concatenate([self.mat, extra], axis=1)
        return ClassicalCode(self.n + 1, self.field, mat)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": self.field.p,
            "m": self.field.m,
            "modulus": list(self.field.modulus),
            "length": self.n,
            "generators": [[int(v) for v in r] for r in self.mat],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClassicalCode":
        field = FieldSpec(int(data["p"]), int(data.get("m", 1)),
                          data.get("modulus"))
        return cls(int(data["length"]), field, data["generators"])


def dual_classical(code: ClassicalCode, kind: str) -> ClassicalCode:
    """Euclidean or Hermitian dual of a classical linear code."""
    return code.dual(kind)
