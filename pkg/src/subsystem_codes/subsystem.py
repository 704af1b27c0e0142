"""Deriving subsystem codes from classical additive codes.

From an additive code C <= F_q^{2n} with radical D = C intersect C^perp_s,
the derived subsystem code has dimensions K = q^n / sqrt(|C| |D|) and
R = sqrt(|C| / |D|), both integral powers of the characteristic p and kept
as exact base-p exponents.  The minimum distance is the minimum symplectic
weight over D^perp_s minus C (or over D^perp_s itself when the two agree,
which happens exactly when K = 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import List, Optional, Tuple

from .codes import (DEFAULT_THRESHOLD, AdditiveCode, EnumerationLimitError,
                    dual_symp, intersect, min_swt, min_swt_coset)

__all__ = ["PurityError", "SubsystemCode", "ParamRecord", "derive",
           "is_pure_to", "bracket_params", "analysis_report"]


class PurityError(ValueError):
    """A purity requirement is violated (e.g. an impure code with K = 1)."""


@dataclass
class SubsystemCode:
    """A Clifford subsystem code together with its derived parameters."""

    C: AdditiveCode
    D: AdditiveCode
    k_exp: int                 # log_p K
    r_exp: int                 # log_p R
    d: Optional[int] = None
    d_method: Optional[str] = None   # exhaustive | witness | analytic
    case: str = "a"                  # (a): D^perp_s != C, (b): equal
    swt_c: Optional[int] = None
    swt_c_method: Optional[str] = None

    @property
    def n(self) -> int:
        return self.C.n

    @property
    def field(self):
        return self.C.field

    @property
    def p(self) -> int:
        return self.C.field.p

    @property
    def K(self) -> int:
        return self.p**self.k_exp

    @property
    def R(self) -> int:
        return self.p**self.r_exp

    @property
    def is_linear(self) -> bool:
        return self.C.t == self.C.field.m

    @property
    def purity(self) -> Tuple[str, Optional[int]]:
        """One of ("pure", None), ("pure_to", d'), ("impure", swt_C)."""
        if self.swt_c is None or self.d is None:
            return ("pure_to", 1)
        if self.swt_c_method in ("exhaustive", "analytic"):
            if self.swt_c >= self.d:
                return ("pure", None)
            return ("impure", self.swt_c)
        # a witness bound certifies impurity only when it undercuts d
        if self.swt_c < self.d:
            return ("impure", self.swt_c)
        return ("pure_to", 1)

    @property
    def is_pure(self) -> bool:
        return self.purity[0] == "pure"

    def params(self) -> Tuple[int, int, int, Optional[int]]:
        """((n, K, R, d))_q tuple."""
        return (self.n, self.K, self.R, self.d)

    def __repr__(self):
        q = self.field.q
        return f"SubsystemCode(({self.n},{self.K},{self.R},{self.d}))_{q}"


@dataclass
class ParamRecord:
    """Abstract ((n,K,R,d))_q parameters in log_q form, with provenance."""

    n: int
    q: int
    k: Fraction
    r: Fraction
    d: Optional[int] = None
    d_is_bound: bool = False         # True: d is a lower bound ">= d"
    pure: Optional[bool] = None
    pure_to: Optional[int] = None
    linear: Optional[bool] = None
    provenance: List[str] = dc_field(default_factory=list)

    def __post_init__(self):
        self.k = Fraction(self.k)
        self.r = Fraction(self.r)
        if self.n < 1:
            raise ValueError("length must be >= 1")
        if self.d is not None and self.d < 1:
            raise ValueError("distance must be >= 1")
        if self.k + self.r > self.n:
            raise ValueError("K*R exceeds q^n")

    @property
    def is_stabilizer(self) -> bool:
        return self.r == 0

    def bracket(self) -> str:
        def fmt(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        d = "?" if self.d is None else (f">={self.d}" if self.d_is_bound else str(self.d))
        return f"[[{self.n},{fmt(self.k)},{fmt(self.r)},{d}]]_{self.q}"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "k": str(self.k),
            "r": str(self.r),
            "d": self.d,
            "d_is_bound": self.d_is_bound,
            "pure": self.pure,
            "pure_to": self.pure_to,
            "linear": self.linear,
            "bracket": self.bracket(),
            "provenance": list(self.provenance),
        }


def derive(C: AdditiveCode, distance_mode: str = "auto",
           threshold: int = DEFAULT_THRESHOLD, workers: int = 1,
           seed: int = 0, backend: Optional[str] = None) -> SubsystemCode:
    """Build the subsystem code of an additive code C != {0}.

    distance_mode: "exact" (raise beyond the enumeration threshold),
    "auto" (downgrade to a witness bound, recorded in the method tag),
    "witness", or "skip".
    """
    if C.rank == 0:
        raise ValueError("C must be nonzero")
    if distance_mode not in ("exact", "auto", "witness", "skip"):
        raise ValueError(f"unknown distance mode {distance_mode!r}")
    Cperp = dual_symp(C)
    D = intersect(C, Cperp)
    nm = C.n * C.field.m
    rc, rd = C.rank_p, D.rank_p
    if (rc + rd) % 2 != 0:
        raise AssertionError("|C| |D| is not an even power of p")
    k_exp = nm - (rc + rd) // 2
    r_exp = (rc - rd) // 2
    Dperp = dual_symp(D)

    case = "b" if k_exp == 0 else "a"
    d = None
    d_method = None
    if distance_mode != "skip":
        want_exact = distance_mode in ("exact", "auto")
        try:
            if not want_exact:
                raise EnumerationLimitError("witness mode requested")
            if case == "b":
                d = min_swt(Dperp, threshold=threshold, workers=workers,
                            backend=backend)
            else:
                d, _ = min_swt_coset(Dperp, C, mode="exact",
                                     threshold=threshold, workers=workers,
                                     backend=backend)
            d_method = "exhaustive"
        except EnumerationLimitError:
            if distance_mode == "exact":
                raise
            if case == "b":
                d, _ = min_swt_coset(Dperp, AdditiveCode.zero(C.n, C.field, C.t),
                                     mode="witness", threshold=threshold,
                                     seed=seed, backend=backend)
            else:
                d, _ = min_swt_coset(Dperp, C, mode="witness",
                                     threshold=threshold, seed=seed,
                                     backend=backend)
            d_method = "witness"

    swt_c = None
    swt_c_method = None
    if distance_mode != "skip":
        try:
            swt_c = min_swt(C, threshold=threshold, workers=workers,
                            backend=backend)
            swt_c_method = "exhaustive"
        except EnumerationLimitError:
            if C.rank_p < 2 * nm:
                swt_c, _ = min_swt_coset(
                    C, AdditiveCode.zero(C.n, C.field, C.t), mode="witness",
                    threshold=threshold, seed=seed, backend=backend)
                swt_c_method = "witness"

    code = SubsystemCode(C=C, D=D, k_exp=k_exp, r_exp=r_exp, d=d,
                         d_method=d_method, case=case, swt_c=swt_c,
                         swt_c_method=swt_c_method)
    if code.K == 1 and code.purity[0] == "impure":
        raise PurityError(
            f"an ((n,1,R,d))_q subsystem code must be pure; swt(C) = {swt_c} < d = {d}")
    return code


def is_pure_to(code: SubsystemCode, d_prime: int) -> bool:
    """True iff C has no nonzero element of symplectic weight below d_prime."""
    if d_prime <= 1:
        return True
    if code.swt_c is None:
        raise ValueError("swt(C) unknown; purity level cannot be decided")
    if code.swt_c_method in ("exhaustive", "analytic"):
        return code.swt_c >= d_prime
    if code.swt_c < d_prime:
        return False
    raise ValueError("only a witness bound on swt(C) is available")


def bracket_params(code: SubsystemCode) -> ParamRecord:
    """[[n,k,r,d]]_q form with k = log_q K, r = log_q R (rational if needed)."""
    m = code.field.m
    purity = code.purity
    return ParamRecord(
        n=code.n,
        q=code.field.q,
        k=Fraction(code.k_exp, m),
        r=Fraction(code.r_exp, m),
        d=code.d,
        pure=(True if purity[0] == "pure"
              else False if purity[0] == "impure" else None),
        pure_to=(purity[1] if purity[0] in ("pure_to", "impure") else code.d),
        linear=code.is_linear,
        provenance=["derive"],
    )


def analysis_report(code: SubsystemCode) -> dict:
    """JSON-friendly analysis report for a derived subsystem code."""
    purity = code.purity
    rec = bracket_params(code)
    return {
        "params": {
            "n": code.n,
            "q": code.field.q,
            "K": code.K,
            "R": code.R,
            "d": code.d,
        },
        "bracket": rec.bracket(),
        "linear": code.is_linear,
        "purity": {"kind": purity[0], "value": purity[1],
                   "swt_C": code.swt_c, "method": code.swt_c_method},
        "distance": {"value": code.d, "method": code.d_method,
                     "case": code.case},
        "log_p_size_C": code.C.rank_p,
        "log_p_size_D": code.D.rank_p,
    }
