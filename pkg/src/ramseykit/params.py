"""Derivation of the full constant chain for each of the three theorems.

Given the pattern size k, colour count r, girth target g, and the relevant
Ramsey or van der Waerden number, this derives the container parameters
(epsilon, D_tau, K, s), the sampling scale (D_p, n, tau, p) and, where the
deletion method applies, the deletion budget t.  Exact rationals are kept
exact; everything that is irrational or astronomically large lives in log
space.  The headline size bound is evaluated alongside and checked against
n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .graphs import InputError
from .lognum import LogNum, floor_int_mul_log2, log2_value

THEOREMS = ("cycles", "ap", "cliques")


@dataclass(frozen=True)
class ParamSet:
    theorem: str
    k: int
    r: int
    g: int | None
    base_number: int  # Ramsey number R (cycles/cliques) or vdW number W (ap)
    epsilon: Fraction
    D_tau: LogNum
    K: int
    s: int
    D_p: LogNum
    n: LogNum
    tau: LogNum
    p: LogNum
    t: LogNum | None
    size_bound: LogNum
    size_bound_ok: bool
    girth_ramsey_link_ok: bool | None  # cycles only: p(n-1) > 4 R^2 k D_p^(k-1)

    @property
    def uniformity(self) -> int:
        return self.k * (self.k - 1) // 2 if self.theorem == "cliques" else self.k

    def to_json(self) -> dict:
        def num(x):
            if x is None:
                return None
            if isinstance(x, LogNum):
                return x.to_json()
            if isinstance(x, Fraction):
                return {"num": str(x.numerator), "den": str(x.denominator)}
            return x

        return {
            "theorem": self.theorem,
            "k": self.k,
            "r": self.r,
            "g": self.g,
            "base_number": self.base_number,
            "epsilon": num(self.epsilon),
            "D_tau": num(self.D_tau),
            "K": self.K,
            "s": self.s,
            "D_p": num(self.D_p),
            "n": num(self.n),
            "tau": num(self.tau),
            "p": num(self.p),
            "t": num(self.t),
            "size_bound": num(self.size_bound),
            "size_bound_ok": self.size_bound_ok,
            "girth_ramsey_link_ok": self.girth_ramsey_link_ok,
        }


def derive_params(theorem: str, k: int, r: int, g: int | None,
                  base_number: int) -> ParamSet:
    """Evaluate the whole constant chain for one theorem.

    `base_number` is the r-colour Ramsey number of the pattern (cycles and
    cliques) or the van der Waerden number vdW(k, r) (ap).
    """
    if theorem not in THEOREMS:
        raise InputError(f"unknown theorem kind {theorem!r}")
    if r < 2:
        raise InputError(f"need r >= 2, got {r}")
    if base_number < k:
        raise InputError(f"base number {base_number} below pattern size {k}")
    if theorem == "cycles":
        if k < 4:
            raise InputError(f"cycle construction needs k >= 4, got {k}")
        if g is not None and g != k:
            raise InputError("the cycle construction targets girth k itself")
        return _derive_cycles(k, r, base_number)
    if k < 3:
        raise InputError(f"need k >= 3, got {k}")
    if g is None or g < 2:
        raise InputError(f"need a girth target g >= 2, got {g}")
    if theorem == "ap":
        return _derive_ap(k, r, g, base_number)
    return _derive_cliques(k, r, g, base_number)


def _derive_cycles(k: int, r: int, R: int) -> ParamSet:
    inv_eps = r * R**k
    eps = Fraction(1, inv_eps)
    D_tau = LogNum.from_int(2) ** (2 * k) \
        * LogNum.from_fraction(eps) ** Fraction(-1, k - 1)
    K = 800 * k * factorial(k) ** 3
    s = floor_int_mul_log2(K, inv_eps)
    D_p = LogNum.from_int(10 * R * R * r * r * K) * LogNum.from_int(s) ** 2 \
        * D_tau * log2_value(10 * R * R * r)
    n = D_p ** (k * k)
    decay = Fraction(-(k - 2), k - 1)
    tau = D_tau * n ** decay
    p = D_p * n ** decay
    size_bound = LogNum.from_int(k) ** (15 * k**3) \
        * LogNum.from_int(R) ** (10 * k**2)
    link_lhs = p * (n - 1)
    link_rhs = LogNum.from_int(4 * R * R * k) * D_p ** (k - 1)
    return ParamSet(
        theorem="cycles", k=k, r=r, g=None, base_number=R,
        epsilon=eps, D_tau=D_tau, K=K, s=s, D_p=D_p, n=n, tau=tau, p=p,
        t=None, size_bound=size_bound, size_bound_ok=n <= size_bound,
        girth_ramsey_link_ok=link_lhs > link_rhs)


def _derive_ap(k: int, r: int, g: int, W: int) -> ParamSet:
    inv_eps = r * W**3
    eps = Fraction(1, inv_eps)
    numerator = 6 * factorial(k) * 2 ** comb(k, 2) * k**3
    D_tau = LogNum.from_fraction(Fraction(numerator) / eps) ** Fraction(1, k - 1)
    K = 800 * k * factorial(k) ** 3
    s = floor_int_mul_log2(K, inv_eps)
    D_p = LogNum.from_int(128 * W * r * r * K) * LogNum.from_int(s) ** 2 \
        * D_tau * log2_value(128 * W * r)
    n = LogNum.from_int(k) ** (4 * g) * D_p ** (2 * k * (k + g))
    decay = Fraction(-1, k - 1)
    tau = D_tau * n ** decay
    p = D_p * n ** decay
    t = p * n / (8 * W)
    size_bound = LogNum.from_int(k) ** (40 * k**2 * (k + g)) \
        * LogNum.from_int(W) ** (12 * k * (k + g))
    return ParamSet(
        theorem="ap", k=k, r=r, g=g, base_number=W,
        epsilon=eps, D_tau=D_tau, K=K, s=s, D_p=D_p, n=n, tau=tau, p=p,
        t=t, size_bound=size_bound, size_bound_ok=n <= size_bound,
        girth_ramsey_link_ok=None)


def _derive_cliques(k: int, r: int, g: int, R: int) -> ParamSet:
    h = comb(k, 2)
    inv_eps = 2 * r * comb(R, k)
    eps = Fraction(1, inv_eps)
    numerator = 6 * factorial(h) * 2 ** comb(h, 2) * h * k**k
    D_tau = LogNum.from_fraction(Fraction(numerator) / eps) ** Fraction(10, k * k)
    K = 800 * h * factorial(h) ** 3
    s = floor_int_mul_log2(K, inv_eps)
    D_p = LogNum.from_int(50 * R * R * r * r * K) * LogNum.from_int(s) ** 2 \
        * D_tau * log2_value(50 * R * R * r)
    n = D_p ** (k * k * (5 + g))
    decay = Fraction(-2, k + 1)
    tau = D_tau * n ** decay
    p = D_p * n ** decay
    pairs = n * (n - 1) / 2
    t = p / (2 * R * R) * pairs
    size_bound = LogNum.from_int(k) ** (40 * g * k**4) \
        * LogNum.from_int(R) ** (40 * g * k**2)
    return ParamSet(
        theorem="cliques", k=k, r=r, g=g, base_number=R,
        epsilon=eps, D_tau=D_tau, K=K, s=s, D_p=D_p, n=n, tau=tau, p=p,
        t=t, size_bound=size_bound, size_bound_ok=n <= size_bound,
        girth_ramsey_link_ok=None)
