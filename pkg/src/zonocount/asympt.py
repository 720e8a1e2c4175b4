"""Asymptotic engine for the zonotope count in [0,n]^d.

Everything is assembled from the polynomial family

    P_d(X) = sum_{delta=1}^{d} C(d,delta) 2^(delta-1) prod_{k=1}^{delta-1}(X-k) / (delta-1)!

and the shift-combination operator Pi_d[f](s) = sum_delta p_{d,delta} f(s-delta).
The main closed-form estimate of ln z_d(n) is

    ln alpha_d + beta_d ln n + Q_d(n^(1/(d+1))) + I_crit(theta_n),

with kappa_d = 2^(d-1) zeta(d+1)/zeta(d), saddle parameter
theta_n = (kappa_d/n)^(1/(d+1)), and the oscillatory term I_crit summed over
non-trivial zeta zeros (residues 1/zeta'(rho) under the simple-zero
hypothesis).  A second, independent assembly route goes through the
univariate expansion of ln Zon_d(e^-theta) and the Gaussian saddle prefactor
exp(d n theta)/sqrt((2 pi)^d det B); the two routes agree identically and are
kept side by side as a regression sentinel.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .primitives import is_primitive
from .special import (
    ZetaZero,
    ZeroVerificationError,
    bernoulli,
    first_zero,
    gamma_complex,
    zeta_complex,
    zeta_deriv_neg_int,
    zeta_neg_int,
    zeta_real,
)

LOG_2PI = math.log(2 * math.pi)


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact rational coefficients, index = degree."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=None)
def pd_poly(d: int) -> RationalPoly:
    """P_d with exact coefficients; degree d-1, leading coefficient 2^(d-1)/(d-1)!.

    Satisfies P_{d+2} = (2X/(d+1)) P_{d+1} + P_d with P_1 = 1, P_2 = 2X, and
    carries only terms of parity d-1.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    coeffs = [Fraction(0)] * d
    for delta in range(1, d + 1):
        poly = [Fraction(1)]
        for k in range(1, delta):
            nxt = [Fraction(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] += c
                nxt[i] -= k * c
            poly = nxt
        scale = Fraction(math.comb(d, delta) * 2 ** (delta - 1), math.factorial(delta - 1))
        for i, c in enumerate(poly):
            coeffs[i] += scale * c
    return RationalPoly(tuple(coeffs))


def pi_d_apply(d: int, f: Callable[[complex], complex], s: complex) -> complex:
    """Apply Pi_d to f at s: sum over nonzero p_{d,delta} of p_{d,delta} f(s - delta)."""
    acc: complex = 0
    for delta, c in enumerate(pd_poly(d).coeffs):
        if c != 0:
            acc += float(c) * f(s - delta)
    return acc


@lru_cache(maxsize=None)
def pi_d_zeta_at_zero(d: int) -> Fraction:
    """Exact Pi_d[zeta](0) = sum p_{d,delta} zeta(-delta)."""
    return sum(
        (c * zeta_neg_int(delta) for delta, c in enumerate(pd_poly(d).coeffs) if c != 0),
        Fraction(0),
    )


def _require_dim(d: int) -> None:
    if d < 2:
        raise ValueError("asymptotic formulas require d >= 2")


def kappa(d: int) -> float:
    """kappa_d = 2^(d-1) zeta(d+1)/zeta(d)."""
    _require_dim(d)
    return 2 ** (d - 1) * zeta_real(d + 1) / zeta_real(d)


def beta_exact(d: int) -> Fraction:
    """Exact power-law exponent beta_d = -(d(d+2) + 4 Pi_d[zeta](0)) / (2(d+1))."""
    _require_dim(d)
    return Fraction(-1, 2 * (d + 1)) * (d * (d + 2) + 4 * pi_d_zeta_at_zero(d))


def alpha_ln(d: int) -> float:
    """ln alpha_d, the constant prefactor of the closed-form estimate:

    alpha_d = kappa^(d/(2(d+1)) + 2/(d+1) Pi[zeta](0))
              * exp(2 Pi[log(2pi) zeta - zeta'](0)) / ((2pi)^(d/2) sqrt(d+1)).
    """
    _require_dim(d)
    expo = Fraction(d, 2 * (d + 1)) + Fraction(2, d + 1) * pi_d_zeta_at_zero(d)
    acc = float(expo) * math.log(kappa(d))
    mixed = 0.0
    for delta, c in enumerate(pd_poly(d).coeffs):
        if c == 0:
            continue
        mixed += float(c) * (LOG_2PI * float(zeta_neg_int(delta)) - zeta_deriv_neg_int(delta))
    return acc + 2 * mixed - 0.5 * d * LOG_2PI - 0.5 * math.log(d + 1)


def q_poly(d: int) -> list[tuple[int, float]]:
    """Coefficients of Q_d as (degree, value), degrees strictly decreasing:

    Q_d(X) = (d+1) kappa^(1/(d+1)) X^d
             + sum_{delta=2}^{d-1} p_{d,delta-1} zeta(delta+1)(delta-1)!/zeta(delta)
                                   kappa^(-delta/(d+1)) X^delta.
    """
    _require_dim(d)
    kap = kappa(d)
    pd = pd_poly(d).coeffs
    terms = [(d, (d + 1) * kap ** (1.0 / (d + 1)))]
    for delta in range(d - 1, 1, -1):
        c = pd[delta - 1]
        if c == 0:
            continue
        coeff = (float(c) * zeta_real(delta + 1) * math.factorial(delta - 1)
                 / zeta_real(delta) * kap ** (-delta / (d + 1)))
        terms.append((delta, coeff))
    return terms


def q_value(d: int, n: float) -> float:
    """Q_d evaluated at X = n^(1/(d+1))."""
    x = float(n) ** (1.0 / (d + 1))
    return sum(coeff * x ** deg for deg, coeff in q_poly(d))


# ---------------------------------------------------------------------------
# Factored audit forms: every Q_d coefficient is a product of rational powers
# of primes, pi, and zeta at odd integers.  Kept for table audits and debug
# output; numeric evaluation elsewhere never routes through these.
# ---------------------------------------------------------------------------


def _factor_int(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class FactoredReal:
    """Product of rational powers of primes, pi, and zeta(odd k) values."""

    primes: tuple[tuple[int, Fraction], ...]
    pi_exp: Fraction
    zeta_exp: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "FactoredReal":
        if fr <= 0:
            raise ValueError("factored form requires a positive rational")
        exps: dict[int, Fraction] = {}
        for p, e in _factor_int(fr.numerator).items():
            exps[p] = exps.get(p, Fraction(0)) + e
        for p, e in _factor_int(fr.denominator).items():
            exps[p] = exps.get(p, Fraction(0)) - e
        return cls(tuple(sorted(exps.items())), Fraction(0), ())

    def mul(self, other: "FactoredReal") -> "FactoredReal":
        pr = dict(self.primes)
        for p, e in other.primes:
            pr[p] = pr.get(p, Fraction(0)) + e
        ze = dict(self.zeta_exp)
        for k, e in other.zeta_exp:
            ze[k] = ze.get(k, Fraction(0)) + e
        return FactoredReal(
            tuple(sorted((p, e) for p, e in pr.items() if e != 0)),
            self.pi_exp + other.pi_exp,
            tuple(sorted((k, e) for k, e in ze.items() if e != 0)),
        )

    def pow(self, expo: Fraction) -> "FactoredReal":
        expo = Fraction(expo)
        return FactoredReal(
            tuple((p, e * expo) for p, e in self.primes),
            self.pi_exp * expo,
            tuple((k, e * expo) for k, e in self.zeta_exp),
        )

    def ln(self) -> float:
        acc = sum(float(e) * math.log(p) for p, e in self.primes)
        acc += float(self.pi_exp) * math.log(math.pi)
        acc += sum(float(e) * math.log(zeta_real(k)) for k, e in self.zeta_exp)
        return acc

    def value(self) -> float:
        return math.exp(self.ln())


def zeta_even_factored(two_m: int) -> FactoredReal:
    """zeta(2m) = (-1)^(m+1) B_{2m} (2 pi)^(2m) / (2 (2m)!) as rational * pi^(2m)."""
    if two_m < 2 or two_m % 2:
        raise ValueError("argument must be a positive even integer")
    m = two_m // 2
    rational = (-1) ** (m + 1) * bernoulli(two_m) * 2 ** two_m / (2 * math.factorial(two_m))
    out = FactoredReal.from_fraction(rational)
    return FactoredReal(out.primes, Fraction(two_m), ())


def _zeta_ratio_factored(num_arg: int, den_arg: int) -> FactoredReal:
    """zeta(num_arg)/zeta(den_arg) with consecutive integer args (one is even)."""
    if num_arg % 2 == 0:
        num = zeta_even_factored(num_arg)
        den = FactoredReal((), Fraction(0), ((den_arg, Fraction(1)),))
    else:
        num = FactoredReal((), Fraction(0), ((num_arg, Fraction(1)),))
        den = zeta_even_factored(den_arg)
    return num.mul(den.pow(Fraction(-1)))


def kappa_factored(d: int) -> FactoredReal:
    """kappa_d as a product of prime/pi/zeta(odd) powers."""
    _require_dim(d)
    return FactoredReal.from_fraction(Fraction(2 ** (d - 1))).mul(
        _zeta_ratio_factored(d + 1, d))


def q_poly_factored(d: int) -> list[tuple[int, FactoredReal]]:
    """Q_d coefficients in factored audit form, same order as q_poly."""
    _require_dim(d)
    kf = kappa_factored(d)
    pd = pd_poly(d).coeffs
    terms = [(d, FactoredReal.from_fraction(Fraction(d + 1)).mul(kf.pow(Fraction(1, d + 1))))]
    for delta in range(d - 1, 1, -1):
        c = pd[delta - 1]
        if c == 0:
            continue
        base = FactoredReal.from_fraction(c * math.factorial(delta - 1))
        term = base.mul(_zeta_ratio_factored(delta + 1, delta)).mul(
            kf.pow(Fraction(-delta, d + 1)))
        terms.append((delta, term))
    return terms


# ---------------------------------------------------------------------------
# Saddle data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SaddleData:
    """Saddle parameter and the leading forms entering the Gaussian prefactor."""

    theta: tuple[float, ...]
    a_leading: tuple[float, ...]
    detb_leading: float


def saddle_theta(d: int, n: Sequence[int]) -> SaddleData:
    """Solve the saddle-point equation at box n (componentwise >= 1):

    theta_i = kappa^(1/(d+1)) (prod_j n_j)^(1/(d+1)) / n_i.

    a_leading plugs theta back into the expected-endpoint leading form
    kappa/(theta_i prod theta_j) (recovering n exactly), and detb_leading is
    the leading determinant (d+1) kappa^d prod theta_k^-(d+2).
    """
    _require_dim(d)
    if isinstance(n, int):
        n = (n,) * d
    nt = tuple(float(c) for c in n)
    if len(nt) != d or any(c < 1 for c in nt):
        raise ValueError(f"box entries must be >= 1, got {n}")
    kap = kappa(d)
    prod_n = math.prod(nt)
    root = (kap * prod_n) ** (1.0 / (d + 1))
    theta = tuple(root / ni for ni in nt)
    prod_theta = math.prod(theta)
    a_leading = tuple(kap / (t * prod_theta) for t in theta)
    detb = (d + 1) * kap ** d * prod_theta ** (-(d + 2))
    return SaddleData(theta=theta, a_leading=a_leading, detb_leading=detb)


def theta_tilde(d: int, n: float) -> float:
    """Cubic-box saddle parameter (kappa_d / n)^(1/(d+1))."""
    _require_dim(d)
    if n <= 0:
        raise ValueError("n must be positive")
    return (kappa(d) / n) ** (1.0 / (d + 1))


# ---------------------------------------------------------------------------
# Oscillatory zero-sum correction
# ---------------------------------------------------------------------------


def _resolve_zeros(zeros: Sequence[ZetaZero] | None, m: int) -> list[ZetaZero]:
    if zeros is None:
        zeros = [first_zero()]
    zeros = list(zeros)
    if not zeros:
        raise ValueError("empty zero list")
    if not 1 <= m <= len(zeros):
        raise ValueError(f"m = {m} outside 1..{len(zeros)}")
    for z in zeros[:m]:
        residual = abs(zeta_complex(z.rho))
        if residual >= 1e-6:
            raise ZeroVerificationError(
                f"unverified zero t = {z.imag:g}: |zeta| = {residual:.3e}")
    return zeros[:m]


def _zero_weight(d: int, zero: ZetaZero) -> complex:
    """W(rho) = Pi_d[zeta](rho) zeta(rho+1) Gamma(rho) / zeta'(rho)."""
    rho = zero.rho
    return (pi_d_apply(d, zeta_complex, rho) * zeta_complex(rho + 1)
            * gamma_complex(rho) / zero.zeta_deriv)


def icrit_theta(d: int, theta: float, zeros: Sequence[ZetaZero] | None = None,
                m: int = 1) -> float:
    """I_crit,d(theta) = sum over zeros of 2 Re[W(rho) theta^-rho]."""
    _require_dim(d)
    if theta <= 0:
        raise ValueError("theta must be positive")
    log_theta = math.log(theta)
    acc = 0.0
    for z in _resolve_zeros(zeros, m):
        acc += 2 * (_zero_weight(d, z) * cmath.exp(-z.rho * log_theta)).real
    return acc


def icrit(d: int, n: float, zeros: Sequence[ZetaZero] | None = None, m: int = 1) -> float:
    """Oscillatory correction evaluated at the saddle, theta = (kappa_d/n)^(1/(d+1)).

    Conjugate zero pairs are folded into twice the real part; residues are
    1/zeta'(rho) (simple-zero hypothesis).  Default m=1: further zeros change
    the value by ~1e-4 of the first term and come from a zeros file.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    return icrit_theta(d, theta_tilde(d, n), zeros, m)


@dataclass(frozen=True)
class WaveForm:
    """Single-zero reading of I_crit as
    amp_cos n^half_power cos(frequency ln(scale n)) + amp_sin (...) sin(...)."""

    amp_cos: float
    amp_sin: float
    frequency: float
    scale: float
    half_power: float

    def value(self, n: float) -> float:
        mod = n ** self.half_power
        phase = self.frequency * math.log(self.scale * n)
        return mod * (self.amp_cos * math.cos(phase) + self.amp_sin * math.sin(phase))


def icrit_wave_form(d: int, zero: ZetaZero | None = None) -> WaveForm:
    """Extract (A, B, frequency, scale) of the one-zero oscillation at the saddle."""
    _require_dim(d)
    z = zero if zero is not None else first_zero()
    w = _zero_weight(d, z)
    kap = kappa(d)
    pref = 2 * kap ** (-0.5 / (d + 1))
    return WaveForm(
        amp_cos=pref * w.real,
        amp_sin=-pref * w.imag,
        frequency=z.imag / (d + 1),
        scale=1.0 / kap,
        half_power=0.5 / (d + 1),
    )


# ---------------------------------------------------------------------------
# Full estimates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AsympEstimate:
    """Decomposed closed-form estimate of ln z_d(n 1)."""

    dim: int
    n: float
    ln_alpha: float
    beta: Fraction
    q_value: float
    icrit: float
    ln_z_hat: float

    def __post_init__(self):
        parts = self.ln_alpha + float(self.beta) * math.log(self.n) + self.q_value + self.icrit
        if not math.isclose(parts, self.ln_z_hat, rel_tol=0, abs_tol=1e-9 * max(1.0, abs(parts))):
            raise ValueError("ln_z_hat must equal the sum of its components")

    @property
    def beta_ln_n(self) -> float:
        return float(self.beta) * math.log(self.n)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "n": self.n,
            "ln_alpha": self.ln_alpha,
            "beta": f"{self.beta.numerator}/{self.beta.denominator}",
            "beta_ln_n": self.beta_ln_n,
            "q_value": self.q_value,
            "icrit": self.icrit,
            "ln_z_hat": self.ln_z_hat,
        }


def estimate(d: int, n: float, zeros: Sequence[ZetaZero] | None = None,
             m: int = 1) -> AsympEstimate:
    """Closed-form estimate of ln z_d(n 1), decomposed into its four parts."""
    _require_dim(d)
    if n < 1:
        raise ValueError("n must be >= 1")
    la = alpha_ln(d)
    beta = beta_exact(d)
    qv = q_value(d, n)
    ic = icrit(d, n, zeros, m)
    return AsympEstimate(
        dim=d, n=float(n), ln_alpha=la, beta=beta, q_value=qv, icrit=ic,
        ln_z_hat=la + float(beta) * math.log(n) + qv + ic,
    )


def log_zon_univariate(d: int, theta: float, zeros: Sequence[ZetaZero] | None = None,
                       m: int = 1) -> float:
    """Expansion of ln Zon_d(e^-theta, ..., e^-theta) as theta -> 0:

    sum_{delta=1}^{d-1} p_{d,delta} zeta(delta+2) delta! / (zeta(delta+1) theta^(delta+1))
    + I_crit,d(theta) + 2 Pi_d[log(2pi) zeta - zeta'](0) + 2 Pi_d[zeta](0) ln theta.
    """
    _require_dim(d)
    if theta <= 0:
        raise ValueError("theta must be positive")
    pd = pd_poly(d).coeffs
    acc = 0.0
    for delta in range(1, d):
        c = pd[delta]
        if c == 0:
            continue
        acc += (float(c) * zeta_real(delta + 2) * math.factorial(delta)
                / (zeta_real(delta + 1) * theta ** (delta + 1)))
    const = 0.0
    for delta, c in enumerate(pd):
        if c == 0:
            continue
        const += float(c) * (LOG_2PI * float(zeta_neg_int(delta)) - zeta_deriv_neg_int(delta))
    acc += 2 * const + 2 * float(pi_d_zeta_at_zero(d)) * math.log(theta)
    acc += icrit_theta(d, theta, zeros, m)
    return acc


def estimate_saddle_form(d: int, n: float, zeros: Sequence[ZetaZero] | None = None,
                         m: int = 1) -> float:
    """Second assembly route: ln of Zon_d(e^-theta) e^(d n theta) / sqrt((2pi)^d det B)
    at the cubic saddle.  Agrees with estimate().ln_z_hat identically; the diff
    is a regression sentinel."""
    _require_dim(d)
    if n < 1:
        raise ValueError("n must be >= 1")
    th = theta_tilde(d, n)
    kap = kappa(d)
    ln_detb = math.log(d + 1) + d * math.log(kap) - d * (d + 2) * math.log(th)
    return (log_zon_univariate(d, th, zeros, m) + d * n * th
            - 0.5 * (d * LOG_2PI + ln_detb))


def mean_diameter_asympt(d: int, n: float) -> float:
    """Leading-order mean diameter kappa^(1/(d+1))/zeta(d+1) n^(d/(d+1))
    (equivalently 2^(d-1)/(zeta(d) theta_n^d))."""
    _require_dim(d)
    if n < 1:
        raise ValueError("n must be >= 1")
    return kappa(d) ** (1.0 / (d + 1)) / zeta_real(d + 1) * n ** (d / (d + 1.0))


def mean_occurrence_asympt(d: int, n: float, v0: Sequence[int]) -> tuple[float, float]:
    """Leading-order (mean, variance) of one sign class's multiplicity:
    mean = 1/(theta_n ||v0||_1), variance = mean^2."""
    _require_dim(d)
    coords = tuple(int(c) for c in v0)
    if not is_primitive(coords, len(coords)):
        raise ValueError(f"v0 = {coords} is not primitive")
    mean = 1.0 / (theta_tilde(d, n) * sum(coords))
    return mean, mean * mean
