"""Exact modular arithmetic and the exponential sums behind the toolkit.

Kloosterman sums S(a,b;c) and Ramanujan sums c_q(n) are evaluated by direct
enumeration over units (correctness over speed; the enumeration is its own
oracle), and the composite character sum

    C = sum_{beta mod q1*q2} S(mbar, beta; q1) S(mbar', beta; q2) e(beta*n2/(q1*q2))

is summed straight from its definition with cached Kloosterman rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import Gl3LabError, InvalidInput, NonInvertible

MODULUS_CAP = 10**6
_IMAG_RESIDUE = 1e-9


@dataclass(frozen=True)
class ModPair:
    """A residue with its modulus, normalized to 0 <= residue < modulus."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidInput(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise InvalidInput(
                f"residue {self.residue} out of range for modulus {self.modulus}")


@dataclass(frozen=True)
class CharSumParams:
    """Inputs of the composite character sum over beta mod q_hat*q_hat_prime."""

    m: int
    m_prime: int
    q_hat: int
    q_hat_prime: int
    n2: int

    def __post_init__(self):
        if self.q_hat < 1 or self.q_hat_prime < 1:
            raise InvalidInput("moduli must be positive")
        if math.gcd(self.m, self.q_hat) != 1:
            raise InvalidInput(f"gcd(m={self.m}, q_hat={self.q_hat}) != 1")
        if math.gcd(self.m_prime, self.q_hat_prime) != 1:
            raise InvalidInput(
                f"gcd(m'={self.m_prime}, q_hat'={self.q_hat_prime}) != 1")


def mod_inverse(a: int, q: int) -> ModPair:
    """Multiplicative inverse of a modulo q."""
    if q < 1:
        raise InvalidInput(f"modulus must be positive, got {q}")
    if math.gcd(a, q) != 1:
        raise NonInvertible(f"gcd({a}, {q}) = {math.gcd(a, q)} != 1")
    return ModPair(pow(a, -1, q), q)


def inverse_in_range(m: int, q: int, Q: float) -> int:
    """The unique a in the window (Q, q+Q] with a*m == 1 (mod q).

    The window has length exactly q, so exactly one representative of the
    inverse residue class lands inside it.
    """
    inv = mod_inverse(m, q).residue
    lo = math.floor(Q) + 1          # smallest integer strictly above Q
    return lo + (inv - lo) % q


@lru_cache(maxsize=256)
def _units(c: int) -> tuple[np.ndarray, np.ndarray]:
    """Units alpha mod c and their inverses, as parallel int64 arrays."""
    if c == 1:
        return np.zeros(1, dtype=np.int64), np.zeros(1, dtype=np.int64)
    alphas = np.array([a for a in range(1, c) if math.gcd(a, c) == 1],
                      dtype=np.int64)
    inverses = np.array([pow(int(a), -1, c) for a in alphas], dtype=np.int64)
    return alphas, inverses


def _kloosterman_complex(a: int, b: int, c: int) -> complex:
    alphas, inverses = _units(c)
    phases = ((a % c) * alphas + (b % c) * inverses) % c
    return complex(np.exp((2j * np.pi / c) * phases).sum())


def kloosterman(a: int, b: int, c: int) -> float:
    """Kloosterman sum S(a,b;c) = sum over units alpha of e((a*alpha + b*alphabar)/c).

    The sum is real; the imaginary residue of the complex accumulation is
    checked against 1e-9 * c and dropped.  Moduli are capped at 10**6.
    """
    if c < 1:
        raise InvalidInput(f"modulus must be positive, got {c}")
    if c > MODULUS_CAP:
        raise InvalidInput(f"modulus {c} above enumeration cap {MODULUS_CAP}")
    total = _kloosterman_complex(a, b, c)
    if abs(total.imag) > _IMAG_RESIDUE * c:
        raise Gl3LabError(
            f"imaginary residue {total.imag:.3e} exceeds tolerance for S({a},{b};{c})")
    return total.real


@lru_cache(maxsize=4096)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...), by trial division."""
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in _factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _mobius(n: int) -> int:
    mu = 1
    for _, e in _factorize(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def ramanujan_sum(q: int, n: int) -> int:
    """Ramanujan sum c_q(n) = sum_{d | gcd(q,n)} d * mu(q/d).

    Agrees with kloosterman(n, 0, q); c_q(0) = phi(q).
    """
    if q < 1:
        raise InvalidInput(f"modulus must be positive, got {q}")
    g = q if n == 0 else math.gcd(q, abs(n))
    return sum(d * _mobius(q // d) for d in _divisors(g))


@lru_cache(maxsize=2048)
def kloosterman_row(m_bar: int, c: int) -> np.ndarray:
    """S(m_bar, beta; c) for beta = 0..c-1 as a complex vector.

    The tiny imaginary residues are kept so that downstream sums see the
    raw accumulation; callers asserting realness should do so themselves.
    """
    alphas, inverses = _units(c)
    left = np.exp((2j * np.pi / c) * ((m_bar % c) * alphas % c))
    betas = np.arange(c, dtype=np.int64)
    mat = np.exp((2j * np.pi / c) * (betas[:, None] * inverses[None, :] % c))
    return mat @ left


def char_sum(params: CharSumParams) -> complex:
    """The composite Kloosterman-pair character sum, by direct beta-summation.

    Satisfies |C| <= q_hat * q_hat_prime * gcd(q_hat, q_hat_prime, n2), and
    vanishes for n2 = 0 unless q_hat == q_hat_prime.
    """
    q1, q2 = params.q_hat, params.q_hat_prime
    m_bar = pow(params.m, -1, q1) if q1 > 1 else 0
    m_bar_p = pow(params.m_prime, -1, q2) if q2 > 1 else 0
    row1 = kloosterman_row(m_bar, q1)
    row2 = kloosterman_row(m_bar_p, q2)
    c12 = q1 * q2
    betas = np.arange(c12, dtype=np.int64)
    twist = np.exp((2j * np.pi / c12) * (params.n2 * betas % c12))
    vals = row1[betas % q1] * row2[betas % q2] * twist
    return complex(vals.sum())


def char_sum_bound(params: CharSumParams) -> int:
    """The envelope q_hat * q_hat_prime * gcd(q_hat, q_hat_prime, n2)."""
    return params.q_hat * params.q_hat_prime * math.gcd(
        params.q_hat, params.q_hat_prime, abs(params.n2))


def divisor_d3(n: int) -> int:
    """Ternary divisor count d3(n): ordered triples (a,b,c) with abc = n."""
    if n < 1:
        raise InvalidInput(f"d3 needs n >= 1, got {n}")
    out = 1
    for _, e in _factorize(n):
        out *= (e + 1) * (e + 2) // 2
    return out


def divisor_count(n: int) -> int:
    """d(n), used by the Weil-bound envelope d(c) * sqrt(c) * gcd(a,b,c)^(1/2)."""
    out = 1
    for _, e in _factorize(n):
        out *= e + 1
    return out


def weil_bound(a: int, b: int, c: int) -> float:
    """The square-root-cancellation envelope for |S(a,b;c)|."""
    return divisor_count(c) * math.sqrt(c) * math.sqrt(math.gcd(a, b, c))
