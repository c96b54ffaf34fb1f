"""Bernoulli-number coefficient tables shared by both kernel backends.

All three asymptotic expansions used by the kernels (Stirling series for
log-gamma, the digamma series, and the Euler-Maclaurin tail corrections)
draw on the even Bernoulli numbers B_2..B_32.  They are kept here as exact
fractions so every derived float table comes from a single source.
"""

from fractions import Fraction
from math import factorial

# B_{2k} for k = 1..16.
_B2K = [
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
    Fraction(-236364091, 2730),
    Fraction(8553103, 6),
    Fraction(-23749461029, 870),
    Fraction(8615841276005, 14322),
    Fraction(-7709321041217, 510),
]

# log Gamma(z) ~ (z-1/2) log z - z + log(2 pi)/2 + sum_k STIRLING_COEF[k-1] / z^{2k-1}
STIRLING_COEF = [float(b / (2 * k * (2 * k - 1))) for k, b in enumerate(_B2K, start=1)]

# psi(z) ~ log z - 1/(2z) - sum_k PSI_COEF[k-1] / z^{2k}
PSI_COEF = [float(b / (2 * k)) for k, b in enumerate(_B2K, start=1)]

# Euler-Maclaurin zeta tail: term k carries B_{2k}/(2k)! * prod_{j=0}^{2k-2}(s+j) * N^{-s-2k+1}
EM_COEF = [float(b / factorial(2 * k)) for k, b in enumerate(_B2K, start=1)]
