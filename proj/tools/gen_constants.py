#!/usr/bin/env python3
"""Generate src/constants_table.inc.

|B_2n| comes from the exact rational recurrence sum_{k=0}^{m} binom(m+1,k) B_k = 0. zeta(j) is summed directly up to N-1 and
completed with an Euler-Maclaurin tail, at 60 significant digits. Every literal is
the correctly rounded double of the high-precision value.
"""
from fractions import Fraction
from math import comb
import sys

import mpmath

mpmath.mp.dps = 60

MAX_BERN = 60
MAX_ZETA = 64


def bernoulli_numbers(m_max):
    b = [Fraction(1)]
    for m in range(1, m_max + 1):
        s = sum(comb(m + 1, k) * b[k] for k in range(m))
        b.append(-s / (m + 1))
    return b


def zeta_em(s, bern, n=40, terms=25):
    """Direct sum to n-1, then f(n)/2 + integral tail + Bernoulli corrections."""
    s = mpmath.mpf(s)
    total = mpmath.fsum(mpmath.mpf(k) ** -s for k in range(1, n))
    N = mpmath.mpf(n)
    total += N ** (1 - s) / (s - 1) + N ** -s / 2
    # B_2m/(2m)! * s(s+1)...(s+2m-2) * N^(-s-2m+1)
    rising = s
    for m in range(1, terms + 1):
        b2m = mpmath.mpf(bern[2 * m].numerator) / bern[2 * m].denominator
        total += b2m / mpmath.factorial(2 * m) * rising * N ** (-s - 2 * m + 1)
        rising *= (s + 2 * m - 1) * (s + 2 * m)
    return total


def main():
    bern = bernoulli_numbers(MAX_BERN + 2 * 25 + 2)
    out = []
    out.append("// Generated by tools/gen_constants.py. Do not edit.")
    out.append("// zeta(j) for j = 2..%d, index j - 2." % MAX_ZETA)
    out.append("inline constexpr std::array<double, %d> kZetaTable = {" % (MAX_ZETA - 1))
    for j in range(2, MAX_ZETA + 1):
        z = zeta_em(j, bern)
        ref = mpmath.zeta(j)
        if abs(z - ref) > mpmath.mpf(10) ** -50:
            sys.exit("Euler-Maclaurin zeta(%d) disagrees with mpmath" % j)
        out.append("    %s,  // zeta(%d)" % (repr(float(z)), j))
    out.append("};")
    out.append("")
    out.append("// |B_2n| for 2n = 2..%d, index n - 1." % MAX_BERN)
    out.append("inline constexpr std::array<double, %d> kBernoulliAbsTable = {" % (MAX_BERN // 2))
    for m in range(2, MAX_BERN + 1, 2):
        b = abs(bern[m])
        out.append("    %s,  // |B_%d| = %s" % (repr(float(mpmath.mpf(b.numerator) / b.denominator)), m, b))
    out.append("};")
    print("\n".join(out))


if __name__ == "__main__":
    main()
