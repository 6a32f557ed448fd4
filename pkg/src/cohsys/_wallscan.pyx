# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled wall-scan kernel.

Must stay semantically identical to ``_wallscan_py.wall_candidates``; the
test suite compares the two on a grid.  All intermediates fit in 64 bits
provided max(n, d, k) <= 2**20 and the sup fraction is reduced, which the
caller (``walls._kernel_for``) guarantees: every product here is bounded by
2**40 * 2**20 = 2**60 < 2**63.
"""


cdef long long _gcd(long long a, long long b) noexcept:
    cdef long long t
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


def wall_candidates(long long n, long long d, long long k,
                    bint has_sup, long long sup_num, long long sup_den):
    """Group candidate walls by reduced value (num, den), den > 0."""
    cdef long long n1, k1, d1, kn1, dn1, den, num, sign, g
    out = {}
    for n1 in range(1, n):
        kn1 = k * n1
        dn1 = d * n1
        for k1 in range(0, k + 1):
            den = k1 * n - kn1
            if den == 0:
                continue
            if den > 0:
                sign = 1
            else:
                sign = -1
                den = -den
            for d1 in range(0, d + 1):
                num = (dn1 - d1 * n) * sign
                if num <= 0:
                    continue
                if has_sup and num * sup_den >= sup_num * den:
                    continue
                g = _gcd(num, den)
                key = (num // g, den // g)
                bucket = out.get(key)
                if bucket is None:
                    out[key] = [(n1, d1, k1)]
                else:
                    bucket.append((n1, d1, k1))
    return out
