"""Pure-Python twin of the compiled wall-scan kernel.

Same contract as ``_wallscan.wall_candidates``; used when the extension is
unavailable, when ``COHSYS_PURE_PYTHON`` is set, or when inputs are large
enough that 64-bit intermediates could overflow in the compiled kernel.
Arbitrary-precision integers make this version safe at any size.
"""

from __future__ import annotations

from math import gcd


def wall_candidates(
    n: int,
    d: int,
    k: int,
    has_sup: bool,
    sup_num: int,
    sup_den: int,
) -> dict[tuple[int, int], list[tuple[int, int, int]]]:
    """Group candidate walls by reduced value (num, den), den > 0.

    A candidate arises from each subtype triple (n1, d1, k1) with
    1 <= n1 < n, 0 <= k1 <= k, 0 <= d1 <= d and k1*n != k*n1, as
    (d*n1 - d1*n) / (k1*n - k*n1), kept only when it lies in the open
    interval (0, sup).  Values map to their witness triples in enumeration
    order (n1, then k1, then d1, ascending).
    """
    out: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
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
                g = gcd(num, den)
                key = (num // g, den // g)
                bucket = out.get(key)
                if bucket is None:
                    out[key] = [(n1, d1, k1)]
                else:
                    bucket.append((n1, d1, k1))
    return out
