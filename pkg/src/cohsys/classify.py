"""Emptiness, dimension, and shape verdicts for types with 0 < d ≤ 2n.

For a curve class and a numerical type in this degree window the theory is
complete: whether the various moduli loci are nonempty is decided by sharp
rational inequalities in (g, n, d, k), and when nonempty the spaces are
irreducible of known dimension.  ``classify`` assembles the whole verdict.

The rules, with bound(d) := n + (d−n)/g evaluated exactly:

* nonemptiness of U (all spaces in the terminal chamber, stably):
  - 0 < d < 2n: k ≤ bound(d) and (n,d,k) ≠ (n,n,n);
  - d = 2n, non-hyperelliptic: k ≤ bound(2n) or (n,d,k) = (g−1,2g−2,g);
  - d = 2n, hyperelliptic: k ≤ n.
* nonemptiness of the semistable closure U^s adds, for d = 2n hyperelliptic
  and k > n: k ≤ bound(2n), or k = n+1 with 2 ≤ n ≤ g−1.
* B is nonempty exactly when U is; G(α) is nonempty exactly when U^s is,
  uniformly over the admissible α range.
* dimension is the Brill-Noether number, except the hyperelliptic single
  points of type (n, 2n, n+1) with n < g−1, whose dimension is 0 while the
  Brill-Noether number is negative.

Rank 1 is special-cased by a finite table: only (1,1,1), (1,2,1), and the
hyperelliptic (1,2,2) are nonempty, and α-stability is vacuous there.

Degrees d > 2n are rejected: emptiness is genuinely chamber-dependent out
there, and this module refuses to guess.  ``nonss_window`` is the one
exported statement about that regime: a k-window in which large α kills
semistability for section-generic bundles.
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    CSType,
    CurveClass,
    DomainError,
    ExceptionalTag,
    OpenInterval,
    Rat,
    Shape,
    Smoothness,
    TagKind,
    Verdict,
)
from .dims import beta

__all__ = [
    "ExceptionalTag",
    "TagKind",
    "bound_kmax",
    "min_degree",
    "bound_with_hom",
    "exceptional_types",
    "nonss_window",
    "classify",
    "classify_rank1",
]


def _check_genus_rank(g: int, n: int) -> None:
    if not isinstance(g, int) or isinstance(g, bool) or g < 2:
        raise DomainError(f"genus must be an integer >= 2, got {g!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"rank must be an integer >= 1, got {n!r}")


def bound_kmax(g: int, n: int, d: int) -> Rat:
    """Section ceiling n + (d−n)/g for α-semistability in degree 0 < d < 2n."""
    _check_genus_rank(g, n)
    return n + Fraction(d - n, g)


def min_degree(g: int, n: int, k: int) -> int:
    """Least degree min{2n, n + g(k−n)} admitting semistability when k > n."""
    _check_genus_rank(g, n)
    if k <= n:
        raise DomainError(f"min_degree needs k > n, got k={k}, n={n}")
    return min(2 * n, n + g * (k - n))


def bound_with_hom(g: int, n: int, d: int, m: int) -> Rat:
    """Section ceiling n + (d−n+m)/g, corrected by m independent maps to
    the structure sheaf; m = 0 recovers :func:`bound_kmax`."""
    _check_genus_rank(g, n)
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise DomainError(f"hom count must be an integer >= 0, got {m!r}")
    return n + Fraction(d - n + m, g)


def exceptional_types(c: CurveClass) -> list[ExceptionalTag]:
    """The single-point families for this curve class, in ascending rank.

    Non-hyperelliptic: only the dual span of the canonical bundle, of type
    (g−1, 2g−2, g).  Hyperelliptic: the powers of the pencil, of types
    (a, 2a, a+1) for a = 1..g−1.
    """
    g = c.genus
    if not c.hyperelliptic:
        tag = ExceptionalTag(TagKind.DUAL_SPAN_OF_CANONICAL, CSType(g - 1, 2 * g - 2, g))
        return [tag]
    return [
        ExceptionalTag(TagKind.HYPERELLIPTIC_PENCIL_POWER, CSType(a, 2 * a, a + 1), a=a)
        for a in range(1, g)
    ]


def nonss_window(g: int, n: int, d: int) -> OpenInterval | None:
    """Open k-window (n + (d−n)/g, ng/(g−1)) where no α-semistable system
    survives large α, provided the bundle has no sections of its dual.

    Returns None when the interval is empty as a real interval.
    """
    _check_genus_rank(g, n)
    lo = n + Fraction(d - n, g)
    hi = Fraction(n * g, g - 1)
    if lo >= hi:
        return None
    return OpenInterval(lo, hi)


def _assemble(c: CurveClass, t: CSType, u: bool, us: bool) -> Verdict:
    """Common verdict assembly once the two nonemptiness flags are decided."""
    g = c.genus
    n, d, k = t
    expected = beta(g, t)
    if not us:
        return Verdict(
            u_nonempty=False,
            us_nonempty=False,
            b_nonempty=False,
            g_alpha_nonempty=False,
            beta=expected,
            dim=None,
            irreducible=None,
            smooth_gl=Smoothness.NOT_APPLICABLE,
            generic_shape=Shape.EMPTY,
            exceptional=None,
        )
    pencil_point = c.hyperelliptic and d == 2 * n and k == n + 1 and n < g - 1
    over_bound = d == 2 * n and g * (k - n) > n
    if over_bound:
        shape = Shape.SINGLE_POINT
        if c.hyperelliptic:
            tag = ExceptionalTag(TagKind.HYPERELLIPTIC_PENCIL_POWER, t, a=n)
        else:
            tag = ExceptionalTag(TagKind.DUAL_SPAN_OF_CANONICAL, t)
    else:
        tag = None
        if k < n:
            shape = Shape.BUNDLE_QUOTIENT
        elif k == n:
            shape = Shape.TORSION_QUOTIENT
        else:
            shape = Shape.GENERATED
    return Verdict(
        u_nonempty=u,
        us_nonempty=us,
        b_nonempty=u,
        g_alpha_nonempty=us,
        beta=expected,
        dim=0 if pencil_point else expected,
        irreducible=True,
        smooth_gl=Smoothness.POSSIBLY_NOT if pencil_point else Smoothness.YES,
        generic_shape=shape,
        exceptional=tag,
    )


def classify(c: CurveClass, t: CSType) -> Verdict:
    """Full verdict for a type with 0 < d ≤ 2n; see the module docstring."""
    if t.n == 1:
        return classify_rank1(c, t)
    n, d, k = t
    if d <= 0 or d > 2 * n:
        raise DomainError(f"classification covers 0 < d <= 2n, got d={d} at n={n}")
    g = c.genus
    within = g * (k - n) <= d - n  # k <= n + (d-n)/g, exactly
    if d < 2 * n:
        u = within and not (d == n and k == n)
    elif c.hyperelliptic:
        u = k <= n
    else:
        u = within or (n, d, k) == (g - 1, 2 * g - 2, g)
    us = u
    if not us and d == 2 * n and c.hyperelliptic and k > n:
        us = within or (k == n + 1 and 2 <= n <= g - 1)
    return _assemble(c, t, u, us)


def classify_rank1(c: CurveClass, t: CSType) -> Verdict:
    """Verdict for rank-1 types, where the nonempty list is a finite table."""
    n, d, k = t
    if n != 1:
        raise DomainError(f"rank-1 classification needs n=1, got n={n}")
    if d <= 0 or d > 2:
        raise DomainError(f"rank-1 classification covers 0 < d <= 2, got d={d}")
    u = (d, k) in ((1, 1), (2, 1)) or (c.hyperelliptic and (d, k) == (2, 2))
    return _assemble(c, t, u, u)
