"""Expected dimensions and extension counts for coherent systems.

The Brill-Noether number ``beta`` is the expected dimension of the moduli
space attached to a numerical type.  For a pair of types the integers
``c12``/``c21`` count extension directions between the two sides, and the
three quantities are tied together by an exact additivity identity:

    beta(t1 + t2) = beta(t1) + beta(t2) + c12 + c21 - 1

which holds for every genus and every pair of types.  Everything here is
integer arithmetic; there is nothing to round.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .core import CSType, DomainError


class NegativeExtDimension(UserWarning):
    """An Ext¹ dimension came out negative: the inputs cannot be geometric."""


def _check_genus(g: int) -> None:
    if not isinstance(g, int) or isinstance(g, bool) or g < 2:
        raise DomainError(f"genus must be an integer >= 2, got {g!r}")


def beta(g: int, t: CSType) -> int:
    """Brill-Noether number n²(g−1) + 1 − k(k − d + n(g−1))."""
    _check_genus(g)
    n, d, k = t
    return n * n * (g - 1) + 1 - k * (k - d + n * (g - 1))


def c21(g: int, t1: CSType, t2: CSType) -> int:
    """Extension count C₂₁ = n₁(n₂−k₂)(g−1) + (k₂−n₂)d₁ + d₂n₁ − k₁k₂."""
    _check_genus(g)
    n1, d1, k1 = t1
    n2, d2, k2 = t2
    return n1 * (n2 - k2) * (g - 1) + (k2 - n2) * d1 + d2 * n1 - k1 * k2


def c12(g: int, t1: CSType, t2: CSType) -> int:
    """Extension count C₁₂ = n₂(n₁−k₁)(g−1) + (k₁−n₁)d₂ + d₁n₂ − k₁k₂."""
    _check_genus(g)
    n1, d1, k1 = t1
    n2, d2, k2 = t2
    return n2 * (n1 - k1) * (g - 1) + (k1 - n1) * d2 + d1 * n2 - k1 * k2


@dataclass(frozen=True)
class ExtCounts:
    """Both extension counts for an ordered pair of types."""

    c12: int
    c21: int


def ext_counts(g: int, t1: CSType, t2: CSType) -> ExtCounts:
    return ExtCounts(c12=c12(g, t1, t2), c21=c21(g, t1, t2))


def beta_additivity_residual(g: int, t1: CSType, t2: CSType) -> int:
    """beta(t1+t2) minus the additive prediction; identically zero.

    Kept as an operation (rather than an assert) so callers and tests can
    exercise the identity on arbitrary inputs.
    """
    total = beta(g, t1 + t2)
    parts = beta(g, t1) + beta(g, t2) + c12(g, t1, t2) + c21(g, t1, t2) - 1
    return total - parts


def c12_three_term(g: int, t1: CSType, t2: CSType) -> tuple[int, int, int]:
    """C₁₂ split into its three natural summands.

    Returns ((d₁−n₁+(n₁−k₁)g)·n₂, k₁(n₂−k₂), d₂(k₁−n₁)); the pieces sum to
    ``c12(g, t1, t2)``.
    """
    _check_genus(g)
    n1, d1, k1 = t1
    n2, d2, k2 = t2
    return (
        (d1 - n1 + (n1 - k1) * g) * n2,
        k1 * (n2 - k2),
        d2 * (k1 - n1),
    )


def ext1_dim(g: int, t1: CSType, t2: CSType, h0_21: int, h2_21: int) -> int:
    """dim Ext¹ of the ordered pair: C₂₁ plus the two cohomology corrections.

    The correction terms are geometric inputs the caller must supply.  With
    both corrections zero a negative result means the pair cannot exist, so
    a :class:`NegativeExtDimension` warning is emitted.
    """
    if h0_21 < 0 or h2_21 < 0:
        raise DomainError("cohomology corrections must be nonnegative")
    value = c21(g, t1, t2) + h0_21 + h2_21
    if value < 0 and h0_21 == 0 and h2_21 == 0:
        warnings.warn(
            f"ext1_dim({g}, {t1}, {t2}) = {value} < 0: inconsistent inputs",
            NegativeExtDimension,
            stacklevel=2,
        )
    return value
