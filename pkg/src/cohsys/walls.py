"""Slopes, admissible ranges, and the wall-and-chamber structure on the α-line.

For a type (n, d, k) the stability parameter α moves along an open interval,
and the moduli space only changes when α crosses one of finitely many
critical values.  ``candidate_walls`` enumerates a finite superset of those
critical values: every rational α where some subtype (n′, d′, k′) with
0 ≤ d′ ≤ d could trade stability with the ambient type.  Whether a candidate
wall is realized by an actual coherent system is a geometric question this
module deliberately does not answer.

The enumeration is the one hot loop in the package.  A compiled kernel is
used when the extension built, the inputs are small enough for 64-bit
arithmetic, and ``COHSYS_PURE_PYTHON`` is unset; otherwise a pure-Python
twin with identical semantics takes over.
"""

from __future__ import annotations

import os
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Union

from . import _wallscan_py
from .core import CSType, DomainError, OpenInterval, Rat

try:
    from . import _wallscan  # type: ignore[attr-defined]
except ImportError:
    _wallscan = None

# The compiled kernel computes in C long long; beyond this bound its
# intermediate products could exceed 64 bits, so large inputs are routed to
# the arbitrary-precision Python twin.
_KERNEL_INT_LIMIT = 1 << 20

_FORCE_PURE = os.environ.get("COHSYS_PURE_PYTHON", "") not in ("", "0")


def active_backend() -> str:
    """Name of the kernel used for in-range inputs: 'compiled' or 'pure-python'."""
    if _wallscan is not None and not _FORCE_PURE:
        return "compiled"
    return "pure-python"


def _kernel_for(n: int, d: int, k: int):
    if _wallscan is None or _FORCE_PURE or max(n, d, k) > _KERNEL_INT_LIMIT:
        return _wallscan_py
    return _wallscan


def _as_rat(a: Union[int, Rat], what: str = "alpha") -> Rat:
    if isinstance(a, bool) or not isinstance(a, (int, Fraction)):
        raise DomainError(f"{what} must be an exact rational, got {a!r}")
    return Fraction(a)


def slope(t: CSType) -> Rat:
    """Ordinary slope d/n."""
    return Fraction(t.d, t.n)


def alpha_slope(t: CSType, a: Union[int, Rat]) -> Rat:
    """α-slope d/n + α·k/n."""
    a = _as_rat(a)
    return Fraction(t.d, t.n) + a * Fraction(t.k, t.n)


def admissible_sup(t: CSType) -> Optional[Rat]:
    """Upper end of the admissible α range: d/(n−k) when k < n, else None (+∞)."""
    if t.k < t.n:
        return Fraction(t.d, t.n - t.k)
    return None


def admissible_range(t: CSType) -> OpenInterval:
    """Open interval of α where the moduli space can be nonempty.

    Requires d > 0; for d ≤ 0 the space is empty for every α.
    """
    if t.d <= 0:
        raise DomainError(f"admissible range needs d > 0, got d={t.d}")
    return OpenInterval(Fraction(0), admissible_sup(t))


@dataclass(frozen=True)
class WallSet:
    """All candidate critical values for one type, sorted, with witnesses.

    ``witnesses`` maps each wall to the subtype triples (n′, d′, k′) that
    produce it, in enumeration order; it is diagnostic data only and is not
    part of equality-critical semantics beyond determinism.
    """

    type: CSType
    walls: tuple[Rat, ...]
    admissible_sup: Optional[Rat]
    witnesses: Mapping[Rat, tuple[tuple[int, int, int], ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        prev: Optional[Rat] = None
        for w in self.walls:
            if w <= 0:
                raise DomainError(f"wall {w} must be positive")
            if self.admissible_sup is not None and w >= self.admissible_sup:
                raise DomainError(f"wall {w} must lie below {self.admissible_sup}")
            if prev is not None and w <= prev:
                raise DomainError("walls must be strictly increasing")
            prev = w

    def chamber_of(self, a: Union[int, Rat]) -> int:
        """0-based index of the open chamber containing α = a.

        The last chamber (index ``len(walls)``) is the terminal one next to
        the admissible sup.  Raises if a sits on a wall or outside the range.
        """
        a = _as_rat(a)
        if a <= 0 or (self.admissible_sup is not None and a >= self.admissible_sup):
            raise DomainError(f"alpha {a} outside the admissible range")
        i = bisect_left(self.walls, a)
        if i < len(self.walls) and self.walls[i] == a:
            raise DomainError(f"alpha {a} is a wall, not interior to a chamber")
        return i


def candidate_walls(t: CSType) -> WallSet:
    """Enumerate candidate walls for ``t``; requires d > 0.

    Candidates come from subtype triples (n′, d′, k′) with 1 ≤ n′ ≤ n−1,
    0 ≤ d′ ≤ d, 0 ≤ k′ ≤ k and k′/n′ ≠ k/n, via
    α = (d·n′ − d′·n)/(k′·n − k·n′), kept when 0 < α < admissible sup.
    Rank 1 has no proper subtypes, so its wall set is empty.
    """
    if t.d <= 0:
        raise DomainError(f"wall enumeration needs d > 0, got d={t.d}")
    sup = admissible_sup(t)
    if t.n == 1:
        return WallSet(type=t, walls=(), admissible_sup=sup, witnesses={})
    if sup is None:
        has_sup, sup_num, sup_den = False, 0, 1
    else:
        has_sup, sup_num, sup_den = True, sup.numerator, sup.denominator
    kernel = _kernel_for(t.n, t.d, t.k)
    grouped = kernel.wall_candidates(t.n, t.d, t.k, has_sup, sup_num, sup_den)
    # Exact value order without Fraction comparisons: every denominator is at
    # most k*n, so distinct reduced values differ by at least 1/(k*n)^2, and
    # with scale >= (k*n)^2 the integer num*scale//den separates and orders
    # them exactly.  Large wall sets sort several times faster this way.
    scale = 1 << (2 * (t.k * t.n).bit_length())
    order = sorted(grouped, key=lambda nd: nd[0] * scale // nd[1])
    fracs = [Fraction(num, den) for num, den in order]
    walls = tuple(fracs)
    witnesses = {f: tuple(grouped[nd]) for f, nd in zip(fracs, order)}
    return WallSet(type=t, walls=walls, admissible_sup=sup, witnesses=witnesses)


def chamber_index(t: CSType, a: Union[int, Rat]) -> int:
    """Chamber index of α = a for type ``t``; see :meth:`WallSet.chamber_of`.

    Recomputes the wall set; hold on to a :class:`WallSet` for repeated
    queries against one type.
    """
    return candidate_walls(t).chamber_of(a)
