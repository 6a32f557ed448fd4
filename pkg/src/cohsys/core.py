"""Shared vocabulary for coherent-system computations on smooth curves.

Everything downstream works over exact rationals: stability comparisons are
sharp inequalities, so floating point is never allowed to creep in.  ``Rat``
is the binding arithmetic type for the whole package; it is the standard
library ``fractions.Fraction``, which already keeps values in lowest terms
with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional

Rat = Fraction


class DomainError(ValueError):
    """Raised when an input lies outside an operation's mathematical domain."""


def format_rat(q: Rat) -> str:
    """Render a rational as ``"num/den"`` with a positive denominator."""
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Rat:
    """Parse ``"num/den"`` or a bare integer string into a ``Rat``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


@dataclass(frozen=True)
class CurveClass:
    """A smooth projective curve, described only by the data the theory sees:
    its genus and whether it is hyperelliptic.

    Genus must be at least 2, and every genus-2 curve is hyperelliptic, so
    ``CurveClass(2, hyperelliptic=False)`` is unconstructible.
    """

    genus: int
    hyperelliptic: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or isinstance(self.genus, bool):
            raise DomainError(f"genus must be an integer, got {self.genus!r}")
        if self.genus < 2:
            raise DomainError(f"genus must be at least 2, got {self.genus}")
        if self.genus == 2 and not self.hyperelliptic:
            raise DomainError("every genus-2 curve is hyperelliptic")


@dataclass(frozen=True)
class CSType:
    """Numerical type ``(n, d, k)`` of a coherent system: rank ``n >= 1`` of
    the bundle, its degree ``d``, and the dimension ``k >= 1`` of the chosen
    space of sections.

    The degree is deliberately unconstrained here; individual operations
    impose their own degree windows.
    """

    n: int
    d: int
    k: int

    def __post_init__(self) -> None:
        for name in ("n", "d", "k"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise DomainError(f"{name} must be an integer, got {value!r}")
        if self.n < 1:
            raise DomainError(f"rank must be at least 1, got n={self.n}")
        if self.k < 1:
            raise DomainError(f"section count must be at least 1, got k={self.k}")

    def __iter__(self) -> Iterator[int]:
        yield self.n
        yield self.d
        yield self.k

    def __add__(self, other: "CSType") -> "CSType":
        if not isinstance(other, CSType):
            return NotImplemented
        return CSType(self.n + other.n, self.d + other.d, self.k + other.k)

    def __str__(self) -> str:
        return f"({self.n},{self.d},{self.k})"


def mk_cstype(n: int, d: int, k: int) -> CSType:
    """Validating constructor for :class:`CSType`."""
    return CSType(n, d, k)


class Shape(str, Enum):
    """Coarse description of what the general member of a nonempty moduli
    space looks like, read off from how ``k`` compares with the rank."""

    BUNDLE_QUOTIENT = "bundle-quotient"
    TORSION_QUOTIENT = "torsion-quotient"
    GENERATED = "generated"
    SINGLE_POINT = "single-point"
    EMPTY = "empty"


class Smoothness(str, Enum):
    """Whether the terminal moduli space is known to be smooth of the
    expected dimension at every point."""

    YES = "yes"
    POSSIBLY_NOT = "possibly-not"
    NOT_APPLICABLE = "not-applicable"


class TagKind(str, Enum):
    """The two families of types whose moduli reduce to a single point."""

    DUAL_SPAN_OF_CANONICAL = "dual-span-of-canonical"
    HYPERELLIPTIC_PENCIL_POWER = "hyperelliptic-pencil-power"


@dataclass(frozen=True)
class ExceptionalTag:
    """Identifies which single-point family a type belongs to.

    ``a`` is the pencil-power exponent and is ``None`` for the dual span of
    the canonical bundle.
    """

    kind: TagKind
    cstype: CSType
    a: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is TagKind.HYPERELLIPTIC_PENCIL_POWER:
            if self.a is None or self.a < 1:
                raise DomainError("pencil-power tag needs an exponent a >= 1")
            if tuple(self.cstype) != (self.a, 2 * self.a, self.a + 1):
                raise DomainError(f"pencil-power tag with a={self.a} must have type (a,2a,a+1)")
        else:
            if self.a is not None:
                raise DomainError("dual-span tag carries no exponent")


@dataclass(frozen=True)
class OpenInterval:
    """Open interval ``(lo, hi)`` of rationals; ``hi=None`` means unbounded."""

    lo: Rat
    hi: Optional[Rat]

    def __post_init__(self) -> None:
        if self.hi is not None and self.hi <= self.lo:
            raise DomainError(f"empty interval ({self.lo}, {self.hi})")

    def __contains__(self, value: object) -> bool:
        if not isinstance(value, (int, Fraction)):
            return False
        if value <= self.lo:
            return False
        return self.hi is None or value < self.hi


@dataclass(frozen=True)
class Verdict:
    """Full answer sheet for one curve class and one numerical type.

    Boolean fields record nonemptiness of the four nested loci: all of the
    moduli spaces in the stable chamber next to the degree bound (``u``),
    their closure under semistability (``us``), the Brill-Noether locus
    (``b``), and the terminal moduli space (``g_alpha``).  ``dim`` is the
    dimension of the terminal space when nonempty, ``beta`` the expected
    dimension regardless.
    """

    u_nonempty: bool
    us_nonempty: bool
    b_nonempty: bool
    g_alpha_nonempty: bool
    beta: int
    dim: Optional[int]
    irreducible: Optional[bool]
    smooth_gl: Smoothness
    generic_shape: Shape
    exceptional: Optional[ExceptionalTag] = None

    def __post_init__(self) -> None:
        if self.u_nonempty and not self.us_nonempty:
            raise DomainError("u nonempty forces us nonempty")
        if self.us_nonempty and not self.g_alpha_nonempty:
            raise DomainError("us nonempty forces g_alpha nonempty")
        empty = not self.g_alpha_nonempty
        if empty != (self.generic_shape is Shape.EMPTY):
            raise DomainError("shape must be 'empty' exactly when g_alpha is empty")
        if empty != (self.dim is None):
            raise DomainError("dim must be None exactly when g_alpha is empty")
        if empty != (self.irreducible is None):
            raise DomainError("irreducible must be None exactly when g_alpha is empty")
        if empty != (self.smooth_gl is Smoothness.NOT_APPLICABLE):
            raise DomainError("smoothness is not-applicable exactly when g_alpha is empty")
        if self.exceptional is not None and empty:
            raise DomainError("an empty space cannot carry an exceptional tag")
