"""Arithmetic certificates for the constructive nonemptiness results.

Each certificate replays the computable residue of one construction: the
subtypes of the extension used, the critical value where stability trades
hands, and every numeric identity or inequality the construction leans on,
each recorded as an explicit check.  Hypothesis violations come back as
failed checks labelled ``hypothesis:`` rather than exceptions, so a runner
can distinguish "inputs outside the construction" from "arithmetic broke".

The genuinely geometric steps (non-triviality of extension classes,
stability of the middle term) have no arithmetic content; certificates
record only the numbers those arguments consume.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Optional

from .classify import bound_kmax, nonss_window
from .core import CSType, DomainError, Rat, format_rat
from .dims import c12, c21
from .walls import candidate_walls

_RELATIONS = {
    "==": operator.eq,
    "<": operator.lt,
    ">": operator.gt,
    "<=": operator.le,
    ">=": operator.ge,
}

_HYPOTHESIS_PREFIX = "hypothesis: "


@dataclass(frozen=True)
class Check:
    """One recorded relation ``lhs rel rhs`` and whether it held."""

    label: str
    lhs: Any
    rel: str
    rhs: Any
    ok: bool

    @property
    def is_hypothesis(self) -> bool:
        return self.label.startswith(_HYPOTHESIS_PREFIX)


def _cmp(label: str, lhs: Any, rel: str, rhs: Any) -> Check:
    return Check(label, lhs, rel, rhs, bool(_RELATIONS[rel](lhs, rhs)))


def _hyp(label: str, lhs: Any, rel: str, rhs: Any) -> Check:
    return _cmp(_HYPOTHESIS_PREFIX + label, lhs, rel, rhs)


def _json_value(v: Any) -> Any:
    if isinstance(v, Fraction):
        return format_rat(v)
    if isinstance(v, CSType):
        return f"{v.n},{v.d},{v.k}"
    if isinstance(v, int):
        return v
    return str(v)


@dataclass(frozen=True)
class Certificate:
    """Outcome of replaying one construction's arithmetic."""

    name: str
    params: Mapping[str, int]
    subtypes: tuple[CSType, ...]
    wall: Optional[Rat]
    checks: tuple[Check, ...]
    target: Optional[CSType] = field(default=None)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def hypotheses_ok(self) -> bool:
        return all(c.ok for c in self.checks if c.is_hypothesis)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": {key: _json_value(v) for key, v in self.params.items()},
            "subtypes": [_json_value(t) for t in self.subtypes],
            "wall": None if self.wall is None else format_rat(self.wall),
            "checks": [
                {
                    "label": c.label,
                    "lhs": _json_value(c.lhs),
                    "rel": c.rel,
                    "rhs": _json_value(c.rhs),
                    "ok": c.ok,
                }
                for c in self.checks
            ],
            "passed": self.passed,
        }


def _check_int(name: str, value: Any) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    return value


def dual_span_type(t: CSType) -> CSType:
    """Type (k−n, d, k) of the dual span of a generated system with k > n."""
    if t.k <= t.n:
        raise DomainError(f"dual span needs k > n, got k={t.k}, n={t.n}")
    return CSType(t.k - t.n, t.d, t.k)


def hyperelliptic_a(n: int, k: int) -> int:
    """The unique a ≥ 1 with n(1 + 1/a) ≥ k > n(1 + 1/(a+1)), for n < k ≤ 2n.

    Equivalently a = floor(n / (k−n)); the inequalities pin that value down.
    """
    _check_int("n", n)
    _check_int("k", k)
    if not n < k <= 2 * n:
        raise DomainError(f"selector needs n < k <= 2n, got n={n}, k={k}")
    return n // (k - n)


def certificate_hyp1(g: int, n: int) -> Certificate:
    """Direct construction for type (n, 2n, n+1) on a hyperelliptic curve.

    The proof is an explicit bundle with a chosen space of sections; there
    is nothing numerical to verify, so the certificate only records the
    type bookkeeping.
    """
    _check_int("g", g)
    _check_int("n", n)
    checks = [
        _hyp("genus at least 2", g, ">=", 2),
        _hyp("rank at least 1", n, ">=", 1),
    ]
    params = {"g": g, "n": n}
    if not all(c.ok for c in checks):
        return Certificate("hyp1", params, (), None, tuple(checks))
    target = CSType(n, 2 * n, n + 1)
    checks += [
        _cmp("degree is twice the rank", target.d, "==", 2 * target.n),
        _cmp("sections exceed rank by one", target.k, "==", target.n + 1),
    ]
    return Certificate("hyp1", params, (), None, tuple(checks), target=target)


def certificate_hyp2(g: int, n: int, r: int) -> Certificate:
    """Extension of (1,3,1) by (n−1, 2n−3, n+r−1) on a hyperelliptic curve,
    producing type (n, 2n, n+r) when 2 ≤ r ≤ (n−2)/g."""
    _check_int("g", g)
    _check_int("n", n)
    _check_int("r", r)
    params = {"g": g, "n": n, "r": r}
    checks = [
        _hyp("genus at least 2", g, ">=", 2),
        _hyp("r at least 2", r, ">=", 2),
        _hyp("section margin: r <= (n-2)/g", Fraction(r), "<=", Fraction(n - 2, g)),
    ]
    if not all(c.ok for c in checks):
        return Certificate("hyp2", params, (), None, tuple(checks))
    t1 = CSType(n - 1, 2 * n - 3, n + r - 1)
    t2 = CSType(1, 3, 1)
    target = CSType(n, 2 * n, n + r)
    wall = Fraction(n, r)
    count = c21(g, t1, t2)
    checks += [
        _cmp("subtypes sum to the target type", t1 + t2, "==", target),
        _cmp("extension count matches closed form 2n-2-r", count, "==", 2 * n - 2 - r),
        _cmp("extension count is positive", count, ">", 0),
        _cmp("hom-corrected ceiling is slack: (n-2)/g - r < C21", Fraction(n - 2, g) - r, "<", count),
        _cmp(
            "first subtype within its section ceiling",
            Fraction(t1.k),
            "<=",
            bound_kmax(g, t1.n, t1.d),
        ),
        Check(
            "critical value lies among the candidate walls of the target",
            wall,
            "in",
            f"candidate_walls({target})",
            wall in candidate_walls(target).walls,
        ),
    ]
    return Certificate("hyp2", params, (t1, t2), wall, tuple(checks), target=target)


def certificate_hyp3(g: int, r: int) -> Certificate:
    """Extension of (g−1, 2g−2, g) by (g(r−1)+2, 2g(r−1)+4, g(r−1)+r+1),
    producing type (gr+1, 2gr+2, gr+r+1) on a hyperelliptic curve.

    Alongside the extension count, every potential destabilizing subtype
    indexed by r₁′ ≤ (r−1)/2 must contribute positively; the hand-derived
    closed form is checked against the generic count.
    """
    _check_int("g", g)
    _check_int("r", r)
    params = {"g": g, "r": r}
    checks = [
        _hyp("genus at least 2", g, ">=", 2),
        _hyp("r at least 2", r, ">=", 2),
    ]
    if not all(c.ok for c in checks):
        return Certificate("hyp3", params, (), None, tuple(checks))
    t1 = CSType(g * (r - 1) + 2, 2 * g * (r - 1) + 4, g * (r - 1) + r + 1)
    t2 = CSType(g - 1, 2 * g - 2, g)
    target = CSType(g * r + 1, 2 * g * r + 2, g * r + r + 1)
    checks.append(_cmp("subtypes sum to the target type", t1 + t2, "==", target))
    count = c21(g, t1, t2)
    checks.append(_cmp("extension count equals 2", count, "==", 2))
    for r1p in range((r - 1) // 2 + 1):
        sub = CSType(r1p * g + 1, 2 * r1p * g + 2, r1p * (g + 1) + 1)
        quot = CSType(t1.n - sub.n, t1.d - sub.d, t1.k - sub.k)
        closed = (r - 1 - r1p) * (g - 1) * (r1p + 1) + 2 * r1p + 1
        checks += [
            _cmp(
                f"destabilizing count at r1'={r1p} matches closed form",
                c12(g, sub, quot),
                "==",
                closed,
            ),
            _cmp(f"destabilizing count at r1'={r1p} is positive", closed, ">", 0),
        ]
    return Certificate("hyp3", params, (t1, t2), None, tuple(checks), target=target)


def certificate_hyp4(g: int, r: int) -> Certificate:
    """Extension of (g−1, 2g−2, g) by (g(r−1)+1, 2g(r−1)+2, g(r−1)+r),
    producing type (gr, 2gr, gr+r) on a hyperelliptic curve."""
    _check_int("g", g)
    _check_int("r", r)
    params = {"g": g, "r": r}
    checks = [
        _hyp("genus at least 2", g, ">=", 2),
        _hyp("r at least 2", r, ">=", 2),
    ]
    if not all(c.ok for c in checks):
        return Certificate("hyp4", params, (), None, tuple(checks))
    t1 = CSType(g * (r - 1) + 1, 2 * g * (r - 1) + 2, g * (r - 1) + r)
    t2 = CSType(g - 1, 2 * g - 2, g)
    target = CSType(g * r, 2 * g * r, g * r + r)
    checks.append(_cmp("subtypes sum to the target type", t1 + t2, "==", target))
    count = c21(g, t1, t2)
    checks.append(_cmp("extension count equals 1", count, "==", 1))
    for r1p in range(r - 1):
        sub = CSType(r1p * g + 1, 2 * r1p * g + 2, r1p * (g + 1) + 1)
        quot = CSType(t1.n - sub.n, t1.d - sub.d, t1.k - sub.k)
        closed = (r - 1 - r1p) * (g - 1) * (r1p + 1)
        checks += [
            _cmp(
                f"destabilizing count at r1'={r1p} matches closed form",
                c12(g, sub, quot),
                "==",
                closed,
            ),
            _cmp(f"destabilizing count at r1'={r1p} is positive", closed, ">", 0),
        ]
    return Certificate("hyp4", params, (t1, t2), None, tuple(checks), target=target)


def example_d_gt_2n(g: int, r: int) -> Certificate:
    """Nonempty terminal moduli beyond degree 2n: type
    (rg−r+1, 2rg−2r+3, rg+1) on a non-hyperelliptic curve, with k strictly
    inside the large-α emptiness window (so the general bound genuinely
    fails to apply there)."""
    _check_int("g", g)
    _check_int("r", r)
    params = {"g": g, "r": r}
    checks = [
        _hyp("genus at least 3", g, ">=", 3),
        _hyp("r at least 3", r, ">=", 3),
        _hyp("extension classes available: r <= g-1", r, "<=", g - 1),
    ]
    if not all(c.ok for c in checks):
        return Certificate("ex7", params, (), None, tuple(checks))
    t = CSType(r * g - r + 1, 2 * r * g - 2 * r + 3, r * g + 1)
    window = nonss_window(g, t.n, t.d)
    assert window is not None  # nonempty exactly when n > g-1, and n = r(g-1)+1 here
    checks += [
        _cmp("degree exceeds twice the rank", t.d, ">", 2 * t.n),
        _cmp("window lower endpoint below k", window.lo, "<", t.k),
        _cmp("k below window upper endpoint", Fraction(t.k), "<", window.hi),
    ]
    return Certificate("ex7", params, (), None, tuple(checks), target=t)
