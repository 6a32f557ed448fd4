"""Acceptance suite: every release gate in one file, all checks exact.

Each test prints one ``ACCEPTANCE <id> <label>: PASS|FAIL`` line (visible
with ``pytest -s``) and fails loudly otherwise.  Randomized gates use a
fixed seed, so the whole suite is deterministic.
"""

import io
import json
import random
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path

from cohsys.classify import classify, exceptional_types, min_degree
from cohsys.cli import main
from cohsys.core import CSType, CurveClass
from cohsys.dims import beta, beta_additivity_residual, c12, c12_three_term, c21
from cohsys.walls import candidate_walls
from cohsys.witness import (
    certificate_hyp1,
    certificate_hyp2,
    certificate_hyp3,
    certificate_hyp4,
    dual_span_type,
    example_d_gt_2n,
)

SEED = 1932
SAMPLES = 10_000
GOLDEN = Path(__file__).parent / "golden"


def _report(ident, label, failures):
    status = "FAIL" if failures else "PASS"
    print(f"ACCEPTANCE {ident} {label}: {status}")
    assert not failures, f"{label}: first failures: {failures[:5]}"


def _random_type(rnd):
    return CSType(rnd.randint(1, 100), rnd.randint(-1000, 1000), rnd.randint(1, 100))


def test_01_additivity_identity():
    rnd = random.Random(SEED)
    failures = []
    for _ in range(SAMPLES):
        g = rnd.randint(2, 50)
        t1, t2 = _random_type(rnd), _random_type(rnd)
        if beta_additivity_residual(g, t1, t2) != 0:
            failures.append((g, tuple(t1), tuple(t2)))
    _report(1, "additivity-identity", failures)


def test_02_three_term_decomposition():
    rnd = random.Random(SEED + 1)
    failures = []
    for _ in range(SAMPLES):
        g = rnd.randint(2, 50)
        t1, t2 = _random_type(rnd), _random_type(rnd)
        if sum(c12_three_term(g, t1, t2)) != c12(g, t1, t2):
            failures.append((g, tuple(t1), tuple(t2)))
    _report(2, "three-term-decomposition", failures)


def test_03_closed_form_concordance():
    failures = []
    for g in range(2, 13):
        for n in range(3, 61):
            for r in range(2, 61):
                got = c21(g, CSType(n - 1, 2 * n - 3, n + r - 1), CSType(1, 3, 1))
                if got != 2 * n - 2 - r:
                    failures.append(("pair-with-line", g, n, r, got))
        canonical = CSType(g - 1, 2 * g - 2, g)
        r = 2
        while g * (r - 1) + 2 <= 60:
            t1 = CSType(g * (r - 1) + 2, 2 * g * (r - 1) + 4, g * (r - 1) + r + 1)
            if c21(g, t1, canonical) != 2:
                failures.append(("pair-with-canonical-2", g, r))
            r += 1
        r = 2
        while g * (r - 1) + 1 <= 60:
            t1 = CSType(g * (r - 1) + 1, 2 * g * (r - 1) + 2, g * (r - 1) + r)
            if c21(g, t1, canonical) != 1:
                failures.append(("pair-with-canonical-1", g, r))
            r += 1
    _report(3, "closed-form-concordance", failures)


def test_04_expected_dimension_boundary():
    failures = []
    for g in range(2, 51):
        if beta(g, CSType(g - 1, 2 * g - 2, g)) != 0:
            failures.append(("canonical-dual-span", g))
    for g in range(2, 21):
        for n in range(2, g - 1):
            if beta(g, CSType(n, 2 * n, n + 1)) >= 0:
                failures.append(("below-canonical-rank", g, n))
    _report(4, "expected-dimension-boundary", failures)


def test_05_wall_membership():
    failures = []
    if Fraction(10, 3) not in candidate_walls(CSType(10, 20, 13)).walls:
        failures.append((10, 20, 13))
    for r in (2, 3, 4, 5, 6):
        for n in (2 * r + 2, 2 * r + 3, 3 * r + 7):
            target = CSType(n, 2 * n, n + r)
            if Fraction(n, r) not in candidate_walls(target).walls:
                failures.append(tuple(target))
    _report(5, "wall-membership", failures)


def test_06_classification_grid_laws():
    failures = []
    for g in range(2, 11):
        for hyp in (False, True):
            if g == 2 and not hyp:
                continue
            c = CurveClass(g, hyp)
            tag_types = {tag.cstype for tag in exceptional_types(c)}
            for n in range(1, 31):
                for d in range(1, 2 * n + 1):
                    for k in range(1, 2 * n + 3):
                        t = CSType(n, d, k)
                        v = classify(c, t)
                        if v.u_nonempty and not v.us_nonempty:
                            failures.append(("chain-u-us", g, hyp, n, d, k))
                        if v.us_nonempty and not v.g_alpha_nonempty:
                            failures.append(("chain-us-g", g, hyp, n, d, k))
                        if v.b_nonempty != v.u_nonempty:
                            failures.append(("b-equals-u", g, hyp, n, d, k))
                        if d < 2 * n and g * (k - n) > d - n and v.g_alpha_nonempty:
                            failures.append(("ceiling", g, hyp, n, d, k))
                        if (
                            d == 2 * n
                            and g * (k - n) > n
                            and k * (g - 1) < n * g
                            and v.us_nonempty != (t in tag_types)
                        ):
                            failures.append(("exceptional-window", g, hyp, n, d, k))
                        if v.us_nonempty and k > n and d < min_degree(g, n, k):
                            failures.append(("degree-floor", g, hyp, n, d, k))
                        pencil = hyp and d == 2 * n and k == n + 1 and n < g - 1
                        expected_dim = None
                        if v.g_alpha_nonempty:
                            expected_dim = 0 if pencil else v.beta
                        if v.dim != expected_dim:
                            failures.append(("dimension", g, hyp, n, d, k))
    _report(6, "classification-grid-laws", failures)


def test_07_certificates():
    failures = []
    for g in range(2, 13):
        for n in range(1, 9):
            if not certificate_hyp1(g, n).passed:
                failures.append(("hyp1", g, n))
        for r in range(2, 9):
            n = g * r + 2
            cert = certificate_hyp2(g, n, r)
            if not (cert.hypotheses_ok and cert.passed):
                failures.append(("hyp2", g, n, r))
            if not certificate_hyp3(g, r).passed:
                failures.append(("hyp3", g, r))
            if not certificate_hyp4(g, r).passed:
                failures.append(("hyp4", g, r))
        for r in range(3, g):
            if not example_d_gt_2n(g, r).passed:
                failures.append(("ex7", g, r))
    spot = example_d_gt_2n(4, 3)
    lower = next(c for c in spot.checks if c.label == "window lower endpoint below k")
    upper = next(c for c in spot.checks if c.label == "k below window upper endpoint")
    if not (lower.lhs == Fraction(51, 4) and lower.rhs == 13 and lower.ok):
        failures.append(("ex7-window-lower", str(lower)))
    if not (upper.lhs == 13 and upper.rhs == Fraction(40, 3) and upper.ok):
        failures.append(("ex7-window-upper", str(upper)))
    _report(7, "certificates", failures)


def test_08_dual_span_involution():
    failures = []
    for n in range(1, 51):
        for k in range(n + 1, 101):
            for d in (-7, 0, 1, 13):
                t = CSType(n, d, k)
                if dual_span_type(dual_span_type(t)) != t:
                    failures.append(tuple(t))
    for g in range(2, 51):
        if dual_span_type(CSType(1, 2 * g - 2, g)) != CSType(g - 1, 2 * g - 2, g):
            failures.append(("canonical", g))
    _report(8, "dual-span-involution", failures)


def _run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_09_cli_determinism(tmp_path):
    failures = []
    scan_args = (
        "scan",
        "--genus-min", "2", "--genus-max", "3",
        "--rank-min", "1", "--rank-max", "5",
        "--output",
    )
    first, second = tmp_path / "one.csv", tmp_path / "two.csv"
    if _run_cli(*scan_args, str(first))[0] != 0:
        failures.append("scan-run-1")
    if _run_cli(*scan_args, str(second))[0] != 0:
        failures.append("scan-run-2")
    if first.read_bytes() != second.read_bytes():
        failures.append("scan-not-byte-identical")

    code, out = _run_cli("classify", "--genus", "3", "--type", "2,4,3")
    if code != 0 or out != (GOLDEN / "classify_g3_nonhyp_2_4_3.json").read_text():
        failures.append("golden-nonhyp-2-4-3")
    code, out = _run_cli("classify", "--genus", "3", "--hyperelliptic", "--type", "2,2,2")
    if code != 0 or out != (GOLDEN / "classify_g3_hyp_2_2_2.json").read_text():
        failures.append("golden-hyp-2-2-2")
    code, out = _run_cli("classify", "--genus", "2", "--type", "3,7,1")
    if code != 2 or out != "":
        failures.append("golden-out-of-range-exit")
    _report(9, "cli-determinism", failures)


def test_acceptance_sanity_golden_files_present():
    expected = {
        "classify_g3_nonhyp_2_4_3.json",
        "classify_g3_hyp_2_2_2.json",
        "classify_g2_oob.err",
        "walls_3_5_1.json",
    }
    assert expected <= {p.name for p in GOLDEN.iterdir()}
    doc = json.loads((GOLDEN / "classify_g3_nonhyp_2_4_3.json").read_text())
    assert doc["u_nonempty"] is True and doc["dim"] == 0
