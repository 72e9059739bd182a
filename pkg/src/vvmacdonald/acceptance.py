"""The ten acceptance checks, runnable as ``python3 -m vvmacdonald.acceptance``.

Every check is exact; each returns ``(passed, detail)``.
"""
from __future__ import annotations

import csv
import io
import sys
import time
from fractions import Fraction

from .bilinear_form import (
    BOUNDARY,
    INSIDE,
    Form,
    norm,
    norm_partition_scalar,
    norm_partition_vv,
    positivity_classify,
    region_boundary_csv,
)
from .combinatorics import all_compositions_upto, max_hook, partitions, shapes
from .hecke import hecke_module
from .polyops import apply_w, apply_wstar
from .qt_field import eval_point
from .singular import certify, generic_nonsingular, norm_vanishes
from .tableaux import extremal_tableaux, parse_tableau
from .verify import (
    bf2,
    eigenfunctions,
    fdxg,
    hecke_relations,
    jucys_murphy,
    norm_recursions,
    operator_relations,
)


def _all_shapes(max_n):
    return [s for n in range(1, max_n + 1) for s in shapes(n)]


def _collect(results):
    bad = [f"{r.name}{tau}: {r.failures[0]}" for tau, r in results if not r.ok]
    n = sum(r.checked for _, r in results)
    return not bad, (f"{n} checks" if not bad else "; ".join(bad[:3]))


def criterion_1():
    """Hecke relations and dimensions, every shape with N <= 5."""
    return _collect([(s, hecke_relations(s)) for s in _all_shapes(5)])


def criterion_2():
    """Jucys-Murphy elements, N <= 5, and the (4,3) content vector."""
    ok, detail = _collect([(s, jucys_murphy(s)) for s in _all_shapes(5)])
    cv = parse_tableau("4,3,1|7,6,5,2").contents
    if cv != (1, 3, 0, -1, 2, 1, 0):
        return False, f"(4,3) content vector {list(cv)}"
    return ok, detail + "; (4,3) contents [1,3,0,-1,2,1,0]"


def criterion_3():
    """Operator relations on P_n (x) V, N <= 4, n <= 3, h <= 4."""
    return _collect([(s, operator_relations(s, 3)) for s in _all_shapes(4) if max_hook(s) <= 4])


def criterion_4():
    """Eigen equations, leading terms and the eigen-solve oracle, N <= 3, |alpha| <= 3."""
    return _collect([(s, eigenfunctions(s, 3, oracle=True)) for s in _all_shapes(3)])


def criterion_5():
    """Norm recursions for N <= 3, |alpha| <= 3; scalar formula vs shape (N)."""
    ok, detail = _collect([(s, norm_recursions(s, 3)) for s in _all_shapes(3)])
    count = 0
    for N in (1, 2, 3):
        S0 = extremal_tableaux((N,))[0]
        for n in range(4):
            for lam in partitions(n, N):
                count += 1
                if norm_partition_scalar(lam) != norm_partition_vv(lam, S0):
                    return False, f"scalar formula differs at {lam}"
    return ok, detail + f"; scalar agreement on {count} partitions"


def criterion_6():
    """Gram identities on degrees <= 2, N <= 3."""
    return _collect([(s, bf2(s, 2)) for s in _all_shapes(3)])


def criterion_7():
    """Reduction identities on degree 1 for shapes (2), (1,1), (2,1)."""
    return _collect([(s, fdxg(s, 1)) for s in ((2,), (1, 1), (2, 1))])


def inside_samples(h: int, count: int = 24):
    """Exact rational points strictly inside the region for max hook h."""
    pts = []
    for t0 in (Fraction(3, 2), Fraction(2), Fraction(5, 4), Fraction(2, 3), Fraction(1, 2), Fraction(4, 5)):
        lo, hi = sorted((t0 ** h, t0 ** -h))
        pts += [(lo / 2, t0), (lo / 7, t0), (hi * 2, t0), (hi * 3 + 1, t0)]
    return pts[:count]


def criterion_8():
    """Positivity region for (2,1), boundary marks, scalar N = 4 grid and CSV slopes."""
    tau = (2, 1)
    h = max_hook(tau)
    H = hecke_module(tau)
    pts = inside_samples(h)
    for q0, t0 in pts:
        if positivity_classify(q0, t0, tau) != INSIDE:
            return False, f"({q0},{t0}) not classified inside"
        for a in all_compositions_upto(3, 3):
            for S in H.tableaux:
                if eval_point(norm(a, S), q0, t0) <= 0:
                    return False, f"norm of ({a},{S}) <= 0 at ({q0},{t0})"
    for t0 in (Fraction(3, 2), Fraction(1, 3), Fraction(7, 5)):
        for e in (h, -h):
            if positivity_classify(t0 ** e, t0, tau) != BOUNDARY:
                return False, f"q=t^{e} at t={t0} not boundary"
    grid = [Fraction(k, 4) for k in range(1, 13)]
    for t0 in grid:
        for q0 in grid:
            if q0 == 1:
                continue
            want = q0 < min(1, t0 ** -4) or q0 > max(1, t0 ** -4)
            got = positivity_classify(q0, t0, (4,)) == INSIDE
            if want != got:
                return False, f"scalar N=4 mismatch at ({q0},{t0})"
    slopes = set()
    for row in csv.DictReader(io.StringIO(region_boundary_csv(4))):
        lq, lt = float(row["log10_q"]), float(row["log10_t"])
        if row["curve_id"] != "q=1" and lq != 0:
            slopes.add((row["curve_id"], round(lt / lq, 9)))
    if slopes != {("q=t^4", 0.25), ("q=t^-4", -0.25)}:
        return False, f"CSV slopes {sorted(slopes)}"
    return True, f"{len(pts)} inside points, boundary exact, grid {len(grid)}^2, slopes +-1/4"


def criterion_9():
    """Singular certificates for (2,1), (2,2); generic non-annihilation; norm zeros."""
    out = []
    for tau in ((2, 1), (2, 2)):
        for fam in ("S1", "S0"):
            c = certify(tau, fam)
            if not c.valid:
                return False, f"{tau} {fam} invalid: {c.to_json()}"
            if not generic_nonsingular(tau, fam):
                return False, f"{tau} {fam} annihilated at generic (q,t)"
            if not norm_vanishes(tau, fam):
                return False, f"{tau} {fam} norm does not vanish at q=t^{c.exponent}"
            out.append(f"{tau}{fam}:q=t^{c.exponent}")
    return True, ", ".join(out)


def criterion_10():
    """<M_(1,0,0,0), M_(0,1,0,0) w w*> is nonzero (scalar, N = 4)."""
    F = Form(4, (4,))
    a = F.builder.build((1, 0, 0, 0)).M
    b = F.builder.build((0, 1, 0, 0)).M
    v = F.form_eval(a, apply_wstar(apply_w(b)))
    return (not v.is_zero()), f"value {v}"


CRITERIA = [
    (1, "representation", criterion_1),
    (2, "jucys-murphy", criterion_2),
    (3, "operators", criterion_3),
    (4, "eigenfunctions/oracle", criterion_4),
    (5, "norm formulas", criterion_5),
    (6, "adjointness", criterion_6),
    (7, "reduction identities", criterion_7),
    (8, "positivity", criterion_8),
    (9, "singular polynomials", criterion_9),
    (10, "negative test", criterion_10),
]


def run(k: int):
    """(passed, detail, seconds) for criterion ``k``."""
    _, _, fn = CRITERIA[k - 1]
    t0 = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t0


def format_line(k: int, ok: bool, detail: str, secs: float) -> str:
    name = CRITERIA[k - 1][1]
    return f"criterion {k:2d} [{name}]: {'PASS' if ok else 'FAIL'} ({secs:.1f}s) {detail}"


def main() -> int:
    failed = 0
    for k, _, _ in CRITERIA:
        ok, detail, secs = run(k)
        failed += not ok
        print(format_line(k, ok, detail, secs), flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
