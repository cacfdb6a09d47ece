"""Theorem-verification suites.

Each suite runs an invariant battery over (a) the deterministic family grids
and (b) seeded random Minkowski-centered bodies, and returns a VerifySummary;
failures are data, not exceptions.  Every failure carries enough replay
information (family parameters or raw vertices) to re-examine the single case
with the `compute` command.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import complete as comp
from . import families as fam
from . import geom, symm
from .gauges import circumradius, inradius, make_gauge, minkowski_asymmetry
from .sampling import RandomBody, random_bodies, random_symmetric_gauges

PHI = fam.PHI
SUITES = ("alpha-region", "crossings", "dw-pseudo", "dw-euclidean", "families", "all")

ALPHA_S_GRID = np.linspace(1.0, 2.0, 21)
ALPHA_T_GRID = np.linspace(0.0, 1.0, 21)
DW_S_GRID = np.linspace(1.05, 2.0, 21)
DW_L_GRID = np.linspace(0.0, 1.0, 11)


@dataclass(frozen=True)
class Failure:
    case: str
    quantity: str
    expected: str
    observed: str
    tolerance: float
    replay: str = ""

    def __str__(self):
        extra = f"  replay: {self.replay}" if self.replay else ""
        return (f"FAIL [{self.case}] {self.quantity}: expected {self.expected}, "
                f"observed {self.observed} (tol {self.tolerance:g}){extra}")


@dataclass
class VerifySummary:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, case: str, quantity: str, expected, observed,
              tolerance: float, replay: str = "") -> None:
        self.checks += 1
        if not condition:
            self.failures.append(Failure(case, quantity, str(expected),
                                         str(observed), tolerance, replay))

    def merge(self, other: "VerifySummary") -> None:
        self.checks += other.checks
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)

    def render(self) -> str:
        lines = [str(f) for f in self.failures]
        lines += [f"note: {n}" for n in self.notes]
        lines.append(f"suite {self.suite}: {self.checks} checks, "
                     f"{len(self.failures)} failures")
        return "\n".join(lines)


@dataclass(frozen=True)
class SampleRecord:
    """One evaluated body; crossings = -1 encodes overlap segments."""

    family: str
    params: str
    s: float
    alpha: float
    tau: float
    crossings: int


CSV_HEADER = "family,params,s,alpha,tau,crossings"


def record_csv_line(rec: SampleRecord) -> str:
    return (f"{rec.family},{rec.params},{rec.s!r},{rec.alpha!r},{rec.tau!r},"
            f"{rec.crossings}")


def crossing_number(cross: geom.CrossingSet) -> int:
    return -1 if cross.segments else len(cross.points)


def _replay(body: geom.ConvexPolygon) -> str:
    return json.dumps({"vertices": body.vertices.tolist()})


def _alpha_bound_hi(s: float) -> float:
    return 1.0 if s * s <= 1.0 + s else min(1.0, s / (s * s - 1.0))


def evaluate_body(label: str, params: str, body: geom.ConvexPolygon,
                  s: float) -> SampleRecord:
    a, t = symm.alpha_tau(body)
    return SampleRecord(family=label, params=params, s=s, alpha=a, tau=t,
                        crossings=crossing_number(symm.crossing_count(body)))


def grid_bodies() -> list[tuple[str, str, geom.ConvexPolygon, float]]:
    """The deterministic interpolation grid, Minkowski centered by construction."""
    out = []
    for s in ALPHA_S_GRID:
        for t in ALPHA_T_GRID:
            K = fam.interpolate(float(s), float(t))
            out.append(("interpolate", f"s={s:.4f};t={t:.4f}", K,
                        minkowski_asymmetry(K).s))
    return out


def sample_records(samples: int, seed: int) -> list[SampleRecord]:
    recs = [evaluate_body(b.label, "", b.body, b.s)
            for b in random_bodies(samples, seed)]
    recs += [evaluate_body(lbl, prm, K, s) for lbl, prm, K, s in grid_bodies()]
    return recs


# ---------------------------------------------------------------------------
# suites


def suite_alpha_region(samples: int, seed: int) -> VerifySummary:
    vs = VerifySummary("alpha-region")
    per_grid_s: dict[float, list] = {float(s): [] for s in ALPHA_S_GRID}

    cases = [(lbl, prm, K, s, "") for lbl, prm, K, s in grid_bodies()]
    cases += [(b.label, "", b.body, b.s, _replay(b.body))
              for b in random_bodies(samples, seed)]
    for lbl, prm, K, s, replay in cases:
        a = symm.alpha(K)
        lo, hi = 2.0 / (s + 1.0), _alpha_bound_hi(s)
        case = f"{lbl} {prm}".strip()
        vs.check(lo - 1e-7 <= a <= hi + 1e-7, case, "alpha region bound",
                 f"[{lo:.9f}, {hi:.9f}]", f"{a:.9f}", 1e-7, replay)
        vs.check(1.0 / s <= 2.0 / (s + 1.0) + 1e-12, case,
                 "1/s <= 2/(s+1)", "<=", f"{1/s:.12f} vs {2/(s+1):.12f}", 1e-12)
        if s > 1.0 + 1e-6:
            vs.check(2.0 / (s + 1.0) - 1.0 / s > 1e-9, case,
                     "strict gap 1/s < 2/(s+1)", "> 1e-9",
                     f"{2/(s+1) - 1/s:.3e}", 1e-9)
        if a >= 1.0 - 1e-7:
            vs.check(s <= PHI + 1e-6, case, "ratio 1 forces s <= phi",
                     f"<= {PHI + 1e-6}", f"{s:.9f}", 1e-6, replay)
        if lbl == "interpolate":
            s_target = float(prm.split(";")[0].split("=")[1])
            per_grid_s[min(per_grid_s, key=lambda g: abs(g - s_target))].append(a)

    for s, vals in per_grid_s.items():
        lo, hi = 2.0 / (s + 1.0), _alpha_bound_hi(s)
        inside = [v for v in vals if lo <= v <= hi]
        pts = np.sort(np.array([lo] + inside + [hi]))
        gap = float(np.max(np.diff(pts))) if len(pts) > 1 else 0.0
        vs.check(gap < 0.05, f"interpolate sweep s={s:.4f}",
                 "alpha coverage max gap", "< 0.05", f"{gap:.4f}", 0.05)
    return vs


def suite_crossings(samples: int, seed: int) -> VerifySummary:
    vs = VerifySummary("crossings")
    cases = [(lbl, prm, K, s, "") for lbl, prm, K, s in grid_bodies()]
    cases += [(b.label, "", b.body, b.s, _replay(b.body))
              for b in random_bodies(samples, seed)]
    for k in (5, 7, 9):
        K = fam.regular_kgon(k)
        cross = symm.crossing_count(K)
        vs.check(len(cross.points) == 2 * k and not cross.segments,
                 f"regular_kgon k={k}", "crossing count", f"{2*k}",
                 f"{len(cross.points)} (+{len(cross.segments)} segments)", 0)
    for lbl, prm, K, s, replay in cases:
        case = f"{lbl} {prm}".strip()
        cross = symm.crossing_count(K)
        if s >= PHI + 0.01:
            vs.check(len(cross.points) == 6 and not cross.segments, case,
                     "exactly 6 crossings above phi", "6 points, 0 segments",
                     f"{len(cross.points)} points, {len(cross.segments)} segments",
                     0, replay)
        if s >= 1.01:
            vs.check(cross.component_count >= 6, case,
                     "at least 6 crossing components", ">= 6",
                     f"{cross.component_count}", 0, replay)
    return vs


def suite_dw_pseudo(samples: int, seed: int) -> VerifySummary:
    vs = VerifySummary("dw-pseudo")
    max_dw = 0.0
    for s in DW_S_GRID:
        K = fam.k_max(float(s))
        for lam in DW_L_GRID:
            C = fam.c_lambda(K, float(lam))
            rep = comp.completeness_report(K, C, tol=1e-6)
            case = f"k_max s={s:.4f}, c_lambda lambda={lam:.2f}"
            vs.check(rep.pseudo_complete, case, "pseudo-complete",
                     "|r+R-D| <= 1e-6 D",
                     f"r={rep.r!r} R={rep.R!r} D={rep.D!r}", 1e-6)
            bound = min((s + 1.0) / 2.0, s * s / (s * s - 1.0))
            vs.check(rep.dw_ratio <= bound + 1e-6, case, "D/w asymmetry bound",
                     f"<= {bound:.9f}", f"{rep.dw_ratio:.9f}", 1e-6)
            vs.check(rep.dw_ratio <= 1.4197, case, "absolute D/w bound",
                     "<= 1.4197", f"{rep.dw_ratio:.9f}", 0)
            max_dw = max(max_dw, rep.dw_ratio)
    vs.check(abs(max_dw - (PHI + 1.0) / 2.0) <= 0.01, "dw grid",
             "max D/w near (phi+1)/2", f"{(PHI+1)/2:.6f} +- 0.01",
             f"{max_dw:.6f}", 0.01)

    gauges = random_symmetric_gauges(samples, seed)
    for i, b in enumerate(random_bodies(samples, seed)):
        C = gauges[i]
        r = inradius(b.body, C).scale
        R = circumradius(b.body, C).scale
        w, _ = comp.width(b.body, C)
        D, _ = comp.diameter(b.body, C)
        s = b.s
        chain = (w / 2.0 <= (s + 1.0) / 2.0 * r + 1e-7
                 <= (r + R) / 2.0 + 2e-7
                 <= (s + 1.0) / (2.0 * s) * R + 3e-7
                 <= D / 2.0 + 4e-7)
        vs.check(chain, b.label, "radii chain", "w/2 <= (s+1)r/2 <= (r+R)/2 "
                 "<= (s+1)R/(2s) <= D/2",
                 f"{w/2!r}, {(s+1)/2*r!r}, {(r+R)/2!r}, {(s+1)/(2*s)*R!r}, {D/2!r}",
                 1e-7, _replay(b.body))
        a, t = symm.alpha_tau(b.body)
        vs.check(t <= 2.0 * s / (s + 1.0) * a + 1e-7, b.label,
                 "tau <= 2s/(s+1) alpha",
                 f"<= {2*s/(s+1)*a:.9f}", f"{t:.9f}", 1e-7, _replay(b.body))
    return vs


def suite_dw_euclidean() -> VerifySummary:
    vs = VerifySummary("dw-euclidean")
    H, disk = fam.hood(4096)
    rep = comp.completeness_report(H, disk, tol=comp.TOL_ARC)
    r_const = fam.hood_radius()
    tol = 1e-3
    vs.check(abs(rep.r - r_const) <= tol, "hood", "inradius constant",
             f"{r_const:.6f}", f"{rep.r:.6f}", tol)
    vs.check(abs(rep.R - 1.0) <= tol, "hood", "circumradius", "1", f"{rep.R:.7f}", tol)
    vs.check(abs(rep.D - (rep.r + 1.0)) <= tol, "hood", "D = r + 1",
             f"{rep.r + 1:.6f}", f"{rep.D:.6f}", tol)
    vs.check(abs(rep.w - 2.0 * rep.r) <= tol, "hood", "w = 2r",
             f"{2*rep.r:.6f}", f"{rep.w:.6f}", tol)
    vs.check(rep.pseudo_complete, "hood", "pseudo-complete", "true",
             str(rep.pseudo_complete), tol)
    vs.check(not rep.constant_width, "hood", "constant width", "false",
             str(rep.constant_width), tol)
    vs.check(abs(rep.s - 1.0 / r_const) <= tol, "hood", "s = 1/r",
             f"{1/r_const:.6f}", f"{rep.s:.6f}", tol)
    vs.check(abs(rep.dw_ratio - (rep.s + 1.0) / 2.0) <= tol, "hood",
             "D/w = (s+1)/2", f"{(rep.s+1)/2:.6f}", f"{rep.dw_ratio:.6f}", tol)
    bound_at_hood = comp.euclidean_dw_bound(rep.D)
    vs.check(abs(bound_at_hood - rep.dw_ratio) <= tol, "hood",
             "hood attains the closed-form bound",
             f"{bound_at_hood:.6f}", f"{rep.dw_ratio:.6f}", tol)
    # the closed form's denominator decreases on [sqrt(3), D(hood)], i.e. the
    # bound increases toward the hood's ratio, where it is attained
    xs = np.linspace(comp.SQRT3, 1.0 + r_const, 100)
    denom = np.sqrt(4.0 - xs * xs) * np.cos(2.0 * np.arccos(xs / 2.0)
                                            - np.arcsin(xs - 1.0))
    vs.check(bool(np.all(np.diff(denom) < 0.0)), "euclidean bound",
             "denominator strictly decreasing on [sqrt3, D(hood)]",
             "decreasing", "not monotone" if not np.all(np.diff(denom) < 0) else "ok", 0)
    vals = np.array([comp.euclidean_dw_bound(float(x)) for x in xs])
    vs.check(bool(np.all(np.diff(vals) > 0.0)), "euclidean bound",
             "bound strictly increasing toward D(hood)", "increasing",
             "ok" if np.all(np.diff(vals) > 0) else "not monotone", 0)
    return vs


_GOLDEN = (
    ("alpha(triangle)", lambda: symm.alpha(fam.triangle()), 2.0 / 3.0),
    ("s(triangle)", lambda: minkowski_asymmetry(fam.triangle()).s, 2.0),
    ("s(golden_house)", lambda: minkowski_asymmetry(fam.golden_house()).s, PHI),
    ("alpha(golden_house)", lambda: symm.alpha(fam.golden_house()), 1.0),
    ("s(k_t(1))", lambda: minkowski_asymmetry(fam.k_t(1.0)).s, 1.5),
    ("s(regular_kgon(5))", lambda: minkowski_asymmetry(fam.regular_kgon(5)).s,
     1.0 / math.cos(math.pi / 5.0)),
    ("tilde_s", comp.tilde_s, 1.8392867552141612),
)


def suite_families() -> VerifySummary:
    vs = VerifySummary("families")
    for name, fn, expected in _GOLDEN:
        got = fn()
        vs.check(abs(got - expected) <= 1e-9, name, "golden value",
                 f"{expected!r}", f"{got!r}", 1e-9)
    ts = comp.tilde_s()
    vs.check(1.4196 <= (ts + 1.0) / 2.0 <= 1.4197, "tilde_s",
             "(tilde_s+1)/2 bracket", "[1.4196, 1.4197]", f"{(ts+1)/2:.6f}", 0)

    for s in (1.65, 1.7, 1.8393, 1.9, 2.0):
        km, kM = fam.k_min(s), fam.k_max(s)
        case = f"sandwich s={s}"
        vs.check(geom.contains(kM, km, 1e-9), case, "k_min inside k_max",
                 "true", str(geom.contains(kM, km, 1e-9)), 1e-9)
        target = s / (s * s - 1.0)
        for tag, val in (("alpha(k_min)", symm.alpha(km)),
                         ("alpha(k_max)", symm.alpha(kM)),
                         ("tau(k_max)", symm.tau(kM))):
            vs.check(abs(val - target) <= 1e-7, case, tag,
                     f"{target:.9f}", f"{val:.9f}", 1e-7)
        # the sandwich pair shares both symmetrizations
        tri_m, tri_M = symm.symmetrize(km), symm.symmetrize(kM)
        vs.check(geom.hausdorff_distance(tri_m.inner, tri_M.inner) <= 1e-9,
                 case, "shared intersection body", "0",
                 f"{geom.hausdorff_distance(tri_m.inner, tri_M.inner):.2e}", 1e-9)
        vs.check(geom.hausdorff_distance(tri_m.outer, tri_M.outer) <= 1e-9,
                 case, "shared hull body", "0",
                 f"{geom.hausdorff_distance(tri_m.outer, tri_M.outer):.2e}", 1e-9)

    S = fam.triangle()
    C = make_gauge(geom.intersect(S, geom.negate(S)), symmetric=True)
    for s in (1.2, 1.5, 2.0):
        K = fam.s_cap(s)
        case = f"s_cap s={s}"
        D, _ = comp.diameter(K, C)
        vs.check(abs(D - (s + 1.0)) <= 1e-9, case, "diameter s+1",
                 f"{s+1!r}", f"{D!r}", 1e-9)
        vs.check(comp.is_complete(K, C, 1e-6), case, "complete", "true",
                 str(comp.is_complete(K, C, 1e-6)), 1e-6)
        ratio = comp.dw_ratio(K, C)
        vs.check(abs(ratio - 1.0) <= 1e-6, case, "planar perfectness D/w",
                 "1", f"{ratio!r}", 1e-6)
        inner = geom.intersect(K, geom.negate(K))
        vs.check(geom.hausdorff_distance(inner, C.body) <= 1e-9, case,
                 "K*(-K) equals S*(-S)", "0",
                 f"{geom.hausdorff_distance(inner, C.body):.2e}", 1e-9)

    # closed-form resolution for the two-coefficient hull family
    matches = {"rho1/(2 rho2)": 0, "2 rho2/rho1": 0}
    total = 0
    for rho1 in np.linspace(1.05, 1.95, 5):
        lo = (rho1 * rho1 - rho1 + 1.0) / (rho1 + 1.0)
        hi = rho1 / 2.0
        for f in (0.15, 0.4, 0.6, 0.85):
            rho2 = lo + f * (hi - lo)
            K = fam.k_rho(float(rho1), float(rho2))
            a = symm.alpha(K)
            m1 = abs(a - rho1 / (2.0 * rho2)) <= 1e-7
            m2 = abs(a - 2.0 * rho2 / rho1) <= 1e-7
            total += 1
            case = f"k_rho rho1={rho1:.4f} rho2={rho2:.4f}"
            vs.check(m1 != m2, case, "exactly one closed form matches",
                     "one of rho1/(2 rho2), 2 rho2/rho1",
                     f"alpha={a!r} m1={m1} m2={m2}", 1e-7)
            matches["rho1/(2 rho2)"] += m1
            matches["2 rho2/rho1"] += m2
    winner = [form for form, count in matches.items() if count == total]
    if winner:
        other = next(f for f in matches if f != winner[0])
        vs.notes.append(
            f"k_rho covering ratio matches the closed form {winner[0]} at all "
            f"{total} sampled domain points; {other} matches {matches[other]}")
    vs.check(len(winner) == 1, "k_rho family",
             "a single closed form matches everywhere",
             f"one form at {total}/{total} points", str(matches), 1e-7)

    for label, K, target in (
            [("triangle", fam.triangle(), 2.0),
             ("golden_house", fam.golden_house(), PHI),
             ("regular_kgon(7)", fam.regular_kgon(7), 1.0 / math.cos(math.pi / 7.0))]
            + [("k_t", fam.k_t(float(t)), fam.k_t_asymmetry(float(t)))
               for t in (0.0, 0.5, 1.0, 1.5)]
            + [("s_cap", fam.s_cap(float(s)), float(s)) for s in (1.2, 1.5, 2.0)]
            + [("k_max", fam.k_max(float(s)), float(s)) for s in DW_S_GRID]
            + [("k_min", fam.k_min(float(s)), float(s)) for s in (1.65, 1.9, 2.0)]
            + [("interpolate", fam.interpolate(s, t), s)
               for s, t in ((1.3, 0.3), (1.8, 0.7), (1.95, 1.0))]):
        res = minkowski_asymmetry(K)
        vs.check(abs(res.s - target) <= 1e-6, f"{label} target s={target:.4f}",
                 "recomputed asymmetry", f"{target:.9f}", f"{res.s:.9f}", 1e-6)
        vs.check(float(np.hypot(*res.center)) <= 1e-6, f"{label} target s={target:.4f}",
                 "Minkowski centered", "|center| <= 1e-6",
                 f"{float(np.hypot(*res.center)):.2e}", 1e-6)
    return vs


def run_suite(name: str, samples: int = 100, seed: int = 0) -> VerifySummary:
    if name == "alpha-region":
        return suite_alpha_region(samples, seed)
    if name == "crossings":
        return suite_crossings(samples, seed)
    if name == "dw-pseudo":
        return suite_dw_pseudo(samples, seed)
    if name == "dw-euclidean":
        return suite_dw_euclidean()
    if name == "families":
        return suite_families()
    if name == "all":
        total = VerifySummary("all")
        total.merge(suite_alpha_region(samples, seed))
        total.merge(suite_crossings(samples, seed))
        total.merge(suite_dw_pseudo(samples, seed))
        total.merge(suite_dw_euclidean())
        total.merge(suite_families())
        return total
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
