"""Deterministic replay of every worked value and acceptance check.

Output contains no timings or paths, so it is byte-identical across runs
and across thread counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import knots
from .branched_cover import (
    MoebiusVerdict,
    determinant,
    linking_form,
    moebius_obstruction,
    nonorientable_genus_upper_bound,
)
from .knots import connected_sum, mirror, multiple, resolve_knot, reverse
from .linalg import certified_signature
from .obstruction import (
    F_bound_sweep,
    certify_nonslice,
    lambda_sweep,
    search_seed_knot,
    signature_window,
    signature_window_mirrored,
)
from .oracles import OracleUndecided, float_lt_signature, interval_signature, random_cyclotomic_hermitian
from .parallel import parallel_map
from .signatures import all_roots, cobordism_genus_lower_bound, lt_signature
from .surgery import boundary_presentation, framing_constraint, h1_of_presentation

CANDIDATE_SPEC = "sum:12*t2k:5:r+18*t2k:3:l"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


@dataclass(frozen=True)
class Context:
    seed: int = 0
    threads: int = 1
    lambdas: tuple[int, ...] = tuple(range(-3, 4))


# --- individual checks -------------------------------------------------------

def check_sign_convention(ctx):
    v = lt_signature(resolve_knot("trefoil_r"), (2, 1))
    return (v.sigma, v.eta) == (-2, 0), f"sigma(trefoil_r, -1) = {v.sigma}, eta = {v.eta} (expect -2, 0)"


def check_framing(ctx):
    f = framing_constraint(5, 1)
    return f == -10, f"f(w=5, lambda=1) = {f} (expect -10)"


def check_correction_bound(ctx):
    s = F_bound_sweep(range(-10, 11), range(-20, 21), range(2, 41), ctx.threads)
    return s.violations == 0, (f"{s.points} grid points over {s.cells} (a, f, d) cells, "
                               f"{s.violations} violations, smallest margin {s.min_margin} at (a, f, d) = {s.min_margin_at}")


def check_boundary_homology(ctx):
    bad = []
    for w in range(1, 51):
        for lam in range(-5, 6):
            G = h1_of_presentation(boundary_presentation(w, framing_constraint(w, lam)))
            want = () if w == 1 else (w, w)
            if G.factors != want or G.generator_order("mu_K") != w or G.generator_order("H") != w:
                bad.append((w, lam))
    G = h1_of_presentation(boundary_presentation(5, -10))
    return not bad and G.factors == (5, 5), f"550 presentations, H_1 = (Z/w)^2 with mu_K, H of order w; failures {bad}"


def check_determinant_10_124(ctx):
    dets = [determinant(knots.knot_10_124(h)) for h in "rl"]
    return dets == [1, 1], f"det(10_124 r/l) = {dets}"


def check_moebius(ctx):
    fig8 = resolve_knot("fig8")
    v1 = moebius_obstruction(fig8)
    s = connected_sum(fig8, resolve_knot("10_124_r"))
    v2 = moebius_obstruction(s)
    n2 = linking_form(s).order
    s3 = connected_sum(fig8, multiple(resolve_knot("10_124_l"), 3))
    v3 = moebius_obstruction(s3)
    v4 = moebius_obstruction(resolve_knot("trefoil_r"))
    ok = (v1 is MoebiusVerdict.OBSTRUCTED and v2 is MoebiusVerdict.OBSTRUCTED and n2 == 5
          and v3 is MoebiusVerdict.OBSTRUCTED and v4 is MoebiusVerdict.NOT_OBSTRUCTED)
    return ok, f"fig8: {v1}; fig8 # 10_124_r: {v2} (n = {n2}); fig8 # 3*10_124_l: {v3}; trefoil_r: {v4}"


def check_nonorientable_bound(ctx):
    vals = [nonorientable_genus_upper_bound(w) for w in (1, 5, -7)]
    return vals == [0, 2, 3], f"bounds for w = 1, 5, -7: {vals}"


def check_genus_bound(ctx):
    four = multiple(resolve_knot("trefoil_r"), 4)
    b = cobordism_genus_lower_bound(four, knots.unknot(), [(2, 1)])
    t = resolve_knot("trefoil_r")
    Ji = [connected_sum(multiple(t, i), reverse(multiple(t, i))) for i in (1, 2, 3)]
    b2 = cobordism_genus_lower_bound(Ji[0], Ji[2], [(2, 1)])
    return b == 4 and b2 >= 4, f"4 trefoils vs unknot: {b}; J_1 # rJ_1 vs J_3 # rJ_3: {b2}"


def check_search_w5(ctx):
    r = search_seed_knot(5, 40, ctx.lambdas)
    if r is None:
        return False, "no witness with <= 40 summands"
    c = r.certificate
    ok = (c.d == 5 and c.zeta1.primitive and c.zeta2.primitive and c.zeta1 != c.zeta2
          and c.sigma1 > 10 and c.sigma2 < -10 and c.verify())
    return ok, (f"witness {r.seed.spec}: d = {c.d}, sigma{c.zeta1} = {c.sigma1}, "
                f"sigma{c.zeta2} = {c.sigma2}")


def check_candidate_w5(ctx):
    J = resolve_knot(CANDIDATE_SPEC)
    rows = J.A.to_rows()
    oracle = [float_lt_signature(rows, 5, p) for p in (1, 2)]
    exact = [(v.sigma, v.eta) for v in (lt_signature(J, (5, p), split=False) for p in (1, 2))]
    c = certify_nonslice(5, J, ctx.lambdas)
    got = None if c is None else (str(c.zeta1), c.sigma1, str(c.zeta2), c.sigma2)
    ok = (oracle == exact == [(12, 0), (-12, 0)] and c is not None and c.verify()
          and got == ("(5,1)", 12, "(5,2)", -12))
    return ok, f"{CANDIDATE_SPEC}: float oracle {oracle}, exact {exact}, certificate {got}"


def check_lambda_sweep(ctx):
    c = certify_nonslice(5, resolve_knot(CANDIDATE_SPEC))
    rows = lambda_sweep(5, range(-50, 51), c.d, [(c.zeta1.p, c.sigma1), (c.zeta2.p, c.sigma2)])
    ok = all(r.coprime_contradiction and r.mirrored_contradiction and r.contradiction for r in rows)
    ok = ok and all(rt.F_within_bounds for r in rows for rt in r.roots)
    return ok, f"{len(rows)} framings f = -10*lambda, contradiction in both branches: {ok}"


def check_winding_one(ctx):
    cat = knots.catalog()
    empty = all(certify_nonslice(1, J) is None for J in cat.values())
    windows = all(
        signature_window(1, framing_constraint(1, lam), 0).closure_contains_unit_interval()
        and signature_window_mirrored(1, framing_constraint(1, lam), 0).closure_contains_unit_interval()
        for lam in range(-50, 51)
    )
    return empty and windows, f"{len(cat)} catalog knots give no certificate at w = 1; all w = 1 windows reach [-1, 1]: {windows}"


def check_winding_three(ctx):
    cat = knots.catalog()
    empty = all(certify_nonslice(3, J) is None for J in cat.values())
    found = search_seed_knot(3, 40, divisors=[3])
    return empty and found is None, f"w = 3: catalog certificates none = {empty}; family search (d = 3) finds {found}"


def _props_for_knot(name: str) -> list[str]:
    J = knots.catalog()[name]
    M, R = mirror(J), reverse(J)
    bad = []
    for z in all_roots(24):
        s = lt_signature(J, z)
        if name == "unknot" and (s.sigma, s.eta) != (0, 0):
            bad.append(f"unknot {z}")
        if lt_signature(M, z, split=False).sigma != -s.sigma:
            bad.append(f"mirror {name} {z}")
        if lt_signature(R, z, split=False).sigma != s.sigma:
            bad.append(f"reverse {name} {z}")
        if lt_signature(J, z.conjugate()).sigma != s.sigma:
            bad.append(f"conjugate {name} {z}")
        if abs(s.sigma) + s.eta > J.size:
            bad.append(f"bound {name} {z}")
    return bad


def _additivity_for_pair(pair: tuple[str, str]) -> list[str]:
    cat = knots.catalog()
    J1, J2 = cat[pair[0]], cat[pair[1]]
    S = connected_sum(J1, J2)
    bad = []
    for z in all_roots(24):
        if not z.primitive:
            continue
        if lt_signature(S, z, split=False).sigma != lt_signature(J1, z).sigma + lt_signature(J2, z).sigma:
            bad.append(f"additivity {pair} {z}")
    return bad


def signature_property_jobs() -> tuple[list[str], list[tuple[str, str]]]:
    names = list(knots.catalog())
    nontrivial = [n for n in names if n != "unknot"]
    pairs = [(a, b) for i, a in enumerate(nontrivial) for b in nontrivial[i:]]
    return names, pairs


def check_signature_properties(ctx):
    names, pairs = signature_property_jobs()
    bad = [b for r in parallel_map(_props_for_knot, names, ctx.threads) for b in r]
    bad += [b for r in parallel_map(_additivity_for_pair, pairs, ctx.threads) for b in r]
    roots = len(all_roots(24))
    return not bad, (f"{len(names)} catalog knots x {roots} roots (d <= 24): unknot, mirror, reverse, "
                     f"conjugation, |sigma| + eta <= 2g; additivity on {len(pairs)} pairs; failures {bad[:5]}")


def _cross_check_chunk(args) -> tuple[int, int, list[str]]:
    seed, start, count = args
    rng = random.Random(seed)
    # advance deterministically to this chunk
    mats = [random_cyclotomic_hermitian(rng) for _ in range(start + count)][start:]
    agree = undecided = 0
    bad = []
    for k, H in enumerate(mats):
        exact = certified_signature(H)
        try:
            num = interval_signature(H.to_complex(70))
        except OracleUndecided:
            undecided += 1
            continue
        if exact == num:
            agree += 1
        else:
            bad.append(f"#{start + k}: exact {exact} vs interval {num}")
    return agree, undecided, bad


def check_cross_exact_interval(ctx):
    n = 200
    chunks = [(ctx.seed, s, 50) for s in range(0, n, 50)]
    results = parallel_map(_cross_check_chunk, chunks, ctx.threads)
    agree = sum(r[0] for r in results)
    undecided = sum(r[1] for r in results)
    bad = [b for r in results for b in r[2]]
    return agree == n, f"{agree}/{n} agree (seed {ctx.seed}), {undecided} undecided; mismatches {bad[:3]}"


CHECKS: list[tuple[str, Callable]] = [
    ("sign convention (trefoil_r at -1)", check_sign_convention),
    ("framing relationship f = -2 w lambda", check_framing),
    ("[criterion 1] correction-term bound, exhaustive", check_correction_bound),
    ("[criterion 2] boundary homology (Z/w)^2", check_boundary_homology),
    ("determinant of 10_124", check_determinant_10_124),
    ("[criterion 3] Moebius-band obstruction", check_moebius),
    ("nonorientable genus upper bound", check_nonorientable_bound),
    ("cobordism genus lower bound", check_genus_bound),
    ("[criterion 4] seed search at w = 5", check_search_w5),
    ("[criterion 4] derived candidate at w = 5", check_candidate_w5),
    ("framing sweep lambda in [-50, 50]", check_lambda_sweep),
    ("[criterion 5] winding number 1", check_winding_one),
    ("[criterion 5] winding number 3", check_winding_three),
    ("[criterion 6] signature engine properties", check_signature_properties),
    ("[criterion 7] exact vs interval cross-check", check_cross_exact_interval),
]


def run_checks(ctx: Context) -> list[CheckResult]:
    out = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn(ctx)
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"error: {type(exc).__name__}: {exc}"
        out.append(CheckResult(name, bool(ok), detail))
    return out


def render(results: list[CheckResult], version: str, ctx: Context) -> str:
    lines = [f"cgslice {version} reproduce (seed {ctx.seed}, lambdas {ctx.lambdas[0]}..{ctx.lambdas[-1]})"]
    lines += [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
