"""Named reproduction cases, verification suites and JSON/CSV serialisation."""

from dataclasses import dataclass
from functools import lru_cache
import csv
import io
import json
import math
import time

import numpy as np
from scipy.optimize import minimize_scalar

from . import __version__, linalg
from .braiding import (DS3_OTHER_PAIRING, FIB_WORD_25, apply_word, braid_generators,
                       ds3_permutation_scan, orbit_states, verify_braid_relations)
from .gates import (DS3_REFERENCE_ANGLES, ds3_family_value, optimize_ds3_family,
                    su2_2_bell_pair, su2_2_cp, su2_2_cp_route, su2_2_local_rotation_route,
                    su2_2_phi0_prime)
from .models import get_model
from .observables import (a_minus_closed_form, a_plus_closed_form, build_I3, build_W,
                          lhv_bound_oracle, r_state, su2k_max_violation, w_curve)
from .sector import build_sector_basis, phi0_state, phi_power_multiplicities, sector_dimension
from .spin import oracle_equivalence_report

SQRT7 = math.sqrt(7)
TSIRELSON = 2 * math.sqrt(2)
SU2K_LEVELS = (2, 3, 5, 10, 100)

# Reference values and tolerances, one row per reproduction case:
# id -> (model, description, reference, tolerance)
REFERENCES = {
    "su2-max-w": ("su2", "largest eigenvalue of W, +-sqrt7 ~ +-2.6458", SQRT7, 1e-9),
    "su2-r-aplus": ("su2", "<r(a+)|W|r(a+)> = +sqrt7", SQRT7, 1e-9),
    "su2-r-aminus": ("su2", "<r(a-)|W|r(a-)> = -sqrt7", -SQRT7, 1e-9),
    **{f"su2k{k}-max-w": (f"su2k:{k}", "largest eigenvalue of W vs the level-k closed form",
                          su2k_max_violation(k), 1e-9) for k in SU2K_LEVELS},
    **{f"su2k{k}-aplus": (f"su2k:{k}", "closed-form a+ vs argmax of the sampled r(a) curve",
                          a_plus_closed_form(k), 1e-4) for k in SU2K_LEVELS},
    "fib-max-w": ("fib", "largest eigenvalue of W, 2 sqrt(-7 + 4 sqrt5) ~ 2.7887",
                  2 * math.sqrt(-7 + 4 * math.sqrt(5)), 1e-9),
    "fib-equals-k3": ("fib", "Fibonacci maximum minus the k = 3 closed form", 0.0, 1e-9),
    "fib-word25": ("fib", "<W> after (b3 b4' b1' b3' b2') x5 on |phi0>", 2.5310, 5e-4),
    "su2_2-cp-offdiag": ("su2k:2", "largest off-diagonal entry of CP", 0.0, 1e-10),
    "su2_2-cp-route": ("su2k:2", "<W> for -CP B3 B4 D B2 B3 |phi0>", -TSIRELSON, 1e-9),
    "su2_2-phi0-prime": ("su2k:2", "|<bell pair|b2' b3' b5 b4 b3 b2 phi0>|", 1.0, 1e-9),
    "su2_2-local-rotation": ("su2k:2", "<W> after the three-phase-gate rotation",
                             TSIRELSON, 1e-9),
    "su2_2-orbit-max": ("su2k:2", "max |<W>| over the braid orbit of |phi0>", 2.0, 1e-9),
    "ds3-min-i3": ("ds3", "smallest eigenvalue of I3", -2.5216, 5e-4),
    "ds3-scan-max": ("ds3", "max |<I3>| over the 720 permutation words", 2.0, 1e-9),
    "ds3-scan-nonconstant": ("ds3", "1 if <I3> varies across permutations", 1.0, 0.0),
    "ds3-other-pairing": ("ds3", "1 if B3 B4 B2 B1 |phi0> lies in the braid orbit", 1.0, 0.0),
    "ds3-phase-family": ("ds3", "<I3> of the phase family at the reference angles",
                         2.0512, 5e-4),
    "ds3-optimizer": ("ds3", "best |<I3>| over the phase family, 50 restarts", 2.0512, 1e-3),
    "lhv-w-max": ("-", "W maximum over 16 deterministic strategies", 2.0, 0.0),
    "lhv-w-min": ("-", "W minimum over 16 deterministic strategies", -2.0, 0.0),
    "lhv-i3-max": ("-", "I3 maximum over 81 deterministic strategies", 2.0, 0.0),
    "spin-spectrum": ("su2", "six-spin W on S_tot = 0 vs abstract W, spectrum residual",
                      0.0, 1e-8),
    "spin-entrywise": ("su2", "six-spin W vs abstract W through the fusion-tree isometry",
                       0.0, 1e-9),
    "spin-max-w": ("su2", "largest eigenvalue of the six-spin W", SQRT7, 1e-9),
}


@dataclass
class ReproductionCase:
    id: str
    model: str
    description: str
    computed: float
    reference: float
    tolerance: float
    runtime_ms: int

    @property
    def passed(self):
        return bool(abs(self.computed - self.reference) <= self.tolerance)


@dataclass
class RunReport:
    seed: int
    cases: list
    notes: list
    extra: dict | None = None
    version: str = __version__

    @property
    def passed(self):
        return all(c.passed for c in self.cases)


def _sig(x):
    return float(f"{x:.12g}")


def to_json(report, timing=True):
    body = {
        "version": report.version,
        "seed": report.seed,
        "cases": [
            {"id": c.id, "model": c.model, "computed": _sig(c.computed),
             "reference": _sig(c.reference), "tolerance": _sig(c.tolerance),
             "passed": c.passed, "runtime_ms": c.runtime_ms if timing else 0}
            for c in sorted(report.cases, key=lambda c: c.id)
        ],
        "passed": report.passed,
    }
    if report.notes:
        body["notes"] = list(report.notes)
    if report.extra:
        body.update(report.extra)
    return json.dumps(body, indent=2, sort_keys=False)


# ---- case implementations -----------------------------------------------------

@lru_cache(maxsize=None)
def _witness(model_id):
    model = get_model(model_id)
    return build_I3(model) if model_id == "ds3" else build_W(model)


def refined_argmax(model_id, samples=2001):
    """Argmax of a -> <r(a)|W|r(a)>: grid search, then bounded refinement."""
    model = get_model(model_id)
    grid = np.linspace(-1, 1, samples)
    vals = w_curve(model, grid)
    i = int(np.argmax(vals))
    w = _witness(model_id).matrix
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, samples - 1)]
    res = minimize_scalar(lambda a: -linalg.expectation(w, r_state(model, a)),
                          bounds=(lo, hi), method="bounded", options={"xatol": 1e-12})
    return float(res.x)


def _max_eig(model_id):
    return _witness(model_id).max_eigenvalue


@lru_cache(maxsize=None)
def _ds3_scan():
    model = get_model("ds3")
    return ds3_permutation_scan(braid_generators(model), _witness("ds3"))


@lru_cache(maxsize=None)
def _ds3_orbit():
    model = get_model("ds3")
    return orbit_states(braid_generators(model), phi0_state(model), max_states=10**4)


def _su2_2_orbit_max():
    model = get_model("su2k:2")
    orbit = orbit_states(braid_generators(model), phi0_state(model))
    w = _witness("su2k:2")
    return max(abs(w.expectation(s)) for s in orbit.states)


def _fib_word():
    model = get_model("fib")
    v = apply_word(braid_generators(model), FIB_WORD_25, phi0_state(model))
    return _witness("fib").expectation(v)


def _cp_offdiag():
    cp = su2_2_cp()
    return linalg.max_abs(cp - np.diag(np.diag(cp)))


def _other_pairing():
    model = get_model("ds3")
    v = apply_word(braid_generators(model), DS3_OTHER_PAIRING, phi0_state(model))
    return 1.0 if _ds3_orbit().contains(v) else 0.0


@lru_cache(maxsize=None)
def _spin_report():
    return oracle_equivalence_report()


def _case_functions(seed):
    fns = {
        "su2-max-w": lambda: _max_eig("su2"),
        "su2-r-aplus": lambda: _witness("su2").expectation(
            r_state(get_model("su2"), a_plus_closed_form())),
        "su2-r-aminus": lambda: _witness("su2").expectation(
            r_state(get_model("su2"), a_minus_closed_form())),
        "fib-max-w": lambda: _max_eig("fib"),
        "fib-equals-k3": lambda: _max_eig("fib") - su2k_max_violation(3),
        "fib-word25": _fib_word,
        "su2_2-cp-offdiag": _cp_offdiag,
        "su2_2-cp-route": lambda: su2_2_cp_route()[1],
        "su2_2-phi0-prime": lambda: abs(np.vdot(su2_2_bell_pair(), su2_2_phi0_prime())),
        "su2_2-local-rotation": lambda: su2_2_local_rotation_route()[1],
        "su2_2-orbit-max": _su2_2_orbit_max,
        "ds3-min-i3": lambda: _witness("ds3").min_eigenvalue,
        "ds3-scan-max": lambda: _ds3_scan().max_abs,
        "ds3-scan-nonconstant": lambda: 0.0 if _ds3_scan().is_constant else 1.0,
        "ds3-other-pairing": _other_pairing,
        "ds3-phase-family": lambda: ds3_family_value(DS3_REFERENCE_ANGLES),
        "ds3-optimizer": lambda: optimize_ds3_family(restarts=50, seed=seed).value,
        "lhv-w-max": lambda: lhv_bound_oracle("W").max,
        "lhv-w-min": lambda: lhv_bound_oracle("W").min,
        "lhv-i3-max": lambda: lhv_bound_oracle("I3").max,
        "spin-spectrum": lambda: _spin_report().spectrum_residual,
        "spin-entrywise": lambda: _spin_report().entrywise_residual,
        "spin-max-w": lambda: _spin_report().max_eigenvalue,
    }
    for k in SU2K_LEVELS:
        fns[f"su2k{k}-max-w"] = (lambda k=k: _max_eig(f"su2k:{k}"))
        fns[f"su2k{k}-aplus"] = (lambda k=k: refined_argmax(f"su2k:{k}"))
    return fns


CASE_IDS = tuple(sorted(REFERENCES))


def _timed(case_id, fn, table=REFERENCES):
    model, desc, ref, tol = table[case_id]
    t0 = time.perf_counter()
    value = float(fn())
    ms = int(round(1000 * (time.perf_counter() - t0)))
    return ReproductionCase(case_id, model, desc, value, ref, tol, ms)


def lhv_notes():
    b = lhv_bound_oracle("I3")
    notes = []
    if b.min != -2:
        notes.append(
            f"I3 deterministic-strategy minimum is {b.min:g} (at outcomes {b.argmin}), "
            "not -2: the I3 LHV bound is one-sided, so the I3 minimum eigenvalue "
            f"{_witness('ds3').min_eigenvalue:.4f} does not fall below the LHV minimum.")
    return notes


def run_cases(case_ids, seed=0):
    fns = _case_functions(seed)
    unknown = [c for c in case_ids if c not in fns]
    if unknown:
        raise KeyError(", ".join(unknown))
    cases = [_timed(c, fns[c]) for c in sorted(case_ids)]
    return RunReport(seed=seed, cases=cases, notes=lhv_notes())


# ---- verification suites -------------------------------------------------------------

SUITES = ("algebra", "braids", "lhv")
F_MODELS = ("su2", "su2k:2", "fib", "ds3")
SECTOR_DIMS = {"su2k:2": 4, "su2": 5, "fib": 5, "ds3": 11}


def _check(case_id, model, desc, computed, ref, tol, t0):
    ms = int(round(1000 * (time.perf_counter() - t0)))
    return ReproductionCase(case_id, model, desc, float(computed), float(ref), float(tol), ms)


def verify_algebra():
    out = []
    for mid in F_MODELS:
        t0 = time.perf_counter()
        f = get_model(mid).f
        out.append(_check(f"algebra-{mid}-f-involution", mid, "max |F F - 1|",
                          linalg.max_abs(f @ f - np.eye(len(f))), 0.0, 1e-12, t0))
        t0 = time.perf_counter()
        out.append(_check(f"algebra-{mid}-f-unitary", mid, "max |F^dag F - 1|",
                          linalg.unitarity_residual(f), 0.0, 1e-12, t0))
    for mid, dim in SECTOR_DIMS.items():
        t0 = time.perf_counter()
        out.append(_check(f"algebra-{mid}-sector-dim", mid, "vacuum-sector dimension",
                          build_sector_basis(get_model(mid)).dim, dim, 0.0, t0))
    t0 = time.perf_counter()
    ds3 = get_model("ds3")
    worst = 0
    for n in range(1, 13):
        counted = tuple(sector_dimension(ds3, ["Phi"] * n, c) for c in ("1", "Lambda", "Phi"))
        worst = max(worst, max(abs(a - b) for a, b in zip(counted, phi_power_multiplicities(n))))
    out.append(_check("algebra-ds3-phi-multiplicities", "ds3",
                      "closed-form Phi^n multiplicities vs chain counting, n <= 12",
                      worst, 0.0, 0.0, t0))
    return out


def verify_braids():
    out = []
    for mid in ("su2k:2", "fib", "ds3"):
        t0 = time.perf_counter()
        rel = verify_braid_relations(braid_generators(get_model(mid)))
        out.append(_check(f"braids-{mid}-unitary", mid, "max generator unitarity residual",
                          rel.unitarity, 0.0, 1e-10, t0))
        out.append(_check(f"braids-{mid}-yang-baxter", mid, "max Yang-Baxter residual",
                          rel.yang_baxter, 0.0, 1e-10, t0))
        out.append(_check(f"braids-{mid}-far-commutation", mid,
                          "max far-commutation residual", rel.far_commutation, 0.0, 1e-10, t0))
        if rel.involution is not None:
            out.append(_check(f"braids-{mid}-involution", mid, "max |B_j^2 - 1|",
                              rel.involution, 0.0, 1e-12, t0))
    return out


def verify_lhv():
    out = []
    for name, n, key in (("w", 16, "W"), ("i3", 81, "I3")):
        t0 = time.perf_counter()
        b = lhv_bound_oracle(key)
        out.append(_check(f"lhv-{name}-max", "-", f"{key} maximum over deterministic strategies",
                          b.max, 2.0, 0.0, t0))
        out.append(_check(f"lhv-{name}-strategies", "-", "number of deterministic strategies",
                          b.n_strategies, n, 0.0, t0))
    t0 = time.perf_counter()
    out.append(_check("lhv-w-min", "-", "W minimum over deterministic strategies",
                      lhv_bound_oracle("W").min, -2.0, 0.0, t0))
    return out


def run_verify(suite="all", seed=0):
    suites = SUITES if suite == "all" else (suite,)
    if any(s not in SUITES for s in suites):
        raise KeyError(suite)
    table = {"algebra": verify_algebra, "braids": verify_braids, "lhv": verify_lhv}
    cases = [c for s in suites for c in table[s]()]
    notes = lhv_notes() if "lhv" in suites else []
    return RunReport(seed=seed, cases=cases, notes=notes)


# ---- Fig. 4 data -------------------------------------------------------------------------

FIG4_COLUMNS = (("su2", "su2"), ("so3_3", "fib"), ("su2_2", "su2k:2"))


def fig4_table(samples=2001):
    if samples < 3:
        raise ValueError("at least 3 samples are needed")
    grid = np.linspace(-1.0, 1.0, samples)
    cols = [w_curve(get_model(mid), grid) for _, mid in FIG4_COLUMNS]
    return grid, np.array(cols).T


def fig4_csv(samples=2001):
    grid, vals = fig4_table(samples)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a"] + [name for name, _ in FIG4_COLUMNS])
    for a, row in zip(grid, vals):
        writer.writerow([repr(_sig(a))] + [repr(_sig(x)) for x in row])
    return buf.getvalue()
