"""Acceptance suites: each criterion is a function returning a CheckResult."""

import time
from dataclasses import dataclass, field as dc_field
from math import comb

from .exactcore.field import Field
from .family23 import ParameterVector, differential_rank, reducibility_summary, verify_family
from .ideal import ZeroDimIdeal
from .nest import (codim_one_subideals, fiber_basis, intermediate_chain, punctual_ideals_bruteforce,
                   residual, validate_chain)
from .resolution import ext_quotient_dims, hilbert_burch, rho_surjective
from .sampling import make_rng, random_nested_pair, random_punctual_ideal, random_reduced_chain
from .strata import bound_tables, emptiness_census, monomial_ideal_of, partitions, staircase
from .tangent import census, summarize, tangent_dim_chain, tangent_dim_point


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    seconds: float = 0.0
    budget: float = 0.0
    summary: str = ""
    failures: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    @property
    def within_budget(self):
        return self.seconds <= self.budget

    def line(self):
        status = "PASS" if self.passed and self.within_budget else "FAIL"
        return (f"[{status}] criterion {self.number:2d} {self.name}: {self.summary} "
                f"({self.seconds:.2f}s, budget {self.budget:g}s)")

    def to_json(self):
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "seconds": round(self.seconds, 3), "budget": self.budget,
                "summary": self.summary, "failures": self.failures[:20], "details": self.details}


def _timed(number, name, budget, fn):
    t0 = time.perf_counter()
    passed, summary, failures, details = fn()
    return CheckResult(number, name, passed, time.perf_counter() - t0, budget, summary,
                       failures, details)


def _default_field(field):
    return field or Field.prime()


def criterion_1(field=None, seed=0):
    field = _default_field(field)

    def run():
        failures, counts = [], {}
        for n in range(1, 7):
            reps = census([0], n, field, n_min=n)
            counts[n] = len(reps)
            failures += [r.description for r in reps if r.constrained_dim != 2 * n]
        total = sum(counts.values())
        return (not failures, f"{total} fixed points of S^[n], n<=6, all tangent dim 2n",
                failures, {"fixed_points": counts})

    return _timed(1, "Hilbert scheme smoothness census", 10, run)


def criterion_2(field=None, seed=0):
    field = _default_field(field)

    def run():
        reps = census([0, 1], 5, field)
        failures = [f"n={r.extra['n']} {r.description}: {r.constrained_dim}"
                    for r in reps if r.constrained_dim != 2 * r.extra["n"] + 2]
        return (not failures, f"{len(reps)} fixed chains (n,n+1), n<=5, all tangent dim 2n+2",
                failures, {"summary": summarize(reps)})

    return _timed(2, "one-step nested smoothness census", 30, run)


def criterion_3(field=None, seed=0):
    field = _default_field(field)

    def run():
        reps = census([0, 1, 2], 4, field)
        failures = [f"n={r.extra['n']} {r.description}: {r.constrained_dim}"
                    for r in reps if r.constrained_dim < 2 * r.extra["n"] + 4]
        rng = make_rng(seed * 1000 + 3)
        random_dims = {}
        for n in range(1, 5):
            dims = []
            for _ in range(10):
                chain = random_reduced_chain(field, rng, [n, n + 1, n + 2])
                dims.append(tangent_dim_chain(chain).constrained_dim)
            random_dims[n] = dims
            failures += [f"random reduced n={n}: {d}" for d in dims if d != 2 * n + 4]
        excess = [r.description for r in reps if r.excess > 0]
        return (not failures,
                f"{len(reps)} fixed chains >= 2n+4; 40 random reduced chains = 2n+4; "
                f"{len(excess)} fixed chains with excess > 0", failures,
                {"summary": summarize(reps), "random_dims": random_dims, "seed": seed})

    return _timed(3, "two-step tangent bound", 60, run)


def criterion_4(field=None, seed=0):
    field = _default_field(field)

    def run():
        failures, rows = [], []
        for i in (3, 4, 5):
            c = comb(i, 2)
            for n in range(1, c):
                rep = emptiness_census(n, i, field)
                rows.append(rep.to_json())
                if not rep.empty:
                    failures.append(f"i={i} n={n}: unexpected witness {rep.witnesses}")
            rep = emptiness_census(c, i, field)
            rows.append(rep.to_json())
            if not rep.staircase_witness or staircase(i - 1) not in rep.witnesses:
                failures.append(f"i={i} n={c}: staircase witness missing")
        return (not failures, "empty below C(i,2), staircase witness at C(i,2), i=3,4,5",
                failures, {"reports": rows})

    return _timed(4, "generator-count emptiness census", 5, run)


def criterion_5(field=None, seed=0):
    def run():
        table = bound_tables(12)
        failures = [k for k, v in table.assertions.items() if not v]
        for row in table.rows:
            i = row["i"]
            if i >= 2 and row["codim_single_step"] != comb(i, 2) + 1:
                failures.append(f"single-step bound at i={i}")
            if row["fiber_dim"] != (2 if i <= 2 else i - 1):
                failures.append(f"fiber dimension at i={i}")
        for row in table.intersections:
            i, j = row["i"], row["j"]
            want = comb(j, 2) + comb(i, 2) if j > i else comb(i, 2) + 1
            if row["codim_intersection"] != want:
                failures.append(f"intersection bound at ({i},{j})")
        return (not failures, "C(i-2,2)+3 >= i for 3<=i<=12; tables match formulas",
                failures, {"table": table.to_json()})

    return _timed(5, "codimension bound tables", 1, run)


def criterion_6(field=None, seed=0):
    def run():
        fp, q = Field.prime(), Field.rationals()
        rng = make_rng(seed * 1000 + 6)
        failures = []
        samples = [ParameterVector.random(fp, rng) for _ in range(20)]
        samples += [ParameterVector.random(q, rng) for _ in range(2)]
        for k, a in enumerate(samples):
            rep = verify_family(a)
            if not rep["ok"]:
                failures.append(f"sample {k} ({a.field!r}): {rep.get('diagnostics')}")
        ranks = [differential_rank(a) for a in samples[:3] + samples[-2:]]
        failures += [f"rank {r} at sample {k}" for k, r in enumerate(ranks) if r != 46]
        summ = reducibility_summary()
        if not (summ["global_component_dim"] == 48 and summ["curvilinear_dim"] == 46
                and summ["reducible"]):
            failures.append("reducibility arithmetic")
        return (not failures, f"22 chains valid (1..23, m^7 contained), ranks {ranks}, 48 > 46",
                failures, {"ranks": ranks, "summary": summ, "seed": seed})

    return _timed(6, "46-parameter family certification", 120, run)


def _monomial_ideals(field, n_max):
    return [(str(lam), monomial_ideal_of(lam, field))
            for n in range(1, n_max + 1) for lam in partitions(n)]


def _random_punctuals(field, rng, count, n_max=8):
    return [(f"random#{k}", random_punctual_ideal(field, rng, rng.randint(2, n_max)))
            for k in range(count)]


def criterion_7(field=None, seed=0):
    field = _default_field(field)

    def run():
        rng = make_rng(seed * 1000 + 7)
        cases = _monomial_ideals(field, 6) + _random_punctuals(field, rng, 50)
        failures = []
        for name, I in cases:
            res = hilbert_burch(I)
            r = res.r
            shape_ok = len(res.syz) == r and all(len(row) == r - 1 for row in res.syz)
            e = ext_quotient_dims(I)
            if not (shape_ok and res.minor_identity_holds() and res.syzygies_vanish()
                    and e[2] == I.colength):
                failures.append(f"{name}: shape={shape_ok} ext={e}")
        return (not failures, f"{len(cases)} ideals: r x (r-1) matrix, minors = unit * gens, e2 = n",
                failures, {"cases": len(cases), "seed": seed})

    return _timed(7, "Hilbert-Burch suite", 30, run)


def criterion_8(field=None, seed=0):
    field = _default_field(field)

    def run():
        rng = make_rng(seed * 1000 + 8)
        cases = _monomial_ideals(field, 6) + _random_punctuals(field, rng, 25)
        failures = [name for name, I in cases if not rho_surjective(I)]
        return (not failures, f"rho surjective on {len(cases)} ideals", failures,
                {"cases": len(cases), "seed": seed})

    return _timed(8, "Ext comparison surjectivity", 30, run)


def criterion_9(field=None, seed=0):
    def run():
        f2 = Field.prime(2)
        levels = punctual_ideals_bruteforce(f2, 3)
        failures, rows = [], []
        for n in range(1, 4):
            for I in levels[n]:
                i = len(fiber_basis(ZeroDimIdeal.punctual(I), (0, 0)))
                count = len(codim_one_subideals(I))
                rows.append({"ideal": repr(I), "i": i, "count": count})
                if count != 2 ** i - 1:
                    failures.append(f"{I!r}: {count} subideals, fiber dimension {i}")
        return (not failures, f"{len(rows)} ideals over F_2: subideal count = 2^i - 1",
                failures, {"rows": rows})

    return _timed(9, "fiber count over F_2", 60, run)


def criterion_10(field=None, seed=0):
    field = _default_field(field)

    def run():
        rng = make_rng(seed * 1000 + 10)
        failures = []
        for k in range(50):
            n = rng.randint(0, 4)
            gap = rng.randint(1, 4)
            I, J = random_nested_pair(field, rng, n, gap)
            targets = list(range(n + 1, n + gap))
            chain = intermediate_chain(I, J, targets)
            rep = validate_chain(chain)
            if not rep.valid or rep.lengths != list(range(n, n + gap + 1)):
                failures.append(f"pair {k}: lengths {rep.lengths}, valid={rep.valid}")
                continue
            if residual(I, J).total != gap:
                failures.append(f"pair {k}: residual total")
        return (not failures, "50 random pairs interpolated through every colength", failures,
                {"seed": seed})

    return _timed(10, "chain interpolation", 30, run)


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10}

SUITES = {
    "smoothness": [1, 2, 3],
    "strata": [4, 5],
    "family23": [6],
    "resolution": [7, 8],
    "nest": [9, 10],
}


def run_suite(name, field=None, seed=0, stream=None):
    """Run a suite; returns (exit_code, results). Unknown names raise KeyError."""
    if name not in SUITES and name != "all":
        raise KeyError(name)
    numbers = sorted(CRITERIA) if name == "all" else SUITES[name]
    results = [CRITERIA[k](field, seed) for k in numbers]
    if stream is not None:
        for r in results:
            print(r.line(), file=stream)
            for f in r.failures[:10]:
                print(f"    failed: {f}", file=stream)
    code = 0 if all(r.passed for r in results) else 1
    return code, results
