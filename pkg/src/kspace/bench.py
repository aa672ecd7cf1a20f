"""Benchmark harness: run compression pipelines over a suite of instances.

The suite file is TOML; each instance names a generator kind, its
parameters, a seed, and the routes to time.  Output is one CSV line per
(instance, route).  Timings are machine-relative and never part of any
correctness claim; per-instance timeouts are recorded and the run
continues.
"""

from __future__ import annotations

import csv
import io
import multiprocessing
import time
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .analytics import count_states, gen_base, gen_learning_space, gen_theta
from .basetools import color_base, dowling_generate
from .eengine import compress_space
from .errors import KspaceError
from .lattice import sigma_l
from .nengine import compress_closure
from .prime import prime_dimps, reduce_dimp_base

CSV_COLUMNS = [
    "name", "kind", "params", "seed", "route",
    "states", "rows", "ratio",
    "t_prime", "t_reduce", "t_sigma", "t_compress", "t_dowling", "t_total",
    "peak_stack", "status",
]

ROUTES_BY_KIND = {
    "theta": ("e",),
    "base": ("e", "dowling"),
    "ls": ("e", "n", "dowling"),
}


def parse_suite(text: str) -> list[dict]:
    data = tomllib.loads(text)
    suite = data.get("suite", {})
    default_timeout = float(suite.get("timeout", 0) or 0)
    instances = []
    for raw in data.get("instances", []):
        inst = dict(raw)
        inst.setdefault("timeout", default_timeout)
        kind = inst.get("kind")
        if kind not in ROUTES_BY_KIND:
            raise KspaceError(f"unknown instance kind {kind!r}")
        inst.setdefault("routes", list(ROUTES_BY_KIND[kind]))
        inst.setdefault("name", f"{kind}-{inst.get('seed', 0)}")
        for route in inst["routes"]:
            if route not in ROUTES_BY_KIND[kind]:
                raise KspaceError(f"route {route!r} not available for kind {kind!r}")
        instances.append(inst)
    return instances


def _materialize(inst):
    kind = inst["kind"]
    seed = int(inst.get("seed", 0))
    if kind == "theta":
        domain, theta = gen_theta(
            inst["w"], inst["h"], inst["a"], inst["b"], seed
        )
        return domain, theta, None
    if kind == "base":
        base = gen_base(inst["w"], inst["n"], inst["c"], seed)
        return base.domain, None, base
    base = gen_learning_space(
        inst["mu"], inst["lam"], inst["kappa"], list(inst["nc"]), seed
    )
    return base.domain, None, base


def _params_text(inst):
    skip = {"name", "kind", "seed", "routes", "timeout"}
    return " ".join(f"{k}={inst[k]}" for k in sorted(inst) if k not in skip)


def run_instance(inst) -> list[dict]:
    """All requested routes for one instance; one CSV record per route."""
    domain, theta, base = _materialize(inst)
    records = []
    for route in inst["routes"]:
        rec = {c: "" for c in CSV_COLUMNS}
        rec.update(
            name=inst["name"], kind=inst["kind"], seed=inst.get("seed", 0),
            params=_params_text(inst), route=route, status="ok",
        )
        t0 = time.perf_counter()
        stats: dict = {}
        try:
            if route == "e":
                if theta is None:
                    t = time.perf_counter()
                    pd = prime_dimps(base)
                    rec["t_prime"] = f"{time.perf_counter() - t:.3f}"
                    t = time.perf_counter()
                    use = reduce_dimp_base(pd)
                    rec["t_reduce"] = f"{time.perf_counter() - t:.3f}"
                else:
                    use = theta
                t = time.perf_counter()
                family = compress_space(domain, use, stats=stats)
                rec["t_compress"] = f"{time.perf_counter() - t:.3f}"
                rec["states"] = str(count_states(family))
                rec["rows"] = str(len(family.rows))
            elif route == "n":
                t = time.perf_counter()
                poset, sigma = sigma_l(color_base(base))
                rec["t_sigma"] = f"{time.perf_counter() - t:.3f}"
                t = time.perf_counter()
                family = compress_closure(poset.label_domain, sigma, stats=stats)
                rec["t_compress"] = f"{time.perf_counter() - t:.3f}"
                rec["states"] = str(count_states(family))
                rec["rows"] = str(len(family.rows))
            else:
                t = time.perf_counter()
                states = dowling_generate(base)
                rec["t_dowling"] = f"{time.perf_counter() - t:.3f}"
                rec["states"] = str(len(states))
            if rec["rows"]:
                rec["ratio"] = f"{int(rec['states']) / int(rec['rows']):.2f}"
            if "peak_stack" in stats:
                rec["peak_stack"] = str(stats["peak_stack"])
        except KspaceError as exc:
            rec["status"] = f"error: {exc}"
        rec["t_total"] = f"{time.perf_counter() - t0:.3f}"
        records.append(rec)
    return records


def _worker(inst, queue):
    try:
        queue.put(run_instance(inst))
    except Exception as exc:  # defensive: report, do not kill the suite
        queue.put(exc)


def run_suite(instances, jobs: int = 1) -> list[dict]:
    """Run every instance, each in its own process so timeouts can kill it."""
    records = []
    pending = list(instances)
    while pending:
        batch, pending = pending[:max(1, jobs)], pending[max(1, jobs):]
        procs = []
        for inst in batch:
            queue = multiprocessing.Queue()
            proc = multiprocessing.Process(target=_worker, args=(inst, queue))
            proc.start()
            procs.append((inst, proc, queue))
        for inst, proc, queue in procs:
            timeout = float(inst.get("timeout", 0) or 0) or None
            proc.join(timeout)
            if proc.is_alive():
                proc.terminate()
                proc.join()
                for route in inst["routes"]:
                    rec = {c: "" for c in CSV_COLUMNS}
                    rec.update(
                        name=inst["name"], kind=inst["kind"],
                        seed=inst.get("seed", 0), params=_params_text(inst),
                        route=route, status="timeout",
                    )
                    records.append(rec)
                continue
            result = queue.get()
            if isinstance(result, Exception):
                raise result
            records.extend(result)
    return records


def to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(rec)
    return buf.getvalue()
