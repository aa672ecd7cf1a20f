"""Command-line front end for every pipeline.

Exit codes: 0 on success, 1 on domain errors (bad input, failed check),
2 on resource-guard aborts.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analytics import (
    conditional_probability,
    count_states,
    gen_base,
    gen_learning_space,
    gen_theta,
)
from .basetools import (
    BaseFamily,
    DEFAULT_STATE_LIMIT,
    atoms_from_base,
    atoms_from_rows,
    base_from_rows,
    color_base,
    dowling_generate,
    is_learning_space,
)
from .bench import parse_suite, run_suite, to_csv
from .eengine import compress_space
from .errors import KspaceError, ResourceLimitError
from .explore import run_exploration, snapshot_load, snapshot_text
from .fileio import (
    parse_dimplications,
    parse_implications,
    parse_rooted_sets,
    parse_sets,
    serialize_dimplications,
    serialize_implications,
    serialize_rooted_sets,
    serialize_sets,
)
from .lattice import ji_label_map, sigma_l
from .model import ItemSet
from .nengine import closure, compress_closure
from .prime import check_rooted_axioms, dimps_as_rooted, prime_dimps, reduce_dimp_base
from .rows import parse_rows, serialize_rows


def _read(path: str) -> str:
    return Path(path).read_text()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_base(path: str, allow_partial: bool) -> BaseFamily:
    domain, sets, _ = parse_sets(_read(path))
    base = BaseFamily(domain, tuple(sets), check_coverage=not allow_partial)
    if allow_partial:
        base = base.shrunk_to_cover()
    return base


def _labels(domain, text: str | None) -> ItemSet:
    if not text:
        return ItemSet.empty(domain)
    return ItemSet.from_labels(domain, text.replace(",", " ").split())


def _trace_printer(row, k, children):
    kids = "; ".join(str(c) for c in children) or "(none)"
    print(f"step {k}: [{row}] -> {kids}", file=sys.stderr)


def cmd_compress(args) -> int:
    domain, theta = parse_dimplications(_read(args.dimps))
    trace = _trace_printer if args.trace else None
    family = compress_space(domain, theta, trace=trace)
    if args.count:
        print(count_states(family))
    else:
        _emit(serialize_rows(family), args.out)
    return 0


def cmd_closure(args) -> int:
    domain, sigma = parse_implications(_read(args.imps))
    if args.of is not None:
        closed = closure(_labels(domain, args.of), sigma)
        print(" ".join(closed.labels()) or "-")
        return 0
    trace = _trace_printer if args.trace else None
    family = compress_closure(domain, sigma, trace=trace)
    if args.count:
        print(count_states(family))
    else:
        _emit(serialize_rows(family), args.out)
    return 0


def cmd_dowling(args) -> int:
    base = _load_base(args.base, args.allow_partial)
    states = dowling_generate(base, args.limit)
    if args.count:
        print(len(states))
    else:
        _emit(serialize_sets(base.domain, states), args.out)
    return 0


def cmd_base(args) -> int:
    family = parse_rows(_read(args.rows))
    base = base_from_rows(family)
    colors = None
    if args.colors:
        colors = color_base(base).colors
    _emit(serialize_sets(base.domain, base.sets, colors), args.out)
    return 0


def cmd_atoms(args) -> int:
    if args.rows:
        family = parse_rows(_read(args.rows))
        domain = family.domain
        atoms = atoms_from_rows(family, domain.index(args.item))
    else:
        base = _load_base(args.base, args.allow_partial)
        domain = base.domain
        atoms = atoms_from_base(base, domain.index(args.item))
    _emit(serialize_sets(domain, atoms), args.out)
    return 0


def cmd_primedimps(args) -> int:
    base = _load_base(args.base, args.allow_partial)
    theta = prime_dimps(base)
    if args.as_circuits:
        _emit(serialize_rooted_sets(base.domain, dimps_as_rooted(theta)), args.out)
    else:
        _emit(serialize_dimplications(base.domain, theta), args.out)
    return 0


def cmd_reduce(args) -> int:
    domain, theta = parse_dimplications(_read(args.dimps))
    reduced = reduce_dimp_base(theta, passes=args.passes)
    _emit(serialize_dimplications(domain, reduced), args.out)
    return 0


def cmd_sigma(args) -> int:
    base = _load_base(args.base, args.allow_partial)
    poset, sigma = sigma_l(color_base(base))
    _emit(serialize_implications(poset.label_domain, sigma), args.out)
    if args.map:
        Path(args.map).write_text(ji_label_map(poset))
    return 0


def cmd_stats(args) -> int:
    family = parse_rows(_read(args.rows))
    domain = family.domain
    if not any((args.contain, args.avoid, args.given_contain, args.given_avoid)):
        print(count_states(family))
        return 0
    p = conditional_probability(
        family,
        _labels(domain, args.contain),
        _labels(domain, args.avoid),
        _labels(domain, args.given_contain),
        _labels(domain, args.given_avoid),
        maximal_only=args.maximal_only,
    )
    print(p)
    return 0


def cmd_gen(args) -> int:
    if args.what == "theta":
        domain, theta = gen_theta(args.w, args.h, args.a, args.b, args.seed)
        _emit(serialize_dimplications(domain, theta), args.out)
    elif args.what == "base":
        base = gen_base(args.w, args.n, args.c, args.seed, not args.no_ensure_coverage)
        _emit(serialize_sets(base.domain, base.sets), args.out)
    else:
        base = gen_learning_space(
            args.mu, args.lam, args.kappa, args.nc.replace(",", " ").split(), args.seed
        )
        _emit(serialize_sets(base.domain, base.sets), args.out)
    return 0


def cmd_bench(args) -> int:
    instances = parse_suite(_read(args.suite))
    records = run_suite(instances, jobs=args.jobs)
    _emit(to_csv(records), args.out)
    return 0


def cmd_check(args) -> int:
    if args.base:
        base = _load_base(args.base, args.allow_partial)
        ok, witness = is_learning_space(base)
        print("learning space" if ok else f"not a learning space: atom {witness} is shared")
        return 0 if ok else 1
    if args.circuits:
        _, rooted = parse_rooted_sets(_read(args.circuits))
        ok, pair = check_rooted_axioms(rooted)
        print("rooted-circuit axioms hold" if ok else f"axioms violated by {pair[0]} and {pair[1]}")
        return 0 if ok else 1
    family = parse_rows(_read(args.rows))
    ok = family.pairwise_disjoint()
    print("rows pairwise disjoint" if ok else "rows overlap")
    return 0 if ok else 1


def cmd_explore(args) -> int:
    hidden = _load_base(args.hidden, args.allow_partial)
    session = run_exploration(hidden, a_max=args.a_max, max_rows=args.max_rows)
    print(
        f"status: {session.status}  states: {session.rows.count()}  "
        f"rows: {len(session.rows.rows)}  base: {len(session.base.sets)}  "
        f"accepted: {len(session.accepted)}"
    )
    if args.out_rows:
        Path(args.out_rows).write_text(serialize_rows(session.rows))
    if args.out_base:
        Path(args.out_base).write_text(
            serialize_sets(session.domain, session.base.sets)
        )
    if args.out_dimps:
        Path(args.out_dimps).write_text(
            serialize_dimplications(session.domain, session.accepted)
        )
    if args.save:
        Path(args.save).write_text(snapshot_text(session))
    return 0 if session.status != "aborted" else 2


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    preloaded = [snapshot_load(_read(p)) for p in args.load_snapshot or []]
    app = create_app(preloaded)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kspace",
        description="Compressed knowledge-space toolkit: wildcard-row engines, "
        "base and dimplication conversions, analytics, and exploration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    p = add("compress", cmd_compress, "dimplication file -> e-mode rows file")
    p.add_argument("--dimps", required=True)
    p.add_argument("--out")
    p.add_argument("--count", action="store_true", help="print the state count only")
    p.add_argument("--trace", action="store_true", help="log each split step to stderr")

    p = add("closure", cmd_closure, "implication file -> n-mode rows file")
    p.add_argument("--imps", required=True)
    p.add_argument("--of", help="print the closure of these items instead")
    p.add_argument("--out")
    p.add_argument("--count", action="store_true")
    p.add_argument("--trace", action="store_true")

    p = add("dowling", cmd_dowling, "base file -> all states by union closure")
    p.add_argument("--base", required=True)
    p.add_argument("--out")
    p.add_argument("--count", action="store_true")
    p.add_argument("--limit", type=int, default=DEFAULT_STATE_LIMIT)
    p.add_argument("--allow-partial", action="store_true",
                   help="shrink the domain to the union of the base sets")

    p = add("base", cmd_base, "rows file -> base of union-irreducible states")
    p.add_argument("--rows", required=True)
    p.add_argument("--out")
    p.add_argument("--colors", action="store_true",
                   help="annotate each base set with '@ <color>' (learning spaces only)")

    p = add("atoms", cmd_atoms, "minimal states containing one item")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--rows")
    g.add_argument("--base")
    p.add_argument("--item", required=True)
    p.add_argument("--out")
    p.add_argument("--allow-partial", action="store_true")

    p = add("primedimps", cmd_primedimps, "base file -> all prime dimplications")
    p.add_argument("--base", required=True)
    p.add_argument("--out")
    p.add_argument("--as-circuits", action="store_true",
                   help="emit '<labels> @ <root>' rooted-set lines instead")
    p.add_argument("--allow-partial", action="store_true")

    p = add("reduce", cmd_reduce, "drop dimplications entailed by the rest")
    p.add_argument("--dimps", required=True)
    p.add_argument("--out")
    p.add_argument("--passes", type=int, default=1)

    p = add("sigma", cmd_sigma, "learning-space base -> implications over join irreducibles")
    p.add_argument("--base", required=True)
    p.add_argument("--out")
    p.add_argument("--map", help="write the node-label to base-set sidecar here")
    p.add_argument("--allow-partial", action="store_true")

    p = add("stats", cmd_stats, "state count or conditional probability over a rows file")
    p.add_argument("--rows", required=True)
    p.add_argument("--contain", help="comma-separated items the state must contain")
    p.add_argument("--avoid", help="comma-separated items the state must avoid")
    p.add_argument("--given-contain", help="conditioning: items contained")
    p.add_argument("--given-avoid", help="conditioning: items avoided")
    p.add_argument("--maximal-only", action="store_true",
                   help="restrict the sample space to inclusion-maximal states")

    p = add("gen", cmd_gen, "seeded random instance generators")
    gsub = p.add_subparsers(dest="what", required=True)
    gt = gsub.add_parser("theta", help="random dimplications")
    gt.set_defaults(func=cmd_gen)
    gt.add_argument("--w", type=int, required=True)
    gt.add_argument("--h", type=int, required=True)
    gt.add_argument("--a", type=int, required=True)
    gt.add_argument("--b", type=int, required=True)
    gt.add_argument("--seed", type=int, default=0)
    gt.add_argument("--out")
    gb = gsub.add_parser("base", help="random base of c-subsets")
    gb.set_defaults(func=cmd_gen)
    gb.add_argument("--w", type=int, required=True)
    gb.add_argument("--n", type=int, required=True)
    gb.add_argument("--c", type=int, required=True)
    gb.add_argument("--seed", type=int, default=0)
    gb.add_argument("--no-ensure-coverage", action="store_true")
    gb.add_argument("--out")
    gl = gsub.add_parser("ls", help="random learning-space base from a layered poset")
    gl.set_defaults(func=cmd_gen)
    gl.add_argument("--mu", type=int, required=True)
    gl.add_argument("--lam", type=int, required=True)
    gl.add_argument("--kappa", type=int, required=True)
    gl.add_argument("--nc", required=True, help="comma-separated new-color labels")
    gl.add_argument("--seed", type=int, default=0)
    gl.add_argument("--out")

    p = add("bench", cmd_bench, "run a TOML benchmark suite, emit CSV")
    p.add_argument("--suite", required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)

    p = add("check", cmd_check, "validate a base, rooted circuits, or row disjointness")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--base")
    g.add_argument("--circuits")
    g.add_argument("--rows")
    p.add_argument("--allow-partial", action="store_true")

    p = add("explore", cmd_explore, "run a full oracle-mode exploration session")
    p.add_argument("--hidden", required=True, help="base file of the hidden space")
    p.add_argument("--a-max", type=int)
    p.add_argument("--max-rows", type=int, default=200_000)
    p.add_argument("--out-rows")
    p.add_argument("--out-base")
    p.add_argument("--out-dimps")
    p.add_argument("--save", help="write a plain-text session snapshot here")
    p.add_argument("--allow-partial", action="store_true")

    p = add("serve", cmd_serve, "run the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--load-snapshot", action="append",
                   help="session snapshot file to restore at startup (repeatable)")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KspaceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
