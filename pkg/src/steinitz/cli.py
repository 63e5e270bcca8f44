"""Command-line surface.

Every verb is a thin adapter over one library call.  ``--machine`` switches
to line-delimited JSON with sorted keys, which is byte-stable across runs;
the default output is short human-readable text.

Exit codes: 0 success (and verification match), 1 usage or descriptor
error, 2 verification mismatch, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import affine as affine_mod
from . import field as field_mod
from . import finring, verify
from .errors import (
    BoundExceededError,
    InfiniteCountError,
    ParseError,
    SteinitzError,
)
from .fgset import ExtendedCount
from .supernat import natural_value, render_content

__all__ = ["console", "main", "parse_descriptor"]


def parse_descriptor(text: str):
    """Dispatch on the descriptor grammar: affine or plain field."""
    if text.startswith("affine:"):
        return affine_mod.parse_affine(text)
    return field_mod.parse_field(text)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this artifact reserves 2 for
    # verification mismatches.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(args, record: dict, text: str) -> None:
    if args.machine:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _count_fields(c: ExtendedCount) -> dict:
    return {"finite": c.is_finite, "count": c.value}


def _cmd_parse(args) -> int:
    value = parse_descriptor(args.descriptor)
    if isinstance(value, affine_mod.AffineDescriptor):
        canonical = affine_mod.render_affine(value)
        kind = "affine"
    else:
        canonical = field_mod.render_field(value)
        kind = "field"
    _emit(args, {"kind": kind, "canonical": canonical}, canonical)
    return 0


def _cmd_rgmax(args) -> int:
    E = field_mod.parse_field(args.descriptor)
    count = field_mod.rgmax_count(E)
    record = _count_fields(count)
    lines = [f"maximal subrings: {count}"]
    if args.list:
        try:
            subs = field_mod.rgmax_list(E)
        except InfiniteCountError as exc:
            record["family"] = exc.description
            lines.append(f"family: {exc.description}")
        else:
            record["maximal"] = [field_mod.render_field(S) for S in subs]
            lines.extend(f"  {field_mod.render_field(S)}" for S in subs)
    _emit(args, record, "\n".join(lines))
    return 0


def _cmd_lfield(args) -> int:
    E = field_mod.parse_field(args.descriptor)
    L = field_mod.largest_nonsubmaximal(E)
    text = field_mod.render_field(L)
    _emit(args, {"lfield": text}, text)
    return 0


def _cmd_degree(args) -> int:
    F = field_mod.parse_field(args.lower)
    E = field_mod.parse_field(args.upper)
    d = field_mod.degree(E, F)
    record = {"degree": render_content(d), "natural": natural_value(d)}
    _emit(args, record, render_content(d))
    return 0


def _cmd_chains(args) -> int:
    E = field_mod.parse_field(args.descriptor)
    try:
        st = field_mod.chain_stats(E, list_chains=args.enumerate)
    except InfiniteCountError as exc:
        record = {"finite": False, "family": exc.description}
        _emit(args, record, f"infinitely many steps: {exc.description}")
        return 0
    record = {
        "finite": True,
        "length": st.length,
        "chain_count": st.chain_count,
        "terminus": field_mod.render_field(st.terminus),
    }
    lines = [
        f"length {st.length}, {st.chain_count} chain(s), "
        f"terminus {field_mod.render_field(st.terminus)}"
    ]
    if args.enumerate:
        record["chains"] = [
            [field_mod.render_field(step) for step in chain] for chain in st.chains
        ]
        lines.extend(
            "  " + " > ".join(field_mod.render_field(step) for step in chain)
            for chain in st.chains
        )
    _emit(args, record, "\n".join(lines))
    return 0


def _cmd_intermediate(args) -> int:
    F = field_mod.parse_field(args.lower)
    E = field_mod.parse_field(args.upper)
    count = field_mod.intermediate_count(E, F)
    _emit(args, _count_fields(count), f"intermediate fields: {count}")
    return 0


def _cmd_embed(args) -> int:
    F = field_mod.parse_field(args.lower)
    E = field_mod.parse_field(args.upper)
    result = field_mod.embed_in_maximal(E, F)
    if result.maximal is not None:
        text = field_mod.render_field(result.maximal)
        record = {"embeddable": True, "maximal": text, "witness_prime": None}
        _emit(args, record, f"embeds in maximal subring {text}")
    else:
        record = {
            "embeddable": False,
            "maximal": None,
            "witness_prime": result.blocking_prime,
        }
        _emit(
            args,
            record,
            f"not embeddable: prime {result.blocking_prime} has infinite order",
        )
    return 0


def _cmd_affine(args) -> int:
    d = affine_mod.parse_affine(args.descriptor)
    v = affine_mod.decide(d)
    record = {
        "outcome": v.outcome,
        "field": None if v.resulting_field is None else field_mod.render_field(v.resulting_field),
        "count": None if v.count is None else v.count.value,
        "reason": v.reason,
        "witness": None if v.witness is None else list(v.witness),
    }
    bits = [v.outcome]
    if v.resulting_field is not None:
        bits.append(f"field {field_mod.render_field(v.resulting_field)}")
    if v.count is not None:
        bits.append(f"count {v.count}")
    if v.reason:
        bits.append(f"reason {v.reason}")
    if v.witness:
        bits.append(f"witness {v.witness}")
    _emit(args, record, ", ".join(bits))
    return 0


def _cmd_ring(args) -> int:
    bound = args.bound
    if args.family == "gf":
        ring = finring.make_gf(args.p, args.n, bound)
    elif args.family == "dual":
        ring = finring.make_dual(finring.make_gf(args.p, args.n, bound), bound)
    else:
        K = finring.make_gf(args.p, args.n, bound)
        ring = finring.make_product(K, K, bound)
    lattice = finring.enumerate_subrings(ring)
    record = {
        "family": args.family,
        "p": args.p,
        "n": args.n,
        "size": ring.size,
        "subrings": len(lattice.subrings),
        "maximal": sum(1 for _, j in lattice.covers if j == lattice.top_index),
    }
    lines = [
        f"{ring.provenance}: {ring.size} elements, {record['subrings']} subrings, "
        f"{record['maximal']} maximal"
    ]
    if args.lattice:
        record["lattice"] = [list(lattice.labels(i)) for i in range(len(lattice.subrings))]
        record["covers"] = [list(c) for c in lattice.covers]
        for i in range(len(lattice.subrings)):
            lines.append(f"  [{i}] {{{', '.join(lattice.labels(i))}}}")
        lines.append("  covers: " + ", ".join(f"{i}<{j}" for i, j in lattice.covers))
    elif args.maximal:
        tops = [i for i, j in lattice.covers if j == lattice.top_index]
        record["maximal_subrings"] = [list(lattice.labels(i)) for i in tops]
        for i in tops:
            lines.append(f"  {{{', '.join(lattice.labels(i))}}}")
    elif args.chains:
        chains, uniform = finring.saturated_chains(lattice)
        record["chains"] = [list(c) for c in chains]
        record["uniform"] = uniform
        lines.append(f"  {len(chains)} chain(s), uniform={uniform}")
        lines.extend("  " + " > ".join(str(i) for i in chain) for chain in chains)
    _emit(args, record, "\n".join(lines))
    return 0


def _cmd_verify(args) -> int:
    report = verify.run_verify(args.suite, max_size=args.max_size, seed=args.seed)
    for r in report.records:
        if args.machine:
            print(json.dumps(r, sort_keys=True))
            continue
        if r["status"] == "skipped":
            print(f"{r['instance']}: SKIP ({r['reason']})")
        elif r.get("match"):
            detail = ""
            if "predicted" in r:
                detail = f" predicted={r['predicted']} observed={r['observed']}"
            print(f"{r['instance']}: ok{detail}")
        else:
            print(f"{r['instance']}: MISMATCH {r}")
    if not args.machine:
        print("result:", "ok" if report.ok else "mismatch")
    return 0 if report.ok else 2


def _build_parser() -> _Parser:
    parser = _Parser(prog="steinitz", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--machine", action="store_true", help="line-delimited JSON output"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("parse", parents=[common], help="parse and echo a descriptor")
    p.add_argument("descriptor")
    p.set_defaults(run=_cmd_parse)

    p = sub.add_parser("rgmax", parents=[common], help="count maximal subrings")
    p.add_argument("descriptor")
    p.add_argument("--list", action="store_true", help="list them when finite")
    p.set_defaults(run=_cmd_rgmax)

    p = sub.add_parser("lfield", parents=[common], help="largest nonsubmaximal subfield")
    p.add_argument("descriptor")
    p.set_defaults(run=_cmd_lfield)

    p = sub.add_parser("degree", parents=[common], help="extension degree [upper:lower]")
    p.add_argument("lower")
    p.add_argument("upper")
    p.set_defaults(run=_cmd_degree)

    p = sub.add_parser("chains", parents=[common], help="saturated chain length and count")
    p.add_argument("descriptor")
    p.add_argument("--enumerate", action="store_true", help="list the chains")
    p.set_defaults(run=_cmd_chains)

    p = sub.add_parser(
        "intermediate", parents=[common], help="count fields between lower and upper"
    )
    p.add_argument("lower")
    p.add_argument("upper")
    p.set_defaults(run=_cmd_intermediate)

    p = sub.add_parser(
        "embed", parents=[common], help="embed lower into a maximal subring of upper"
    )
    p.add_argument("lower")
    p.add_argument("upper")
    p.set_defaults(run=_cmd_embed)

    p = sub.add_parser("affine", parents=[common], help="decide an affine descriptor")
    p.add_argument("descriptor")
    p.set_defaults(run=_cmd_affine)

    p = sub.add_parser("ring", parents=[common], help="enumerate a small ring's subrings")
    p.add_argument("family", choices=("gf", "dual", "product"))
    p.add_argument("-p", type=int, required=True, help="characteristic")
    p.add_argument("-n", type=int, required=True, help="extension degree")
    p.add_argument("--bound", type=int, default=finring.DEFAULT_SIZE_BOUND)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--lattice", action="store_true")
    group.add_argument("--maximal", action="store_true")
    group.add_argument("--chains", action="store_true")
    p.set_defaults(run=_cmd_ring)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITES)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(run=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SteinitzError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console() -> int:
    return main()
