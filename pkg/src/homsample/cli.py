"""Command-line interface.

Subcommands: density, embed, bench, gen-er, atlas. Exit codes: 0 on
success, 1 on usage errors, 2 on data errors (unreadable or malformed
inputs).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bench import bench_patterns, run_bench, write_bench_csv
from .embedding import embed_dataset, write_embeddings_csv
from .graphs import (FormatError, atlas_connected, clique, dataset_record,
                     generate_er, parse_dataset, parse_edge_list,
                     pattern_from_graph, pattern_to_graph, write_edge_list)
from .oracles import build_oracle
from .sampling import SamplingConfig, sample_density

_WEIGHTS = {"none": "unweighted", "attrs": "node_attrs", "degree": "degree"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_sampling_flags(sub, filter_choices=("exact", "bloom"),
                        filter_default="exact"):
    sub.add_argument("--epsilon", type=float, default=0.01,
                     help="additive precision (default 0.01)")
    sub.add_argument("--delta", type=float, default=None,
                     help="failure probability (default 0.05)")
    sub.add_argument("--confidence", type=float, default=None,
                     help="success probability; shorthand for 1 - delta")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--filter", choices=list(filter_choices),
                     default=filter_default)
    sub.add_argument("--fpr", type=float, default=0.01,
                     help="Bloom false positive rate (default 0.01)")
    sub.add_argument("--weights", choices=sorted(_WEIGHTS), default="none")
    sub.add_argument("--threads", type=int, default=os.cpu_count() or 1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="homsample",
                     description="Sampled graph homomorphism densities")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("density", help="estimate one pattern density")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--pattern", required=True,
                   help="K2..K5, atlas:IDX, or an edge-list file")
    _add_sampling_flags(p)

    p = subs.add_parser("embed", help="embed a dataset into density features")
    p.add_argument("--dataset", required=True, help="JSONL dataset file")
    p.add_argument("--patterns", default="atlas:10",
                   help="pattern family, atlas:COUNT (default atlas:10)")
    p.add_argument("--sample-index", type=int, default=0,
                   help="replicate index for independent samples")
    p.add_argument("--out", required=True, help="output CSV path")
    _add_sampling_flags(p, filter_choices=("auto", "exact", "bloom"),
                        filter_default="auto")

    p = subs.add_parser("bench", help="scalability benchmark on G(n, log^2 n / n)")
    p.add_argument("--ns", required=True,
                   help="comma-separated node counts, e.g. 1000,10000")
    p.add_argument("--pattern", default="K3")
    p.add_argument("--patterns", default=None,
                   help="comma list for a fixed-n pattern sweep (uses first of --ns)")
    p.add_argument("--variants", default="bloom:1e-2",
                   help="comma list of kind:epsilon, e.g. exact:5e-3,bloom:1e-2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--delta", type=float, default=0.05)
    p.add_argument("--fpr", type=float, default=0.01)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--out", required=True, help="output CSV path")

    p = subs.add_parser("gen-er", help="write an Erdos-Renyi graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = subs.add_parser("atlas", help="write atlas patterns as dataset records")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--out", required=True)
    return parser


def _resolve_delta(args) -> float:
    if args.delta is not None and args.confidence is not None:
        raise _UsageError("--delta and --confidence are mutually exclusive")
    if args.confidence is not None:
        if not 0.0 < args.confidence < 1.0:
            raise _UsageError("--confidence must lie strictly in (0, 1)")
        return 1.0 - args.confidence
    return args.delta if args.delta is not None else 0.05


def _resolve_pattern(spec: str):
    if spec in ("K2", "K3", "K4", "K5"):
        return clique(int(spec[1]))
    if spec.startswith("atlas:"):
        try:
            idx = int(spec.split(":", 1)[1])
        except ValueError:
            raise _UsageError(f"bad atlas index in {spec!r}") from None
        family = atlas_connected(31)
        if not 0 <= idx < len(family):
            raise _UsageError(f"atlas index {idx} out of range 0..30")
        return family[idx]
    path = Path(spec)
    if not path.exists():
        raise FormatError(f"pattern file not found: {spec}")
    return pattern_from_graph(parse_edge_list(path.read_text()),
                              name=path.stem)


def _resolve_family(spec: str):
    if not spec.startswith("atlas:"):
        raise _UsageError(f"pattern family must look like atlas:COUNT, got {spec!r}")
    try:
        count = int(spec.split(":", 1)[1])
    except ValueError:
        raise _UsageError(f"bad atlas count in {spec!r}") from None
    return atlas_connected(count)


def _cmd_density(args) -> int:
    text = Path(args.graph).read_text()
    g = parse_edge_list(text)
    pattern = _resolve_pattern(args.pattern)
    config = SamplingConfig(epsilon=args.epsilon, delta=_resolve_delta(args),
                            seed=args.seed, weighting=_WEIGHTS[args.weights])
    oracle = build_oracle(g, args.filter, args.fpr)
    est = sample_density(g, pattern, oracle, config, threads=args.threads)
    print(json.dumps({"t": est.t_bar, "N": est.n_samples,
                      "epsilon": config.epsilon, "delta": config.delta,
                      "n_nodes": g.n, "pattern": pattern.name,
                      "elapsed_ms": est.elapsed * 1000.0}))
    return 0


def _cmd_embed(args) -> int:
    records = parse_dataset(Path(args.dataset).read_text())
    patterns = _resolve_family(args.patterns)
    config = SamplingConfig(epsilon=args.epsilon, delta=_resolve_delta(args),
                            seed=args.seed, weighting=_WEIGHTS[args.weights])
    embedded = embed_dataset(records, patterns, config, args.filter,
                             args.sample_index, fpr=args.fpr,
                             threads=args.threads)
    Path(args.out).write_text(write_embeddings_csv(embedded))
    return 0


def _parse_variants(spec: str):
    variants = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        kind, _, eps = item.partition(":")
        if kind not in ("exact", "bloom") or not eps:
            raise _UsageError(f"bad variant {item!r}, expected kind:epsilon")
        try:
            variants.append((kind, float(eps)))
        except ValueError:
            raise _UsageError(f"bad epsilon in variant {item!r}") from None
    if not variants:
        raise _UsageError("no benchmark variants given")
    return variants


def _cmd_bench(args) -> int:
    sizes = []
    for tok in args.ns.split(","):
        tok = tok.strip()
        if tok:
            try:
                sizes.append(int(tok))
            except ValueError:
                raise _UsageError(f"bad node count {tok!r}") from None
    if not sizes:
        raise _UsageError("--ns needs at least one node count")
    variants = _parse_variants(args.variants)
    if args.patterns:
        patterns = [_resolve_pattern(tok.strip())
                    for tok in args.patterns.split(",") if tok.strip()]
        results = bench_patterns(sizes[0], patterns, variants, args.seed,
                                 delta=args.delta, fpr=args.fpr,
                                 repeats=args.repeats, threads=args.threads)
    else:
        pattern = _resolve_pattern(args.pattern)
        results = run_bench(sizes, pattern, variants, args.seed,
                            delta=args.delta, fpr=args.fpr,
                            repeats=args.repeats, threads=args.threads)
    Path(args.out).write_text(write_bench_csv(results))
    return 0


def _cmd_gen_er(args) -> int:
    g = generate_er(args.n, args.p, args.seed)
    Path(args.out).write_text(write_edge_list(g))
    return 0


def _cmd_atlas(args) -> int:
    patterns = atlas_connected(args.count)
    lines = [dataset_record(p.name, pattern_to_graph(p), i)
             for i, p in enumerate(patterns)]
    Path(args.out).write_text("\n".join(lines) + "\n")
    return 0


_HANDLERS = {"density": _cmd_density, "embed": _cmd_embed, "bench": _cmd_bench,
             "gen-er": _cmd_gen_er, "atlas": _cmd_atlas}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
