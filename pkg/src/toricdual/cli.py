"""Command-line front end: file input, verdict reports, batch crosschecks.

Matrices come in as JSON ({"rows": d, "cols": n, "entries": [[...], ...]})
or as whitespace-separated text with one row per line.  Reports go out as
JSON (default) or readable text; witnesses are included verbatim so a
skeptical consumer can recheck them, and ``--verify`` does that recheck with
the brute-force oracles right away.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

import numpy as np

from . import families
from .configuration import affine_dim, parse_configuration, reduce_configuration
from .engine import (
    full_decomposition,
    hypersurface_class,
    is_lawrence,
    is_self_dual,
    is_strongly_self_dual,
    lawrence_strong_parity,
    smooth_certificate,
)
from .exceptions import GuardExceeded, InapplicableInput
from .gale import gale_dual, is_facial
from .intlinalg import imat
from .oracle import (
    crosscheck,
    enumerate_circuits,
    enumerate_flats,
    facial_via_separation,
    self_dual_via_flats,
    self_dual_via_sigma,
    strong_via_points,
    ENUMERATION_GUARD,
)
from .verdict import Verdict


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    raise TypeError(f"not JSON-serializable: {type(obj)}")


def read_matrix(path: str):
    """Load a matrix from a JSON or plain-text file ('-' reads stdin)."""
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    text = text.strip()
    if not text:
        raise ValueError(f"empty matrix file: {path}")
    if text.startswith("{"):
        doc = json.loads(text)
        entries = doc["entries"]
        m = imat(entries)
        if "rows" in doc and doc["rows"] != m.shape[0]:
            raise ValueError("'rows' field disagrees with the entries")
        if "cols" in doc and doc["cols"] != m.shape[1]:
            raise ValueError("'cols' field disagrees with the entries")
        return m
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([int(tok) for tok in line.split()])
    return imat(rows)


def matrix_doc(m) -> dict:
    return {"rows": m.shape[0], "cols": m.shape[1], "entries": m.tolist()}


def _emit(report: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(report, indent=2, default=_jsonable))
        return
    verdict = report.get("verdict")
    if verdict is not None:
        print(f"verdict: {verdict}")
    if report.get("criterion"):
        print(f"criterion: {report['criterion']}")
    for key, val in report.items():
        if key in ("verdict", "criterion", "config_echo", "timings"):
            continue
        print(f"{key}: {json.dumps(val, default=_jsonable)}")
    if "timings" in report:
        print(f"elapsed: {report['timings']['total_ms']:.1f} ms")


def _report(start, config=None, verdict: Verdict = None, **extra) -> dict:
    rep = {}
    if verdict is not None:
        rep["verdict"] = verdict.value
        rep["criterion"] = verdict.criterion
        rep["witness"] = verdict.witness
    rep.update(extra)
    if config is not None:
        rep["config_echo"] = matrix_doc(config.weights)
    rep["timings"] = {"total_ms": (time.perf_counter() - start) * 1000.0}
    return rep


def _oracle_verify_self_dual(c, claimed: bool):
    red = reduce_configuration(c)
    from .configuration import dedup as _dedup

    dd = _dedup(red)
    b = gale_dual(dd.distinct)
    if dd.repeat_codim or b.zero_rows():
        return {"status": "skipped", "reason": "oracle covers repeat-free non-pyramidal input"}
    if red.npoints > ENUMERATION_GUARD:
        return {"status": "skipped", "reason": "enumeration guard"}
    flats = self_dual_via_flats(b)
    sigma = self_dual_via_sigma(dd.distinct)
    agree = flats == sigma == claimed
    return {"status": "ok" if agree else "DISAGREEMENT", "flats": flats, "sigma": sigma}


def cmd_gale(args):
    start = time.perf_counter()
    c = parse_configuration(read_matrix(args.matrix))
    b = gale_dual(c)
    report = _report(
        start,
        config=c,
        gale_matrix=matrix_doc(b.matrix),
        affine_dim=affine_dim(c),
        zero_rows=list(b.zero_rows()),
    )
    _emit(report, args.format)
    return 0


def cmd_check(args):
    start = time.perf_counter()
    c = parse_configuration(read_matrix(args.matrix))
    if args.property == "self-dual":
        v = is_self_dual(c)
        extra = {}
        if args.verify:
            extra["oracle"] = _oracle_verify_self_dual(c, v.value)
    elif args.property == "strong":
        v = is_strongly_self_dual(c)
        extra = {}
        if args.verify:
            ok = strong_via_points(c)
            extra["oracle"] = {"status": "ok" if ok == v.value else "DISAGREEMENT", "points": ok}
    else:  # facial
        if not args.subset:
            raise ValueError("check facial requires --subset i,j,k (zero-based)")
        subset = [int(t) for t in args.subset.split(",")]
        v = is_facial(c, subset)
        extra = {"subset": subset}
        if args.verify:
            ok = facial_via_separation(c, subset)
            extra["oracle"] = {"status": "ok" if ok == v.value else "DISAGREEMENT", "separation": ok}
    report = _report(start, config=c, verdict=v, **extra)
    _emit(report, args.format)
    if args.verify and report.get("oracle", {}).get("status") == "DISAGREEMENT":
        return 1
    return 0


def cmd_decompose(args):
    start = time.perf_counter()
    c = parse_configuration(read_matrix(args.matrix))
    rep = full_decomposition(c)
    report = _report(
        start,
        config=c,
        repeat_codim=rep.repeat_codim,
        apex_indices=list(rep.apex_indices),
        core_indices=list(rep.core_indices),
        splitting_valid=rep.splitting_valid,
        join_shape=list(rep.join_shape),
    )
    _emit(report, args.format)
    return 0


def cmd_circuits(args):
    start = time.perf_counter()
    c = parse_configuration(read_matrix(args.matrix))
    circuits = enumerate_circuits(c)
    report = _report(
        start,
        config=c,
        circuits=[{"support": list(x.support), "relation": list(x.relation)} for x in circuits],
    )
    _emit(report, args.format)
    return 0


def cmd_flats(args):
    start = time.perf_counter()
    c = parse_configuration(read_matrix(args.matrix))
    b = gale_dual(c)
    flats = enumerate_flats(b)
    report = _report(
        start,
        config=c,
        flats=[{"generators": list(f.generators), "closure": list(f.closure)} for f in flats],
    )
    _emit(report, args.format)
    return 0


def cmd_smooth(args):
    start = time.perf_counter()
    c = parse_configuration(read_matrix(args.matrix))
    v = smooth_certificate(c)
    report = _report(start, config=c, verdict=v)
    report["certificate"] = "SmoothCertified" if v.value else "NotCertified"
    _emit(report, args.format)
    return 0


def cmd_classify(args):
    start = time.perf_counter()
    c = parse_configuration(read_matrix(args.matrix))
    cls = hypersurface_class(c)
    report = _report(start, config=c, hypersurface_class=cls.value)
    _emit(report, args.format)
    return 0


def _parse_alphas(text):
    return [int(t) for t in text.replace(",", " ").split()]


def cmd_generate(args):
    start = time.perf_counter()
    extra = {}
    if args.family == "segre":
        c = families.segre(args.m)
        extra["m"] = args.m
    elif args.family == "lawrence":
        if not args.rows:
            raise ValueError('generate lawrence requires --rows "a b c; d e f"')
        block = imat([[int(t) for t in part.split()] for part in args.rows.split(";")])
        c = families.lawrence(block)
        parity = lawrence_strong_parity(block)
        extra["block"] = matrix_doc(block)
        extra["parity_verdict"] = parity.value
        extra["parity_witness"] = parity.witness
    elif args.family == "family-alpha":
        c = families.family_alpha(args.alpha)
        extra["alpha"] = args.alpha
    elif args.family == "family-dim":
        c = families.family_dim(args.r, _parse_alphas(args.alphas))
    else:  # family-codim
        c = families.family_codim(args.m, args.r, _parse_alphas(args.alphas))
    doc = matrix_doc(c.weights)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
        extra["written"] = args.output
    report = _report(start, config=c, matrix=doc, affine_dim=affine_dim(c), **extra)
    _emit(report, args.format)
    return 0


def cmd_oracle(args):
    start = time.perf_counter()
    rep = crosscheck(seed=args.seed, count=args.count)
    report = _report(
        start,
        seed=args.seed,
        count=args.count,
        self_dual_instances=rep["self_dual_instances"],
        agreements=rep["count"] - len(rep["disagreements"]),
        disagreements=rep["disagreements"],
    )
    _emit(report, args.format)
    return 1 if rep["disagreements"] else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="toricdual",
        description="Exact self-duality tests for projective toric varieties "
        "given by lattice point configurations.",
    )
    p.add_argument("--format", choices=("json", "text"), default="json")
    # accepted after the subcommand as well; SUPPRESS keeps the top-level
    # value when the subcommand copy is absent
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "text"), default=argparse.SUPPRESS
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gale", parents=[common], help="print the canonical Gale dual matrix")
    sp.add_argument("matrix", help="matrix file (JSON or text), '-' for stdin")
    sp.set_defaults(func=cmd_gale)

    sp = sub.add_parser("check", parents=[common], help="decide a property and report a witness")
    sp.add_argument("property", choices=("self-dual", "strong", "facial"))
    sp.add_argument("matrix")
    sp.add_argument("--subset", help="zero-based column indices i,j,k for facial checks")
    sp.add_argument(
        "--verify",
        action="store_true",
        help="recheck the verdict with the brute-force oracle",
    )
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("decompose", parents=[common], help="repeat/apex/core join decomposition")
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("circuits", parents=[common], help="enumerate minimal affine dependencies")
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_circuits)

    sp = sub.add_parser("flats", parents=[common], help="enumerate flats of the Gale dual rows")
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_flats)

    sp = sub.add_parser("smooth-certificate", parents=[common], help="one-sided vertex-chart smoothness certificate")
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_smooth)

    sp = sub.add_parser("classify-hypersurface", parents=[common], help="classify n = dim + 2 configurations")
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("generate", parents=[common], help="emit one of the built-in families")
    sp.add_argument(
        "family",
        choices=("segre", "lawrence", "family-alpha", "family-dim", "family-codim"),
    )
    sp.add_argument("--m", type=int, default=2, help="segre block size / codimension")
    sp.add_argument("--r", type=int, default=2, help="number of alpha entries")
    sp.add_argument("--alpha", type=int, default=1, help="parameter for family-alpha")
    sp.add_argument("--alphas", default="1,-1", help="comma-separated nonzero integers summing to 0")
    sp.add_argument("--rows", help='lawrence block, rows separated by ";": "1 1 1" or "1 0; 2 1"')
    sp.add_argument("--output", help="also write the matrix JSON to this file")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("oracle", parents=[common], help="randomized cross-validation sweeps")
    sp.add_argument("mode", choices=("crosscheck",))
    sp.add_argument("--seed", type=int, default=0, help="seed for reproducible corpora")
    sp.add_argument("--count", type=int, default=50, help="number of random instances")
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InapplicableInput, GuardExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
