"""Command-line interface: ``frameorbit <command> ...``.

Exit codes: 0 success (a negative verdict is still success), 1 user error,
2 numerical or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import jsonio
from .demos import DEMOS, format_report, run_demo
from .exceptions import DomainError, FrameFormatError, InvalidParams, UserError
from .frames import canonical_dual, canonical_tight, diagnostics
from .linalg import Tolerance
from .orbits import represent
from .search import DEFAULT_LIMIT, ordering_search
from .structured import (
    BandSpec,
    GaborParams,
    block_harmonic_frame,
    dyadic_band_frame,
    exponential_frame,
    exponential_generator,
    gabor_system,
    harmonic_frame,
    harmonic_generator,
    named_basis,
    union_onb_frame,
)

MAKE_KINDS = ("gabor", "harmonic", "exponential", "block-harmonic", "dyadic", "union-onb")


def parse_complex_list(text, what="list"):
    """'1,1+2j,0' -> array; Python complex literal syntax per entry."""
    try:
        return np.array([complex(tok.strip().replace(" ", "")) for tok in text.split(",")])
    except ValueError:
        raise InvalidParams(f"{what}: cannot parse {text!r} as comma-separated numbers") from None


def parse_int_list(text, what="list"):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InvalidParams(f"{what}: expected comma-separated integers, got {text!r}") from None


def parse_bands(text):
    """'0,1:2;2:2' -> BandSpec(((0, 1), 2), ((2,), 2))."""
    bands = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        freqs, sep, red = chunk.partition(":")
        if not sep:
            raise InvalidParams(f"--bands: band {chunk!r} needs the form f1,f2:redundancy")
        try:
            bands.append((tuple(parse_int_list(freqs, "--bands")), int(red)))
        except ValueError:
            raise InvalidParams(f"--bands: bad redundancy in {chunk!r}") from None
    return BandSpec(tuple(bands))


def _write(args, text):
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(args):
    try:
        with open(args.frame, encoding="utf-8") as fh:
            F = jsonio.load_frame(fh.read())
    except OSError as exc:
        raise FrameFormatError(f"cannot read {args.frame}: {exc.strerror}") from None
    if args.tol is not None:
        F = type(F)(F.vectors, F.index_model, Tolerance(zero_tol=args.tol))
    return F


def cmd_analyze(args):
    _write(args, jsonio.dumps(diagnostics(_load(args)).to_dict()))


def cmd_dual(args):
    _write(args, jsonio.dump_frame(canonical_dual(_load(args))))


def cmd_tight(args):
    _write(args, jsonio.dump_frame(canonical_tight(_load(args))))


def cmd_represent(args):
    _write(args, jsonio.dumps(represent(_load(args)).to_dict()))


def cmd_search(args):
    if args.mode == "random" and args.seed is None:
        raise InvalidParams("--seed is required with --mode random")
    F = _load(args)
    res = ordering_search(F, mode=args.mode, limit=args.limit, seed=args.seed,
                          samples=args.samples, workers=args.workers, backend=args.backend)
    _write(args, jsonio.dumps(res.to_dict()))


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InvalidParams(f"make {args.kind}: missing " + ", ".join("--" + n for n in missing))


def cmd_make(args):
    tol = Tolerance(zero_tol=args.tol) if args.tol is not None else Tolerance()
    T = None
    kind = args.kind
    if kind == "harmonic":
        _need(args, "d", "M")
        F = harmonic_frame(args.d, args.M, tol)
        T = harmonic_generator(args.d, args.M)
    elif kind == "exponential":
        _need(args, "N")
        if args.window is None:
            _need(args, "d")
            g = np.ones(args.d)
        else:
            g = parse_complex_list(args.window, "--window")
        F = exponential_frame(g, args.N, tol)
        T = exponential_generator(len(g), args.N)
    elif kind == "gabor":
        _need(args, "d", "a", "b", "window")
        ordering = "raster" if args.ordering in (None, "raster") else parse_int_list(args.ordering, "--ordering")
        p = GaborParams(args.d, args.a, args.b, parse_complex_list(args.window, "--window"), ordering)
        F = gabor_system(p, tol)
    elif kind == "block-harmonic":
        _need(args, "d", "K", "N")
        F, T = block_harmonic_frame(args.d, args.K, args.N, tol)
    elif kind == "dyadic":
        _need(args, "d", "bands")
        F = dyadic_band_frame(parse_bands(args.bands), args.d, tol, allow_subspace=args.allow_subspace)
    elif kind == "union-onb":
        _need(args, "d", "bases")
        bases = [named_basis(name.strip(), args.d) for name in args.bases.split(",")]
        F = union_onb_frame(bases, interleave=args.interleave, tol=tol)
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidParams(f"unknown kind {kind!r}")
    if args.model == "windowed":
        F = F.with_model("windowed")
    if args.with_generator:
        if T is None:
            raise InvalidParams(f"make {kind}: no explicit generator for this kind")
        out = {"frame": jsonio.frame_to_dict(F), "generator": jsonio.matrix_to_json(T)}
        _write(args, jsonio.dumps(out))
    else:
        _write(args, jsonio.dump_frame(F))


def cmd_demo(args):
    names = list(DEMOS) if args.name == "all" else [args.name]
    if args.name != "all" and args.name not in DEMOS:
        raise InvalidParams(f"unknown demo {args.name!r}; known: {', '.join(DEMOS)}")
    reports = [run_demo(n) for n in names]
    _write(args, "".join(format_report(r) for r in reports))
    if args.sidecar:
        with open(args.sidecar, "w", encoding="utf-8") as fh:
            fh.write(json.dumps([r.to_dict() for r in reports], indent=1) + "\n")
    return 0 if all(r.ok for r in reports) else 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="frameorbit",
        description="Finite frame diagnostics and operator-orbit representability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def frame_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("frame", help="frame JSON file")
        p.add_argument("-o", "--output", help="output path (default: stdout)")
        p.add_argument("--tol", type=float, help="override zero_tol")
        p.set_defaults(func=func)
        return p

    frame_cmd("analyze", cmd_analyze, "frame bounds, tightness, excess")
    frame_cmd("dual", cmd_dual, "canonical dual frame")
    frame_cmd("tight", cmd_tight, "canonical tight (Parseval) frame")
    frame_cmd("represent", cmd_represent, "orbit representability in the given ordering")
    s = frame_cmd("search", cmd_search, "search cyclic orderings")
    s.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int)
    s.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--backend", choices=("compiled", "python"),
                   help="search kernel (default: compiled when built)")

    m = sub.add_parser("make", help="construct a structured frame")
    m.add_argument("kind", choices=MAKE_KINDS)
    m.add_argument("-o", "--output")
    m.add_argument("--tol", type=float)
    for flag in ("d", "M", "a", "b", "N", "K"):
        m.add_argument(f"--{flag}", type=int)
    m.add_argument("--window", help="comma-separated entries, e.g. 1,1,0,0 or 1+2j,0")
    m.add_argument("--ordering", help="'raster' or a comma-separated permutation (gabor)")
    m.add_argument("--bands", help="band list, e.g. '0,1:2;2:2' (frequencies:redundancy)")
    m.add_argument("--allow-subspace", action="store_true")
    m.add_argument("--bases", help="comma-separated basis names: identity, dft")
    m.add_argument("--interleave", action="store_true")
    m.add_argument("--model", choices=("cyclic", "windowed"), default="cyclic")
    m.add_argument("--with-generator", action="store_true")
    m.set_defaults(func=cmd_make)

    dm = sub.add_parser("demo", help="run a named scenario")
    dm.add_argument("name", help="one of: " + ", ".join(DEMOS) + ", all")
    dm.add_argument("-o", "--output")
    dm.add_argument("--sidecar", help="write the JSON report here")
    dm.set_defaults(func=cmd_demo)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        rc = args.func(args)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if rc == 3:
        return 2
    return rc or 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
