"""Batch command-line tool: signals in, frontier/envelope CSVs out."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .errors import (
    EnvelopeError,
    NoNegativePulses,
    NoPositivePulses,
)
from .frontier import (
    envelope_indices,
    interpolate_frontier,
    lower_frontier,
    upper_frontier,
)
from .signal_io import read_csv, read_wav, write_csv
from .types import EnvelopeParams, Signal


def _alpha_arg(text: str) -> str | float:
    if text == "auto":
        return "auto"
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'auto' or a number, got {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError("alpha must be > 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="envelope",
        description="Extract geometric frontiers or the merged envelope of "
        "sampled signals (.wav or .csv) into CSV files.",
    )
    parser.add_argument("inputs", nargs="+", metavar="INPUT",
                        help=".wav or .csv input files")
    parser.add_argument("--mode", choices=("frontiers", "envelope"),
                        default="frontiers",
                        help="frontiers writes .upper/.lower CSVs, envelope a "
                        "single merged-|s| CSV (default: frontiers)")
    parser.add_argument("--alpha", type=_alpha_arg, default="auto",
                        metavar="auto|FLOAT",
                        help="disc radius in scaled units, or 'auto' (default)")
    parser.add_argument("--output-format", choices=("indices", "interpolated"),
                        default="indices",
                        help="indices: frontier members only; interpolated: one "
                        "value per sample (default: indices)")
    parser.add_argument("--channel", type=int, default=0,
                        help="channel to analyze in multi-channel files (default 0)")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="output base path (single input) or directory "
                        "(several inputs); default: next to each input")
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.channel < 0:
        parser.error("--channel must be >= 0")
    return args


def _load_signal(path: Path, channel: int) -> Signal:
    suffix = path.suffix.lower()
    if suffix == ".wav":
        signals, info = read_wav(path.read_bytes())
        if channel >= info.channels:
            raise EnvelopeError(
                f"channel {channel} out of range (file has {info.channels})"
            )
        return signals[channel]
    if suffix == ".csv":
        if channel != 0:
            raise EnvelopeError("CSV inputs have a single channel")
        return read_csv(path.read_text())
    raise EnvelopeError(f"unsupported input extension {path.suffix!r}")


def _out_base(path: Path, args, n_inputs: int) -> tuple[Path, bool]:
    """Base path for outputs plus whether it is an exact file target."""
    if args.out is None:
        return path.with_suffix(""), False
    out = Path(args.out)
    if n_inputs > 1 or out.is_dir():
        out.mkdir(parents=True, exist_ok=True)
        return out / path.stem, False
    # single input with an explicit file path: strip .csv so suffixes stack
    return (out.with_suffix("") if out.suffix == ".csv" else out), True


def _render(signal: Signal, indices: np.ndarray, values: np.ndarray,
            output_format: str) -> str:
    if output_format == "indices":
        return write_csv(zip(indices.tolist(), values.tolist()))
    dense = interpolate_frontier(len(signal), indices, values)
    return write_csv(enumerate(dense.tolist()))


def _process(path: Path, args, params: EnvelopeParams) -> None:
    signal = _load_signal(path, args.channel)
    base, exact = _out_base(path, args, len(args.inputs))
    s = signal.samples
    if args.mode == "envelope":
        indices, _ = envelope_indices(signal, params)
        text = _render(signal, indices, np.abs(s[indices]), args.output_format)
        target = Path(args.out) if exact else base.with_name(base.name + ".env.csv")
        target.write_text(text)
        return
    wrote_any = False
    for side, func, suffix in (
        ("upper", upper_frontier, ".upper.csv"),
        ("lower", lower_frontier, ".lower.csv"),
    ):
        try:
            indices, _ = func(signal, params)
        except (NoPositivePulses, NoNegativePulses) as exc:
            # a one-sided signal is data, not a failure
            print(f"envelope: {path}: no {side} frontier ({exc})", file=sys.stderr)
            continue
        text = _render(signal, indices, s[indices], args.output_format)
        base.with_name(base.name + suffix).write_text(text)
        wrote_any = True
    if not wrote_any:
        raise EnvelopeError("no frontier on either side")


def run(args) -> int:
    if args.alpha == "auto":
        params = EnvelopeParams()
    else:
        params = EnvelopeParams(alpha_mode="manual", alpha=args.alpha)
    failures = 0
    for name in args.inputs:
        path = Path(name)
        try:
            _process(path, args, params)
        except (EnvelopeError, OSError) as exc:
            failures += 1
            print(f"envelope: {path}: {exc}", file=sys.stderr)
    return 1 if failures else 0


def main(argv=None) -> int:
    return run(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
