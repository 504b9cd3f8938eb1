"""Compile the C-ABI shared library with the system C compiler."""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
from pathlib import Path

SOURCE = Path(__file__).with_name("envelope_ffi.c")
DEFAULT_OUTPUT = Path(__file__).with_name("libenvelope.so")


def build_library(output: Path | None = None, compiler: str | None = None) -> Path:
    """Build libenvelope.so next to this module (or at `output`)."""
    output = Path(output) if output else DEFAULT_OUTPUT
    cc = compiler or os.environ.get("CC", "cc")
    cmd = [cc, "-O2", "-shared", "-fPIC", "-o", str(output), str(SOURCE), "-lm"]
    subprocess.run(cmd, check=True)
    return output


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="python -m envelope_kit.ffi.build",
        description="Compile the envelope C-ABI shared library.",
    )
    parser.add_argument("-o", "--output", default=None,
                        help=f"output path (default: {DEFAULT_OUTPUT})")
    parser.add_argument("--cc", default=None, help="C compiler (default: $CC or cc)")
    args = parser.parse_args(argv)
    path = build_library(args.output, args.cc)
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
