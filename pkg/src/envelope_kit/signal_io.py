"""Self-contained WAV (RIFF PCM16 / float32) and CSV readers and writers."""
from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .errors import FormatError, InvalidInput, ParseError
from .types import Signal

PCM16 = "pcm16"
FLOAT32 = "float32"

_FMT_PCM = 1
_FMT_IEEE_FLOAT = 3


@dataclass(frozen=True)
class WavInfo:
    sample_rate: int
    channels: int
    format: str  # "pcm16" or "float32"
    frames: int


def read_wav(data: bytes) -> tuple[list[Signal], WavInfo]:
    """Parse a RIFF/WAVE byte stream into one Signal per channel.

    Accepts PCM 16-bit and IEEE float 32-bit only; unknown chunks are
    skipped by their declared size.
    """
    if len(data) < 12 or data[0:4] != b"RIFF":
        raise FormatError("magic: expected 'RIFF'")
    if data[8:12] != b"WAVE":
        raise FormatError("wave_id: expected 'WAVE'")

    fmt = None
    raw = None
    pos = 12
    while pos + 8 <= len(data):
        cid = data[pos : pos + 4]
        (size,) = struct.unpack_from("<I", data, pos + 4)
        body = data[pos + 8 : pos + 8 + size]
        if len(body) < size:
            raise FormatError(f"chunk {cid!r}: truncated body")
        if cid == b"fmt ":
            if size < 16:
                raise FormatError("fmt: chunk shorter than 16 bytes")
            fmt = struct.unpack_from("<HHIIHH", body, 0)
        elif cid == b"data":
            raw = body
        pos += 8 + size + (size & 1)  # chunks are word-aligned

    if fmt is None:
        raise FormatError("fmt: chunk missing")
    if raw is None:
        raise FormatError("data: chunk missing")

    audio_format, channels, sample_rate, _, block_align, bits = fmt
    if channels < 1:
        raise FormatError("channels: must be >= 1")
    if audio_format == _FMT_PCM:
        if bits != 16:
            raise FormatError(f"bits_per_sample: PCM must be 16, got {bits}")
        samples = np.frombuffer(raw[: len(raw) // (2 * channels) * 2 * channels],
                                dtype="<i2").astype(np.float64) / 32768.0
        kind = PCM16
    elif audio_format == _FMT_IEEE_FLOAT:
        if bits != 32:
            raise FormatError(f"bits_per_sample: float must be 32, got {bits}")
        samples = np.frombuffer(raw[: len(raw) // (4 * channels) * 4 * channels],
                                dtype="<f4").astype(np.float64)
        kind = FLOAT32
    else:
        raise FormatError(f"audio_format: unsupported code {audio_format}")

    frames = samples.size // channels
    samples = samples[: frames * channels].reshape(frames, channels)
    info = WavInfo(sample_rate, channels, kind, frames)
    signals = [Signal(samples[:, c].copy(), sample_rate) for c in range(channels)]
    return signals, info


def write_wav(signal: Signal, format: str = PCM16) -> bytes:
    """Serialize a mono signal as a minimal RIFF/WAVE byte stream."""
    if signal.sample_rate is None:
        raise InvalidInput("write_wav requires a sample_rate")
    s = signal.samples
    if format == PCM16:
        clipped = np.clip(s, -1.0, 1.0 - 1.0 / 32768.0)
        frames = np.round(clipped * 32768.0).astype("<i2").tobytes()
        bits, code = 16, _FMT_PCM
    elif format == FLOAT32:
        frames = s.astype("<f4").tobytes()
        bits, code = 32, _FMT_IEEE_FLOAT
    else:
        raise InvalidInput(f"unknown wav format {format!r}")
    block = bits // 8
    fmt_chunk = struct.pack(
        "<HHIIHH", code, 1, signal.sample_rate, signal.sample_rate * block, block, bits
    )
    data_size = len(frames)
    riff_size = 4 + 8 + len(fmt_chunk) + 8 + data_size + (data_size & 1)
    out = bytearray()
    out += b"RIFF" + struct.pack("<I", riff_size) + b"WAVE"
    out += b"fmt " + struct.pack("<I", len(fmt_chunk)) + fmt_chunk
    out += b"data" + struct.pack("<I", data_size) + frames
    if data_size & 1:
        out += b"\x00"
    return bytes(out)


def read_csv(text: str) -> Signal:
    """One real number per non-empty line; CRLF tolerated."""
    values = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise ParseError(f"not a number: {line!r}", lineno) from None
    if not values:
        raise InvalidInput("CSV input contains no samples")
    return Signal(np.asarray(values))


def format_value(v: float) -> str:
    """Shortest decimal rendering that round-trips to the same float."""
    return repr(float(v)).removesuffix(".0")


def write_csv(rows) -> str:
    """Render (index, value) rows with a header line."""
    lines = ["index,value"]
    for i, v in rows:
        lines.append(f"{int(i)},{format_value(v)}")
    return "\n".join(lines) + "\n"
