"""Plain-text file formats with versioned headers.

Every file starts with a header line ``<kind> v<version> key=value ...``
followed by a body. Line endings are written as LF and ``CRLF`` is accepted
on input.

Instance file::

    hardstrings-instance v1 mode=hamming k=1 d=4 count=2 encoding=compact
    0000
    0011

Gap file (body: the gap)::

    hardstrings-gap v1 d=2 mode=mismatch encoding=compact

Text file (body: the gap, then the text)::

    hardstrings-text v1 mode=hamming d=2 count=2 gap_mode=mismatch encoding=compact
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from hardstrings.errors import FormatError, HardStringsError
from hardstrings.gapstrings import GapMode, GapString
from hardstrings.instance import Instance, Mode
from hardstrings.reduction import TextArtifact, block_start
from hardstrings.strings import DOLLAR, HASH, SymbolString, concat

VERSION = 1
ENCODINGS = ("compact", "tokens")


@dataclass(frozen=True)
class InstanceFile:
    instance: Instance
    d: int
    encoding: str = "compact"
    version: int = VERSION

    def __post_init__(self):
        if self.encoding not in ENCODINGS:
            raise FormatError(f"unknown encoding {self.encoding!r}")
        if self.instance.strings and self.instance.d != self.d:
            raise FormatError(f"declared d={self.d} but strings have length {self.instance.d}")

    @classmethod
    def of(cls, inst: Instance, encoding: str = "auto", d: int | None = None) -> "InstanceFile":
        return cls(inst, inst.d if d is None else d, _choose_encoding(inst.strings, encoding))


def _choose_encoding(strings, encoding: str) -> str:
    if encoding == "auto":
        return "compact" if all(s.is_compact for s in strings) else "tokens"
    if encoding not in ENCODINGS:
        raise FormatError(f"unknown encoding {encoding!r}")
    if encoding == "compact" and not all(s.is_compact for s in strings):
        raise FormatError("compact encoding needs every symbol in {0,1,$,#}")
    return encoding


def _header(kind: str, **fields) -> str:
    items = " ".join(f"{k}={v}" for k, v in fields.items())
    return f"hardstrings-{kind} v{VERSION} {items}"


def _parse_header(line: str, kind: str) -> dict[str, str]:
    parts = line.split()
    if len(parts) < 2 or parts[0] != f"hardstrings-{kind}":
        raise FormatError(f"expected a hardstrings-{kind} header, got {line[:60]!r}")
    if parts[1] != f"v{VERSION}":
        raise FormatError(f"unsupported format version {parts[1]!r}")
    fields = {}
    for item in parts[2:]:
        key, sep, value = item.partition("=")
        if not sep:
            raise FormatError(f"malformed header field {item!r}")
        fields[key] = value
    return fields


def _field(fields: dict[str, str], key: str, kind=str):
    try:
        return kind(fields[key])
    except KeyError:
        raise FormatError(f"header is missing {key}=") from None
    except ValueError as exc:
        raise FormatError(f"bad header value {key}={fields[key]!r}") from exc


def _decode(line: str, encoding: str) -> SymbolString:
    try:
        if encoding == "compact":
            if any(ch.isspace() for ch in line):
                raise FormatError(f"whitespace in compact line {line!r}")
            s = SymbolString.parse(line)
            if not s.is_compact:
                raise FormatError(f"line {line!r} is not compact")
            return s
        return SymbolString.parse(line)
    except HardStringsError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from exc


def _lines(text: str) -> list[str]:
    text = text.replace("\r\n", "\n")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


# -- instances ----------------------------------------------------------------

def dumps_instance(inst: Instance, encoding: str = "auto", d: int | None = None) -> str:
    encoding = _choose_encoding(inst.strings, encoding)
    d = inst.d if d is None else d
    if inst.strings and inst.d != d:
        raise FormatError(f"declared d={d} but strings have length {inst.d}")
    head = _header("instance", mode=inst.mode.value, k=inst.k, d=d,
                   count=len(inst), encoding=encoding)
    return "\n".join([head] + [s.to_text(encoding) for s in inst.strings]) + "\n"


def loads_instance_file(text: str) -> InstanceFile:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty instance file")
    fields = _parse_header(lines[0], "instance")
    mode = _field(fields, "mode")
    if mode not in {m.value for m in Mode}:
        raise FormatError(f"unknown mode {mode!r}")
    k, d, count = (_field(fields, key, int) for key in ("k", "d", "count"))
    encoding = _field(fields, "encoding")
    if encoding not in ENCODINGS:
        raise FormatError(f"unknown encoding {encoding!r}")
    body = lines[1:]
    if len(body) != count:
        raise FormatError(f"header declares {count} strings, body has {len(body)}")
    strings = [_decode(line, encoding) for line in body]
    for i, s in enumerate(strings, start=2):
        if len(s) != d:
            raise FormatError(f"line {i} has length {len(s)}, header declares d={d}")
    try:
        inst = Instance(strings, k, mode)
    except HardStringsError as exc:
        raise FormatError(str(exc)) from exc
    return InstanceFile(inst, d, encoding)


def loads_instance(text: str) -> Instance:
    return loads_instance_file(text).instance


def write_instance(path, inst: Instance, encoding: str = "auto", d: int | None = None) -> None:
    _write(path, dumps_instance(inst, encoding, d))


def read_instance_file(path) -> InstanceFile:
    return loads_instance_file(_read(path))


def read_instance(path) -> Instance:
    return read_instance_file(path).instance


# -- gaps ---------------------------------------------------------------------

def dumps_gap(g: GapString) -> str:
    head = _header("gap", d=g.d, mode=g.mode.value, encoding="compact")
    return f"{head}\n{g.to_text()}\n"


def loads_gap(text: str) -> GapString:
    lines = _lines(text)
    if len(lines) != 2:
        raise FormatError("gap file must have a header and exactly one body line")
    fields = _parse_header(lines[0], "gap")
    d = _field(fields, "d", int)
    mode = _field(fields, "mode")
    if mode not in {m.value for m in GapMode}:
        raise FormatError(f"unknown gap mode {mode!r}")
    symbols = _decode(lines[1], _field(fields, "encoding"))
    try:
        return GapString(symbols, d, GapMode(mode))
    except HardStringsError as exc:
        raise FormatError(str(exc)) from exc


def write_gap(path, g: GapString) -> None:
    _write(path, dumps_gap(g))


def read_gap(path) -> GapString:
    return loads_gap(_read(path))


# -- texts --------------------------------------------------------------------

def dumps_text(art: TextArtifact) -> str:
    encoding = _choose_encoding([art.text], "auto")
    head = _header("text", mode=art.mode.value, d=art.d, count=art.count,
                   gap_mode=art.gap.mode.value, encoding=encoding)
    return "\n".join([head, art.gap.symbols.to_text(encoding), art.text.to_text(encoding)]) + "\n"


def loads_text(text: str) -> TextArtifact:
    lines = _lines(text)
    if len(lines) != 3:
        raise FormatError("text file must have a header, a gap line and a text line")
    fields = _parse_header(lines[0], "text")
    mode = _field(fields, "mode")
    if mode not in {m.value for m in Mode}:
        raise FormatError(f"unknown mode {mode!r}")
    d, count = _field(fields, "d", int), _field(fields, "count", int)
    encoding = _field(fields, "encoding")
    if encoding not in ENCODINGS:
        raise FormatError(f"unknown encoding {encoding!r}")
    try:
        gap = GapString(_decode(lines[1], encoding), d, GapMode(_field(fields, "gap_mode")))
    except (HardStringsError, ValueError) as exc:
        raise FormatError(str(exc)) from exc
    body = _decode(lines[2], encoding)
    if len(body) != (3 * count + 2) * d:
        raise FormatError(f"text length {len(body)} does not match count={count}, d={d}")
    layout = tuple((i, block_start(i, d)) for i in range(1, count + 1))
    blocks = [body[s - 1:s - 1 + d] for _, s in layout]
    parts = [gap.symbols]
    for b in blocks:
        parts += [b, gap.symbols]
    if concat(parts) != body:
        raise FormatError("text is not interleaved with the declared gap")
    if any(DOLLAR in b.codes or HASH in b.codes for b in blocks):
        raise FormatError("a dictionary block uses a gap symbol")
    return TextArtifact(body, gap, d, layout, Mode(mode))


def write_text(path, art: TextArtifact) -> None:
    _write(path, dumps_text(art))


def read_text(path) -> TextArtifact:
    return loads_text(_read(path))


# -- io -----------------------------------------------------------------------

def _write(path, data: str) -> None:
    Path(path).write_text(data, encoding="utf-8", newline="\n")


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")
