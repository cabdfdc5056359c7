"""FileSet plumbing shared by the back ends.

A FileSet is an ordered, collision-checked collection of relative paths and
byte contents.  Emitters only build FileSets; ``write_fileset`` performs the
disk I/O, merging user-extension regions out of any previously written file
so the emitters themselves stay pure.

A user-extension region is delimited by marker comment lines:

    // >>> adl:user-extensions begin <checksum>
    ...
    // <<< adl:user-extensions end

The checksum is the first 8 hex digits of the SHA-256 of the region body
and is rewritten on every write.  When a file on disk carries a well-formed
region, its body survives regeneration verbatim; files without markers are
replaced whole.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass

from ..errors import AdlError

BEGIN_MARK = ">>> adl:user-extensions begin"
END_MARK = "<<< adl:user-extensions end"

DEFAULT_BANNER = "Generated code: do not edit outside the user-extensions region."


class EmitError(AdlError, ValueError):
    """Model cannot be emitted by this back end (for example, a declared
    method name collides with a generated accessor)."""


@dataclass(frozen=True)
class EmitterConfig:
    output_root: str = "generated"
    header_banner: str = DEFAULT_BANNER
    converter_format: str = "self-describing-binary"  # or "canonical-json"
    scripting_shim: bool = False

    def __post_init__(self) -> None:
        if self.converter_format not in ("self-describing-binary", "canonical-json"):
            raise ValueError(f"unknown converter format '{self.converter_format}'")


class FileSet:
    """Ordered (relativePath, bytes) collection with unique, safe paths."""

    def __init__(self) -> None:
        self._files: dict[str, bytes] = {}

    def add(self, path: str, contents: str | bytes) -> None:
        if not path or path.startswith(("/", "\\")) or ".." in path.split("/"):
            raise ValueError(f"unsafe path '{path}': must be relative with no '..' segments")
        if path in self._files:
            raise EmitError(f"duplicate output path '{path}'")
        self._files[path] = contents.encode("utf-8") if isinstance(contents, str) else contents

    def merge(self, other: "FileSet") -> None:
        for path, contents in other.items():
            self.add(path, contents)

    def paths(self) -> list[str]:
        return list(self._files)

    def get(self, path: str) -> bytes:
        return self._files[path]

    def items(self) -> list[tuple[str, bytes]]:
        return list(self._files.items())

    def __len__(self) -> int:
        return len(self._files)

    def __contains__(self, path: str) -> bool:
        return path in self._files


def region_checksum(body: str) -> str:
    return hashlib.sha256(body.encode("utf-8")).hexdigest()[:8]


def make_region(comment: str = "//", body: str = "") -> str:
    """A marked user-extensions region containing ``body`` (newline-terminated
    lines, or empty)."""
    checksum = region_checksum(body)
    return f"{comment} {BEGIN_MARK} {checksum}\n{body}{comment} {END_MARK}\n"


def split_region(text: str) -> tuple[str, str, str] | None:
    """Split a file into (before, body, after) around its user region, or
    None when the markers are absent or malformed."""
    lines = text.splitlines(keepends=True)
    begin = end = -1
    for i, line in enumerate(lines):
        if BEGIN_MARK in line and begin < 0:
            begin = i
        elif END_MARK in line and begin >= 0:
            end = i
            break
    if begin < 0 or end < 0:
        return None
    before = "".join(lines[: begin + 1])
    body = "".join(lines[begin + 1 : end])
    after = "".join(lines[end:])
    return before, body, after


def merge_regions(new_text: str, old_text: str) -> str:
    """Carry the user-region body of ``old_text`` into ``new_text``.  The
    checksum in the begin marker is updated to match the carried body."""
    new_parts = split_region(new_text)
    old_parts = split_region(old_text)
    if new_parts is None or old_parts is None:
        return new_text
    before, _, after = new_parts
    body = old_parts[1]
    head, _, _ = before.rpartition(BEGIN_MARK)
    before = head + BEGIN_MARK + " " + region_checksum(body) + "\n"
    return before + body + after


def write_fileset(files: FileSet, root: str) -> list[tuple[str, str]]:
    """Write a FileSet under ``root``, preserving user-extension regions of
    existing files.  Returns (path, status) pairs where status is one of
    ``written`` and ``unchanged``."""
    results: list[tuple[str, str]] = []
    for rel_path, contents in files.items():
        target = os.path.join(root, rel_path)
        os.makedirs(os.path.dirname(target) or ".", exist_ok=True)
        if os.path.exists(target):
            with open(target, "rb") as handle:
                old = handle.read()
            try:
                merged = merge_regions(contents.decode("utf-8"), old.decode("utf-8")).encode("utf-8")
            except UnicodeDecodeError:
                merged = contents
            if merged == old:
                results.append((rel_path, "unchanged"))
                continue
            contents = merged
        with open(target, "wb") as handle:
            handle.write(contents)
        results.append((rel_path, "written"))
    return results
