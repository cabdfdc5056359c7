"""Code-generating back ends.  Each emitter is a pure function of the
resolved model and an EmitterConfig, producing a deterministic FileSet;
writing to disk (including user-extension merging) is a separate step."""

from .fileset import EmitterConfig, EmitError, FileSet, write_fileset
from .dataobjects import emit_dataobjects
from .converters import emit_converters
from .scripting import emit_manifest

__all__ = [
    "EmitError",
    "EmitterConfig",
    "FileSet",
    "emit_converters",
    "emit_dataobjects",
    "emit_manifest",
    "write_fileset",
]
