"""ADL: a compiler toolchain and dynamic-object runtime for a declarative
object description language.

The pipeline has two halves.  The compiler half parses ``.adl`` source into
an AST, builds and resolves a meta-object model, and feeds that model to
three code emitters (C++ data objects, wire-format converters, a reflection
manifest plus scripting shim).  The runtime half loads a reflection manifest
into a dictionary service, creates and mutates described objects without
compiled classes, and reads/writes a self-describing binary payload format.
"""

from .diagnostics import Diagnostic, SourcePos, Severity

__version__ = "0.1.0"

__all__ = ["Diagnostic", "SourcePos", "Severity", "__version__"]
