#!/usr/bin/env python3
"""Regenerate the checked-in golden outputs and cross-component fixtures.

Run from the repository root after an intentional change to any emitter or
to the corpus:

    python3 scripts/regenerate_goldens.py

Writes:
    tests/goldens/corpus/    full emission of the joint corpus (all back
                             ends, scripting shim included)
    tests/goldens/toy_text/  canonical-text converters for the toy event
                             model
    tests/fixtures/          reflection manifest, one binary payload, and
                             its canonical dump for the toy event model

Golden tests byte-compare fresh emissions against these trees, so every
diff here is reviewable in version control.
"""

from __future__ import annotations

import shutil
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from adl.backends import EmitterConfig, FileSet, emit_converters, emit_dataobjects, emit_manifest
from adl.manifest import render_manifest
from adl.metamodel import build_model, resolve
from adl.parser import parse_source
from adl.runtime import TransientStore, canonical_dump, create_instance, link, load_manifest, serialize, set_field

CORPUS = REPO / "tests" / "corpus"
GOLDENS = REPO / "tests" / "goldens"
FIXTURES = REPO / "tests" / "fixtures"


def compile_paths(paths: list[Path]):
    units = []
    for path in paths:
        unit, diags = parse_source(path.read_text(encoding="utf-8"), path.name)
        errors = [d for d in diags if d.severity.value == "error"]
        if errors:
            raise SystemExit("\n".join(d.render() for d in errors))
        units.append(unit)
    model, diags = build_model(units)
    errors = [d for d in diags if d.severity.value == "error"]
    if errors:
        raise SystemExit("\n".join(d.render() for d in errors))
    model, diags = resolve(model)
    errors = [d for d in diags if d.severity.value == "error"]
    if errors:
        raise SystemExit("\n".join(d.render() for d in errors))
    return model


def write_tree(files: FileSet, root: Path) -> int:
    if root.exists():
        shutil.rmtree(root)
    for rel_path, contents in files.items():
        target = root / rel_path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(contents)
    return len(files)


def corpus_goldens() -> int:
    model = compile_paths(sorted(CORPUS.glob("*.adl")))
    config = EmitterConfig(scripting_shim=True)
    files = FileSet()
    files.merge(emit_dataobjects(model, config))
    converter_files, _ = emit_converters(model, config)
    files.merge(converter_files)
    files.merge(emit_manifest(model, config))
    return write_tree(files, GOLDENS / "corpus")


def toy_text_goldens() -> int:
    model = compile_paths([CORPUS / "20_event_model.adl"])
    files, _ = emit_converters(model, EmitterConfig(converter_format="canonical-json"))
    return write_tree(files, GOLDENS / "toy_text")


def build_fixture_store(service):
    """The reference store: mirrors tests/conftest.populated_event_store."""
    store = TransientStore(service)
    header = create_instance(service, "Evt::EventHeader")
    set_field(header, "runNumber", 42)
    set_field(header, "eventNumber", 7_000_000_001)
    set_field(header, "detectorTag", "toy")
    store.record("header", header)

    vertex = create_instance(service, "Evt::Vertex")
    set_field(vertex, "position", {"x": 0.5, "y": -0.25, "z": 11.0})
    set_field(vertex, "chi2", 1.5)
    set_field(vertex, "nDof", 4)
    store.record("v0", vertex)

    for i, momentum in enumerate([10.0, 20.5]):
        track = create_instance(service, "Evt::Track")
        set_field(track, "momentum", momentum)
        set_field(track, "curvature", 0.001 * (i + 1))
        set_field(track, "fitQuality", "Good" if i == 0 else "Fair")
        set_field(track, "origin", {"x": 0.0, "y": 0.0, "z": float(i)})
        set_field(track, "covariance", {"packed": [1.0, 0.0, 1.0]})
        store.record(f"t{i}", track)
        link(store, f"t{i}", "startVertex", "v0")

    hit = create_instance(service, "Evt::Hit")
    set_field(hit, "position", {"x": 1.0, "y": 2.0, "z": 3.0})
    set_field(hit, "charge", 0.75)
    set_field(hit, "layerCode", 9)
    store.record("h0", hit)
    link(store, "h0", "track", "t0")
    return store


def build_edge_case_store(service):
    """A second fixture store that concentrates the encodings a reader in
    another language is most likely to get wrong: IEEE 754 specials (NaN,
    signed zero, infinities), integer range extremes, float32 rounding,
    opaque byte payloads (non-empty and empty), non-ASCII and escaped
    strings, empty sequences, and unset link slots."""
    store = TransientStore(service)

    low = create_instance(service, "Evt::EventHeader")
    set_field(low, "runNumber", -2_147_483_648)
    set_field(low, "eventNumber", -(2**63))
    set_field(low, "detectorTag", "")
    store.record("em", low)

    high = create_instance(service, "Evt::EventHeader")
    set_field(high, "runNumber", 2_147_483_647)
    set_field(high, "eventNumber", 2**63 - 1)
    set_field(high, "detectorTag", 'é π🚀 "q"\n\tend')
    store.record("ex", high)

    track = create_instance(service, "Evt::Track")
    set_field(track, "momentum", -0.0)
    set_field(track, "curvature", float("inf"))
    set_field(track, "fitQuality", "Excellent")
    set_field(track, "origin", {"x": float("nan"), "y": -2.5, "z": 1e308})
    set_field(track, "covariance", {"packed": [float("nan"), -0.0, float("inf"), float("-inf"), 0.1, -12345.678]})
    set_field(track, "fitterFlags", -2_147_483_648)
    store.record("t8", track)

    hit = create_instance(service, "Evt::Hit")
    set_field(hit, "position", {"x": 1.5, "y": -2.25, "z": 3.75})
    set_field(hit, "charge", 0.1)
    set_field(hit, "layerCode", 255)
    store.record("h8", hit)
    link(store, "h8", "track", "t8")

    vertex = create_instance(service, "Evt::Vertex")
    set_field(vertex, "chi2", -1.5)
    set_field(vertex, "nDof", -7)
    store.record("v8", vertex)

    bank = create_instance(service, "Evt::TrackCollection")
    set_field(bank, "label", "bank/0")
    set_field(bank, "provenance", bytes.fromhex("deadbeef00ff"))
    store.record("tc0", bank)

    empty_bank = create_instance(service, "Evt::TrackCollection")
    store.record("tc1", empty_bank)
    return store


def fixtures() -> int:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    model = compile_paths([CORPUS / "20_event_model.adl"])
    manifest_text = render_manifest(model)
    service = load_manifest(manifest_text)
    store = build_fixture_store(service)
    (FIXTURES / "reflection.manifest.json").write_text(manifest_text, encoding="utf-8")
    (FIXTURES / "event.add").write_bytes(serialize(service, store.keys(), store))
    (FIXTURES / "event.dump.txt").write_text(canonical_dump(store), encoding="utf-8")

    privileged = load_manifest(manifest_text, privileged=True)
    edge = build_edge_case_store(privileged)
    (FIXTURES / "edge.add").write_bytes(serialize(privileged, edge.keys(), edge))
    (FIXTURES / "edge.dump.txt").write_text(canonical_dump(edge), encoding="utf-8")
    return 5


def main() -> int:
    counts = {
        "tests/goldens/corpus": corpus_goldens(),
        "tests/goldens/toy_text": toy_text_goldens(),
        "tests/fixtures": fixtures(),
    }
    for where, count in counts.items():
        print(f"{where}: {count} files")
    return 0


if __name__ == "__main__":
    sys.exit(main())
