"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import shutil
from pathlib import Path

import pytest

from adl.backends import EmitterConfig, FileSet, emit_converters, emit_dataobjects, emit_manifest
from adl.diagnostics import Severity
from adl.metamodel import MetaModel, build_model, resolve
from adl.parser import parse_source
from adl.runtime import DictionaryService, TransientStore, create_instance, link, load_manifest, set_field

TESTS_DIR = Path(__file__).parent
CORPUS_DIR = TESTS_DIR / "corpus"
GOLDEN_DIR = TESTS_DIR / "goldens"
FIXTURE_DIR = TESTS_DIR / "fixtures"

HAS_GPP = shutil.which("g++") is not None
HAS_NODE = shutil.which("node") is not None

requires_gpp = pytest.mark.skipif(not HAS_GPP, reason="g++ not installed")
requires_node = pytest.mark.skipif(not HAS_NODE, reason="node not installed")


def corpus_paths() -> list[Path]:
    paths = sorted(CORPUS_DIR.glob("*.adl"))
    assert paths, f"corpus missing under {CORPUS_DIR}"
    return paths


def errors_of(diagnostics) -> list:
    return [d for d in diagnostics if d.severity is Severity.ERROR]


def compile_text(source: str, file: str = "<test>") -> MetaModel:
    """Parse, build, and resolve one source; assert it is error-free."""
    unit, diags = parse_source(source, file)
    assert not errors_of(diags), [d.render() for d in diags]
    model, diags = build_model([unit])
    assert not errors_of(diags), [d.render() for d in diags]
    model, diags = resolve(model)
    assert not errors_of(diags), [d.render() for d in diags]
    return model


def compile_expecting_errors(source: str, file: str = "<test>") -> list:
    """Parse, build, and resolve one source; return all diagnostics."""
    unit, diags = parse_source(source, file)
    diagnostics = list(diags)
    if not errors_of(diagnostics):
        model, build_diags = build_model([unit])
        diagnostics.extend(build_diags)
        if not errors_of(diagnostics):
            _, resolve_diags = resolve(model)
            diagnostics.extend(resolve_diags)
    return diagnostics


def compile_files(paths: list[Path]) -> MetaModel:
    units = []
    for path in paths:
        unit, diags = parse_source(path.read_text(encoding="utf-8"), str(path))
        assert not errors_of(diags), [d.render() for d in diags]
        units.append(unit)
    model, diags = build_model(units)
    assert not errors_of(diags), [d.render() for d in diags]
    model, diags = resolve(model)
    assert not errors_of(diags), [d.render() for d in diags]
    return model


def emit_all(model: MetaModel, config: EmitterConfig | None = None) -> FileSet:
    config = config or EmitterConfig()
    files = FileSet()
    files.merge(emit_dataobjects(model, config))
    converter_files, _ = emit_converters(model, config)
    files.merge(converter_files)
    files.merge(emit_manifest(model, config))
    return files


def service_for(model: MetaModel, privileged: bool = False) -> DictionaryService:
    from adl.manifest import render_manifest

    return load_manifest(render_manifest(model), privileged=privileged)


@pytest.fixture(scope="session")
def event_model() -> MetaModel:
    return compile_files([CORPUS_DIR / "20_event_model.adl"])


@pytest.fixture(scope="session")
def event_service(event_model) -> DictionaryService:
    return service_for(event_model)


@pytest.fixture(scope="session")
def event_service_priv(event_model) -> DictionaryService:
    return service_for(event_model, privileged=True)


def populated_event_store(service: DictionaryService) -> TransientStore:
    """Small deterministic store over the toy event model."""
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
