"""Release acceptance checklist.

One test per shipping criterion, each enforcing its stated budget.  The
tests here deliberately re-use the independently written oracles from the
unit suites (the FNV-1a fold, the hand-run collision search, the invariant
walker, the checked-in goldens) rather than trusting anything the code
under test reports about itself.  Run with ``pytest -v`` to get one
pass/fail line per criterion.
"""

import random
import string
import subprocess
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from adl import cli
from adl.ast import Category
from adl.backends import EmitterConfig, write_fileset
from adl.backends.fileset import region_checksum
from adl.errors import LinkError
from adl.metamodel import compute_class_id
from adl.parser import parse_source
from adl.printer import pretty_print
from adl.runtime import (
    TransientStore,
    create_instance,
    describe_payload,
    deserialize,
    link,
    load_manifest,
    serialize,
    set_field,
    unlink,
)

from _generators import fuzz_inputs, random_event_store, random_unit_source, store_snapshot
from conftest import (
    CORPUS_DIR,
    GOLDEN_DIR,
    compile_expecting_errors,
    compile_files,
    compile_text,
    corpus_paths,
    emit_all,
    errors_of,
    requires_gpp,
    service_for,
)
from test_classid import find_collision_pair, fnv1a_reference
from test_parser import REJECTED
from test_store_links import SOURCE as NET_SOURCE
from test_store_links import _check_invariants


# --- 1. language coverage ------------------------------------------------------------


def test_language_coverage_and_rejection_table():
    """Every extension shows up in the meta-model of a >=20-file corpus and
    every out-of-subset construct is rejected with its named diagnostic,
    all inside five seconds."""
    started = time.monotonic()

    paths = corpus_paths()
    assert len(paths) >= 20
    model = compile_files(paths)
    classes = model.classes()

    categories = {cls.category for cls in classes}
    for category in (
        Category.DATA_OBJECT,
        Category.CONTAINED_OBJECT,
        Category.COLLECTION_OBJECT,
        Category.EXTERN,
    ):
        assert category in categories, f"corpus exercises no {category.value} class"
    assert any(cls.relationships for cls in classes)
    assert any(attr.persistent for cls in classes for attr in cls.attributes)
    assert any(attr.private for cls in classes for attr in cls.attributes)
    for toy in ("Evt::EventHeader", "Evt::Track", "Evt::Vertex", "Evt::Hit"):
        assert model.find_class(toy) is not None, f"toy event model lacks {toy}"

    assert len({needle for _, needle in REJECTED}) >= 8
    for source, needle in REJECTED:
        _, diags = parse_source(source, "<rejection>")
        hits = [
            d for d in diags if d.code == "unsupported-construct" and needle in d.message
        ]
        assert hits, (needle, [d.render() for d in diags])

    assert time.monotonic() - started < 5.0


# --- 2. round-trip fixed point -------------------------------------------------------


def test_round_trip_fixed_point_and_fuzz_resilience():
    """parse -> pretty_print -> parse is the identity on the corpus and on
    500 generated units, and 10,000 adversarial inputs never crash the
    parser."""
    seeds = [path.read_text(encoding="utf-8") for path in corpus_paths()]
    for text in seeds:
        unit, diags = parse_source(text)
        assert not errors_of(diags), [d.render() for d in diags]
        reparsed, rediags = parse_source(pretty_print(unit))
        assert not errors_of(rediags)
        assert reparsed == unit

    rng = random.Random(733_100)
    for i in range(500):
        source = random_unit_source(rng)
        unit, diags = parse_source(source, f"<gen {i}>")
        assert not errors_of(diags), source
        reparsed, rediags = parse_source(pretty_print(unit), f"<gen {i} printed>")
        assert not errors_of(rediags), source
        assert reparsed == unit, source

    count = 0
    for text in fuzz_inputs(random.Random(48_203), 10_000, seeds):
        parse_source(text, "<fuzz>")  # may diagnose freely, must never raise
        count += 1
    assert count == 10_000


# --- 3. class ids --------------------------------------------------------------------


def test_class_ids_match_oracle_and_collisions_are_fatal():
    """Ids agree with an independently written FNV-1a fold on 100 names,
    and a freshly brute-forced genuine collision pair is rejected at
    resolve time."""
    rng = random.Random(811)
    names: set[str] = set()
    while len(names) < 100:
        parts = [
            "".join(rng.choice(string.ascii_letters) for _ in range(rng.randint(1, 12)))
            for _ in range(rng.randint(1, 4))
        ]
        names.add("::".join(parts))
    for name in sorted(names):
        assert compute_class_id(name) == fnv1a_reference(name.encode("utf-8")), name

    first, second = find_collision_pair()
    assert first != second
    assert fnv1a_reference(first.encode()) == fnv1a_reference(second.encode())
    diags = compile_expecting_errors(
        f"class {first} {{ long x; }}; class {second} {{ long y; }};"
    )
    assert [d.code for d in diags] == ["classid-collision"]
    assert first in diags[0].message and second in diags[0].message


# --- 4. serialization ----------------------------------------------------------------


def test_thousand_random_stores_round_trip(event_service_priv):
    """1000 random stores survive serialize/deserialize with persistent
    fields and links intact, payloads self-describe, transients come back
    zeroed, and the summary matches full deserialization -- in under 60 s."""
    started = time.monotonic()
    rng = random.Random(551_202)
    for case in range(1000):
        store = random_event_store(event_service_priv, rng)
        data = serialize(event_service_priv, store.keys(), store)

        restored = deserialize(data)  # no dictionary supplied: self-described
        assert restored.service is not event_service_priv
        assert store_snapshot(restored) == store_snapshot(store), f"case {case}"

        for key, obj in restored.items():
            for attr in restored.service.flattened_attributes(obj.qualified_name):
                if not attr.persistent:
                    zero = type(obj.fields[attr.name])()
                    assert obj.fields[attr.name] == zero, (case, key, attr.name)

        summary = describe_payload(data)
        tally = Counter(obj.qualified_name for _, obj in restored.items())
        assert summary.counts == dict(tally), f"case {case}"
        assert summary.total_objects == len(restored.keys())
        assert summary.version == 1

    assert time.monotonic() - started < 60.0


# --- 5. relationship integrity -------------------------------------------------------


def test_ten_thousand_link_operations_preserve_invariants():
    """10,000 random link/unlink/relink steps leave every inverse
    symmetric and every one-cardinality slot holding the latest partner,
    checked after each step."""
    service = service_for(compile_text(NET_SOURCE))
    store = TransientStore(service)
    hubs = [f"h{i}" for i in range(4)]
    ports = [f"p{i}" for i in range(6)]
    for key in hubs:
        store.record(key, create_instance(service, "Net::Hub"))
    for key in ports:
        store.record(key, create_instance(service, "Net::Port"))

    specs = [
        ("ports", hubs, ports, False),
        ("peer", hubs, hubs, True),
        ("hub", ports, hubs, True),
        ("wired", ports, ports, False),
    ]
    rng = random.Random(90_210)
    linked = unlinked = 0
    for step in range(10_000):
        name, left, right, is_one = rng.choice(specs)
        a, b = rng.choice(left), rng.choice(right)
        if rng.random() < 0.65:
            link(store, a, name, b)
            linked += 1
            if is_one:  # a relink must displace, not accumulate
                assert store.retrieve(a).links[name] == b, (step, a, name, b)
        else:
            try:
                unlink(store, a, name, b)
                unlinked += 1
            except LinkError:
                pass
        _check_invariants(store, service)
    assert linked and unlinked


# --- 6. emitter determinism and goldens ----------------------------------------------


def test_emission_is_deterministic_and_matches_goldens(tmp_path):
    """Emitting twice is byte-identical, the output matches the checked-in
    goldens for the whole corpus, and user-extension regions survive
    re-emission."""
    model = compile_files(corpus_paths())
    config = EmitterConfig(scripting_shim=True)
    first = dict(emit_all(model, config).items())
    second = dict(emit_all(model, config).items())
    assert first == second

    golden_root = GOLDEN_DIR / "corpus"
    golden = {
        p.relative_to(golden_root).as_posix(): p.read_bytes()
        for p in golden_root.rglob("*")
        if p.is_file()
    }
    assert sorted(first) == sorted(golden), "emitted path set drifted from goldens"
    for path, blob in first.items():
        assert blob == golden[path], f"emitted {path} differs from its golden"

    toy_model = compile_files([CORPUS_DIR / "20_event_model.adl"])
    files = emit_all(toy_model)
    write_fileset(files, str(tmp_path))
    header = tmp_path / "Evt" / "Track.h"
    header.write_text(
        header.read_text().replace(
            "    // <<< adl:user-extensions end",
            "    int userWord = 7;\n    // <<< adl:user-extensions end",
        )
    )
    results = dict(write_fileset(emit_all(toy_model), str(tmp_path)))
    assert results["Evt/Track.h"] == "written"  # checksum line refreshed
    merged = header.read_text()
    assert "int userWord = 7;" in merged
    checksum = region_checksum("    int userWord = 7;\n")
    assert f">>> adl:user-extensions begin {checksum}" in merged


@requires_gpp
def test_golden_sources_compile_under_strict_toolchain():
    """Every checked-in golden translation unit compiles (and every
    converter header passes a full syntax check) under the strict flag
    set; skipped when no compiler is installed."""
    root = GOLDEN_DIR / "corpus"
    flags = ["g++", "-std=c++17", "-Wall", "-Wextra", "-Werror", "-I", str(root)]
    jobs = [[*flags, "-fsyntax-only", "-c", str(p)] for p in sorted(root.rglob("*.cpp"))]
    jobs += [
        [*flags, "-fsyntax-only", "-x", "c++", str(p)]
        for p in sorted(root.rglob("*Cnv.h"))
    ]
    assert len(jobs) > 80

    def run(cmd):
        proc = subprocess.run(cmd, capture_output=True, text=True)
        return cmd[-1], proc.returncode, proc.stderr

    with ThreadPoolExecutor(max_workers=8) as pool:
        failures = [(p, err) for p, code, err in pool.map(run, jobs) if code != 0]
    assert not failures, failures[:3]


# --- 7. end-to-end CLI ---------------------------------------------------------------


def _synthetic_model(class_count: int) -> str:
    """A deterministic model with ``class_count`` classes in four-class
    modules: a keyed owner, its contained item, a collection, and a plain
    value type."""
    assert class_count % 4 == 0
    modules = []
    for m in range(class_count // 4):
        modules.append(
            f"""module Big{m:02d} {{
  class Head : DataObject {{
    persistent long runId;
    persistent double weight;
    relationship many Item items inverse Item::head;
  }};
  class Item : ContainedObject {{
    persistent short slot;
    private persistent string note;
    relationship one Head head inverse Head::items;
  }};
  class Bag : CollectionObject {{
    persistent string label;
  }};
  class Extra {{
    persistent octet pad;
  }};
}};"""
        )
    return "\n".join(modules) + "\n"


def test_cli_pipeline_end_to_end(tmp_path, capsys):
    """check -> emit -> serialize (via the dictionary loaded from the
    emitted manifest) -> inspect completes with the documented exit codes,
    under five seconds for a 100-class model."""
    started = time.monotonic()

    source_path = tmp_path / "big.adl"
    source_path.write_text(_synthetic_model(100), encoding="utf-8")
    assert cli.main(["check", str(source_path)]) == 0

    out_root = tmp_path / "gen"
    assert cli.main(["emit", str(source_path), "--out", str(out_root)]) == 0

    # the harness consumes only the emitted manifest, as a client would
    service = load_manifest((out_root / "reflection.manifest.json").read_text())
    assert len(service) == 100
    store = TransientStore(service)
    for m in (0, 7, 24):
        head, item = f"head{m}", f"item{m}"
        store.record(head, create_instance(service, f"Big{m:02d}::Head"))
        store.record(item, create_instance(service, f"Big{m:02d}::Item"))
        set_field(store.retrieve(head), "runId", 1000 + m)
        set_field(store.retrieve(item), "slot", m)
        link(store, head, "items", item)
    payload_path = tmp_path / "big.add"
    payload_path.write_bytes(serialize(service, store.keys(), store))

    assert cli.main(["inspect", str(payload_path)]) == 0
    stdout = capsys.readouterr().out
    assert "payload version 1: 6 objects" in stdout
    assert "Big07::Head" in stdout

    assert time.monotonic() - started < 5.0

    # the documented nonzero codes: 1 = domain error, 2 = usage/i-o error
    assert cli.main(["check", str(tmp_path / "absent.adl")]) == 2
    bad = tmp_path / "bad.add"
    bad.write_bytes(b"NOPE")
    assert cli.main(["inspect", str(bad)]) == 1
    capsys.readouterr()
