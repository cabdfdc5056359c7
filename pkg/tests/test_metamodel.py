"""Model building and resolution: names, types, inheritance, relationships."""

import pytest

from adl.ast import Category
from adl.metamodel import (
    attributes_of,
    compute_class_id,
    is_kind_of,
    linearization,
    methods_of,
    relationships_of,
)

from adl.typedesc import render

from conftest import compile_expecting_errors, compile_text


def _codes(source):
    return [d.code for d in compile_expecting_errors(source)]


def _messages(source):
    return [d.message for d in compile_expecting_errors(source)]


def test_qualified_names_and_indexes():
    model = compile_text(
        "module A { module B { class C { long x; }; enum E { One }; typedef long T; }; };"
    )
    assert "A::B::C" in model.class_index
    assert "A::B::E" in model.enum_index
    assert "A::B::T" in model.typedef_index
    cls = model.class_index["A::B::C"]
    assert cls.name == "C"
    assert cls.module_path == ("A", "B")


def test_modules_merge_across_units():
    from adl.metamodel import build_model, resolve
    from adl.parser import parse_source

    unit1, _ = parse_source("module M { class A { long x; }; };", "one.adl")
    unit2, _ = parse_source("module M { class B { long y; }; };", "two.adl")
    model, diags = build_model([unit1, unit2])
    assert not diags
    model, diags = resolve(model)
    assert not diags
    assert {"M::A", "M::B"} <= set(model.class_index)


def test_duplicate_definition_names_both_positions():
    diags = compile_expecting_errors(
        "module M { class A { long x; }; class A { long y; }; };"
    )
    assert [d.code for d in diags] == ["duplicate-def"]
    assert "first defined at" in diags[0].message


def test_duplicate_member_in_class():
    assert _codes("class A { long x; double x; };") == ["duplicate-member"]


def test_scope_chain_prefers_inner_scope():
    model = compile_text(
        """
        module Out {
          class Point { double a; };
          module In {
            class Point { double b; };
            class User { Point p; };
          };
        };
        """
    )
    user = model.class_index["Out::In::User"]
    assert user.attributes[0].type.name == "Out::In::Point"


def test_unique_global_suffix_lookup():
    model = compile_text(
        """
        module Math { class Vec3 { double x; }; };
        module Phys { class Use { Vec3 v; }; };
        """
    )
    use = model.class_index["Phys::Use"]
    assert use.attributes[0].type.name == "Math::Vec3"


def test_ambiguous_suffix_diagnosed():
    source = """
        module A { class Pt { double x; }; };
        module B { class Pt { double x; }; };
        module C { class Use { Pt p; }; };
    """
    assert "ambiguous-name" in _codes(source)


def test_unknown_type_diagnosed():
    assert _codes("class A { Missing m; };") == ["unknown-type"]


def test_module_used_as_type_diagnosed():
    codes = _codes("module M { class A { long x; }; }; class B { M field; };")
    assert codes == ["unknown-type"]


def test_typedef_chase_to_ground_type():
    model = compile_text(
        "module M { typedef long A; typedef A B; class C { B v; sequence<B> vs; }; };"
    )
    cls = model.class_index["M::C"]
    assert render(cls.attributes[0].type) == "long"
    assert render(cls.attributes[1].type) == "sequence<long>"


def test_typedef_cycle_diagnosed():
    codes = _codes("module M { typedef A B; typedef B A; class C { A v; }; };")
    assert "typedef-cycle" in codes


def test_category_inherited_through_chain():
    model = compile_text(
        """
        module M {
          class Root : DataObject { persistent long x; };
          class Mid : Root { };
          class Leaf : Mid { };
        };
        """
    )
    assert model.class_index["M::Leaf"].category is Category.DATA_OBJECT


def test_category_conflict_between_bases():
    source = """
        module M {
          class A : DataObject { };
          class B : CollectionObject { };
          class C : A, B { };
        };
    """
    assert "category-conflict" in _codes(source)


def test_redeclaring_inherited_category_is_fine():
    model = compile_text(
        "module M { class A : DataObject { }; class B : DataObject, A { }; };"
    )
    assert model.class_index["M::B"].category is Category.DATA_OBJECT


def test_bad_base_extern():
    assert "bad-base" in _codes("extern X; class A : X { };")


def test_bad_base_enum():
    assert "bad-base" in _codes("enum E { One }; class A : E { };")


def test_inheritance_cycle_diagnosed():
    codes = _codes("class A : B { }; class B : A { };")
    assert "inherit-cycle" in codes


def test_diamond_linearization_order():
    model = compile_text(
        """
        module D {
          class Root : DataObject { persistent long r; };
          class Left : Root { persistent long l; };
          class Right : Root { persistent long g; };
          class Join : Left, Right { persistent long j; };
        };
        """
    )
    join = model.class_index["D::Join"]
    assert [c.name for c in linearization(join)] == ["Root", "Left", "Right", "Join"]
    flat = [a.name for a in attributes_of(join, include_inherited=True)]
    assert flat == ["r", "l", "g", "j"]


def test_inherited_member_collision_own_vs_base():
    messages = _messages(
        "module M { class A { long x; }; class B : A { double x; }; };"
    )
    assert any("collides with member inherited from" in m for m in messages)


def test_inherited_member_collision_two_bases():
    messages = _messages(
        """
        module M {
          class A { long x; };
          class B { double x; };
          class C : A, B { };
        };
        """
    )
    assert any("inherits member 'x' from both" in m for m in messages)


def test_shared_diamond_root_is_not_a_collision():
    model = compile_text(
        """
        module M {
          class Root { long x; };
          class L : Root { };
          class R : Root { };
          class J : L, R { };
        };
        """
    )
    flat = [a.name for a in attributes_of(model.class_index["M::J"], include_inherited=True)]
    assert flat == ["x"]


def test_framework_class_cannot_be_value_type():
    source = """
        module M {
          class Obj : DataObject { persistent long x; };
          class Holder { Obj embedded; };
        };
    """
    assert "framework-value-type" in _codes(source)


def test_framework_class_in_sequence_also_rejected():
    source = """
        module M {
          class Obj : DataObject { persistent long x; };
          class Holder { sequence<Obj> items; };
        };
    """
    assert "framework-value-type" in _codes(source)


def test_embed_cycle_direct():
    assert "embed-cycle" in _codes("class A { A self; };")


def test_embed_cycle_indirect():
    source = "class A { B b; }; class B { A a; };"
    assert "embed-cycle" in _codes(source)


def test_sequence_indirection_breaks_embed_cycle():
    model = compile_text("class A { sequence<A> kids; };")
    assert "A" in model.class_index


def test_relationship_on_plain_class_rejected():
    source = """
        module M {
          class A { relationship one B other inverse B::backA; };
          class B : DataObject { relationship one A backA inverse A::other; };
        };
    """
    assert "relationship-category" in _codes(source)


def test_relationship_on_collection_rejected():
    source = """
        module M {
          class A : CollectionObject { relationship one B other inverse B::backA; };
          class B : DataObject { relationship one A backA inverse A::other; };
        };
    """
    codes = _codes(source)
    assert "relationship-category" in codes


def test_relationship_target_must_be_linkable():
    source = """
        module M {
          class Plainish { long x; };
          class A : DataObject { relationship one Plainish p inverse Plainish::q; };
        };
    """
    assert "bad-inverse" in _codes(source)


def test_inverse_qualifier_must_name_target():
    source = """
        module M {
          class A : DataObject { relationship one B other inverse C::backA; };
          class B : DataObject { relationship one A backA inverse A::other; };
          class C : DataObject { };
        };
    """
    assert "bad-inverse" in _codes(source)


def test_inverse_member_must_exist():
    source = """
        module M {
          class A : DataObject { relationship one B other inverse B::missing; };
          class B : DataObject { };
        };
    """
    assert "bad-inverse" in _codes(source)


def test_inverse_must_point_back():
    source = """
        module M {
          class A : DataObject { relationship one B other inverse B::toC; };
          class B : DataObject { relationship one C toC inverse C::fromB; };
          class C : DataObject { relationship one B fromB inverse B::toC; };
        };
    """
    assert "bad-inverse" in _codes(source)


def test_mutual_relationship_resolves():
    model = compile_text(
        """
        module M {
          class A : DataObject { relationship many B items inverse B::owner; };
          class B : ContainedObject { relationship one A owner inverse A::items; };
        };
        """
    )
    a = model.class_index["M::A"]
    rel = a.relationships[0]
    assert rel.target.qualified_name == "M::B"
    assert rel.inverse().name == "owner"
    assert rel.inverse().inverse() is rel


def test_class_ids_assigned_from_names():
    model = compile_text("module Evt { class Track : DataObject { persistent long x; }; };")
    cls = model.class_index["Evt::Track"]
    assert cls.class_id == compute_class_id("Evt::Track") == 0x32236665


def test_is_kind_of_accepts_name_forms(event_model):
    track = event_model.class_index["Evt::Track"]
    assert is_kind_of(track, "Evt::Track")
    assert is_kind_of(track, "Track")
    assert is_kind_of(track, "DataObject")
    assert not is_kind_of(track, "ContainedObject")
    assert not is_kind_of(track, "Evt::Hit")


def test_methods_flattened_with_inheritance():
    model = compile_text(
        """
        module M {
          class A { void base(); };
          class B : A { long own(long v) const; };
        };
        """
    )
    b = model.class_index["M::B"]
    names = [m.name for m in methods_of(b, include_inherited=True)]
    assert names == ["base", "own"]
    own = b.methods[0]
    assert own.returns_void is False
    assert render(own.params[0][1]) == "long"


def test_relationships_flattened_with_inheritance(event_model):
    track = event_model.class_index["Evt::Track"]
    names = [r.name for r in relationships_of(track, include_inherited=True)]
    assert names == ["hits", "startVertex"]


def test_resolve_marks_model(event_model):
    assert event_model.resolved


def test_duplicate_method_params_rejected():
    assert "duplicate-member" in _codes("class A { void go(long x, double x); };")
