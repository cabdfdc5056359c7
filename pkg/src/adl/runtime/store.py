"""The transient store: a keyed container of dynamic objects plus the link
operations that keep every bidirectional relationship symmetric.

Links are stored as object keys, not references, so a store serializes
naturally and two stores can be compared structurally.  ``link`` and
``unlink`` maintain the inverse side atomically: validation happens before
any mutation, and a `one`-cardinality endpoint displaces its previous
partner on both sides.
"""

from __future__ import annotations

from typing import Iterator

from ..errors import LinkError, StoreError
from .dictionary import DictionaryService, RelationshipDescriptor
from .objects import DynamicObject


class TransientStore:
    """Keyed in-memory object container bound to one DictionaryService."""

    def __init__(self, service: DictionaryService) -> None:
        self.service = service
        self._objects: dict[str, DynamicObject] = {}

    def __len__(self) -> int:
        return len(self._objects)

    def __contains__(self, key: str) -> bool:
        return key in self._objects

    def keys(self) -> list[str]:
        return list(self._objects)

    def items(self) -> Iterator[tuple[str, DynamicObject]]:
        return iter(self._objects.items())

    def record(self, key: str, obj: DynamicObject) -> None:
        """Register an object under a unique, non-empty key."""
        if not isinstance(key, str) or not key:
            raise StoreError("store key must be a non-empty string")
        if key in self._objects:
            raise StoreError(f"key '{key}' is already recorded")
        self._objects[key] = obj

    def retrieve(self, key: str) -> DynamicObject | None:
        """The object recorded under ``key``, or None when absent."""
        return self._objects.get(key)

    # -- relationship maintenance --

    def _endpoint(self, key: str, why: str) -> DynamicObject:
        obj = self._objects.get(key)
        if obj is None:
            raise LinkError(f"{why} key '{key}' is not recorded in the store")
        return obj

    def _relationship(self, obj: DynamicObject, name: str) -> RelationshipDescriptor:
        rel = self.service.find_relationship(obj.qualified_name, name)
        if rel is None:
            raise LinkError(f"class '{obj.qualified_name}' declares no relationship '{name}'")
        return rel

    def _attach(self, obj: DynamicObject, rel: RelationshipDescriptor, partner_key: str) -> None:
        slot = obj.links[rel.name]
        if rel.many:
            assert isinstance(slot, list)
            if partner_key not in slot:
                slot.append(partner_key)
        else:
            obj.links[rel.name] = partner_key

    def _detach(self, obj: DynamicObject, rel: RelationshipDescriptor, partner_key: str) -> None:
        slot = obj.links[rel.name]
        if rel.many:
            assert isinstance(slot, list)
            if partner_key in slot:
                slot.remove(partner_key)
        elif slot == partner_key:
            obj.links[rel.name] = None

    def link(self, a_key: str, relationship_name: str, b_key: str) -> None:
        """Connect two recorded objects; the inverse side is updated in the
        same step.  A `one` endpoint first unlinks its previous partner."""
        a = self._endpoint(a_key, "source")
        b = self._endpoint(b_key, "target")
        rel = self._relationship(a, relationship_name)
        if not self.service.is_kind_of(b.qualified_name, rel.target):
            raise LinkError(
                f"relationship '{relationship_name}' targets '{rel.target}'; "
                f"'{b.qualified_name}' is not that class or a subclass"
            )
        inverse = self.service.find_relationship(rel.target, rel.inverse)
        if inverse is None:
            raise LinkError(
                f"target class '{rel.target}' declares no inverse relationship '{rel.inverse}'"
            )
        if not rel.many:
            previous = a.links[rel.name]
            if previous is not None and previous != b_key:
                self.unlink(a_key, relationship_name, previous)
        if not inverse.many:
            previous = b.links[inverse.name]
            if previous is not None and previous != a_key:
                self.unlink(b_key, inverse.name, previous)
        self._attach(a, rel, b_key)
        self._attach(b, inverse, a_key)

    def unlink(self, a_key: str, relationship_name: str, b_key: str) -> None:
        """Disconnect two linked objects on both sides."""
        a = self._endpoint(a_key, "source")
        b = self._endpoint(b_key, "target")
        rel = self._relationship(a, relationship_name)
        inverse = self.service.find_relationship(rel.target, rel.inverse)
        if inverse is None:
            raise LinkError(
                f"target class '{rel.target}' declares no inverse relationship '{rel.inverse}'"
            )
        linked = (
            b_key in a.links[rel.name] if rel.many else a.links[rel.name] == b_key  # type: ignore[operator]
        )
        if not linked:
            raise LinkError(f"'{a_key}' has no '{relationship_name}' link to '{b_key}'")
        self._detach(a, rel, b_key)
        self._detach(b, inverse, a_key)


def record(store: TransientStore, key: str, obj: DynamicObject) -> None:
    store.record(key, obj)


def retrieve(store: TransientStore, key: str) -> DynamicObject | None:
    return store.retrieve(key)


def link(store: TransientStore, a_key: str, relationship_name: str, b_key: str) -> None:
    store.link(a_key, relationship_name, b_key)


def unlink(store: TransientStore, a_key: str, relationship_name: str, b_key: str) -> None:
    store.unlink(a_key, relationship_name, b_key)
