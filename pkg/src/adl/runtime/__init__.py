"""Runtime half of the package: the class-descriptor registry loaded from a
reflection manifest, dynamic instances with checked field access, the keyed
transient store with inverse-maintained links, and the self-describing
payload codec."""

from .dictionary import (
    AttributeDescriptor,
    ClassDescriptor,
    DictionaryService,
    MethodDescriptor,
    RelationshipDescriptor,
    load_manifest,
)
from .dump import canonical_dump
from .objects import DynamicObject, create_instance, get_field, set_field, zero_value
from .store import TransientStore, link, record, retrieve, unlink
from .codec import (
    ClassSummary,
    PayloadSummary,
    describe_payload,
    deserialize,
    serialize,
)

__all__ = [
    "AttributeDescriptor",
    "ClassDescriptor",
    "ClassSummary",
    "DictionaryService",
    "DynamicObject",
    "MethodDescriptor",
    "PayloadSummary",
    "RelationshipDescriptor",
    "TransientStore",
    "canonical_dump",
    "create_instance",
    "describe_payload",
    "deserialize",
    "get_field",
    "link",
    "load_manifest",
    "record",
    "retrieve",
    "serialize",
    "set_field",
    "unlink",
    "zero_value",
]
