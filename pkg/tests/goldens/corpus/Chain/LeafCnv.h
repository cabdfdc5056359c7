// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_CHAIN_LEAFCNV_H
#define ADL_GEN_CHAIN_LEAFCNV_H

#include "Chain/BaseCnv.h"
#include "Chain/Leaf.h"
#include "Chain/MiddleCnv.h"
#include "adl/Wire.h"

namespace Chain {

struct LeafCnv {
    static void writeOwnRecord(const ::Chain::Leaf& obj, ::adl::wire::Writer& out) {
        out.str(obj.m_leafName);
    }
    static void readOwnRecord(::Chain::Leaf& obj, ::adl::wire::Reader& in) {
        obj.m_leafName = in.str();
    }
    static void writeOwnValue(const ::Chain::Leaf& obj, ::adl::wire::Writer& out) {
        out.str(obj.m_leafName);
    }
    static void readOwnValue(::Chain::Leaf& obj, ::adl::wire::Reader& in) {
        obj.m_leafName = in.str();
    }
    static void writeRecord(const ::Chain::Leaf& obj, ::adl::wire::Writer& out) {
        ::Chain::BaseCnv::writeOwnRecord(obj, out);
        ::Chain::MiddleCnv::writeOwnRecord(obj, out);
        LeafCnv::writeOwnRecord(obj, out);
    }
    static void readRecord(::Chain::Leaf& obj, ::adl::wire::Reader& in) {
        ::Chain::BaseCnv::readOwnRecord(obj, in);
        ::Chain::MiddleCnv::readOwnRecord(obj, in);
        LeafCnv::readOwnRecord(obj, in);
    }
    static void writeValue(const ::Chain::Leaf& obj, ::adl::wire::Writer& out) {
        ::Chain::BaseCnv::writeOwnValue(obj, out);
        ::Chain::MiddleCnv::writeOwnValue(obj, out);
        LeafCnv::writeOwnValue(obj, out);
    }
    static void readValue(::Chain::Leaf& obj, ::adl::wire::Reader& in) {
        ::Chain::BaseCnv::readOwnValue(obj, in);
        ::Chain::MiddleCnv::readOwnValue(obj, in);
        LeafCnv::readOwnValue(obj, in);
    }
};

} // namespace Chain

#endif // ADL_GEN_CHAIN_LEAFCNV_H
