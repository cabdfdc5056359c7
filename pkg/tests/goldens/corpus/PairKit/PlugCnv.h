// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_PAIRKIT_PLUGCNV_H
#define ADL_GEN_PAIRKIT_PLUGCNV_H

#include "PairKit/Plug.h"
#include "adl/Wire.h"

namespace PairKit {

struct PlugCnv {
    static void writeOwnRecord(const ::PairKit::Plug& obj, ::adl::wire::Writer& out) {
        out.str(obj.m_pin);
    }
    static void readOwnRecord(::PairKit::Plug& obj, ::adl::wire::Reader& in) {
        obj.m_pin = in.str();
    }
    static void writeOwnValue(const ::PairKit::Plug& obj, ::adl::wire::Writer& out) {
        out.str(obj.m_pin);
    }
    static void readOwnValue(::PairKit::Plug& obj, ::adl::wire::Reader& in) {
        obj.m_pin = in.str();
    }
    static void writeRecord(const ::PairKit::Plug& obj, ::adl::wire::Writer& out) {
        PlugCnv::writeOwnRecord(obj, out);
    }
    static void readRecord(::PairKit::Plug& obj, ::adl::wire::Reader& in) {
        PlugCnv::readOwnRecord(obj, in);
    }
    static void writeValue(const ::PairKit::Plug& obj, ::adl::wire::Writer& out) {
        PlugCnv::writeOwnValue(obj, out);
    }
    static void readValue(::PairKit::Plug& obj, ::adl::wire::Reader& in) {
        PlugCnv::readOwnValue(obj, in);
    }
};

} // namespace PairKit

#endif // ADL_GEN_PAIRKIT_PLUGCNV_H
