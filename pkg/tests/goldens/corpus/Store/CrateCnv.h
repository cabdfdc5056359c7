// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_STORE_CRATECNV_H
#define ADL_GEN_STORE_CRATECNV_H

#include "Store/Crate.h"
#include "adl/Wire.h"

namespace Store {

struct CrateCnv {
    static void writeOwnRecord(const ::Store::Crate& obj, ::adl::wire::Writer& out) {
        out.str(obj.m_code);
    }
    static void readOwnRecord(::Store::Crate& obj, ::adl::wire::Reader& in) {
        obj.m_code = in.str();
    }
    static void writeOwnValue(const ::Store::Crate& obj, ::adl::wire::Writer& out) {
        out.str(obj.m_code);
    }
    static void readOwnValue(::Store::Crate& obj, ::adl::wire::Reader& in) {
        obj.m_code = in.str();
    }
    static void writeRecord(const ::Store::Crate& obj, ::adl::wire::Writer& out) {
        CrateCnv::writeOwnRecord(obj, out);
    }
    static void readRecord(::Store::Crate& obj, ::adl::wire::Reader& in) {
        CrateCnv::readOwnRecord(obj, in);
    }
    static void writeValue(const ::Store::Crate& obj, ::adl::wire::Writer& out) {
        CrateCnv::writeOwnValue(obj, out);
    }
    static void readValue(::Store::Crate& obj, ::adl::wire::Reader& in) {
        CrateCnv::readOwnValue(obj, in);
    }
};

} // namespace Store

#endif // ADL_GEN_STORE_CRATECNV_H
