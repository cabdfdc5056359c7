// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_GEO_POINTCNV_H
#define ADL_GEN_GEO_POINTCNV_H

#include "Geo/Point.h"
#include "adl/Wire.h"

namespace Geo {

struct PointCnv {
    static void writeOwnRecord(const ::Geo::Point& obj, ::adl::wire::Writer& out) {
        (void)obj; (void)out;
    }
    static void readOwnRecord(::Geo::Point& obj, ::adl::wire::Reader& in) {
        (void)obj; (void)in;
    }
    static void writeOwnValue(const ::Geo::Point& obj, ::adl::wire::Writer& out) {
        out.f64(obj.m_x);
        out.f64(obj.m_y);
        out.f64(obj.m_z);
    }
    static void readOwnValue(::Geo::Point& obj, ::adl::wire::Reader& in) {
        obj.m_x = in.f64();
        obj.m_y = in.f64();
        obj.m_z = in.f64();
    }
    static void writeRecord(const ::Geo::Point& obj, ::adl::wire::Writer& out) {
        PointCnv::writeOwnRecord(obj, out);
    }
    static void readRecord(::Geo::Point& obj, ::adl::wire::Reader& in) {
        PointCnv::readOwnRecord(obj, in);
    }
    static void writeValue(const ::Geo::Point& obj, ::adl::wire::Writer& out) {
        PointCnv::writeOwnValue(obj, out);
    }
    static void readValue(::Geo::Point& obj, ::adl::wire::Reader& in) {
        PointCnv::readOwnValue(obj, in);
    }
};

} // namespace Geo

#endif // ADL_GEN_GEO_POINTCNV_H
