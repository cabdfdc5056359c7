// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_GRID_ROWLINECNV_H
#define ADL_GEN_GRID_ROWLINECNV_H

#include "Grid/RowLine.h"
#include "adl/Wire.h"

namespace Grid {

struct RowLineCnv {
    static void writeOwnRecord(const ::Grid::RowLine& obj, ::adl::wire::Writer& out) {
        out.i32(obj.m_rowIndex);
    }
    static void readOwnRecord(::Grid::RowLine& obj, ::adl::wire::Reader& in) {
        obj.m_rowIndex = in.i32();
    }
    static void writeOwnValue(const ::Grid::RowLine& obj, ::adl::wire::Writer& out) {
        out.i32(obj.m_rowIndex);
    }
    static void readOwnValue(::Grid::RowLine& obj, ::adl::wire::Reader& in) {
        obj.m_rowIndex = in.i32();
    }
    static void writeRecord(const ::Grid::RowLine& obj, ::adl::wire::Writer& out) {
        RowLineCnv::writeOwnRecord(obj, out);
    }
    static void readRecord(::Grid::RowLine& obj, ::adl::wire::Reader& in) {
        RowLineCnv::readOwnRecord(obj, in);
    }
    static void writeValue(const ::Grid::RowLine& obj, ::adl::wire::Writer& out) {
        RowLineCnv::writeOwnValue(obj, out);
    }
    static void readValue(::Grid::RowLine& obj, ::adl::wire::Reader& in) {
        RowLineCnv::readOwnValue(obj, in);
    }
};

} // namespace Grid

#endif // ADL_GEN_GRID_ROWLINECNV_H
