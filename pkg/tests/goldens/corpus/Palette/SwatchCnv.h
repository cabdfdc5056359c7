// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_PALETTE_SWATCHCNV_H
#define ADL_GEN_PALETTE_SWATCHCNV_H

#include "Palette/Swatch.h"
#include "adl/Wire.h"

namespace Palette {

struct SwatchCnv {
    static void writeOwnRecord(const ::Palette::Swatch& obj, ::adl::wire::Writer& out) {
        out.i32(static_cast<std::int32_t>(obj.m_primary));
        out.i32(static_cast<std::int32_t>(obj.m_tone));
        out.u32(static_cast<std::uint32_t>(obj.m_ring.size()));
        for (const auto& e0 : obj.m_ring) {
            out.i32(static_cast<std::int32_t>(e0));
        }
    }
    static void readOwnRecord(::Palette::Swatch& obj, ::adl::wire::Reader& in) {
        obj.m_primary = static_cast<::Palette::Color>(in.i32());
        obj.m_tone = static_cast<::Palette::Shade>(in.i32());
        {
            const std::uint32_t n0 = in.u32();
            obj.m_ring.clear();
            obj.m_ring.reserve(n0);
            for (std::uint32_t i0 = 0; i0 < n0; ++i0) {
                ::Palette::Color v0{};
                v0 = static_cast<::Palette::Color>(in.i32());
                obj.m_ring.push_back(v0);
            }
        }
    }
    static void writeOwnValue(const ::Palette::Swatch& obj, ::adl::wire::Writer& out) {
        out.i32(static_cast<std::int32_t>(obj.m_primary));
        out.i32(static_cast<std::int32_t>(obj.m_tone));
        out.u32(static_cast<std::uint32_t>(obj.m_ring.size()));
        for (const auto& e0 : obj.m_ring) {
            out.i32(static_cast<std::int32_t>(e0));
        }
    }
    static void readOwnValue(::Palette::Swatch& obj, ::adl::wire::Reader& in) {
        obj.m_primary = static_cast<::Palette::Color>(in.i32());
        obj.m_tone = static_cast<::Palette::Shade>(in.i32());
        {
            const std::uint32_t n0 = in.u32();
            obj.m_ring.clear();
            obj.m_ring.reserve(n0);
            for (std::uint32_t i0 = 0; i0 < n0; ++i0) {
                ::Palette::Color v0{};
                v0 = static_cast<::Palette::Color>(in.i32());
                obj.m_ring.push_back(v0);
            }
        }
    }
    static void writeRecord(const ::Palette::Swatch& obj, ::adl::wire::Writer& out) {
        SwatchCnv::writeOwnRecord(obj, out);
    }
    static void readRecord(::Palette::Swatch& obj, ::adl::wire::Reader& in) {
        SwatchCnv::readOwnRecord(obj, in);
    }
    static void writeValue(const ::Palette::Swatch& obj, ::adl::wire::Writer& out) {
        SwatchCnv::writeOwnValue(obj, out);
    }
    static void readValue(::Palette::Swatch& obj, ::adl::wire::Reader& in) {
        SwatchCnv::readOwnValue(obj, in);
    }
};

} // namespace Palette

#endif // ADL_GEN_PALETTE_SWATCHCNV_H
