// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_EVT_EVENTHEADERCNV_H
#define ADL_GEN_EVT_EVENTHEADERCNV_H

#include "Evt/EventHeader.h"
#include "adl/Text.h"

namespace Evt {

struct EventHeaderCnv {
    static void writeOwnText(const ::Evt::EventHeader& obj, std::ostream& out, bool& first) {
        if (!first) { out << ";"; }
        first = false;
        out << "runNumber=";
        out << static_cast<std::int64_t>(obj.m_runNumber);
        if (!first) { out << ";"; }
        first = false;
        out << "eventNumber=";
        out << static_cast<std::int64_t>(obj.m_eventNumber);
        if (!first) { out << ";"; }
        first = false;
        out << "detectorTag=";
        ::adl::text::jsonString(obj.m_detectorTag, out);
    }
    static void writeText(const ::Evt::EventHeader& obj, std::ostream& out) {
        out << "{";
        bool first = true;
        EventHeaderCnv::writeOwnText(obj, out, first);
        out << "}";
    }
};

} // namespace Evt

#endif // ADL_GEN_EVT_EVENTHEADERCNV_H
