// Generated code: do not edit outside the user-extensions region.

#include "Raw/Dump.h"

namespace Raw {

const std::vector<std::uint8_t>& Dump::payload() const { return m_payload; }
void Dump::setPayload(const std::vector<std::uint8_t>& value) { m_payload = value; }

const std::vector<std::vector<std::uint8_t>>& Dump::banks() const { return m_banks; }
void Dump::setBanks(const std::vector<std::vector<std::uint8_t>>& value) { m_banks = value; }

const std::vector<std::uint8_t>& Dump::checksum() const { return m_checksum; }
void Dump::setChecksum(const std::vector<std::uint8_t>& value) { m_checksum = value; }

// >>> adl:user-extensions begin e3b0c442
// <<< adl:user-extensions end

} // namespace Raw
