// Generated code: do not edit outside the user-extensions region.

#include "Chain/Base.h"

namespace Chain {

std::int32_t Base::baseTag() const { return m_baseTag; }
void Base::setBaseTag(std::int32_t value) { m_baseTag = value; }

// >>> adl:user-extensions begin e3b0c442
// <<< adl:user-extensions end

} // namespace Chain
