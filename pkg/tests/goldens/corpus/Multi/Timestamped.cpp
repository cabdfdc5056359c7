// Generated code: do not edit outside the user-extensions region.

#include "Multi/Timestamped.h"

namespace Multi {

std::int64_t Timestamped::when() const { return m_when; }
void Timestamped::setWhen(std::int64_t value) { m_when = value; }

// >>> adl:user-extensions begin e3b0c442
// <<< adl:user-extensions end

} // namespace Multi
