// Generated code: do not edit outside the user-extensions region.

#include "Diamond/Left.h"

namespace Diamond {

double Left::leftVal() const { return m_leftVal; }
void Left::setLeftVal(double value) { m_leftVal = value; }

// >>> adl:user-extensions begin e3b0c442
// <<< adl:user-extensions end

} // namespace Diamond
