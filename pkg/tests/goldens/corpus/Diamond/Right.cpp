// Generated code: do not edit outside the user-extensions region.

#include "Diamond/Right.h"

namespace Diamond {

double Right::rightVal() const { return m_rightVal; }
void Right::setRightVal(double value) { m_rightVal = value; }

// >>> adl:user-extensions begin e3b0c442
// <<< adl:user-extensions end

} // namespace Diamond
