// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_EVT_COVMATRIX_H
#define ADL_GEN_EVT_COVMATRIX_H

#include <cstdint>
#include <vector>

namespace Evt {

class CovMatrix {
public:
    CovMatrix() = default;
    virtual ~CovMatrix() = default;

    static constexpr std::uint32_t classId() noexcept { return 0xd1beb10fu; }

    const std::vector<double>& packed() const;
    void setPacked(const std::vector<double>& value);

    // additional member declarations may be placed in the region below
    // >>> adl:user-extensions begin e3b0c442
    // <<< adl:user-extensions end

private:
    friend struct CovMatrixCnv;

    std::vector<double> m_packed;
};

} // namespace Evt

#endif // ADL_GEN_EVT_COVMATRIX_H
