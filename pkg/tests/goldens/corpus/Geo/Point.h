// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_GEO_POINT_H
#define ADL_GEN_GEO_POINT_H

#include <cstdint>

namespace Geo {

class Point {
public:
    Point() = default;
    virtual ~Point() = default;

    static constexpr std::uint32_t classId() noexcept { return 0x074b87e8u; }

    double x() const;
    void setX(double value);

    double y() const;
    void setY(double value);

    double z() const;
    void setZ(double value);

    // additional member declarations may be placed in the region below
    // >>> adl:user-extensions begin e3b0c442
    // <<< adl:user-extensions end

private:
    friend struct PointCnv;

    double m_x = 0.0;
    double m_y = 0.0;
    double m_z = 0.0;
};

} // namespace Geo

#endif // ADL_GEN_GEO_POINT_H
