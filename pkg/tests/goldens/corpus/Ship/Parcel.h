// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_SHIP_PARCEL_H
#define ADL_GEN_SHIP_PARCEL_H

#include <cstdint>
#include <vector>

namespace Store { class Crate; }

namespace Ship {

class Parcel {
public:
    Parcel() = default;
    virtual ~Parcel() = default;
    Parcel(const Parcel&) = delete;  // identity object: not copyable
    Parcel& operator=(const Parcel&) = delete;

    static constexpr std::uint32_t classId() noexcept { return 0x9f3165dau; }

    double mass() const;
    void setMass(double value);

    // relationship: one Store::Crate, inverse 'cargo'
    ::Store::Crate* crate() const;
    void setCrate(::Store::Crate* value);

    // additional member declarations may be placed in the region below
    // >>> adl:user-extensions begin e3b0c442
    // <<< adl:user-extensions end

private:
    friend struct ParcelCnv;
    friend class ::Store::Crate;
    void _adl_attach_crate(::Store::Crate* value);
    void _adl_detach_crate(::Store::Crate* value);

    double m_mass = 0.0;
    ::Store::Crate* m_crate = nullptr;
};

} // namespace Ship

#endif // ADL_GEN_SHIP_PARCEL_H
