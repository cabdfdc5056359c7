// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_MULTI_TIMESTAMPED_H
#define ADL_GEN_MULTI_TIMESTAMPED_H

#include <cstdint>

namespace Multi {

class Timestamped {
public:
    Timestamped() = default;
    virtual ~Timestamped() = default;
    Timestamped(const Timestamped&) = delete;  // identity object: not copyable
    Timestamped& operator=(const Timestamped&) = delete;

    static constexpr std::uint32_t classId() noexcept { return 0xc3dba88fu; }

    std::int64_t when() const;
    void setWhen(std::int64_t value);

    // additional member declarations may be placed in the region below
    // >>> adl:user-extensions begin e3b0c442
    // <<< adl:user-extensions end

private:
    friend struct TimestampedCnv;

    std::int64_t m_when = 0;
};

} // namespace Multi

#endif // ADL_GEN_MULTI_TIMESTAMPED_H
