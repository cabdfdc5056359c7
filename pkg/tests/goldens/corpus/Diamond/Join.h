// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_DIAMOND_JOIN_H
#define ADL_GEN_DIAMOND_JOIN_H

#include <cstdint>
#include <string>
#include "Diamond/Left.h"
#include "Diamond/Right.h"

namespace Diamond {

class Join : public virtual ::Diamond::Left, public virtual ::Diamond::Right {
public:
    Join() = default;
    virtual ~Join() = default;
    Join(const Join&) = delete;  // identity object: not copyable
    Join& operator=(const Join&) = delete;

    static constexpr std::uint32_t classId() noexcept { return 0x67f69aa7u; }

    const std::string& joinTag() const;
    void setJoinTag(const std::string& value);

    // additional member declarations may be placed in the region below
    // >>> adl:user-extensions begin e3b0c442
    // <<< adl:user-extensions end

private:
    friend struct JoinCnv;

    std::string m_joinTag;
};

} // namespace Diamond

#endif // ADL_GEN_DIAMOND_JOIN_H
