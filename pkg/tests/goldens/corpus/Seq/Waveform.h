// Generated code: do not edit outside the user-extensions region.

#ifndef ADL_GEN_SEQ_WAVEFORM_H
#define ADL_GEN_SEQ_WAVEFORM_H

#include <cstdint>
#include <string>
#include <vector>
#include "Seq/Sample.h"
#include "Seq/Types.h"

namespace Seq {

class Waveform {
public:
    Waveform() = default;
    virtual ~Waveform() = default;
    Waveform(const Waveform&) = delete;  // identity object: not copyable
    Waveform& operator=(const Waveform&) = delete;

    static constexpr std::uint32_t classId() noexcept { return 0xa53d6d83u; }

    const std::vector<std::int16_t>& raw() const;
    void setRaw(const std::vector<std::int16_t>& value);

    const std::vector<std::vector<double>>& bands() const;
    void setBands(const std::vector<std::vector<double>>& value);

    const std::vector<::Seq::Step>& steps() const;
    void setSteps(const std::vector<::Seq::Step>& value);

    const std::vector<::Seq::Sample>& samples() const;
    void setSamples(const std::vector<::Seq::Sample>& value);

    const std::vector<std::string>& notes() const;
    void setNotes(const std::vector<std::string>& value);

    // additional member declarations may be placed in the region below
    // >>> adl:user-extensions begin e3b0c442
    // <<< adl:user-extensions end

private:
    friend struct WaveformCnv;

    std::vector<std::int16_t> m_raw;
    std::vector<std::vector<double>> m_bands;
    std::vector<::Seq::Step> m_steps;
    std::vector<::Seq::Sample> m_samples;
    std::vector<std::string> m_notes;
};

} // namespace Seq

#endif // ADL_GEN_SEQ_WAVEFORM_H
