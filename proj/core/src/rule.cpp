#include "holoca/rule.hpp"

#include <string>

#include "holoca/error.hpp"

namespace holoca {

void validate(NeighborhoodSpec spec) {
    if (spec.k_left < 0 || spec.k_right < 0)
        throw RangeError("neighborhood radii must be non-negative");
    if (spec.size() > kMaxNeighborhoodSize)
        throw RangeError("neighborhood size " + std::to_string(spec.size()) + " exceeds " +
                         std::to_string(kMaxNeighborhoodSize));
}

RuleTable::RuleTable(NeighborhoodSpec spec, std::vector<std::uint8_t> outputs)
    : spec_(spec), outputs_(std::move(outputs)) {
    validate(spec_);
    if (outputs_.size() != spec_.configurations())
        throw SizeError("rule table needs " + std::to_string(spec_.configurations()) + " outputs, got " +
                        std::to_string(outputs_.size()));
    for (auto bit : outputs_)
        if (bit > 1) throw RangeError("rule outputs must be 0 or 1");
}

std::uint64_t RuleTable::code() const {
    if (outputs_.size() > 64) throw RangeError("rule code does not fit in 64 bits");
    std::uint64_t code = 0;
    for (std::size_t m = 0; m < outputs_.size(); ++m)
        code |= std::uint64_t{outputs_[m]} << m;
    return code;
}

RuleTable parse_rule(std::uint64_t code, NeighborhoodSpec spec) {
    validate(spec);
    const std::size_t n = spec.configurations();
    if (n < 64 && code >= (std::uint64_t{1} << n))
        throw RangeError("rule code " + std::to_string(code) + " out of range [0, 2^" + std::to_string(n) + ")");
    std::vector<std::uint8_t> outputs(n, 0);
    for (std::size_t m = 0; m < n && m < 64; ++m)
        outputs[m] = static_cast<std::uint8_t>((code >> m) & 1u);
    return RuleTable(spec, std::move(outputs));
}

} // namespace holoca
