#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "holoca/bit_state.hpp"
#include "holoca/circulant.hpp"
#include "holoca/projectors.hpp"
#include "holoca/rule.hpp"

namespace holoca {

// Ternary transition vector r_T[m] = sigma_m - center_bit(m).
class TruncatedRule {
public:
    TruncatedRule(NeighborhoodSpec spec, std::vector<std::int8_t> entries);

    NeighborhoodSpec spec() const noexcept { return spec_; }
    const std::vector<std::int8_t>& entries() const noexcept { return entries_; }
    int operator[](std::size_t m) const { return entries_.at(m); }

    std::int64_t signed_code() const;
    std::uint64_t magnitude_code() const;

private:
    NeighborhoodSpec spec_;
    std::vector<std::int8_t> entries_;
};

// r_T = (r XOR g) - 2 (NOT r AND g) with g the identity-rule outputs.
TruncatedRule truncate_rule(const RuleTable& rule);

// y_i = x_i + r_T[m(i)]; ConsistencyError if a cell leaves {0, 1}.
BitState truncated_step(const BitState& x, const TruncatedRule& truncated);

// Exact fraction num/den.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct RuleStats {
    Fraction lambda;   // fraction of one outputs
    Fraction lambda_t; // fraction of non-idle transitions
    bool ratio_infinite = false;
    double ratio = 0.0; // lambda / lambda_t when finite
};

RuleStats rule_stats(const RuleTable& rule);

// Rules whose transitions are strictly fewer than their ones (lambda_T < lambda).
std::vector<std::uint64_t> classify_efficient_rules();

struct TruncatedCodeRow {
    std::uint64_t rule = 0;
    RuleStats stats;
    std::int64_t signed_code = 0;
    std::uint64_t magnitude_code = 0;
    bool efficient = false;
};

// One row per elementary rule, 0..255.
std::vector<TruncatedCodeRow> truncated_rule_codes();

struct MaskSearchResult {
    ConvolutionMask mask;
    // address m -> target_m - sum_o w_o bit_o(m), nonzero entries only.
    std::map<std::uint64_t, std::int64_t> residuals;
};

// Exhaustive search over integer masks in [-bound, bound]^|N|. Minimizes the
// number of nonzero residuals, then their L1 norm, then the weight tuple
// (w_{-k_left}, ..., w_{+k_right}) lexicographically.
MaskSearchResult search_linear_mask(const std::vector<std::int64_t>& target, NeighborhoodSpec spec, int bound = 2);

struct ProjectorCorrection {
    PatternProjector pattern;
    std::int64_t coefficient;
};

// y = C x + sum_j coeff_j P_j(x), reproducing its source rule exactly.
struct SplitForm {
    NeighborhoodSpec spec;
    ConvolutionMask linear;
    std::vector<ProjectorCorrection> corrections;
};

enum class SplitMode {
    Truncated, // identity + mask fitted to r_T
    Raw,       // mask fitted to sigma directly
};

SplitForm split_linearize(const RuleTable& rule, SplitMode mode, int bound = 2);

// Integer-valued update; ConsistencyError if a cell leaves {0, 1}.
BitState split_step(const BitState& x, const SplitForm& split);

} // namespace holoca
