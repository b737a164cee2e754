#include "holoca/linearize.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "holoca/error.hpp"
#include "holoca/evolve.hpp"

namespace holoca {

namespace {

Fraction reduced(std::int64_t num, std::int64_t den) {
    const auto g = std::gcd(num, den);
    return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

BitState checked_bits(const std::vector<std::int64_t>& values, const char* what) {
    std::vector<std::uint8_t> bits(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0 && values[i] != 1)
            throw ConsistencyError(std::string(what) + ": cell " + std::to_string(i) + " has value " +
                                   std::to_string(values[i]));
        bits[i] = static_cast<std::uint8_t>(values[i]);
    }
    return BitState(std::move(bits));
}

} // namespace

TruncatedRule::TruncatedRule(NeighborhoodSpec spec, std::vector<std::int8_t> entries)
    : spec_(spec), entries_(std::move(entries)) {
    validate(spec_);
    if (entries_.size() != spec_.configurations()) throw SizeError("truncated rule has the wrong length");
    for (auto e : entries_)
        if (e < -1 || e > 1) throw RangeError("truncated rule entries must be -1, 0 or +1");
}

std::int64_t TruncatedRule::signed_code() const {
    std::int64_t code = 0;
    for (std::size_t m = 0; m < entries_.size(); ++m) code += std::int64_t{entries_[m]} << m;
    return code;
}

std::uint64_t TruncatedRule::magnitude_code() const {
    std::uint64_t code = 0;
    for (std::size_t m = 0; m < entries_.size(); ++m)
        if (entries_[m] != 0) code |= std::uint64_t{1} << m;
    return code;
}

TruncatedRule truncate_rule(const RuleTable& rule) {
    const auto spec = rule.spec();
    std::vector<std::int8_t> rt(rule.configurations());
    for (std::size_t m = 0; m < rt.size(); ++m) {
        const int sigma = rule.output(m);
        const int g = center_bit(spec, m);
        rt[m] = static_cast<std::int8_t>((sigma ^ g) - 2 * ((1 - sigma) & g));
        if (rt[m] != sigma - g) throw ConsistencyError("truncation formula disagrees with sigma - center");
    }
    return TruncatedRule(spec, std::move(rt));
}

BitState truncated_step(const BitState& x, const TruncatedRule& truncated) {
    const auto m = neighborhood_addresses(x, truncated.spec());
    std::vector<std::int64_t> y(x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] + truncated[m[i]];
    return checked_bits(y, "truncated step");
}

RuleStats rule_stats(const RuleTable& rule) {
    const auto rt = truncate_rule(rule);
    std::int64_t ones = 0;
    std::int64_t transitions = 0;
    for (std::size_t m = 0; m < rule.configurations(); ++m) {
        ones += rule.output(m);
        transitions += rt[m] != 0;
    }
    const auto n = static_cast<std::int64_t>(rule.configurations());
    RuleStats s;
    s.lambda = reduced(ones, n);
    s.lambda_t = reduced(transitions, n);
    s.ratio_infinite = transitions == 0;
    s.ratio = s.ratio_infinite ? std::numeric_limits<double>::infinity()
                               : static_cast<double>(ones) / static_cast<double>(transitions);
    return s;
}

std::vector<std::uint64_t> classify_efficient_rules() {
    std::vector<std::uint64_t> out;
    for (const auto& row : truncated_rule_codes())
        if (row.efficient) out.push_back(row.rule);
    return out;
}

std::vector<TruncatedCodeRow> truncated_rule_codes() {
    std::vector<TruncatedCodeRow> rows;
    rows.reserve(256);
    for (std::uint64_t code = 0; code < 256; ++code) {
        const auto rule = parse_rule(code);
        const auto rt = truncate_rule(rule);
        TruncatedCodeRow row;
        row.rule = code;
        row.stats = rule_stats(rule);
        row.signed_code = rt.signed_code();
        row.magnitude_code = rt.magnitude_code();
        row.efficient = row.stats.lambda_t.num * row.stats.lambda.den < row.stats.lambda.num * row.stats.lambda_t.den;
        rows.push_back(row);
    }
    return rows;
}

MaskSearchResult search_linear_mask(const std::vector<std::int64_t>& target, NeighborhoodSpec spec, int bound) {
    validate(spec);
    if (bound < 1) throw RangeError("mask search bound must be at least 1");
    if (target.size() != spec.configurations()) throw SizeError("target must have one entry per neighborhood");

    const int n = spec.size();
    const int width = 2 * bound + 1;
    std::vector<int> w(static_cast<std::size_t>(n), -bound);

    std::vector<int> best_w;
    auto best_key = std::make_tuple(std::numeric_limits<std::size_t>::max(), std::numeric_limits<std::int64_t>::max());

    std::size_t total = 1;
    for (int j = 0; j < n; ++j) total *= static_cast<std::size_t>(width);

    // Odometer over w in lexicographic order; the first strict improvement wins ties.
    for (std::size_t it = 0; it < total; ++it) {
        std::size_t count = 0;
        std::int64_t l1 = 0;
        for (std::uint64_t m = 0; m < target.size(); ++m) {
            std::int64_t v = 0;
            for (int j = 0; j < n; ++j) v += w[static_cast<std::size_t>(j)] * address_bit(spec, m, j - spec.k_left);
            const auto r = target[m] - v;
            if (r != 0) {
                ++count;
                l1 += r < 0 ? -r : r;
            }
        }
        const auto key = std::make_tuple(count, l1);
        if (key < best_key) {
            best_key = key;
            best_w = w;
        }
        for (int j = n - 1; j >= 0; --j) {
            auto& d = w[static_cast<std::size_t>(j)];
            if (++d <= bound) break;
            d = -bound;
        }
    }

    std::map<int, std::int64_t> weights;
    for (int j = 0; j < n; ++j) weights[j - spec.k_left] = best_w[static_cast<std::size_t>(j)];
    MaskSearchResult result{ConvolutionMask(std::move(weights)), {}};
    for (std::uint64_t m = 0; m < target.size(); ++m) {
        std::int64_t v = 0;
        for (int o = -spec.k_left; o <= spec.k_right; ++o) v += result.mask.weight(o) * address_bit(spec, m, o);
        if (target[m] != v) result.residuals.emplace(m, target[m] - v);
    }
    return result;
}

SplitForm split_linearize(const RuleTable& rule, SplitMode mode, int bound) {
    const auto spec = rule.spec();
    std::vector<std::int64_t> target(rule.configurations());
    if (mode == SplitMode::Truncated) {
        const auto rt = truncate_rule(rule);
        for (std::size_t m = 0; m < target.size(); ++m) target[m] = rt[m];
    } else {
        for (std::size_t m = 0; m < target.size(); ++m) target[m] = rule.output(m);
    }

    const auto found = search_linear_mask(target, spec, bound);
    SplitForm split{spec, found.mask, {}};
    if (mode == SplitMode::Truncated) split.linear = ConvolutionMask::identity() + found.mask;
    for (const auto& [m, residual] : found.residuals)
        split.corrections.push_back({PatternProjector::from_address(spec, m), residual});
    return split;
}

BitState split_step(const BitState& x, const SplitForm& split) {
    if (x.size() < static_cast<std::size_t>(split.spec.size())) throw SizeError("lattice smaller than the neighborhood");
    auto y = apply_circulant(split.linear, x);
    for (const auto& c : split.corrections) {
        const auto indicator = project_pattern(c.pattern, x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += c.coefficient * indicator[i];
    }
    return checked_bits(y, "split step");
}

} // namespace holoca
