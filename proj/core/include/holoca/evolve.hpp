#pragma once

#include <cstddef>
#include <vector>

#include "holoca/bit_state.hpp"
#include "holoca/rule.hpp"

namespace holoca {

// Neighborhood address of every cell: m(i) = sum_o 2^(k_right - o) x_{i+o}.
std::vector<std::uint64_t> neighborhood_addresses(const BitState& x, NeighborhoodSpec spec);

// Direct rule-table update; the oracle for every other evolution path.
// Throws SizeError when L < |N|.
BitState step_reference(const BitState& x, const RuleTable& rule);

// trajectory[0] = x, trajectory[t+1] = step_reference(trajectory[t]).
std::vector<BitState> evolve(const BitState& x, const RuleTable& rule, std::size_t steps);

} // namespace holoca
