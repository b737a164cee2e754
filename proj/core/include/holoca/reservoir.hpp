#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "holoca/bit_state.hpp"
#include "holoca/rule.hpp"

namespace holoca {

enum class Injection {
    Overwrite, // mapped cells take the input bit
    Xor,       // mapped cells are XOR-ed with the input bit
};

struct ReservoirConfig {
    RuleTable rule = parse_rule(110);
    std::size_t width = 40;      // L, cells per CA instance
    std::size_t iterations = 4;  // I, states recorded per input step
    std::size_t redundancy = 4;  // R, independent CA instances
    std::uint64_t seed = 0;
    Injection injection = Injection::Overwrite;

    std::size_t feature_dimension() const noexcept { return redundancy * iterations * width; }
};

void validate(const ReservoirConfig& cfg);

// One input sequence: inputs[t] holds the input bits at time t.
using InputSequence = std::vector<std::vector<std::uint8_t>>;

// Seeded placements of `input_width` channels into each of the R instances;
// channel c of instance r is written into cell mapping[r][c].
std::vector<std::vector<std::size_t>> input_mappings(const ReservoirConfig& cfg, std::size_t input_width);

// Runs the reservoir over one sequence from an all-zero state. Row t holds,
// for each instance, the injected state followed by the next I - 1 states
// (I states in all); the carried state is advanced I steps per input.
// Features are 0/1 doubles, rows ordered by time. SizeError if an input is
// wider than L.
Eigen::MatrixXd expand_reservoir(const InputSequence& inputs, const ReservoirConfig& cfg);

struct ReadoutModel {
    Eigen::MatrixXd weights; // feature dim x targets
    double ridge = 0.0;
    // ||(G^T G + rho I) W - G^T Y|| / ||G^T Y|| at the returned solution.
    double normal_equation_residual = 0.0;

    Eigen::MatrixXd predict(const Eigen::MatrixXd& features) const { return features * weights; }
};

// Minimizes ||G W - Y||^2 + rho ||W||^2 through the normal equations with an
// LDL^T factorization plus iterative refinement. SingularityError when
// rho == 0 and G^T G is numerically rank deficient.
ReadoutModel train_readout(const Eigen::MatrixXd& features, const Eigen::MatrixXd& targets, double ridge);

double normal_equation_residual(const Eigen::MatrixXd& features, const Eigen::MatrixXd& targets,
                                const Eigen::MatrixXd& weights, double ridge);

} // namespace holoca
