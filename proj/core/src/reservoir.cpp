#include "holoca/reservoir.hpp"

#include <random>
#include <string>

#include "holoca/error.hpp"
#include "holoca/evolve.hpp"

namespace holoca {

void validate(const ReservoirConfig& cfg) {
    if (cfg.iterations < 1) throw ConfigurationError("reservoir needs at least one iteration per input");
    if (cfg.redundancy < 1) throw ConfigurationError("reservoir needs at least one instance");
    if (cfg.width < static_cast<std::size_t>(cfg.rule.spec().size()))
        throw SizeError("reservoir width smaller than the neighborhood");
}

std::vector<std::vector<std::size_t>> input_mappings(const ReservoirConfig& cfg, std::size_t input_width) {
    if (input_width > cfg.width)
        throw SizeError("input width " + std::to_string(input_width) + " exceeds reservoir width " +
                        std::to_string(cfg.width));
    // Partial Fisher-Yates on raw engine output; std::uniform_int_distribution
    // is implementation-defined and would break cross-platform reproducibility.
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::vector<std::size_t>> mappings;
    mappings.reserve(cfg.redundancy);
    for (std::size_t r = 0; r < cfg.redundancy; ++r) {
        std::vector<std::size_t> cells(cfg.width);
        for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = i;
        for (std::size_t i = 0; i < input_width; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng() % (cfg.width - i));
            std::swap(cells[i], cells[j]);
        }
        cells.resize(input_width);
        mappings.push_back(std::move(cells));
    }
    return mappings;
}

Eigen::MatrixXd expand_reservoir(const InputSequence& inputs, const ReservoirConfig& cfg) {
    validate(cfg);
    std::size_t input_width = 0;
    for (const auto& u : inputs) input_width = std::max(input_width, u.size());
    const auto mappings = input_mappings(cfg, input_width);

    const std::size_t L = cfg.width;
    const std::size_t I = cfg.iterations;
    Eigen::MatrixXd features = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(inputs.size()),
                                                     static_cast<Eigen::Index>(cfg.feature_dimension()));
    std::vector<BitState> states(cfg.redundancy, BitState(L));

    for (std::size_t t = 0; t < inputs.size(); ++t) {
        const auto& u = inputs[t];
        for (std::size_t r = 0; r < cfg.redundancy; ++r) {
            BitState s = states[r];
            for (std::size_t c = 0; c < u.size(); ++c) {
                const std::size_t cell = mappings[r][c];
                const bool bit = u[c] != 0;
                s.set(cell, cfg.injection == Injection::Overwrite ? bit : (s[cell] != 0) != bit);
            }
            for (std::size_t i = 0; i < I; ++i) {
                const auto base = static_cast<Eigen::Index>((r * I + i) * L);
                for (std::size_t j = 0; j < L; ++j)
                    features(static_cast<Eigen::Index>(t), base + static_cast<Eigen::Index>(j)) = s[j];
                s = step_reference(s, cfg.rule);
            }
            states[r] = std::move(s);
        }
    }
    return features;
}

double normal_equation_residual(const Eigen::MatrixXd& features, const Eigen::MatrixXd& targets,
                                const Eigen::MatrixXd& weights, double ridge) {
    const Eigen::MatrixXd rhs = features.transpose() * targets;
    const Eigen::MatrixXd lhs = features.transpose() * (features * weights) + ridge * weights;
    const double scale = rhs.norm();
    const double diff = (lhs - rhs).norm();
    return scale == 0.0 ? diff : diff / scale;
}

ReadoutModel train_readout(const Eigen::MatrixXd& features, const Eigen::MatrixXd& targets, double ridge) {
    if (features.rows() != targets.rows())
        throw SizeError("features have " + std::to_string(features.rows()) + " rows, targets " +
                        std::to_string(targets.rows()));
    if (!(ridge >= 0.0)) throw RangeError("ridge coefficient must be non-negative");

    const Eigen::Index d = features.cols();
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(d, d);
    gram.selfadjointView<Eigen::Lower>().rankUpdate(features.transpose());
    gram = gram.selfadjointView<Eigen::Lower>();
    gram.diagonal().array() += ridge;
    const Eigen::MatrixXd rhs = features.transpose() * targets;

    Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    if (ldlt.info() != Eigen::Success) throw SingularityError("normal equations could not be factorized");
    if (d > 0) {
        const auto diag = ldlt.vectorD().cwiseAbs();
        const double largest = diag.maxCoeff();
        if (!(diag.minCoeff() > 1e-12 * std::max(largest, 1.0)))
            throw SingularityError("feature Gram matrix is singular; increase the ridge coefficient");
    }

    ReadoutModel model;
    model.ridge = ridge;
    model.weights = ldlt.solve(rhs);
    const double scale = rhs.norm();
    // Iterative refinement against the assembled system.
    for (int pass = 0; pass < 4 && scale > 0.0; ++pass) {
        const Eigen::MatrixXd residual = rhs - gram * model.weights;
        if (residual.norm() <= 1e-13 * scale) break;
        model.weights += ldlt.solve(residual);
    }
    model.normal_equation_residual = normal_equation_residual(features, targets, model.weights, ridge);
    return model;
}

} // namespace holoca
