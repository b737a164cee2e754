#include "holoca/tasks.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "holoca/error.hpp"

namespace holoca {

namespace {

constexpr std::size_t kPatternLength = 5;

using Targets = std::vector<std::vector<std::uint8_t>>;

TaskDataset five_bit_memory(std::size_t distractor) {
    if (distractor < 1) throw ConfigurationError("five-bit memory needs a distractor period of at least 1");
    TaskDataset ds;
    ds.input_width = 4;
    ds.output_width = 3;
    const std::size_t length = 2 * kPatternLength + distractor;
    const std::size_t cue = kPatternLength + distractor - 1;
    const std::size_t recall = kPatternLength + distractor;

    for (std::uint32_t pattern = 0; pattern < (1u << kPatternLength); ++pattern) {
        InputSequence u(length, std::vector<std::uint8_t>(4, 0));
        Targets y(length, std::vector<std::uint8_t>(3, 0));
        for (std::size_t t = 0; t < length; ++t) {
            if (t < kPatternLength) {
                const auto bit = static_cast<std::uint8_t>((pattern >> t) & 1u);
                u[t][0] = bit;
                u[t][1] = static_cast<std::uint8_t>(1 - bit);
            } else if (t == cue) {
                u[t][3] = 1;
            } else {
                u[t][2] = 1;
            }
            if (t >= recall) {
                y[t][0] = u[t - recall][0];
                y[t][1] = u[t - recall][1];
            } else {
                y[t][2] = 1;
            }
        }
        ds.inputs.push_back(std::move(u));
        ds.targets.push_back(std::move(y));
        ds.scored.emplace_back(length, 1);
    }
    ds.train_count = ds.inputs.size();
    ds.evaluate_on_training_set = true;
    return ds;
}

TaskDataset windowed_task(const TaskSpec& spec, std::uint64_t seed) {
    if (spec.trials < 2) throw ConfigurationError("windowed tasks need at least two trials");
    const std::size_t window = spec.kind == TaskKind::TemporalParity ? spec.delay + 1 : 2 * spec.delay + 1;
    if (spec.sequence_length <= window) throw ConfigurationError("sequence shorter than the task window");

    TaskDataset ds;
    ds.input_width = 1;
    ds.output_width = 1;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < spec.trials; ++s) {
        InputSequence u(spec.sequence_length, std::vector<std::uint8_t>(1, 0));
        for (auto& v : u) v[0] = static_cast<std::uint8_t>(rng() >> 63);
        Targets y(spec.sequence_length, std::vector<std::uint8_t>(1, 0));
        std::vector<std::uint8_t> scored(spec.sequence_length, 0);
        for (std::size_t t = window - 1; t < spec.sequence_length; ++t) {
            std::size_t ones = 0;
            for (std::size_t k = 0; k < window; ++k) ones += u[t - k][0];
            y[t][0] = static_cast<std::uint8_t>(spec.kind == TaskKind::TemporalParity ? ones & 1u
                                                                                      : ones > spec.delay);
            scored[t] = 1;
        }
        ds.inputs.push_back(std::move(u));
        ds.targets.push_back(std::move(y));
        ds.scored.push_back(std::move(scored));
    }
    const auto train = static_cast<std::size_t>(std::floor(spec.train_fraction * static_cast<double>(spec.trials)));
    ds.train_count = std::clamp<std::size_t>(train, 1, spec.trials - 1);
    return ds;
}

using FeatureFn = std::function<Eigen::MatrixXd(const InputSequence&)>;

// Stacks the scored rows of sequences [begin, end) with a trailing bias column.
void stack_rows(const TaskDataset& ds, const FeatureFn& features, std::size_t begin, std::size_t end,
                Eigen::MatrixXd& g, Eigen::MatrixXd& y, std::vector<std::size_t>& owner) {
    std::vector<Eigen::MatrixXd> blocks;
    std::size_t rows = 0;
    Eigen::Index cols = 0;
    for (std::size_t s = begin; s < end; ++s) {
        blocks.push_back(features(ds.inputs[s]));
        cols = blocks.back().cols();
        for (auto v : ds.scored[s]) rows += v;
    }
    g.resize(static_cast<Eigen::Index>(rows), cols + 1);
    y.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(ds.output_width));
    owner.clear();
    Eigen::Index row = 0;
    for (std::size_t s = begin; s < end; ++s) {
        const auto& f = blocks[s - begin];
        for (std::size_t t = 0; t < ds.inputs[s].size(); ++t) {
            if (!ds.scored[s][t]) continue;
            g.row(row).head(cols) = f.row(static_cast<Eigen::Index>(t));
            g(row, cols) = 1.0;
            for (std::size_t k = 0; k < ds.output_width; ++k)
                y(row, static_cast<Eigen::Index>(k)) = ds.targets[s][t][k];
            owner.push_back(s);
            ++row;
        }
    }
}

TaskMetrics evaluate(const TaskSpec& spec, const TaskDataset& ds, const FeatureFn& features) {
    Eigen::MatrixXd g_train, y_train;
    std::vector<std::size_t> owner_train;
    stack_rows(ds, features, 0, ds.train_count, g_train, y_train, owner_train);
    const auto model = train_readout(g_train, y_train, spec.ridge);

    Eigen::MatrixXd g_test, y_test;
    std::vector<std::size_t> owner;
    if (ds.evaluate_on_training_set) {
        g_test = g_train;
        y_test = y_train;
        owner = owner_train;
    } else {
        stack_rows(ds, features, ds.train_count, ds.inputs.size(), g_test, y_test, owner);
    }
    const Eigen::MatrixXd out = model.predict(g_test);

    TaskMetrics m;
    m.feature_dimension = static_cast<std::size_t>(g_train.cols() - 1);
    m.train_normal_equation_residual = model.normal_equation_residual;
    m.per_output_accuracy.assign(ds.output_width, 0.0);
    m.confusion.assign(ds.output_width, {});
    std::vector<std::uint8_t> sequence_ok(ds.inputs.size(), 1);
    std::uint64_t correct = 0;
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
        for (Eigen::Index k = 0; k < out.cols(); ++k) {
            const bool predicted = out(r, k) > 0.5;
            const bool actual = y_test(r, k) > 0.5;
            auto& c = m.confusion[static_cast<std::size_t>(k)];
            if (predicted && actual) ++c.true_positive;
            else if (!predicted && !actual) ++c.true_negative;
            else if (predicted) ++c.false_positive;
            else ++c.false_negative;
            if (predicted == actual) {
                ++correct;
                m.per_output_accuracy[static_cast<std::size_t>(k)] += 1.0;
            } else {
                sequence_ok[owner[static_cast<std::size_t>(r)]] = 0;
            }
        }
    }
    const auto rows = static_cast<double>(std::max<Eigen::Index>(out.rows(), 1));
    for (auto& a : m.per_output_accuracy) a /= rows;
    m.accuracy = static_cast<double>(correct) / (rows * static_cast<double>(ds.output_width));

    const std::size_t first = ds.evaluate_on_training_set ? 0 : ds.train_count;
    for (std::size_t s = first; s < ds.inputs.size(); ++s) {
        ++m.evaluated_sequences;
        m.perfect_sequences += sequence_ok[s];
    }
    return m;
}

} // namespace

std::string_view to_string(TaskKind kind) {
    switch (kind) {
    case TaskKind::FiveBitMemory: return "five-bit-memory";
    case TaskKind::TemporalParity: return "temporal-parity";
    case TaskKind::TemporalDensity: return "temporal-density";
    }
    return "unknown";
}

TaskKind task_kind_from_string(std::string_view name) {
    if (name == "five-bit-memory") return TaskKind::FiveBitMemory;
    if (name == "temporal-parity") return TaskKind::TemporalParity;
    if (name == "temporal-density") return TaskKind::TemporalDensity;
    throw RangeError("unknown task '" + std::string(name) + "'");
}

TaskDataset generate_task(const TaskSpec& spec, std::uint64_t seed) {
    if (spec.kind == TaskKind::FiveBitMemory) return five_bit_memory(spec.delay);
    return windowed_task(spec, seed);
}

TaskMetrics run_task(const TaskSpec& spec, const ReservoirConfig& cfg, std::uint64_t seed) {
    validate(cfg);
    const auto ds = generate_task(spec, seed);
    return evaluate(spec, ds, [&](const InputSequence& u) { return expand_reservoir(u, cfg); });
}

TaskMetrics run_raw_baseline(const TaskSpec& spec, std::uint64_t seed) {
    const auto ds = generate_task(spec, seed);
    return evaluate(spec, ds, [&](const InputSequence& u) {
        Eigen::MatrixXd f(static_cast<Eigen::Index>(u.size()), static_cast<Eigen::Index>(ds.input_width));
        for (std::size_t t = 0; t < u.size(); ++t)
            for (std::size_t c = 0; c < ds.input_width; ++c)
                f(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(c)) = u[t][c];
        return f;
    });
}

} // namespace holoca
