#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "holoca/reservoir.hpp"

namespace holoca {

enum class TaskKind {
    FiveBitMemory,  // recall 5 bits after a distractor period
    TemporalParity, // y_t = u_t ^ u_{t-1} ^ ... ^ u_{t-delay}
    TemporalDensity // y_t = 1 iff more than delay of u_{t-2 delay .. t} are 1
};

std::string_view to_string(TaskKind kind);
TaskKind task_kind_from_string(std::string_view name);

struct TaskSpec {
    TaskKind kind = TaskKind::TemporalParity;
    // Parity/density: look-back delay. Five-bit memory: distractor period.
    std::size_t delay = 3;
    // Parity/density only.
    std::size_t sequence_length = 200;
    std::size_t trials = 25;
    double train_fraction = 0.8;
    double ridge = 1e-2;
};

// A task instance: per-sequence inputs, targets and which rows are scored.
struct TaskDataset {
    std::size_t input_width = 0;
    std::size_t output_width = 0;
    std::vector<InputSequence> inputs;
    std::vector<std::vector<std::vector<std::uint8_t>>> targets;
    // scored[s][t] is false for rows without a defined target (warm-up).
    std::vector<std::vector<std::uint8_t>> scored;
    // Sequences [0, train_count) train the readout, the rest are tested.
    // The five-bit task trains and tests on its full 32-sequence set.
    std::size_t train_count = 0;
    bool evaluate_on_training_set = false;
};

TaskDataset generate_task(const TaskSpec& spec, std::uint64_t seed);

struct ConfusionCounts {
    std::uint64_t true_positive = 0;
    std::uint64_t true_negative = 0;
    std::uint64_t false_positive = 0;
    std::uint64_t false_negative = 0;
};

struct TaskMetrics {
    double accuracy = 0.0;
    std::vector<double> per_output_accuracy;
    std::vector<ConfusionCounts> confusion;
    // Five-bit memory: sequences whose whole recall window is correct.
    std::size_t perfect_sequences = 0;
    std::size_t evaluated_sequences = 0;
    double train_normal_equation_residual = 0.0;
    std::size_t feature_dimension = 0;
};

// Expands every sequence through the reservoir, fits a ridge readout with a
// bias column on the training rows and scores the test rows (threshold 0.5,
// ties to 0).
TaskMetrics run_task(const TaskSpec& spec, const ReservoirConfig& cfg, std::uint64_t seed);

// Same pipeline with the raw input bits as features (no CA expansion).
TaskMetrics run_raw_baseline(const TaskSpec& spec, std::uint64_t seed);

} // namespace holoca
