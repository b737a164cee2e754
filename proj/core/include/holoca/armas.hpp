#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "holoca/bit_state.hpp"
#include "holoca/error.hpp"
#include "holoca/frame.hpp"
#include "holoca/linearize.hpp"
#include "holoca/rule.hpp"

namespace holoca {

enum class UpdateMode { Spatial, Spectral };

std::string_view to_string(UpdateMode mode);

using UpdateEngine = std::variant<RuleTable, SplitForm>;

// A frame failed to decode on a hop.
class TransportError : public Error {
public:
    TransportError(std::uint64_t hop, std::uint16_t agent, DecodeErrorKind kind, const std::string& what)
        : Error(what), hop_(hop), agent_(agent), kind_(kind) {}

    std::uint64_t hop() const noexcept { return hop_; }
    std::uint16_t agent() const noexcept { return agent_; }
    DecodeErrorKind kind() const noexcept { return kind_; }

private:
    std::uint64_t hop_;
    std::uint16_t agent_;
    DecodeErrorKind kind_;
};

// One record per hop. Hop 0 is the source frame entering the ring.
struct HopRecord {
    std::uint64_t hop = 0;
    std::uint32_t step = 0;   // step index of the emitted state
    std::uint16_t agent = 0;  // agent that emitted it
    std::uint32_t payload_crc = 0; // CRC-32 of the emitted frame payload
    std::uint32_t state_crc = 0;   // CRC-32 of the packed bit-state
    BitState state;
    // Spectral mode: largest distance of the recovered cells from {0, 1}.
    double max_rounding_error = 0.0;
};

struct PerturbationEvent {
    std::uint16_t agent = 0;
    std::uint32_t step = 0; // step index of the frame that was perturbed
};

// States held by the agents (each keeps the last state it received) plus
// the frame in flight, ordered by step.
struct TrajectoryWindow {
    std::uint32_t first_step = 0;
    std::vector<BitState> states;
};

struct RunResult {
    std::vector<HopRecord> log;
    std::vector<PerturbationEvent> events;
    TrajectoryWindow window;

    std::vector<BitState> trajectory() const;
};

// Ring of active-router agents. Agent i forwards to (i + 1) mod m; each hop
// decodes the incoming frame, applies any pending perturbation, performs one
// update step and encodes the result for the next agent. Scheduling is
// round-robin with exactly one frame in flight, so runs are deterministic.
class ArmasNetwork {
public:
    ArmasNetwork(std::size_t agents, UpdateEngine engine, UpdateMode mode, std::uint64_t seed);

    std::size_t agent_count() const noexcept { return agents_.size(); }
    UpdateMode mode() const noexcept { return mode_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const UpdateEngine& engine() const noexcept { return engine_; }
    std::size_t next_agent(std::size_t agent) const noexcept { return (agent + 1) % agents_.size(); }

    // The next frame processed by `agent` is XOR-ed with `perturbation`
    // before its update step. RoutingError for an unknown agent.
    void inject(std::size_t agent, BitState perturbation);

    // Flip bits in the next frame delivered to `agent` (transport fault
    // injection for tests). RoutingError for an unknown agent.
    void corrupt_next_delivery(std::size_t agent, std::size_t byte_offset, std::uint8_t xor_mask = 0xFF);

    // Sends x0 to agent 0 and runs `steps` hops. TransportError if a frame
    // fails to decode.
    RunResult run_cycles(const BitState& x0, std::size_t steps);

    // Optional raw frame capture, one entry per hop.
    void set_frame_capture(bool enabled) { capture_frames_ = enabled; }
    const std::vector<std::vector<std::uint8_t>>& captured_frames() const noexcept { return frames_; }

private:
    struct Fault {
        std::size_t byte_offset;
        std::uint8_t xor_mask;
    };

    struct Agent {
        std::uint16_t id = 0;
        std::deque<std::vector<std::uint8_t>> inbox;
        std::optional<BitState> pending_perturbation;
        std::optional<Fault> pending_fault;
        std::optional<std::uint32_t> held_step;
        BitState held_state;
    };

    struct Stepper;

    void check_agent(std::size_t agent) const;

    UpdateEngine engine_;
    UpdateMode mode_;
    std::uint64_t seed_;
    std::vector<Agent> agents_;
    bool capture_frames_ = false;
    std::vector<std::vector<std::uint8_t>> frames_;
};

ArmasNetwork build_network(std::size_t agents, UpdateEngine engine, UpdateMode mode, std::uint64_t seed);

// JSON-lines rendering of a hop log: {"hop","step","agent","payload_crc32","state_crc32"}.
std::string hop_log_jsonl(const RunResult& result);

} // namespace holoca
