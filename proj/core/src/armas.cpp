#include "holoca/armas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include "holoca/evolve.hpp"
#include "holoca/spectral.hpp"

namespace holoca {

namespace {

constexpr std::uint16_t kSourceAgent = 0xFFFF;

std::uint32_t state_crc(const BitState& x) {
    std::vector<std::uint8_t> packed((x.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) packed[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    return crc32(packed);
}

std::uint32_t payload_crc(const std::vector<std::uint8_t>& frame) {
    const std::size_t payload_size = frame[12] | (frame[13] << 8) | (frame[14] << 16) |
                                     (static_cast<std::size_t>(frame[15]) << 24);
    return crc32(std::span<const std::uint8_t>(frame).subspan(kFrameHeaderSize, payload_size));
}

// x XOR p = x + p - 2 x p, evaluated on spectra.
Spectrum spectral_xor(const Spectrum& x, const BitState& p) {
    const Spectrum ps = dft(p);
    return x + ps - 2.0 * spectral_product(x, ps);
}

} // namespace

std::string_view to_string(UpdateMode mode) {
    return mode == UpdateMode::Spatial ? "spatial" : "spectral";
}

// One update step for the configured engine and mode at a fixed length.
struct ArmasNetwork::Stepper {
    Stepper(const UpdateEngine& engine, UpdateMode mode, std::size_t length) : engine(engine) {
        if (mode == UpdateMode::Spectral) {
            if (const auto* rule = std::get_if<RuleTable>(&engine))
                projector = std::make_unique<SpectralProjectorEngine>(*rule, length);
            else
                split = std::make_unique<SpectralSplitEngine>(std::get<SplitForm>(engine), length);
        }
    }

    BitState spatial(const BitState& x) const {
        if (const auto* rule = std::get_if<RuleTable>(&engine)) return step_reference(x, *rule);
        return split_step(x, std::get<SplitForm>(engine));
    }

    Spectrum spectral(const Spectrum& x) const { return projector ? projector->step(x) : split->step(x); }

    const UpdateEngine& engine;
    std::unique_ptr<SpectralProjectorEngine> projector;
    std::unique_ptr<SpectralSplitEngine> split;
};

std::vector<BitState> RunResult::trajectory() const {
    std::vector<BitState> out;
    out.reserve(log.size());
    for (const auto& r : log) out.push_back(r.state);
    return out;
}

ArmasNetwork::ArmasNetwork(std::size_t agents, UpdateEngine engine, UpdateMode mode, std::uint64_t seed)
    : engine_(std::move(engine)), mode_(mode), seed_(seed) {
    if (agents == 0) throw ConfigurationError("an ARMAS ring needs at least one agent");
    if (agents >= kSourceAgent) throw ConfigurationError("too many agents for a 16-bit agent id");
    agents_.resize(agents);
    for (std::size_t i = 0; i < agents; ++i) agents_[i].id = static_cast<std::uint16_t>(i);
}

void ArmasNetwork::check_agent(std::size_t agent) const {
    if (agent >= agents_.size())
        throw RoutingError("unknown agent " + std::to_string(agent) + " (ring has " + std::to_string(agents_.size()) +
                           ")");
}

void ArmasNetwork::inject(std::size_t agent, BitState perturbation) {
    check_agent(agent);
    agents_[agent].pending_perturbation = std::move(perturbation);
}

void ArmasNetwork::corrupt_next_delivery(std::size_t agent, std::size_t byte_offset, std::uint8_t xor_mask) {
    check_agent(agent);
    agents_[agent].pending_fault = Fault{byte_offset, xor_mask};
}

RunResult ArmasNetwork::run_cycles(const BitState& x0, std::size_t steps) {
    const std::size_t length = x0.size();
    const Stepper stepper(engine_, mode_, length);
    for (auto& a : agents_) {
        a.inbox.clear();
        a.held_step.reset();
        a.held_state = BitState();
        if (a.pending_perturbation && a.pending_perturbation->size() != length)
            throw SizeError("perturbation length differs from the lattice");
    }
    frames_.clear();

    RunResult result;
    auto emit = [&](std::uint64_t hop, std::uint16_t from, std::uint32_t step, const BitState& state,
                    double rounding) {
        AgentFrame frame;
        frame.agent_id = agents_[(from == kSourceAgent) ? 0 : next_agent(from)].id;
        frame.step = step;
        if (mode_ == UpdateMode::Spatial)
            frame.payload = state;
        else
            frame.payload = dft(state);
        auto bytes = encode_frame(frame);
        result.log.push_back({hop, step, from, payload_crc(bytes), state_crc(state), state, rounding});
        if (capture_frames_) frames_.push_back(bytes);
        agents_[frame.agent_id].inbox.push_back(std::move(bytes));
    };

    emit(0, kSourceAgent, 0, x0, 0.0);

    std::size_t current = 0;
    for (std::uint64_t hop = 1; hop <= steps; ++hop) {
        auto& agent = agents_[current];
        auto bytes = std::move(agent.inbox.front());
        agent.inbox.pop_front();
        if (agent.pending_fault) {
            if (agent.pending_fault->byte_offset < bytes.size())
                bytes[agent.pending_fault->byte_offset] ^= agent.pending_fault->xor_mask;
            agent.pending_fault.reset();
        }

        AgentFrame frame;
        try {
            frame = decode_frame(bytes);
        } catch (const DecodeError& e) {
            throw TransportError(hop, agent.id, e.kind(),
                                 "hop " + std::to_string(hop) + " at agent " + std::to_string(agent.id) + ": " +
                                     e.what());
        }
        if (frame.agent_id != agent.id)
            throw RoutingError("frame for agent " + std::to_string(frame.agent_id) + " delivered to agent " +
                               std::to_string(agent.id));

        BitState next;
        double rounding = 0.0;
        if (mode_ == UpdateMode::Spatial) {
            BitState x = std::get<BitState>(frame.payload);
            if (agent.pending_perturbation) {
                x = x ^ *agent.pending_perturbation;
                result.events.push_back({agent.id, frame.step});
                agent.pending_perturbation.reset();
            }
            agent.held_state = x;
            next = stepper.spatial(x);
        } else {
            Spectrum x = std::get<Spectrum>(frame.payload);
            if (agent.pending_perturbation) {
                x = spectral_xor(x, *agent.pending_perturbation);
                result.events.push_back({agent.id, frame.step});
                agent.pending_perturbation.reset();
            }
            agent.held_state = to_bit_state(x);
            const Spectrum y = stepper.spectral(x);
            for (double v : idft(y)) rounding = std::max(rounding, std::abs(v - std::round(v)));
            next = to_bit_state(y);
        }
        agent.held_step = frame.step;
        emit(hop, agent.id, frame.step + 1, next, rounding);
        current = next_agent(current);
    }

    // Window: what each agent holds plus the frame still in flight.
    std::vector<std::pair<std::uint32_t, BitState>> held;
    for (const auto& a : agents_)
        if (a.held_step) held.emplace_back(*a.held_step, a.held_state);
    held.emplace_back(result.log.back().step, result.log.back().state);
    std::sort(held.begin(), held.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    result.window.first_step = held.front().first;
    for (auto& [step, state] : held) result.window.states.push_back(std::move(state));
    return result;
}

ArmasNetwork build_network(std::size_t agents, UpdateEngine engine, UpdateMode mode, std::uint64_t seed) {
    return ArmasNetwork(agents, std::move(engine), mode, seed);
}

std::string hop_log_jsonl(const RunResult& result) {
    std::ostringstream out;
    char buf[160];
    for (const auto& r : result.log) {
        const std::string agent = r.agent == kSourceAgent ? "\"source\"" : std::to_string(r.agent);
        std::snprintf(buf, sizeof buf,
                      "{\"hop\":%llu,\"step\":%u,\"agent\":%s,\"payload_crc32\":\"%08x\",\"state_crc32\":\"%08x\"}\n",
                      static_cast<unsigned long long>(r.hop), r.step, agent.c_str(), r.payload_crc, r.state_crc);
        out << buf;
    }
    return out.str();
}

} // namespace holoca
