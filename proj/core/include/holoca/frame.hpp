#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "holoca/bit_state.hpp"
#include "holoca/error.hpp"
#include "holoca/spectral.hpp"

namespace holoca {

// Wire layout, all integers little-endian:
//
//   offset size  field
//   0      4     magic "HGRD"
//   4      1     version (1)
//   5      2     agent id (receiver)
//   7      4     step index
//   11     1     payload type (0 bit-state, 1 spectrum)
//   12     4     payload length in bytes
//   16     n     payload
//   16+n   4     CRC-32 (IEEE) of bytes [0, 16+n)
//
// Bit-state payload: u32 L, then ceil(L/8) bytes, cell i in bit (i % 8) of
// byte i / 8. Spectrum payload: u32 L, then L (re, im) pairs of IEEE-754
// binary64.
inline constexpr std::array<std::uint8_t, 4> kFrameMagic{'H', 'G', 'R', 'D'};
inline constexpr std::uint8_t kFrameVersion = 1;
inline constexpr std::size_t kFrameHeaderSize = 16;
inline constexpr std::size_t kFrameTrailerSize = 4;

enum class PayloadType : std::uint8_t { BitState = 0, Spectrum = 1 };

struct AgentFrame {
    std::uint16_t agent_id = 0;
    std::uint32_t step = 0;
    std::variant<BitState, Spectrum> payload;

    PayloadType payload_type() const noexcept {
        return payload.index() == 0 ? PayloadType::BitState : PayloadType::Spectrum;
    }
};

bool operator==(const AgentFrame& a, const AgentFrame& b);

enum class DecodeErrorKind { BadMagic, BadVersion, Truncated, CrcMismatch, Malformed };

std::string_view to_string(DecodeErrorKind kind);

class DecodeError : public Error {
public:
    DecodeError(DecodeErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
    DecodeErrorKind kind() const noexcept { return kind_; }

private:
    DecodeErrorKind kind_;
};

std::vector<std::uint8_t> encode_frame(const AgentFrame& frame);
// Checks run in order: size, magic, version, declared length, CRC, payload.
AgentFrame decode_frame(std::span<const std::uint8_t> bytes);

// CRC-32 with the IEEE 802.3 polynomial (reflected 0xEDB88320).
std::uint32_t crc32(std::span<const std::uint8_t> bytes);

} // namespace holoca
