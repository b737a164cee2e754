#include "holoca/frame.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>

#include <boost/crc.hpp>

namespace holoca {

namespace {

class Writer {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u16(std::uint16_t v) { put(v, 2); }
    void u32(std::uint32_t v) { put(v, 4); }
    void u64(std::uint64_t v) { put(v, 8); }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
    std::size_t size() const noexcept { return out_.size(); }
    std::vector<std::uint8_t>& buffer() noexcept { return out_; }

private:
    void put(std::uint64_t v, int n) {
        for (int i = 0; i < n; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    std::vector<std::uint8_t> out_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

    std::uint8_t u8() { return static_cast<std::uint8_t>(get(1)); }
    std::uint16_t u16() { return static_cast<std::uint16_t>(get(2)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
    double f64() { return std::bit_cast<double>(get(8)); }
    std::span<const std::uint8_t> bytes(std::size_t n) {
        need(n);
        auto s = in_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    std::size_t remaining() const noexcept { return in_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (in_.size() - pos_ < n) throw DecodeError(DecodeErrorKind::Malformed, "payload shorter than its contents");
    }
    std::uint64_t get(int n) {
        need(static_cast<std::size_t>(n));
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i) v |= std::uint64_t{in_[pos_ + static_cast<std::size_t>(i)]} << (8 * i);
        pos_ += static_cast<std::size_t>(n);
        return v;
    }

    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
};

std::vector<std::uint8_t> encode_payload(const AgentFrame& frame) {
    Writer w;
    if (const auto* x = std::get_if<BitState>(&frame.payload)) {
        w.u32(static_cast<std::uint32_t>(x->size()));
        std::vector<std::uint8_t> packed((x->size() + 7) / 8, 0);
        for (std::size_t i = 0; i < x->size(); ++i)
            if ((*x)[i]) packed[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
        w.bytes(packed);
    } else {
        const auto& s = std::get<Spectrum>(frame.payload);
        w.u32(static_cast<std::uint32_t>(s.size()));
        for (const auto& v : s.values()) {
            w.f64(v.real());
            w.f64(v.imag());
        }
    }
    return std::move(w.buffer());
}

} // namespace

bool operator==(const AgentFrame& a, const AgentFrame& b) {
    if (a.agent_id != b.agent_id || a.step != b.step || a.payload.index() != b.payload.index()) return false;
    if (a.payload.index() == 0) return std::get<BitState>(a.payload) == std::get<BitState>(b.payload);
    const auto& x = std::get<Spectrum>(a.payload).values();
    const auto& y = std::get<Spectrum>(b.payload).values();
    // Bitwise comparison so that NaN payloads still round-trip as equal.
    return x.size() == y.size() && std::memcmp(x.data(), y.data(), x.size() * sizeof(Complex)) == 0;
}

std::string_view to_string(DecodeErrorKind kind) {
    switch (kind) {
    case DecodeErrorKind::BadMagic: return "bad-magic";
    case DecodeErrorKind::BadVersion: return "bad-version";
    case DecodeErrorKind::Truncated: return "truncated";
    case DecodeErrorKind::CrcMismatch: return "crc-mismatch";
    case DecodeErrorKind::Malformed: return "malformed";
    }
    return "unknown";
}

std::uint32_t crc32(std::span<const std::uint8_t> bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

std::vector<std::uint8_t> encode_frame(const AgentFrame& frame) {
    const auto payload = encode_payload(frame);
    Writer w;
    for (auto b : kFrameMagic) w.u8(b);
    w.u8(kFrameVersion);
    w.u16(frame.agent_id);
    w.u32(frame.step);
    w.u8(static_cast<std::uint8_t>(frame.payload_type()));
    w.u32(static_cast<std::uint32_t>(payload.size()));
    w.bytes(payload);
    w.u32(crc32(w.buffer()));
    return std::move(w.buffer());
}

AgentFrame decode_frame(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kFrameHeaderSize + kFrameTrailerSize)
        throw DecodeError(DecodeErrorKind::Truncated, "frame shorter than header and checksum");
    if (!std::equal(kFrameMagic.begin(), kFrameMagic.end(), bytes.begin()))
        throw DecodeError(DecodeErrorKind::BadMagic, "frame magic is not HGRD");

    Reader header(bytes.subspan(4, kFrameHeaderSize - 4));
    const auto version = header.u8();
    if (version != kFrameVersion)
        throw DecodeError(DecodeErrorKind::BadVersion, "unsupported frame version " + std::to_string(version));
    AgentFrame frame;
    frame.agent_id = header.u16();
    frame.step = header.u32();
    const auto type = header.u8();
    const std::size_t payload_size = header.u32();

    const std::size_t expected = kFrameHeaderSize + payload_size + kFrameTrailerSize;
    if (bytes.size() < expected)
        throw DecodeError(DecodeErrorKind::Truncated, "frame declares " + std::to_string(expected) + " bytes, got " +
                                                          std::to_string(bytes.size()));
    if (bytes.size() > expected) throw DecodeError(DecodeErrorKind::Malformed, "trailing bytes after frame");

    Reader trailer(bytes.subspan(expected - kFrameTrailerSize));
    if (trailer.u32() != crc32(bytes.first(expected - kFrameTrailerSize)))
        throw DecodeError(DecodeErrorKind::CrcMismatch, "frame checksum mismatch");

    Reader payload(bytes.subspan(kFrameHeaderSize, payload_size));
    const std::size_t length = payload.u32();
    if (type == static_cast<std::uint8_t>(PayloadType::BitState)) {
        if (payload.remaining() != (length + 7) / 8)
            throw DecodeError(DecodeErrorKind::Malformed, "bit-state payload length disagrees with L");
        const auto packed = payload.bytes((length + 7) / 8);
        std::vector<std::uint8_t> bits(length);
        for (std::size_t i = 0; i < length; ++i) bits[i] = (packed[i / 8] >> (i % 8)) & 1u;
        if (length % 8 != 0 && (packed.back() >> (length % 8)) != 0)
            throw DecodeError(DecodeErrorKind::Malformed, "nonzero padding bits in bit-state payload");
        frame.payload = BitState(std::move(bits));
    } else if (type == static_cast<std::uint8_t>(PayloadType::Spectrum)) {
        if (payload.remaining() != 16 * length)
            throw DecodeError(DecodeErrorKind::Malformed, "spectrum payload length disagrees with L");
        std::vector<Complex> values(length);
        for (auto& v : values) {
            const double re = payload.f64();
            const double im = payload.f64();
            v = {re, im};
        }
        frame.payload = Spectrum(std::move(values));
    } else {
        throw DecodeError(DecodeErrorKind::Malformed, "unknown payload type " + std::to_string(type));
    }
    return frame;
}

} // namespace holoca
