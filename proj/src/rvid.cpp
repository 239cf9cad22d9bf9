#include "vqlab/rvid.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "vqlab/errors.hpp"

namespace vqlab {

namespace {

constexpr char kMagic[4] = {'R', 'V', 'I', 'D'};

void put_u16(std::ostream& out, std::uint16_t v) {
    const char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
    out.write(b, 2);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    const char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                       static_cast<char>((v >> 16) & 0xFF), static_cast<char>(v >> 24)};
    out.write(b, 4);
}

std::uint16_t get_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

std::size_t write_video(const Video& video, std::ostream& out) {
    video.validate();
    if (video.frames > std::numeric_limits<std::uint32_t>::max() ||
        video.height > std::numeric_limits<std::uint32_t>::max() ||
        video.width > std::numeric_limits<std::uint32_t>::max()) {
        throw FormatError("video dimensions exceed the u32 header fields");
    }
    std::size_t written = 0;
    auto check = [&](std::size_t just) {
        if (!out) throw IoError("write failed after " + std::to_string(written) + " bytes");
        written += just;
    };
    out.write(kMagic, 4);
    check(4);
    put_u16(out, kRvidVersion);
    check(2);
    put_u32(out, static_cast<std::uint32_t>(video.frames));
    check(4);
    put_u32(out, static_cast<std::uint32_t>(video.height));
    check(4);
    put_u32(out, static_cast<std::uint32_t>(video.width));
    check(4);
    const char channels = static_cast<char>(kChannels);
    out.write(&channels, 1);
    check(1);
    out.write(reinterpret_cast<const char*>(video.pixels.data()),
              static_cast<std::streamsize>(video.pixels.size()));
    check(video.pixels.size());
    return written;
}

Video read_video(std::istream& in) {
    std::array<unsigned char, kRvidHeaderBytes> header{};
    in.read(reinterpret_cast<char*>(header.data()), kRvidHeaderBytes);
    if (static_cast<std::size_t>(in.gcount()) != kRvidHeaderBytes) {
        throw TruncatedError("stream shorter than the 19-byte RVID header");
    }
    if (std::memcmp(header.data(), kMagic, 4) != 0) {
        throw FormatError("bad magic, expected \"RVID\"");
    }
    const std::uint16_t version = get_u16(header.data() + 4);
    if (version != kRvidVersion) {
        throw UnsupportedError("unsupported RVID version " + std::to_string(version));
    }
    const std::uint32_t t = get_u32(header.data() + 6);
    const std::uint32_t h = get_u32(header.data() + 10);
    const std::uint32_t w = get_u32(header.data() + 14);
    const std::uint8_t channels = header[18];
    if (channels != kChannels) {
        throw UnsupportedError("unsupported channel count " + std::to_string(channels));
    }
    if (t < 1 || h < 1 || w < 1) {
        throw FormatError("header declares an empty dimension");
    }
    Video video(t, h, w);
    in.read(reinterpret_cast<char*>(video.pixels.data()),
            static_cast<std::streamsize>(video.pixels.size()));
    if (static_cast<std::size_t>(in.gcount()) != video.pixels.size()) {
        throw TruncatedError("header declares " + std::to_string(video.pixels.size()) +
                             " pixel bytes, stream provides " + std::to_string(in.gcount()));
    }
    return video;
}

std::size_t write_video_file(const Video& video, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    const std::size_t n = write_video(video, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
    return n;
}

Video read_video_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    return read_video(in);
}

}  // namespace vqlab
