#ifndef VQLAB_RVID_HPP
#define VQLAB_RVID_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

#include "vqlab/video.hpp"

namespace vqlab {

// RVID raw video container, little-endian:
//   magic "RVID" (4 bytes) | version u16 = 1 | T u32 | H u32 | W u32 | channels u8 = 3
//   followed by T*H*W*3 pixel bytes, frame-major, row-major, interleaved RGB.
// 19-byte header; no compression so perturbations survive I/O bit-exactly.
inline constexpr std::size_t kRvidHeaderBytes = 19;
inline constexpr std::uint16_t kRvidVersion = 1;

// Returns total bytes written (19 + T*H*W*3). Throws IoError on sink failure,
// reporting how many bytes made it out.
std::size_t write_video(const Video& video, std::ostream& out);

// Throws FormatError (bad magic / bad shape), UnsupportedError (version or
// channel count), TruncatedError (declared size exceeds the stream).
Video read_video(std::istream& in);

std::size_t write_video_file(const Video& video, const std::string& path);
Video read_video_file(const std::string& path);

}  // namespace vqlab

#endif
