#include "vqlab/video.hpp"

#include <cmath>
#include <string>

#include "vqlab/errors.hpp"

namespace vqlab {

void Video::validate() const {
    if (frames < 1 || height < 1 || width < 1) {
        throw ModelError("video shape must satisfy T,H,W >= 1, got " +
                         std::to_string(frames) + "x" + std::to_string(height) + "x" +
                         std::to_string(width));
    }
    const auto expected = static_cast<std::size_t>(frames * height * width * kChannels);
    if (pixels.size() != expected) {
        throw ModelError("pixel buffer holds " + std::to_string(pixels.size()) +
                         " bytes, shape requires " + std::to_string(expected));
    }
}

FloatVideo as_float(const Video& v) {
    FloatVideo fv(v.frames, v.height, v.width);
    for (std::size_t i = 0; i < v.pixels.size(); ++i) {
        fv.values[i] = static_cast<double>(v.pixels[i]);
    }
    return fv;
}

std::uint8_t quantize_value(double x) {
    const double r = std::round(x);  // rounds halfway cases away from zero
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

Video quantize(const FloatVideo& fv) {
    Video v(fv.frames, fv.height, fv.width);
    for (std::size_t i = 0; i < fv.values.size(); ++i) {
        v.pixels[i] = quantize_value(fv.values[i]);
    }
    return v;
}

}  // namespace vqlab
