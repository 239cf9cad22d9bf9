#ifndef VQLAB_VIDEO_HPP
#define VQLAB_VIDEO_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace vqlab {

inline constexpr int kChannels = 3;

// T x H x W x 3 sequence of 8-bit pixels; frame-major, row-major, RGB interleaved.
struct Video {
    std::int64_t frames = 0;
    std::int64_t height = 0;
    std::int64_t width = 0;
    std::vector<std::uint8_t> pixels;

    Video() = default;
    Video(std::int64_t t, std::int64_t h, std::int64_t w, std::uint8_t fill = 0)
        : frames(t), height(h), width(w),
          pixels(static_cast<std::size_t>(t * h * w * kChannels), fill) {}

    std::size_t index(std::int64_t t, std::int64_t y, std::int64_t x, int c) const {
        return static_cast<std::size_t>(((t * height + y) * width + x) * kChannels + c);
    }
    std::uint8_t at(std::int64_t t, std::int64_t y, std::int64_t x, int c) const {
        return pixels[index(t, y, x, c)];
    }
    std::uint8_t& at(std::int64_t t, std::int64_t y, std::int64_t x, int c) {
        return pixels[index(t, y, x, c)];
    }
    std::size_t pixel_count() const { return pixels.size(); }

    // Throws ModelError if the shape or buffer size is inconsistent.
    void validate() const;

    bool operator==(const Video&) const = default;
};

// Same layout as Video with real values on the 0-255 scale. Intermediate
// representation used inside defense and attack pipelines so guardian maps
// and perturbations compose before quantization.
struct FloatVideo {
    std::int64_t frames = 0;
    std::int64_t height = 0;
    std::int64_t width = 0;
    std::vector<double> values;

    FloatVideo() = default;
    FloatVideo(std::int64_t t, std::int64_t h, std::int64_t w, double fill = 0.0)
        : frames(t), height(h), width(w),
          values(static_cast<std::size_t>(t * h * w * kChannels), fill) {}

    std::size_t index(std::int64_t t, std::int64_t y, std::int64_t x, int c) const {
        return static_cast<std::size_t>(((t * height + y) * width + x) * kChannels + c);
    }
    double at(std::int64_t t, std::int64_t y, std::int64_t x, int c) const {
        return values[index(t, y, x, c)];
    }
    double& at(std::int64_t t, std::int64_t y, std::int64_t x, int c) {
        return values[index(t, y, x, c)];
    }

    bool same_shape(const FloatVideo& o) const {
        return frames == o.frames && height == o.height && width == o.width;
    }
};

struct LabeledVideo {
    Video video;
    double mos = 0.0;  // in [1, 5]
};

FloatVideo as_float(const Video& v);

// Round half away from zero, then clamp to [0, 255].
std::uint8_t quantize_value(double x);
Video quantize(const FloatVideo& fv);

}  // namespace vqlab

#endif
