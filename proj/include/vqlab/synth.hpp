#ifndef VQLAB_SYNTH_HPP
#define VQLAB_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vqlab/video.hpp"

namespace vqlab {

enum class BasePattern { kGradient, kChecker, kBands };

std::string to_string(BasePattern p);
BasePattern base_pattern_from_string(const std::string& s);

// Procedural degradation recipe with an analytically known quality label.
// MOS is a strictly decreasing function of each degradation parameter.
struct DegradationSpec {
    BasePattern pattern = BasePattern::kGradient;
    double noise_sigma = 0.0;     // Gaussian pixel noise, 0-255 units
    int blur_radius = 0;          // box blur radius in pixels
    int block_size = 0;           // blockiness quantization (0/1 = off)
    double temporal_jitter = 0.0; // per-frame brightness wobble amplitude
    std::uint64_t seed = 0;
};

// MOS coefficients: mos = 1 + 4*exp(-(a1*noise + a2*blur + a3*block + a4*jitter)).
// Calibration constants chosen so the generator spans [1, 5] over the
// documented parameter ranges (noise <= 20, blur <= 4, block <= 16, jitter <= 6).
inline constexpr double kMosNoiseCoeff = 0.08;
inline constexpr double kMosBlurCoeff = 0.15;
inline constexpr double kMosBlockCoeff = 0.02;
inline constexpr double kMosJitterCoeff = 0.25;

double mos_for(const DegradationSpec& spec);

// Deterministic given (spec, T, H, W). Degradations apply in fixed order
// blur -> block -> noise -> jitter, then quantization to 8 bits.
LabeledVideo synth_video(const DegradationSpec& spec, std::int64_t t, std::int64_t h,
                         std::int64_t w);

// Randomized dataset recipe; per-video degradation parameters are drawn
// uniformly from [0, max] (integers for blur/block).
struct DatasetSpec {
    int count = 60;
    std::int64_t frames = 16;
    std::int64_t height = 48;
    std::int64_t width = 48;
    double noise_max = 12.0;
    int blur_max = 3;
    int block_max = 8;
    double jitter_max = 4.0;
    std::uint64_t seed = 1;
};

std::vector<LabeledVideo> generate_dataset(const DatasetSpec& spec);

// Dataset manifest: UTF-8 CSV, header "path,mos", one row per video file.
// Paths are stored relative to the manifest's directory.
void write_manifest(const std::vector<LabeledVideo>& videos, const std::string& dir,
                    const std::string& manifest_name = "manifest.csv");
std::vector<LabeledVideo> load_manifest(const std::string& manifest_path);

}  // namespace vqlab

#endif
