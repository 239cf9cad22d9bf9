#include "vqlab/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "vqlab/errors.hpp"
#include "vqlab/rng.hpp"
#include "vqlab/rvid.hpp"

namespace vqlab {

namespace fs = std::filesystem;

std::string to_string(BasePattern p) {
    switch (p) {
        case BasePattern::kGradient: return "gradient";
        case BasePattern::kChecker: return "checker";
        case BasePattern::kBands: return "bands";
    }
    return "gradient";
}

BasePattern base_pattern_from_string(const std::string& s) {
    if (s == "gradient") return BasePattern::kGradient;
    if (s == "checker") return BasePattern::kChecker;
    if (s == "bands") return BasePattern::kBands;
    throw ConfigError("unknown base pattern \"" + s + "\"");
}

double mos_for(const DegradationSpec& spec) {
    const double penalty = kMosNoiseCoeff * spec.noise_sigma +
                           kMosBlurCoeff * static_cast<double>(spec.blur_radius) +
                           kMosBlockCoeff * static_cast<double>(spec.block_size) +
                           kMosJitterCoeff * spec.temporal_jitter;
    return 1.0 + 4.0 * std::exp(-penalty);
}

namespace {

using Frame = std::vector<double>;  // H*W*3

double& px(Frame& f, std::int64_t w, std::int64_t y, std::int64_t x, int c) {
    return f[static_cast<std::size_t>((y * w + x) * kChannels + c)];
}

void render_base(const DegradationSpec& spec, std::int64_t t_count, std::int64_t h,
                 std::int64_t w, std::vector<Frame>& frames) {
    Rng rng(splitmix64(spec.seed ^ 0x626173u));  // base-layer stream
    const double inv_h = 1.0 / static_cast<double>(std::max<std::int64_t>(1, h - 1));
    const double inv_w = 1.0 / static_cast<double>(std::max<std::int64_t>(1, w - 1));

    // Band parameters are drawn once so all frames share the texture field.
    double freq[3], phase[3], angle[3];
    for (int k = 0; k < 3; ++k) {
        freq[k] = rng.uniform(1.5, 6.0);
        phase[k] = rng.uniform(0.0, 2.0 * std::numbers::pi);
        angle[k] = rng.uniform(0.0, std::numbers::pi);
    }

    for (std::int64_t t = 0; t < t_count; ++t) {
        Frame& f = frames[static_cast<std::size_t>(t)];
        for (std::int64_t y = 0; y < h; ++y) {
            for (std::int64_t x = 0; x < w; ++x) {
                for (int c = 0; c < kChannels; ++c) {
                    double v = 128.0;
                    switch (spec.pattern) {
                        case BasePattern::kGradient: {
                            const double ramp =
                                0.5 * (static_cast<double>(x) * inv_w +
                                       static_cast<double>(y) * inv_h);
                            v = 40.0 + 170.0 * ramp +
                                12.0 * std::sin(2.0 * std::numbers::pi *
                                                (static_cast<double>(t) / 16.0 + c / 3.0));
                            break;
                        }
                        case BasePattern::kChecker: {
                            const bool on = (((x / 8) + (y / 8) + t) % 2) == 0;
                            v = (on ? 196.0 : 60.0) + 14.0 * (c - 1);
                            break;
                        }
                        case BasePattern::kBands: {
                            double s = 0.0;
                            for (int k = 0; k < 3; ++k) {
                                const double u =
                                    (std::cos(angle[k]) * static_cast<double>(x) +
                                     std::sin(angle[k]) * static_cast<double>(y)) /
                                    static_cast<double>(std::max(h, w));
                                s += std::sin(2.0 * std::numbers::pi *
                                              (freq[k] * u + phase[k] +
                                               0.05 * static_cast<double>(t) * (k + 1)));
                            }
                            v = 128.0 + 36.0 * s + 8.0 * (c - 1);
                            break;
                        }
                    }
                    px(f, w, y, x, c) = std::clamp(v, 0.0, 255.0);
                }
            }
        }
    }
}

void apply_blur(std::vector<Frame>& frames, std::int64_t h, std::int64_t w, int radius) {
    if (radius <= 0) return;
    const int win = 2 * radius + 1;
    Frame tmp(frames[0].size());
    for (Frame& f : frames) {
        // Horizontal pass, edge-clamped.
        for (std::int64_t y = 0; y < h; ++y) {
            for (std::int64_t x = 0; x < w; ++x) {
                for (int c = 0; c < kChannels; ++c) {
                    double acc = 0.0;
                    for (int k = -radius; k <= radius; ++k) {
                        const std::int64_t xx = std::clamp<std::int64_t>(x + k, 0, w - 1);
                        acc += px(f, w, y, xx, c);
                    }
                    tmp[static_cast<std::size_t>((y * w + x) * kChannels + c)] = acc / win;
                }
            }
        }
        // Vertical pass.
        for (std::int64_t y = 0; y < h; ++y) {
            for (std::int64_t x = 0; x < w; ++x) {
                for (int c = 0; c < kChannels; ++c) {
                    double acc = 0.0;
                    for (int k = -radius; k <= radius; ++k) {
                        const std::int64_t yy = std::clamp<std::int64_t>(y + k, 0, h - 1);
                        acc += tmp[static_cast<std::size_t>((yy * w + x) * kChannels + c)];
                    }
                    px(f, w, y, x, c) = acc / win;
                }
            }
        }
    }
}

void apply_block(std::vector<Frame>& frames, std::int64_t h, std::int64_t w, int block) {
    if (block <= 1) return;
    for (Frame& f : frames) {
        for (std::int64_t by = 0; by < h; by += block) {
            for (std::int64_t bx = 0; bx < w; bx += block) {
                const std::int64_t ye = std::min<std::int64_t>(by + block, h);
                const std::int64_t xe = std::min<std::int64_t>(bx + block, w);
                for (int c = 0; c < kChannels; ++c) {
                    double acc = 0.0;
                    for (std::int64_t y = by; y < ye; ++y)
                        for (std::int64_t x = bx; x < xe; ++x) acc += px(f, w, y, x, c);
                    const double mean =
                        acc / static_cast<double>((ye - by) * (xe - bx));
                    for (std::int64_t y = by; y < ye; ++y)
                        for (std::int64_t x = bx; x < xe; ++x) px(f, w, y, x, c) = mean;
                }
            }
        }
    }
}

void apply_noise(std::vector<Frame>& frames, const DegradationSpec& spec) {
    if (spec.noise_sigma <= 0.0) return;
    Rng rng(splitmix64(spec.seed ^ 0x6E6F6973u));  // noise stream
    for (Frame& f : frames) {
        for (double& v : f) v += rng.normal(0.0, spec.noise_sigma);
    }
}

void apply_jitter(std::vector<Frame>& frames, const DegradationSpec& spec) {
    if (spec.temporal_jitter <= 0.0) return;
    Rng rng(splitmix64(spec.seed ^ 0x6A697474u));  // jitter stream
    for (Frame& f : frames) {
        const double offset = spec.temporal_jitter * rng.uniform(-1.0, 1.0);
        for (double& v : f) v += offset;
    }
}

}  // namespace

LabeledVideo synth_video(const DegradationSpec& spec, std::int64_t t, std::int64_t h,
                         std::int64_t w) {
    if (t < 1 || h < 1 || w < 1) throw ModelError("synth_video requires T,H,W >= 1");
    if (spec.noise_sigma < 0.0 || spec.blur_radius < 0 || spec.block_size < 0 ||
        spec.temporal_jitter < 0.0) {
        throw ModelError("degradation parameters must be non-negative");
    }

    std::vector<Frame> frames(static_cast<std::size_t>(t),
                              Frame(static_cast<std::size_t>(h * w * kChannels)));
    render_base(spec, t, h, w, frames);
    apply_blur(frames, h, w, spec.blur_radius);
    apply_block(frames, h, w, spec.block_size);
    apply_noise(frames, spec);
    apply_jitter(frames, spec);

    LabeledVideo out;
    out.video = Video(t, h, w);
    for (std::int64_t f = 0; f < t; ++f) {
        const Frame& src = frames[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < src.size(); ++i) {
            out.video.pixels[static_cast<std::size_t>(f) * src.size() + i] =
                quantize_value(src[i]);
        }
    }
    out.mos = mos_for(spec);
    return out;
}

std::vector<LabeledVideo> generate_dataset(const DatasetSpec& spec) {
    std::vector<LabeledVideo> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        Rng rng = Rng::substream(spec.seed, "dataset", static_cast<std::uint64_t>(i));
        DegradationSpec d;
        d.pattern = static_cast<BasePattern>(rng.uniform_below(3));
        d.noise_sigma = rng.uniform(0.0, spec.noise_max);
        d.blur_radius = static_cast<int>(rng.uniform_int(0, spec.blur_max));
        d.block_size = static_cast<int>(rng.uniform_int(0, spec.block_max));
        d.temporal_jitter = rng.uniform(0.0, spec.jitter_max);
        d.seed = Rng::substream_seed(spec.seed, "degradation", static_cast<std::uint64_t>(i));
        out.push_back(synth_video(d, spec.frames, spec.height, spec.width));
    }
    return out;
}

void write_manifest(const std::vector<LabeledVideo>& videos, const std::string& dir,
                    const std::string& manifest_name) {
    fs::create_directories(dir);
    std::ostringstream manifest;
    manifest << "path,mos\n";
    for (std::size_t i = 0; i < videos.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "video_%04zu.rvid", i);
        write_video_file(videos[i].video, (fs::path(dir) / name).string());
        char mos[64];
        std::snprintf(mos, sizeof(mos), "%.12g", videos[i].mos);
        manifest << name << "," << mos << "\n";
    }
    const auto path = fs::path(dir) / manifest_name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open manifest for writing: " + path.string());
    out << manifest.str();
}

std::vector<LabeledVideo> load_manifest(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw IoError("cannot open manifest: " + manifest_path);
    const fs::path base = fs::path(manifest_path).parent_path();
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty manifest: " + manifest_path);
    if (line == "path,mos\r") line = "path,mos";
    if (line != "path,mos") {
        throw FormatError("manifest must start with header \"path,mos\"");
    }
    std::vector<LabeledVideo> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw FormatError("manifest line " + std::to_string(lineno) + " has no comma");
        }
        LabeledVideo lv;
        lv.video = read_video_file((base / line.substr(0, comma)).string());
        try {
            lv.mos = std::stod(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw FormatError("manifest line " + std::to_string(lineno) + ": bad mos value");
        }
        if (!(lv.mos >= 1.0 && lv.mos <= 5.0)) {
            throw FormatError("manifest line " + std::to_string(lineno) +
                              ": mos outside [1, 5]");
        }
        out.push_back(std::move(lv));
    }
    return out;
}

}  // namespace vqlab
