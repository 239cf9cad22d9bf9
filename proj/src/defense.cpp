#include "vqlab/defense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vqlab/errors.hpp"

namespace vqlab {

namespace {

const std::vector<std::uint8_t>& buffer_of(const Video& v) { return v.pixels; }
std::vector<std::uint8_t>& buffer_of(Video& v) { return v.pixels; }
const std::vector<double>& buffer_of(const FloatVideo& v) { return v.values; }
std::vector<double>& buffer_of(FloatVideo& v) { return v.values; }

template <typename V>
std::vector<std::int64_t> skip_indices(const V& v, const SamplingParams& p) {
    if (p.start < 0 || p.interval < 1 || p.count < 1) {
        throw RangeError("skip sampling requires s >= 0, n >= 1, d >= 1");
    }
    const std::int64_t last = p.start + p.interval * (p.count - 1);
    if (last >= v.frames) {
        throw RangeError("skip sampling needs frame index " + std::to_string(last) +
                         ", video has " + std::to_string(v.frames) + " frames");
    }
    std::vector<std::int64_t> idx(static_cast<std::size_t>(p.count));
    for (std::int64_t k = 0; k < p.count; ++k) idx[static_cast<std::size_t>(k)] = p.start + p.interval * k;
    return idx;
}

template <typename V>
std::vector<std::int64_t> continuous_indices(const V& v, std::int64_t start,
                                             std::int64_t count) {
    if (start < 0 || count < 1) {
        throw RangeError("continuous sampling requires s >= 0, d >= 1");
    }
    if (start + count > v.frames) {
        throw RangeError("continuous sampling needs " + std::to_string(start + count) +
                         " frames, video has " + std::to_string(v.frames));
    }
    std::vector<std::int64_t> idx(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) idx[static_cast<std::size_t>(k)] = start + k;
    return idx;
}

template <typename V>
V copy_frames(const V& v, const std::vector<std::int64_t>& indices) {
    V out(static_cast<std::int64_t>(indices.size()), v.height, v.width);
    const std::size_t frame_len =
        static_cast<std::size_t>(v.height * v.width * kChannels);
    for (std::size_t k = 0; k < indices.size(); ++k) {
        const auto src = static_cast<std::size_t>(indices[k]) * frame_len;
        for (std::size_t i = 0; i < frame_len; ++i) {
            buffer_of(out)[k * frame_len + i] = buffer_of(v)[src + i];
        }
    }
    return out;
}

template <typename V>
V fragment_impl(const V& frames, const GridParams& gp) {
    gp.validate(frames.height, frames.width);
    const std::int64_t side = gp.grids * gp.patch_side;
    const auto map = fragment_index_map(frames.height, frames.width, gp);
    V out(frames.frames, side, side);
    const std::size_t in_frame =
        static_cast<std::size_t>(frames.height * frames.width * kChannels);
    const std::size_t out_frame = static_cast<std::size_t>(side * side * kChannels);
    for (std::int64_t t = 0; t < frames.frames; ++t) {
        const auto* src = buffer_of(frames).data() + static_cast<std::size_t>(t) * in_frame;
        auto* dst = buffer_of(out).data() + static_cast<std::size_t>(t) * out_frame;
        for (std::size_t p = 0; p < map.size(); ++p) {
            const std::size_t s = static_cast<std::size_t>(map[p]) * kChannels;
            const std::size_t d = p * kChannels;
            dst[d] = src[s];
            dst[d + 1] = src[s + 1];
            dst[d + 2] = src[s + 2];
        }
    }
    return out;
}

}  // namespace

void GridParams::validate(std::int64_t h, std::int64_t w) const {
    if (grids < 1 || patch_side < 1) throw GridError("G and S must be >= 1");
    if (h % grids != 0 || w % grids != 0) {
        throw GridError("frame dims " + std::to_string(h) + "x" + std::to_string(w) +
                        " not divisible by G=" + std::to_string(grids));
    }
    const std::int64_t cell_h = h / grids;
    const std::int64_t cell_w = w / grids;
    if (patch_side > cell_h || patch_side > cell_w) {
        throw GridError("patch side " + std::to_string(patch_side) +
                        " exceeds grid cell " + std::to_string(cell_h) + "x" +
                        std::to_string(cell_w));
    }
    if (offsets.size() != static_cast<std::size_t>(grids * grids)) {
        throw GridError("expected " + std::to_string(grids * grids) + " offsets, got " +
                        std::to_string(offsets.size()));
    }
    for (const auto& [oh, ow] : offsets) {
        if (oh < 0 || ow < 0 || oh > cell_h - patch_side || ow > cell_w - patch_side) {
            throw GridError("offset (" + std::to_string(oh) + "," + std::to_string(ow) +
                            ") outside its cell slack");
        }
    }
}

Video skip_sample(const Video& v, const SamplingParams& p) {
    return copy_frames(v, skip_indices(v, p));
}
FloatVideo skip_sample(const FloatVideo& v, const SamplingParams& p) {
    return copy_frames(v, skip_indices(v, p));
}

Video continuous_sample(const Video& v, std::int64_t start, std::int64_t count) {
    return copy_frames(v, continuous_indices(v, start, count));
}
FloatVideo continuous_sample(const FloatVideo& v, std::int64_t start, std::int64_t count) {
    return copy_frames(v, continuous_indices(v, start, count));
}

GridParams sample_grid_offsets(std::int64_t h, std::int64_t w, std::int64_t grids,
                               std::int64_t patch_side, Rng& rng) {
    GridParams gp;
    gp.grids = grids;
    gp.patch_side = patch_side;
    gp.offsets.assign(static_cast<std::size_t>(grids * grids), {0, 0});
    gp.validate(h, w);
    const std::int64_t slack_h = h / grids - patch_side;
    const std::int64_t slack_w = w / grids - patch_side;
    for (auto& [oh, ow] : gp.offsets) {
        oh = rng.uniform_int(0, slack_h);
        ow = rng.uniform_int(0, slack_w);
    }
    return gp;
}

GridParams zero_grid_offsets(std::int64_t h, std::int64_t w, std::int64_t grids,
                             std::int64_t patch_side) {
    GridParams gp;
    gp.grids = grids;
    gp.patch_side = patch_side;
    gp.offsets.assign(static_cast<std::size_t>(grids * grids), {0, 0});
    gp.validate(h, w);
    return gp;
}

std::vector<std::int64_t> fragment_index_map(std::int64_t h, std::int64_t w,
                                             const GridParams& gp) {
    gp.validate(h, w);
    const std::int64_t cell_h = h / gp.grids;
    const std::int64_t cell_w = w / gp.grids;
    const std::int64_t side = gp.grids * gp.patch_side;
    std::vector<std::int64_t> map(static_cast<std::size_t>(side * side));
    for (std::int64_t i = 0; i < gp.grids; ++i) {
        for (std::int64_t j = 0; j < gp.grids; ++j) {
            const auto [oh, ow] = gp.offsets[static_cast<std::size_t>(i * gp.grids + j)];
            for (std::int64_t a = 0; a < gp.patch_side; ++a) {
                for (std::int64_t b = 0; b < gp.patch_side; ++b) {
                    const std::int64_t dy = i * gp.patch_side + a;
                    const std::int64_t dx = j * gp.patch_side + b;
                    const std::int64_t sy = i * cell_h + oh + a;
                    const std::int64_t sx = j * cell_w + ow + b;
                    map[static_cast<std::size_t>(dy * side + dx)] = sy * w + sx;
                }
            }
        }
    }
    return map;
}

Video grid_fragment(const Video& frames, const GridParams& gp) {
    return fragment_impl(frames, gp);
}
FloatVideo grid_fragment(const FloatVideo& frames, const GridParams& gp) {
    return fragment_impl(frames, gp);
}

FloatVideo center_crop_to_multiple(const FloatVideo& v, std::int64_t grids,
                                   std::int64_t* top, std::int64_t* left) {
    const std::int64_t new_h = v.height - v.height % grids;
    const std::int64_t new_w = v.width - v.width % grids;
    if (new_h < grids || new_w < grids) {
        throw GridError("frame " + std::to_string(v.height) + "x" + std::to_string(v.width) +
                        " too small for G=" + std::to_string(grids));
    }
    const std::int64_t off_y = (v.height - new_h) / 2;
    const std::int64_t off_x = (v.width - new_w) / 2;
    if (top) *top = off_y;
    if (left) *left = off_x;
    if (off_y == 0 && off_x == 0) return v;
    FloatVideo out(v.frames, new_h, new_w);
    for (std::int64_t t = 0; t < v.frames; ++t)
        for (std::int64_t y = 0; y < new_h; ++y)
            for (std::int64_t x = 0; x < new_w; ++x)
                for (int c = 0; c < kChannels; ++c)
                    out.at(t, y, x, c) = v.at(t, y + off_y, x + off_x, c);
    return out;
}

GuardianMap gen_guardian_map(std::int64_t h, std::int64_t w, Rng& rng) {
    if (h < 1 || w < 1) throw GridError("guardian map needs H, W >= 1");
    GuardianMap gm;
    gm.height = h;
    gm.width = w;
    gm.values.resize(static_cast<std::size_t>(h * w * kChannels));
    for (double& v : gm.values) v = rng.pm1();
    return gm;
}

FloatVideo apply_guardian_map(const FloatVideo& fv, const GuardianMap& gm) {
    if (fv.height != gm.height || fv.width != gm.width) {
        throw GridError("guardian map " + std::to_string(gm.height) + "x" +
                        std::to_string(gm.width) + " does not match frame " +
                        std::to_string(fv.height) + "x" + std::to_string(fv.width));
    }
    FloatVideo out = fv;
    for (std::int64_t t = 0; t < fv.frames; ++t) {
        for (std::int64_t y = 0; y < fv.height; ++y) {
            for (std::int64_t x = 0; x < fv.width; ++x) {
                if (!gm.masked_at(y, x)) continue;
                for (int c = 0; c < kChannels; ++c) {
                    const std::size_t i = out.index(t, y, x, c);
                    const std::size_t m =
                        static_cast<std::size_t>((y * gm.width + x) * kChannels + c);
                    out.values[i] =
                        std::clamp(out.values[i] + gm.values[m], 0.0, 255.0);
                }
            }
        }
    }
    return out;
}

BilinearAxis bilinear_axis(std::int64_t in_size, std::int64_t out_size) {
    BilinearAxis ax;
    ax.lo.resize(static_cast<std::size_t>(out_size));
    ax.hi.resize(static_cast<std::size_t>(out_size));
    ax.hi_weight.resize(static_cast<std::size_t>(out_size));
    const double scale = static_cast<double>(in_size) / static_cast<double>(out_size);
    for (std::int64_t d = 0; d < out_size; ++d) {
        double src = (static_cast<double>(d) + 0.5) * scale - 0.5;
        src = std::clamp(src, 0.0, static_cast<double>(in_size - 1));
        const double fl = std::floor(src);
        const std::int64_t lo = static_cast<std::int64_t>(fl);
        ax.lo[static_cast<std::size_t>(d)] = lo;
        ax.hi[static_cast<std::size_t>(d)] = std::min(lo + 1, in_size - 1);
        ax.hi_weight[static_cast<std::size_t>(d)] = src - fl;
    }
    return ax;
}

FloatVideo resize_bilinear(const FloatVideo& v, std::int64_t out_h, std::int64_t out_w) {
    if (out_h < 1 || out_w < 1) throw GridError("resize target must be >= 1x1");
    const BilinearAxis ay = bilinear_axis(v.height, out_h);
    const BilinearAxis ax = bilinear_axis(v.width, out_w);
    FloatVideo out(v.frames, out_h, out_w);
    for (std::int64_t t = 0; t < v.frames; ++t) {
        for (std::int64_t y = 0; y < out_h; ++y) {
            const std::int64_t y0 = ay.lo[static_cast<std::size_t>(y)];
            const std::int64_t y1 = ay.hi[static_cast<std::size_t>(y)];
            const double wy = ay.hi_weight[static_cast<std::size_t>(y)];
            for (std::int64_t x = 0; x < out_w; ++x) {
                const std::int64_t x0 = ax.lo[static_cast<std::size_t>(x)];
                const std::int64_t x1 = ax.hi[static_cast<std::size_t>(x)];
                const double wx = ax.hi_weight[static_cast<std::size_t>(x)];
                for (int c = 0; c < kChannels; ++c) {
                    const double v00 = v.at(t, y0, x0, c);
                    const double v01 = v.at(t, y0, x1, c);
                    const double v10 = v.at(t, y1, x0, c);
                    const double v11 = v.at(t, y1, x1, c);
                    out.at(t, y, x, c) = (1.0 - wy) * ((1.0 - wx) * v00 + wx * v01) +
                                         wy * ((1.0 - wx) * v10 + wx * v11);
                }
            }
        }
    }
    return out;
}

PipelineParams PipelineParams::paper() { return PipelineParams{}; }

PipelineParams PipelineParams::desk() {
    PipelineParams p;
    p.skip_interval = 2;
    p.intra_frames = 8;
    p.inter_frames = 8;
    p.grid_count = 4;
    p.patch_side = 8;
    p.resize_height = 56;
    p.resize_width = 56;
    return p;
}

std::string to_string(GuardianRegion r) {
    switch (r) {
        case GuardianRegion::kFull: return "full";
        case GuardianRegion::kAttackedOnly: return "attacked_only";
        case GuardianRegion::kUntouchedOnly: return "untouched_only";
    }
    return "full";
}

GuardianRegion guardian_region_from_string(const std::string& s) {
    if (s == "full") return GuardianRegion::kFull;
    if (s == "attacked_only") return GuardianRegion::kAttackedOnly;
    if (s == "untouched_only") return GuardianRegion::kUntouchedOnly;
    throw ConfigError("unknown guardian region \"" + s + "\"");
}

DefenseConfig DefenseConfig::none() {
    DefenseConfig c;
    c.intra_guardian = false;
    c.inter_guardian = false;
    c.grid_sampling = false;
    c.inter_branch = false;
    c.random_starts = false;
    return c;
}

DefenseConfig DefenseConfig::full() { return DefenseConfig{}; }

std::string DefenseConfig::label() const {
    std::string s;
    auto add = [&](const char* name) {
        if (!s.empty()) s += '+';
        s += name;
    };
    if (intra_guardian) add("gm_intra");
    if (inter_guardian) add("gm_inter");
    if (grid_sampling) add("grid");
    if (inter_branch) add("inter");
    if (random_starts) add("starts");
    if (per_frame_guardian) add("gm_per_frame");
    if (guardian_region != GuardianRegion::kFull) add(to_string(guardian_region).c_str());
    if (stochastic_passes > 1) add(("passes" + std::to_string(stochastic_passes)).c_str());
    if (s.empty()) s = "none";
    return s;
}

}  // namespace vqlab
