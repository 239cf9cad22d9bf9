#ifndef VQLAB_DEFENSE_HPP
#define VQLAB_DEFENSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vqlab/rng.hpp"
#include "vqlab/video.hpp"

namespace vqlab {

// Temporal sampling parameters. For skip sampling the last index is
// s + n*(d-1) and must be < T (end-exclusive reading of the frame slice);
// for continuous sampling s + d <= T.
struct SamplingParams {
    std::int64_t start = 0;     // s
    std::int64_t interval = 1;  // n
    std::int64_t count = 1;     // d
};

// One patch offset per grid cell, shared by all frames of a sequence.
struct GridParams {
    std::int64_t grids = 1;       // G per side
    std::int64_t patch_side = 1;  // S
    // offsets[i*G + j] = {h, w} of the patch inside grid cell (i, j).
    std::vector<std::pair<std::int64_t, std::int64_t>> offsets;

    // Throws GridError unless H mod G == 0, W mod G == 0, S <= H/G, S <= W/G
    // and every offset fits its cell.
    void validate(std::int64_t h, std::int64_t w) const;
};

// Frame-shaped +/-1 tensor. When region_mask is present (H*W booleans),
// application touches only masked pixels.
struct GuardianMap {
    std::int64_t height = 0;
    std::int64_t width = 0;
    std::vector<double> values;       // H*W*3, each exactly -1 or +1
    std::vector<std::uint8_t> region_mask;  // empty, or H*W with 1 = apply

    bool has_mask() const { return !region_mask.empty(); }
    bool masked_at(std::int64_t y, std::int64_t x) const {
        return region_mask.empty() ||
               region_mask[static_cast<std::size_t>(y * width + x)] != 0;
    }
};

// --- temporal sampling -------------------------------------------------

Video skip_sample(const Video& v, const SamplingParams& p);
FloatVideo skip_sample(const FloatVideo& v, const SamplingParams& p);

Video continuous_sample(const Video& v, std::int64_t start, std::int64_t count);
FloatVideo continuous_sample(const FloatVideo& v, std::int64_t start, std::int64_t count);

// --- spatial grid fragmentation -----------------------------------------

// Draws each cell's offset independently and uniformly from
// {0..H/G-S} x {0..W/G-S}. Deterministic given the rng state.
GridParams sample_grid_offsets(std::int64_t h, std::int64_t w, std::int64_t grids,
                               std::int64_t patch_side, Rng& rng);

// Zero-offset grid (the deterministic center-free baseline).
GridParams zero_grid_offsets(std::int64_t h, std::int64_t w, std::int64_t grids,
                             std::int64_t patch_side);

// Splices the selected S x S patch of every grid cell into a
// (G*S) x (G*S) mosaic, same offsets for every frame.
Video grid_fragment(const Video& frames, const GridParams& gp);
FloatVideo grid_fragment(const FloatVideo& frames, const GridParams& gp);

// Per-output-pixel source coordinates for one frame: entry (y*GS + x) holds
// src_y * W + src_x. Used by gradient scatter and by test oracles.
std::vector<std::int64_t> fragment_index_map(std::int64_t h, std::int64_t w,
                                             const GridParams& gp);

// Largest centered crop whose sides are divisible by `grids`.
// Returns the (top, left) offset applied; output dims are h - h%G, w - w%G.
FloatVideo center_crop_to_multiple(const FloatVideo& v, std::int64_t grids,
                                   std::int64_t* top = nullptr,
                                   std::int64_t* left = nullptr);

// --- pixel-wise randomization --------------------------------------------

// Every element is an independent fair draw from {-1, +1}; no region mask.
GuardianMap gen_guardian_map(std::int64_t h, std::int64_t w, Rng& rng);

// out[t] = clamp(fv[t] + gm.values, 0, 255) where the mask allows, unchanged
// elsewhere; the same map is added to every frame.
FloatVideo apply_guardian_map(const FloatVideo& fv, const GuardianMap& gm);

// --- resize ----------------------------------------------------------------

// Bilinear sampling weights along one axis with half-pixel centers:
// src = (dst + 0.5) * in/out - 0.5, edge-clamped.
struct BilinearAxis {
    std::vector<std::int64_t> lo;  // floor index
    std::vector<std::int64_t> hi;  // lo+1 clamped to in-1
    std::vector<double> hi_weight; // weight of hi; lo gets 1 - hi_weight
};
BilinearAxis bilinear_axis(std::int64_t in_size, std::int64_t out_size);

// Per-channel bilinear resize of every frame; half-pixel centers, edge-clamped.
FloatVideo resize_bilinear(const FloatVideo& v, std::int64_t out_h, std::int64_t out_w);

// --- configuration ----------------------------------------------------------

// Structural constants of the scoring pipeline.
struct PipelineParams {
    std::int64_t skip_interval = 2;   // n
    std::int64_t intra_frames = 32;   // d for the skip-sampled branch
    std::int64_t inter_frames = 32;   // d for the continuous branch
    std::int64_t grid_count = 7;      // G
    std::int64_t patch_side = 32;     // S
    std::int64_t resize_height = 224;
    std::int64_t resize_width = 224;

    std::int64_t fragment_side() const { return grid_count * patch_side; }

    static PipelineParams paper();  // n=2, d=32, G=7, S=32, resize 224x224
    static PipelineParams desk();   // n=2, d=8,  G=4, S=8,  resize 56x56
};

enum class GuardianRegion { kFull, kAttackedOnly, kUntouchedOnly };

std::string to_string(GuardianRegion r);
GuardianRegion guardian_region_from_string(const std::string& s);

// Per-strategy defense toggles. With every flag false and
// stochastic_passes == 1 the scorer is a deterministic function of the video.
struct DefenseConfig {
    bool intra_guardian = true;
    bool inter_guardian = true;
    bool grid_sampling = true;   // false -> plain resize in the intra branch
    bool inter_branch = true;    // false -> temporal embedding zeroed
    bool random_starts = true;   // false -> both branches start at frame 0
    bool per_frame_guardian = false;
    GuardianRegion guardian_region = GuardianRegion::kFull;
    int stochastic_passes = 1;   // scores averaged over this many fresh draws

    static DefenseConfig none();
    static DefenseConfig full();

    bool any_randomness() const {
        return intra_guardian || inter_guardian || grid_sampling || random_starts;
    }
    std::string label() const;
};

}  // namespace vqlab

#endif
