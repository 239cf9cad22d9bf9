#include "vqlab/scorer.hpp"

#include <cmath>

#include "vqlab/errors.hpp"

namespace vqlab {

namespace {

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

}  // namespace

ScoredGradient Scorer::score_with_gradient(const FloatVideo&, Rng&) const {
    throw CapabilityError("scorer \"" + name() + "\" exposes no input gradient");
}

double MeanPixelScorer::score(const FloatVideo& v, Rng&) const {
    double acc = 0.0;
    for (double x : v.values) acc += x;
    return acc / static_cast<double>(v.values.size());
}

ScoredGradient MeanPixelScorer::score_with_gradient(const FloatVideo& v, Rng& rng) const {
    ScoredGradient out;
    out.score = score(v, rng);
    out.gradient = FloatVideo(v.frames, v.height, v.width,
                              1.0 / static_cast<double>(v.values.size()));
    return out;
}

AnalyticScorer::Terms AnalyticScorer::compute_terms(const FloatVideo& v) {
    Terms t;
    const std::int64_t T = v.frames, H = v.height, W = v.width;

    double sharp_sum = 0.0;
    const std::int64_t n_dx = T * H * (W - 1) * kChannels;
    const std::int64_t n_dy = T * (H - 1) * W * kChannels;
    for (std::int64_t f = 0; f < T; ++f) {
        for (std::int64_t y = 0; y < H; ++y) {
            for (std::int64_t x = 0; x < W; ++x) {
                for (int c = 0; c < kChannels; ++c) {
                    const double p = v.at(f, y, x, c);
                    if (x + 1 < W) sharp_sum += std::abs(v.at(f, y, x + 1, c) - p);
                    if (y + 1 < H) sharp_sum += std::abs(v.at(f, y + 1, x, c) - p);
                }
            }
        }
    }
    t.sharpness = (n_dx + n_dy) > 0 ? sharp_sum / static_cast<double>(n_dx + n_dy) : 0.0;

    if (H >= 3 && W >= 3) {
        double lap_sum = 0.0;
        for (std::int64_t f = 0; f < T; ++f) {
            for (std::int64_t y = 1; y + 1 < H; ++y) {
                for (std::int64_t x = 1; x + 1 < W; ++x) {
                    for (int c = 0; c < kChannels; ++c) {
                        const double l = 4.0 * v.at(f, y, x, c) - v.at(f, y - 1, x, c) -
                                         v.at(f, y + 1, x, c) - v.at(f, y, x - 1, c) -
                                         v.at(f, y, x + 1, c);
                        lap_sum += l * l;
                    }
                }
            }
        }
        t.noise_proxy = lap_sum / static_cast<double>(T * (H - 2) * (W - 2) * kChannels);
    }

    if (T >= 2) {
        double temp_sum = 0.0;
        const std::size_t frame_len = static_cast<std::size_t>(H * W * kChannels);
        for (std::int64_t f = 0; f + 1 < T; ++f) {
            const double* a = v.values.data() + static_cast<std::size_t>(f) * frame_len;
            const double* b = a + frame_len;
            for (std::size_t i = 0; i < frame_len; ++i) temp_sum += std::abs(b[i] - a[i]);
        }
        t.temporal_roughness =
            temp_sum / static_cast<double>((T - 1) * H * W * kChannels);
    }
    return t;
}

double AnalyticScorer::score(const FloatVideo& v, Rng&) const {
    const Terms t = compute_terms(v);
    const double z = weights_.sharpness * t.sharpness - weights_.noise * t.noise_proxy -
                     weights_.temporal * t.temporal_roughness + weights_.bias;
    return 1.0 + 4.0 * sigmoid(z);
}

ScoredGradient AnalyticScorer::score_with_gradient(const FloatVideo& v, Rng&) const {
    const std::int64_t T = v.frames, H = v.height, W = v.width;
    const Terms t = compute_terms(v);
    const double z = weights_.sharpness * t.sharpness - weights_.noise * t.noise_proxy -
                     weights_.temporal * t.temporal_roughness + weights_.bias;
    const double s = sigmoid(z);

    ScoredGradient out;
    out.score = 1.0 + 4.0 * s;
    out.gradient = FloatVideo(T, H, W, 0.0);
    FloatVideo& g = out.gradient;

    // d score / d term, folded with each term's normalization.
    const double dscore_dz = 4.0 * s * (1.0 - s);
    const std::int64_t n_dx = T * H * (W - 1) * kChannels;
    const std::int64_t n_dy = T * (H - 1) * W * kChannels;
    const double c_sharp = (n_dx + n_dy) > 0
                               ? dscore_dz * weights_.sharpness /
                                     static_cast<double>(n_dx + n_dy)
                               : 0.0;
    const double c_noise =
        (H >= 3 && W >= 3)
            ? -dscore_dz * weights_.noise * 2.0 /
                  static_cast<double>(T * (H - 2) * (W - 2) * kChannels)
            : 0.0;
    const double c_temp =
        T >= 2 ? -dscore_dz * weights_.temporal /
                     static_cast<double>((T - 1) * H * W * kChannels)
               : 0.0;

    for (std::int64_t f = 0; f < T; ++f) {
        for (std::int64_t y = 0; y < H; ++y) {
            for (std::int64_t x = 0; x < W; ++x) {
                for (int c = 0; c < kChannels; ++c) {
                    const double p = v.at(f, y, x, c);
                    if (x + 1 < W) {
                        const double d = sgn(v.at(f, y, x + 1, c) - p) * c_sharp;
                        g.at(f, y, x + 1, c) += d;
                        g.at(f, y, x, c) -= d;
                    }
                    if (y + 1 < H) {
                        const double d = sgn(v.at(f, y + 1, x, c) - p) * c_sharp;
                        g.at(f, y + 1, x, c) += d;
                        g.at(f, y, x, c) -= d;
                    }
                }
            }
        }
    }

    if (H >= 3 && W >= 3) {
        for (std::int64_t f = 0; f < T; ++f) {
            for (std::int64_t y = 1; y + 1 < H; ++y) {
                for (std::int64_t x = 1; x + 1 < W; ++x) {
                    for (int c = 0; c < kChannels; ++c) {
                        const double l = 4.0 * v.at(f, y, x, c) - v.at(f, y - 1, x, c) -
                                         v.at(f, y + 1, x, c) - v.at(f, y, x - 1, c) -
                                         v.at(f, y, x + 1, c);
                        const double d = c_noise * l;
                        g.at(f, y, x, c) += 4.0 * d;
                        g.at(f, y - 1, x, c) -= d;
                        g.at(f, y + 1, x, c) -= d;
                        g.at(f, y, x - 1, c) -= d;
                        g.at(f, y, x + 1, c) -= d;
                    }
                }
            }
        }
    }

    if (T >= 2) {
        const std::size_t frame_len = static_cast<std::size_t>(H * W * kChannels);
        for (std::int64_t f = 0; f + 1 < T; ++f) {
            const double* a = v.values.data() + static_cast<std::size_t>(f) * frame_len;
            const double* b = a + frame_len;
            double* ga = g.values.data() + static_cast<std::size_t>(f) * frame_len;
            double* gb = ga + frame_len;
            for (std::size_t i = 0; i < frame_len; ++i) {
                const double d = sgn(b[i] - a[i]) * c_temp;
                gb[i] += d;
                ga[i] -= d;
            }
        }
    }

    return out;
}

}  // namespace vqlab
