#ifndef VQLAB_SCORER_HPP
#define VQLAB_SCORER_HPP

#include <string>

#include "vqlab/rng.hpp"
#include "vqlab/video.hpp"

namespace vqlab {

struct ScoredGradient {
    double score = 0.0;
    FloatVideo gradient;  // d score / d pixel, same shape as the input
};

// A quality scoring function over videos. Scores are computed on the float
// representation (0-255 scale) so attack pipelines can query intermediate
// non-integer iterates; all stochasticity enters through the explicit rng.
class Scorer {
public:
    virtual ~Scorer() = default;

    virtual std::string name() const = 0;

    // One stochastic pass. Must return a finite value for every valid video.
    virtual double score(const FloatVideo& v, Rng& rng) const = 0;

    virtual bool has_input_gradient() const { return false; }

    // Score and input gradient taken from the same stochastic pass.
    // Throws CapabilityError unless has_input_gradient().
    virtual ScoredGradient score_with_gradient(const FloatVideo& v, Rng& rng) const;

    FloatVideo input_gradient(const FloatVideo& v, Rng& rng) const {
        return score_with_gradient(v, rng).gradient;
    }
    double score(const Video& v, Rng& rng) const { return score(as_float(v), rng); }
};

// score = mean over all pixel values. Linear, exact gradient 1/N everywhere.
class MeanPixelScorer final : public Scorer {
public:
    std::string name() const override { return "mean"; }
    double score(const FloatVideo& v, Rng& rng) const override;
    bool has_input_gradient() const override { return true; }
    ScoredGradient score_with_gradient(const FloatVideo& v, Rng& rng) const override;
};

// Closed-form differentiable scorer:
//   score = 1 + 4 * sigmoid(w_sharp * sharpness - w_noise * noise_proxy
//                           - w_temporal * temporal_roughness + bias)
// sharpness          = mean |forward difference|, horizontal and vertical pooled
// noise_proxy        = mean squared 4-neighbour Laplacian response (interior)
// temporal_roughness = mean |consecutive frame difference|
// Always emits within (1, 5); every term has a closed-form input gradient.
class AnalyticScorer final : public Scorer {
public:
    struct Weights {
        double sharpness = 0.16;
        double noise = 0.004;
        double temporal = 0.12;
        double bias = 1.2;
    };

    AnalyticScorer() = default;
    explicit AnalyticScorer(const Weights& w) : weights_(w) {}

    std::string name() const override { return "analytic"; }
    double score(const FloatVideo& v, Rng& rng) const override;
    bool has_input_gradient() const override { return true; }
    ScoredGradient score_with_gradient(const FloatVideo& v, Rng& rng) const override;

    // The three pooled statistics, exposed for calibration and tests.
    struct Terms {
        double sharpness = 0.0;
        double noise_proxy = 0.0;
        double temporal_roughness = 0.0;
    };
    static Terms compute_terms(const FloatVideo& v);

    const Weights& weights() const { return weights_; }

private:
    Weights weights_{};
};

}  // namespace vqlab

#endif
