#ifndef VQLAB_METRICS_HPP
#define VQLAB_METRICS_HPP

#include <cstddef>
#include <vector>

namespace vqlab {

struct ScorePairs {
    std::vector<double> predictions;
    std::vector<double> references;
};

// Pearson product-moment correlation. No nonlinear pre-mapping is applied.
// Throws DegenerateError when either vector has zero variance or fewer than
// two entries.
double plcc(const std::vector<double>& x, const std::vector<double>& y);
inline double plcc(const ScorePairs& p) { return plcc(p.predictions, p.references); }

// Average ranks: ties receive the mean of the rank positions they occupy
// (1-based). Exposed for tests and rank-based consumers.
std::vector<double> average_ranks(const std::vector<double>& v);

// Spearman rank correlation = Pearson correlation of average ranks.
double srcc(const std::vector<double>& x, const std::vector<double>& y);
inline double srcc(const ScorePairs& p) { return srcc(p.predictions, p.references); }

// One attacked video: clean score, post-attack score, attack target.
struct RobustnessRecord {
    double f_orig = 0.0;
    double f_adv = 0.0;
    double tar = 0.0;
};

struct RMetricResult {
    double value = 0.0;
    std::size_t excluded = 0;  // records with tar == f_orig, dropped from the mean
};

// Mean over records of ln(|f_orig - tar| / max(|f_orig - f_adv|, eps)),
// eps = 1e-8. Higher means the attack moved the score less relative to its
// target gap; overshoot yields negative terms and is preserved as-is.
inline constexpr double kRMetricEpsilon = 1e-8;
RMetricResult r_metric(const std::vector<RobustnessRecord>& records);

}  // namespace vqlab

#endif
