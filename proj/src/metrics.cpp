#include "vqlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vqlab/errors.hpp"

namespace vqlab {

namespace {

void check_pair(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw DegenerateError("correlation inputs differ in length: " +
                              std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
    if (x.size() < 2) throw DegenerateError("correlation needs at least two pairs");
    for (double v : x)
        if (!std::isfinite(v)) throw DegenerateError("non-finite value in predictions");
    for (double v : y)
        if (!std::isfinite(v)) throw DegenerateError("non-finite value in references");
}

}  // namespace

double plcc(const std::vector<double>& x, const std::vector<double>& y) {
    check_pair(x, y);
    const std::size_t n = x.size();
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = x[i] - mx;
        const double b = y[i] - my;
        sxy += a * b;
        sxx += a * a;
        syy += b * b;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DegenerateError("zero variance input, correlation undefined");
    }
    return sxy / std::sqrt(sxx * syy);
}

std::vector<double> average_ranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        // Positions i..j (0-based) share the mean of 1-based ranks i+1..j+1.
        const double mean_rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

double srcc(const std::vector<double>& x, const std::vector<double>& y) {
    check_pair(x, y);
    return plcc(average_ranks(x), average_ranks(y));
}

RMetricResult r_metric(const std::vector<RobustnessRecord>& records) {
    if (records.empty()) throw DegenerateError("r_metric needs at least one record");
    RMetricResult result;
    double sum = 0.0;
    std::size_t kept = 0;
    for (const RobustnessRecord& r : records) {
        const double gap = std::abs(r.f_orig - r.tar);
        if (gap == 0.0) {
            ++result.excluded;
            continue;
        }
        const double moved = std::max(std::abs(r.f_orig - r.f_adv), kRMetricEpsilon);
        sum += std::log(gap / moved);
        ++kept;
    }
    if (kept == 0) throw DegenerateError("all r_metric records excluded (tar == f_orig)");
    result.value = sum / static_cast<double>(kept);
    return result;
}

}  // namespace vqlab
