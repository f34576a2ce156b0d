#include "cospec/summary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "cospec/free_cumulants.hpp"

namespace cospec {
namespace {

constexpr double kVisibleSecondMoment = 6.0 / (std::numbers::pi * std::numbers::pi);

// Neumaier-compensated running sum; the result depends only on input order.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

std::vector<double> standard_errors(const std::vector<ReplicaStats>& replicas,
                                    std::vector<double> ReplicaStats::*field, std::size_t width) {
    std::vector<double> out(width, 0.0);
    if (replicas.size() < 2) return out;
    std::vector<double> column(replicas.size());
    for (std::size_t h = 0; h < width; ++h) {
        for (std::size_t r = 0; r < replicas.size(); ++r) column[r] = (replicas[r].*field)[h];
        out[h] = mean_and_sd(column).second / std::sqrt(static_cast<double>(replicas.size()));
    }
    return out;
}

double quantile(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

KernelDensity gaussian_kde(const std::vector<double>& points, double low, double high, int gridPoints) {
    KernelDensity kde;
    const auto [mean, sd] = mean_and_sd(points);
    (void)mean;
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    const double iqr = quantile(sorted, 0.75) - quantile(sorted, 0.25);
    double spread = iqr > 0 ? std::min(sd, iqr / 1.34) : sd;
    if (!(spread > 0)) spread = 1.0;
    kde.bandwidth = 0.9 * spread * std::pow(static_cast<double>(points.size()), -0.2);

    const double norm = 1.0 / (static_cast<double>(points.size()) * kde.bandwidth * std::sqrt(2.0 * std::numbers::pi));
    for (int g = 0; g < gridPoints; ++g) {
        const double x = gridPoints > 1 ? low + (high - low) * g / (gridPoints - 1) : low;
        CompensatedSum acc;
        for (double p : sorted) {
            const double u = (x - p) / kde.bandwidth;
            acc.add(std::exp(-0.5 * u * u));
        }
        kde.grid.push_back(x);
        kde.density.push_back(norm * acc.value());
    }
    return kde;
}

} // namespace

double default_center(Mask mask) {
    switch (mask) {
    case Mask::none:
        return 2.0;
    case Mask::visible:
        return 1.705;
    case Mask::invisible:
        return 1.515;
    }
    return 2.0;
}

double limiting_scale(Mask mask) {
    switch (mask) {
    case Mask::none:
        return 1.0;
    case Mask::visible:
        return std::sqrt(kVisibleSecondMoment);
    case Mask::invisible:
        return std::sqrt(1.0 - kVisibleSecondMoment);
    }
    return 1.0;
}

std::pair<double, double> mean_and_sd(std::span<const double> values) {
    if (values.empty()) return {0.0, 0.0};
    CompensatedSum sum;
    for (double v : values) sum.add(v);
    const double mean = sum.value() / static_cast<double>(values.size());
    if (values.size() < 2) return {mean, 0.0};
    CompensatedSum squares;
    for (double v : values) squares.add((v - mean) * (v - mean));
    return {mean, std::sqrt(squares.value() / static_cast<double>(values.size() - 1))};
}

std::vector<double> empirical_moments(std::span<const double> eigenvalues, int maxOrder) {
    std::vector<CompensatedSum> sums(static_cast<std::size_t>(std::max(maxOrder, 0)));
    for (double lambda : eigenvalues) {
        double power = 1.0;
        for (auto& s : sums) {
            power *= lambda;
            s.add(power);
        }
    }
    std::vector<double> out;
    for (const auto& s : sums) out.push_back(s.value() / static_cast<double>(eigenvalues.size()));
    return out;
}

std::int64_t Histogram::total() const {
    std::int64_t t = underflow + overflow;
    for (auto c : counts) t += c;
    return t;
}

double Histogram::density(std::size_t bin) const {
    const auto all = total();
    if (all == 0) return 0.0;
    return static_cast<double>(counts[bin]) / (static_cast<double>(all) * (edges[bin + 1] - edges[bin]));
}

SpectralSummary summarize(std::span<const SpectrumSample> samples, const SummaryOptions& options) {
    if (samples.empty()) throw std::invalid_argument("summarize: no spectrum samples");
    if (options.bins < 1 || !(options.histogramHigh > options.histogramLow)) {
        throw std::invalid_argument("summarize: bad histogram range");
    }
    const auto order = std::max(options.momentMax, options.cumulantMax);
    if (options.cumulantMax > kMaxCumulantOrder) throw std::invalid_argument("summarize: cumulantMax > 8");

    const auto& spec = samples.front().spec;
    SpectralSummary out;
    out.n = static_cast<int>(samples.front().eigenvalues.size());
    out.center = options.center.value_or(default_center(spec.mask));
    out.scale = options.rescale ? limiting_scale(spec.mask) : 1.0;

    out.histogram.edges.resize(static_cast<std::size_t>(options.bins) + 1);
    for (int b = 0; b <= options.bins; ++b) {
        out.histogram.edges[static_cast<std::size_t>(b)] =
            options.histogramLow + (options.histogramHigh - options.histogramLow) * b / options.bins;
    }
    out.histogram.counts.assign(static_cast<std::size_t>(options.bins), 0);
    const double binWidth = (options.histogramHigh - options.histogramLow) / options.bins;

    std::vector<double> pooled;
    const double edgeScale = std::pow(static_cast<double>(out.n), 2.0 / 3.0);
    for (const auto& sample : samples) {
        if (static_cast<int>(sample.eigenvalues.size()) != out.n) {
            throw std::invalid_argument("summarize: samples have different dimensions");
        }
        ReplicaStats stats;
        stats.replicaIndex = sample.replicaIndex;
        stats.lambdaMax = *std::max_element(sample.eigenvalues.begin(), sample.eigenvalues.end());
        stats.fluctuation = edgeScale * (stats.lambdaMax - out.center);
        stats.moments = empirical_moments(sample.eigenvalues, order);
        stats.freeCumulants = free_cumulants_from_moments(
            std::span<const double>(stats.moments).first(static_cast<std::size_t>(options.cumulantMax)));
        out.replicas.push_back(std::move(stats));

        for (double lambda : sample.eigenvalues) {
            const double x = lambda / out.scale;
            if (options.kde) pooled.push_back(x);
            if (x < options.histogramLow) {
                ++out.histogram.underflow;
            } else if (x >= options.histogramHigh) {
                ++out.histogram.overflow;
            } else {
                auto bin = static_cast<std::size_t>((x - options.histogramLow) / binWidth);
                ++out.histogram.counts[std::min(bin, out.histogram.counts.size() - 1)];
            }
        }
    }

    std::vector<double> column(out.replicas.size());
    out.pooledMoments.resize(static_cast<std::size_t>(order));
    for (std::size_t h = 0; h < out.pooledMoments.size(); ++h) {
        for (std::size_t r = 0; r < column.size(); ++r) column[r] = out.replicas[r].moments[h];
        out.pooledMoments[h] = mean_and_sd(column).first;
    }
    out.momentStdErrors = standard_errors(out.replicas, &ReplicaStats::moments, out.pooledMoments.size());
    out.freeCumulants = free_cumulants_from_moments(
        std::span<const double>(out.pooledMoments).first(static_cast<std::size_t>(options.cumulantMax)));
    out.cumulantStdErrors =
        standard_errors(out.replicas, &ReplicaStats::freeCumulants, static_cast<std::size_t>(options.cumulantMax));
    out.pooledMoments.resize(static_cast<std::size_t>(options.momentMax));
    out.momentStdErrors.resize(static_cast<std::size_t>(options.momentMax));

    for (std::size_t r = 0; r < column.size(); ++r) column[r] = out.replicas[r].lambdaMax;
    std::tie(out.lambdaMaxMean, out.lambdaMaxSd) = mean_and_sd(column);

    if (options.kde) {
        out.kde = gaussian_kde(pooled, options.histogramLow, options.histogramHigh, options.kdeGridPoints);
    }
    return out;
}

} // namespace cospec
