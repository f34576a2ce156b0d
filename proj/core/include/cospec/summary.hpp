#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cospec/simulator.hpp"

namespace cospec {

/// Largest-eigenvalue centring constants per mask: 2, 1.705, 1.515.
double default_center(Mask mask);

/// Limiting standard deviation of the ESD: 1, sqrt(6/pi^2), sqrt(1 - 6/pi^2).
double limiting_scale(Mask mask);

/// (1/n) sum lambda_i^h for h = 1..maxOrder.
std::vector<double> empirical_moments(std::span<const double> eigenvalues, int maxOrder);

struct SummaryOptions {
    int bins = 81;
    double histogramLow = -2.2;
    double histogramHigh = 2.2;
    int momentMax = 8;
    int cumulantMax = 5;
    /// Divide eigenvalues by limiting_scale(mask) before the histogram / KDE.
    bool rescale = false;
    /// Defaults to default_center(mask).
    std::optional<double> center;
    bool kde = false;
    int kdeGridPoints = 201;
};

struct Histogram {
    std::vector<double> edges;
    std::vector<std::int64_t> counts;
    std::int64_t underflow = 0;
    std::int64_t overflow = 0;

    std::int64_t total() const;
    /// counts[bin] / (total * width), so the density integrates to the
    /// in-range fraction.
    double density(std::size_t bin) const;
};

struct KernelDensity {
    double bandwidth = 0.0;
    std::vector<double> grid;
    std::vector<double> density;
};

struct ReplicaStats {
    int replicaIndex = 0;
    double lambdaMax = 0.0;
    /// n^{2/3} (lambdaMax - center).
    double fluctuation = 0.0;
    std::vector<double> moments;
    std::vector<double> freeCumulants;
};

struct SpectralSummary {
    int n = 0;
    double center = 0.0;
    double scale = 1.0;
    std::vector<ReplicaStats> replicas;
    /// Means over replicas (equal to moments of the pooled eigenvalues) and
    /// their standard errors across replicas.
    std::vector<double> pooledMoments;
    std::vector<double> momentStdErrors;
    /// Free cumulants of the pooled moments, and the standard error of the
    /// per-replica cumulants.
    std::vector<double> freeCumulants;
    std::vector<double> cumulantStdErrors;
    double lambdaMaxMean = 0.0;
    double lambdaMaxSd = 0.0;
    Histogram histogram;
    std::optional<KernelDensity> kde;
};

/// Throws std::invalid_argument on empty input or mixed n.
SpectralSummary summarize(std::span<const SpectrumSample> samples, const SummaryOptions& options = {});

/// Mean and sample standard deviation, accumulated in input order.
std::pair<double, double> mean_and_sd(std::span<const double> values);

} // namespace cospec
