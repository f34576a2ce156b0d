#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace cospec {

enum class Mask { none, visible, invisible };
enum class EntryLaw { gaussian, rademacher, uniform };

std::string_view mask_name(Mask mask);
std::string_view law_name(EntryLaw law);
/// Throw std::invalid_argument on unknown names.
Mask parse_mask(std::string_view name);
EntryLaw parse_law(std::string_view name);

/// All three entry laws have mean 0 and variance 1.
struct EnsembleSpec {
    int n = 1000;
    Mask mask = Mask::none;
    EntryLaw law = EntryLaw::gaussian;
    std::uint64_t seed = 1;
    int replicas = 1;

    /// Throws std::invalid_argument unless n >= 2 and replicas >= 1.
    void validate() const;
};

/// Counter-based entry generator: the value at (i, j) depends only on
/// (seed, replica, i, j), never on generation order.
class EntryStream {
public:
    EntryStream(std::uint64_t seed, std::uint64_t replica);

    /// Raw 64-bit output for cell (i, j) and sub-stream `lane`.
    std::uint64_t bits(std::uint32_t i, std::uint32_t j, std::uint32_t lane) const;
    double draw(EntryLaw law, std::uint32_t i, std::uint32_t j) const;

private:
    std::uint64_t key_;
};

/// Mask rule on 1-based indices.
bool mask_keeps(Mask mask, std::int64_t i, std::int64_t j);

struct Rational {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    bool operator==(const Rational&) const = default;
};

/// Exact fraction of (i, j) in [n]^2 kept by the mask, in lowest terms.
Rational mask_density(std::int64_t n, Mask mask);

/// n^{-1/2} (W o mask) for replica `replicaIndex`; entries i <= j are drawn
/// from the keyed stream and mirrored.
Eigen::MatrixXd generate_matrix(const EnsembleSpec& spec, int replicaIndex);

/// Full ascending spectrum of a dense symmetric matrix. Throws
/// std::invalid_argument if the matrix is not exactly symmetric.
std::vector<double> eigenvalues(const Eigen::MatrixXd& matrix);

/// max over `samples` eigenpairs (chosen from `seed`) of ||Av - lambda v|| / ||A||_F.
double max_eigen_residual(const Eigen::MatrixXd& matrix, int samples, std::uint64_t seed);

struct SpectrumSample {
    std::vector<double> eigenvalues;
    EnsembleSpec spec;
    int replicaIndex = 0;
};

SpectrumSample sample_spectrum(const EnsembleSpec& spec, int replicaIndex);

/// Replicas 0..spec.replicas-1, spread over `threads` workers (<= 0 means
/// hardware concurrency). Output is ordered by replica index and does not
/// depend on the thread count.
std::vector<SpectrumSample> simulate(const EnsembleSpec& spec, int threads = 1);

} // namespace cospec
