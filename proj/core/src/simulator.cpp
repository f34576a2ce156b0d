#include "cospec/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

#include "cospec/primes.hpp"

namespace cospec {
namespace {

constexpr std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform on (0, 1]: never returns 0 so log() is safe.
double open_unit(std::uint64_t bits) { return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53; }

} // namespace

std::string_view mask_name(Mask mask) {
    switch (mask) {
    case Mask::none:
        return "none";
    case Mask::visible:
        return "visible";
    case Mask::invisible:
        return "invisible";
    }
    return "?";
}

std::string_view law_name(EntryLaw law) {
    switch (law) {
    case EntryLaw::gaussian:
        return "gaussian";
    case EntryLaw::rademacher:
        return "rademacher";
    case EntryLaw::uniform:
        return "uniform";
    }
    return "?";
}

Mask parse_mask(std::string_view name) {
    for (auto m : {Mask::none, Mask::visible, Mask::invisible}) {
        if (mask_name(m) == name) return m;
    }
    throw std::invalid_argument("unknown mask '" + std::string(name) + "'");
}

EntryLaw parse_law(std::string_view name) {
    for (auto l : {EntryLaw::gaussian, EntryLaw::rademacher, EntryLaw::uniform}) {
        if (law_name(l) == name) return l;
    }
    throw std::invalid_argument("unknown entry law '" + std::string(name) + "'");
}

void EnsembleSpec::validate() const {
    if (n < 2) throw std::invalid_argument("matrix dimension n must be >= 2");
    if (replicas < 1) throw std::invalid_argument("replicas must be >= 1");
}

EntryStream::EntryStream(std::uint64_t seed, std::uint64_t replica)
    : key_(splitmix(splitmix(seed) ^ splitmix(replica + 0x632be59bd9b4e019ULL))) {}

std::uint64_t EntryStream::bits(std::uint32_t i, std::uint32_t j, std::uint32_t lane) const {
    const std::uint64_t cell = (static_cast<std::uint64_t>(i) << 32) | j;
    return splitmix(key_ ^ splitmix(splitmix(cell) + lane));
}

double EntryStream::draw(EntryLaw law, std::uint32_t i, std::uint32_t j) const {
    switch (law) {
    case EntryLaw::gaussian: {
        const double radius = std::sqrt(-2.0 * std::log(open_unit(bits(i, j, 0))));
        return radius * std::cos(2.0 * std::numbers::pi * open_unit(bits(i, j, 1)));
    }
    case EntryLaw::rademacher:
        return (bits(i, j, 0) >> 63) ? 1.0 : -1.0;
    case EntryLaw::uniform:
        return std::sqrt(3.0) * (2.0 * open_unit(bits(i, j, 0)) - 1.0);
    }
    return 0.0;
}

bool mask_keeps(Mask mask, std::int64_t i, std::int64_t j) {
    switch (mask) {
    case Mask::none:
        return true;
    case Mask::visible:
        return std::gcd(i, j) == 1;
    case Mask::invisible:
        return std::gcd(i, j) != 1;
    }
    return true;
}

Rational mask_density(std::int64_t n, Mask mask) {
    if (n < 1) throw std::invalid_argument("mask_density needs n >= 1");
    const auto total = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    const std::uint64_t coprime = 2 * totient_sum(n) - 1;
    std::uint64_t kept = total;
    if (mask == Mask::visible) kept = coprime;
    if (mask == Mask::invisible) kept = total - coprime;
    const auto g = std::gcd(kept, total);
    return Rational{kept / g, total / g};
}

Eigen::MatrixXd generate_matrix(const EnsembleSpec& spec, int replicaIndex) {
    spec.validate();
    const int n = spec.n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const EntryStream stream(spec.seed, static_cast<std::uint64_t>(replicaIndex));
    Eigen::MatrixXd a(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i <= j; ++i) {
            double x = 0.0;
            if (mask_keeps(spec.mask, i + 1, j + 1)) {
                x = stream.draw(spec.law, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)) * scale;
            }
            a(i, j) = x;
            a(j, i) = x;
        }
    }
    return a;
}

std::vector<double> eigenvalues(const Eigen::MatrixXd& matrix) {
    if (matrix.rows() != matrix.cols()) throw std::invalid_argument("eigenvalues: matrix is not square");
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
        for (Eigen::Index i = 0; i < j; ++i) {
            if (matrix(i, j) != matrix(j, i)) throw std::invalid_argument("eigenvalues: matrix is not symmetric");
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(out.begin(), out.end());
    return out;
}

double max_eigen_residual(const Eigen::MatrixXd& matrix, int samples, std::uint64_t seed) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::ComputeEigenvectors);
    const auto n = static_cast<std::uint64_t>(matrix.rows());
    const double norm = matrix.norm();
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const auto idx = static_cast<Eigen::Index>(splitmix(seed + static_cast<std::uint64_t>(s)) % n);
        const Eigen::VectorXd v = solver.eigenvectors().col(idx);
        const double r = (matrix * v - solver.eigenvalues()(idx) * v).norm();
        worst = std::max(worst, norm > 0 ? r / norm : r);
    }
    return worst;
}

SpectrumSample sample_spectrum(const EnsembleSpec& spec, int replicaIndex) {
    return SpectrumSample{eigenvalues(generate_matrix(spec, replicaIndex)), spec, replicaIndex};
}

std::vector<SpectrumSample> simulate(const EnsembleSpec& spec, int threads) {
    spec.validate();
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, spec.replicas);

    std::vector<SpectrumSample> out(static_cast<std::size_t>(spec.replicas));
    std::atomic<int> next{0};
    std::mutex errorMutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            for (int r = next++; r < spec.replicas; r = next++) {
                out[static_cast<std::size_t>(r)] = sample_spectrum(spec, r);
            }
        } catch (...) {
            std::lock_guard lock(errorMutex);
            if (!error) error = std::current_exception();
            next = spec.replicas;
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    return out;
}

} // namespace cospec
