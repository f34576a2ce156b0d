#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "cospec/free_cumulants.hpp"
#include "cospec/primes.hpp"
#include "cospec/simulator.hpp"
#include "cospec/summary.hpp"

using namespace cospec;

TEST_CASE("mask rule and names") {
    CHECK(mask_keeps(Mask::none, 2, 4));
    CHECK(mask_keeps(Mask::visible, 1, 1));
    CHECK_FALSE(mask_keeps(Mask::visible, 2, 4));
    CHECK(mask_keeps(Mask::invisible, 2, 4));
    CHECK_FALSE(mask_keeps(Mask::invisible, 3, 4));
    CHECK(parse_mask("visible") == Mask::visible);
    CHECK(parse_law("rademacher") == EntryLaw::rademacher);
    CHECK(mask_name(Mask::invisible) == "invisible");
    CHECK(law_name(EntryLaw::uniform) == "uniform");
    CHECK_THROWS_AS(parse_mask("hidden"), std::invalid_argument);
    CHECK_THROWS_AS(parse_law("cauchy"), std::invalid_argument);
}

TEST_CASE("mask densities are exact fractions") {
    CHECK(mask_density(4, Mask::visible) == Rational{11, 16});
    CHECK(mask_density(4, Mask::invisible) == Rational{5, 16});
    CHECK(mask_density(4, Mask::none) == Rational{1, 1});
    const auto v = mask_density(100'000, Mask::visible);
    CHECK(v.value() == doctest::Approx(double(2 * totient_sum(100'000) - 1) / 1e10).epsilon(1e-15));
    const double six = 6 / (std::numbers::pi * std::numbers::pi);
    CHECK(std::abs(v.value() - six) <= 10 * std::log(1e5) / 1e5);
}

TEST_CASE("entry stream is counter based") {
    const EntryStream s(7, 3);
    const EntryStream same(7, 3);
    const EntryStream other(7, 4);
    CHECK(s.bits(5, 9, 0) == same.bits(5, 9, 0));
    CHECK(s.bits(5, 9, 0) != s.bits(5, 9, 1));
    CHECK(s.bits(5, 9, 0) != s.bits(9, 5, 0));
    CHECK(s.bits(5, 9, 0) != other.bits(5, 9, 0));
    CHECK(s.draw(EntryLaw::gaussian, 1, 2) == same.draw(EntryLaw::gaussian, 1, 2));
    const double r = s.draw(EntryLaw::rademacher, 3, 3);
    CHECK((r == 1.0 || r == -1.0));
    CHECK(std::abs(s.draw(EntryLaw::uniform, 3, 4)) <= std::sqrt(3.0));
}

TEST_CASE("property: every entry law has mean 0 and variance 1") {
    for (auto law : {EntryLaw::gaussian, EntryLaw::rademacher, EntryLaw::uniform}) {
        const EntryStream s(99, 0);
        double sum = 0, sq = 0;
        const int n = 400;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double x = s.draw(law, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
                sum += x;
                sq += x * x;
            }
        const double count = double(n) * n;
        CHECK(std::abs(sum / count) < 5 / std::sqrt(count));
        CHECK(std::abs(sq / count - 1.0) < 0.02);
    }
}

TEST_CASE("generated matrices are symmetric, masked and reproducible") {
    EnsembleSpec spec;
    spec.n = 60;
    spec.mask = Mask::visible;
    spec.seed = 5;
    const auto a = generate_matrix(spec, 2);
    CHECK(a == generate_matrix(spec, 2));
    CHECK(a != generate_matrix(spec, 3));
    CHECK(a == a.transpose());
    for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j < spec.n; ++j)
            if (std::gcd(i + 1, j + 1) != 1) CHECK(a(i, j) == 0.0);
    spec.mask = Mask::none;
    const auto full = generate_matrix(spec, 2);
    spec.mask = Mask::invisible;
    const auto hidden = generate_matrix(spec, 2);
    // the two masks split the same underlying Wigner matrix
    CHECK((a + hidden - full).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(full(0, 1) * std::sqrt(60.0) - EntryStream(5, 2).draw(EntryLaw::gaussian, 0, 1)) < 1e-15);
}

TEST_CASE("eigen decomposition") {
    EnsembleSpec spec;
    spec.n = 120;
    const auto a = generate_matrix(spec, 0);
    const auto ev = eigenvalues(a);
    CHECK(ev.size() == 120);
    CHECK(std::is_sorted(ev.begin(), ev.end()));
    CHECK(std::accumulate(ev.begin(), ev.end(), 0.0) == doctest::Approx(a.trace()).epsilon(1e-10));
    CHECK(max_eigen_residual(a, 5, 1) < 1e-12);
    Eigen::MatrixXd bad = a;
    bad(0, 1) += 1e-3;
    CHECK_THROWS_AS(eigenvalues(bad), std::invalid_argument);
}

TEST_CASE("spec validation") {
    EnsembleSpec spec;
    spec.n = 1;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.n = 10;
    spec.replicas = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("simulation output does not depend on the thread count") {
    EnsembleSpec spec;
    spec.n = 80;
    spec.replicas = 7;
    spec.mask = Mask::invisible;
    spec.law = EntryLaw::rademacher;
    const auto one = simulate(spec, 1);
    const auto three = simulate(spec, 3);
    REQUIRE(one.size() == 7);
    for (std::size_t r = 0; r < one.size(); ++r) {
        CHECK(one[r].replicaIndex == static_cast<int>(r));
        CHECK(one[r].eigenvalues == three[r].eigenvalues);
    }
}

TEST_CASE("summary statistics") {
    EnsembleSpec spec;
    spec.n = 200;
    spec.replicas = 4;
    const auto samples = simulate(spec);
    SummaryOptions options;
    options.kde = true;
    const auto s = summarize(samples, options);
    CHECK(s.n == 200);
    CHECK(s.center == 2.0);
    CHECK(s.replicas.size() == 4);
    CHECK(s.histogram.total() + s.histogram.underflow + s.histogram.overflow == 800);
    CHECK(s.histogram.counts.size() == 81);
    double integral = 0;
    for (std::size_t b = 0; b < s.histogram.counts.size(); ++b) {
        integral += s.histogram.density(b) * (s.histogram.edges[b + 1] - s.histogram.edges[b]);
    }
    CHECK(integral == doctest::Approx(double(s.histogram.total()) / 800));
    REQUIRE(s.kde);
    CHECK(s.kde->grid.size() == 201);
    CHECK(s.kde->bandwidth > 0);
    double mean = 0;
    for (const auto& r : s.replicas) {
        CHECK(r.lambdaMax == samples[static_cast<std::size_t>(r.replicaIndex)].eigenvalues.back());
        CHECK(r.fluctuation == doctest::Approx(std::pow(200.0, 2.0 / 3) * (r.lambdaMax - 2.0)));
        mean += r.moments[1] / 4;
    }
    CHECK(s.pooledMoments[1] == doctest::Approx(mean));
    CHECK(s.pooledMoments[1] == doctest::Approx(1.0).epsilon(0.05));
    CHECK(s.freeCumulants.size() == 5);
    CHECK(s.freeCumulants[1] == doctest::Approx(s.pooledMoments[1] - s.pooledMoments[0] * s.pooledMoments[0]));
    CHECK_THROWS_AS(summarize(std::span<const SpectrumSample>{}), std::invalid_argument);
}

TEST_CASE("empirical moments and mean/sd") {
    const std::vector<double> v{-1, 1, 2};
    const auto m = empirical_moments(v, 3);
    CHECK(m[0] == doctest::Approx(2.0 / 3));
    CHECK(m[1] == doctest::Approx(2.0));
    CHECK(m[2] == doctest::Approx(8.0 / 3));
    const auto [mean, sd] = mean_and_sd(v);
    CHECK(mean == doctest::Approx(2.0 / 3));
    CHECK(sd == doctest::Approx(std::sqrt(7.0 / 3)));
    CHECK(limiting_scale(Mask::visible) == doctest::Approx(std::sqrt(6 / (std::numbers::pi * std::numbers::pi))));
    CHECK(default_center(Mask::invisible) == 1.515);
}
