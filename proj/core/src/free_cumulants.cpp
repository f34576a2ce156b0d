#include "cospec/free_cumulants.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "cospec/errors.hpp"

namespace cospec {
namespace {

bool crossing_free(const std::vector<int>& blockOf) {
    const auto n = blockOf.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (blockOf[a] == blockOf[c] && blockOf[b] == blockOf[d] && blockOf[a] != blockOf[b])
                        return false;
    return true;
}

// Walks restricted growth strings (all set partitions) and keeps the
// non-crossing ones.
void collect(std::vector<int>& blockOf, int blocks, std::size_t n, std::vector<std::vector<int>>& out) {
    if (blockOf.size() == n) {
        if (!crossing_free(blockOf)) return;
        std::vector<int> sizes(static_cast<std::size_t>(blocks), 0);
        for (int b : blockOf) ++sizes[static_cast<std::size_t>(b)];
        std::sort(sizes.begin(), sizes.end());
        out.push_back(std::move(sizes));
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        blockOf.push_back(b);
        collect(blockOf, std::max(blocks, b + 1), n, out);
        blockOf.pop_back();
    }
}

const std::vector<std::vector<int>>& cached_partitions(int n) {
    static std::array<std::vector<std::vector<int>>, kMaxCumulantOrder + 1> table;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int j = 1; j <= kMaxCumulantOrder; ++j) {
            std::vector<int> blockOf;
            collect(blockOf, 0, static_cast<std::size_t>(j), table[static_cast<std::size_t>(j)]);
        }
    });
    return table[static_cast<std::size_t>(n)];
}

void check_order(std::size_t n) {
    if (n > static_cast<std::size_t>(kMaxCumulantOrder)) {
        throw BoundedInputError("free cumulant conversion supports at most order 8");
    }
}

} // namespace

std::vector<std::vector<int>> non_crossing_partitions(int n) {
    check_order(static_cast<std::size_t>(std::max(n, 0)));
    if (n < 1) return {};
    return cached_partitions(n);
}

std::vector<double> free_cumulants_from_moments(std::span<const double> moments) {
    check_order(moments.size());
    std::vector<double> kappa;
    for (std::size_t j = 1; j <= moments.size(); ++j) {
        // The single-block partition contributes kappa_j itself; every other
        // partition only involves lower-order cumulants.
        double rest = 0.0;
        for (const auto& sizes : cached_partitions(static_cast<int>(j))) {
            if (sizes.size() == 1) continue;
            double product = 1.0;
            for (int s : sizes) product *= kappa[static_cast<std::size_t>(s) - 1];
            rest += product;
        }
        kappa.push_back(moments[j - 1] - rest);
    }
    return kappa;
}

std::vector<double> moments_from_free_cumulants(std::span<const double> cumulants) {
    check_order(cumulants.size());
    std::vector<double> moments;
    for (std::size_t j = 1; j <= cumulants.size(); ++j) {
        double total = 0.0;
        for (const auto& sizes : cached_partitions(static_cast<int>(j))) {
            double product = 1.0;
            for (int s : sizes) product *= cumulants[static_cast<std::size_t>(s) - 1];
            total += product;
        }
        moments.push_back(total);
    }
    return moments;
}

} // namespace cospec
