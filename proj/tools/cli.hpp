#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cospec/primes.hpp"
#include "cospec/simulator.hpp"

namespace cospec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerifyFailed = 3;

inline constexpr const char* kPrimeBoundEnv = "COPRIME_SPECTRA_PRIME_BOUND";

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int kMax = 6;
    std::int64_t primeBound = kDefaultPrimeBound;
    EnsembleSpec ensemble;
    int bins = 81;
    bool rescale = false;
    std::optional<double> center;
    bool kde = false;
    bool dumpEigenvalues = false;
    std::string graphPath;
    std::optional<int> complete;
    std::string output;
    std::string format = "csv";
    /// Execution-only knobs; excluded from the serialized config so outputs
    /// do not depend on them.
    int threads = 1;
    bool corruptCache = false;

    /// Throws ConfigError.
    void validate() const;
    nlohmann::json to_json() const;
};

/// Parses argv and runs one subcommand. Returns the process exit code;
/// never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Command bodies, exposed for tests. Each assumes a validated config.
int cmd_moments(const RunConfig& config, std::ostream& out);
int cmd_simulate(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_coprime_prob(const RunConfig& config, std::ostream& out);
int cmd_census(const RunConfig& config, std::ostream& out);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

} // namespace cospec::cli
