#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <openssl/evp.h>

#include "cospec/catalan.hpp"
#include "cospec/errors.hpp"
#include "cospec/euler_product.hpp"
#include "cospec/graph_polynomials.hpp"
#include "cospec/io.hpp"
#include "cospec/moments.hpp"
#include "cospec/summary.hpp"
#include "cospec/verification.hpp"

namespace cospec::cli {
namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Every output carries the config and a hash of everything that determines it.
struct Provenance {
    json config;
    std::string inputHash;
};

Provenance provenance(const RunConfig& config, const std::string& extraInput = {}) {
    Provenance p{config.to_json(), {}};
    p.inputHash = sha256_hex(p.config.dump() + extraInput);
    return p;
}

void write_csv_header(std::ostream& out, const std::string& title, const Provenance& p) {
    out << "# coprime-spectra " << title << '\n';
    out << "# config: " << p.config.dump() << '\n';
    out << "# input_sha256: " << p.inputHash << '\n';
}

// Writes to `path`, or to `fallback` when path is empty.
template <class Body>
void emit(const std::string& path, std::ostream& fallback, Body&& body) {
    if (path.empty()) {
        body(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + path + "'");
    body(file);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + path.string() + "'");
    return file;
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_double(values[i]);
    }
    return out;
}

} // namespace

void RunConfig::validate() const {
    static const std::vector<std::string> commands{"moments", "simulate", "verify", "coprime-prob", "census"};
    if (std::find(commands.begin(), commands.end(), command) == commands.end()) {
        throw ConfigError("unknown command '" + command + "'");
    }
    if (format != "csv" && format != "json") throw ConfigError("--format must be csv or json");
    if (primeBound < 2 || primeBound > kMaxPrimeBound) {
        throw ConfigError("--prime-bound must lie in [2, " + std::to_string(kMaxPrimeBound) + "]");
    }
    if ((command == "moments" || command == "census") && (kMax < 1 || kMax > kDefaultMaxK)) {
        throw ConfigError("--kmax must lie in [1, " + std::to_string(kDefaultMaxK) + "]");
    }
    if (command == "simulate") {
        if (ensemble.n < 2) throw ConfigError("--n must be >= 2");
        if (ensemble.replicas < 1) throw ConfigError("--replicas must be >= 1");
        if (bins < 1) throw ConfigError("--bins must be >= 1");
        if (threads < 0) throw ConfigError("--threads must be >= 0");
    }
    if (command == "coprime-prob") {
        if (graphPath.empty() == !complete.has_value()) {
            throw ConfigError("coprime-prob needs exactly one of --graph or --complete");
        }
        if (complete && (*complete < 1 || *complete > 60)) throw ConfigError("--complete must lie in [1, 60]");
    }
}

json RunConfig::to_json() const {
    json j{{"command", command}, {"format", format}};
    if (command == "moments" || command == "census") j["kmax"] = kMax;
    if (command == "moments" || command == "verify" || command == "coprime-prob") j["prime_bound"] = primeBound;
    if (command == "simulate") {
        j["n"] = ensemble.n;
        j["mask"] = mask_name(ensemble.mask);
        j["law"] = law_name(ensemble.law);
        j["seed"] = ensemble.seed;
        j["replicas"] = ensemble.replicas;
        j["bins"] = bins;
        j["rescale"] = rescale;
        j["center"] = center.value_or(default_center(ensemble.mask));
        j["kde"] = kde;
        j["dump_eigenvalues"] = dumpEigenvalues;
    }
    if (command == "coprime-prob") {
        if (!graphPath.empty()) j["graph"] = graphPath;
        if (complete) j["complete"] = *complete;
    }
    return j;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

int cmd_moments(const RunConfig& config, std::ostream& out) {
    const auto primes = sieve_primes(config.primeBound);
    AValueCache cache(primes);
    const auto wigner = semicircle_moments(config.kMax);
    const auto visible = visible_moments(config.kMax, cache);
    const auto invisible = invisible_moments(config.kMax, cache);
    const auto prov = provenance(config);

    // Informational only: simulations suggest m_IVW <= m_VW, nothing proves it.
    auto ivwBelowVw = [&](int k) { return invisible.at(k).value <= visible.at(k).value; };

    emit(config.output, out, [&](std::ostream& os) {
        if (config.format == "json") {
            json comparison = json::array();
            for (int k = 1; k <= config.kMax; ++k) comparison.push_back({{"k", k}, {"ivw_le_vw", ivwBelowVw(k)}});
            json doc{{"config", prov.config},
                     {"input_sha256", prov.inputHash},
                     {"prime_bound", config.primeBound},
                     {"tables", {to_json(wigner), to_json(visible), to_json(invisible)}},
                     {"comparison", comparison}};
            os << doc.dump(2) << '\n';
            return;
        }
        write_csv_header(os, "moments", prov);
        os << "ensemble,k,moment,tail_bound,ivw_le_vw\n";
        for (const auto* table : {&wigner, &visible, &invisible}) {
            for (const auto& m : table->evenMoments) {
                os << ensemble_label(table->ensemble) << ',' << m.k << ',' << format_double(m.value) << ','
                   << format_double(m.tailBound) << ',' << (ivwBelowVw(m.k) ? 1 : 0) << '\n';
            }
        }
    });
    return kExitOk;
}

int cmd_simulate(const RunConfig& config, std::ostream& out) {
    SummaryOptions options;
    options.bins = config.bins;
    options.rescale = config.rescale;
    options.center = config.center;
    options.kde = config.kde;

    const auto samples = simulate(config.ensemble, config.threads);
    const auto summary = summarize(samples, options);
    const auto prov = provenance(config);

    const std::filesystem::path dir(config.output.empty() ? std::string("simulate_out") : config.output);
    std::filesystem::create_directories(dir);

    {
        auto os = open_output(dir / "replicas.csv");
        write_csv_header(os, "simulate replicas", prov);
        os << "replica,lambda_max";
        for (std::size_t h = 1; h <= 8; ++h) os << ",m" << h;
        os << '\n';
        for (const auto& r : summary.replicas) {
            os << r.replicaIndex << ',' << format_double(r.lambdaMax);
            for (std::size_t h = 0; h < 8; ++h) os << ',' << format_double(r.moments[h]);
            os << '\n';
        }
    }
    {
        auto os = open_output(dir / "histogram.csv");
        write_csv_header(os, "simulate histogram", prov);
        os << "bin_left,bin_right,count,density\n";
        const auto& h = summary.histogram;
        for (std::size_t b = 0; b < h.counts.size(); ++b) {
            os << format_double(h.edges[b]) << ',' << format_double(h.edges[b + 1]) << ',' << h.counts[b] << ','
               << format_double(h.density(b)) << '\n';
        }
    }
    {
        auto os = open_output(dir / "fluctuations.csv");
        write_csv_header(os, "simulate lambda_max fluctuations n^(2/3)(lambda_max - center)", prov);
        os << "replica,lambda_max,fluctuation\n";
        for (const auto& r : summary.replicas) {
            os << r.replicaIndex << ',' << format_double(r.lambdaMax) << ',' << format_double(r.fluctuation) << '\n';
        }
    }
    if (summary.kde) {
        auto os = open_output(dir / "kde.csv");
        write_csv_header(os, "simulate gaussian kde", prov);
        os << "x,density\n";
        for (std::size_t g = 0; g < summary.kde->grid.size(); ++g) {
            os << format_double(summary.kde->grid[g]) << ',' << format_double(summary.kde->density[g]) << '\n';
        }
    }
    if (config.dumpEigenvalues) {
        auto os = open_output(dir / "eigenvalues.csv");
        write_csv_header(os, "simulate eigenvalues", prov);
        os << "replica,index,eigenvalue\n";
        for (const auto& s : samples) {
            for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
                os << s.replicaIndex << ',' << i << ',' << format_double(s.eigenvalues[i]) << '\n';
            }
        }
    }

    json manifest{
        {"config", prov.config},
        {"input_sha256", prov.inputHash},
        {"execution", {{"threads", config.threads}}},
        {"versions",
         {{"coprime_spectra", kVersion},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"compiler", __VERSION__}}},
        {"summary",
         {{"pooled_moments", summary.pooledMoments},
          {"moment_std_errors", summary.momentStdErrors},
          {"free_cumulants", summary.freeCumulants},
          {"free_cumulant_std_errors", summary.cumulantStdErrors},
          {"lambda_max_mean", summary.lambdaMaxMean},
          {"lambda_max_sd", summary.lambdaMaxSd},
          {"center", summary.center},
          {"scale", summary.scale},
          {"histogram_underflow", summary.histogram.underflow},
          {"histogram_overflow", summary.histogram.overflow}}}};
    {
        auto os = open_output(dir / "manifest.json");
        os << manifest.dump(2) << '\n';
    }

    if (config.format == "json") {
        out << manifest["summary"].dump(2) << '\n';
    } else {
        out << "pooled moments m1..m8: " << join(summary.pooledMoments) << '\n';
        out << "free cumulants k1..k5: " << join(summary.freeCumulants) << '\n';
        out << "lambda_max mean " << format_double(summary.lambdaMaxMean) << " sd "
            << format_double(summary.lambdaMaxSd) << '\n';
        out << "outputs written to " << dir.string() << '\n';
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    VerifyOptions options;
    options.primeBound = config.primeBound;
    options.corruptCache = config.corruptCache;
    const auto report = run_verification(options);

    emit(config.output, out, [&](std::ostream& os) {
        if (config.format == "json") {
            json checks = json::array();
            for (const auto& c : report.checks) {
                checks.push_back({{"name", c.name},
                                  {"delta", c.delta},
                                  {"tolerance", c.tolerance},
                                  {"passed", c.passed},
                                  {"detail", c.detail}});
            }
            os << json{{"config", config.to_json()}, {"passed", report.passed()}, {"checks", checks}}.dump(2) << '\n';
            return;
        }
        os << "status,delta,tolerance,check\n";
        for (const auto& c : report.checks) {
            os << (c.passed ? "PASS" : "FAIL") << ',' << format_double(c.delta) << ',' << format_double(c.tolerance)
               << ",\"" << c.name << "\"\n";
        }
        os << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
    });
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_coprime_prob(const RunConfig& config, std::ostream& out) {
    IntPolynomial q;
    std::string graphLabel;
    std::string graphBytes;
    if (config.complete) {
        q = q_complete_graph(*config.complete);
        graphLabel = "K_" + std::to_string(*config.complete);
    } else {
        graphBytes = read_file(config.graphPath);
        GraphInput graph;
        try {
            graph = parse_graph(json::parse(graphBytes));
        } catch (const json::exception& e) {
            throw ConfigError(std::string("malformed graph JSON: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("malformed graph JSON: ") + e.what());
        }
        if (is_forest(graph.vertices, graph.edges)) {
            q = q_polynomial(Forest(graph.vertices, graph.edges));
            graphLabel = "forest";
        } else if (is_complete_graph(graph.vertices, graph.edges)) {
            q = q_complete_graph(graph.vertices);
            graphLabel = "K_" + std::to_string(graph.vertices);
        } else {
            throw ConfigError("unsupported graph class: coprime-prob handles forests and complete graphs only");
        }
    }

    const auto product = euler_product(q, sieve_primes(config.primeBound));
    const auto prov = provenance(config, graphBytes);
    emit(config.output, out, [&](std::ostream& os) {
        if (config.format == "json") {
            auto doc = to_json(product);
            doc["graph"] = graphLabel;
            doc["polynomial"] = to_json(q);
            doc["config"] = prov.config;
            doc["input_sha256"] = prov.inputHash;
            os << doc.dump(2) << '\n';
            return;
        }
        write_csv_header(os, "coprime-prob", prov);
        os << "graph,value,tail_bound,prime_bound,polynomial\n";
        os << graphLabel << ',' << format_double(product.value) << ',' << format_double(product.tailBound) << ','
           << product.primeBound << ",\"" << q.str() << "\"\n";
    });
    return kExitOk;
}

int cmd_census(const RunConfig& config, std::ostream& out) {
    const auto prov = provenance(config);
    json doc = json::array();
    std::ostringstream csv;
    csv << "k,shape,vertices,words,example_word\n";
    for (int k = 1; k <= config.kMax; ++k) {
        std::map<TreeShape, std::pair<std::int64_t, CatalanWord>> byShape;
        const auto words = enumerate_catalan_words(k);
        for (const auto& w : words) {
            auto [it, inserted] = byShape.try_emplace(canonical_shape(word_to_tree(w)), 0, w);
            ++it->second.first;
        }
        json shapes = json::array();
        for (const auto& [shape, entry] : byShape) {
            const auto& [count, example] = entry;
            csv << k << ',' << shape.canonicalCode << ',' << shape.vertexCount << ',' << count << ','
                << example.str() << '\n';
            shapes.push_back({{"shape", shape.canonicalCode},
                              {"vertices", shape.vertexCount},
                              {"words", count},
                              {"example_word", example.str()},
                              {"tree", to_json(word_to_tree(example))}});
        }
        doc.push_back({{"k", k}, {"catalan_words", words.size()}, {"tree_shapes", byShape.size()}, {"shapes", shapes}});
    }
    emit(config.output, out, [&](std::ostream& os) {
        if (config.format == "json") {
            os << json{{"config", prov.config}, {"input_sha256", prov.inputHash}, {"census", doc}}.dump(2) << '\n';
            return;
        }
        write_csv_header(os, "census", prov);
        os << csv.str();
    });
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and Monte Carlo spectral moments of coprimality-masked Wigner matrices", "coprime-spectra"};
    app.require_subcommand(1);

    RunConfig config;
    std::string mask = "none";
    std::string law = "gaussian";

    auto addPrimeBound = [&](CLI::App* sub) {
        sub->add_option("--prime-bound", config.primeBound, "Largest prime in the Euler product")
            ->envname(kPrimeBoundEnv);
    };
    auto addOutput = [&](CLI::App* sub, const std::string& help) {
        sub->add_option("--output,-o", config.output, help);
        sub->add_option("--format", config.format, "csv or json");
    };

    auto* moments = app.add_subcommand("moments", "Exact limit moments of the W, VW and IVW ensembles");
    moments->add_option("--kmax", config.kMax, "Largest k for m_{2k}");
    addPrimeBound(moments);
    addOutput(moments, "Output file (default stdout)");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo spectra and plot-ready statistics");
    sim->add_option("--n", config.ensemble.n, "Matrix dimension");
    sim->add_option("--mask", mask, "none, visible or invisible");
    sim->add_option("--law", law, "gaussian, rademacher or uniform");
    sim->add_option("--seed", config.ensemble.seed, "64-bit seed");
    sim->add_option("--replicas", config.ensemble.replicas, "Number of independent matrices");
    sim->add_option("--bins", config.bins, "Histogram bins over [-2.2, 2.2]");
    sim->add_flag("--rescale", config.rescale, "Scale spectra to unit limiting second moment");
    sim->add_option("--center", config.center, "Centre for n^(2/3)(lambda_max - centre)");
    sim->add_flag("--kde", config.kde, "Also write a Gaussian KDE");
    sim->add_flag("--dump-eigenvalues", config.dumpEigenvalues, "Write every eigenvalue");
    sim->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
    addOutput(sim, "Output directory (default ./simulate_out)");

    auto* verify = app.add_subcommand("verify", "Run the small-instance oracle checks");
    addPrimeBound(verify);
    addOutput(verify, "Report file (default stdout)");
    verify->add_flag("--inject-corrupt-cache", config.corruptCache, "Test hook: poison the A-value cache")
        ->group("");

    auto* coprime = app.add_subcommand("coprime-prob", "Limiting probability of coprimality along graph edges");
    coprime->add_option("--graph", config.graphPath, "JSON edge list {\"vertices\": m, \"edges\": [[u,v],...]}");
    coprime->add_option("--complete", config.complete, "Use the complete graph K_k");
    addPrimeBound(coprime);
    addOutput(coprime, "Output file (default stdout)");

    auto* census = app.add_subcommand("census", "Catalan words grouped by the shape of G(w)");
    census->add_option("--kmax", config.kMax, "Largest k");
    addOutput(census, "Output file (default stdout)");

    std::vector<const char*> argv{"coprime-spectra"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        config.ensemble.mask = parse_mask(mask);
        config.ensemble.law = parse_law(law);
        config.validate();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (config.command == "moments") return cmd_moments(config, out);
        if (config.command == "simulate") return cmd_simulate(config, out);
        if (config.command == "verify") return cmd_verify(config, out);
        if (config.command == "coprime-prob") return cmd_coprime_prob(config, out);
        return cmd_census(config, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const BoundedInputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace cospec::cli
