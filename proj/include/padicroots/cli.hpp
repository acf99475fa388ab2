/*
   Copyright 2026 The padicroots Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PADICROOTS_CLI_HPP
#define PADICROOTS_CLI_HPP

#include "padicroots/sampler.hpp"
#include "padicroots/table_io.hpp"
#include "padicroots/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace padicroots {

enum ExitStatus : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Raised for arguments that parse but make no sense together.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    int n_max = 6;
    std::optional<int> d_max;
    std::vector<long> primes{2, 3, 5};
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int k0 = 8;
    int k_cap = 512;
    unsigned threads = 0;
    double abandon_threshold = 1e-3;
    bool strict = false;
    std::string format = "text";
    std::string output;

    // table
    std::string grid;
    std::string genfun;
    std::optional<int> n;
    std::optional<int> index;

    // sample / exhaust
    std::vector<int> degrees;
    std::vector<std::string> modes;
    int K = 4;
    std::uint64_t budget = 50000000;

    // Test hook: add an integer to N_d before anything is computed.
    std::vector<std::string> corrupt_irreducible;

    int resolved_d_max() const { return d_max.value_or(n_max); }

    void validate() const
    {
        if (n_max < 0 || resolved_d_max() < 0 || resolved_d_max() > n_max) {
            throw UsageError("need n_max >= d_max >= 0");
        }
        if (trials < 1) {
            throw UsageError("need trials >= 1");
        }
        for (long p : primes) {
            if (!is_prime(p)) {
                throw UsageError(std::to_string(p) + " is not prime");
            }
        }
        if (!parse_format(format)) {
            throw UsageError("unknown format '" + format + "'");
        }
    }

    std::map<int, long> irreducible_offsets() const
    {
        std::map<int, long> out;
        for (const auto& spec : corrupt_irreducible) {
            const auto colon = spec.find(':');
            try {
                if (colon == std::string::npos) {
                    throw std::invalid_argument(spec);
                }
                out[std::stoi(spec.substr(0, colon))] += std::stol(spec.substr(colon + 1));
            } catch (const std::exception&) {
                throw UsageError("corruption hook expects D:DELTA, got '" + spec + "'");
            }
        }
        return out;
    }
};

namespace detail {

inline std::filesystem::path output_path(const std::string& requested)
{
    std::filesystem::path path(requested);
    if (const char* dir = std::getenv("PADICROOTS_OUTPUT_DIR"); dir != nullptr && *dir != '\0' && path.is_relative()) {
        path = std::filesystem::path(dir) / path;
    }
    return path;
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    const auto path = output_path(cfg.output);
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write " + path.string());
    }
    file << text;
}

inline std::vector<SamplingMode> resolve_modes(const std::vector<std::string>& names)
{
    std::vector<SamplingMode> modes;
    for (const auto& s : names) {
        const auto m = parse_mode(s);
        if (!m) {
            throw UsageError("unknown mode '" + s + "' (general, monic, monic_xn)");
        }
        modes.push_back(*m);
    }
    if (modes.empty()) {
        modes = {SamplingMode::general, SamplingMode::monic, SamplingMode::monic_xn};
    }
    return modes;
}

inline int cmd_table(RunConfig cfg, std::ostream& out)
{
    if (!parse_format(cfg.format)) {
        throw UsageError("unknown format '" + cfg.format + "'");
    }
    const OutputFormat format = *parse_format(cfg.format);
    if (cfg.grid.empty() == cfg.genfun.empty()) {
        throw UsageError("table needs exactly one of --grid or --genfun");
    }
    if (!cfg.genfun.empty()) {
        const auto q = parse_genfun(cfg.genfun);
        if (!q) {
            throw UsageError("--genfun takes A, B or R");
        }
        if (cfg.index && *cfg.index < 0) {
            throw UsageError("--d must be nonnegative");
        }
        // Closing column d needs rows up to n = 2d.
        if (cfg.index) {
            cfg.n_max = std::max(cfg.n_max, 2 * *cfg.index);
            cfg.d_max = std::max(cfg.resolved_d_max(), *cfg.index);
        }
        cfg.validate();
        const DensityTable table = compute_density_table(cfg.n_max, cfg.resolved_d_max());
        std::string text;
        const int lo = cfg.index.value_or(0);
        const int hi = cfg.index ? *cfg.index : std::min(cfg.resolved_d_max(), cfg.n_max / 2);
        for (int d = lo; d <= hi; ++d) {
            const GeneratingPolynomials g = assemble_generating_polynomials(table, d);
            const TruncatedSeries& s = *q == Quantity::alpha ? g.A : *q == Quantity::beta ? g.B : g.R;
            text += render_genfun(*q, d, s, format);
        }
        emit(cfg, text, out);
        return kExitOk;
    }
    const auto q = parse_quantity(cfg.grid);
    if (!q) {
        throw UsageError("unknown grid '" + cfg.grid + "'");
    }
    if (cfg.n) {
        if (*cfg.n < 0) {
            throw UsageError("--n must be nonnegative");
        }
        cfg.n_max = std::max(cfg.n_max, *cfg.n);
    }
    if (!is_moment(*q) && cfg.resolved_d_max() < cfg.n_max) {
        throw UsageError("probability grids need d_max >= n_max");
    }
    cfg.validate();
    const DensityTable table = compute_density_table(cfg.n_max, cfg.resolved_d_max());
    std::vector<GridEntry> entries;
    try {
        entries = select_entries(table, *q, cfg.n, cfg.index);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    emit(cfg, render_entries(entries, format), out);
    return kExitOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const SplittingCounts counts(cfg.n_max, cfg.irreducible_offsets());
    const VerificationReport report = verify_all(cfg.n_max, cfg.resolved_d_max(), counts);
    nlohmann::json j = report.to_json();
    j["n_max"] = cfg.n_max;
    j["d_max"] = cfg.resolved_d_max();
    emit(cfg, cfg.format == "json" ? j.dump(2) + "\n" : report.to_text(), out);
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

inline int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const std::vector<int> degrees = cfg.degrees.empty() ? std::vector<int>{2, 3, 4} : cfg.degrees;
    const std::vector<SamplingMode> modes = resolve_modes(cfg.modes);
    int top = 0;
    for (int n : degrees) {
        if (n < 1) {
            throw UsageError("sampling needs degrees n >= 1");
        }
        top = std::max(top, n);
    }
    const DensityTable table = compute_density_table(top, top);
    nlohmann::json reports = nlohmann::json::array();
    bool abandoned_ok = true;
    std::string text;
    for (int n : degrees) {
        for (long p : cfg.primes) {
            for (SamplingMode mode : modes) {
                SamplerConfig sc;
                sc.n = n;
                sc.p = p;
                sc.mode = mode;
                sc.trials = cfg.trials;
                sc.seed = cfg.seed;
                sc.k0 = cfg.k0;
                sc.k_cap = cfg.k_cap;
                sc.threads = cfg.threads;
                sc.abandon_threshold = cfg.abandon_threshold;
                try {
                    sc.validate();
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                const MonteCarloResult r = monte_carlo(sc, expected_distribution(table, n, p, mode));
                if (!r.abandoned_ok()) {
                    abandoned_ok = false;
                    err << "warning: " << r.histogram.abandoned << " of " << sc.trials << " trials abandoned for n=" << n
                        << " p=" << p << " mode=" << mode_name(mode) << "\n";
                }
                nlohmann::json j = r.to_json();
                j["max_abs_z"] = std::isfinite(r.max_abs_z()) ? nlohmann::json(r.max_abs_z()) : nlohmann::json(nullptr);
                text += "n=" + std::to_string(n) + " p=" + std::to_string(p) + " mode=" + std::string(mode_name(mode));
                for (std::size_t k = 0; k < r.expected.size(); ++k) {
                    text += "  r=" + std::to_string(k) + ":" + std::to_string(r.histogram.counts[k]);
                }
                text += "  max|z|=" + (j["max_abs_z"].is_null() ? std::string("inf") : std::to_string(r.max_abs_z()))
                        + "  abandoned=" + std::to_string(r.histogram.abandoned) + "\n";
                reports.push_back(std::move(j));
            }
        }
    }
    if (cfg.format == "json") {
        emit(cfg, (reports.size() == 1 ? reports.front() : reports).dump(2) + "\n", out);
    } else {
        emit(cfg, text, out);
    }
    return cfg.strict && !abandoned_ok ? kExitCheckFailed : kExitOk;
}

inline int cmd_limits(const RunConfig& cfg, std::ostream& out)
{
    const DensityTable table = compute_density_table(cfg.n_max, cfg.resolved_d_max());
    nlohmann::json items = nlohmann::json::array();
    std::string text;
    auto add = [&](const std::string& label, long correction, const RationalFunction& f) {
        const LargePLimit l = large_p_limit(RationalFunction::p_power(correction) * f);
        const std::string v = detail::limit_text(l);
        const std::string name = correction == 0 ? label : "p^" + std::to_string(correction) + " " + label;
        text += "lim " + name + " = " + v + "\n";
        items.push_back({{"quantity", name}, {"limit", v}});
    };
    for (Quantity q : kAllQuantities) {
        if (!table.has(q) || q == Quantity::alpha_tilde) {
            continue;
        }
        const bool beta_like = q == Quantity::beta || q == Quantity::beta_star;
        for (int n = 0; n <= table.n_max(); ++n) {
            for (int k = 0; k < static_cast<int>(table.row_size(q, n)); ++k) {
                const long correction = beta_like ? detail::choose2(std::min(k + 1, n)) : 0;
                add(detail::at_label(q, n, k), correction, table.at(q, n, k));
            }
        }
    }
    const VerificationReport report = verify_large_p(table);
    if (cfg.format == "json") {
        emit(cfg, nlohmann::json{{"limits", items}, {"checks", report.to_json()}}.dump(2) + "\n", out);
    } else {
        emit(cfg, text + report.to_text(), out);
    }
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

inline int cmd_exhaust(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.degrees.size() != 1 || cfg.primes.size() != 1) {
        throw UsageError("exhaust takes exactly one --n and one --p");
    }
    const std::vector<SamplingMode> modes = resolve_modes(cfg.modes.empty() ? std::vector<std::string>{"general"} : cfg.modes);
    const int n = cfg.degrees.front();
    const long p = cfg.primes.front();
    if (n < 1 || cfg.K < 1) {
        throw UsageError("exhaust needs n >= 1 and K >= 1");
    }
    const DensityTable table = compute_density_table(n, n);
    nlohmann::json reports = nlohmann::json::array();
    std::string text;
    bool all_bracketed = true;
    for (SamplingMode mode : modes) {
        ExhaustiveResult res;
        try {
            res = exhaustive_small(n, p, cfg.K, mode, cfg.budget);
        } catch (const std::length_error& e) {
            throw UsageError(e.what());
        }
        const auto expected = expected_distribution(table, n, p, mode);
        nlohmann::json j = res.to_json();
        nlohmann::json brackets = nlohmann::json::object();
        text += "n=" + std::to_string(n) + " p=" + std::to_string(p) + " K=" + std::to_string(cfg.K)
                + " mode=" + std::string(mode_name(mode)) + " undetermined=" + res.undetermined_fraction().get_str() + "\n";
        for (int r = 0; r <= n; ++r) {
            const bool ok = res.brackets(r, expected[static_cast<std::size_t>(r)]);
            all_bracketed = all_bracketed && ok;
            const Rational lo = res.determined_fraction(r);
            const Rational hi = lo + res.undetermined_fraction();
            brackets[std::to_string(r)] = {{"lower", lo.get_str()},
                                           {"upper", hi.get_str()},
                                           {"exact", expected[static_cast<std::size_t>(r)].get_str()},
                                           {"bracketed", ok}};
            text += "  r=" + std::to_string(r) + "  " + lo.get_str() + " <= " + expected[static_cast<std::size_t>(r)].get_str()
                    + " <= " + hi.get_str() + (ok ? "" : "  VIOLATED") + "\n";
        }
        j["brackets"] = std::move(brackets);
        reports.push_back(std::move(j));
    }
    emit(cfg, cfg.format == "json" ? (reports.size() == 1 ? reports.front() : reports).dump(2) + "\n" : text, out);
    return all_bracketed ? kExitOk : kExitCheckFailed;
}

} // namespace detail

/// Parses argv and runs one subcommand; returns the process exit status.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact densities of p-adic polynomial root counts, with a Monte Carlo oracle"};
    app.name("padicroots");
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--n-max", cfg.n_max, "largest degree n")->capture_default_str();
        sub->add_option("--d-max", cfg.d_max, "largest moment index d (default n_max)");
        sub->add_option("--format", cfg.format, "text, csv, json or latex")->capture_default_str();
        sub->add_option("--output,-o", cfg.output, "write here instead of stdout (relative to $PADICROOTS_OUTPUT_DIR)");
    };
    auto sampling = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.primes, "primes")->capture_default_str();
        sub->add_option("--mode", cfg.modes, "general, monic, monic_xn (default all)");
    };

    CLI::App* table = app.add_subcommand("table", "print a grid or a generating polynomial");
    common(table);
    table->add_option("--grid", cfg.grid, "alpha, beta, rho, alpha_tilde, alpha_star, beta_star or rho_star");
    table->add_option("--genfun", cfg.genfun, "A, B or R");
    table->add_option("--n", cfg.n, "only row n");
    table->add_option("--d,--r", cfg.index, "only index d (moments, generating functions) or r (probabilities)");

    CLI::App* verify = app.add_subcommand("verify", "check every identity; exit 1 on any failure");
    common(verify);
    verify->add_option("--corrupt-irreducible", cfg.corrupt_irreducible, "test hook: D:DELTA adds DELTA to N_D")
        ->group("");

    CLI::App* sample = app.add_subcommand("sample", "Monte Carlo root counts against the exact densities");
    common(sample);
    sampling(sample);
    sample->add_option("--n", cfg.degrees, "degrees (default 2 3 4)");
    sample->add_option("--trials", cfg.trials)->capture_default_str();
    sample->add_option("--seed", cfg.seed)->capture_default_str();
    sample->add_option("--k0", cfg.k0, "initial p-adic precision")->capture_default_str();
    sample->add_option("--k-cap", cfg.k_cap, "precision cap")->capture_default_str();
    sample->add_option("--threads", cfg.threads, "0 = all cores")->capture_default_str();
    sample->add_option("--abandon-threshold", cfg.abandon_threshold)->capture_default_str();
    sample->add_flag("--strict", cfg.strict, "exit 1 when too many trials are abandoned");

    CLI::App* limits = app.add_subcommand("limits", "large-p limits of every grid entry");
    common(limits);

    CLI::App* exhaust = app.add_subcommand("exhaust", "enumerate every sample at precision K");
    common(exhaust);
    sampling(exhaust);
    exhaust->add_option("--n", cfg.degrees, "degree")->required();
    exhaust->add_option("--K", cfg.K, "precision")->capture_default_str();
    exhaust->add_option("--budget", cfg.budget, "maximum number of samples")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*table) {
            return detail::cmd_table(cfg, out);
        }
        cfg.validate();
        if (*verify) {
            return detail::cmd_verify(cfg, out);
        }
        if (*sample) {
            return detail::cmd_sample(cfg, out, err);
        }
        if (*limits) {
            return detail::cmd_limits(cfg, out);
        }
        if (*exhaust) {
            return detail::cmd_exhaust(cfg, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

} // namespace padicroots

#endif // PADICROOTS_CLI_HPP
