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

#ifndef PADICROOTS_SAMPLER_HPP
#define PADICROOTS_SAMPLER_HPP

#include "padicroots/densities.hpp"
#include "padicroots/padic.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace padicroots {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Per-trial random stream: mt19937_64 seeded from (master seed, trial index).
/**
 * Draws avoid std::uniform_int_distribution, whose output is
 * implementation-defined, so histograms are identical across platforms and
 * thread counts.
 */
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t index) : engine_(splitmix64(splitmix64(seed) ^ index)) {}

    /// Uniform in [0, m), m >= 1, by rejection.
    std::uint64_t below(std::uint64_t m)
    {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % m;
        std::uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return x % m;
    }

    /// Uniform in [0, p^k): k independent base-p digits, drawn in 64-bit chunks.
    Integer digits(long p, int k)
    {
        const auto up = static_cast<std::uint64_t>(p);
        int chunk = 0;
        std::uint64_t chunk_mod = 1;
        while (chunk_mod <= std::numeric_limits<std::uint64_t>::max() / up / 2) {
            chunk_mod *= up;
            ++chunk;
        }
        Integer value = 0;
        Integer place = 1;
        while (k > 0) {
            const int take = std::min(k, chunk);
            std::uint64_t m = 1;
            for (int i = 0; i < take; ++i) {
                m *= up;
            }
            value += place * Integer(static_cast<unsigned long>(below(m)));
            place *= static_cast<unsigned long>(m);
            k -= take;
        }
        return value;
    }

private:
    std::mt19937_64 engine_;
};

/// Draws a sample of degree n at precision K.
inline PadicSample draw_sample(TrialRng& rng, int n, long p, SamplingMode mode, int K)
{
    PadicSample s;
    s.p = p;
    s.K = K;
    s.mode = mode;
    s.coeffs.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        auto& c = s.coeffs[static_cast<std::size_t>(i)];
        if (i == n && mode != SamplingMode::general) {
            c = 1;
        } else if (mode == SamplingMode::monic_xn) {
            c = rng.digits(p, K - 1) * p;
        } else {
            c = rng.digits(p, K);
        }
    }
    return s;
}

/// Appends uniform digits K..K'-1 to every free coefficient.
inline void extend_sample(TrialRng& rng, PadicSample& s, int new_K)
{
    const Integer place = power_of(s.p, s.K);
    const int n = s.degree();
    for (int i = 0; i <= n; ++i) {
        if (i == n && s.mode != SamplingMode::general) {
            continue;
        }
        s.coeffs[static_cast<std::size_t>(i)] += place * rng.digits(s.p, new_K - s.K);
    }
    s.K = new_K;
}

struct SamplerConfig {
    int n = 2;
    long p = 2;
    SamplingMode mode = SamplingMode::general;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int k0 = 8;
    int k_cap = 512;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    double abandon_threshold = 1e-3;

    void validate() const
    {
        if (n < 1) {
            throw std::invalid_argument("sampler needs n >= 1");
        }
        if (!is_prime(p)) {
            throw std::invalid_argument(std::to_string(p) + " is not prime");
        }
        if (trials < 1) {
            throw std::invalid_argument("sampler needs trials >= 1");
        }
        if (k0 < 2 || k_cap < k0) {
            throw std::invalid_argument("sampler needs 2 <= K0 <= cap");
        }
    }
};

/// Tallies of determined root counts.
struct Histogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t abandoned = 0;
    std::uint64_t extended = 0;

    void merge(const Histogram& o)
    {
        if (counts.size() < o.counts.size()) {
            counts.resize(o.counts.size(), 0);
        }
        for (std::size_t r = 0; r < o.counts.size(); ++r) {
            counts[r] += o.counts[r];
        }
        abandoned += o.abandoned;
        extended += o.extended;
    }

    std::uint64_t determined() const
    {
        std::uint64_t t = 0;
        for (auto c : counts) {
            t += c;
        }
        return t;
    }
};

/// One trial: draw at K0, extend by doubling until determined or past the cap.
inline std::optional<int> run_trial(const SamplerConfig& cfg, std::uint64_t index, bool& extended)
{
    TrialRng rng(cfg.seed, index);
    PadicSample s = draw_sample(rng, cfg.n, cfg.p, cfg.mode, cfg.k0);
    extended = false;
    for (;;) {
        const RootCountResult r = count_roots(s);
        if (r.count) {
            return r.count;
        }
        if (s.K * 2 > cfg.k_cap) {
            return std::nullopt;
        }
        extended = true;
        extend_sample(rng, s, s.K * 2);
    }
}

struct MonteCarloResult {
    SamplerConfig config;
    Histogram histogram;
    /// Exact probabilities, index r, when supplied.
    std::vector<Rational> expected;

    double abandoned_fraction() const
    {
        return static_cast<double>(histogram.abandoned) / static_cast<double>(config.trials);
    }

    bool abandoned_ok() const { return abandoned_fraction() <= config.abandon_threshold; }

    double frequency(std::size_t r) const
    {
        const auto N = histogram.determined();
        return N == 0 || r >= histogram.counts.size() ? 0.0 : static_cast<double>(histogram.counts[r]) / static_cast<double>(N);
    }

    /// Binomial standard error of frequency r under the expected value.
    double standard_error(std::size_t r) const
    {
        const double q = expected.at(r).get_d();
        return std::sqrt(q * (1 - q) / static_cast<double>(histogram.determined()));
    }

    /// (freq - q) / se; infinite when q is 0 or 1 and the count disagrees.
    double z_score(std::size_t r) const
    {
        const double q = expected.at(r).get_d();
        const double f = frequency(r);
        const double se = standard_error(r);
        if (se == 0.0) {
            return f == q ? 0.0 : std::numeric_limits<double>::infinity();
        }
        return (f - q) / se;
    }

    double mean() const
    {
        double acc = 0;
        for (std::size_t r = 0; r < histogram.counts.size(); ++r) {
            acc += static_cast<double>(r) * frequency(r);
        }
        return acc;
    }

    Rational expected_mean() const
    {
        Rational acc;
        for (std::size_t r = 0; r < expected.size(); ++r) {
            acc += expected[r] * static_cast<unsigned long>(r);
        }
        return acc;
    }

    /// Standard error of the mean under the expected distribution.
    double mean_standard_error() const
    {
        const double mu = expected_mean().get_d();
        double var = 0;
        for (std::size_t r = 0; r < expected.size(); ++r) {
            const double d = static_cast<double>(r) - mu;
            var += expected[r].get_d() * d * d;
        }
        return std::sqrt(var / static_cast<double>(histogram.determined()));
    }

    double max_abs_z() const
    {
        double m = 0;
        for (std::size_t r = 0; r < expected.size(); ++r) {
            m = std::max(m, std::abs(z_score(r)));
        }
        return m;
    }

    nlohmann::json to_json() const
    {
        auto decimal = [](double x) -> nlohmann::json {
            if (!std::isfinite(x)) {
                return nullptr;
            }
            std::ostringstream os;
            os.precision(6);
            os << std::fixed << x;
            return os.str();
        };
        nlohmann::json j;
        j["n"] = config.n;
        j["p"] = config.p;
        j["mode"] = std::string(mode_name(config.mode));
        j["trials"] = config.trials;
        j["seed"] = config.seed;
        j["K0"] = config.k0;
        j["K_cap"] = config.k_cap;
        nlohmann::json counts = nlohmann::json::object();
        for (std::size_t r = 0; r < histogram.counts.size(); ++r) {
            counts[std::to_string(r)] = histogram.counts[r];
        }
        j["counts"] = std::move(counts);
        j["abandoned"] = histogram.abandoned;
        j["extended_fraction"] = decimal(static_cast<double>(histogram.extended) / static_cast<double>(config.trials));
        if (!expected.empty()) {
            nlohmann::json exp = nlohmann::json::object();
            nlohmann::json z = nlohmann::json::object();
            nlohmann::json se = nlohmann::json::object();
            for (std::size_t r = 0; r < expected.size(); ++r) {
                exp[std::to_string(r)] = expected[r].get_str();
                z[std::to_string(r)] = decimal(z_score(r));
                se[std::to_string(r)] = decimal(standard_error(r));
            }
            j["expected"] = std::move(exp);
            j["z_scores"] = std::move(z);
            j["standard_errors"] = std::move(se);
            j["mean"] = {{"observed", decimal(mean())},
                         {"expected", expected_mean().get_str()},
                         {"standard_error", decimal(mean_standard_error())}};
        }
        return j;
    }
};

/// Exact P(r roots) at prime p for the mode's distribution, r = 0..n.
inline std::vector<Rational> expected_distribution(const DensityTable& table, int n, long p, SamplingMode mode)
{
    const Quantity q = mode == SamplingMode::general ? Quantity::rho_star
                       : mode == SamplingMode::monic ? Quantity::alpha_star
                                                     : Quantity::beta_star;
    std::vector<Rational> out;
    for (int r = 0; r <= n; ++r) {
        out.push_back(table.at(q, n, r).evaluate(Rational(p)));
    }
    return out;
}

inline std::vector<Rational> expected_distribution(int n, long p, SamplingMode mode)
{
    return expected_distribution(compute_density_table(n, n), n, p, mode);
}

/// Runs the trials, split into contiguous blocks across threads.
inline MonteCarloResult monte_carlo(const SamplerConfig& cfg, std::vector<Rational> expected = {})
{
    cfg.validate();
    unsigned threads = cfg.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : cfg.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, cfg.trials));
    std::vector<Histogram> parts(threads);
    auto work = [&](unsigned t) {
        Histogram& h = parts[t];
        h.counts.assign(static_cast<std::size_t>(cfg.n) + 1, 0);
        const std::uint64_t begin = cfg.trials * t / threads;
        const std::uint64_t end = cfg.trials * (t + 1) / threads;
        for (std::uint64_t i = begin; i < end; ++i) {
            bool extended = false;
            const auto r = run_trial(cfg, i, extended);
            h.extended += extended ? 1 : 0;
            if (!r) {
                ++h.abandoned;
            } else {
                ++h.counts.at(static_cast<std::size_t>(*r));
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    MonteCarloResult result{cfg, {}, std::move(expected)};
    result.histogram.counts.assign(static_cast<std::size_t>(cfg.n) + 1, 0);
    for (const auto& h : parts) {
        result.histogram.merge(h);
    }
    return result;
}

/// Every coefficient vector at precision K, tallied exactly.
struct ExhaustiveResult {
    int n = 0;
    long p = 2;
    int K = 1;
    SamplingMode mode = SamplingMode::general;
    std::vector<std::uint64_t> counts;
    std::uint64_t undetermined = 0;
    std::uint64_t total = 0;

    Rational determined_fraction(int r) const
    {
        return Rational(Integer(static_cast<unsigned long>(counts.at(static_cast<std::size_t>(r)))),
                        Integer(static_cast<unsigned long>(total)));
    }

    Rational undetermined_fraction() const
    {
        return Rational(Integer(static_cast<unsigned long>(undetermined)), Integer(static_cast<unsigned long>(total)));
    }

    /// determined(r) <= value <= determined(r) + undetermined.
    bool brackets(int r, const Rational& value) const
    {
        const Rational lo = determined_fraction(r);
        return lo <= value && value <= lo + undetermined_fraction();
    }

    nlohmann::json to_json() const
    {
        nlohmann::json c = nlohmann::json::object();
        for (std::size_t r = 0; r < counts.size(); ++r) {
            c[std::to_string(r)] = counts[r];
        }
        return {{"n", n}, {"p", p}, {"K", K}, {"mode", std::string(mode_name(mode))}, {"total", total},
                {"counts", std::move(c)}, {"undetermined", undetermined}};
    }
};

inline ExhaustiveResult exhaustive_small(int n, long p, int K, SamplingMode mode, std::uint64_t budget = 50000000)
{
    if (n < 1 || !is_prime(p) || K < 1) {
        throw std::invalid_argument("exhaustive enumeration needs n >= 1, prime p, K >= 1");
    }
    const int free = mode == SamplingMode::general ? n + 1 : n;
    const int digits = mode == SamplingMode::monic_xn ? K - 1 : K;
    // choices^free must stay within the budget.
    Integer size = power_of(p, digits * free);
    if (size > Integer(static_cast<unsigned long>(budget))) {
        throw std::length_error("exhaustive enumeration of " + size.get_str() + " samples exceeds the budget of "
                                + std::to_string(budget));
    }
    const std::uint64_t choices = power_of(p, digits).get_ui();
    ExhaustiveResult res{n, p, K, mode, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0), 0, 0};
    std::vector<std::uint64_t> odometer(static_cast<std::size_t>(free), 0);
    PadicSample s;
    s.p = p;
    s.K = K;
    s.mode = mode;
    s.coeffs.assign(static_cast<std::size_t>(n) + 1, Integer(0));
    if (mode != SamplingMode::general) {
        s.coeffs.back() = 1;
    }
    for (;;) {
        for (int i = 0; i < free; ++i) {
            const auto v = static_cast<unsigned long>(odometer[static_cast<std::size_t>(i)]);
            s.coeffs[static_cast<std::size_t>(i)] = mode == SamplingMode::monic_xn ? Integer(v) * p : Integer(v);
        }
        const RootCountResult r = count_roots(s);
        ++res.total;
        if (r.count) {
            ++res.counts.at(static_cast<std::size_t>(*r.count));
        } else {
            ++res.undetermined;
        }
        int i = 0;
        while (i < free && ++odometer[static_cast<std::size_t>(i)] == choices) {
            odometer[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == free) {
            break;
        }
    }
    return res;
}

} // namespace padicroots

#endif // PADICROOTS_SAMPLER_HPP
