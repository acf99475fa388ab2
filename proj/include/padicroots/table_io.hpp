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

#ifndef PADICROOTS_TABLE_IO_HPP
#define PADICROOTS_TABLE_IO_HPP

#include "padicroots/densities.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace padicroots {

enum class OutputFormat { text, csv, json, latex };

inline std::optional<OutputFormat> parse_format(std::string_view s)
{
    if (s == "text") return OutputFormat::text;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "latex") return OutputFormat::latex;
    return std::nullopt;
}

/// One cell of a grid.
struct GridEntry {
    Quantity quantity;
    int n;
    int index;
    RationalFunction value;
};

/// Cells of grid q, optionally restricted to one n and/or one index.
inline std::vector<GridEntry> select_entries(const DensityTable& table, Quantity q, std::optional<int> n = std::nullopt,
                                             std::optional<int> index = std::nullopt)
{
    if (n && (*n < 0 || *n > table.n_max())) {
        throw std::out_of_range("n = " + std::to_string(*n) + " is outside 0.." + std::to_string(table.n_max()));
    }
    std::vector<GridEntry> out;
    const int lo = n ? *n : 0;
    const int hi = n ? *n : table.n_max();
    for (int m = lo; m <= hi; ++m) {
        const int width = static_cast<int>(table.row_size(q, m));
        if (index) {
            if (*index < 0 || (*index >= width && !is_moment(q))) {
                throw std::out_of_range("index " + std::to_string(*index) + " is outside the row for n = " + std::to_string(m));
            }
            if (*index > table.d_max()) {
                throw std::out_of_range("d = " + std::to_string(*index) + " exceeds d_max = " + std::to_string(table.d_max()));
            }
            out.push_back({q, m, *index, table.at(q, m, *index)});
            continue;
        }
        for (int k = 0; k < width; ++k) {
            out.push_back({q, m, k, table.at(q, m, k)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// LaTeX.
// ---------------------------------------------------------------------------

inline std::string latex_polynomial(const IntPolynomial& f)
{
    std::string s = format_polynomial(f);
    // p^12 -> p^{12}; single digits read the same either way but braces keep it uniform.
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '^') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            out += "^{" + s.substr(i + 1, j - i - 1) + "}";
            i = j - 1;
        } else {
            out += s[i];
        }
    }
    return out;
}

inline std::string latex(const RationalFunction& f)
{
    if (f.denominator().is_one()) {
        return latex_polynomial(f.numerator());
    }
    // Keep the sign outside the fraction.
    if (f.numerator().leading() < 0) {
        return "-" + latex(-f);
    }
    return "\\frac{" + latex_polynomial(f.numerator()) + "}{" + latex_polynomial(f.denominator()) + "}";
}

inline std::string latex_symbol(Quantity q)
{
    switch (q) {
    case Quantity::alpha: return "\\alpha";
    case Quantity::beta: return "\\beta";
    case Quantity::rho: return "\\rho";
    case Quantity::alpha_tilde: return "\\tilde\\alpha";
    case Quantity::alpha_star: return "\\alpha^*";
    case Quantity::beta_star: return "\\beta^*";
    case Quantity::rho_star: return "\\rho^*";
    }
    return "?";
}

inline std::string latex_series(const TruncatedSeries& s)
{
    std::string out;
    const std::size_t top = s.degree_bound() ? std::min(*s.degree_bound(), s.order()) : s.order();
    for (std::size_t n = 0; n <= top; ++n) {
        if (s[n].is_zero()) {
            continue;
        }
        const bool negative = s[n].numerator().leading() < 0;
        const RationalFunction mag = negative ? -s[n] : s[n];
        std::string coeff = latex(mag);
        const bool compound = mag.denominator().is_one() && coeff.find_first_of("+-") != std::string::npos;
        if (compound) {
            coeff = "(" + coeff + ")";
        }
        std::string var = n == 0 ? "" : (n == 1 ? "t" : "t^{" + std::to_string(n) + "}");
        std::string term = n > 0 && mag.is_one() ? var : coeff + (var.empty() ? "" : " " + var);
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    if (out.empty()) {
        out = "0";
    }
    if (!s.is_exact_polynomial()) {
        out += " + O(t^{" + std::to_string(s.order() + 1) + "})";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Grid rendering.
// ---------------------------------------------------------------------------

inline std::string entry_label(const GridEntry& e)
{
    return std::string(quantity_name(e.quantity)) + "(" + std::to_string(e.n) + "," + std::to_string(e.index) + ")";
}

inline std::string render_entries(const std::vector<GridEntry>& entries, OutputFormat format)
{
    std::string out;
    switch (format) {
    case OutputFormat::text:
        for (const auto& e : entries) {
            out += entry_label(e) + " = " + e.value.to_string() + "\n";
        }
        break;
    case OutputFormat::csv:
        out = "quantity,n,index,numerator,denominator\n";
        for (const auto& e : entries) {
            out += std::string(quantity_name(e.quantity)) + "," + std::to_string(e.n) + "," + std::to_string(e.index)
                   + ",\"" + format_polynomial(e.value.numerator()) + "\",\"" + format_polynomial(e.value.denominator())
                   + "\"\n";
        }
        break;
    case OutputFormat::json: {
        nlohmann::json items = nlohmann::json::array();
        for (const auto& e : entries) {
            items.push_back({{"quantity", std::string(quantity_name(e.quantity))},
                             {"n", e.n},
                             {"index", e.index},
                             {"value", e.value.to_string()},
                             {"coefficients", to_json(e.value)}});
        }
        out = items.dump(2) + "\n";
        break;
    }
    case OutputFormat::latex:
        out = "\\begin{align*}\n";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            out += "  " + latex_symbol(e.quantity) + "(" + std::to_string(e.n) + "," + std::to_string(e.index)
                   + ") &= " + latex(e.value) + (i + 1 < entries.size() ? ", \\\\\n" : "\n");
        }
        out += "\\end{align*}\n";
        break;
    }
    return out;
}

/// Every computed grid, with provenance, as one JSON document.
inline nlohmann::json table_to_json(const DensityTable& table)
{
    nlohmann::json grids = nlohmann::json::object();
    for (Quantity q : kAllQuantities) {
        if (!table.has(q)) {
            continue;
        }
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table.grid(q)) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row) {
                r.push_back(v.to_string());
            }
            rows.push_back(std::move(r));
        }
        grids[std::string(quantity_name(q))]
            = {{"provenance", std::string(route_name(table.provenance(q)))}, {"rows", std::move(rows)}};
    }
    return {{"n_max", table.n_max()}, {"d_max", table.d_max()}, {"grids", std::move(grids)}};
}

// ---------------------------------------------------------------------------
// Generating polynomials.
// ---------------------------------------------------------------------------

/// Which of A_d, B_d, R_d.
inline std::optional<Quantity> parse_genfun(std::string_view s)
{
    if (s == "A") return Quantity::alpha;
    if (s == "B") return Quantity::beta;
    if (s == "R") return Quantity::rho;
    return std::nullopt;
}

inline std::string genfun_letter(Quantity q) { return q == Quantity::alpha ? "A" : q == Quantity::beta ? "B" : "R"; }

inline std::string render_genfun(Quantity q, int d, const TruncatedSeries& s, OutputFormat format)
{
    const std::string name = genfun_letter(q) + "_" + std::to_string(d);
    switch (format) {
    case OutputFormat::text: return name + "(t) = " + format_series(s) + "\n";
    case OutputFormat::csv: {
        std::string out = "series,d,power,numerator,denominator\n";
        const std::size_t top = s.degree_bound() ? std::min(*s.degree_bound(), s.order()) : s.order();
        for (std::size_t k = 0; k <= top; ++k) {
            out += genfun_letter(q) + "," + std::to_string(d) + "," + std::to_string(k) + ",\""
                   + format_polynomial(s[k].numerator()) + "\",\"" + format_polynomial(s[k].denominator()) + "\"\n";
        }
        return out;
    }
    case OutputFormat::json: {
        nlohmann::json j = to_json(s);
        j["series"] = genfun_letter(q);
        j["d"] = d;
        j["value"] = format_series(s);
        return j.dump(2) + "\n";
    }
    case OutputFormat::latex:
        return "\\begin{align*}\n  \\mathcal{" + genfun_letter(q) + "}_{" + std::to_string(d) + "}(t) &= " + latex_series(s)
               + "\n\\end{align*}\n";
    }
    return {};
}

} // namespace padicroots

#endif // PADICROOTS_TABLE_IO_HPP
