#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

namespace indictk {

// Dense row-major real matrix, just enough for CKA.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

inline Matrix center_columns(const Matrix& m) {
    if (m.rows < 2) throw std::invalid_argument("need at least 2 rows");
    Matrix out = m;
    for (std::size_t c = 0; c < m.cols; ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < m.rows; ++r) mean += m.at(r, c);
        mean /= static_cast<double>(m.rows);
        for (std::size_t r = 0; r < m.rows; ++r) out.at(r, c) -= mean;
    }
    return out;
}

namespace detail {

// Pairwise (cascade) summation over a buffer, long double accumulators.
inline double pairwise_sum(const std::vector<double>& v, std::size_t lo,
                           std::size_t hi) {
    if (hi - lo <= 8) {
        long double s = 0.0L;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return static_cast<double>(s);
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// ||A^T B||_F^2 for column-centered A (n x da) and B (n x db).
inline double cross_frob_sq(const Matrix& a, const Matrix& b) {
    std::vector<double> terms;
    terms.reserve(a.cols * b.cols);
    for (std::size_t i = 0; i < a.cols; ++i) {
        for (std::size_t j = 0; j < b.cols; ++j) {
            long double dot = 0.0L;
            for (std::size_t r = 0; r < a.rows; ++r)
                dot += static_cast<long double>(a.at(r, i)) * b.at(r, j);
            terms.push_back(static_cast<double>(dot * dot));
        }
    }
    return pairwise_sum(terms, 0, terms.size());
}

}  // namespace detail

// Linear CKA = ||Y^T X||_F^2 / (||X^T X||_F ||Y^T Y||_F) after centering.
// Throws on row-count mismatch or degenerate (all-zero centered) input.
inline double linear_cka(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows) throw std::invalid_argument("row-count mismatch");
    if (x.rows < 2) throw std::invalid_argument("need at least 2 rows");
    Matrix xc = center_columns(x);
    Matrix yc = center_columns(y);
    const double xx = detail::cross_frob_sq(xc, xc);
    const double yy = detail::cross_frob_sq(yc, yc);
    if (xx == 0.0 || yy == 0.0)
        throw std::invalid_argument("degenerate input: matrix is constant");
    const double xy = detail::cross_frob_sq(yc, xc);
    return xy / (std::sqrt(xx) * std::sqrt(yy));
}

struct ActivationMatrix {
    std::string language;
    std::size_t layer = 0;
    Matrix data;
};

struct CkaTable {
    // (language_a, language_b, layer) -> score, stored with a < b and
    // mirrored on lookup
    std::map<std::tuple<std::string, std::string, std::size_t>, double> scores;
    // (pair key, layer) combinations skipped because a side was missing
    std::vector<std::tuple<std::string, std::string, std::size_t>> gaps;

    double score(const std::string& a, const std::string& b,
                 std::size_t layer) const {
        auto key = a < b ? std::make_tuple(a, b, layer)
                         : std::make_tuple(b, a, layer);
        return scores.at(key);
    }
};

// One score per unordered language pair per layer present on both sides.
inline CkaTable pairwise_layer_cka(
    const std::vector<ActivationMatrix>& activations) {
    std::map<std::pair<std::string, std::size_t>, const Matrix*> index;
    std::vector<std::string> languages;
    std::vector<std::size_t> layers;
    std::size_t n_rows = 0;
    for (const auto& am : activations) {
        auto key = std::make_pair(am.language, am.layer);
        if (index.count(key))
            throw std::invalid_argument("duplicate (language, layer): " +
                                        am.language);
        if (n_rows == 0)
            n_rows = am.data.rows;
        else if (am.data.rows != n_rows)
            throw std::invalid_argument("activation matrices not row-aligned");
        for (double v : am.data.data)
            if (!std::isfinite(v))
                throw std::invalid_argument("non-finite activation value");
        index[key] = &am.data;
        if (std::find(languages.begin(), languages.end(), am.language) ==
            languages.end())
            languages.push_back(am.language);
        if (std::find(layers.begin(), layers.end(), am.layer) == layers.end())
            layers.push_back(am.layer);
    }
    std::sort(languages.begin(), languages.end());
    std::sort(layers.begin(), layers.end());

    CkaTable table;
    for (std::size_t i = 0; i < languages.size(); ++i) {
        for (std::size_t j = i + 1; j < languages.size(); ++j) {
            for (std::size_t layer : layers) {
                auto a = index.find({languages[i], layer});
                auto b = index.find({languages[j], layer});
                if (a == index.end() || b == index.end()) {
                    table.gaps.emplace_back(languages[i], languages[j], layer);
                    continue;
                }
                table.scores[{languages[i], languages[j], layer}] =
                    linear_cka(*a->second, *b->second);
            }
        }
    }
    return table;
}

struct LanguageLayerAverage {
    double mean = 0.0;
    std::size_t partners = 0;
};

// Mean CKA of each language against its available partners, per layer.
inline std::map<std::pair<std::string, std::size_t>, LanguageLayerAverage>
average_per_language(const CkaTable& table) {
    std::map<std::pair<std::string, std::size_t>, LanguageLayerAverage> avg;
    for (const auto& [key, score] : table.scores) {
        const auto& [a, b, layer] = key;
        auto& ea = avg[{a, layer}];
        ea.mean += score;
        ++ea.partners;
        auto& eb = avg[{b, layer}];
        eb.mean += score;
        ++eb.partners;
    }
    for (auto& [key, entry] : avg)
        entry.mean /= static_cast<double>(entry.partners);
    return avg;
}

inline nlohmann::json to_json(const CkaTable& table) {
    nlohmann::json j;
    j["scores"] = nlohmann::json::array();
    for (const auto& [key, score] : table.scores) {
        const auto& [a, b, layer] = key;
        j["scores"].push_back({{"language_a", a},
                               {"language_b", b},
                               {"layer", layer},
                               {"cka", score}});
    }
    j["gaps"] = nlohmann::json::array();
    for (const auto& [a, b, layer] : table.gaps)
        j["gaps"].push_back(
            {{"language_a", a}, {"language_b", b}, {"layer", layer}});
    j["per_language_average"] = nlohmann::json::array();
    for (const auto& [key, entry] : average_per_language(table))
        j["per_language_average"].push_back({{"language", key.first},
                                             {"layer", key.second},
                                             {"mean_cka", entry.mean},
                                             {"partners", entry.partners}});
    return j;
}

}  // namespace indictk
