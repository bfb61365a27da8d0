#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace indictk {

struct SampleGroup {
    std::string label;
    std::vector<double> values;

    double mean() const {
        if (values.empty()) throw std::invalid_argument("empty sample group");
        return std::accumulate(values.begin(), values.end(), 0.0) /
               static_cast<double>(values.size());
    }
};

enum class Alternative { TwoSided, Greater, Less };
enum class PMethod { Exact, NormalApprox, Auto };

struct MwuConfig {
    double alpha = 0.05;
    Alternative alternative = Alternative::TwoSided;
    PMethod p_method = PMethod::Auto;
};

enum class EffectClass { Small, Medium, Large };

inline const char* to_string(EffectClass c) {
    switch (c) {
        case EffectClass::Small: return "small";
        case EffectClass::Medium: return "medium";
        case EffectClass::Large: return "large";
    }
    return "unknown";
}

// Boundary values fall in the lower class: r = 0.3 is small, r = 0.5 medium.
inline EffectClass classify_r(double r) {
    if (r <= 0.3) return EffectClass::Small;
    if (r <= 0.5) return EffectClass::Medium;
    return EffectClass::Large;
}

// Ascending midranks 1..N; tied values share the mean of their rank span.
inline std::vector<double> rank_with_ties(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("empty value list");
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        double midrank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = midrank;
        i = j + 1;
    }
    return ranks;
}

struct UStatistics {
    double u1 = 0.0;
    double u2 = 0.0;
};

inline UStatistics mwu_u(const SampleGroup& g1, const SampleGroup& g2) {
    if (g1.values.empty() || g2.values.empty())
        throw std::invalid_argument("empty sample group");
    std::vector<double> pooled = g1.values;
    pooled.insert(pooled.end(), g2.values.begin(), g2.values.end());
    std::vector<double> ranks = rank_with_ties(pooled);
    const double n1 = static_cast<double>(g1.values.size());
    const double n2 = static_cast<double>(g2.values.size());
    double r1 = 0.0;
    for (std::size_t i = 0; i < g1.values.size(); ++i) r1 += ranks[i];
    UStatistics u;
    u.u1 = r1 - n1 * (n1 + 1.0) / 2.0;
    u.u2 = n1 * n2 - u.u1;
    return u;
}

inline bool has_ties(const SampleGroup& g1, const SampleGroup& g2) {
    std::vector<double> pooled = g1.values;
    pooled.insert(pooled.end(), g2.values.begin(), g2.values.end());
    std::sort(pooled.begin(), pooled.end());
    return std::adjacent_find(pooled.begin(), pooled.end()) != pooled.end();
}

namespace detail {

// Number of group assignments with U statistic exactly u, for all u in
// [0, n1*n2]. Standard recurrence f(m,n,u) = f(m-1,n,u-n) + f(m,n-1,u).
// Counts fit in 64 bits for N <= 40 (C(40,20) < 2^38).
inline std::vector<std::uint64_t> exact_u_distribution(std::size_t n1,
                                                       std::size_t n2) {
    const std::size_t umax = n1 * n2;
    // f(m, n, u) = f(m-1, n, u-n) + f(m, n-1, u)
    std::vector<std::vector<std::uint64_t>> f_prev(
        n1 + 1, std::vector<std::uint64_t>(umax + 1, 0));
    f_prev[0][0] = 1;  // n = 0: only m = 0 possible, u = 0
    for (std::size_t m = 1; m <= n1; ++m) f_prev[m][0] = 1;
    for (std::size_t n = 1; n <= n2; ++n) {
        std::vector<std::vector<std::uint64_t>> f_cur(
            n1 + 1, std::vector<std::uint64_t>(umax + 1, 0));
        f_cur[0][0] = 1;
        for (std::size_t m = 1; m <= n1; ++m) {
            for (std::size_t u = 0; u <= umax; ++u) {
                std::uint64_t v = f_prev[m][u];
                if (u >= n) v += f_cur[m - 1][u - n];
                f_cur[m][u] = v;
            }
        }
        f_prev = std::move(f_cur);
    }
    return f_prev[n1];
}

struct ExactTails {
    std::uint64_t count_le = 0;  // assignments with U <= observed
    std::uint64_t count_ge = 0;  // assignments with U >= observed
    std::uint64_t total = 0;     // C(n1+n2, n1)
};

inline ExactTails exact_tail_counts(std::size_t n1, std::size_t n2,
                                    std::uint64_t u_observed) {
    std::vector<std::uint64_t> dist = exact_u_distribution(n1, n2);
    ExactTails t;
    for (std::size_t u = 0; u < dist.size(); ++u) {
        t.total += dist[u];
        if (u <= u_observed) t.count_le += dist[u];
        if (u >= u_observed) t.count_ge += dist[u];
    }
    return t;
}

inline double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace detail

// Exact p-value by the rank-configuration counting recurrence. Refuses tied
// data; callers fall back to the normal approximation.
inline double p_exact(const SampleGroup& g1, const SampleGroup& g2,
                      Alternative alternative = Alternative::TwoSided) {
    if (has_ties(g1, g2))
        throw std::invalid_argument(
            "exact p-value undefined with ties; use the normal approximation");
    if (g1.values.size() + g2.values.size() > 40)
        throw std::invalid_argument("exact method limited to N <= 40");
    UStatistics u = mwu_u(g1, g2);
    auto u1 = static_cast<std::uint64_t>(std::llround(u.u1));
    detail::ExactTails t =
        detail::exact_tail_counts(g1.values.size(), g2.values.size(), u1);
    const double total = static_cast<double>(t.total);
    const double p_le = static_cast<double>(t.count_le) / total;
    const double p_ge = static_cast<double>(t.count_ge) / total;
    switch (alternative) {
        case Alternative::Less: return p_le;
        case Alternative::Greater: return p_ge;
        case Alternative::TwoSided:
        default:
            return std::min(1.0, 2.0 * std::min(p_le, p_ge));
    }
}

struct NormalApprox {
    double z = 0.0;
    double p = 1.0;
};

// z = (U1 - n1 n2 / 2 +- 0.5) / sigma, continuity correction toward the
// mean, tie-corrected sigma.
inline NormalApprox p_normal(const SampleGroup& g1, const SampleGroup& g2,
                             Alternative alternative = Alternative::TwoSided) {
    UStatistics u = mwu_u(g1, g2);
    const double n1 = static_cast<double>(g1.values.size());
    const double n2 = static_cast<double>(g2.values.size());
    const double big_n = n1 + n2;
    std::vector<double> pooled = g1.values;
    pooled.insert(pooled.end(), g2.values.begin(), g2.values.end());
    std::sort(pooled.begin(), pooled.end());
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < pooled.size()) {
        std::size_t j = i;
        while (j + 1 < pooled.size() && pooled[j + 1] == pooled[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double sigma2 =
        (n1 * n2 / 12.0) * ((big_n + 1.0) - tie_term / (big_n * (big_n - 1.0)));
    if (sigma2 <= 0.0)
        throw std::invalid_argument("degenerate data: all pooled values equal");
    const double sigma = std::sqrt(sigma2);
    const double mean = n1 * n2 / 2.0;
    double diff = u.u1 - mean;
    if (diff > 0.0)
        diff -= 0.5;
    else if (diff < 0.0)
        diff += 0.5;
    NormalApprox res;
    res.z = diff / sigma;
    switch (alternative) {
        case Alternative::Greater:
            res.p = detail::normal_sf(res.z);
            break;
        case Alternative::Less:
            res.p = detail::normal_sf(-res.z);
            break;
        case Alternative::TwoSided:
        default:
            res.p = std::min(1.0, 2.0 * detail::normal_sf(std::fabs(res.z)));
            break;
    }
    return res;
}

struct EffectSizes {
    double delta = 0.0;   // difference of group means
    double rho = 0.0;     // common-language effect size U1/(n1 n2)
    double r = 0.0;       // |z|/sqrt(N)
    EffectClass r_class = EffectClass::Small;
};

inline EffectSizes effect_sizes(const SampleGroup& g1, const SampleGroup& g2,
                                double z) {
    UStatistics u = mwu_u(g1, g2);
    const double n1 = static_cast<double>(g1.values.size());
    const double n2 = static_cast<double>(g2.values.size());
    EffectSizes e;
    e.delta = g1.mean() - g2.mean();
    e.rho = u.u1 / (n1 * n2);
    e.r = std::fabs(z) / std::sqrt(n1 + n2);
    e.r_class = classify_r(e.r);
    return e;
}

struct MwuResult {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    double u1 = 0.0;
    double u2 = 0.0;
    double z = 0.0;
    double p_value = 1.0;
    std::string p_method;
    bool reject_h0 = false;
    double delta = 0.0;
    double rho = 0.0;
    double r = 0.0;
    EffectClass r_class = EffectClass::Small;
};

// Full protocol: U, p by the chosen method (auto = exact when tie-free and
// N <= 40), decision at alpha, and the three effect sizes. z (and hence r)
// always comes from the normal approximation.
inline MwuResult compare(const SampleGroup& g1, const SampleGroup& g2,
                         const MwuConfig& cfg = {}) {
    MwuResult res;
    res.n1 = g1.values.size();
    res.n2 = g2.values.size();
    UStatistics u = mwu_u(g1, g2);
    res.u1 = u.u1;
    res.u2 = u.u2;
    NormalApprox na = p_normal(g1, g2, cfg.alternative);
    res.z = na.z;
    PMethod method = cfg.p_method;
    if (method == PMethod::Auto) {
        method = (!has_ties(g1, g2) && res.n1 + res.n2 <= 40)
                     ? PMethod::Exact
                     : PMethod::NormalApprox;
    }
    if (method == PMethod::Exact) {
        res.p_value = p_exact(g1, g2, cfg.alternative);
        res.p_method = "exact";
    } else {
        res.p_value = na.p;
        res.p_method = "normal_approx";
    }
    res.reject_h0 = res.p_value < cfg.alpha;
    EffectSizes e = effect_sizes(g1, g2, res.z);
    res.delta = e.delta;
    res.rho = e.rho;
    res.r = e.r;
    res.r_class = e.r_class;
    return res;
}

inline nlohmann::json to_json(const MwuResult& r) {
    return {
        {"n1", r.n1},         {"n2", r.n2},
        {"U1", r.u1},         {"U2", r.u2},
        {"z", r.z},           {"p_value", r.p_value},
        {"p_method", r.p_method},
        {"reject_h0", r.reject_h0},
        {"delta", r.delta},   {"rho", r.rho},
        {"r", r.r},           {"r_class", to_string(r.r_class)},
    };
}

}  // namespace indictk
