#pragma once

// Shared fixtures and brute-force oracles. Oracles here go through plain
// loops over the incidence matrix, never through the library's derivation
// operators, so they check the implementation rather than restate it.

#include "conceptminer/conceptminer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing_support {

using namespace conceptminer;

// Property indices of the running example.
inline constexpr std::size_t A = 0, B = 1, C = 2, D = 3;
// Object indices (o1..o5 -> 0..4).
inline constexpr std::size_t o1 = 0, o2 = 1, o3 = 2, o4 = 3, o5 = 4;

inline const char* table1_fimi = "0 1\n0 1\n1 2\n1 2 3\n2 3\n";
inline const char* table1_csv = "O\\I,A,B,C,D\no1,1,1,0,0\no2,1,1,0,0\no3,0,1,1,0\no4,0,1,1,1\no5,0,0,1,1\n";

inline FormalContext table1() {
    return FormalContext({"o1", "o2", "o3", "o4", "o5"}, {"A", "B", "C", "D"},
                         std::vector<std::vector<std::size_t>>{{A, B}, {A, B}, {B, C}, {B, C, D}, {C, D}});
}

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const FormalContext& ctx) {
    Matrix m(ctx.n_objects(), std::vector<bool>(ctx.n_properties()));
    for (std::size_t o = 0; o < ctx.n_objects(); ++o)
        for (std::size_t p = 0; p < ctx.n_properties(); ++p) m[o][p] = ctx.incident(o, p);
    return m;
}

inline FormalContext context_of(const Matrix& m, std::size_t n_props) {
    std::vector<std::string> objs, props;
    std::vector<std::vector<std::size_t>> rows(m.size());
    for (std::size_t o = 0; o < m.size(); ++o) {
        objs.push_back("o" + std::to_string(o));
        for (std::size_t p = 0; p < n_props; ++p)
            if (m[o][p]) rows[o].push_back(p);
    }
    for (std::size_t p = 0; p < n_props; ++p) props.push_back("p" + std::to_string(p));
    return FormalContext(std::move(objs), std::move(props), rows);
}

/// Random context with 1..max_o objects and 1..max_p properties.
inline FormalContext random_context(std::mt19937_64& rng, std::size_t max_o, std::size_t max_p) {
    std::uniform_int_distribution<std::size_t> no(1, max_o), np(1, max_p);
    std::uniform_real_distribution<double> dens(0.15, 0.8), u(0.0, 1.0);
    const auto n_o = no(rng), n_p = np(rng);
    const double d = dens(rng);
    Matrix m(n_o, std::vector<bool>(n_p));
    for (auto& row : m)
        for (std::size_t p = 0; p < n_p; ++p) row[p] = u(rng) < d;
    return context_of(m, n_p);
}

inline std::vector<std::size_t> bits_of(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) out.push_back(i);
    return out;
}

/// Objects holding every property of `props`, by direct matrix scan.
inline std::vector<std::size_t> brute_extent(const Matrix& m, const std::vector<std::size_t>& props) {
    std::vector<std::size_t> out;
    for (std::size_t o = 0; o < m.size(); ++o)
        if (std::all_of(props.begin(), props.end(), [&](std::size_t p) { return m[o][p]; })) out.push_back(o);
    return out;
}

inline std::vector<std::size_t> brute_intent(const Matrix& m, std::size_t n_props,
                                             const std::vector<std::size_t>& objs) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < n_props; ++p)
        if (std::all_of(objs.begin(), objs.end(), [&](std::size_t o) { return m[o][p]; })) out.push_back(p);
    return out;
}

using IndexPair = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;  // (extent, intent)

/// {(B', B'') | B subset of P}, by powerset sweep.
inline std::set<IndexPair> powerset_concepts(const FormalContext& ctx) {
    const auto m = matrix_of(ctx);
    const auto n = ctx.n_properties();
    std::set<IndexPair> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto ext = brute_extent(m, bits_of(mask, n));
        auto in = brute_intent(m, n, ext);
        out.insert({ext, in});
    }
    return out;
}

/// Support count of every itemset with non-empty extent, by powerset sweep.
inline std::map<std::vector<std::size_t>, std::size_t> powerset_supports(const FormalContext& ctx) {
    const auto m = matrix_of(ctx);
    const auto n = ctx.n_properties();
    std::map<std::vector<std::size_t>, std::size_t> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        auto items = bits_of(mask, n);
        auto c = brute_extent(m, items).size();
        if (c) out[items] = c;
    }
    return out;
}

/// Max over all non-empty proper X of |B'| / |X'|, skipping X with no support.
inline double brute_max_confidence(const FormalContext& ctx, const std::vector<std::size_t>& intent) {
    const auto m = matrix_of(ctx);
    const auto k = intent.size();
    const double joint = static_cast<double>(brute_extent(m, intent).size());
    double best = 0.0;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::size_t> x;
        for (std::size_t b = 0; b < k; ++b)
            if ((mask >> b) & 1u) x.push_back(intent[b]);
        const auto d = brute_extent(m, x).size();
        if (d) best = std::max(best, joint / static_cast<double>(d));
    }
    return best;
}

/// All rules with both thresholds, by sweeping every itemset and split.
struct BruteRule {
    std::vector<std::size_t> lhs, rhs;
    double support, confidence;
};
inline std::vector<BruteRule> brute_rules(const FormalContext& ctx, double min_sup, double min_conf) {
    const auto m = matrix_of(ctx);
    const auto n = ctx.n_properties();
    const double total = static_cast<double>(ctx.n_objects());
    std::vector<BruteRule> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        auto items = bits_of(mask, n);
        if (items.size() < 2) continue;
        const auto joint = brute_extent(m, items).size();
        if (!joint || joint / total < min_sup) continue;
        for (std::uint64_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            auto lhs = bits_of(sub, n), rhs = bits_of(mask & ~sub, n);
            const double conf = static_cast<double>(joint) / static_cast<double>(brute_extent(m, lhs).size());
            if (conf >= min_conf) out.push_back({lhs, rhs, joint / total, conf});
        }
    }
    return out;
}

/// Materialized candidate list for one refinement step, scored through the
/// public pcf_relevance; the reference the fast step is checked against.
inline std::optional<PseudoConcept> reference_step(const PseudoConcept& cur, const RelevanceConfig& cfg) {
    const Relation& u = *cur.universe;
    if (is_dense(cur)) return std::nullopt;
    std::optional<PseudoConcept> best;
    Score best_score;
    auto consider = [&](PseudoConcept cand) {
        if (cand.rows == cur.rows && cand.cols == cur.cols) return;
        const auto s = pcf_relevance(cand, cfg);
        if (!best || preferred(s, cand.cols, cand.rows, best_score, best->cols, best->rows)) {
            best = cand;
            best_score = s;
        }
    };
    cur.rows.for_each([&](std::size_t x) { consider({cur.rows, u.row(x) & cur.cols, cur.anchor, &u}); });
    cur.cols.for_each([&](std::size_t y) { consider({cur.rows & u.column(y), cur.cols, cur.anchor, &u}); });
    return best;
}

}  // namespace testing_support
