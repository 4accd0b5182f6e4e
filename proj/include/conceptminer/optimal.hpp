#pragma once

#include "conceptminer/concepts.hpp"
#include "conceptminer/context.hpp"
#include "conceptminer/errors.hpp"
#include "conceptminer/pseudo_concept.hpp"
#include "conceptminer/relevance.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conceptminer {

namespace detail {

/// Rows of a rectangle projected onto its columns and grouped by pattern.
/// Candidate scores then cost one popcount per distinct pattern instead of
/// a pass over the universe.
class PatternTable {
public:
    PatternTable(const Relation& u, const ObjectSet& rows, const PropertySet& cols)
        : cols_(cols.indices()), words_((cols_.size() + 63) / 64) {
        std::map<std::vector<std::uint64_t>, std::size_t> groups;
        std::vector<std::uint64_t> pat(words_);
        rows.for_each([&](std::size_t r) {
            std::fill(pat.begin(), pat.end(), 0);
            const auto& row = u.row(r);
            for (std::size_t j = 0; j < cols_.size(); ++j)
                if (row.contains(cols_[j])) pat[j / 64] |= std::uint64_t{1} << (j % 64);
            ++groups[pat];
        });
        for (auto& [p, n] : groups) {
            patterns_.insert(patterns_.end(), p.begin(), p.end());
            counts_.push_back(n);
        }
        full_.assign(words_, ~std::uint64_t{0});
        if (cols_.size() % 64 != 0) full_.back() = (std::uint64_t{1} << (cols_.size() % 64)) - 1;
        if (words_ == 0) full_.clear();
    }

    std::size_t distinct() const { return counts_.size(); }
    std::size_t count(std::size_t k) const { return counts_[k]; }
    const std::uint64_t* pattern(std::size_t k) const { return patterns_.data() + k * words_; }
    const std::uint64_t* full() const { return full_.data(); }
    std::size_t words() const { return words_; }
    std::size_t local_cols() const { return cols_.size(); }
    std::size_t column(std::size_t j) const { return cols_[j]; }

    bool is_full(const std::uint64_t* q) const {
        for (std::size_t w = 0; w < words_; ++w)
            if (q[w] != full_[w]) return false;
        return true;
    }
    bool has(const std::uint64_t* q, std::size_t j) const { return (q[j / 64] >> (j % 64)) & 1u; }

    std::size_t popcount(const std::uint64_t* q) const {
        std::size_t n = 0;
        for (std::size_t w = 0; w < words_; ++w) n += static_cast<std::size_t>(std::popcount(q[w]));
        return n;
    }
    std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b) const {
        std::size_t n = 0;
        for (std::size_t w = 0; w < words_; ++w) n += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
        return n;
    }

    PropertySet to_properties(const std::uint64_t* q, std::size_t universe) const {
        PropertySet out(universe);
        for (std::size_t j = 0; j < cols_.size(); ++j)
            if (has(q, j)) out.insert(cols_[j]);
        return out;
    }

    /// Max rule confidence of the itemset `target` over the patterns
    /// accepted by `keep`.
    template <class Keep>
    Confidence confidence(const std::uint64_t* target, Keep keep, double single_item_conf) const {
        const auto len = popcount(target);
        if (len < 2) return Confidence::from_double(single_item_conf);
        std::int64_t full_support = 0;
        std::vector<std::int64_t> near(cols_.size(), 0);
        std::vector<std::uint64_t> missing(words_);
        for (std::size_t k = 0; k < distinct(); ++k) {
            if (!keep(k)) continue;
            const auto* q = pattern(k);
            std::size_t miss = 0;
            for (std::size_t w = 0; w < words_; ++w) {
                missing[w] = target[w] & ~q[w];
                miss += static_cast<std::size_t>(std::popcount(missing[w]));
            }
            if (miss == 0) {
                full_support += static_cast<std::int64_t>(counts_[k]);
            } else if (miss == 1) {
                for (std::size_t w = 0; w < words_; ++w)
                    if (missing[w]) {
                        near[w * 64 + static_cast<std::size_t>(std::countr_zero(missing[w]))] +=
                            static_cast<std::int64_t>(counts_[k]);
                        break;
                    }
            }
        }
        std::int64_t best_den = 0;
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            if (!has(target, j)) continue;
            const auto d = full_support + near[j];
            if (d > 0 && (best_den == 0 || d < best_den)) best_den = d;
        }
        if (best_den == 0) return Confidence::ratio(0, 1);
        return Confidence::ratio(full_support, best_den);
    }

private:
    std::vector<std::size_t> cols_;
    std::size_t words_;
    std::vector<std::uint64_t> patterns_;
    std::vector<std::size_t> counts_;
    std::vector<std::uint64_t> full_;
};

}  // namespace detail

/// One refinement step of the optimal-concept search.
///
/// Candidates are the rectangles around (x, p) for x in rows (rows kept,
/// cols cut to x's properties) and around (o, y) for y in cols (cols kept,
/// rows cut to y's objects). Candidates equal to the current rectangle are
/// skipped; the best by pcf_relevance and the fixed tie-break is returned.
/// Returns nullopt when the rectangle is already dense.
inline std::optional<PseudoConcept> heuristic_step(const PseudoConcept& cur, const RelevanceConfig& cfg,
                                                   Score* chosen_score = nullptr) {
    const Relation& u = *cur.universe;
    if (u.is_dense(cur.rows, cur.cols)) return std::nullopt;

    const detail::PatternTable table(u, cur.rows, cur.cols);
    const bool use_conf = cfg.pcf_formula == PcfFormula::def10_conf;
    const auto width = cur.rows.count();
    const auto m = table.local_cols();

    std::optional<PseudoConcept> best;
    Score best_score;
    auto offer = [&](Score s, ObjectSet rows, PropertySet cols) {
        if (best && !preferred(s, cols, rows, best_score, best->cols, best->rows)) return;
        best = PseudoConcept{std::move(rows), std::move(cols), cur.anchor, &u};
        best_score = s;
    };

    // (x, p) candidates: one per distinct row pattern.
    for (std::size_t k = 0; k < table.distinct(); ++k) {
        const auto* target = table.pattern(k);
        if (table.is_full(target)) continue;
        std::size_t size = 0;
        for (std::size_t t = 0; t < table.distinct(); ++t) size += table.count(t) * table.popcount_and(table.pattern(t), target);
        const auto conf = use_conf ? table.confidence(target, [](std::size_t) { return true; }, cfg.single_item_conf)
                                   : Confidence{};
        offer(pcf_score(size, table.popcount(target), width, conf, cfg.pcf_formula), cur.rows,
              table.to_properties(target, u.n_properties()));
    }

    // (o, y) candidates: one per column.
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t w = 0, size = 0;
        for (std::size_t t = 0; t < table.distinct(); ++t)
            if (table.has(table.pattern(t), j)) {
                w += table.count(t);
                size += table.count(t) * table.popcount(table.pattern(t));
            }
        if (w == width) continue;
        const auto conf = use_conf ? table.confidence(
                                         table.full(), [&](std::size_t t) { return table.has(table.pattern(t), j); },
                                         cfg.single_item_conf)
                                   : Confidence{};
        offer(pcf_score(size, m, w, conf, cfg.pcf_formula), cur.rows & u.column(table.column(j)), cur.cols);
    }

    if (chosen_score && best) *chosen_score = best_score;
    return best;
}

/// Rectangles visited by one heuristic search, initial one first.
struct HeuristicTrace {
    std::vector<PseudoConcept> steps;
    std::vector<Score> scores;  // score of steps[i + 1] when it was adopted
};

/// Shrinks the pseudo-concept of (o, p) until it is dense, then closes it in
/// the universe. The result is a formal concept of `universe` containing
/// (o, p); it is not guaranteed to be the relevance maximizer.
inline FormalConcept heuristic_optimal_concept(const Relation& universe, std::size_t o, std::size_t p,
                                               const RelevanceConfig& cfg = {}, HeuristicTrace* trace = nullptr) {
    auto cur = pseudo_concept(universe, o, p);
    if (trace) trace->steps.push_back(cur);
    Score s;
    while (auto next = heuristic_step(cur, cfg, &s)) {
        cur = std::move(*next);
        if (trace) {
            trace->steps.push_back(cur);
            trace->scores.push_back(s);
        }
    }
    return concept_of_intent(universe, cur.cols);
}

/// Exhaustive maximizer of concept_relevance among the concepts of `ctx`
/// containing (o, p). Oracle-scale only.
inline FormalConcept brute_optimal_concept(const FormalContext& ctx, std::size_t o, std::size_t p,
                                           const RelevanceConfig& cfg = {},
                                           std::size_t max_properties = default_enumeration_guard) {
    if (o >= ctx.n_objects() || p >= ctx.n_properties() || !ctx.incident(o, p))
        throw ContractError("brute_optimal_concept: (" + std::to_string(o) + "," + std::to_string(p) +
                            ") is not an incident couple");
    const auto lattice = enumerate_concepts(ctx, max_properties);
    const FormalConcept* best = nullptr;
    Score best_score;
    for (const auto& c : lattice) {
        if (!contains_couple(c, {o, p})) continue;
        const auto s = concept_relevance(ctx, c, cfg);
        if (!best || preferred(s, c.intent, c.extent, best_score, best->intent, best->extent)) {
            best = &c;
            best_score = s;
        }
    }
    return *best;  // the object concept of o always contains (o, p)
}

}  // namespace conceptminer
