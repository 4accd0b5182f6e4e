#pragma once

#include "conceptminer/concepts.hpp"
#include "conceptminer/context.hpp"
#include "conceptminer/errors.hpp"
#include "conceptminer/pseudo_concept.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace conceptminer {

/// Which pseudo-concept relevance to use.
///  - def10:      [size / (length + width)] * [(length + width) - size]
///  - def10_conf: [size / (length + conf)]  * [(length + width) - size]
enum class PcfFormula { def10, def10_conf };

struct RelevanceConfig {
    PcfFormula pcf_formula = PcfFormula::def10;
    /// Confidence assigned to a one-item itemset, which yields no rules.
    double single_item_conf = 0.0;

    void validate() const {
        if (!(single_item_conf >= 0.0 && single_item_conf <= 1.0))
            throw ContractError("single_item_conf must lie in [0,1]");
    }
};

/// A confidence value, kept as an exact ratio when it came from counts.
struct Confidence {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value = 0.0;
    bool exact = true;

    static Confidence ratio(std::int64_t n, std::int64_t d) {
        return {n, d, static_cast<double>(n) / static_cast<double>(d), true};
    }
    static Confidence from_double(double v) {
        if (v == 0.0) return ratio(0, 1);
        if (v == 1.0) return ratio(1, 1);
        return {0, 1, v, false};
    }
};

/// A relevance value. When `exact`, value == num / den with den > 0 and
/// comparisons go through cross-multiplication.
struct Score {
    double value = 0.0;
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool exact = true;

    static Score ratio(std::int64_t n, std::int64_t d) {
        if (d < 0) n = -n, d = -d;
        return {static_cast<double>(n) / static_cast<double>(d), n, d, true};
    }
    static Score approx(double v) { return {v, 0, 1, false}; }
};

inline constexpr double score_epsilon = 1e-12;

/// -1, 0 or 1 as a is below, equal to or above b.
inline int compare(const Score& a, const Score& b) {
    if (a.exact && b.exact) {
        __extension__ using wide = __int128;
        const wide lhs = static_cast<wide>(a.num) * b.den;
        const wide rhs = static_cast<wide>(b.num) * a.den;
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    const double d = a.value - b.value;
    if (std::fabs(d) <= score_epsilon) return 0;
    return d < 0 ? -1 : 1;
}

/// Deterministic preference between two scored rectangles: higher score
/// wins, then the smaller intent sequence, then the smaller extent sequence.
inline bool preferred(const Score& sa, const PropertySet& intent_a, const ObjectSet& extent_a, const Score& sb,
                      const PropertySet& intent_b, const ObjectSet& extent_b) {
    if (int c = compare(sa, sb); c != 0) return c > 0;
    if (lex_less(intent_a, intent_b)) return true;
    if (lex_less(intent_b, intent_a)) return false;
    return lex_less(extent_a, extent_b);
}

/// Highest confidence among the rules X -> itemset\X, counted over the
/// objects `within`. Only co-atoms X = itemset\{b} need checking, since
/// shrinking X can only grow its support. Splits whose premise has no
/// support are skipped; itemsets of fewer than two items score
/// `single_item_conf`.
inline Confidence max_rule_confidence(const Relation& rel, const ObjectSet& within, const PropertySet& itemset,
                                      double single_item_conf) {
    if (itemset.count() < 2) return Confidence::from_double(single_item_conf);
    const auto numerator = static_cast<std::int64_t>((rel.extent_of(itemset) & within).count());
    std::int64_t best_den = 0;
    itemset.for_each([&](std::size_t b) {
        auto premise = itemset;
        premise.erase(b);
        const auto d = static_cast<std::int64_t>((rel.extent_of(premise) & within).count());
        if (d > 0 && (best_den == 0 || d < best_den)) best_den = d;
    });
    if (best_den == 0) return Confidence::ratio(0, 1);
    return Confidence::ratio(numerator, best_den);
}

/// Maximum confidence of the rules generated from a concept's intent.
inline Confidence concept_confidence(const FormalContext& ctx, const FormalConcept& c,
                                     const RelevanceConfig& cfg = {}) {
    if (!is_concept(ctx, c)) throw ContractError("concept_confidence: argument is not a formal concept");
    return max_rule_confidence(ctx.relation(), ctx.all_objects(), c.intent, cfg.single_item_conf);
}

/// (length + conf) * (length + width)
inline Score concept_score(std::size_t length, std::size_t width, const Confidence& conf) {
    const auto l = static_cast<std::int64_t>(length);
    const auto w = static_cast<std::int64_t>(width);
    if (!conf.exact) return Score::approx((static_cast<double>(l) + conf.value) * static_cast<double>(l + w));
    return Score::ratio((l * conf.den + conf.num) * (l + w), conf.den);
}

inline Score concept_relevance(const FormalContext& ctx, const FormalConcept& c, const RelevanceConfig& cfg = {}) {
    return concept_score(c.intent.count(), c.extent.count(), concept_confidence(ctx, c, cfg));
}

/// Pseudo-concept relevance from its raw measurements.
inline Score pcf_score(std::size_t size, std::size_t length, std::size_t width, const Confidence& conf,
                       PcfFormula formula) {
    const auto s = static_cast<std::int64_t>(size);
    const auto l = static_cast<std::int64_t>(length);
    const auto lw = static_cast<std::int64_t>(length + width);
    if (formula == PcfFormula::def10) {
        if (lw == 0) return Score::ratio(0, 1);
        return Score::ratio(s * (lw - s), lw);
    }
    if (!conf.exact) {
        const double den = static_cast<double>(l) + conf.value;
        if (den == 0.0) return Score::ratio(0, 1);
        return Score::approx(static_cast<double>(s) / den * static_cast<double>(lw - s));
    }
    const std::int64_t den = l * conf.den + conf.num;
    if (den == 0) return Score::ratio(0, 1);
    return Score::ratio(s * conf.den * (lw - s), den);
}

/// Confidence of a pseudo-concept: rules from its column set, counted over
/// its rows only.
inline Confidence pcf_confidence(const PseudoConcept& pcf, const RelevanceConfig& cfg = {}) {
    return max_rule_confidence(*pcf.universe, pcf.rows, pcf.cols, cfg.single_item_conf);
}

inline Score pcf_relevance(const PseudoConcept& pcf, const RelevanceConfig& cfg = {}) {
    const auto conf = cfg.pcf_formula == PcfFormula::def10_conf ? pcf_confidence(pcf, cfg) : Confidence{};
    return pcf_score(pcf_size(pcf), pcf.length(), pcf.width(), conf, cfg.pcf_formula);
}

}  // namespace conceptminer
