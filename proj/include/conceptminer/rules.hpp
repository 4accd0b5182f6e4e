#pragma once

#include "conceptminer/context.hpp"
#include "conceptminer/coverage.hpp"
#include "conceptminer/errors.hpp"
#include "conceptminer/relevance.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace conceptminer {

struct MiningParams {
    double min_sup = 0.0;   // fraction of |O|, inclusive
    double min_conf = 0.0;  // inclusive
    std::size_t max_intent_for_rule_expansion = 16;

    void validate() const {
        if (!(min_sup >= 0.0 && min_sup <= 1.0)) throw ContractError("min_sup must lie in [0,1]");
        if (!(min_conf >= 0.0 && min_conf <= 1.0)) throw ContractError("min_conf must lie in [0,1]");
    }
};

struct AssociationRule {
    PropertySet antecedent;
    PropertySet consequent;
    double support = 0.0;
    double confidence = 0.0;
};

/// Identity of a rule: its two sides. Numbers follow from them.
inline bool same_rule(const AssociationRule& a, const AssociationRule& b) {
    return a.antecedent == b.antecedent && a.consequent == b.consequent;
}

inline bool rule_key_less(const AssociationRule& a, const AssociationRule& b) {
    if (lex_less(a.antecedent, b.antecedent)) return true;
    if (lex_less(b.antecedent, a.antecedent)) return false;
    return lex_less(a.consequent, b.consequent);
}

/// Confidence desc, support desc, then antecedent and consequent order.
inline bool rule_rank_less(const AssociationRule& a, const AssociationRule& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    if (a.support != b.support) return a.support > b.support;
    return rule_key_less(a, b);
}

/// Sorts into canonical order and drops duplicate rules.
inline void canonicalize(std::vector<AssociationRule>& rules) {
    std::sort(rules.begin(), rules.end(), rule_rank_less);
    rules.erase(std::unique(rules.begin(), rules.end(), same_rule), rules.end());
}

inline double fraction(std::size_t n, std::size_t total) {
    return total ? static_cast<double>(n) / static_cast<double>(total) : 0.0;
}

/// Every rule X -> B\X with X a non-empty proper subset of B that passes
/// both thresholds, ordered by antecedent then consequent. Itemsets of fewer
/// than two items give nothing; itemsets without support give nothing.
/// Throws GuardError past the expansion cap.
inline std::vector<AssociationRule> rules_from_itemset(const FormalContext& ctx, const PropertySet& itemset,
                                                       const MiningParams& params) {
    const auto items = itemset.indices();
    const auto k = items.size();
    if (k < 2) return {};
    if (k > params.max_intent_for_rule_expansion)
        throw GuardError("rule expansion refused for an itemset of " + std::to_string(k) + " items",
                         params.max_intent_for_rule_expansion);
    const auto& rel = ctx.relation();
    const auto n = ctx.n_objects();
    const auto joint = rel.extent_of(itemset).count();
    if (joint == 0) return {};
    const double support = fraction(joint, n);
    if (support < params.min_sup) return {};

    std::vector<AssociationRule> out;
    const std::uint64_t all = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t mask = 1; mask < all; ++mask) {
        PropertySet lhs(ctx.n_properties()), rhs(ctx.n_properties());
        for (std::size_t b = 0; b < k; ++b) ((mask >> b) & 1u ? lhs : rhs).insert(items[b]);
        const double confidence = fraction(joint, rel.extent_of(lhs).count());
        if (confidence < params.min_conf) continue;
        out.push_back({std::move(lhs), std::move(rhs), support, confidence});
    }
    std::sort(out.begin(), out.end(), rule_key_less);
    return out;
}

/// Rules from the itemsets of a coverage. Itemsets below min_sup are
/// skipped before expansion; none of their rules could pass anyway.
inline std::vector<AssociationRule> rules_from_coverage(const FormalContext& ctx, const Coverage& cov,
                                                        const MiningParams& params) {
    params.validate();
    std::vector<AssociationRule> rules;
    for (const auto& is : itemsets_of(ctx, cov)) {
        if (is.support_count == 0 || is.support < params.min_sup) continue;
        auto r = rules_from_itemset(ctx, is.items, params);
        rules.insert(rules.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    }
    canonicalize(rules);
    return rules;
}

inline std::vector<AssociationRule> mine_sfc2a(const FormalContext& ctx, const MiningParams& params,
                                               const RelevanceConfig& cfg = {}) {
    params.validate();
    return rules_from_coverage(ctx, sfc2a(ctx, cfg), params);
}

struct FrequentItemset {
    PropertySet items;
    std::size_t support_count = 0;
    double support = 0.0;
};

/// Levelwise frequent-itemset mining. Level k joins (k-1)-itemsets sharing
/// their first k-2 items, drops candidates with an infrequent (k-1)-subset,
/// and counts the rest by intersecting extents. Returns every itemset with
/// a non-empty extent and support >= min_sup, in itemset order.
inline std::vector<FrequentItemset> apriori_frequent(const FormalContext& ctx, double min_sup) {
    if (!(min_sup >= 0.0 && min_sup <= 1.0)) throw ContractError("min_sup must lie in [0,1]");
    const auto n = ctx.n_objects();
    const auto& rel = ctx.relation();

    struct Entry {
        std::vector<std::size_t> items;
        ObjectSet extent;
    };
    auto frequent = [&](std::size_t count) { return count > 0 && fraction(count, n) >= min_sup; };

    std::vector<FrequentItemset> out;
    std::vector<Entry> level;
    for (std::size_t p = 0; p < ctx.n_properties(); ++p)
        if (frequent(rel.column(p).count())) level.push_back({{p}, rel.column(p)});

    while (!level.empty()) {
        for (const auto& e : level) {
            const auto c = e.extent.count();
            out.push_back({PropertySet(ctx.n_properties(), e.items), c, fraction(c, n)});
        }
        std::set<std::vector<std::size_t>> known;
        for (const auto& e : level) known.insert(e.items);

        std::vector<Entry> next;
        for (std::size_t a = 0; a < level.size(); ++a) {
            const auto& ia = level[a].items;
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                const auto& ib = level[b].items;
                if (!std::equal(ia.begin(), ia.end() - 1, ib.begin(), ib.end() - 1)) break;
                auto cand = ia;
                cand.push_back(ib.back());
                bool pruned = false;
                for (std::size_t drop = 0; drop + 2 < cand.size() && !pruned; ++drop) {
                    auto sub = cand;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                    pruned = !known.count(sub);
                }
                if (pruned) continue;
                auto ext = level[a].extent & rel.column(ib.back());
                if (frequent(ext.count())) next.push_back({std::move(cand), std::move(ext)});
            }
        }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(),
              [](const FrequentItemset& x, const FrequentItemset& y) { return lex_less(x.items, y.items); });
    return out;
}

inline std::vector<AssociationRule> apriori_rules(const FormalContext& ctx, const MiningParams& params) {
    params.validate();
    std::vector<AssociationRule> rules;
    for (const auto& f : apriori_frequent(ctx, params.min_sup)) {
        if (f.items.count() < 2) continue;
        auto r = rules_from_itemset(ctx, f.items, params);
        rules.insert(rules.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    }
    canonicalize(rules);
    return rules;
}

struct RuleDiff {
    std::vector<AssociationRule> only_left;
    std::vector<AssociationRule> only_right;
    std::size_t common = 0;
};

/// Symmetric difference of two rule lists by rule identity.
inline RuleDiff diff_rules(std::vector<AssociationRule> left, std::vector<AssociationRule> right) {
    std::sort(left.begin(), left.end(), rule_key_less);
    std::sort(right.begin(), right.end(), rule_key_less);
    RuleDiff d;
    std::size_t i = 0, j = 0;
    while (i < left.size() || j < right.size()) {
        if (j == right.size() || (i < left.size() && rule_key_less(left[i], right[j]))) {
            d.only_left.push_back(left[i++]);
        } else if (i == left.size() || rule_key_less(right[j], left[i])) {
            d.only_right.push_back(right[j++]);
        } else {
            ++d.common, ++i, ++j;
        }
    }
    return d;
}

}  // namespace conceptminer
