#pragma once

#include "conceptminer/concepts.hpp"
#include "conceptminer/context.hpp"
#include "conceptminer/optimal.hpp"
#include "conceptminer/pseudo_concept.hpp"
#include "conceptminer/relevance.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace conceptminer {

/// The incident couples of one object row.
struct Package {
    std::size_t object = 0;
    std::vector<Couple> couples;
};

/// One package per object with a non-empty row, in object order.
inline std::vector<Package> partition_rows(const FormalContext& ctx) {
    std::vector<Package> out;
    for (std::size_t o = 0; o < ctx.n_objects(); ++o) {
        const auto& row = ctx.relation().row(o);
        if (row.empty()) continue;
        Package pkg{o, {}};
        row.for_each([&](std::size_t p) { pkg.couples.push_back({o, p}); });
        out.push_back(std::move(pkg));
    }
    return out;
}

/// A set of concepts meant to cover every incident couple of a context.
struct Coverage {
    std::vector<FormalConcept> members;
    const FormalContext* context = nullptr;

    std::size_t size() const noexcept { return members.size(); }
};

struct Sfc2aStats {
    std::size_t packages = 0;
    std::size_t selections = 0;  // couples handed to the optimal-concept search
    std::size_t heuristic_steps = 0;
};

/// Called after each package is absorbed with the package index, the
/// partial relation searched in that step, and the coverage so far.
using Sfc2aStepHook = std::function<void(std::size_t, const Relation&, const std::vector<FormalConcept>&)>;

/// Incremental optimal coverage.
///
/// Packages are absorbed one row at a time. For package i the universe is
/// the couples already covered plus the package itself. The package's
/// couples are ranked once by the relevance of their pseudo-concepts
/// (descending, ties by property index); then, while uncovered couples
/// remain, the best one is expanded to a concept of the universe, members
/// inside that concept are dropped, and the couples it covers leave the
/// package.
///
/// Members built against partial universes are finally re-closed in the
/// full context, de-duplicated and sorted.
inline Coverage sfc2a(const FormalContext& ctx, const RelevanceConfig& cfg = {}, Sfc2aStats* stats = nullptr,
                      const Sfc2aStepHook& hook = {}) {
    cfg.validate();
    Coverage cov{{}, &ctx};
    Relation universe(ctx.n_objects(), ctx.n_properties());
    const auto packages = partition_rows(ctx);

    for (std::size_t i = 0; i < packages.size(); ++i) {
        const auto& pkg = packages[i];
        for (auto c : pkg.couples) universe.add(c);

        struct Ranked {
            Couple couple;
            Score score;
        };
        std::vector<Ranked> ranked;
        ranked.reserve(pkg.couples.size());
        for (auto c : pkg.couples)
            ranked.push_back({c, pcf_relevance(pseudo_concept(universe, c.object, c.property), cfg)});
        std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
            if (int c = compare(a.score, b.score); c != 0) return c > 0;
            if (a.couple.property != b.couple.property) return a.couple.property < b.couple.property;
            return a.couple.object < b.couple.object;
        });

        std::vector<bool> covered(ranked.size(), false);
        for (std::size_t k = 0; k < ranked.size(); ++k) {
            if (covered[k]) continue;
            const auto anchor = ranked[k].couple;
            HeuristicTrace trace;
            auto fc = heuristic_optimal_concept(universe, anchor.object, anchor.property, cfg,
                                                stats ? &trace : nullptr);
            if (stats) {
                ++stats->selections;
                stats->heuristic_steps += trace.scores.size();
            }
            std::erase_if(cov.members, [&](const FormalConcept& m) { return rectangle_within(m, fc); });
            for (std::size_t r = k; r < ranked.size(); ++r)
                if (!covered[r] && contains_couple(fc, ranked[r].couple)) covered[r] = true;
            cov.members.push_back(std::move(fc));
        }
        if (stats) ++stats->packages;
        if (hook) hook(i, universe, cov.members);
    }

    const auto& rel = ctx.relation();
    for (auto& m : cov.members) {
        for (;;) {
            auto closed = concept_of_intent(rel, m.intent);
            if (closed == m) break;
            m = std::move(closed);
        }
    }
    std::sort(cov.members.begin(), cov.members.end(), concept_less);
    cov.members.erase(std::unique(cov.members.begin(), cov.members.end()), cov.members.end());
    std::vector<FormalConcept> kept;
    for (std::size_t a = 0; a < cov.members.size(); ++a) {
        bool inside = false;
        for (std::size_t b = 0; b < cov.members.size() && !inside; ++b)
            inside = a != b && rectangle_within(cov.members[a], cov.members[b]);
        if (!inside) kept.push_back(cov.members[a]);
    }
    cov.members = std::move(kept);
    return cov;
}

struct CoverageReport {
    std::vector<Couple> uncovered;
    std::vector<std::size_t> non_concepts;                    // member indices
    std::vector<std::pair<std::size_t, std::size_t>> subsumed;  // (inner, outer) member indices

    bool ok() const { return uncovered.empty() && non_concepts.empty() && subsumed.empty(); }
};

/// Checks completeness, closedness of every member, and absence of members
/// inside other members. Identical members are reported once.
inline CoverageReport validate_coverage(const FormalContext& ctx, const Coverage& cov) {
    CoverageReport report;
    Relation covered(ctx.n_objects(), ctx.n_properties());
    for (std::size_t i = 0; i < cov.members.size(); ++i) {
        const auto& m = cov.members[i];
        if (!is_concept(ctx, m)) report.non_concepts.push_back(i);
        // A member with couples outside the context cannot be a concept; only
        // its incident part counts toward coverage.
        m.extent.for_each([&](std::size_t o) {
            m.intent.for_each([&](std::size_t p) {
                if (ctx.incident(o, p)) covered.add(o, p);
            });
        });
    }
    for (auto c : ctx.relation().couples())
        if (!covered.incident(c)) report.uncovered.push_back(c);
    for (std::size_t a = 0; a < cov.members.size(); ++a)
        for (std::size_t b = 0; b < cov.members.size(); ++b) {
            if (a == b || !rectangle_within(cov.members[a], cov.members[b])) continue;
            if (cov.members[a] == cov.members[b] && a < b) continue;
            report.subsumed.emplace_back(a, b);
        }
    return report;
}

struct Itemset {
    PropertySet items;
    std::size_t support_count = 0;
    double support = 0.0;  // support_count / |O|
};

/// Distinct member intents, in intent order, with their supports.
inline std::vector<Itemset> itemsets_of(const FormalContext& ctx, const Coverage& cov) {
    std::vector<PropertySet> intents;
    for (const auto& m : cov.members) intents.push_back(m.intent);
    std::sort(intents.begin(), intents.end(), LexLess{});
    intents.erase(std::unique(intents.begin(), intents.end()), intents.end());
    std::vector<Itemset> out;
    for (auto& b : intents) {
        const auto n = extent_of(ctx, b).count();
        const double sup = ctx.n_objects() ? static_cast<double>(n) / static_cast<double>(ctx.n_objects()) : 0.0;
        out.push_back({std::move(b), n, sup});
    }
    return out;
}

/// One member per line, "{o-labels} | {p-labels}", in member order.
inline std::string serialize_coverage(const FormalContext& ctx, const Coverage& cov) {
    std::string out;
    for (const auto& m : cov.members) out += format_concept(ctx, m) + '\n';
    return out;
}

}  // namespace conceptminer
