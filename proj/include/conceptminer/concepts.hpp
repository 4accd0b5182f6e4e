#pragma once

#include "conceptminer/context.hpp"
#include "conceptminer/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace conceptminer {

inline constexpr std::size_t default_enumeration_guard = 24;

struct FormalConcept {
    ObjectSet extent;
    PropertySet intent;

    friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

/// Canonical concept order: by intent sequence, then extent sequence.
inline bool concept_less(const FormalConcept& a, const FormalConcept& b) {
    if (lex_less(a.intent, b.intent)) return true;
    if (lex_less(b.intent, a.intent)) return false;
    return lex_less(a.extent, b.extent);
}

/// Rectangle inclusion: extent and intent both contained.
inline bool rectangle_within(const FormalConcept& inner, const FormalConcept& outer) {
    return inner.extent.is_subset_of(outer.extent) && inner.intent.is_subset_of(outer.intent);
}

inline bool contains_couple(const FormalConcept& c, Couple k) {
    return c.extent.contains(k.object) && c.intent.contains(k.property);
}

inline bool is_concept(const Relation& rel, const ObjectSet& extent, const PropertySet& intent) {
    return rel.intent_of(extent) == intent && rel.extent_of(intent) == extent;
}

inline bool is_concept(const FormalContext& ctx, const ObjectSet& extent, const PropertySet& intent) {
    return is_concept(ctx.relation(), extent, intent);
}

inline bool is_concept(const FormalContext& ctx, const FormalConcept& c) {
    return is_concept(ctx, c.extent, c.intent);
}

/// The concept generated by a property set: (B', B'').
inline FormalConcept concept_of_intent(const Relation& rel, const PropertySet& props) {
    auto extent = rel.extent_of(props);
    auto intent = rel.intent_of(extent);
    return {std::move(extent), std::move(intent)};
}

/// The concept generated by an object set: (A'', A').
inline FormalConcept concept_of_extent(const Relation& rel, const ObjectSet& objects) {
    auto intent = rel.intent_of(objects);
    auto extent = rel.extent_of(intent);
    return {std::move(extent), std::move(intent)};
}

/// The concept order: c1 <= c2 iff extent(c1) is contained in extent(c2).
inline bool leq(const FormalConcept& c1, const FormalConcept& c2) { return c1.extent.is_subset_of(c2.extent); }

class ConceptLattice {
public:
    ConceptLattice(const FormalContext& ctx, std::vector<FormalConcept> concepts)
        : ctx_(&ctx), concepts_(std::move(concepts)) {}

    const FormalContext& context() const noexcept { return *ctx_; }
    const std::vector<FormalConcept>& concepts() const noexcept { return concepts_; }
    std::size_t size() const noexcept { return concepts_.size(); }
    const FormalConcept& operator[](std::size_t i) const { return concepts_[i]; }

    auto begin() const { return concepts_.begin(); }
    auto end() const { return concepts_.end(); }

    /// Index of `c`, or size() when absent.
    std::size_t index_of(const FormalConcept& c) const {
        auto it = std::lower_bound(concepts_.begin(), concepts_.end(), c, concept_less);
        return (it != concepts_.end() && *it == c) ? static_cast<std::size_t>(it - concepts_.begin()) : size();
    }

    /// Cover pairs (lower, upper) of the Hasse diagram, in index order.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const {
        const auto n = concepts_.size();
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || !leq(concepts_[i], concepts_[j])) continue;
                bool covered = true;
                for (std::size_t k = 0; k < n && covered; ++k)
                    if (k != i && k != j && leq(concepts_[i], concepts_[k]) && leq(concepts_[k], concepts_[j]))
                        covered = false;
                if (covered) edges.emplace_back(i, j);
            }
        return edges;
    }

private:
    const FormalContext* ctx_;
    std::vector<FormalConcept> concepts_;
};

/// All formal concepts of `ctx`, sorted by intent sequence.
///
/// Generation follows Ganter's NextClosure over the properties, so the work is
/// polynomial per concept; the guard only bounds the possible output size.
/// Throws GuardError when |P| exceeds `max_properties`.
inline ConceptLattice enumerate_concepts(const FormalContext& ctx,
                                         std::size_t max_properties = default_enumeration_guard) {
    const auto n = ctx.n_properties();
    if (n > max_properties)
        throw GuardError("concept enumeration refused: context has " + std::to_string(n) + " properties",
                         max_properties);
    const auto& rel = ctx.relation();

    std::vector<FormalConcept> out;
    auto current = rel.close_intent(ctx.no_properties());
    out.push_back({rel.extent_of(current), current});
    for (;;) {
        bool advanced = false;
        for (std::size_t i = n; i-- > 0;) {
            if (current.contains(i)) continue;
            PropertySet seed(n);
            current.for_each([&](std::size_t p) {
                if (p < i) seed.insert(p);
            });
            seed.insert(i);
            auto next = rel.close_intent(seed);
            bool canonical = true;
            for (auto p = next.first(); p != PropertySet::npos && p < i; p = next.next(p))
                if (!current.contains(p)) {
                    canonical = false;
                    break;
                }
            if (!canonical) continue;
            current = std::move(next);
            out.push_back({rel.extent_of(current), current});
            advanced = true;
            break;
        }
        if (!advanced) break;
    }
    std::sort(out.begin(), out.end(), concept_less);
    return ConceptLattice(ctx, std::move(out));
}

/// Least upper bound: (extent_of(common intent), common intent).
inline FormalConcept supremum(const FormalContext& ctx, const std::vector<FormalConcept>& cs) {
    auto common = ctx.all_properties();
    for (const auto& c : cs) common &= c.intent;
    return {extent_of(ctx, common), common};
}

/// Greatest lower bound: (common extent, intent_of(common extent)).
inline FormalConcept infimum(const FormalContext& ctx, const std::vector<FormalConcept>& cs) {
    auto common = ctx.all_objects();
    for (const auto& c : cs) common &= c.extent;
    return {common, intent_of(ctx, common)};
}

template <class Tag>
std::string format_labels(const IndexSet<Tag>& set, const std::vector<std::string>& labels, char sep = ',') {
    std::string out = "{";
    bool first = true;
    set.for_each([&](std::size_t i) {
        if (!first) out += sep;
        out += labels[i];
        first = false;
    });
    out += '}';
    return out;
}

/// "{o-labels} | {p-labels}"
inline std::string format_concept(const FormalContext& ctx, const FormalConcept& c) {
    return format_labels(c.extent, ctx.object_labels()) + " | " + format_labels(c.intent, ctx.property_labels());
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}
}  // namespace detail

/// Hasse diagram as a DOT digraph. Nodes are `c<index>` in lattice order and
/// edges point from a concept to its upper covers.
inline std::string export_dot(const ConceptLattice& lattice) {
    const auto& ctx = lattice.context();
    std::ostringstream out;
    out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const auto& c = lattice[i];
        out << "  c" << i << " [label=\""
            << detail::dot_escape(format_labels(c.extent, ctx.object_labels())) << "\\n"
            << detail::dot_escape(format_labels(c.intent, ctx.property_labels())) << "\"];\n";
    }
    for (auto [lo, hi] : lattice.hasse_edges()) out << "  c" << lo << " -> c" << hi << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace conceptminer
