#pragma once

#include "conceptminer/errors.hpp"
#include "conceptminer/index_set.hpp"

#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace conceptminer {

/// A binary relation between |O| objects and |P| properties, stored both
/// row-wise and column-wise so either derivation is a run of intersections.
///
/// The full incidence of a context is a Relation, and so is any partial
/// relation (a subset of its couples) that the coverage search works inside.
class Relation {
public:
    Relation() = default;
    Relation(std::size_t n_objects, std::size_t n_properties)
        : rows_(n_objects, PropertySet(n_properties)), cols_(n_properties, ObjectSet(n_objects)) {}

    std::size_t n_objects() const noexcept { return rows_.size(); }
    std::size_t n_properties() const noexcept { return cols_.size(); }

    bool incident(std::size_t o, std::size_t p) const { return rows_[o].contains(p); }
    bool incident(Couple c) const { return incident(c.object, c.property); }

    void add(std::size_t o, std::size_t p) {
        if (o >= n_objects() || p >= n_properties())
            throw ContractError("couple (" + std::to_string(o) + "," + std::to_string(p) + ") out of bounds");
        rows_[o].insert(p);
        cols_[p].insert(o);
    }
    void add(Couple c) { add(c.object, c.property); }

    /// Adds every couple of the rectangle extent x intent.
    void add_rectangle(const ObjectSet& extent, const PropertySet& intent) {
        extent.for_each([&](std::size_t o) { intent.for_each([&](std::size_t p) { add(o, p); }); });
    }

    const PropertySet& row(std::size_t o) const { return rows_[o]; }
    const ObjectSet& column(std::size_t p) const { return cols_[p]; }

    std::size_t couple_count() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.count();
        return n;
    }

    std::vector<Couple> couples() const {
        std::vector<Couple> out;
        for (std::size_t o = 0; o < rows_.size(); ++o)
            rows_[o].for_each([&](std::size_t p) { out.push_back({o, p}); });
        return out;
    }

    /// A-derivation: properties shared by every object of `objects`.
    PropertySet intent_of(const ObjectSet& objects) const {
        auto out = PropertySet::full(n_properties());
        objects.for_each([&](std::size_t o) { out &= rows_[o]; });
        return out;
    }

    /// B-derivation: objects holding every property of `props`.
    ObjectSet extent_of(const PropertySet& props) const {
        auto out = ObjectSet::full(n_objects());
        props.for_each([&](std::size_t p) { out &= cols_[p]; });
        return out;
    }

    PropertySet close_intent(const PropertySet& props) const { return intent_of(extent_of(props)); }
    ObjectSet close_extent(const ObjectSet& objects) const { return extent_of(intent_of(objects)); }

    /// True when every couple of extent x intent is incident.
    bool is_dense(const ObjectSet& extent, const PropertySet& intent) const {
        for (auto o = extent.first(); o != ObjectSet::npos; o = extent.next(o))
            if (!intent.is_subset_of(rows_[o])) return false;
        return true;
    }

    /// Number of incident couples inside extent x intent.
    std::size_t count_inside(const ObjectSet& extent, const PropertySet& intent) const {
        std::size_t n = 0;
        extent.for_each([&](std::size_t o) { n += intent.intersection_count(rows_[o]); });
        return n;
    }

    friend bool operator==(const Relation& a, const Relation& b) { return a.rows_ == b.rows_; }

private:
    std::vector<PropertySet> rows_;
    std::vector<ObjectSet> cols_;
};

/// Objects, properties and their incidence. Immutable once built.
class FormalContext {
public:
    FormalContext() = default;

    /// `rows[o]` lists the property indices object `o` holds.
    FormalContext(std::vector<std::string> object_labels, std::vector<std::string> property_labels,
                  const std::vector<std::vector<std::size_t>>& rows)
        : objects_(std::move(object_labels)),
          properties_(std::move(property_labels)),
          relation_(objects_.size(), properties_.size()) {
        check_unique(objects_, "object");
        check_unique(properties_, "property");
        if (rows.size() != objects_.size())
            throw ContractError("incidence has " + std::to_string(rows.size()) + " rows for " +
                                std::to_string(objects_.size()) + " objects");
        for (std::size_t o = 0; o < rows.size(); ++o)
            for (auto p : rows[o]) {
                if (p >= properties_.size())
                    throw ContractError("property index " + std::to_string(p) + " out of range in row " +
                                        std::to_string(o));
                relation_.add(o, p);
            }
    }

    FormalContext(std::vector<std::string> object_labels, std::vector<std::string> property_labels,
                  Relation relation)
        : objects_(std::move(object_labels)), properties_(std::move(property_labels)), relation_(std::move(relation)) {
        check_unique(objects_, "object");
        check_unique(properties_, "property");
        if (relation_.n_objects() != objects_.size() || relation_.n_properties() != properties_.size())
            throw ContractError("relation shape does not match labels");
    }

    std::size_t n_objects() const noexcept { return objects_.size(); }
    std::size_t n_properties() const noexcept { return properties_.size(); }
    const std::vector<std::string>& object_labels() const noexcept { return objects_; }
    const std::vector<std::string>& property_labels() const noexcept { return properties_; }
    const Relation& relation() const noexcept { return relation_; }

    bool incident(std::size_t o, std::size_t p) const { return relation_.incident(o, p); }
    std::size_t couple_count() const { return relation_.couple_count(); }

    ObjectSet no_objects() const { return ObjectSet(n_objects()); }
    ObjectSet all_objects() const { return ObjectSet::full(n_objects()); }
    PropertySet no_properties() const { return PropertySet(n_properties()); }
    PropertySet all_properties() const { return PropertySet::full(n_properties()); }
    ObjectSet objects(std::initializer_list<std::size_t> ids) const { return ObjectSet(n_objects(), ids); }
    PropertySet properties(std::initializer_list<std::size_t> ids) const { return PropertySet(n_properties(), ids); }

    friend bool operator==(const FormalContext& a, const FormalContext& b) {
        return a.objects_ == b.objects_ && a.properties_ == b.properties_ && a.relation_ == b.relation_;
    }

private:
    static void check_unique(const std::vector<std::string>& labels, const char* side) {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw ContractError(std::string("duplicate ") + side + " label '" + l + "'");
    }

    std::vector<std::string> objects_;
    std::vector<std::string> properties_;
    Relation relation_;
};

inline PropertySet intent_of(const FormalContext& ctx, const ObjectSet& objects) {
    return ctx.relation().intent_of(objects);
}

inline ObjectSet extent_of(const FormalContext& ctx, const PropertySet& props) {
    return ctx.relation().extent_of(props);
}

inline PropertySet close_intent(const FormalContext& ctx, const PropertySet& props) {
    return ctx.relation().close_intent(props);
}

inline ObjectSet close_extent(const FormalContext& ctx, const ObjectSet& objects) {
    return ctx.relation().close_extent(objects);
}

}  // namespace conceptminer
