#pragma once

#include "conceptminer/context.hpp"
#include "conceptminer/errors.hpp"

#include <cstddef>
#include <string>

namespace conceptminer {

/// A rectangle rows x cols around an anchor couple, read against a universe
/// relation (the full context or a partial relation). Unlike a formal
/// concept it may contain zeros.
struct PseudoConcept {
    ObjectSet rows;
    PropertySet cols;
    Couple anchor;
    const Relation* universe = nullptr;

    std::size_t length() const { return cols.count(); }
    std::size_t width() const { return rows.count(); }
};

/// The rectangle ({p}', {o}') in `universe`. Every formal concept of the
/// universe that contains (o, p) is a sub-rectangle of it.
inline PseudoConcept pseudo_concept(const Relation& universe, std::size_t o, std::size_t p) {
    if (o >= universe.n_objects() || p >= universe.n_properties() || !universe.incident(o, p))
        throw ContractError("pseudo-concept anchor (" + std::to_string(o) + "," + std::to_string(p) +
                            ") is not an incident couple");
    return {universe.column(p), universe.row(o), {o, p}, &universe};
}

inline bool is_dense(const PseudoConcept& pcf) { return pcf.universe->is_dense(pcf.rows, pcf.cols); }

/// Number of incident couples inside the rectangle.
inline std::size_t pcf_size(const PseudoConcept& pcf) { return pcf.universe->count_inside(pcf.rows, pcf.cols); }

}  // namespace conceptminer
