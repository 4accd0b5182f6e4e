#pragma once

#include "conceptminer/concepts.hpp"
#include "conceptminer/context.hpp"
#include "conceptminer/rules.hpp"

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace conceptminer {

inline std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

/// Items comma-joined in property-index order.
inline std::string join_items(const FormalContext& ctx, const PropertySet& items) {
    std::string out;
    items.for_each([&](std::size_t p) {
        if (!out.empty()) out += ',';
        out += ctx.property_labels()[p];
    });
    return out;
}

inline constexpr std::string_view rule_tsv_header = "antecedent\tconsequent\tsupport\tconfidence\talgorithm";

/// Header line plus one line per rule, numbers at six decimals.
inline std::string format_rules_tsv(const FormalContext& ctx, const std::vector<AssociationRule>& rules,
                                    std::string_view algorithm) {
    std::string out(rule_tsv_header);
    out += '\n';
    for (const auto& r : rules) {
        out += join_items(ctx, r.antecedent);
        out += '\t';
        out += join_items(ctx, r.consequent);
        out += '\t';
        out += format_fixed6(r.support);
        out += '\t';
        out += format_fixed6(r.confidence);
        out += '\t';
        out += algorithm;
        out += '\n';
    }
    return out;
}

}  // namespace conceptminer
