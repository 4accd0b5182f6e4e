#pragma once

#include "conceptminer/context.hpp"
#include "conceptminer/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace conceptminer {

enum class InputFormat { fimi, csv, cxt };

namespace detail {

/// Splits on '\n', strips a trailing '\r' per line, and drops the empty
/// segment after a final newline.
inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

inline std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::optional<std::size_t> to_index(std::string_view tok) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) return std::nullopt;
    return v;
}

}  // namespace detail

/// FIMI transaction format: one object per line (labelled `t<line>`), one
/// property per distinct item id (labelled `i<id>`, ascending id order).
/// A blank line is an object with an empty row.
inline FormalContext parse_fimi(std::string_view text) {
    auto lines = detail::split_lines(text);
    std::vector<std::vector<std::size_t>> items(lines.size());
    std::map<std::size_t, std::size_t> ids;  // item id -> property index, filled after the scan
    for (std::size_t l = 0; l < lines.size(); ++l) {
        std::string_view line = lines[l];
        std::size_t pos = 0;
        while (pos < line.size()) {
            auto b = line.find_first_not_of(" \t", pos);
            if (b == std::string_view::npos) break;
            auto e = line.find_first_of(" \t", b);
            if (e == std::string_view::npos) e = line.size();
            auto tok = line.substr(b, e - b);
            auto id = detail::to_index(tok);
            if (!id) throw ParseError("invalid item id '" + std::string(tok) + "'", l + 1);
            items[l].push_back(*id);
            ids.emplace(*id, 0);
            pos = e;
        }
    }
    std::vector<std::string> props;
    props.reserve(ids.size());
    for (auto& [id, idx] : ids) {
        idx = props.size();
        props.push_back("i" + std::to_string(id));
    }
    std::vector<std::string> objs;
    objs.reserve(lines.size());
    std::vector<std::vector<std::size_t>> rows(lines.size());
    for (std::size_t l = 0; l < lines.size(); ++l) {
        objs.push_back("t" + std::to_string(l));
        for (auto id : items[l]) rows[l].push_back(ids.at(id));
    }
    return FormalContext(std::move(objs), std::move(props), rows);
}

/// Cross-table CSV. The delimiter is ';' when the header line contains one,
/// ',' otherwise. The header's first cell is empty or "O\I".
inline FormalContext parse_csv(std::string_view text) {
    auto lines = detail::split_lines(text);
    while (!lines.empty() && detail::trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) return FormalContext({}, {}, std::vector<std::vector<std::size_t>>{});

    const char sep = lines[0].find(';') != std::string_view::npos ? ';' : ',';
    auto header = detail::split(lines[0], sep);
    if (!header[0].empty() && header[0] != "O\\I")
        throw ParseError("first header cell must be empty or O\\I", 1);
    std::vector<std::string> props;
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i].empty()) throw ParseError("empty property label", 1);
        props.emplace_back(header[i]);
    }

    std::vector<std::string> objs;
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        auto cells = detail::split(lines[l], sep);
        if (cells.size() != header.size())
            throw ParseError("expected " + std::to_string(header.size()) + " cells, found " +
                                 std::to_string(cells.size()),
                             l + 1);
        if (cells[0].empty()) throw ParseError("empty object label", l + 1);
        objs.emplace_back(cells[0]);
        auto& row = rows.emplace_back();
        for (std::size_t c = 1; c < cells.size(); ++c) {
            if (cells[c] == "1")
                row.push_back(c - 1);
            else if (cells[c] != "0")
                throw ParseError("cell '" + std::string(cells[c]) + "' is not 0 or 1", l + 1);
        }
    }
    try {
        return FormalContext(std::move(objs), std::move(props), rows);
    } catch (const ContractError& e) {
        throw ParseError(e.what());
    }
}

/// Burmeister .cxt: "B", name line, |O|, |P|, blank line, object names,
/// property names, then |O| rows of '.'/'X'.
inline FormalContext parse_cxt(std::string_view text) {
    auto lines = detail::split_lines(text);
    auto at = [&](std::size_t i) -> std::string_view {
        if (i >= lines.size()) throw ParseError("unexpected end of input", i + 1);
        return lines[i];
    };
    if (detail::trim(at(0)) != "B") throw ParseError("missing 'B' header", 1);
    auto n_obj = detail::to_index(detail::trim(at(2)));
    auto n_prop = detail::to_index(detail::trim(at(3)));
    if (!n_obj) throw ParseError("bad object count", 3);
    if (!n_prop) throw ParseError("bad property count", 4);
    if (!detail::trim(at(4)).empty()) throw ParseError("expected blank line", 5);

    std::size_t cur = 5;
    std::vector<std::string> objs, props;
    for (std::size_t i = 0; i < *n_obj; ++i, ++cur) objs.emplace_back(at(cur));
    for (std::size_t i = 0; i < *n_prop; ++i, ++cur) props.emplace_back(at(cur));
    std::vector<std::vector<std::size_t>> rows(*n_obj);
    for (std::size_t o = 0; o < *n_obj; ++o, ++cur) {
        auto line = detail::trim(at(cur));
        if (line.size() != *n_prop)
            throw ParseError("row has " + std::to_string(line.size()) + " cells, expected " + std::to_string(*n_prop),
                             cur + 1);
        for (std::size_t p = 0; p < line.size(); ++p) {
            if (line[p] == 'X' || line[p] == 'x')
                rows[o].push_back(p);
            else if (line[p] != '.')
                throw ParseError(std::string("invalid cell '") + line[p] + "'", cur + 1);
        }
    }
    for (; cur < lines.size(); ++cur)
        if (!detail::trim(lines[cur]).empty()) throw ParseError("trailing content", cur + 1);
    try {
        return FormalContext(std::move(objs), std::move(props), rows);
    } catch (const ContractError& e) {
        throw ParseError(e.what());
    }
}

inline std::string serialize_cxt(const FormalContext& ctx) {
    std::ostringstream out;
    out << "B\n\n" << ctx.n_objects() << '\n' << ctx.n_properties() << "\n\n";
    for (const auto& l : ctx.object_labels()) out << l << '\n';
    for (const auto& l : ctx.property_labels()) out << l << '\n';
    for (std::size_t o = 0; o < ctx.n_objects(); ++o) {
        for (std::size_t p = 0; p < ctx.n_properties(); ++p) out << (ctx.incident(o, p) ? 'X' : '.');
        out << '\n';
    }
    return out.str();
}

inline std::string serialize_csv(const FormalContext& ctx, char sep = ',') {
    std::ostringstream out;
    for (const auto& l : ctx.property_labels()) out << sep << l;
    out << '\n';
    for (std::size_t o = 0; o < ctx.n_objects(); ++o) {
        out << ctx.object_labels()[o];
        for (std::size_t p = 0; p < ctx.n_properties(); ++p) out << sep << (ctx.incident(o, p) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

inline FormalContext parse_context(std::string_view text, InputFormat format) {
    switch (format) {
        case InputFormat::fimi: return parse_fimi(text);
        case InputFormat::csv: return parse_csv(text);
        case InputFormat::cxt: return parse_cxt(text);
    }
    throw ContractError("unknown input format");
}

/// Reads a whole file; a missing or unreadable file is a ParseError.
inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline FormalContext load_context(const std::string& path, InputFormat format) {
    return parse_context(read_file(path), format);
}

}  // namespace conceptminer
