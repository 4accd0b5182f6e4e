#pragma once

#include "conceptminer/conceptminer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace conceptminer::cli {

enum ExitCode : int { ok = 0, input_error = 2, guard_violation = 3, subset_violation = 4 };

inline constexpr std::string_view metrics_header = "dataset,algorithm,min_sup,min_conf,runtime_ms,n_itemsets,n_rules";

struct RunMetrics {
    std::string dataset;
    std::string algorithm;
    double min_sup = 0;
    double min_conf = 0;
    double runtime_ms = 0;
    std::size_t n_itemsets = 0;
    std::size_t n_rules = 0;

    std::string csv_row() const {
        char ms[64];
        std::snprintf(ms, sizeof ms, "%.3f", runtime_ms);
        std::ostringstream out;
        out << dataset << ',' << algorithm << ',' << format_fixed6(min_sup) << ',' << format_fixed6(min_conf) << ','
            << ms << ',' << n_itemsets << ',' << n_rules;
        return out.str();
    }
};

struct RunOutcome {
    std::vector<AssociationRule> rules;
    std::optional<Coverage> coverage;
    RunMetrics metrics;
};

/// Runs one miner; the clock covers mining only, not parsing or output.
inline RunOutcome run_algorithm(const FormalContext& ctx, const std::string& dataset, const std::string& algo,
                                const MiningParams& params, const RelevanceConfig& cfg) {
    RunOutcome r;
    r.metrics = {dataset, algo, params.min_sup, params.min_conf, 0, 0, 0};
    const auto start = std::chrono::steady_clock::now();
    if (algo == "sfc2a") {
        r.coverage = sfc2a(ctx, cfg);
        r.rules = rules_from_coverage(ctx, *r.coverage, params);
        r.metrics.n_itemsets = itemsets_of(ctx, *r.coverage).size();
    } else {
        const auto frequent = apriori_frequent(ctx, params.min_sup);
        r.rules = apriori_rules(ctx, params);
        r.metrics.n_itemsets = frequent.size();
    }
    const auto stop = std::chrono::steady_clock::now();
    r.metrics.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    r.metrics.n_rules = r.rules.size();
    return r;
}

inline InputFormat format_for(const std::string& name, const std::string& path) {
    std::string f = name;
    if (f.empty()) {
        auto ext = std::filesystem::path(path).extension().string();
        f = ext == ".csv" ? "csv" : ext == ".cxt" ? "cxt" : "fimi";
    }
    if (f == "fimi") return InputFormat::fimi;
    if (f == "csv") return InputFormat::csv;
    if (f == "cxt") return InputFormat::cxt;
    throw ParseError("unknown format '" + f + "'");
}

inline std::string dataset_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

/// Enumeration guard: CONCEPTMINER_GUARD_PROPS when set, else the default.
inline std::size_t enumeration_guard() {
    const char* env = std::getenv("CONCEPTMINER_GUARD_PROPS");
    if (!env || !*env) return default_enumeration_guard;
    auto v = detail::to_index(env);
    if (!v) throw ParseError(std::string("CONCEPTMINER_GUARD_PROPS is not a count: '") + env + "'");
    return *v;
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

struct BenchEntry {
    std::string path;
    std::string format;
    double min_sup = 0;
    double min_conf = 0;
};

/// Manifest: CSV with header `path,format,min_sup,min_conf`; '#' lines and
/// blank lines are skipped; relative paths resolve against the manifest.
inline std::vector<BenchEntry> parse_manifest(const std::string& manifest_path) {
    const auto text = read_file(manifest_path);
    const auto base = std::filesystem::path(manifest_path).parent_path();
    std::vector<BenchEntry> out;
    bool header_seen = false;
    auto lines = detail::split_lines(text);
    for (std::size_t l = 0; l < lines.size(); ++l) {
        auto line = detail::trim(lines[l]);
        if (line.empty() || line.front() == '#') continue;
        auto cells = detail::split(line, ',');
        if (!header_seen) {
            if (cells != std::vector<std::string_view>{"path", "format", "min_sup", "min_conf"})
                throw ParseError("manifest header must be 'path,format,min_sup,min_conf'", l + 1);
            header_seen = true;
            continue;
        }
        if (cells.size() != 4) throw ParseError("manifest row needs 4 cells", l + 1);
        BenchEntry e;
        const std::filesystem::path p{std::string(cells[0])};
        e.path = (p.is_relative() ? base / p : p).string();
        e.format = std::string(cells[1]);
        try {
            std::size_t used = 0;
            e.min_sup = std::stod(std::string(cells[2]), &used);
            if (used != cells[2].size()) throw std::invalid_argument("trailing");
            e.min_conf = std::stod(std::string(cells[3]), &used);
            if (used != cells[3].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("bad threshold in manifest", l + 1);
        }
        if (!(e.min_sup >= 0 && e.min_sup <= 1 && e.min_conf >= 0 && e.min_conf <= 1))
            throw ParseError("manifest thresholds must lie in [0,1]", l + 1);
        format_for(e.format, e.path);
        out.push_back(std::move(e));
    }
    if (!header_seen) throw ParseError("manifest is empty");
    return out;
}

/// Entry point shared by the executable and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Association rule mining by optimal formal-concept coverage"};
    app.require_subcommand(1);

    std::string input, format, algo, rules_out, coverage_out, relevance = "def10", manifest, bench_out;
    double min_sup = 0.35, min_conf = 0.75;
    bool dot = false, force = false;
    int repeat = 1;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", input, "Dataset path")->required();
        sub->add_option("--format", format, "fimi|csv|cxt (default: by extension)")
            ->check(CLI::IsMember({"fimi", "csv", "cxt"}));
    };
    auto add_thresholds = [&](CLI::App* sub) {
        sub->add_option("--min-sup", min_sup, "Minimum support fraction")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--min-conf", min_conf, "Minimum confidence")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--relevance", relevance, "Pseudo-concept relevance: def10|def10conf")
            ->check(CLI::IsMember({"def10", "def10conf"}));
    };

    auto* mine = app.add_subcommand("mine", "Mine rules with one algorithm");
    add_input(mine);
    add_thresholds(mine);
    mine->add_option("--algo", algo, "sfc2a|apriori")->required()->check(CLI::IsMember({"sfc2a", "apriori"}));
    mine->add_option("--out", rules_out, "Rule TSV output path");
    mine->add_option("--dump-coverage", coverage_out, "Coverage dump path (sfc2a only)");

    auto* compare = app.add_subcommand("compare", "Run both algorithms and diff their rules");
    add_input(compare);
    add_thresholds(compare);

    auto* concepts = app.add_subcommand("concepts", "List all formal concepts");
    add_input(concepts);
    concepts->add_flag("--dot", dot, "Emit the Hasse diagram as DOT");
    concepts->add_flag("--force", force, "Ignore the enumeration guard");

    auto* bench = app.add_subcommand("bench", "Run a manifest of datasets through both algorithms");
    bench->add_option("--manifest", manifest, "Manifest CSV")->required();
    bench->add_option("--out", bench_out, "Append metrics rows to this CSV");
    bench->add_option("--repeat", repeat, "Runs per entry; the median runtime is reported")
        ->check(CLI::PositiveNumber);
    bench->add_option("--relevance", relevance, "Pseudo-concept relevance: def10|def10conf")
        ->check(CLI::IsMember({"def10", "def10conf"}));

    std::vector<const char*> argv{"conceptminer"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    RelevanceConfig cfg;
    cfg.pcf_formula = relevance == "def10conf" ? PcfFormula::def10_conf : PcfFormula::def10;
    const MiningParams params{min_sup, min_conf};

    try {
        if (*mine) {
            if (!coverage_out.empty() && algo != "sfc2a") {
                err << "--dump-coverage requires --algo sfc2a\n";
                return input_error;
            }
            const auto ctx = load_context(input, format_for(format, input));
            auto r = run_algorithm(ctx, dataset_name(input), algo, params, cfg);
            if (!rules_out.empty()) write_text(rules_out, format_rules_tsv(ctx, r.rules, algo));
            if (!coverage_out.empty()) write_text(coverage_out, serialize_coverage(ctx, *r.coverage));
            out << metrics_header << '\n' << r.metrics.csv_row() << '\n';
            return ok;
        }
        if (*compare) {
            const auto ctx = load_context(input, format_for(format, input));
            const auto name = dataset_name(input);
            auto s = run_algorithm(ctx, name, "sfc2a", params, cfg);
            auto a = run_algorithm(ctx, name, "apriori", params, cfg);
            out << metrics_header << '\n' << s.metrics.csv_row() << '\n' << a.metrics.csv_row() << '\n';
            const auto d = diff_rules(a.rules, s.rules);
            out << "\nonly_in_apriori,only_in_sfc2a,common\n"
                << d.only_left.size() << ',' << d.only_right.size() << ',' << d.common << '\n';
            if (!d.only_right.empty() && params.min_sup > 0) {
                for (const auto& r : d.only_right)
                    err << "rule-subset violation: " << join_items(ctx, r.antecedent) << " -> "
                        << join_items(ctx, r.consequent) << '\n';
                return subset_violation;
            }
            return ok;
        }
        if (*concepts) {
            const auto ctx = load_context(input, format_for(format, input));
            const auto guard = force ? ctx.n_properties() : enumeration_guard();
            const auto lattice = enumerate_concepts(ctx, guard);
            if (dot) {
                out << export_dot(lattice);
            } else {
                for (const auto& c : lattice) out << format_concept(ctx, c) << '\n';
            }
            return ok;
        }
        if (*bench) {
            const auto entries = parse_manifest(manifest);
            std::vector<std::string> rows;
            for (const auto& e : entries) {
                const auto ctx = load_context(e.path, format_for(e.format, e.path));
                const MiningParams p{e.min_sup, e.min_conf};
                for (const std::string alg : {"sfc2a", "apriori"}) {
                    std::vector<double> times;
                    RunOutcome last;
                    for (int k = 0; k < repeat; ++k) {
                        last = run_algorithm(ctx, dataset_name(e.path), alg, p, cfg);
                        times.push_back(last.metrics.runtime_ms);
                    }
                    last.metrics.runtime_ms = median(times);
                    rows.push_back(last.metrics.csv_row());
                }
            }
            out << metrics_header << '\n';
            for (const auto& r : rows) out << r << '\n';
            if (!bench_out.empty()) {
                const bool fresh = !std::filesystem::exists(bench_out) || std::filesystem::file_size(bench_out) == 0;
                std::ofstream f(bench_out, std::ios::app);
                if (!f) throw ParseError("cannot write '" + bench_out + "'");
                if (fresh) f << metrics_header << '\n';
                for (const auto& r : rows) f << r << '\n';
            }
            return ok;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << '\n';
        return guard_violation;
    } catch (const ContractError& e) {
        err << "invalid argument: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

}  // namespace conceptminer::cli
