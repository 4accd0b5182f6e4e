// Writes a FIMI transaction file shaped like the UCI Mushroom data: every
// transaction holds exactly one item per categorical attribute (23 of them,
// 117 items in all), values are skewed toward a per-cluster mode, and a few
// attributes are almost constant. Output is fully determined by --seed.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <vector>

namespace {

struct Attribute {
    const char* name;
    std::uint32_t cardinality;
    double dominance;  // chance of taking the cluster's mode
    bool global_mode;  // same mode in every cluster
};

constexpr Attribute attributes[] = {
    {"class", 2, 1.0, false},
    {"cap-shape", 6, 0.50, false},
    {"cap-surface", 4, 0.45, false},
    {"cap-color", 10, 0.35, false},
    {"bruises", 2, 0.70, false},
    {"odor", 9, 0.75, false},
    {"gill-attachment", 2, 0.97, true},
    {"gill-spacing", 2, 0.84, true},
    {"gill-size", 2, 0.70, false},
    {"gill-color", 12, 0.35, false},
    {"stalk-shape", 2, 0.60, false},
    {"stalk-root", 5, 0.50, false},
    {"stalk-surface-above-ring", 4, 0.65, false},
    {"stalk-surface-below-ring", 4, 0.60, false},
    {"stalk-color-above-ring", 9, 0.55, false},
    {"stalk-color-below-ring", 9, 0.55, false},
    {"veil-type", 1, 1.0, true},
    {"veil-color", 4, 0.97, true},
    {"ring-number", 3, 0.92, true},
    {"ring-type", 5, 0.55, false},
    {"spore-print-color", 9, 0.45, false},
    {"population", 6, 0.45, false},
    {"habitat", 7, 0.40, false},
};

/// splitmix64: portable, so the file is identical on every platform.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate a Mushroom-shaped FIMI dataset"};
    std::size_t rows = 1000;
    std::uint64_t seed = 8124;
    std::uint32_t clusters = 6;
    app.add_option("--rows", rows, "Number of transactions");
    app.add_option("--seed", seed, "Generator seed");
    app.add_option("--clusters", clusters, "Latent clusters per class")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    constexpr std::size_t n_attr = sizeof(attributes) / sizeof(attributes[0]);
    SplitMix modes{seed ^ 0x6d757368ULL};
    // modes[class][cluster][attribute]
    std::vector<std::uint32_t> mode(2 * clusters * n_attr);
    std::vector<std::uint32_t> global(n_attr);
    for (std::size_t a = 0; a < n_attr; ++a) global[a] = modes.below(attributes[a].cardinality);
    for (auto& m : mode) m = 0;
    for (std::uint32_t k = 0; k < 2 * clusters; ++k)
        for (std::size_t a = 0; a < n_attr; ++a)
            mode[k * n_attr + a] = attributes[a].global_mode ? global[a] : modes.below(attributes[a].cardinality);

    SplitMix rng{seed};
    for (std::size_t r = 0; r < rows; ++r) {
        const std::uint32_t cls = rng.unit() < 0.52 ? 0 : 1;
        const std::uint32_t cluster = cls * clusters + rng.below(clusters);
        std::uint32_t base = 1;
        for (std::size_t a = 0; a < n_attr; ++a) {
            const auto& attr = attributes[a];
            std::uint32_t v;
            if (a == 0) {
                v = cls;
            } else if (attr.cardinality == 1 || rng.unit() < attr.dominance) {
                v = mode[cluster * n_attr + a];
            } else {
                v = rng.below(attr.cardinality - 1);
                if (v >= mode[cluster * n_attr + a]) ++v;
            }
            std::cout << (a ? " " : "") << base + v;
            base += attr.cardinality;
        }
        std::cout << '\n';
    }
    return 0;
}
