// Regenerates data/: searches tori for representatives of every catalogue
// entry, writes one HEXCOL file each plus the manifest. Deterministic.
//
//   hexcr_gencat OUTDIR

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hexcr/arrays.hpp"
#include "hexcr/coloring.hpp"
#include "hexcr/hexcol.hpp"
#include "hexcr/search.hpp"

namespace fs = std::filesystem;
using namespace hexcr;

namespace {

constexpr int kCells = 256;

struct Want {
    std::string array;
    std::vector<std::string> variants;  // "" for a single entry
    std::string family;
};

const std::vector<Want> kWants = {
    {"[03-30]", {""}, "two colours"},
    {"[03-12]", {""}, "two colours"},
    {"[12-21]", {"I", "II"}, "two colours"},
    {"[12-12]", {""}, "two colours"},
    {"[21-12]", {"I", "II"}, "two colours"},
    {"[12-111-12]", {""}, "series 12-111-...-111-12"},
    {"[12-111-111-12]", {""}, "series 12-111-...-111-12"},
    {"[12-111-111-111-12]", {""}, "series 12-111-...-111-12"},
    {"[12-111-21]", {"I", "II"}, "series 12-111-...-111-21"},
    {"[12-111-111-21]", {""}, "series 12-111-...-111-21"},
    {"[12-111-111-111-21]", {""}, "series 12-111-...-111-21"},
    {"[21-111-12]", {""}, "series 21-111-...-111-12"},
    {"[21-111-111-12]", {""}, "series 21-111-...-111-12"},
    {"[21-111-111-111-12]", {""}, "series 21-111-...-111-12"},
    {"[12-201-12]", {"I", "II"}, "series 12-201-102-...-201-12"},
    {"[12-201-102-201-12]", {""}, "series 12-201-102-...-201-12"},
    {"[12-201-102-21]", {""}, "series 12-201-102-...-102-21"},
    {"[12-201-102-201-102-21]", {""}, "series 12-201-102-...-102-21"},
    {"[21-102-201-12]", {""}, "series 21-102-201-...-201-12"},
    {"[21-102-201-102-201-12]", {""}, "series 21-102-201-...-201-12"},
    {"[03-102-30]", {""}, "sporadic"},
    {"[03-111-12]", {"I", "II"}, "sporadic"},
    {"[12-102-12]", {""}, "sporadic"},
    {"[21-102-12]", {""}, "sporadic"},
    {"[03-102-102-30]", {""}, "sporadic"},
    {"[03-111-111-30]", {""}, "sporadic"},
    {"[12-102-111-21]", {""}, "sporadic"},
    {"[03-102-102-201-30]", {""}, "sporadic"},
    {"[03-102-111-201-12]", {""}, "sporadic"},
};

// Faces are the 2x3 blocks {r, r+1} x {c, c+1, c+2} with r + c even.
bool zero_three_faces(const PeriodicColoring& c) {
    for (int r = 0; r < c.height(); ++r) {
        for (int col = (r % 2); col < c.width(); col += 2) {
            bool zero = false, three = false;
            for (int dr = 0; dr < 2; ++dr)
                for (int dc = 0; dc < 3; ++dc) {
                    const int v = c.at({r + dr, col + dc});
                    zero |= v == 0;
                    three |= v == 3;
                }
            if (zero != three) return false;
        }
    }
    return true;
}

std::string stem(const std::string& name) {
    std::string s;
    for (char ch : name)
        if (ch != '[' && ch != ']') s += ch;
    return s + ".hexcol";
}

struct Out {
    std::string name;
    IntersectionArray array;
    PeriodicColoring coloring;
    std::string provenance;
};

// First orientation and pattern whose coset shift is valid and gives a
// nonequivalent colouring.
bool shifted_variant(const PeriodicColoring& base, PeriodicColoring& oriented, PeriodicColoring& shifted,
                     std::string& pattern) {
    for (const DirectionPerm& perm : all_direction_perms()) {
        const PeriodicColoring c = transform(base, Automorphism{kOrigin, perm});
        for (int len = 2; len <= 4; ++len) {
            for (int bits = 1; bits < (1 << len) - 1; ++bits) {
                std::string p;
                for (int j = 0; j < len; ++j) p += (bits >> j) & 1 ? '1' : '0';
                try {
                    PeriodicColoring s = shift_cosets(c, ShiftSelection::from_pattern(p, c));
                    if (equivalent(s, c)) continue;
                    oriented = c;
                    shifted = std::move(s);
                    pattern = p;
                    return true;
                } catch (const ShiftPreconditionError&) {
                }
            }
        }
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: hexcr_gencat OUTDIR\n";
        return 3;
    }
    const fs::path dir = argv[1];
    fs::create_directories(dir);
    std::vector<Out> outs;

    auto found_on = [](const PeriodicColoring& c) {
        return "torus search " + std::to_string(c.height()) + "x" + std::to_string(c.width());
    };

    for (const Want& w : kWants) {
        const IntersectionArray a = parse_array(w.array);
        const auto found = distinct_colorings(a, kCells, w.variants.size());
        if (found.size() < w.variants.size()) {
            std::cerr << w.array << ": only " << found.size() << " classes found\n";
            return 1;
        }
        for (std::size_t i = 0; i < w.variants.size(); ++i) {
            const std::string name = w.variants[i].empty() ? w.array : w.array + "." + w.variants[i];
            outs.push_back({name, a, found[i], w.family + "; " + found_on(found[i])});
        }
    }

    // Infinite families: a representative plus one coset-shifted variant.
    for (const std::string text : {"[03-12]", "[03-102-201-30]"}) {
        const IntersectionArray a = parse_array(text);
        std::optional<PeriodicColoring> rep;
        if (text == std::string("[03-102-201-30]")) {
            for (const auto& c : distinct_colorings(a, kCells, 64)) {
                if (zero_three_faces(c)) {
                    rep = c;
                    break;
                }
            }
        } else {
            rep = distinct_colorings(a, kCells, 1).at(0);
        }
        if (!rep) {
            std::cerr << text << ": no representative\n";
            return 1;
        }
        PeriodicColoring oriented = *rep, shifted = *rep;
        std::string pattern;
        if (!shifted_variant(*rep, oriented, shifted, pattern)) {
            std::cerr << text << ": no nonequivalent coset shift\n";
            return 1;
        }
        const std::string family = text == std::string("[03-12]") ? "two colours" : "sporadic";
        if (text == std::string("[03-12]")) {
            for (auto& o : outs) {
                if (o.name != text) continue;
                o.coloring = oriented;
                if (oriented != *rep) o.provenance += ", edge labels permuted";
            }
        } else {
            std::string prov = family + "; faces with a 0 also carry a 3; " + found_on(*rep);
            if (oriented != *rep) prov += ", edge labels permuted";
            outs.push_back({text, a, oriented, prov});
        }
        outs.push_back({text + ".shift", a, shifted, family + "; coset shift of " + text + " with pattern " + pattern});
    }

    std::ofstream manifest(dir / "catalog.txt");
    manifest << "# name file provenance\n";
    for (const Out& o : outs) {
        const std::string file = stem(o.name);
        save_hexcol(dir / file, o.array, o.coloring);
        manifest << o.name << " " << file << " " << o.provenance << "\n";
        std::cout << o.name << " " << o.coloring.height() << "x" << o.coloring.width() << "\n";
    }
    return 0;
}
