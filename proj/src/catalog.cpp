#include "hexcr/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hexcr/hexcol.hpp"

namespace hexcr {

std::filesystem::path default_data_dir() {
#ifdef HEXCR_DATA_DIR
    return HEXCR_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

std::pair<std::string, std::string> split_name(const std::string& name) {
    const auto close = name.find(']');
    if (name.empty() || name[0] != '[' || close == std::string::npos) {
        throw std::runtime_error("catalog name '" + name + "' does not start with an array");
    }
    std::string variant;
    if (close + 1 < name.size()) {
        if (name[close + 1] != '.' || close + 2 >= name.size()) {
            throw std::runtime_error("catalog name '" + name + "' has a malformed variant tag");
        }
        variant = name.substr(close + 2);
    }
    return {name.substr(0, close + 1), variant};
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
    const auto manifest = dir / "catalog.txt";
    std::ifstream in(manifest);
    if (!in) throw std::runtime_error("cannot open " + manifest.string());

    std::vector<CatalogEntry> out;
    std::set<std::string> names;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string name, file, provenance;
        if (!(fields >> name >> file)) {
            throw std::runtime_error(manifest.string() + ":" + std::to_string(lineno) + ": expected <name> <file>");
        }
        std::getline(fields >> std::ws, provenance);
        if (!names.insert(name).second) throw std::runtime_error("duplicate catalog name " + name);
        auto [array_text, variant] = split_name(name);
        const IntersectionArray array = parse_array(array_text);
        HexcolFile f = load_hexcol(dir / file);
        if (f.array != array) {
            throw std::runtime_error(file + " claims " + format_array(f.array) + " but is listed as " + name);
        }
        out.push_back({name, variant, file, provenance, array, std::move(f.coloring)});
    }
    return out;
}

std::vector<std::string> list_catalog(const std::filesystem::path& dir) {
    std::vector<std::string> names;
    for (const auto& e : load_catalog(dir)) names.push_back(e.name);
    std::sort(names.begin(), names.end());
    return names;
}

bool CatalogReport::ok() const {
    auto good = [](const EntryReport& r) { return r.ok; };
    return std::all_of(entries.begin(), entries.end(), good) && std::all_of(comparisons.begin(), comparisons.end(), good);
}

namespace {

EntryReport check_entry(const CatalogEntry& e) {
    EntryReport r{e.name, false, {}};
    const MatrixOrWitness m = parameter_matrix(e.coloring);
    if (const auto* w = std::get_if<NotPerfect>(&m)) {
        r.detail = "not perfect: " + describe(*w, e.coloring.colors());
        return r;
    }
    const auto& matrix = std::get<ParameterMatrix>(m);
    if (matrix != e.array.matrix()) {
        r.detail = "parameter matrix " + to_string(matrix) + " differs from " + format_array(e.array);
        return r;
    }
    if (!is_distance_regular(e.coloring)) {
        r.detail = "colour classes are not the distance layers of class 0";
        return r;
    }
    r.ok = true;
    r.detail = format_array(e.array);
    return r;
}

}  // namespace

CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries, int threads) {
    CatalogReport report;
    report.entries.resize(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) report.entries[i] = check_entry(entries[i]);
    };
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    std::map<std::string, std::vector<const CatalogEntry*>> variants;
    for (const auto& e : entries) variants[format_array(e.array)].push_back(&e);
    for (const auto& [array, group] : variants) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                EntryReport r{group[i]->name + " vs " + group[j]->name, false, {}};
                if (auto phi = find_equivalence(group[i]->coloring, group[j]->coloring)) {
                    r.detail = "equivalent via target " + to_string(phi->target) + " perm " + to_string(phi->perm);
                } else {
                    r.ok = true;
                    r.detail = "nonequivalent";
                }
                report.comparisons.push_back(std::move(r));
            }
        }
    }
    return report;
}

std::string format_catalog_report(const CatalogReport& report) {
    std::string out;
    int failed = 0;
    for (const auto& r : report.entries) {
        out += (r.ok ? "ok   " : "FAIL ") + r.name + (r.ok ? "" : ": " + r.detail) + "\n";
        failed += !r.ok;
    }
    for (const auto& r : report.comparisons) {
        out += (r.ok ? "ok   " : "FAIL ") + r.name + ": " + r.detail + "\n";
        failed += !r.ok;
    }
    out += "# entries " + std::to_string(report.entries.size()) + ", pairs " +
           std::to_string(report.comparisons.size()) + ", failures " + std::to_string(failed) + "\n";
    return out;
}

}  // namespace hexcr
