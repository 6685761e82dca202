#pragma once

// The shipped catalogue: a manifest (catalog.txt) plus one HEXCOL file per
// entry. Manifest lines are
//
//   <name> <file> <provenance...>
//
// where name is the bracket array, optionally followed by ".I", ".II", ...
// Blank lines and lines starting with '#' are ignored.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hexcr/arrays.hpp"
#include "hexcr/coloring.hpp"

namespace hexcr {

struct CatalogEntry {
    std::string name;
    std::string variant;  // "I", "II", "shift", ... or empty
    std::filesystem::path file;
    std::string provenance;
    IntersectionArray array;
    PeriodicColoring coloring;
};

/// Compile-time default data directory.
[[nodiscard]] std::filesystem::path default_data_dir();

/// Reads the manifest and every file it names. Throws std::runtime_error
/// on a malformed manifest, duplicate names, or an unreadable file.
[[nodiscard]] std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);

/// Entry names, sorted.
[[nodiscard]] std::vector<std::string> list_catalog(const std::filesystem::path& dir);

struct EntryReport {
    std::string name;
    bool ok = false;
    std::string detail;  // failure reason with witness, or the verified array
};

struct CatalogReport {
    std::vector<EntryReport> entries;      // one per entry, manifest order
    std::vector<EntryReport> comparisons;  // one per pair of entries sharing an array
    [[nodiscard]] bool ok() const;
};

/// Per entry: the name's array, the file's claimed array and the measured
/// parameter matrix all agree, and the colouring is distance-regular.
/// Entries sharing an array are pairwise nonequivalent.
[[nodiscard]] CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries, int threads = 1);

std::string format_catalog_report(const CatalogReport& report);

}  // namespace hexcr
