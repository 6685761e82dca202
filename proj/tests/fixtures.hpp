#pragma once

#include <stdexcept>
#include <string>

#include "hexcr/catalog.hpp"

inline const std::vector<hexcr::CatalogEntry>& shipped_catalog() {
    static const std::vector<hexcr::CatalogEntry> entries = hexcr::load_catalog(hexcr::default_data_dir());
    return entries;
}

inline const hexcr::PeriodicColoring& shipped(const std::string& name) {
    for (const auto& e : shipped_catalog())
        if (e.name == name) return e.coloring;
    throw std::out_of_range("no catalog entry " + name);
}
