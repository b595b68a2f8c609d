#pragma once

// On-disk classification store: one JSON-lines file per n plus a manifest.
//
//   <dir>/n<NN>.jsonl   {"index": i, "cycles": "{...}", "fvector": [...], "homology": {...}}
//   <dir>/manifest.json counts and SHA-256 checksums per n

#include <filesystem>
#include <string>
#include <vector>

#include "diffcyc/cycle.hpp"
#include "diffcyc/enumerate.hpp"
#include "diffcyc/homology.hpp"
#include "diffcyc/topology.hpp"

namespace diffcyc {

struct RegistryEntry {
    int index = 0;
    CyclicComplex complex;
    FVector fvector;
    HomologyGroups homology;
};

struct ManifestRow {
    int n = 0;
    std::size_t complexes = 0;
    std::size_t multiplier_classes = 0;
    std::size_t iso_classes = 0;
    std::string file;
    std::string sha256;
};

/// $DIFFCYC_REGISTRY if set, otherwise "./registry".
std::filesystem::path default_registry_path();

std::filesystem::path registry_file(const std::filesystem::path& dir, int n);

/// Writes the complexes of `result` in its (text-sorted) order and updates the manifest.
void store(const std::filesystem::path& dir, const EnumerationResult& result);

bool has_registry(const std::filesystem::path& dir, int n);

/// Throws RegistryError on a missing file, a checksum mismatch or a malformed line.
std::vector<RegistryEntry> load(const std::filesystem::path& dir, int n);

/// Throws RegistryError when the index is out of range.
CyclicComplex registry(const std::filesystem::path& dir, int n, int index);

std::vector<ManifestRow> manifest(const std::filesystem::path& dir);

std::string sha256_hex(const std::string& bytes);

}  // namespace diffcyc
