#pragma once

#include "hodgespec/complex_io.hpp"
#include "hodgespec/generators.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hodgespec {

/// One catalog line: a generator spec, a face-list file (closure taken), or a
/// verbatim face-list file (no closure; lets the verifier catch broken lists).
struct CatalogEntry {
    std::string display_name;
    std::variant<GeneratorSpec, std::filesystem::path> source;
    bool verbatim = false;
};

/// Catalog file format: one entry per line; '#' comments and blank lines are
/// skipped; "file <path>" and "rawfile <path>" load face lists (relative to
/// the catalog file), anything else is parsed as a generator spec.
std::vector<CatalogEntry> parse_catalog_file(const std::filesystem::path& path);

/// Built-in default: complete complexes (d <= 3, n <= 8), cross-polytope
/// boundaries (d <= 3), a family of complete multipartite graphs, and 20
/// seeded random pure 2-complexes.
std::vector<CatalogEntry> default_catalog();

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail; // set when failed (or informative)
};

struct EntryResult {
    std::string name;
    bool built = false;
    bool skipped = false;        // entry not checked (empty complex / over cap notice)
    std::string skip_reason;
    std::vector<CheckResult> checks;
    std::map<std::string, double> margins;

    bool ok() const;
};

struct CatalogRunOptions {
    int vertex_cap = 24;
    double tol = 1e-8;
    unsigned jobs = 0;
    std::optional<std::uint64_t> seed_override;
};

struct CatalogResult {
    std::vector<EntryResult> entries;
    bool all_ok = false;
};

/// Runs every applicable structural, algebraic, spectral, oracle, bound, and
/// diagnostic check on each entry. Entries over the vertex cap keep their
/// spectral/algebraic checks and skip the oracle-backed ones with a warning.
CatalogResult run_catalog(const std::vector<CatalogEntry>& entries,
                          const CatalogRunOptions& opts = {});

/// Per-entry margin table plus violation details.
void print_catalog_summary(std::ostream& out, const CatalogResult& result);

} // namespace hodgespec
