#pragma once

#include "hodgespec/simplicial_complex.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace hodgespec {

/// A complex together with the external string labels of its vertex ids.
/// Ids are assigned densely in order of first appearance in the input.
struct LabeledComplex {
    SimplicialComplex complex;
    std::vector<std::string> labels; // id -> label

    const std::string& label_of(int v) const { return labels[static_cast<std::size_t>(v)]; }
};

/// Attaches the default labels "0", "1", ... to a generated complex.
LabeledComplex with_default_labels(SimplicialComplex x);

/// Reads the face-list format: one face per line as whitespace-separated
/// labels, '#' starts a comment line, blank lines are skipped; the result is
/// the downward closure of the listed faces. A repeated label inside one face
/// is a ParseError (with line number). An input with no faces yields the
/// empty complex.
LabeledComplex read_complex(std::istream& in, const std::string& source_name = "<input>");
LabeledComplex read_complex_file(const std::filesystem::path& path);

/// Same format, but the listed faces are taken verbatim (no closure), for
/// integrity-checking catalogs.
LabeledComplex read_complex(std::istream& in, const std::string& source_name, bool verbatim);
LabeledComplex read_complex_file(const std::filesystem::path& path, bool verbatim);

/// Writes the facets of the complex, one per line, using its labels.
/// Reading the output back yields the same complex up to the id relabeling
/// returned by read_complex.
void write_complex(std::ostream& out, const LabeledComplex& lx);

} // namespace hodgespec
