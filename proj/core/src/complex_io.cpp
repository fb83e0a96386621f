#include "hodgespec/complex_io.hpp"

#include "hodgespec/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace hodgespec {

LabeledComplex with_default_labels(SimplicialComplex x) {
    LabeledComplex lx;
    lx.labels.reserve(static_cast<std::size_t>(x.vertex_id_bound()));
    for (int v = 0; v < x.vertex_id_bound(); ++v) lx.labels.push_back(std::to_string(v));
    lx.complex = std::move(x);
    return lx;
}

LabeledComplex read_complex(std::istream& in, const std::string& source_name, bool verbatim) {
    std::unordered_map<std::string, int> id_of;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> faces;

    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream tokens(line);
        std::vector<int> face;
        std::string token;
        while (tokens >> token) {
            auto [it, inserted] = id_of.try_emplace(token, static_cast<int>(labels.size()));
            if (inserted) labels.push_back(token);
            face.push_back(it->second);
        }
        if (face.empty()) continue; // whitespace-only line
        std::vector<int> sorted(face);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            std::ostringstream msg;
            msg << source_name << ":" << line_number << ": face lists a repeated label";
            throw ParseError(msg.str());
        }
        faces.push_back(std::move(face));
    }

    LabeledComplex lx;
    lx.labels = std::move(labels);
    const int n = static_cast<int>(lx.labels.size());
    lx.complex = verbatim ? SimplicialComplex::from_faces_unvalidated(n, faces)
                          : SimplicialComplex::from_facets(n, faces);
    return lx;
}

LabeledComplex read_complex(std::istream& in, const std::string& source_name) {
    return read_complex(in, source_name, /*verbatim=*/false);
}

LabeledComplex read_complex_file(const std::filesystem::path& path, bool verbatim) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open complex file: " + path.string());
    }
    return read_complex(in, path.string(), verbatim);
}

LabeledComplex read_complex_file(const std::filesystem::path& path) {
    return read_complex_file(path, /*verbatim=*/false);
}

void write_complex(std::ostream& out, const LabeledComplex& lx) {
    for (const Face& facet : lx.complex.facets()) {
        for (std::size_t i = 0; i < facet.size(); ++i) {
            if (i > 0) out << ' ';
            out << lx.label_of(facet[static_cast<std::size_t>(i)]);
        }
        out << '\n';
    }
}

} // namespace hodgespec
