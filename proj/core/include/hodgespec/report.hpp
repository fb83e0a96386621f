#pragma once

#include "hodgespec/complex_io.hpp"

#include "json.hpp"

#include <iosfwd>

namespace hodgespec {

inline constexpr const char* kReportSchemaVersion = "hodgespec-report/1";

struct AnalyzeOptions {
    int vertex_cap = 24;
    double tol = 1e-8;
    bool skip_invariants = false;
    bool include_diagnostics = false;
    unsigned jobs = 0;
};

/// Full analysis of one complex: summary + regularity, all upper-Laplacian
/// spectra, exact invariants with certificates (unless skipped or over cap,
/// in which case the omission is recorded), every bound whose precondition
/// holds (the others are listed with the failing precondition), and optional
/// proof diagnostics. Returned as the schema-versioned report document.
nlohmann::json analyze(const LabeledComplex& lx, const AnalyzeOptions& opts = {});

/// Renders a report document for humans.
void print_report(std::ostream& out, const nlohmann::json& report);

} // namespace hodgespec
