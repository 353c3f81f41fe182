#pragma once

#include "zsspec/spectrum.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace zs {

inline constexpr int kSchemaVersion = 1;

/// {"schema":1, "method", "params", "all_k", "discrete_k", "residuals"}.
/// Complex numbers are [re, im] pairs.
nlohmann::json spectrum_to_json(const SpectrumResult &result);

/// One eigenvalue per row: "re,im,discrete,residual" (residual blank for
/// non-discrete rows).
void write_spectrum_csv(const SpectrumResult &result, std::ostream &out);

/// Columns x, re_psi1, im_psi1, re_psi2, im_psi2.
void write_eigenfunction_csv(const Eigenfunction &ef, std::ostream &out);

/// Columns a, n, error, status.
void write_convergence_csv(const ConvergenceRecord &record, std::ostream &out);
nlohmann::json convergence_to_json(const ConvergenceRecord &record);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path &path, const std::string &contents);

/// Shortest round-trip decimal form of a double ("inf"/"-inf"/"nan" for specials).
std::string format_double(double v);

} // namespace zs
