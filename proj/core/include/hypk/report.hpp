#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypk/bounds.hpp"
#include "hypk/geometry.hpp"

namespace hypk::report {

/// Shortest text that reads back to the same double ("%.17g"); inf and nan as "inf"/"nan".
std::string format_double(double v);
/// Inverse of format_double. Throws ValidationError on malformed text.
double parse_double(std::string_view text);

/// Coordinates joined by ';', each in format_double form.
std::string format_point(std::span<const double> coords);
std::vector<double> parse_point(std::string_view text);

/// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are quoted and
/// embedded quotes doubled.
std::string csv_escape(std::string_view field);
std::string csv_join(const std::vector<std::string>& fields);
/// Parses a whole document into records. Line endings may be LF or CRLF.
std::vector<std::vector<std::string>> csv_parse(std::string_view text);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

struct KernelRow {
  std::vector<double> x;
  /// Target point for Green rows; face region label for Poisson rows.
  std::string y;
  double mu = 0.0;
  double lambda = 0.0;
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n_paths = 0;
  std::uint64_t seed = 0;

  bool operator==(const KernelRow&) const = default;
};

inline constexpr std::string_view kKernelHeader = "x,y,mu,lambda,value,stderr,n_paths,seed";

std::string kernel_csv(const std::vector<KernelRow>& rows);
std::vector<KernelRow> parse_kernel_csv(std::string_view text);

/// Columns: the report's input names, then measured, bound_expr, ratio, note.
std::string bound_csv(const bounds::BoundReport& rep);
/// Restores input names and rows, then recomputes sup/inf. refinement_delta is carried
/// by the JSON summary, not the CSV.
bounds::BoundReport parse_bound_csv(std::string_view text);

/// JSON object with sup_ratio, inf_ratio, refinement_delta, row counts and `label`.
std::string bound_summary_json(const bounds::BoundReport& rep, std::string_view label);

}  // namespace hypk::report
