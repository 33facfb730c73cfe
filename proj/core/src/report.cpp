#include "hypk/report.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "hypk/error.hpp"
#include "json.hpp"

namespace hypk::report {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view text) {
  const std::string s(text);
  require(!s.empty(), "empty numeric field");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  require(end == s.c_str() + s.size(), "malformed number '" + s + "'");
  return v;
}

std::string format_point(std::span<const double> coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ';';
    out += format_double(coords[i]);
  }
  return out;
}

std::vector<double> parse_point(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(';', start);
    out.push_back(parse_double(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  return out;
}

std::vector<std::vector<std::string>> csv_parse(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;
  auto end_record = [&] {
    rec.push_back(std::move(field));
    field.clear();
    records.push_back(std::move(rec));
    rec.clear();
    field_started = false;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      rec.push_back(std::move(field));
      field.clear();
      field_started = true;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      end_record();
      ++i;
    } else if (c == '\n') {
      end_record();
    } else {
      field += c;
      field_started = true;
    }
    ++i;
  }
  require(!quoted, "unterminated quoted CSV field");
  if (field_started || !rec.empty()) end_record();
  return records;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string kernel_csv(const std::vector<KernelRow>& rows) {
  std::string out(kKernelHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += csv_join({format_point(r.x), r.y, format_double(r.mu), format_double(r.lambda),
                     format_double(r.value), format_double(r.std_error),
                     std::to_string(r.n_paths), std::to_string(r.seed)});
    out += '\n';
  }
  return out;
}

std::vector<KernelRow> parse_kernel_csv(std::string_view text) {
  const auto recs = csv_parse(text);
  require(!recs.empty() && csv_join(recs.front()) == kKernelHeader, "unexpected kernel CSV header");
  std::vector<KernelRow> rows;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& f = recs[i];
    require(f.size() == 8, "kernel CSV row " + std::to_string(i) + " has wrong field count");
    KernelRow r;
    r.x = parse_point(f[0]);
    r.y = f[1];
    r.mu = parse_double(f[2]);
    r.lambda = parse_double(f[3]);
    r.value = parse_double(f[4]);
    r.std_error = parse_double(f[5]);
    r.n_paths = std::stoll(f[6]);
    r.seed = std::stoull(f[7]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string bound_csv(const bounds::BoundReport& rep) {
  auto header = rep.input_names;
  for (const char* s : {"measured", "bound_expr", "ratio", "note"}) header.emplace_back(s);
  std::string out = csv_join(header) + '\n';
  for (const auto& row : rep.points) {
    require(row.inputs.size() == rep.input_names.size(), "bound row arity mismatch");
    std::vector<std::string> f;
    for (double v : row.inputs) f.push_back(format_double(v));
    f.push_back(format_double(row.measured));
    f.push_back(format_double(row.bound_expr));
    f.push_back(format_double(row.ratio));
    f.push_back(row.note);
    out += csv_join(f) + '\n';
  }
  return out;
}

bounds::BoundReport parse_bound_csv(std::string_view text) {
  const auto recs = csv_parse(text);
  require(!recs.empty() && recs.front().size() >= 4, "bound CSV lacks a header");
  const auto& h = recs.front();
  const std::size_t m = h.size() - 4;
  require(h[m] == "measured" && h[m + 1] == "bound_expr" && h[m + 2] == "ratio" &&
              h[m + 3] == "note",
          "unexpected bound CSV header");
  bounds::BoundReport rep;
  rep.input_names.assign(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(m));
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& f = recs[i];
    require(f.size() == h.size(), "bound CSV row " + std::to_string(i) + " has wrong field count");
    bounds::BoundRow row;
    for (std::size_t j = 0; j < m; ++j) row.inputs.push_back(parse_double(f[j]));
    row.measured = parse_double(f[m]);
    row.bound_expr = parse_double(f[m + 1]);
    row.ratio = parse_double(f[m + 2]);
    row.note = f[m + 3];
    rep.points.push_back(std::move(row));
  }
  rep.finalize();
  return rep;
}

std::string bound_summary_json(const bounds::BoundReport& rep, std::string_view label) {
  nlohmann::ordered_json j;
  j["label"] = std::string(label);
  j["rows"] = rep.points.size();
  j["active_rows"] = rep.active_rows();
  j["sup_ratio"] = rep.sup_ratio;
  j["inf_ratio"] = rep.inf_ratio;
  j["refinement_delta"] = rep.refinement_delta;
  return j.dump(2) + '\n';
}

}  // namespace hypk::report
