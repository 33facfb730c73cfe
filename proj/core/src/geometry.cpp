#include "hypk/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hypk/error.hpp"

namespace hypk {

HyperPoint::HyperPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  require(coords_.size() >= 2, "HyperPoint: dimension must be at least 2");
  for (double c : coords_) require(std::isfinite(c), "HyperPoint: non-finite coordinate");
  require(coords_.back() > 0.0, "HyperPoint: last coordinate must be positive");
}

std::string to_string(const HyperPoint& x) {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < x.dim(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", x[i]);
    out += buf;
    out += i + 1 < x.dim() ? ", " : ")";
  }
  return out;
}

double euclidean_distance_squared(const HyperPoint& x, const HyperPoint& y) {
  require(x.dim() == y.dim(), "dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

double euclidean_distance(const HyperPoint& x, const HyperPoint& y) {
  return std::sqrt(euclidean_distance_squared(x, y));
}

double cosh_distance(const HyperPoint& x, const HyperPoint& y) {
  return 1.0 + euclidean_distance_squared(x, y) / (2.0 * x.height() * y.height());
}

double hyperbolic_distance(const HyperPoint& x, const HyperPoint& y) {
  const double z = euclidean_distance_squared(x, y) / (2.0 * x.height() * y.height());
  // arccosh(1 + z) without forming 1 + z.
  return std::log1p(z + std::sqrt(z * (z + 2.0)));
}

HyperPoint shifted_point(const HyperPoint& x, double a) {
  require(a > 0.0, "shifted_point: a must be positive");
  require(x.height() > a, "shifted_point: requires x_n > a");
  std::vector<double> c(x.coords().begin(), x.coords().end());
  c.back() -= a;
  return HyperPoint(std::move(c));
}

double delta(double u, double w) {
  require(u > 0.0, "delta: u must be positive");
  require(w > 0.0 && w < u, "delta: w must lie in (0, u)");
  return std::min(w, u - w);
}

HyperPoint scale_point(const HyperPoint& x, double c) {
  require(c > 0.0, "scale_point: c must be positive");
  std::vector<double> v(x.coords().begin(), x.coords().end());
  for (double& e : v) e *= c;
  return HyperPoint(std::move(v));
}

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::HalfSpace: return "halfspace";
    case DomainKind::Slab: return "slab";
    case DomainKind::Strip: return "strip";
  }
  return "?";
}

std::string to_string(BoundaryFace face) {
  switch (face) {
    case BoundaryFace::SideLow: return "side_low";
    case BoundaryFace::SideHigh: return "side_high";
    case BoundaryFace::Bottom: return "bottom";
  }
  return "?";
}

BoundaryFace parse_face(const std::string& text) {
  if (text == "side_low" || text == "low") return BoundaryFace::SideLow;
  if (text == "side_high" || text == "high") return BoundaryFace::SideHigh;
  if (text == "bottom") return BoundaryFace::Bottom;
  throw ValidationError("unknown boundary face '" + text + "'");
}

DomainSpec DomainSpec::half_space(double a) {
  DomainSpec d{DomainKind::HalfSpace, a, std::numeric_limits<double>::infinity()};
  d.validate();
  return d;
}

DomainSpec DomainSpec::slab(double a, double b) {
  DomainSpec d{DomainKind::Slab, a, b};
  d.validate();
  return d;
}

DomainSpec DomainSpec::strip(double b) {
  DomainSpec d{DomainKind::Strip, 0.0, b};
  d.validate();
  return d;
}

void DomainSpec::validate() const {
  switch (kind) {
    case DomainKind::HalfSpace:
      require(a > 0.0 && std::isfinite(a), "HalfSpace requires a > 0");
      require(std::isinf(b) && b > 0, "HalfSpace requires b = +inf");
      break;
    case DomainKind::Slab:
      require(a > 0.0 && std::isfinite(a), "Slab requires a > 0");
      require(b > 0.0 && std::isfinite(b), "Slab requires 0 < b < inf");
      break;
    case DomainKind::Strip:
      require(a == 0.0, "Strip requires a = 0");
      require(b > 0.0 && std::isfinite(b), "Strip requires 0 < b < inf");
      break;
  }
}

bool DomainSpec::has_face(BoundaryFace face) const {
  if (face == BoundaryFace::Bottom) return true;  // degenerate (x_n = 0) for Strip
  return kind != DomainKind::HalfSpace;
}

std::string to_string(const DomainSpec& dom) {
  std::ostringstream os;
  os.precision(17);
  os << to_string(dom.kind) << "(a=" << dom.a << ", b=" << dom.b << ")";
  return os.str();
}

Location classify(const HyperPoint& x, const DomainSpec& dom, double rel_tol) {
  const double x1 = x[0];
  const double xn = x.height();
  Location out;
  if (dom.bounded_width()) {
    const double tol = rel_tol * dom.b;
    if (x1 < -tol || x1 > dom.b + tol) return {Location::Kind::Outside, std::nullopt};
    if (std::abs(x1) <= tol) out = {Location::Kind::OnFace, BoundaryFace::SideLow};
    else if (std::abs(x1 - dom.b) <= tol) out = {Location::Kind::OnFace, BoundaryFace::SideHigh};
  }
  if (dom.kind != DomainKind::Strip) {
    const double tol = rel_tol * dom.a;
    if (xn < dom.a - tol) return {Location::Kind::Outside, std::nullopt};
    if (!out.face && std::abs(xn - dom.a) <= tol)
      out = {Location::Kind::OnFace, BoundaryFace::Bottom};
  }
  return out;
}

DomainSpec scale_domain(const DomainSpec& dom, double c) {
  require(c > 0.0, "scale_domain: c must be positive");
  DomainSpec out = dom;
  out.a = dom.a * c;
  out.b = dom.b * c;
  return out;
}

}  // namespace hypk
