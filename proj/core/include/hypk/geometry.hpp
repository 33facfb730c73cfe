#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypk {

/// A point of the upper half-space H^n = {x in R^n : x_n > 0}, n >= 2.
class HyperPoint {
 public:
  explicit HyperPoint(std::vector<double> coords);
  HyperPoint(std::initializer_list<double> coords)
      : HyperPoint(std::vector<double>(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  /// Last coordinate x_n.
  double height() const { return coords_.back(); }
  std::span<const double> coords() const { return coords_; }

  bool operator==(const HyperPoint&) const = default;

 private:
  std::vector<double> coords_;
};

std::string to_string(const HyperPoint& x);

double euclidean_distance(const HyperPoint& x, const HyperPoint& y);
double euclidean_distance_squared(const HyperPoint& x, const HyperPoint& y);

/// cosh of the hyperbolic distance, 1 + |x-y|^2 / (2 x_n y_n).
double cosh_distance(const HyperPoint& x, const HyperPoint& y);

double hyperbolic_distance(const HyperPoint& x, const HyperPoint& y);

/// x with its last coordinate lowered by a; requires x_n > a.
HyperPoint shifted_point(const HyperPoint& x, double a);

/// Distance from w to the complement of (0, u): min(w, u - w).
double delta(double u, double w);

HyperPoint scale_point(const HyperPoint& x, double c);

enum class DomainKind { HalfSpace, Slab, Strip };

enum class BoundaryFace { SideLow, SideHigh, Bottom };

std::string to_string(DomainKind kind);
std::string to_string(BoundaryFace face);
BoundaryFace parse_face(const std::string& text);

/// D_a = {x_n > a}, S_{a,b} = {x_n > a, 0 < x_1 < b}, S_{0,b} = {0 < x_1 < b}.
struct DomainSpec {
  DomainKind kind = DomainKind::Slab;
  double a = 1.0;
  double b = 1.0;

  static DomainSpec half_space(double a);
  static DomainSpec slab(double a, double b);
  static DomainSpec strip(double b);

  void validate() const;
  bool has_face(BoundaryFace face) const;
  bool bounded_width() const { return kind != DomainKind::HalfSpace; }
  bool operator==(const DomainSpec&) const = default;
};

std::string to_string(const DomainSpec& dom);

struct Location {
  enum class Kind { Interior, OnFace, Outside };
  Kind kind = Kind::Interior;
  std::optional<BoundaryFace> face;

  bool interior() const { return kind == Kind::Interior; }
};

/// Set membership with face snapping; tolerance is relative to b (side faces)
/// or a (bottom face).
Location classify(const HyperPoint& x, const DomainSpec& dom,
                  double rel_tol = 1e-12);

DomainSpec scale_domain(const DomainSpec& dom, double c);

}  // namespace hypk
