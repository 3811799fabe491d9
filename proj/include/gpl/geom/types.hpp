#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gpl::geom {

/// Largest supported ambient dimension. Vectors and small matrices live on
/// the stack up to this size.
inline constexpr int kMaxDim = 8;

/// Relative tolerance for orientation and containment predicates. Absolute
/// thresholds are this value times the coordinate scale of the input.
inline constexpr double kEpsGeom = 1e-9;

using Vector = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;
using ConstPointRef = Eigen::Map<const Eigen::VectorXd>;

/// Flat row-major storage for a sample of points in R^d.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim) : dim_(dim) {}
  PointSet(int dim, std::size_t count) : dim_(dim), coords_(static_cast<std::size_t>(dim) * count) {}
  PointSet(int dim, std::vector<double> coords);

  static PointSet from_vectors(const std::vector<Vector>& points);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / static_cast<std::size_t>(dim_); }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const double> operator[](std::size_t i) const noexcept {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  std::span<double> operator[](std::size_t i) noexcept {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }

  ConstPointRef map(std::size_t i) const noexcept {
    return ConstPointRef(coords_.data() + i * static_cast<std::size_t>(dim_), dim_);
  }
  Vector vector(std::size_t i) const { return map(i); }

  void push_back(std::span<const double> p);
  void push_back(const Vector& p);
  void reserve(std::size_t count) { coords_.reserve(count * static_cast<std::size_t>(dim_)); }
  void truncate(std::size_t count) { coords_.resize(count * static_cast<std::size_t>(dim_)); }

  /// Largest absolute coordinate; 1 for an empty set.
  double scale() const noexcept;

  const std::vector<double>& raw() const noexcept { return coords_; }

 private:
  int dim_ = 0;
  std::vector<double> coords_;
};

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline double squared_norm(std::span<const double> a) noexcept { return dot(a, a); }

/// Oriented hyperplane {x : normal . x = offset}; the positive side is
/// where normal . x > offset.
struct Hyperplane {
  Vector normal;
  double offset = 0.0;

  double signed_distance(const Vector& x) const { return normal.dot(x) - offset; }
};

/// A k-simplex given by its k+1 vertices in R^d.
struct Simplex {
  std::vector<Vector> vertices;

  int ambient_dim() const { return vertices.empty() ? 0 : static_cast<int>(vertices.front().size()); }
  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  Vector centroid() const;
};

/// apex + pos{generators}.
struct Cone {
  Vector apex;
  std::vector<Vector> generators;
};

Vector make_vector(std::initializer_list<double> coords);

}  // namespace gpl::geom
