#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiver/rational.hpp"

namespace quiver {

struct QuiverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A directed cycle was found; the message names one.
struct CycleError : QuiverError {
  using QuiverError::QuiverError;
};

/// An id (vertex or arrow endpoint) failed to resolve.
struct DanglingIdError : QuiverError {
  using QuiverError::QuiverError;
};

struct DuplicateIdError : QuiverError {
  using QuiverError::QuiverError;
};

/// Raised by every operation that would need the Euler form (or Ext groups)
/// of a bound quiver algebra KQ/<R>; those are checked, never approximated.
struct BoundAlgebraUnsupported : QuiverError {
  using QuiverError::QuiverError;
};

struct SingularBaseChange : QuiverError {
  using QuiverError::QuiverError;
};

struct WeightDimensionMismatch : QuiverError {
  using QuiverError::QuiverError;
};

struct ShapeError : QuiverError {
  using QuiverError::QuiverError;
};

struct SizeCapExceeded : QuiverError {
  using QuiverError::QuiverError;
};

struct DimensionMismatch : QuiverError {
  using QuiverError::QuiverError;
};

/// Theorem-violation grade: an exact YES met a capacity ZERO (or an exact YES
/// fell outside the hereditary weight semigroup). Indicates a bug somewhere.
struct InconsistencyAlarm : QuiverError {
  using QuiverError::QuiverError;
};

struct Arrow {
  std::string id;
  std::string tail;
  std::string head;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Finite acyclic directed multigraph with named vertices and arrows.
// Acyclicity is validated on construction (CycleError); connectedness of the
// underlying undirected graph is recorded but only warned about by callers.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  std::size_t vertex_index(const std::string& id) const;
  std::size_t arrow_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const;

  /// Topological order of vertex ids; every arrow points forward in it.
  const std::vector<std::string>& topological_order() const {
    return topo_order_;
  }
  const std::vector<std::size_t>& topological_positions() const {
    return topo_pos_;
  }

  bool is_connected() const { return connected_; }

  /// Outgoing arrow indices of a vertex, sorted by arrow id. This fixes the
  /// lexicographic path enumeration order.
  const std::vector<std::size_t>& arrows_from(std::size_t vertex) const {
    return out_arrows_[vertex];
  }

  /// Number of arrows x -> y.
  long long arrow_count(std::size_t x, std::size_t y) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_lookup_;
  std::map<std::string, std::size_t> arrow_lookup_;
  std::vector<std::vector<std::size_t>> out_arrows_;
  std::vector<std::string> topo_order_;
  std::vector<std::size_t> topo_pos_;
  bool connected_ = true;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// Re-runs the construction-time checks on an existing quiver and returns the
/// topological order; `connected` reports the warning flag.
std::vector<std::string> validate_quiver(const Quiver& q,
                                         bool* connected = nullptr);

class DimensionVector {
 public:
  DimensionVector(const Quiver& q, const std::map<std::string, long long>& v);
  static DimensionVector from_values(std::vector<long long> values);

  long long operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  const std::vector<long long>& values() const { return values_; }

  /// Indices of vertices with nonzero dimension.
  std::vector<std::size_t> support() const;

  friend bool operator==(const DimensionVector&,
                         const DimensionVector&) = default;

 private:
  explicit DimensionVector(std::vector<long long> values)
      : values_(std::move(values)) {}
  std::vector<long long> values_;
};

class Weight {
 public:
  Weight(const Quiver& q, const std::map<std::string, long long>& v);
  static Weight from_values(std::vector<long long> values);

  long long operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  const std::vector<long long>& values() const { return values_; }

  long long dot(const DimensionVector& beta) const;
  Weight scaled(long long n) const;
  bool is_zero() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  explicit Weight(std::vector<long long> values) : values_(std::move(values)) {}
  std::vector<long long> values_;
};

// Oriented path, stored in traversal order: arrows()[0] leaves source().
class Path {
 public:
  Path(const Quiver& q, std::vector<std::string> arrow_ids);

  const std::vector<std::string>& arrows() const { return arrow_ids_; }
  std::size_t length() const { return arrow_ids_.size(); }
  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<std::string> arrow_ids_;
  std::string source_;
  std::string target_;
};

struct PathTerm {
  Rational coeff;
  Path path;
};

// Linear combination of parallel paths of length >= 1. May be empty (the
// structurally-zero entry of a Schofield block).
class LinearCombination {
 public:
  LinearCombination() = default;
  LinearCombination(const Quiver& q, std::vector<PathTerm> terms);

  const std::vector<PathTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  const std::string& source() const;  // throws if empty
  const std::string& target() const;

 private:
  std::vector<PathTerm> terms_;
};

// Admissible relation: parallel paths, every path of length >= 2, nonempty.
class Relation {
 public:
  Relation(const Quiver& q, std::vector<PathTerm> terms);

  const std::vector<PathTerm>& terms() const { return terms_; }
  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }

 private:
  std::vector<PathTerm> terms_;
  std::string source_;
  std::string target_;
};

/// All directed paths of length >= 1 from source to target, sorted
/// lexicographically by their arrow-id sequence. Finite since q is acyclic.
std::vector<Path> enumerate_paths(const Quiver& q, const std::string& source,
                                  const std::string& target);

}  // namespace quiver
