#pragma once

#include <cstddef>
#include <vector>

#include "coxlab/field.hpp"
#include "coxlab/graph.hpp"

namespace coxlab {

/// How cos(pi/m) enters the cosine matrix.
struct MatrixMode {
  /// 0 selects exact arithmetic; otherwise every weight is replaced by a
  /// rational approximation with this many decimal places.
  int numeric_digits = 0;

  static MatrixMode exact() { return {}; }
  static MatrixMode numeric(int digits) { return {digits}; }
  bool is_numeric() const { return numeric_digits > 0; }
};

/// Edge weight cos(pi/m): exact for m in {2..6}, 1 for inf. Numeric mode
/// approximates every finite label.
FieldElement edge_weight(Label m, MatrixMode mode = {});

/// Symmetric matrix with unit diagonal and entries -cos(pi/m_ij).
class CosineMatrix {
 public:
  CosineMatrix() = default;
  CosineMatrix(std::size_t n, bool numeric);

  std::size_t size() const { return n_; }
  bool numeric() const { return numeric_; }

  const FieldElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const FieldElement& value);

  /// Principal submatrix on the vertices of s.
  CosineMatrix principal(VertexSet s) const;

 private:
  std::size_t n_ = 0;
  bool numeric_ = false;
  std::vector<FieldElement> entries_;
};

/// Dense square matrix over the field, used for arbitrary symmetric input.
using FieldMatrix = std::vector<std::vector<FieldElement>>;

CosineMatrix cosine_matrix(const CoxeterGraph& g, MatrixMode mode = {});

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t size() const { return positive + negative + zero; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
FieldElement det_elimination(const CosineMatrix& m);
FieldElement det_elimination(FieldMatrix m);

/// Sylvester inertia by symmetric elimination with 1x1 and 2x2 pivots.
Inertia inertia(const CosineMatrix& m);
Inertia inertia(FieldMatrix m);

/// Positive definiteness via leading pivots (stops at the first pivot <= 0).
bool is_positive_definite(const CosineMatrix& m);

FieldMatrix to_field_matrix(const CosineMatrix& m);

/// A simple cyclic path over label >= 3 edges, rotated to start at its
/// smallest vertex. Length 2 is the back-and-forth path along one edge;
/// longer cycles appear once per orientation.
struct CyclePath {
  std::vector<std::size_t> vertices;

  VertexSet support() const;
  friend bool operator==(const CyclePath&, const CyclePath&) = default;
};

inline constexpr std::size_t kDefaultCycleBudget = 1'000'000;

/// All cyclic paths, ordered by sorted vertex set and then by sequence.
/// Throws CycleBudgetExceeded when more than `budget` paths exist.
std::vector<CyclePath> enumerate_cycles(const CoxeterGraph& g,
                                        std::size_t budget = kDefaultCycleBudget);

/// Product of edge weights along the path.
FieldElement cycle_weight(const CoxeterGraph& g, const CyclePath& path);

/// Determinant as the signed sum over collections of vertex-disjoint cyclic
/// paths: each collection contributes (-1)^s times the product of its weights.
FieldElement det_vinberg(const CoxeterGraph& g, std::size_t budget = kDefaultCycleBudget);

/// det(sigma_family(k)) by the hub-cycle recurrence, starting from d_0 = 1.
FieldElement det_sigma_recurrence(std::size_t k);

/// det(sigma_family(k)) = (2 - r5)^k (k + 1) / 2^(5k).
FieldElement det_sigma_closed(std::size_t k);

}  // namespace coxlab
