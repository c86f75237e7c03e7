#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxlab/graph.hpp"
#include "coxlab/matrix.hpp"

namespace coxlab {

enum class TypeKind { Finite, Affine, Indefinite };

std::string to_string(TypeKind kind);

/// A classical finite or affine Coxeter diagram name.
struct FamilyName {
  enum class Series { A, B, D, E, F, H, I2, AffineA, AffineB, AffineC, AffineD, AffineE, AffineF, AffineG };

  Series series = Series::A;
  /// Subscript n of X_n (the diagram has n vertices for finite types and
  /// n + 1 for affine types).
  int index = 1;
  /// Dihedral label of I_2(m); unused otherwise.
  Label dihedral = 0;

  bool affine() const { return series >= Series::AffineA; }
  std::size_t rank() const { return static_cast<std::size_t>(affine() ? index + 1 : index); }

  /// "A_4", "I_2(5)", "~E_8", ...
  std::string to_string() const;

  friend bool operator==(const FamilyName&, const FamilyName&) = default;
};

struct ComponentVerdict {
  VertexSet vertices;
  TypeKind kind = TypeKind::Finite;
  Inertia inertia;
  std::optional<FamilyName> family;
};

struct TypeVerdict {
  TypeKind kind = TypeKind::Finite;
  Inertia inertia;
  std::vector<ComponentVerdict> components;
  bool numeric = false;

  /// True iff the group is infinite.
  bool infinite() const { return kind != TypeKind::Finite; }
};

/// Finite / affine / indefinite type from the inertia of each connected
/// component's cosine matrix.
TypeVerdict group_type(const CoxeterGraph& g, MatrixMode mode = {});

/// Matches a connected diagram against the classical finite and affine
/// tables. Rank-2 diagrams with labels 3 and 4 are reported as A_2 and B_2.
std::optional<FamilyName> identify_family(const CoxeterGraph& g);

inline constexpr std::size_t kDefaultRankCap = 24;

struct SearchOptions {
  std::size_t rank_cap = kDefaultRankCap;
  MatrixMode mode;
};

/// A minimal infinite vertex set and the type of the diagram it induces
/// (Affine or Indefinite).
struct MinimalInfinite {
  VertexSet vertices;
  TypeKind kind = TypeKind::Indefinite;
};

struct SubsetSearchResult {
  /// Sorted by canonical_less.
  std::vector<MinimalInfinite> minimal;
  /// Number of connected vertex sets whose cosine matrix was tested.
  std::size_t examined = 0;
};

/// Level-wise sweep over connected vertex sets: a set is tested only when
/// every connected proper subset is finite, finite sets are extended by one
/// neighbouring vertex, and infinite ones are recorded as minimal.
SubsetSearchResult search_minimal_infinite(const CoxeterGraph& g, const SearchOptions& options = {});

std::vector<VertexSet> minimal_infinite_subsets(const CoxeterGraph& g, const SearchOptions& options = {});

/// A vertex set inducing an affine (corank-1, connected) diagram, if any.
std::optional<VertexSet> has_parabolic_subgraph(const CoxeterGraph& g, const SearchOptions& options = {});

/// Rank cap taken from COXLAB_RANK_CAP when set, else kDefaultRankCap.
std::size_t rank_cap_from_environment();

}  // namespace coxlab
