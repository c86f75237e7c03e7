#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace coxlab {

/// Coxeter label m_st. kInfinity stands for m = inf.
using Label = int;
inline constexpr Label kInfinity = std::numeric_limits<int>::max();
inline constexpr Label kCommuting = 2;

std::string label_to_string(Label m);

/// Subset of the vertices {0, ..., 63} of a graph, stored as a bitmask.
class VertexSet {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<std::size_t> vertices);

  /// {0, ..., n-1}.
  static VertexSet range(std::size_t n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return v < kMaxVertices && ((bits_ >> v) & 1u); }
  std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  void insert(std::size_t v);
  void erase(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }

  VertexSet with(std::size_t v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(std::size_t v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  /// Ascending 0-based vertex indices.
  std::vector<std::size_t> elements() const;

  /// "{1,2,3}" with 1-based vertex numbers.
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Orders sets by cardinality, then by their ascending element lists.
bool canonical_less(VertexSet a, VertexSet b);

/// A Coxeter graph: rank n and a symmetric label for every pair of distinct
/// vertices. Vertices are 0-based internally; text formats are 1-based.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  explicit CoxeterGraph(std::size_t rank);

  std::size_t rank() const { return rank_; }

  Label label(std::size_t i, std::size_t j) const;
  void set_label(std::size_t i, std::size_t j, Label m);

  /// True when the pair carries label >= 3.
  bool adjacent(std::size_t i, std::size_t j) const { return i != j && label(i, j) >= 3; }

  /// Vertices adjacent to v.
  VertexSet neighbours(std::size_t v) const;

  struct Edge {
    std::size_t i;
    std::size_t j;
    Label m;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  /// All pairs with label >= 3, lexicographic by (i, j).
  std::vector<Edge> edges() const;

  const std::string& vertex_name(std::size_t v) const { return names_[v]; }
  void set_vertex_name(std::size_t v, std::string name) { names_[v] = std::move(name); }

  /// Labels only; vertex names are reporting metadata.
  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.rank_ == b.rank_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Label> labels_;
  std::vector<std::string> names_;
};

/// Parses the line format:
///   # comment
///   rank N
///   edge I J M        (1 <= I < J <= N, M >= 2 or "inf")
CoxeterGraph parse(const std::string& text);
std::string serialize(const CoxeterGraph& g);

/// {"rank": N, "edges": [[i, j, m], ...]} with m an integer or "inf".
std::string to_json(const CoxeterGraph& g);
CoxeterGraph from_json(const std::string& text);

/// k copies of the five-vertex chain 3-3-3-5, with the first vertex of each
/// copy (the hub) joined to every other hub by a label-5 edge.
CoxeterGraph sigma_family(std::size_t k);

/// Hub vertices 5c of sigma_family(k), 0-based.
VertexSet sigma_hubs(std::size_t k);

/// Graph induced on s; vertex names record the original 1-based numbers
/// (or the original names when present).
CoxeterGraph induced_subgraph(const CoxeterGraph& g, VertexSet s);

/// True iff every pair across a and b is labeled 2.
bool unjoined(const CoxeterGraph& g, VertexSet a, VertexSet b);

/// Connected components over label >= 3 edges, ordered by smallest vertex.
std::vector<VertexSet> components(const CoxeterGraph& g);
/// Components of the subgraph induced on s (sets are in g's numbering).
std::vector<VertexSet> components(const CoxeterGraph& g, VertexSet s);

bool is_connected(const CoxeterGraph& g, VertexSet s);

/// Relabels vertices: vertex v of g becomes vertex perm[v].
CoxeterGraph permute(const CoxeterGraph& g, const std::vector<std::size_t>& perm);

}  // namespace coxlab
