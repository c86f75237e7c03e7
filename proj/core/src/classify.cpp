#include "coxlab/classify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "coxlab/error.hpp"

namespace coxlab {
namespace {

using Series = FamilyName::Series;

FamilyName family(Series series, int index, Label dihedral = 0) { return {series, index, dihedral}; }

TypeKind kind_of(const Inertia& in) {
  if (in.negative > 0) return TypeKind::Indefinite;
  if (in.zero == 0) return TypeKind::Finite;
  // Connected diagrams have a simple smallest eigenvalue, so corank > 1
  // cannot occur for a component; treat it as not affine all the same.
  return in.zero == 1 ? TypeKind::Affine : TypeKind::Indefinite;
}

// Label sequence along a path graph, starting at an endpoint.
std::vector<Label> path_labels(const CoxeterGraph& g) {
  const std::size_t n = g.rank();
  std::size_t end = 0;
  while (g.neighbours(end).size() != 1) ++end;
  std::vector<Label> labels;
  std::size_t previous = n;
  std::size_t current = end;
  while (labels.size() + 1 < n) {
    for (std::size_t next : g.neighbours(current).elements()) {
      if (next == previous) continue;
      labels.push_back(g.label(current, next));
      previous = current;
      current = next;
      break;
    }
  }
  return labels;
}

bool matches_either_way(const std::vector<Label>& labels, std::vector<Label> pattern) {
  if (labels == pattern) return true;
  std::reverse(pattern.begin(), pattern.end());
  return labels == pattern;
}

std::optional<FamilyName> identify_path(const CoxeterGraph& g) {
  const int n = static_cast<int>(g.rank());
  const std::vector<Label> labels = path_labels(g);
  if (n == 2) {
    const Label m = labels[0];
    if (m == kInfinity) return family(Series::AffineA, 1);
    if (m == 3) return family(Series::A, 2);
    if (m == 4) return family(Series::B, 2);
    return family(Series::I2, 2, m);
  }
  const auto count = [&](Label m) { return std::count(labels.begin(), labels.end(), m); };
  const long threes = count(3);
  const long total = static_cast<long>(labels.size());
  if (threes == total) return family(Series::A, n);
  if (count(4) == 1 && threes == total - 1 && (labels.front() == 4 || labels.back() == 4)) {
    return family(Series::B, n);
  }
  if (count(4) == 2 && threes == total - 2 && labels.front() == 4 && labels.back() == 4) {
    return family(Series::AffineC, n - 1);
  }
  if (matches_either_way(labels, {3, 4, 3})) return family(Series::F, 4);
  if (matches_either_way(labels, {3, 3, 4, 3})) return family(Series::AffineF, 4);
  if (matches_either_way(labels, {5, 3})) return family(Series::H, 3);
  if (matches_either_way(labels, {5, 3, 3})) return family(Series::H, 4);
  if (matches_either_way(labels, {6, 3})) return family(Series::AffineG, 2);
  return std::nullopt;
}

struct Arm {
  std::size_t length = 0;
  std::vector<Label> labels;  // outward from the branch vertex
};

Arm follow_arm(const CoxeterGraph& g, std::size_t branch, std::size_t first) {
  Arm arm;
  std::size_t previous = branch;
  std::size_t current = first;
  arm.labels.push_back(g.label(branch, first));
  arm.length = 1;
  while (true) {
    const VertexSet onward = g.neighbours(current).without(previous);
    if (onward.size() != 1) break;
    const std::size_t next = onward.min();
    arm.labels.push_back(g.label(current, next));
    ++arm.length;
    previous = current;
    current = next;
  }
  return arm;
}

std::optional<FamilyName> identify_one_branch(const CoxeterGraph& g, std::size_t branch) {
  const int n = static_cast<int>(g.rank());
  std::vector<Arm> arms;
  for (std::size_t first : g.neighbours(branch).elements()) arms.push_back(follow_arm(g, branch, first));
  std::sort(arms.begin(), arms.end(), [](const Arm& a, const Arm& b) { return a.length < b.length; });

  std::size_t fours = 0;
  bool others_simple = true;
  for (const Arm& arm : arms) {
    for (Label m : arm.labels) {
      if (m == 4) {
        ++fours;
      } else if (m != 3) {
        others_simple = false;
      }
    }
  }
  if (!others_simple) return std::nullopt;

  const std::array<std::size_t, 3> len = {arms[0].length, arms[1].length, arms[2].length};
  if (fours == 0) {
    if (len[0] == 1 && len[1] == 1) return family(Series::D, n);
    if (len == std::array<std::size_t, 3>{1, 2, 2}) return family(Series::E, 6);
    if (len == std::array<std::size_t, 3>{1, 2, 3}) return family(Series::E, 7);
    if (len == std::array<std::size_t, 3>{1, 2, 4}) return family(Series::E, 8);
    if (len == std::array<std::size_t, 3>{2, 2, 2}) return family(Series::AffineE, 6);
    if (len == std::array<std::size_t, 3>{1, 3, 3}) return family(Series::AffineE, 7);
    if (len == std::array<std::size_t, 3>{1, 2, 5}) return family(Series::AffineE, 8);
    return std::nullopt;
  }
  if (fours == 1 && len[0] == 1 && len[1] == 1) {
    // The 4 must sit on the outermost edge of some arm; the two other arms
    // are single vertices.
    for (std::size_t a = 0; a < 3; ++a) {
      if (arms[a].labels.back() != 4) continue;
      bool rest_short = true;
      for (std::size_t b = 0; b < 3; ++b) {
        if (b != a && arms[b].length != 1) rest_short = false;
      }
      if (rest_short) return family(Series::AffineB, n - 1);
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(TypeKind kind) {
  switch (kind) {
    case TypeKind::Finite:
      return "Finite";
    case TypeKind::Affine:
      return "Affine";
    case TypeKind::Indefinite:
      return "Indefinite";
  }
  return "?";
}

std::string FamilyName::to_string() const {
  static const std::array<const char*, 14> kLetters = {"A", "B", "D", "E", "F", "H", "I",
                                                       "A", "B", "C", "D", "E", "F", "G"};
  const std::string prefix = affine() ? "~" : "";
  const std::string letter = kLetters[static_cast<std::size_t>(series)];
  if (series == Series::I2) return "I_2(" + label_to_string(dihedral) + ")";
  return prefix + letter + "_" + std::to_string(index);
}

TypeVerdict group_type(const CoxeterGraph& g, MatrixMode mode) {
  const CosineMatrix full = cosine_matrix(g, mode);
  TypeVerdict verdict;
  verdict.numeric = mode.is_numeric();
  bool any_indefinite = false;
  bool any_affine = false;
  for (VertexSet component : components(g)) {
    ComponentVerdict cv;
    cv.vertices = component;
    cv.inertia = inertia(full.principal(component));
    cv.kind = kind_of(cv.inertia);
    cv.family = identify_family(induced_subgraph(g, component));
    any_indefinite = any_indefinite || cv.kind == TypeKind::Indefinite;
    any_affine = any_affine || cv.kind == TypeKind::Affine;
    verdict.inertia.positive += cv.inertia.positive;
    verdict.inertia.negative += cv.inertia.negative;
    verdict.inertia.zero += cv.inertia.zero;
    verdict.components.push_back(std::move(cv));
  }
  verdict.kind = any_indefinite ? TypeKind::Indefinite
                                : (any_affine ? TypeKind::Affine : TypeKind::Finite);
  return verdict;
}

std::optional<FamilyName> identify_family(const CoxeterGraph& g) {
  const std::size_t n = g.rank();
  if (n == 0 || !is_connected(g, VertexSet::range(n))) return std::nullopt;
  if (n == 1) return family(Series::A, 1);

  const auto edges = g.edges();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.neighbours(v).size();
  const auto all_threes = std::all_of(edges.begin(), edges.end(),
                                      [](const CoxeterGraph::Edge& e) { return e.m == 3; });

  if (edges.size() == n) {
    const bool cycle = std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d == 2; });
    if (cycle && all_threes && n >= 3) return family(Series::AffineA, static_cast<int>(n) - 1);
    return std::nullopt;
  }
  if (edges.size() + 1 != n) return std::nullopt;

  std::vector<std::size_t> branches;
  std::size_t max_degree = 0;
  for (std::size_t v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, degree[v]);
    if (degree[v] >= 3) branches.push_back(v);
  }
  if (max_degree <= 2) return identify_path(g);
  if (max_degree == 4) {
    if (n == 5 && all_threes) return family(Series::AffineD, 4);
    return std::nullopt;
  }
  if (max_degree > 4) return std::nullopt;
  if (branches.size() == 1) return identify_one_branch(g, branches[0]);
  if (branches.size() == 2 && all_threes && n >= 6) {
    for (std::size_t b : branches) {
      std::size_t leaves = 0;
      for (std::size_t u : g.neighbours(b).elements()) leaves += degree[u] == 1 ? 1 : 0;
      if (leaves != 2) return std::nullopt;
    }
    return family(Series::AffineD, static_cast<int>(n) - 1);
  }
  return std::nullopt;
}

SubsetSearchResult search_minimal_infinite(const CoxeterGraph& g, const SearchOptions& options) {
  if (g.rank() > options.rank_cap) throw RankCapExceeded(g.rank(), options.rank_cap);
  const CosineMatrix full = cosine_matrix(g, options.mode);
  const std::size_t n = g.rank();
  std::vector<VertexSet> neighbours(n);
  for (std::size_t v = 0; v < n; ++v) neighbours[v] = g.neighbours(v);

  SubsetSearchResult result;
  std::unordered_set<std::uint64_t> finite;
  std::vector<VertexSet> level;
  for (std::size_t v = 0; v < n; ++v) {
    finite.insert(VertexSet{v}.bits());
    level.push_back(VertexSet{v});
  }

  auto all_proper_subsets_finite = [&](VertexSet candidate) {
    for (std::size_t u : candidate.elements()) {
      for (VertexSet part : components(g, candidate.without(u))) {
        if (!finite.contains(part.bits())) return false;
      }
    }
    return true;
  };

  while (!level.empty()) {
    std::vector<std::uint64_t> candidates;
    for (VertexSet s : level) {
      VertexSet frontier;
      for (std::size_t v : s.elements()) frontier = frontier | neighbours[v];
      for (std::size_t v : (frontier - s).elements()) candidates.push_back(s.with(v).bits());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<VertexSet> next;
    for (std::uint64_t bits : candidates) {
      const VertexSet candidate(bits);
      if (!all_proper_subsets_finite(candidate)) continue;
      ++result.examined;
      const CosineMatrix sub = full.principal(candidate);
      if (is_positive_definite(sub)) {
        finite.insert(bits);
        next.push_back(candidate);
      } else {
        const TypeKind kind = inertia(sub).negative == 0 ? TypeKind::Affine : TypeKind::Indefinite;
        result.minimal.push_back({candidate, kind});
      }
    }
    level = std::move(next);
  }

  std::sort(result.minimal.begin(), result.minimal.end(),
            [](const MinimalInfinite& a, const MinimalInfinite& b) {
              return canonical_less(a.vertices, b.vertices);
            });
  return result;
}

std::vector<VertexSet> minimal_infinite_subsets(const CoxeterGraph& g, const SearchOptions& options) {
  std::vector<VertexSet> out;
  for (const auto& m : search_minimal_infinite(g, options).minimal) out.push_back(m.vertices);
  return out;
}

std::optional<VertexSet> has_parabolic_subgraph(const CoxeterGraph& g, const SearchOptions& options) {
  for (const auto& m : search_minimal_infinite(g, options).minimal) {
    if (m.kind == TypeKind::Affine) return m.vertices;
  }
  return std::nullopt;
}

std::size_t rank_cap_from_environment() {
  const char* value = std::getenv("COXLAB_RANK_CAP");
  if (value == nullptr || *value == '\0') return kDefaultRankCap;
  char* end = nullptr;
  const unsigned long cap = std::strtoul(value, &end, 10);
  if (*end != '\0' || cap == 0) throw Error("COXLAB_RANK_CAP must be a positive integer");
  return std::min<std::size_t>(cap, VertexSet::kMaxVertices);
}

}  // namespace coxlab
