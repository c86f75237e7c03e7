#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "coxlab/classify.hpp"
#include "coxlab/graph.hpp"

namespace coxlab {

/// A vertex set of size >= 3 inducing a connected affine diagram
/// (a virtually Z^k subgroup with k >= 2).
struct AffineWitness {
  VertexSet vertices;
};

/// Two disjoint, mutually commuting vertex sets that both generate infinite
/// subgroups.
struct PairWitness {
  VertexSet first;
  VertexSet second;
};

using HyperbolicityWitness = std::variant<AffineWitness, PairWitness>;

enum class Verdict { Hyperbolic, NotHyperbolic };

struct HyperbolicityReport {
  Verdict verdict = Verdict::Hyperbolic;
  std::optional<HyperbolicityWitness> witness;
  /// True iff the graph has no parabolic (affine) subgraph, so the
  /// restricted "no unjoined pair of infinite subgraphs" form applies.
  /// A single infinite edge counts as parabolic here.
  bool paper_mode_applicable = true;
  /// Same hypothesis when only affine subgraphs of rank >= 3 count as
  /// parabolic.
  bool paper_mode_applicable_rank3 = true;
  std::size_t subsets_examined = 0;
  std::size_t minimal_infinite_count = 0;
  bool numeric = false;
};

std::string to_string(Verdict verdict);

/// Moussong's criterion. The group is not word-hyperbolic iff some induced
/// subgraph has a connected affine component of rank >= 3, or two disjoint
/// unjoined vertex sets both generate infinite subgroups. Both conditions are
/// decided on the minimal infinite vertex sets: an affine component is itself
/// minimal infinite, every infinite set contains a minimal one, and subsets
/// of unjoined sets stay unjoined.
HyperbolicityReport is_word_hyperbolic(const CoxeterGraph& g, const SearchOptions& options = {});

}  // namespace coxlab
