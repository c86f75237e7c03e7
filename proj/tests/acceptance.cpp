// Acceptance suite: one PASS/FAIL line per criterion, with pinned time limits.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "coxlab/classify.hpp"
#include "coxlab/field.hpp"
#include "coxlab/graph.hpp"
#include "coxlab/hyperbolicity.hpp"
#include "coxlab/matrix.hpp"
#include "oracles.hpp"

using namespace coxlab;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitConstants = 1.0;
constexpr double kLimitDeterminants = 30.0;
constexpr double kLimitInertia = 30.0;
constexpr double kLimitHyperbolicity = 300.0;
constexpr double kLimitVinbergSweep = 300.0;
constexpr double kLimitNegativeControls = 1.0;
constexpr double kNoLimit = 0.0;

constexpr std::size_t kMaxCopies = 5;
constexpr std::size_t kMaxHyperbolicCopies = 4;
constexpr std::size_t kSweepMaxRank = 5;
constexpr std::size_t kRandomGraphs = 500;
constexpr std::size_t kRandomMaxRank = 8;
constexpr unsigned kRandomSeed = 20240611;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

FieldElement q(long p, long d) { return FieldElement::rational(p, d); }

// (2 - sqrt5)^k (k + 1) / 2^(5k), expanded independently of the library.
FieldElement expected_sigma_det(std::size_t k) {
  FieldElement v(static_cast<long>(k + 1));
  const FieldElement step = (FieldElement(2L) - FieldElement::sqrt(5)) * q(1, 32);
  for (std::size_t i = 0; i < k; ++i) v = v * step;
  return v;
}

TypeKind kind_of(const CoxeterGraph& g, VertexSet s) { return group_type(induced_subgraph(g, s)).kind; }

Outcome ac1() {
  Outcome o;
  const CoxeterGraph h4 = oracle::path({3, 3, 5});
  const FieldElement r5 = FieldElement::sqrt(5);
  if (det_elimination(cosine_matrix(h4)) != (FieldElement(7L) - FieldElement(3L) * r5) * q(1, 32)) {
    o.fail("det(H_4) != (7 - 3 sqrt5)/32");
  }
  if (det_elimination(cosine_matrix(sigma_family(1))) != (FieldElement(2L) - r5) * q(1, 16)) {
    o.fail("det(Sigma_1) != (2 - sqrt5)/16");
  }
  if (det_vinberg(h4) != (FieldElement(7L) - FieldElement(3L) * r5) * q(1, 32)) {
    o.fail("cycle expansion of H_4 disagrees");
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  for (std::size_t k = 1; k <= kMaxCopies; ++k) {
    const CoxeterGraph g = sigma_family(k);
    const FieldElement expected = expected_sigma_det(k);
    const std::string tag = "k=" + std::to_string(k) + ": ";
    if (det_elimination(cosine_matrix(g)) != expected) o.fail(tag + "elimination");
    if (det_vinberg(g) != expected) o.fail(tag + "cycle expansion");
    if (det_sigma_recurrence(k) != expected) o.fail(tag + "recurrence");
    if (det_sigma_closed(k) != expected) o.fail(tag + "closed form");
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  for (std::size_t k = 1; k <= kMaxCopies; ++k) {
    const Inertia in = inertia(cosine_matrix(sigma_family(k)));
    if (!(in == Inertia{4 * k, k, 0})) o.fail("k=" + std::to_string(k));
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (std::size_t k = 1; k <= kMaxCopies; ++k) {
    const int expected = k % 2 == 0 ? 1 : -1;
    if (sign(det_elimination(cosine_matrix(sigma_family(k)))) != expected) o.fail("k=" + std::to_string(k));
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  for (std::size_t k = 1; k <= kMaxCopies; ++k) {
    const CoxeterGraph g = sigma_family(k);
    const CoxeterGraph hidden = induced_subgraph(g, VertexSet::range(g.rank()) - sigma_hubs(k));
    const TypeVerdict v = group_type(hidden);
    const std::string tag = "k=" + std::to_string(k) + ": ";
    if (v.kind != TypeKind::Finite) o.fail(tag + "not finite");
    if (v.components.size() != k) o.fail(tag + "component count");
    for (const auto& c : v.components) {
      if (!c.family || c.family->to_string() != "H_4") o.fail(tag + "component is not H_4");
    }
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  for (std::size_t k = 1; k <= kMaxHyperbolicCopies; ++k) {
    const HyperbolicityReport r = is_word_hyperbolic(sigma_family(k));
    const std::string tag = "k=" + std::to_string(k) + ": ";
    if (r.verdict != Verdict::Hyperbolic) o.fail(tag + "not hyperbolic");
    if (!r.paper_mode_applicable || !r.paper_mode_applicable_rank3) o.fail(tag + "parabolic subgraph present");
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  for (std::size_t k = 1; k <= kMaxHyperbolicCopies; ++k) {
    const CoxeterGraph g = sigma_family(k);
    const VertexSet hubs = sigma_hubs(k);
    const std::string tag = "k=" + std::to_string(k) + ": ";
    // Hub-free subsets sit inside k H_4, so no infinite subset avoids the hubs.
    if (kind_of(g, VertexSet::range(g.rank()) - hubs) != TypeKind::Finite) o.fail(tag + "hub-free part infinite");
    const auto minimal = minimal_infinite_subsets(g);
    if (minimal.empty()) o.fail(tag + "no minimal infinite subset");
    for (VertexSet s : minimal) {
      if (!s.intersects(hubs)) o.fail(tag + "hub-free minimal set " + s.to_string());
      if (kind_of(g, s) == TypeKind::Finite) o.fail(tag + "finite set reported " + s.to_string());
      for (std::size_t v : s.elements()) {
        if (s.size() > 1 && kind_of(g, s.without(v)) != TypeKind::Finite) {
          o.fail(tag + "not minimal " + s.to_string());
        }
      }
    }
    if (k <= 2 && minimal != oracle::brute_force_minimal_infinite(g)) o.fail(tag + "differs from exhaustive search");
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  const std::vector<Label> labels{2, 3, 4, 5};
  std::atomic<std::size_t> checked{0};
  std::atomic<std::size_t> mismatches{0};
  std::atomic<std::uint64_t> first_bad_rank{0};
  std::atomic<std::uint64_t> first_bad_index{0};

  for (std::size_t n = 1; n <= kSweepMaxRank; ++n) {
    const std::uint64_t total = oracle::graph_count(n, labels.size());
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w, n, total] {
        for (std::uint64_t index = w; index < total; index += workers) {
          const CoxeterGraph g = oracle::graph_from_index(n, labels, index);
          if (!is_connected(g, VertexSet::range(n))) continue;
          ++checked;
          if (det_vinberg(g) != det_elimination(cosine_matrix(g))) {
            if (mismatches++ == 0) {
              first_bad_rank = n;
              first_bad_index = index;
            }
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::mt19937 rng(kRandomSeed);
  std::uniform_int_distribution<std::size_t> rank(1, kRandomMaxRank);
  for (std::size_t trial = 0; trial < kRandomGraphs; ++trial) {
    const CoxeterGraph g = oracle::random_graph(rng, rank(rng), {2, 2, 3, 4, 5, 6, kInfinity});
    ++checked;
    if (det_vinberg(g) != det_elimination(cosine_matrix(g))) {
      if (mismatches++ == 0) first_bad_rank = g.rank();
    }
  }

  o.detail = std::to_string(checked.load()) + " graphs";
  if (mismatches > 0) {
    o.fail(std::to_string(mismatches.load()) + " mismatches, first at rank " + std::to_string(first_bad_rank.load()) +
           " index " + std::to_string(first_bad_index.load()));
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  for (const auto& entry : oracle::finite_table()) {
    const TypeVerdict v = group_type(entry.diagram);
    const auto name = identify_family(entry.diagram);
    if (v.kind != TypeKind::Finite || !(v.inertia == Inertia{entry.diagram.rank(), 0, 0})) o.fail(entry.expected + " type");
    if (!name || name->to_string() != entry.expected) o.fail(entry.expected + " name");
  }
  for (const auto& entry : oracle::affine_table()) {
    const TypeVerdict v = group_type(entry.diagram);
    const auto name = identify_family(entry.diagram);
    if (v.kind != TypeKind::Affine || !(v.inertia == Inertia{entry.diagram.rank() - 1, 0, 1})) {
      o.fail(entry.expected + " type");
    }
    if (!name || name->to_string() != entry.expected) o.fail(entry.expected + " name");
  }
  return o;
}

Outcome ac10() {
  Outcome o;
  const CoxeterGraph triangle = oracle::cycle(3);
  const HyperbolicityReport t = is_word_hyperbolic(triangle);
  if (t.verdict != Verdict::NotHyperbolic || !t.witness) {
    o.fail("triangle verdict");
  } else if (const auto* w = std::get_if<AffineWitness>(&*t.witness)) {
    if (w->vertices != VertexSet::range(3) || kind_of(triangle, w->vertices) != TypeKind::Affine) {
      o.fail("triangle witness");
    }
  } else {
    o.fail("triangle witness kind");
  }

  const CoxeterGraph pair = parse("rank 4\nedge 1 2 inf\nedge 3 4 inf\n");
  const HyperbolicityReport p = is_word_hyperbolic(pair);
  if (p.verdict != Verdict::NotHyperbolic || !p.witness) {
    o.fail("pair verdict");
  } else if (const auto* w = std::get_if<PairWitness>(&*p.witness)) {
    if (w->first.intersects(w->second) || !unjoined(pair, w->first, w->second) ||
        kind_of(pair, w->first) == TypeKind::Finite || kind_of(pair, w->second) == TypeKind::Finite) {
      o.fail("pair witness");
    }
  } else {
    o.fail("pair witness kind");
  }
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "determinant constants of H_4 and Sigma_1", kLimitConstants, ac1},
      {"AC2", "four determinant routes match the closed form, k=1..5", kLimitDeterminants, ac2},
      {"AC3", "inertia of Sigma_k is (4k, k, 0), k=1..5", kLimitInertia, ac3},
      {"AC4", "sign of det(Sigma_k) is (-1)^k, k=1..5", kNoLimit, ac4},
      {"AC5", "hub-free subgraph is k copies of H_4, k=1..5", kNoLimit, ac5},
      {"AC6", "Sigma_k is hyperbolic without parabolic subgraphs, k=1..4", kLimitHyperbolicity, ac6},
      {"AC7", "every minimal infinite subset contains a hub, k=1..4", kNoLimit, ac7},
      {"AC8", "cycle expansion equals elimination on the sweep", kLimitVinbergSweep, ac8},
      {"AC9", "finite and affine classification tables", kNoLimit, ac9},
      {"AC10", "negative controls with verified witnesses", kLimitNegativeControls, ac10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && seconds >= c.limit) o.fail("exceeded " + std::to_string(c.limit) + " s");
    failures += o.ok ? 0 : 1;
    std::printf("[%s] %-4s %s (%.3f s%s%s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                o.detail.empty() ? "" : "; ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
              criteria.size());
  return failures == 0 ? 0 : 1;
}
