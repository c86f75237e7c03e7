#include "coxlab/matrix.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <utility>

#include "coxlab/error.hpp"

namespace coxlab {

FieldElement edge_weight(Label m, MatrixMode mode) {
  if (m == kInfinity) return FieldElement(1L);
  if (m == kCommuting) return FieldElement();
  if (mode.is_numeric()) return FieldElement(cos_pi_over_rational(m, mode.numeric_digits));
  return cos_label(m);
}

CosineMatrix::CosineMatrix(std::size_t n, bool numeric)
    : n_(n), numeric_(numeric), entries_(n * n) {
  for (std::size_t i = 0; i < n; ++i) entries_[i * n + i] = FieldElement(1L);
}

void CosineMatrix::set(std::size_t i, std::size_t j, const FieldElement& value) {
  entries_[i * n_ + j] = value;
  entries_[j * n_ + i] = value;
}

CosineMatrix CosineMatrix::principal(VertexSet s) const {
  const auto vertices = s.elements();
  CosineMatrix out(vertices.size(), numeric_);
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      out.set(a, b, (*this)(vertices[a], vertices[b]));
    }
  }
  return out;
}

CosineMatrix cosine_matrix(const CoxeterGraph& g, MatrixMode mode) {
  CosineMatrix m(g.rank(), mode.is_numeric());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    for (std::size_t j = i + 1; j < g.rank(); ++j) {
      const Label label = g.label(i, j);
      if (label != kCommuting) m.set(i, j, -edge_weight(label, mode));
    }
  }
  return m;
}

FieldMatrix to_field_matrix(const CosineMatrix& m) {
  FieldMatrix out(m.size(), std::vector<FieldElement>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

FieldElement det_elimination(FieldMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return FieldElement(1L);
  bool flipped = false;
  FieldElement previous(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return FieldElement();
      std::swap(a[pivot], a[k]);
      flipped = !flipped;
    }
    const FieldElement& p = a[k][k];
    const FieldElement previous_inverse = previous.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = a[i][k].is_zero();
      for (std::size_t j = k + 1; j < n; ++j) {
        FieldElement value = a[i][j] * p;
        if (!lead_zero) value -= a[i][k] * a[k][j];
        a[i][j] = value * previous_inverse;
      }
    }
    previous = p;
  }
  FieldElement det = a[n - 1][n - 1];
  return flipped ? -det : det;
}

FieldElement det_elimination(const CosineMatrix& m) { return det_elimination(to_field_matrix(m)); }

Inertia inertia(FieldMatrix a) {
  Inertia result;
  std::vector<std::size_t> active(a.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  while (!active.empty()) {
    auto diagonal = std::find_if(active.begin(), active.end(),
                                 [&](std::size_t i) { return !a[i][i].is_zero(); });
    if (diagonal != active.end()) {
      const std::size_t p = *diagonal;
      (a[p][p].sign() > 0 ? result.positive : result.negative) += 1;
      active.erase(diagonal);
      const FieldElement inverse = a[p][p].inverse();
      for (std::size_t r : active) {
        if (a[r][p].is_zero()) continue;
        const FieldElement factor = a[r][p] * inverse;
        for (std::size_t c : active) {
          if (!a[p][c].is_zero()) a[r][c] -= factor * a[p][c];
        }
      }
      continue;
    }

    // Zero diagonal: look for a hyperbolic pair.
    std::size_t first = 0;
    std::size_t second = 0;
    bool found = false;
    for (std::size_t x = 0; x < active.size() && !found; ++x) {
      for (std::size_t y = x + 1; y < active.size() && !found; ++y) {
        if (!a[active[x]][active[y]].is_zero()) {
          first = active[x];
          second = active[y];
          found = true;
        }
      }
    }
    if (!found) {
      result.zero += active.size();
      break;
    }
    result.positive += 1;
    result.negative += 1;
    std::erase(active, first);
    std::erase(active, second);
    const FieldElement inverse = a[first][second].inverse();
    for (std::size_t r : active) {
      for (std::size_t c : active) {
        FieldElement update = a[r][first] * a[second][c] + a[r][second] * a[first][c];
        if (!update.is_zero()) a[r][c] -= update * inverse;
      }
    }
  }
  return result;
}

Inertia inertia(const CosineMatrix& m) { return inertia(to_field_matrix(m)); }

bool is_positive_definite(const CosineMatrix& m) {
  FieldMatrix a = to_field_matrix(m);
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].sign() <= 0) return false;
    if (k + 1 == n) break;
    const FieldElement inverse = a[k][k].inverse();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      const FieldElement factor = a[r][k] * inverse;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (!a[k][c].is_zero()) a[r][c] -= factor * a[k][c];
      }
    }
  }
  return true;
}

VertexSet CyclePath::support() const {
  VertexSet s;
  for (std::size_t v : vertices) s.insert(v);
  return s;
}

namespace {

// Johnson's circuit enumeration on the symmetric digraph of the label >= 3
// edges. Starting from each vertex s in turn, only vertices >= s are used, so
// every circuit is reported from its smallest vertex: the 2-circuits once per
// edge and longer circuits once per orientation.
class CircuitFinder {
 public:
  CircuitFinder(const CoxeterGraph& g, std::size_t budget) : g_(g), budget_(budget) {}

  std::vector<CyclePath> run() {
    const std::size_t n = g_.rank();
    adjacency_.resize(n);
    for (std::size_t v = 0; v < n; ++v) adjacency_[v] = g_.neighbours(v).elements();
    blocked_.assign(n, false);
    blocked_by_.assign(n, VertexSet());
    for (start_ = 0; start_ < n; ++start_) {
      for (std::size_t v = start_; v < n; ++v) {
        blocked_[v] = false;
        blocked_by_[v] = VertexSet();
      }
      circuit(start_);
    }
    return std::move(found_);
  }

 private:
  bool circuit(std::size_t v) {
    bool closed = false;
    stack_.push_back(v);
    blocked_[v] = true;
    for (std::size_t w : adjacency_[v]) {
      if (w < start_) continue;
      if (w == start_) {
        if (found_.size() >= budget_) throw CycleBudgetExceeded(budget_);
        found_.push_back(CyclePath{stack_});
        closed = true;
      } else if (!blocked_[w] && circuit(w)) {
        closed = true;
      }
    }
    if (closed) {
      unblock(v);
    } else {
      for (std::size_t w : adjacency_[v]) {
        if (w >= start_) blocked_by_[w].insert(v);
      }
    }
    stack_.pop_back();
    return closed;
  }

  void unblock(std::size_t u) {
    blocked_[u] = false;
    while (!blocked_by_[u].empty()) {
      const std::size_t w = blocked_by_[u].min();
      blocked_by_[u].erase(w);
      if (blocked_[w]) unblock(w);
    }
  }

  const CoxeterGraph& g_;
  std::size_t budget_;
  std::size_t start_ = 0;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<bool> blocked_;
  std::vector<VertexSet> blocked_by_;
  std::vector<std::size_t> stack_;
  std::vector<CyclePath> found_;
};

}  // namespace

std::vector<CyclePath> enumerate_cycles(const CoxeterGraph& g, std::size_t budget) {
  std::vector<CyclePath> cycles = CircuitFinder(g, budget).run();
  std::vector<std::pair<std::vector<std::size_t>, CyclePath>> keyed;
  keyed.reserve(cycles.size());
  for (auto& c : cycles) keyed.emplace_back(c.support().elements(), std::move(c));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second.vertices < y.second.vertices;
  });
  std::vector<CyclePath> out;
  out.reserve(keyed.size());
  for (auto& entry : keyed) out.push_back(std::move(entry.second));
  return out;
}

FieldElement cycle_weight(const CoxeterGraph& g, const CyclePath& path) {
  const auto& v = path.vertices;
  if (v.size() == 2) {
    const FieldElement w = edge_weight(g.label(v[0], v[1]));
    return w * w;
  }
  FieldElement product(1L);
  for (std::size_t i = 0; i < v.size(); ++i) {
    product *= edge_weight(g.label(v[i], v[(i + 1) % v.size()]));
  }
  return product;
}

FieldElement det_vinberg(const CoxeterGraph& g, std::size_t budget) {
  struct Term {
    VertexSet support;
    FieldElement weight;
  };
  // Cyclic paths grouped by their smallest vertex.
  std::vector<std::vector<Term>> by_vertex(g.rank());
  for (const auto& path : enumerate_cycles(g, budget)) {
    const VertexSet support = path.support();
    by_vertex[support.min()].push_back({support, cycle_weight(g, path)});
  }

  // Sum over disjoint collections inside `rest`, branching on whether the
  // smallest remaining vertex is left uncovered or covered by a cycle whose
  // smallest vertex it is. Memoized on the remaining vertex set.
  std::unordered_map<std::uint64_t, FieldElement> memo;
  std::function<FieldElement(VertexSet)> collections = [&](VertexSet rest) -> FieldElement {
    if (rest.empty()) return FieldElement(1L);
    if (auto it = memo.find(rest.bits()); it != memo.end()) return it->second;
    const std::size_t v = rest.min();
    FieldElement total = collections(rest.without(v));
    for (const Term& term : by_vertex[v]) {
      if (term.support.is_subset_of(rest)) total -= term.weight * collections(rest - term.support);
    }
    memo.emplace(rest.bits(), total);
    return total;
  };
  return collections(VertexSet::range(g.rank()));
}

FieldElement det_sigma_recurrence(std::size_t k) {
  if (k < 1) throw Error("det_sigma_recurrence requires k >= 1");
  const FieldElement r5 = FieldElement::sqrt(5);
  const FieldElement d1 = (FieldElement(2L) - r5) * FieldElement::rational(1, 16);
  const FieldElement h4 = (FieldElement(7L) - FieldElement(3L) * r5) * FieldElement::rational(1, 32);
  const FieldElement minus_cos = -cos_label(5);

  std::vector<FieldElement> d{FieldElement(1L), d1};
  for (std::size_t step = 1; step < k; ++step) {
    FieldElement next = d[step] * d1;
    mpz_class factorial = 1;
    mpz_class binomial = 1;
    for (std::size_t m = 1; m <= step; ++m) {
      factorial *= static_cast<unsigned long>(m);
      binomial = binomial * static_cast<unsigned long>(step - m + 1) / static_cast<unsigned long>(m);
      const mpq_class count(factorial * binomial);
      FieldElement term = FieldElement(count) * minus_cos.pow(static_cast<unsigned>(m + 1)) *
                          h4.pow(static_cast<unsigned>(m + 1)) * d[step - m];
      if (m % 2 == 1) {
        next -= term;
      } else {
        next += term;
      }
    }
    d.push_back(std::move(next));
  }
  return d[k];
}

FieldElement det_sigma_closed(std::size_t k) {
  if (k < 1) throw Error("det_sigma_closed requires k >= 1");
  mpz_class denominator = 1;
  denominator <<= 5 * k;
  mpq_class scale(mpz_class(static_cast<unsigned long>(k + 1)), denominator);
  scale.canonicalize();
  return (FieldElement(2L) - FieldElement::sqrt(5)).pow(static_cast<unsigned>(k)) *
         FieldElement(scale);
}

}  // namespace coxlab
