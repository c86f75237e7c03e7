#include "coxlab/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>

#include "coxlab/error.hpp"

namespace coxlab {
namespace {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

template <typename Int>
bool parse_integer(const std::string& token, Int& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

// Collects declared labels and reports conflicts consistently for both the
// text and JSON readers.
class GraphBuilder {
 public:
  void set_rank(std::size_t line, long long rank) {
    if (rank < 1) throw ParseError(line, "rank must be a positive integer");
    if (rank > static_cast<long long>(VertexSet::kMaxVertices)) {
      throw ParseError(line, "rank " + std::to_string(rank) + " exceeds the supported maximum of " +
                                 std::to_string(VertexSet::kMaxVertices));
    }
    graph_ = CoxeterGraph(static_cast<std::size_t>(rank));
  }

  void add_edge(std::size_t line, long long i, long long j, Label m) {
    const auto n = static_cast<long long>(graph_.rank());
    if (i < 1 || i > n || j < 1 || j > n) {
      throw VertexOutOfRange(line, "vertex out of range 1.." + std::to_string(n));
    }
    if (i == j) throw ParseError(line, "an edge needs two distinct vertices");
    if (m < 2) throw InvalidLabel(line, "label must be at least 2, got " + std::to_string(m));
    auto a = static_cast<std::size_t>(std::min(i, j) - 1);
    auto b = static_cast<std::size_t>(std::max(i, j) - 1);
    if (!declared_.insert({a, b}).second && graph_.label(a, b) != m) {
      throw DuplicateEdge(line, "pair " + std::to_string(a + 1) + " " + std::to_string(b + 1) +
                                    " declared with conflicting labels");
    }
    graph_.set_label(a, b, m);
  }

  CoxeterGraph take() { return std::move(graph_); }

 private:
  CoxeterGraph graph_;
  std::set<std::pair<std::size_t, std::size_t>> declared_;
};

Label parse_label_token(std::size_t line, const std::string& token) {
  if (token == "inf") return kInfinity;
  long long m = 0;
  if (!parse_integer(token, m)) throw ParseError(line, "malformed label '" + token + "'");
  if (m < 2) throw InvalidLabel(line, "label must be at least 2, got " + token);
  if (m >= kInfinity) throw InvalidLabel(line, "label too large: " + token);
  return static_cast<Label>(m);
}

}  // namespace

std::string label_to_string(Label m) { return m == kInfinity ? "inf" : std::to_string(m); }

VertexSet::VertexSet(std::initializer_list<std::size_t> vertices) {
  for (std::size_t v : vertices) insert(v);
}

VertexSet VertexSet::range(std::size_t n) {
  if (n > kMaxVertices) throw Error("vertex sets hold at most 64 vertices");
  return VertexSet(n == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

void VertexSet::insert(std::size_t v) {
  if (v >= kMaxVertices) throw Error("vertex index " + std::to_string(v) + " out of range");
  bits_ |= std::uint64_t{1} << v;
}

std::vector<std::size_t> VertexSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t v : elements()) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

CoxeterGraph::CoxeterGraph(std::size_t rank)
    : rank_(rank), labels_(rank * rank, kCommuting), names_(rank) {
  if (rank > VertexSet::kMaxVertices) throw Error("graphs hold at most 64 vertices");
}

Label CoxeterGraph::label(std::size_t i, std::size_t j) const {
  return labels_[pair_index(rank_, i, j)];
}

void CoxeterGraph::set_label(std::size_t i, std::size_t j, Label m) {
  if (i >= rank_ || j >= rank_) throw Error("vertex index out of range");
  if (i == j) throw Error("self pairs carry no label");
  if (m < 2) throw Error("label must be at least 2");
  labels_[pair_index(rank_, i, j)] = m;
  labels_[pair_index(rank_, j, i)] = m;
}

VertexSet CoxeterGraph::neighbours(std::size_t v) const {
  VertexSet out;
  for (std::size_t u = 0; u < rank_; ++u) {
    if (adjacent(v, u)) out.insert(u);
  }
  return out;
}

std::vector<CoxeterGraph::Edge> CoxeterGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = i + 1; j < rank_; ++j) {
      if (label(i, j) >= 3) out.push_back({i, j, label(i, j)});
    }
  }
  return out;
}

CoxeterGraph parse(const std::string& text) {
  GraphBuilder builder;
  bool have_rank = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens[0] == "rank") {
      if (have_rank) throw ParseError(line_no, "duplicate rank line");
      long long n = 0;
      if (tokens.size() != 2 || !parse_integer(tokens[1], n)) {
        throw ParseError(line_no, "expected 'rank N'");
      }
      builder.set_rank(line_no, n);
      have_rank = true;
    } else if (tokens[0] == "edge") {
      if (!have_rank) throw ParseError(line_no, "'rank N' must precede edges");
      long long i = 0;
      long long j = 0;
      if (tokens.size() != 4 || !parse_integer(tokens[1], i) || !parse_integer(tokens[2], j)) {
        throw ParseError(line_no, "expected 'edge I J M'");
      }
      builder.add_edge(line_no, i, j, parse_label_token(line_no, tokens[3]));
    } else {
      throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (!have_rank) throw ParseError(line_no + 1, "missing 'rank N' line");
  return builder.take();
}

std::string serialize(const CoxeterGraph& g) {
  std::string out = "rank " + std::to_string(g.rank()) + "\n";
  for (const auto& e : g.edges()) {
    out += "edge " + std::to_string(e.i + 1) + " " + std::to_string(e.j + 1) + " " +
           label_to_string(e.m) + "\n";
  }
  return out;
}

std::string to_json(const CoxeterGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    nlohmann::json m = e.m == kInfinity ? nlohmann::json("inf") : nlohmann::json(e.m);
    edges.push_back({e.i + 1, e.j + 1, m});
  }
  nlohmann::json doc = {{"rank", g.rank()}, {"edges", edges}};
  return doc.dump();
}

CoxeterGraph from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "graph JSON must be an object");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) {
    throw ParseError(0, "\"rank\" must be an integer");
  }
  GraphBuilder builder;
  builder.set_rank(0, doc["rank"].get<long long>());
  if (doc.contains("edges")) {
    const auto& edges = doc["edges"];
    if (!edges.is_array()) throw ParseError(0, "\"edges\" must be an array");
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError(0, "each edge must be [i, j, m]");
      }
      Label m = 0;
      if (e[2].is_string()) {
        m = parse_label_token(0, e[2].get<std::string>());
      } else if (e[2].is_number_integer()) {
        const auto value = e[2].get<long long>();
        if (value < 2) throw InvalidLabel(0, "label must be at least 2, got " + std::to_string(value));
        if (value >= kInfinity) throw InvalidLabel(0, "label too large");
        m = static_cast<Label>(value);
      } else {
        throw ParseError(0, "edge label must be an integer or \"inf\"");
      }
      builder.add_edge(0, e[0].get<long long>(), e[1].get<long long>(), m);
    }
  }
  return builder.take();
}

CoxeterGraph sigma_family(std::size_t k) {
  if (k < 1) throw Error("sigma_family requires k >= 1");
  CoxeterGraph g(5 * k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t base = 5 * c;
    g.set_label(base + 0, base + 1, 3);
    g.set_label(base + 1, base + 2, 3);
    g.set_label(base + 2, base + 3, 3);
    g.set_label(base + 3, base + 4, 5);
    for (std::size_t other = 0; other < c; ++other) g.set_label(5 * other, base, 5);
  }
  return g;
}

VertexSet sigma_hubs(std::size_t k) {
  VertexSet hubs;
  for (std::size_t c = 0; c < k; ++c) hubs.insert(5 * c);
  return hubs;
}

CoxeterGraph induced_subgraph(const CoxeterGraph& g, VertexSet s) {
  if (s.empty()) throw EmptySubset();
  if (!s.is_subset_of(VertexSet::range(g.rank()))) throw Error("vertex set exceeds graph rank");
  const auto vertices = s.elements();
  CoxeterGraph out(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    const auto& name = g.vertex_name(vertices[a]);
    out.set_vertex_name(a, name.empty() ? std::to_string(vertices[a] + 1) : name);
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      out.set_label(a, b, g.label(vertices[a], vertices[b]));
    }
  }
  return out;
}

bool unjoined(const CoxeterGraph& g, VertexSet a, VertexSet b) {
  if (a.empty() || b.empty()) throw EmptySubset();
  if (a.intersects(b)) throw OverlappingSets();
  for (std::size_t x : a.elements()) {
    if (g.neighbours(x).intersects(b)) return false;
  }
  return true;
}

std::vector<VertexSet> components(const CoxeterGraph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet remaining = s;
  while (!remaining.empty()) {
    VertexSet component{remaining.min()};
    VertexSet frontier = component;
    while (!frontier.empty()) {
      const std::size_t v = frontier.min();
      frontier.erase(v);
      const VertexSet fresh = (g.neighbours(v) & remaining) - component;
      component = component | fresh;
      frontier = frontier | fresh;
    }
    out.push_back(component);
    remaining = remaining - component;
  }
  return out;
}

std::vector<VertexSet> components(const CoxeterGraph& g) {
  return components(g, VertexSet::range(g.rank()));
}

bool is_connected(const CoxeterGraph& g, VertexSet s) {
  return !s.empty() && components(g, s).size() == 1;
}

CoxeterGraph permute(const CoxeterGraph& g, const std::vector<std::size_t>& perm) {
  CoxeterGraph out(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    out.set_vertex_name(perm[i], g.vertex_name(i));
    for (std::size_t j = i + 1; j < g.rank(); ++j) out.set_label(perm[i], perm[j], g.label(i, j));
  }
  return out;
}

}  // namespace coxlab
