#include "report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace coxlab::cli {

bool AnalysisReport::determinant_sign_consistent() const {
  if (inertia.zero != 0) return determinant.is_zero();
  const int expected = inertia.negative % 2 == 0 ? 1 : -1;
  return determinant.sign() == expected;
}

AnalysisReport analyze(const CoxeterGraph& g, MatrixMode mode, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport report;
  report.graph = g;
  report.mode = mode;
  const CosineMatrix m = cosine_matrix(g, mode);
  report.determinant = det_elimination(m);
  report.inertia = inertia(m);
  report.type = group_type(g, mode);
  report.hyperbolicity = is_word_hyperbolic(g, options);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json vertex_set_json(VertexSet s) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t v : s.elements()) out.push_back(v + 1);
  return out;
}

nlohmann::json inertia_json(const Inertia& in) {
  return {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}};
}

nlohmann::json value_json(const FieldElement& value) {
  return {{"exact", value.to_string()}, {"decimal", value.to_decimal(kDecimalDigits)}};
}

nlohmann::json hyperbolicity_json(const HyperbolicityReport& report) {
  nlohmann::json witness = nullptr;
  if (report.witness) {
    if (const auto* affine = std::get_if<AffineWitness>(&*report.witness)) {
      witness = {{"type", "affine"}, {"vertices", vertex_set_json(affine->vertices)}};
    } else {
      const auto& pair = std::get<PairWitness>(*report.witness);
      witness = {{"type", "pair"},
                 {"first", vertex_set_json(pair.first)},
                 {"second", vertex_set_json(pair.second)}};
    }
  }
  return {{"verdict", to_string(report.verdict)},
          {"witness", witness},
          {"paper_mode_applicable", report.paper_mode_applicable},
          {"paper_mode_applicable_rank3", report.paper_mode_applicable_rank3},
          {"subsets_examined", report.subsets_examined},
          {"minimal_infinite_subsets", report.minimal_infinite_count}};
}

nlohmann::json to_json(const AnalysisReport& report) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& c : report.type.components) {
    components.push_back({{"vertices", vertex_set_json(c.vertices)},
                          {"kind", to_string(c.kind)},
                          {"family", c.family ? nlohmann::json(c.family->to_string()) : nlohmann::json(nullptr)},
                          {"inertia", inertia_json(c.inertia)}});
  }
  nlohmann::json out = {
      {"mode", report.mode.is_numeric() ? "numeric" : "exact"},
      {"graph", nlohmann::json::parse(to_json(report.graph))},
      {"labeled_pairs", report.graph.edges().size()},
      {"determinant", value_json(report.determinant)},
      {"inertia", inertia_json(report.inertia)},
      {"determinant_sign_consistent", report.determinant_sign_consistent()},
      {"type", {{"kind", to_string(report.type.kind)}, {"components", components}}},
      {"hyperbolicity", hyperbolicity_json(report.hyperbolicity)},
  };
  if (report.mode.is_numeric()) out["numeric_digits"] = report.mode.numeric_digits;
  return out;
}

std::string inertia_string(const Inertia& in) {
  return "(" + std::to_string(in.positive) + ", " + std::to_string(in.negative) + ", " +
         std::to_string(in.zero) + ")";
}

std::string describe_witness(const HyperbolicityReport& report) {
  if (!report.witness) return "none";
  if (const auto* affine = std::get_if<AffineWitness>(&*report.witness)) {
    return "affine " + affine->vertices.to_string();
  }
  const auto& pair = std::get<PairWitness>(*report.witness);
  return "pair " + pair.first.to_string() + " " + pair.second.to_string();
}

std::string family_summary(const TypeVerdict& verdict) {
  std::string out;
  for (const auto& c : verdict.components) {
    if (!c.family) return "none";
    if (!out.empty()) out += "x";
    out += c.family->to_string();
  }
  return out.empty() ? "none" : out;
}

std::string render_text(const AnalysisReport& report) {
  std::ostringstream out;
  const auto edges = report.graph.edges();
  out << "graph: rank " << report.graph.rank() << ", " << edges.size() << " labeled pairs\n";
  if (!edges.empty()) {
    out << "  edges:";
    for (const auto& e : edges) out << " " << e.i + 1 << "-" << e.j + 1 << ":" << label_to_string(e.m);
    out << "\n";
  }
  out << "mode: "
      << (report.mode.is_numeric() ? "numeric (" + std::to_string(report.mode.numeric_digits) + " digits)"
                                   : std::string("exact"))
      << "\n";
  out << "determinant: " << report.determinant.to_string() << "  (~ "
      << report.determinant.to_decimal(kDecimalDigits) << ")\n";
  out << "inertia: " << inertia_string(report.inertia)
      << (report.determinant_sign_consistent() ? "" : "  [sign mismatch]") << "\n";
  out << "type: " << to_string(report.type.kind) << "\n";
  for (const auto& c : report.type.components) {
    out << "  component " << c.vertices.to_string() << ": " << to_string(c.kind) << ", family "
        << (c.family ? c.family->to_string() : "none") << ", inertia " << inertia_string(c.inertia) << "\n";
  }
  const auto& h = report.hyperbolicity;
  out << "hyperbolicity: " << to_string(h.verdict) << "\n";
  out << "  witness: " << describe_witness(h) << "\n";
  out << "  paper_mode_applicable: " << (h.paper_mode_applicable ? "true" : "false") << "\n";
  out << "  paper_mode_applicable_rank3: " << (h.paper_mode_applicable_rank3 ? "true" : "false") << "\n";
  out << "  subsets examined: " << h.subsets_examined
      << ", minimal infinite subsets: " << h.minimal_infinite_count << "\n";
  char timing[64];
  std::snprintf(timing, sizeof timing, "time: %.3f s\n", report.seconds);
  out << timing;
  return out.str();
}

}  // namespace coxlab::cli
