#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "coxlab/classify.hpp"
#include "coxlab/field.hpp"
#include "coxlab/graph.hpp"
#include "coxlab/hyperbolicity.hpp"
#include "coxlab/matrix.hpp"

namespace coxlab::cli {

inline constexpr int kDecimalDigits = 6;

struct AnalysisReport {
  CoxeterGraph graph;
  MatrixMode mode;
  FieldElement determinant;
  Inertia inertia;
  TypeVerdict type;
  HyperbolicityReport hyperbolicity;
  double seconds = 0.0;

  /// sign(det) == (-1)^(n-) whenever the form is nondegenerate.
  bool determinant_sign_consistent() const;
};

AnalysisReport analyze(const CoxeterGraph& g, MatrixMode mode, const SearchOptions& options);

nlohmann::json vertex_set_json(VertexSet s);
nlohmann::json inertia_json(const Inertia& in);
nlohmann::json value_json(const FieldElement& value);
nlohmann::json hyperbolicity_json(const HyperbolicityReport& report);

/// JSON body; contains no timing so repeated runs are byte-identical.
nlohmann::json to_json(const AnalysisReport& report);
std::string render_text(const AnalysisReport& report);

std::string describe_witness(const HyperbolicityReport& report);
std::string inertia_string(const Inertia& in);
/// "A_1xH_4" when every component is identified, otherwise "none".
std::string family_summary(const TypeVerdict& verdict);

}  // namespace coxlab::cli
