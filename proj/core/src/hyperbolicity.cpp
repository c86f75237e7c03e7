#include "coxlab/hyperbolicity.hpp"

namespace coxlab {

std::string to_string(Verdict verdict) {
  return verdict == Verdict::Hyperbolic ? "Hyperbolic" : "NotHyperbolic";
}

HyperbolicityReport is_word_hyperbolic(const CoxeterGraph& g, const SearchOptions& options) {
  const SubsetSearchResult search = search_minimal_infinite(g, options);
  HyperbolicityReport report;
  report.subsets_examined = search.examined;
  report.minimal_infinite_count = search.minimal.size();
  report.numeric = options.mode.is_numeric();

  for (const auto& m : search.minimal) {
    if (m.kind == TypeKind::Affine) {
      report.paper_mode_applicable = false;
      if (m.vertices.size() >= 3) {
        report.paper_mode_applicable_rank3 = false;
        if (!report.witness) report.witness = AffineWitness{m.vertices};
      }
    }
  }

  if (!report.witness) {
    const auto& minimal = search.minimal;
    for (std::size_t a = 0; a < minimal.size() && !report.witness; ++a) {
      for (std::size_t b = a + 1; b < minimal.size(); ++b) {
        const VertexSet x = minimal[a].vertices;
        const VertexSet y = minimal[b].vertices;
        if (!x.intersects(y) && unjoined(g, x, y)) {
          report.witness = PairWitness{x, y};
          break;
        }
      }
    }
  }

  report.verdict = report.witness ? Verdict::NotHyperbolic : Verdict::Hyperbolic;
  return report;
}

}  // namespace coxlab
