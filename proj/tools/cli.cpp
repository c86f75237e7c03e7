#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "coxlab/error.hpp"
#include "report.hpp"

namespace coxlab::cli {
namespace {

struct UsageError : Error {
  using Error::Error;
};

struct EnumerationLimit : Error {
  using Error::Error;
};

CoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(text);
  return parse(text);
}

MatrixMode mode_from(const std::optional<int>& numeric_digits) {
  if (!numeric_digits) return MatrixMode::exact();
  if (*numeric_digits < 1) throw UsageError("--numeric needs a positive digit count");
  return MatrixMode::numeric(*numeric_digits);
}

std::string value_line(const FieldElement& value) {
  return value.to_string() + "  (~ " + value.to_decimal(kDecimalDigits) + ")";
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const std::string& path, bool json, const std::optional<int>& numeric,
                std::ostream& out) {
  const CoxeterGraph g = load_graph(path);
  const MatrixMode mode = mode_from(numeric);
  const AnalysisReport report = analyze(g, mode, {rank_cap_from_environment(), mode});
  if (json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << render_text(report);
  }
  return kOk;
}

// ----------------------------------------------------------------- family

int cmd_family(long long k, bool json, std::ostream& out) {
  if (k < 1) throw UsageError("family needs --k >= 1");
  const std::size_t cap = rank_cap_from_environment();
  const auto copies = static_cast<std::size_t>(k);
  if (5 * copies > cap) throw RankCapExceeded(5 * copies, cap);

  const CoxeterGraph g = sigma_family(copies);
  const FieldElement by_elimination = det_elimination(cosine_matrix(g));
  const FieldElement by_cycles = det_vinberg(g);
  const FieldElement by_recurrence = det_sigma_recurrence(copies);
  const FieldElement by_closed_form = det_sigma_closed(copies);
  const Inertia in = inertia(cosine_matrix(g));
  const HyperbolicityReport hyperbolicity = is_word_hyperbolic(g, {cap, {}});

  const bool agree = by_elimination == by_cycles && by_cycles == by_recurrence &&
                     by_recurrence == by_closed_form;
  const Inertia expected{4 * copies, copies, 0};
  const bool pass = agree && in == expected;

  if (json) {
    nlohmann::json doc = {
        {"k", copies},
        {"rank", g.rank()},
        {"hubs", vertex_set_json(sigma_hubs(copies))},
        {"determinant",
         {{"elimination", value_json(by_elimination)},
          {"vinberg", value_json(by_cycles)},
          {"recurrence", value_json(by_recurrence)},
          {"closed_form", value_json(by_closed_form)},
          {"agree", agree}}},
        {"inertia", inertia_json(in)},
        {"expected_inertia", inertia_json(expected)},
        {"hyperbolicity", hyperbolicity_json(hyperbolicity)},
        {"pass", pass},
    };
    out << doc.dump(2) << "\n";
  } else {
    out << "family k=" << copies << ": rank " << g.rank() << ", hubs "
        << sigma_hubs(copies).to_string() << "\n";
    out << "det (elimination): " << value_line(by_elimination) << "\n";
    out << "det (vinberg):     " << value_line(by_cycles) << "\n";
    out << "det (recurrence):  " << value_line(by_recurrence) << "\n";
    out << "det (closed form): " << value_line(by_closed_form) << "\n";
    out << "inertia: " << inertia_string(in) << "\n";
    out << "hyperbolicity: " << to_string(hyperbolicity.verdict)
        << " (paper_mode_applicable = " << (hyperbolicity.paper_mode_applicable ? "true" : "false")
        << ")\n";
    out << (pass ? "PASS" : "FAIL") << ": determinants " << (agree ? "agree" : "DISAGREE")
        << ", inertia " << inertia_string(in) << (in == expected ? " = " : " != ")
        << inertia_string(expected) << "\n";
  }
  return pass ? kOk : kFailure;
}

// -------------------------------------------------------------------- det

int cmd_det(const std::string& path, const std::string& method, std::size_t budget,
            std::ostream& out) {
  const CoxeterGraph g = load_graph(path);
  std::optional<FieldElement> by_elimination;
  std::optional<FieldElement> by_cycles;
  if (method == "elim" || method == "both") {
    by_elimination = det_elimination(cosine_matrix(g));
    out << "elimination: " << value_line(*by_elimination) << "\n";
  }
  if (method == "vinberg" || method == "both") {
    by_cycles = det_vinberg(g, budget);
    out << "vinberg: " << value_line(*by_cycles) << "\n";
  }
  if (by_elimination && by_cycles) {
    const bool agree = *by_elimination == *by_cycles;
    out << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? kOk : kFailure;
  }
  return kOk;
}

// ------------------------------------------------------------- hyperbolic

int cmd_hyperbolic(const std::string& path, std::ostream& out) {
  const CoxeterGraph g = load_graph(path);
  const HyperbolicityReport report = is_word_hyperbolic(g, {rank_cap_from_environment(), {}});
  out << "verdict: " << to_string(report.verdict) << "\n";
  out << "witness: " << describe_witness(report) << "\n";
  out << "paper_mode_applicable: " << (report.paper_mode_applicable ? "true" : "false") << "\n";
  out << "paper_mode_applicable_rank3: " << (report.paper_mode_applicable_rank3 ? "true" : "false") << "\n";
  out << "subsets examined: " << report.subsets_examined
      << ", minimal infinite subsets: " << report.minimal_infinite_count << "\n";
  return kOk;
}

// ----------------------------------------------------------------- census

inline constexpr std::size_t kCensusMaxRank = 7;

std::vector<Label> parse_label_list(const std::string& csv) {
  std::vector<Label> labels;
  std::stringstream in(csv);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token == "inf") {
      labels.push_back(kInfinity);
      continue;
    }
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.empty()) throw UsageError("malformed label '" + token + "'");
    if (m < 2) throw UsageError("labels must be at least 2");
    labels.push_back(m);
  }
  if (labels.empty()) throw UsageError("--labels is empty");
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

struct CensusRow {
  bool kept = false;
  std::string line;
  TypeKind kind = TypeKind::Finite;
  Verdict verdict = Verdict::Hyperbolic;
};

CensusRow census_row(std::size_t rank, const std::vector<Label>& labels, std::uint64_t index,
                     bool connected_only, MatrixMode mode, std::size_t cap) {
  CoxeterGraph g(rank);
  std::string id = "r" + std::to_string(rank) + ":";
  bool first = true;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      const Label m = labels[index % labels.size()];
      index /= labels.size();
      g.set_label(i, j, m);
      id += (first ? "" : ".") + label_to_string(m);
      first = false;
    }
  }
  CensusRow row;
  if (connected_only && !is_connected(g, VertexSet::range(rank))) return row;
  row.kept = true;
  const TypeVerdict type = group_type(g, mode);
  const FieldElement det = det_elimination(cosine_matrix(g, mode));
  const HyperbolicityReport h = is_word_hyperbolic(g, {cap, mode});
  row.kind = type.kind;
  row.verdict = h.verdict;
  row.line = id + "," + to_string(type.kind) + "," + family_summary(type) + "," +
             det.to_decimal(kDecimalDigits) + "," + std::to_string(type.inertia.positive) + "," +
             std::to_string(type.inertia.negative) + "," + std::to_string(type.inertia.zero) + "," +
             to_string(h.verdict);
  return row;
}

int cmd_census(long long rank, const std::string& label_csv, bool connected_only,
               const std::optional<int>& numeric, unsigned long long limit, std::ostream& out) {
  if (rank < 1) throw UsageError("--rank must be positive");
  const auto n = static_cast<std::size_t>(rank);
  if (n > kCensusMaxRank) {
    throw EnumerationLimit("exhaustive census supports rank <= " + std::to_string(kCensusMaxRank));
  }
  const std::vector<Label> labels = parse_label_list(label_csv);
  const MatrixMode mode = mode_from(numeric);
  if (!mode.is_numeric()) {
    for (Label m : labels) edge_weight(m);  // throws UnsupportedLabel early
  }

  const std::size_t pairs = n * (n - 1) / 2;
  unsigned long long total = 1;
  for (std::size_t p = 0; p < pairs; ++p) {
    if (total > limit / labels.size()) {
      throw EnumerationLimit("census exceeds the enumeration limit of " + std::to_string(limit));
    }
    total *= labels.size();
  }

  const std::size_t cap = rank_cap_from_environment();
  out << "graph_id,kind,family,det,n_plus,n_minus,n_zero,hyperbolic\n";

  std::map<std::pair<std::string, std::string>, std::size_t> tally;
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kBlock = 4096;
  for (std::uint64_t begin = 0; begin < total; begin += kBlock) {
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + kBlock);
    std::vector<CensusRow> rows(end - begin);
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t i = begin + w; i < end; i += workers) {
            rows[i - begin] = census_row(n, labels, i, connected_only, mode, cap);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
    for (const auto& row : rows) {
      if (!row.kept) continue;
      out << row.line << "\n";
      ++tally[{to_string(row.kind), to_string(row.verdict)}];
    }
  }
  out << "# summary: kind,hyperbolic,count\n";
  for (const auto& [key, count] : tally) {
    out << "# " << key.first << "," << key.second << "," << count << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coxlab: exact analysis of Coxeter graphs"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  std::optional<int> numeric;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for a graph file");
  analyze_cmd->add_option("file", path, "Graph in text or JSON format")->required();
  analyze_cmd->add_flag("--json", json, "Emit JSON");
  analyze_cmd->add_option("--numeric", numeric, "Approximate cos(pi/m) to this many decimals");

  long long k = 0;
  bool family_json = false;
  auto* family_cmd = app.add_subcommand("family", "Check the Sigma_k family");
  family_cmd->add_option("--k", k, "Number of copies")->required();
  family_cmd->add_flag("--json", family_json, "Emit JSON");

  std::string det_path;
  std::string method = "both";
  std::size_t budget = kDefaultCycleBudget;
  auto* det_cmd = app.add_subcommand("det", "Determinant by elimination and/or cycle expansion");
  det_cmd->add_option("file", det_path, "Graph file")->required();
  det_cmd->add_option("--method", method, "elim, vinberg or both")
      ->check(CLI::IsMember({"elim", "vinberg", "both"}));
  det_cmd->add_option("--cycle-budget", budget, "Maximum number of cyclic paths");

  std::string hyperbolic_path;
  auto* hyperbolic_cmd = app.add_subcommand("hyperbolic", "Word-hyperbolicity verdict");
  hyperbolic_cmd->add_option("file", hyperbolic_path, "Graph file")->required();

  long long census_rank = 0;
  std::string census_labels;
  bool connected_only = false;
  std::optional<int> census_numeric;
  unsigned long long limit = 1'000'000;
  auto* census_cmd = app.add_subcommand("census", "Exhaustive table over label assignments");
  census_cmd->add_option("--rank", census_rank, "Rank")->required();
  census_cmd->add_option("--labels", census_labels, "Comma-separated labels, e.g. 2,3,5")->required();
  census_cmd->add_flag("--connected", connected_only, "Only connected graphs");
  census_cmd->add_option("--numeric", census_numeric, "Approximate cos(pi/m) to this many decimals");
  census_cmd->add_option("--limit", limit, "Maximum number of graphs to enumerate");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageOrParse;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(path, json, numeric, out);
    if (*family_cmd) return cmd_family(k, family_json, out);
    if (*det_cmd) return cmd_det(det_path, method, budget, out);
    if (*hyperbolic_cmd) return cmd_hyperbolic(hyperbolic_path, out);
    if (*census_cmd) {
      return cmd_census(census_rank, census_labels, connected_only, census_numeric, limit, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageOrParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageOrParse;
  } catch (const UnsupportedLabel& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupportedLabel;
  } catch (const RankCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kRankCap;
  } catch (const EnumerationLimit& e) {
    err << "error: " << e.what() << "\n";
    return kRankCap;
  } catch (const CycleBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCycleBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsageOrParse;
}

}  // namespace coxlab::cli
