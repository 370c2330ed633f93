#include "starr/search.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "starr/corpus.hpp"
#include "starr/io.hpp"
#include "starr/stalg.hpp"

namespace starr {

using nlohmann::json;

namespace {

std::vector<Arrangement> random_arrangements(const SearchConfig& cfg) {
  const auto* q = FieldDescriptor::rational();
  std::mt19937_64 rng(cfg.seed);
  const auto span = static_cast<std::uint64_t>(2 * cfg.coefficient_bound + 1);
  std::vector<Arrangement> out;
  for (int k = 0; k < cfg.count; ++k) {
    const int size = cfg.min_size + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_size - cfg.min_size + 1));
    std::vector<ScalarVector> normals;
    int attempts = 0;
    while (static_cast<int>(normals.size()) < size) {
      if (++attempts > 100000) throw std::invalid_argument("coefficient bound too small for the requested size");
      ScalarVector v;
      bool zero = true;
      for (int i = 0; i < cfg.dimension; ++i) {
        const long c = static_cast<long>(rng() % span) - cfg.coefficient_bound;
        zero = zero && c == 0;
        v.emplace_back(q, c);
      }
      if (zero) continue;
      if (Arrangement(q, cfg.dimension, normals).index_of(v) >= 0) continue;
      normals.push_back(std::move(v));
    }
    out.emplace_back(q, cfg.dimension, normals);
  }
  return out;
}

std::vector<Arrangement> subarrangements(const SearchConfig& cfg) {
  const Arrangement parent = example(cfg.parent).arrangement;
  std::vector<Arrangement> out;
  for (int size = cfg.min_size; size <= std::min(cfg.max_size, parent.size()); ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      if (cfg.count > 0 && static_cast<int>(out.size()) >= cfg.count) return out;
      std::vector<ScalarVector> normals;
      for (int i : pick) normals.push_back(parent.normals()[static_cast<std::size_t>(i)]);
      out.emplace_back(parent.field(), parent.dimension(), normals, parent.variable_names());
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == parent.size() - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

bool selected(const SearchConfig& cfg, const std::string& which) {
  return cfg.conjectures == "all" || cfg.conjectures == which;
}

json normals_json(const Arrangement& a) {
  json rows = json::array();
  for (const auto& v : a.normals()) {
    json row = json::array();
    for (const auto& c : v) row.push_back(json::parse(render_scalar_json(c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

SearchLog conjecture_search(const SearchConfig& cfg) {
  if (cfg.generator != "random" && cfg.generator != "subarrangements")
    throw std::invalid_argument("generator must be 'random' or 'subarrangements'");
  if (cfg.conjectures != "all" && cfg.conjectures != "factorable" && cfg.conjectures != "palindromic" &&
      cfg.conjectures != "socle")
    throw std::invalid_argument("conjectures must be all, factorable, palindromic or socle");
  if (cfg.min_size < 0 || cfg.max_size < cfg.min_size) throw std::invalid_argument("bad size bounds");
  if (cfg.count < 0) throw std::invalid_argument("count must be nonnegative");
  if (cfg.eta_degree < 2) throw std::invalid_argument("eta degree must be at least 2");
  if (cfg.generator == "random") {
    if (cfg.dimension < 1 || cfg.dimension > kMaxVars) throw std::invalid_argument("dimension out of range");
    if (cfg.coefficient_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  } else if (cfg.parent.empty()) {
    throw std::invalid_argument("subarrangement search needs a parent example");
  }

  const auto arrangements = cfg.generator == "random" ? random_arrangements(cfg) : subarrangements(cfg);
  SearchLog log;
  for (std::size_t k = 0; k < arrangements.size(); ++k) {
    SearchRecord rec(static_cast<int>(k), arrangements[k]);
    const Arrangement& a = rec.arrangement;
    json line = {{"index", rec.index}, {"size", a.size()}, {"hyperplanes", normals_json(a)}};
    std::optional<EtaSpec> eta;
    try {
      eta = default_eta(a, cfg.eta_degree);
    } catch (const EtaError& e) {
      rec.skipped = e.what();
    }
    if (eta) {
      const DerModule d1 = log_derivations(a, 1);
      rec.free = is_free(a, d1).free;
      const STAlgebra st = st_algebra(a, eta->eta, d1);
      const AnalysisReport rep = analyze(st);
      rec.hilbert_vector = rep.hilbert_vector;
      rec.palindromic = rep.palindromic;
      rec.quantum_factors = rep.quantum_factors;
      rec.top_degree = rep.top_degree;
      rec.expected_top_degree = rep.expected_top_degree;
      rec.socle_conjecture = rep.socle_degree_conjecture;
      rec.socle_degrees = rep.socle_degrees;
      if (selected(cfg, "factorable") && rec.free != rec.quantum_factors.has_value())
        rec.violations.push_back("factorable");
      if (selected(cfg, "palindromic") && rec.free != rec.palindromic) rec.violations.push_back("palindromic");
      if (selected(cfg, "socle") && !rec.socle_conjecture) rec.violations.push_back("socle");

      line["eta"] = eta->eta.to_string(a.variable_names());
      line["free"] = rec.free;
      line["hilbert"] = rec.hilbert_vector;
      line["palindromic"] = rec.palindromic;
      line["factorable"] = rec.quantum_factors.has_value();
      line["quantum_factors"] = rec.quantum_factors ? json(*rec.quantum_factors) : json(nullptr);
      line["top_degree"] = rec.top_degree;
      line["expected_top_degree"] = rec.expected_top_degree;
      line["socle_degrees"] = rec.socle_degrees;
      line["socle_conjecture"] = rec.socle_conjecture;
      line["violations"] = rec.violations;

      if (!rec.violations.empty() && !cfg.counterexample_dir.empty()) {
        std::filesystem::create_directories(cfg.counterexample_dir);
        const std::string file = (std::filesystem::path(cfg.counterexample_dir) /
                                  ("counterexample-" + std::to_string(cfg.seed) + "-" + std::to_string(k) + ".json"))
                                     .string();
        std::ofstream(file) << render_arrangement_json(arrangement_file_from(a, eta->eta)) << "\n";
        rec.counterexample_file = file;
        line["counterexample_file"] = file;
      }
      ++log.examined;
      if (!rec.violations.empty()) ++log.violations;
    } else {
      line["skipped"] = rec.skipped;
      ++log.skipped;
    }
    log.text += line.dump() + "\n";
    log.records.push_back(std::move(rec));
  }
  json summary = {{"generator", cfg.generator}, {"seed", cfg.seed},         {"examined", log.examined},
                  {"skipped", log.skipped},     {"violations", log.violations}, {"conjectures", cfg.conjectures}};
  if (cfg.generator == "subarrangements") summary["parent"] = cfg.parent;
  log.text += json{{"summary", summary}}.dump() + "\n";
  return log;
}

}  // namespace starr
