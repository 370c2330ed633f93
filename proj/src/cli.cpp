#include "starr/cli.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "starr/corpus.hpp"
#include "starr/coxeter.hpp"
#include "starr/io.hpp"
#include "starr/search.hpp"
#include "starr/stalg.hpp"

namespace starr {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  explicit Report(std::string c) : command(std::move(c)) {}

  std::string command;
  ojson input = ojson::object();
  ojson results = ojson::object();
  std::vector<Check> checks;

  void check(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

ojson mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return ojson(z.get_si());
  return ojson(z.get_str());
}

ojson intpoly_json(const IntPoly& p) {
  ojson arr = ojson::array();
  for (const auto& c : p.coeffs()) arr.push_back(mpz_json(c));
  if (arr.empty()) arr.push_back(0);
  return arr;
}

std::string list_string(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// pi(t) = prod (1 + d t) with integer d >= 0, when it splits that way.
std::optional<std::vector<int>> linear_factors(IntPoly p) {
  std::vector<int> out;
  const int deg = p.degree();
  for (int k = 0; k < deg; ++k) {
    bool found = false;
    const long bound = p.coeffs().empty() ? 0 : p[1].get_si();
    for (long d = 1; d <= std::max<long>(bound, 1); ++d) {
      if (auto q = p.divide_exact(IntPoly{1, d})) {
        p = *q;
        out.push_back(static_cast<int>(d));
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  if (p != IntPoly{1}) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

std::string factored_string(const std::vector<int>& ds) {
  std::map<int, int> mult;
  for (int d : ds) ++mult[d];
  std::string s;
  for (const auto& [d, m] : mult) {
    s += d == 1 ? "(1+t)" : "(1+" + std::to_string(d) + "t)";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------- input

struct InputOptions {
  std::string file;
  std::string example;
  std::string eta;
  int degree = 2;
  std::string report = "text";
  bool json = false;
  bool show_gb = false;
};

struct Input {
  Arrangement arrangement;
  std::optional<Polynomial> eta;  // from the file or the example
  ojson descriptor = ojson::object();
};

Input load_input(const InputOptions& o) {
  if (o.file.empty() == o.example.empty()) throw UsageError("give exactly one of an input file or --example");
  if (!o.example.empty()) {
    CorpusEntry e = [&] {
      try {
        return example(o.example);
      } catch (const ArrangementError& err) {
        throw UsageError(err.what());
      }
    }();
    Input in{e.arrangement, e.eta};
    in.descriptor["example"] = o.example;
    in.descriptor["description"] = e.description;
    return in;
  }
  ArrangementFile f = read_arrangement_file(o.file);
  Arrangement a = [&] {
    try {
      return f.arrangement();
    } catch (const ArrangementError& err) {
      throw ParseError(o.file, err.what());
    }
  }();
  Input in{a, f.eta};
  in.descriptor["file"] = o.file;
  return in;
}

struct EtaChoice {
  Polynomial eta;
  std::string source;
  int attempt = -1;
};

EtaChoice choose_eta(const Input& in, const InputOptions& o) {
  const Arrangement& a = in.arrangement;
  if (o.degree < 1) throw UsageError("--degree must be positive");
  if (o.eta == "default" || (o.eta.empty() && !in.eta)) {
    EtaSpec s = default_eta(a, o.degree);
    return {s.eta, "default", s.attempt};
  }
  if (o.eta.empty()) return {*in.eta, "input", -1};
  Polynomial eta = parse_polynomial(o.eta, a.field(), a.variable_names());
  if (eta.is_zero() || !eta.is_homogeneous()) throw ParseError("--eta", "eta must be a nonzero homogeneous polynomial");
  return {eta, "command line", -1};
}

void describe_arrangement(Report& r, const Arrangement& a) {
  ojson forms = ojson::array();
  for (const auto& f : a.forms()) forms.push_back(f.to_string(a.variable_names()));
  r.results["arrangement"] = {{"field", a.field()->to_string()},
                              {"dimension", a.dimension()},
                              {"size", a.size()},
                              {"rank", a.rank()},
                              {"hyperplanes", forms}};
}

// ---------------------------------------------------------------- sections

void freeness_section(Report& r, const Arrangement& a, const DerModule& d1, const IntPoly& pi) {
  const FreenessResult fr = is_free(a, d1);
  ojson f = {{"free", fr.free}, {"reason", fr.reason}, {"generator_degrees", d1.degrees}};
  if (fr.free) f["exponents"] = fr.exponents;
  r.results["freeness"] = f;
  r.results["poincare_polynomial"] = intpoly_json(pi);
  if (auto lf = linear_factors(pi)) r.results["poincare_factored"] = factored_string(*lf);
  if (fr.free) {
    IntPoly prod{1};
    for (int d : fr.exponents) prod = prod * IntPoly{1, d};
    r.check("exponents_factor_poincare", prod == pi, "prod (1 + d_i t) = " + prod.to_list_string());
  }
}

void psi_section(Report& r, const Arrangement& a, const std::vector<DerModule>& modules, const IntPoly& pi,
                 const std::optional<FreenessResult>& fr) {
  BivariatePoly psi;
  try {
    psi = solomon_terao_polynomial(a, modules);
  } catch (const SeriesError& e) {
    r.check("psi_is_polynomial", false, e.what());
    return;
  }
  r.check("psi_is_polynomial", true);
  ojson grid = ojson::array();
  for (const auto& row : psi.grid()) {
    ojson jr = ojson::array();
    for (const auto& c : row) jr.push_back(mpz_json(c));
    grid.push_back(jr);
  }
  r.results["psi"] = {{"grid_by_t_degree", grid},
                      {"text", psi.to_string()},
                      {"at_x_1", intpoly_json(psi.at_x_equals_one())},
                      {"at_t_1", intpoly_json(psi.at_t_equals_one())}};
  r.check("psi_at_x_1_is_poincare", psi.at_x_equals_one() == pi, "pi = " + pi.to_list_string());
  if (!a.is_empty())
    r.check("psi_vanishes_at_t_minus_x", psi.at_t_equals_minus_x().is_zero(),
            "Psi(x,-x) = " + psi.at_t_equals_minus_x().to_list_string());
  const AcyclicityResult ac = check_acyclicity(a, modules);
  r.check("alternating_hilbert_sum_vanishes", ac.holds, ac.residual.to_list_string());
  if (fr && fr->free) {
    std::vector<int> padded = fr->exponents;
    r.check("psi_matches_free_formula", psi == free_psi(padded));
  }
}

struct StOutcome {
  std::optional<STAlgebra> st;
  std::optional<AnalysisReport> report;
};

StOutcome st_section(Report& r, const Arrangement& a, const EtaChoice& eta, const DerModule& d1, bool show_gb) {
  StOutcome out;
  const EtaValidation v = verify_eta(a, eta.eta);
  ojson je = {{"eta", eta.eta.to_string(a.variable_names())},
              {"degree", eta.eta.degree()},
              {"source", eta.source},
              {"lattice_elements_checked", v.checked}};
  if (eta.attempt >= 0) je["candidate"] = eta.attempt;
  r.results["eta"] = je;
  r.check("eta_nondegenerate", v.valid,
          v.valid ? "" : std::to_string(v.failing.size()) + " lattice elements where eta degenerates");
  if (!v.valid) return out;
  try {
    out.st.emplace(st_algebra(a, eta.eta, d1));
  } catch (const EtaError& e) {
    r.check("st_finite_dimensional", false, e.what());
    return out;
  }
  const STAlgebra& st = *out.st;
  const AnalysisReport rep = analyze(st);
  out.report = rep;
  ojson s = ojson::object();
  s["hilbert_vector"] = rep.hilbert_vector;
  s["dimension"] = st.algebra.dimension();
  s["top_degree"] = rep.top_degree;
  s["complete_intersection"] = rep.complete_intersection;
  s["minimal_generator_degrees"] = rep.minimal_generator_degrees;
  s["quantum_factors"] = rep.quantum_factors ? ojson(*rep.quantum_factors) : ojson(nullptr);
  s["recovered_exponents"] = rep.recovered_exponents ? ojson(*rep.recovered_exponents) : ojson(nullptr);
  s["socle_dimension"] = rep.socle_dimension;
  s["socle_degrees"] = rep.socle_degrees;
  s["gorenstein"] = rep.gorenstein;
  s["palindromic"] = rep.palindromic;
  s["strong_lefschetz"] = rep.slp;
  s["expected_top_degree"] = rep.expected_top_degree;
  s["top_degree_matches_expected"] = rep.socle_degree_conjecture;
  ojson gens = ojson::array();
  for (const auto& g : st.ideal_generators) gens.push_back(g.to_string(a.variable_names()));
  s["ideal_generators"] = gens;
  if (show_gb) {
    ojson gb = ojson::array();
    for (const auto& g : st.algebra.ideal().polynomials()) gb.push_back(g.to_string(a.variable_names()));
    s["groebner_basis"] = gb;
  }
  const SocleWitness w = socle_witness(st);
  s["socle_witness"] = {{"normal_form", w.normal_form.to_string(a.variable_names())},
                        {"nonzero", w.nonzero},
                        {"in_socle", w.in_socle}};
  r.results["st"] = s;
  r.check("socle_witness_nonzero", w.nonzero);
  r.check("socle_witness_in_socle", w.in_socle);
  if (rep.complete_intersection) r.check("ci_factorization_consistent", rep.factorization_consistent);
  return out;
}

// ---------------------------------------------------------------- output

void flatten(const std::string& prefix, const ojson& j, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), out);
    return;
  }
  if (j.is_string()) out << prefix << ": " << j.get<std::string>() << "\n";
  else out << prefix << ": " << j.dump() << "\n";
}

int emit(const Report& r, bool json, std::ostream& out) {
  if (json) {
    ojson j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = r.command;
    j["input"] = r.input;
    j["results"] = r.results;
    j["checks"] = ojson::array();
    for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out << j.dump(2) << "\n";
  } else {
    flatten("", r.input, out);
    flatten("", r.results, out);
    for (const auto& c : r.checks)
      out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << (c.detail.empty() ? "" : " (" + c.detail + ")")
          << "\n";
  }
  return r.ok() ? 0 : 1;
}

bool wants_json(const InputOptions& o) {
  if (o.report != "text" && o.report != "json") throw UsageError("--report must be text or json");
  return o.json || o.report == "json";
}

// ---------------------------------------------------------------- commands

int cmd_analyze(const InputOptions& o, std::ostream& out) {
  const bool json = wants_json(o);
  Report r{"analyze"};
  Input in = load_input(o);
  r.input = in.descriptor;
  const Arrangement& a = in.arrangement;
  const EtaChoice eta = choose_eta(in, o);
  describe_arrangement(r, a);
  const IntersectionLattice lattice(a);
  const IntPoly pi = lattice.poincare_polynomial();
  const auto modules = all_log_derivations(a);
  freeness_section(r, a, modules[1], pi);
  const FreenessResult fr = is_free(a, modules[1]);
  ojson hs = ojson::array();
  for (const auto& m : modules)
    hs.push_back({{"p", m.p}, {"numerator", intpoly_json(m.hilbert.numerator)}, {"generator_degrees", m.degrees}});
  r.results["derivation_modules"] = hs;
  psi_section(r, a, modules, pi, fr);

  const TamenessResult tame = is_tame(a, modules, fr);
  r.results["tame"] = {{"tame", tame.tame}, {"via", tame.via}};
  if (!tame.projective_dimensions.empty()) r.results["tame"]["projective_dimensions"] = tame.projective_dimensions;

  int bad_h = -1;
  for (int h = 0; h < a.size() && bad_h < 0; ++h) {
    const Restriction res = restrict_to(a, h);
    const IntPoly rhs = IntersectionLattice(a.deleted(h)).poincare_polynomial() +
                        IntPoly::monomial(1) * IntersectionLattice(res.arrangement).poincare_polynomial();
    if (rhs != pi) bad_h = h;
  }
  if (a.size() > 0)
    r.check("deletion_restriction", bad_h < 0, bad_h < 0 ? "" : "fails at hyperplane " + std::to_string(bad_h));

  const StOutcome st = st_section(r, a, eta, modules[1], o.show_gb);
  if (st.report) {
    r.check("complete_intersection_iff_free", st.report->complete_intersection == fr.free);
    if (tame.tame) {
      const auto psi = solomon_terao_polynomial(a, modules);
      const IntPoly at_t_1 = psi.at_t_equals_one();
      std::vector<int> expect;
      for (const auto& c : at_t_1.coeffs()) expect.push_back(static_cast<int>(c.get_si()));
      r.check("hilbert_vector_equals_psi_at_t_1", expect == st.report->hilbert_vector);
    }
  }
  return emit(r, json, out);
}

int cmd_st(const InputOptions& o, std::ostream& out) {
  const bool json = wants_json(o);
  Report r{"st"};
  Input in = load_input(o);
  r.input = in.descriptor;
  const EtaChoice eta = choose_eta(in, o);
  describe_arrangement(r, in.arrangement);
  const DerModule d1 = log_derivations(in.arrangement, 1);
  st_section(r, in.arrangement, eta, d1, o.show_gb);
  return emit(r, json, out);
}

int cmd_psi(const InputOptions& o, std::ostream& out) {
  const bool json = wants_json(o);
  Report r{"psi"};
  Input in = load_input(o);
  r.input = in.descriptor;
  describe_arrangement(r, in.arrangement);
  const IntPoly pi = IntersectionLattice(in.arrangement).poincare_polynomial();
  const auto modules = all_log_derivations(in.arrangement);
  r.results["poincare_polynomial"] = intpoly_json(pi);
  psi_section(r, in.arrangement, modules, pi, is_free(in.arrangement, modules[1]));
  return emit(r, json, out);
}

int cmd_free(const InputOptions& o, std::ostream& out) {
  const bool json = wants_json(o);
  Report r{"free"};
  Input in = load_input(o);
  r.input = in.descriptor;
  describe_arrangement(r, in.arrangement);
  const DerModule d1 = log_derivations(in.arrangement, 1);
  ojson gens = ojson::array();
  for (const auto& g : d1.generators) {
    ojson comps = ojson::array();
    for (const auto& c : g.components()) comps.push_back(c.to_string(in.arrangement.variable_names()));
    gens.push_back(comps);
  }
  freeness_section(r, in.arrangement, d1, IntersectionLattice(in.arrangement).poincare_polynomial());
  r.results["generators"] = gens;
  return emit(r, json, out);
}

int cmd_lattice(const InputOptions& o, std::ostream& out) {
  const bool json = wants_json(o);
  Report r{"lattice"};
  Input in = load_input(o);
  r.input = in.descriptor;
  describe_arrangement(r, in.arrangement);
  const IntersectionLattice lattice(in.arrangement);
  r.results["elements"] = lattice.elements().size();
  r.results["rank_counts"] = lattice.rank_counts();
  r.results["characteristic_polynomial"] = intpoly_json(lattice.characteristic_polynomial());
  r.results["poincare_polynomial"] = intpoly_json(lattice.poincare_polynomial());
  if (auto lf = linear_factors(lattice.poincare_polynomial())) r.results["poincare_factored"] = factored_string(*lf);
  ojson flats = ojson::array();
  for (const auto& e : lattice.elements()) {
    ojson hs = ojson::array();
    for (int i = 0; i < in.arrangement.size(); ++i)
      if (e.hyperplanes >> i & 1) hs.push_back(i);
    flats.push_back({{"codimension", e.codimension}, {"mobius", e.mobius}, {"hyperplanes", hs}});
  }
  r.results["flats"] = flats;
  return emit(r, json, out);
}

// coxeter -------------------------------------------------------------

RootSystem parse_root_system(const std::string& type, int rank) {
  if (type.size() != 1) throw UsageError("root system type is one letter: A, B, C or D");
  try {
    return root_system(static_cast<char>(std::toupper(static_cast<unsigned char>(type[0]))), rank);
  } catch (const ArrangementError& e) {
    throw UsageError(e.what());
  }
}

ojson roots_json(const RootSystem& rs, const std::vector<int>& idx) {
  ojson arr = ojson::array();
  for (int i : idx) arr.push_back({{"index", i}, {"root", rs.roots[static_cast<std::size_t>(i)]},
                                   {"height", rs.heights[static_cast<std::size_t>(i)]}});
  return arr;
}

void ideal_checks(Report& r, const RootSystem& rs, const std::vector<int>& ideal, const std::string& label) {
  const Arrangement a = ideal_arrangement(rs, ideal);
  const auto predicted = ideal_exponents(rs, ideal, rs.ambient);
  const FreenessResult fr = is_free(a);
  r.check(label, fr.free && fr.exponents == predicted,
          "predicted " + list_string(predicted) + (fr.free ? ", computed " + list_string(fr.exponents) : ", not free"));
}

int cmd_coxeter_weyl(const std::string& type, int rank, bool json, std::ostream& out) {
  Report r{"coxeter weyl"};
  const RootSystem rs = parse_root_system(type, rank);
  r.input = {{"type", std::string(1, rs.type)}, {"rank", rs.rank}};
  std::vector<int> all(rs.roots.size());
  std::iota(all.begin(), all.end(), 0);
  describe_arrangement(r, weyl_arrangement(rs));
  r.results["positive_roots"] = roots_json(rs, all);
  r.results["exponents"] = ideal_exponents(rs, all, rs.ambient);
  ideal_checks(r, rs, all, "free_with_dual_partition_exponents");
  return emit(r, json, out);
}

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--roots expects comma-separated root indices, got '" + item + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int cmd_coxeter_ideal(const std::string& type, int rank, const std::string& roots, bool json, std::ostream& out) {
  Report r{"coxeter ideal"};
  const RootSystem rs = parse_root_system(type, rank);
  r.input = {{"type", std::string(1, rs.type)}, {"rank", rs.rank}};
  std::vector<int> all(rs.roots.size());
  std::iota(all.begin(), all.end(), 0);
  r.results["positive_roots"] = roots_json(rs, all);
  if (roots.empty()) {
    const auto ideals = all_lower_ideals(rs);
    ojson list = ojson::array();
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      list.push_back({{"index", k}, {"roots", ideals[k]}, {"exponents", ideal_exponents(rs, ideals[k], rs.ambient)}});
      ideal_checks(r, rs, ideals[k], "ideal_" + std::to_string(k) + "_free_with_dual_partition_exponents");
    }
    r.results["ideals"] = list;
    return emit(r, json, out);
  }
  const auto ideal = parse_index_list(roots);
  r.input["roots"] = ideal;
  for (int i : ideal)
    if (i < 0 || i >= static_cast<int>(rs.roots.size())) throw UsageError("root index " + std::to_string(i) + " out of range");
  try {
    validate_lower_ideal(rs, ideal);
  } catch (const ArrangementError& e) {
    throw UsageError(e.what());
  }
  describe_arrangement(r, ideal_arrangement(rs, ideal));
  r.results["ideal"] = roots_json(rs, ideal);
  r.results["exponents"] = ideal_exponents(rs, ideal, rs.ambient);
  ideal_checks(r, rs, ideal, "free_with_dual_partition_exponents");
  return emit(r, json, out);
}

int cmd_coxeter_inversion(const std::string& perm, bool json, std::ostream& out) {
  Report r{"coxeter inversion"};
  Permutation w;
  try {
    w = parse_permutation(perm);
  } catch (const ArrangementError& e) {
    throw UsageError(e.what());
  }
  r.input = {{"permutation", permutation_to_string(w)}};
  const Arrangement a = inversion_arrangement(w);
  describe_arrangement(r, a);
  const FreenessResult fr = is_free(a);
  const long interval = bruhat_interval_size(w);
  const bool smooth = schubert_smooth(w);
  r.results["free"] = fr.free;
  if (fr.free) r.results["exponents"] = fr.exponents;
  else r.results["generator_degrees"] = fr.generator_degrees;
  r.results["bruhat_interval_size"] = interval;
  r.results["schubert_variety_smooth"] = smooth;
  if (fr.free) {
    long prod = 1;
    for (int d : fr.exponents) prod *= 1 + d;
    r.results["exponent_product"] = prod;
    r.check("product_equals_interval_iff_smooth", (prod == interval) == smooth,
            "prod (1 + d_i) = " + std::to_string(prod) + ", |[e,w]| = " + std::to_string(interval));
  } else {
    r.check("not_free_implies_singular", !smooth);
  }
  return emit(r, json, out);
}

// verify --------------------------------------------------------------

struct Suite {
  std::vector<Check> checks;
  void add(const std::string& name, bool pass, const std::string& detail = "") { checks.push_back({name, pass, detail}); }
};

void verify_arrangement(Suite& s, const std::string& name, bool with_psi) {
  const CorpusEntry e = example(name);
  const Arrangement& a = e.arrangement;
  const IntPoly pi = IntersectionLattice(a).poincare_polynomial();
  const auto modules = with_psi ? all_log_derivations(a) : std::vector<DerModule>{};
  const DerModule d1 = with_psi ? modules[1] : log_derivations(a, 1);
  const FreenessResult fr = is_free(a, d1);
  if (fr.free) {
    IntPoly prod{1};
    for (int d : fr.exponents) prod = prod * IntPoly{1, d};
    s.add(name + ": exponents factor pi", prod == pi);
  }
  std::optional<IntPoly> psi_x1;
  if (with_psi) {
    try {
      const BivariatePoly psi = solomon_terao_polynomial(a, modules);
      psi_x1 = psi.at_t_equals_one();
      s.add(name + ": Psi(1,t) = pi", psi.at_x_equals_one() == pi);
      if (!a.is_empty()) s.add(name + ": Psi(x,-x) = 0", psi.at_t_equals_minus_x().is_zero());
      if (fr.free) s.add(name + ": Psi matches free formula", psi == free_psi(fr.exponents));
    } catch (const SeriesError& err) {
      s.add(name + ": Psi is a polynomial", false, err.what());
    }
  }
  const Polynomial eta = e.eta ? *e.eta : default_eta(a, 2).eta;
  const STAlgebra st = st_algebra(a, eta, d1);
  const AnalysisReport rep = analyze(st);
  s.add(name + ": complete intersection iff free", rep.complete_intersection == fr.free,
        "hilbert " + list_string(rep.hilbert_vector));
  if (fr.free) {
    std::vector<int> expected;
    for (int d : fr.exponents) expected.push_back(d);
    s.add(name + ": hilbert vector factors by exponents",
          rep.quantum_factors && *rep.quantum_factors == expected && rep.top_degree == a.size());
  }
  if (psi_x1) {
    const TamenessResult tame = is_tame(a, modules, fr);
    if (tame.tame) {
      std::vector<int> expect;
      for (const auto& c : psi_x1->coeffs()) expect.push_back(static_cast<int>(c.get_si()));
      s.add(name + ": hilbert vector = Psi(x,1)", expect == rep.hilbert_vector);
    }
  }
  const SocleWitness w = socle_witness(st);
  s.add(name + ": socle witness nonzero and in socle", w.nonzero && w.in_socle);
}

void verify_examples(Suite& s) {
  {
    const CorpusEntry e = example("ex4");
    const STAlgebra st = st_algebra(e.arrangement, default_eta(e.arrangement, 2).eta);
    const AnalysisReport rep = analyze(st);
    s.add("ex4: hilbert vector [1,3,5,4,1]", rep.hilbert_vector == std::vector<int>{1, 3, 5, 4, 1});
    s.add("ex4: not Gorenstein, not palindromic", !rep.gorenstein && !rep.palindromic);
  }
  {
    const CorpusEntry e = example("notsplit");
    const Arrangement& a = e.arrangement;
    const STAlgebra st = st_algebra(a, *e.eta);
    s.add("notsplit: hilbert vector [1,3,5,6,6,6,4,1]",
          st.algebra.hilbert_vector() == std::vector<int>{1, 3, 5, 6, 6, 6, 4, 1});
    bool all_zero = true;
    for (const char* g : {"x^2 + y^2 + z^2", "z^3 - y*z^2", "y^6 - y^5*z", "y^6 + 3*y^4*z^2"})
      all_zero = all_zero && st.algebra.normal_form(parse_polynomial(g, a.field(), a.variable_names())).is_zero();
    s.add("notsplit: listed ideal generators lie in the ideal", all_zero);
    s.add("notsplit: not free", !is_free(a).free);
    s.add("notsplit: pi = (1+t)(1+3t)^2",
          IntersectionLattice(a).poincare_polynomial() == IntPoly{1, 1} * IntPoly{1, 3} * IntPoly{1, 3});
  }
}

void verify_coxeter(Suite& s) {
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}}) {
    const RootSystem rs = root_system(type, rank);
    const auto ideals = all_lower_ideals(rs);
    int good = 0;
    for (const auto& ideal : ideals) {
      const FreenessResult fr = is_free(ideal_arrangement(rs, ideal));
      if (fr.free && fr.exponents == ideal_exponents(rs, ideal, rs.ambient)) ++good;
    }
    s.add(std::string("ideals of ") + type + std::to_string(rank) + ": free with dual-partition exponents",
          good == static_cast<int>(ideals.size()),
          std::to_string(good) + "/" + std::to_string(ideals.size()));
  }
  for (const auto& w : all_permutations(4)) {
    const FreenessResult fr = is_free(inversion_arrangement(w));
    const bool smooth = schubert_smooth(w);
    long prod = 1;
    for (int d : fr.exponents) prod *= 1 + d;
    const bool identity = fr.free && prod == bruhat_interval_size(w);
    s.add("inversion-" + permutation_to_string(w) + ": free with prod (1+d_i) = |[e,w]| iff smooth",
          identity == smooth);
  }
  const auto schubert = QuotientAlgebra::from_generators(FieldDescriptor::rational(), 4, schubert_presentation_4123());
  s.add("4123: Schubert presentation has a square-zero linear element", exists_nilpotent_linear(schubert).exists);
  const CorpusEntry e = example("inversion-4123");
  const STAlgebra st = st_algebra(e.arrangement, *e.eta);
  s.add("4123: ST(A_w, P1) has no square-zero linear element", !exists_nilpotent_linear(st.algebra).exists);
}

int cmd_verify(const std::string& suite, bool json, std::ostream& out) {
  static const std::vector<std::string> suites = {"all", "examples", "free", "plane", "corpus", "coxeter"};
  if (std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw UsageError("unknown suite '" + suite + "' (all, examples, free, plane, corpus, coxeter)");
  Suite s;
  const bool all = suite == "all";
  if (all || suite == "examples") verify_examples(s);
  if (suite == "free")
    for (const auto& n : free_corpus()) verify_arrangement(s, n, false);
  if (suite == "plane")
    for (const auto& n : plane_corpus()) verify_arrangement(s, n, false);
  if (all || suite == "corpus")
    for (const auto& n : full_corpus()) verify_arrangement(s, n, true);
  if (all || suite == "coxeter") verify_coxeter(s);
  Report r{"verify"};
  r.input = {{"suite", suite}};
  r.checks = s.checks;
  const auto passed = std::count_if(s.checks.begin(), s.checks.end(), [](const Check& c) { return c.pass; });
  r.results = {{"checks", s.checks.size()}, {"passed", passed}};
  return emit(r, json, out);
}

int cmd_search(const SearchConfig& cfg, const std::string& log_file, bool json, std::ostream& out) {
  SearchLog log;
  try {
    log = conjecture_search(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const ArrangementError& e) {
    throw UsageError(e.what());
  }
  if (!log_file.empty()) {
    std::ofstream f(log_file);
    if (!f) throw UsageError("cannot write " + log_file);
    f << log.text;
  }
  if (json && log_file.empty()) {
    out << log.text;
    return 0;
  }
  Report r{"search"};
  r.input = {{"generator", cfg.generator}, {"seed", cfg.seed}, {"count", cfg.count}};
  if (!cfg.parent.empty()) r.input["parent"] = cfg.parent;
  r.results = {{"examined", log.examined}, {"skipped", log.skipped}, {"violations", log.violations}};
  ojson found = ojson::array();
  for (const auto& rec : log.records)
    if (!rec.violations.empty())
      found.push_back({{"index", rec.index}, {"violations", rec.violations}, {"file", rec.counterexample_file}});
  r.results["counterexamples"] = found;
  if (!json) out << log.text;
  emit(r, json, out);
  // A violation is a finding, not a failure of the tool.
  return 0;
}

void add_input_options(CLI::App* sub, InputOptions& o, bool eta_options) {
  sub->add_option("file", o.file, "arrangement JSON file");
  sub->add_option("--example,-e", o.example, "built-in example name");
  sub->add_option("--report", o.report, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--json", o.json, "machine-readable report");
  if (eta_options) {
    sub->add_option("--eta", o.eta, "polynomial or \"default\"");
    sub->add_option("--degree,-d", o.degree, "degree of the default eta");
    sub->add_flag("--show-gb", o.show_gb, "print the Groebner basis of the ideal");
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solomon-Terao algebras and logarithmic derivations of hyperplane arrangements", "starr"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  InputOptions o;
  auto* analyze_cmd = app.add_subcommand("analyze", "everything: lattice, D^p, freeness, Psi, ST(A, eta)");
  auto* st_cmd = app.add_subcommand("st", "the algebra ST(A, eta)");
  auto* psi_cmd = app.add_subcommand("psi", "the polynomial Psi(A; x, t)");
  auto* free_cmd = app.add_subcommand("free", "freeness via the Saito criterion");
  auto* lattice_cmd = app.add_subcommand("lattice", "intersection lattice and Poincare polynomial");
  add_input_options(analyze_cmd, o, true);
  add_input_options(st_cmd, o, true);
  add_input_options(psi_cmd, o, false);
  add_input_options(free_cmd, o, false);
  add_input_options(lattice_cmd, o, false);

  auto* cox = app.add_subcommand("coxeter", "root systems, ideal and inversion arrangements");
  cox->require_subcommand(1);
  bool cox_json = false;
  std::string cox_type, cox_roots, cox_perm;
  int cox_rank = 0;
  cox->add_flag("--json", cox_json, "machine-readable report");
  auto* weyl = cox->add_subcommand("weyl", "Weyl arrangement, e.g. weyl A 3");
  weyl->add_option("type", cox_type)->required();
  weyl->add_option("rank", cox_rank)->required();
  weyl->add_flag("--json", cox_json, "machine-readable report");
  auto* ideal = cox->add_subcommand("ideal", "ideal arrangements, e.g. ideal A 3 --roots 0,1,3");
  ideal->add_option("type", cox_type)->required();
  ideal->add_option("rank", cox_rank)->required();
  ideal->add_option("--roots", cox_roots, "comma-separated positive-root indices (all ideals when omitted)");
  ideal->add_flag("--json", cox_json, "machine-readable report");
  auto* inversion = cox->add_subcommand("inversion", "inversion arrangement, e.g. inversion 4123");
  inversion->add_option("permutation", cox_perm)->required();
  inversion->add_flag("--json", cox_json, "machine-readable report");

  auto* verify = app.add_subcommand("verify", "run a verification suite over the built-in corpus");
  std::string suite = "all";
  bool verify_json = false;
  verify->add_option("--suite", suite, "all, examples, free, plane, corpus or coxeter");
  verify->add_flag("--json", verify_json, "machine-readable report");

  auto* search = app.add_subcommand("search", "look for counterexamples among generated arrangements");
  SearchConfig cfg;
  std::string log_file;
  bool search_json = false;
  search->add_option("--generator", cfg.generator, "random or subarrangements")
      ->check(CLI::IsMember({"random", "subarrangements"}));
  search->add_option("--parent", cfg.parent, "example whose subarrangements are enumerated");
  search->add_option("--dim", cfg.dimension, "ambient dimension for random arrangements");
  search->add_option("--min-size", cfg.min_size);
  search->add_option("--max-size", cfg.max_size);
  search->add_option("--count", cfg.count);
  search->add_option("--seed", cfg.seed);
  search->add_option("--bound", cfg.coefficient_bound, "random coefficients in [-bound, bound]");
  search->add_option("--degree", cfg.eta_degree);
  search->add_option("--conjectures", cfg.conjectures, "all, factorable, palindromic or socle");
  search->add_option("--out-dir", cfg.counterexample_dir, "directory for counterexample files");
  search->add_option("--log", log_file, "write the search log here");
  search->add_flag("--json", search_json, "print only the log lines");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (st_cmd->parsed()) return cmd_st(o, out);
    if (psi_cmd->parsed()) return cmd_psi(o, out);
    if (free_cmd->parsed()) return cmd_free(o, out);
    if (lattice_cmd->parsed()) return cmd_lattice(o, out);
    if (weyl->parsed()) return cmd_coxeter_weyl(cox_type, cox_rank, cox_json, out);
    if (ideal->parsed()) return cmd_coxeter_ideal(cox_type, cox_rank, cox_roots, cox_json, out);
    if (inversion->parsed()) return cmd_coxeter_inversion(cox_perm, cox_json, out);
    if (verify->parsed()) return cmd_verify(suite, verify_json, out);
    if (search->parsed()) return cmd_search(cfg, log_file, search_json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return 2;
  } catch (const EtaError& e) {
    err << "eta error: " << e.what() << "\n";
    return 1;
  } catch (const SeriesError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace starr
