#include "starr/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "starr/coxeter.hpp"

namespace starr {

namespace {

using IntRows = std::vector<std::vector<long>>;

Arrangement rational(int dim, const IntRows& rows) {
  const auto* q = FieldDescriptor::rational();
  std::vector<ScalarVector> normals;
  for (const auto& r : rows) {
    ScalarVector v;
    for (long c : r) v.emplace_back(q, c);
    normals.push_back(std::move(v));
  }
  return Arrangement(q, dim, normals);
}

int parse_count(const std::string& s, const std::string& name, int lo, int hi) {
  if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw ArrangementError("malformed example name '" + name + "'");
  const int n = std::stoi(s);
  if (n < lo || n > hi)
    throw ArrangementError("'" + name + "': parameter must be between " + std::to_string(lo) + " and " +
                           std::to_string(hi));
  return n;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find('-', start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Assorted arrangements in x, y, z.
const std::vector<std::pair<std::string, IntRows>>& plane_table() {
  static const std::vector<std::pair<std::string, IntRows>> table = {
      {"xyz(x+y)", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}}},
      {"xyz(x+y)(x-y)", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, -1, 0}}},
      {"xyz(x+y)(y+z)", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}}},
      {"xyz(x+y)(y+z)(x+z)", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}},
      {"xyz(x+y)(x+y+z)", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}}},
      {"xyz(x-y)(y-z)(x-z)", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {0, 1, -1}, {1, 0, -1}}},
      {"xyz(x+y)(y+z)(x+y+z)", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}}},
      {"xyz(x+y)(y+z)(x+z)(x+y+z)",
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}}},
      {"xyz(x-y)(x+y+z)(x+2y+3z)", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 1, 1}, {1, 2, 3}}},
      {"xyz(x+2y)(y+2z)(x+y+z)", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 0}, {0, 1, 2}, {1, 1, 1}}},
  };
  return table;
}

CorpusEntry notsplit() {
  const auto* f = FieldDescriptor::extension({mpq_class(-2), mpq_class(0), mpq_class(1)}, "r");
  const Scalar r = Scalar::generator(f);
  auto s = [&](long v) { return Scalar(f, v); };
  const std::vector<ScalarVector> normals = {
      {s(1), s(0), s(0)}, {s(1), s(-1), s(0)}, {s(1), s(1), s(0)}, {s(1), -r, s(0)},
      {s(1), r, s(0)},    {s(0), s(1), s(-1)}, {s(0), s(0), s(1)}};
  Arrangement a(f, 3, normals);
  Polynomial eta(f, 3);
  for (int i = 0; i < 3; ++i) eta += Polynomial::monomial(f, 3, Monomial::variable(i, 2), s(1));
  return {"notsplit", "x(x^2-y^2)(x^2-2y^2)(y-z)z over Q(r), r^2 = 2", a, eta};
}

}  // namespace

CorpusEntry example(const std::string& name) {
  if (name == "ex4")
    return {name, "xyz(x+y+z)", rational(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}), std::nullopt};
  if (name == "notsplit") return notsplit();

  const auto parts = split(name);
  const std::string& head = parts[0];
  if (head == "boolean" && parts.size() == 2) {
    const int l = parse_count(parts[1], name, 1, kMaxVars);
    IntRows rows;
    for (int i = 0; i < l; ++i) {
      rows.emplace_back(static_cast<std::size_t>(l), 0);
      rows.back()[static_cast<std::size_t>(i)] = 1;
    }
    return {name, "coordinate hyperplanes in " + std::to_string(l) + " variables", rational(l, rows), std::nullopt};
  }
  if (head == "empty" && parts.size() == 2) {
    const int l = parse_count(parts[1], name, 1, kMaxVars);
    return {name, "no hyperplanes in " + std::to_string(l) + " variables", rational(l, {}), std::nullopt};
  }
  if (head == "single" && parts.size() == 2) {
    const int l = parse_count(parts[1], name, 1, kMaxVars);
    IntRows rows{std::vector<long>(static_cast<std::size_t>(l), 0)};
    rows[0][0] = 1;
    return {name, "the hyperplane x1 = 0 in " + std::to_string(l) + " variables", rational(l, rows), std::nullopt};
  }
  if (head == "braid" && parts.size() == 2) {
    const int n = parse_count(parts[1], name, 2, 6);
    IntRows rows;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        rows.emplace_back(static_cast<std::size_t>(n), 0);
        rows.back()[static_cast<std::size_t>(i)] = 1;
        rows.back()[static_cast<std::size_t>(j)] = -1;
      }
    return {name, "x_i - x_j in " + std::to_string(n) + " variables", rational(n, rows), std::nullopt};
  }
  if (head == "pencil" && parts.size() == 2) {
    const int k = parse_count(parts[1], name, 1, 12);
    IntRows rows;
    if (k >= 1) rows.push_back({1, 0});
    if (k >= 2) rows.push_back({0, 1});
    for (int i = 1; i <= k - 2; ++i) rows.push_back({1, i});
    return {name, std::to_string(k) + " lines through the origin of the plane", rational(2, rows), std::nullopt};
  }
  if (head == "generic" && parts.size() == 3) {
    const int l = parse_count(parts[1], name, 1, kMaxVars);
    const int n = parse_count(parts[2], name, 0, 12);
    // Unit vectors, then moment-curve points: all maximal minors are positive.
    IntRows rows;
    for (int i = 0; i < std::min(l, n); ++i) {
      rows.emplace_back(static_cast<std::size_t>(l), 0);
      rows.back()[static_cast<std::size_t>(i)] = 1;
    }
    for (int t = 1; t <= n - l; ++t) {
      std::vector<long> v;
      long p = 1;
      for (int i = 0; i < l; ++i, p *= t) v.push_back(p);
      rows.push_back(v);
    }
    return {name, std::to_string(n) + " generic hyperplanes in " + std::to_string(l) + " variables",
            rational(l, rows), std::nullopt};
  }
  if (head == "plane" && parts.size() == 2) {
    const int k = parse_count(parts[1], name, 1, static_cast<int>(plane_table().size()));
    const auto& [desc, rows] = plane_table()[static_cast<std::size_t>(k - 1)];
    return {name, desc, rational(3, rows), std::nullopt};
  }
  if ((head == "weyl" && parts.size() == 2) || (head == "ideal" && parts.size() == 3)) {
    const std::string& tr = parts[1];
    if (tr.size() != 2 || !std::isdigit(static_cast<unsigned char>(tr[1])))
      throw ArrangementError("malformed root system in '" + name + "' (expected e.g. A3)");
    const RootSystem rs = root_system(tr[0], tr[1] - '0');
    if (head == "weyl") {
      const auto p1 = lowest_invariant(rs);
      return {name, "Weyl arrangement of type " + tr, weyl_arrangement(rs), p1};
    }
    const auto ideals = all_lower_ideals(rs);
    const int k = parse_count(parts[2], name, 0, static_cast<int>(ideals.size()) - 1);
    const auto& ideal = ideals[static_cast<std::size_t>(k)];
    return {name, "ideal arrangement " + std::to_string(k) + " of type " + tr + " (" + std::to_string(ideal.size()) +
                      " roots)",
            ideal_arrangement(rs, ideal), lowest_invariant(rs)};
  }
  if (head == "inversion" && parts.size() == 2) {
    const Permutation w = parse_permutation(parts[1]);
    Polynomial p1(FieldDescriptor::rational(), static_cast<int>(w.size()));
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      p1 += Polynomial::variable(FieldDescriptor::rational(), static_cast<int>(w.size()), i).pow(2);
    return {name, "inversion arrangement of " + permutation_to_string(w), inversion_arrangement(w), p1};
  }
  throw ArrangementError("unknown example '" + name + "'");
}

namespace {

void add_ideals(std::vector<std::string>& out, char type, int rank) {
  const auto n = all_lower_ideals(root_system(type, rank)).size();
  for (std::size_t k = 0; k < n; ++k)
    out.push_back("ideal-" + std::string(1, type) + std::to_string(rank) + "-" + std::to_string(k));
}

void add_inversions(std::vector<std::string>& out, int n, const std::set<std::string>& skip) {
  for (const auto& w : all_permutations(n)) {
    const std::string s = permutation_to_string(w);
    if (!skip.count(s)) out.push_back("inversion-" + s);
  }
}

std::vector<std::string> dedupe(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& s : in)
    if (seen.insert(s).second) out.push_back(s);
  return out;
}

}  // namespace

std::vector<std::string> free_corpus() {
  std::vector<std::string> out = {"boolean-1", "boolean-2", "boolean-3", "boolean-4", "pencil-3", "braid-3",
                                  "weyl-A2",   "weyl-B2",   "weyl-A3"};
  add_ideals(out, 'A', 2);
  add_ideals(out, 'A', 3);
  add_ideals(out, 'B', 2);
  add_inversions(out, 4, {"3412"});
  return out;
}

std::vector<std::string> plane_corpus() {
  std::vector<std::string> out = {"ex4",      "notsplit",    "boolean-3", "braid-3", "single-3", "generic-3-5",
                                  "generic-3-6", "weyl-B3", "weyl-D3"};
  for (std::size_t k = 1; k <= plane_table().size(); ++k) out.push_back("plane-" + std::to_string(k));
  add_ideals(out, 'A', 2);
  add_inversions(out, 3, {});
  return out;
}

std::vector<std::string> full_corpus() {
  std::vector<std::string> out = free_corpus();
  for (const auto& s : plane_corpus()) out.push_back(s);
  for (const char* s : {"empty-2", "empty-3", "single-1", "pencil-4", "pencil-5", "inversion-3412", "generic-4-5"})
    out.emplace_back(s);
  return dedupe(out);
}

std::vector<Polynomial> schubert_presentation_4123() {
  const auto* q = FieldDescriptor::rational();
  auto x = [&](int i) { return Polynomial::variable(q, 4, i); };
  return {x(0) + x(1) + x(2) + x(3), (x(0) + x(1) + x(2)).pow(2), x(1) * x(2) + x(0) * x(2), x(0) * x(1)};
}

}  // namespace starr
