#include "starr/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace starr {

namespace {

std::vector<int> unit(int n, int i, int c = 1) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = c;
  return v;
}

std::vector<int> combine(int n, int i, int si, int j, int sj) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] += si;
  v[static_cast<std::size_t>(j)] += sj;
  return v;
}

std::string root_string(const std::vector<int>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

}  // namespace

RootSystem root_system(char type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  if (rank < 1 || rank > 5) throw ArrangementError("root system rank must be between 1 and 5");
  const int n = rank;
  std::vector<std::vector<int>> roots;
  switch (type) {
    case 'A':
      rs.ambient = n + 1;
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) roots.push_back(combine(n + 1, i, 1, j, -1));
      for (int i = 0; i < n; ++i) rs.simple_roots.push_back(combine(n + 1, i, 1, i + 1, -1));
      break;
    case 'B':
    case 'C':
    case 'D':
      if (type == 'D' ? n < 3 : n < 2) throw ArrangementError(std::string("rank too small for type ") + type);
      rs.ambient = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          roots.push_back(combine(n, i, 1, j, -1));
          roots.push_back(combine(n, i, 1, j, 1));
        }
      if (type == 'B')
        for (int i = 0; i < n; ++i) roots.push_back(unit(n, i));
      if (type == 'C')
        for (int i = 0; i < n; ++i) roots.push_back(unit(n, i, 2));
      for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(combine(n, i, 1, i + 1, -1));
      if (type == 'B') rs.simple_roots.push_back(unit(n, n - 1));
      if (type == 'C') rs.simple_roots.push_back(unit(n, n - 1, 2));
      if (type == 'D') rs.simple_roots.push_back(combine(n, n - 2, 1, n - 1, 1));
      break;
    default:
      throw ArrangementError(std::string("unsupported root system type ") + type);
  }

  // Simple-root coordinates by exact linear solve.
  const auto* q = FieldDescriptor::rational();
  Matrix m(q, rs.ambient, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < rs.ambient; ++r)
      m.at(r, c) = Scalar(q, rs.simple_roots[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
  struct Entry {
    std::vector<int> root, coords;
    int height;
  };
  std::vector<Entry> entries;
  for (const auto& r : roots) {
    ScalarVector rhs;
    for (int v : r) rhs.emplace_back(q, v);
    auto sol = m.solve(rhs);
    if (!sol) throw ArrangementError("root outside the simple-root lattice");
    Entry e{r, {}, 0};
    for (const auto& s : *sol) {
      const mpq_class& v = s.rational_value();
      if (v.get_den() != 1 || v < 0) throw ArrangementError("root is not a nonnegative integer combination");
      e.coords.push_back(static_cast<int>(v.get_num().get_si()));
      e.height += e.coords.back();
    }
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords > b.coords;
  });
  for (auto& e : entries) {
    rs.roots.push_back(e.root);
    rs.simple_coordinates.push_back(e.coords);
    rs.heights.push_back(e.height);
  }
  return rs;
}

namespace {

// Index of a root in Phi^+ violating downward closure, with its witness.
bool find_violation(const RootSystem& rs, const std::vector<int>& ideal, int* beta, int* gamma) {
  std::vector<bool> in(rs.roots.size(), false);
  for (int i : ideal) {
    if (i < 0 || i >= static_cast<int>(rs.roots.size())) throw ArrangementError("root index out of range");
    in[static_cast<std::size_t>(i)] = true;
  }
  for (int b : ideal)
    for (std::size_t g = 0; g < rs.roots.size(); ++g) {
      if (in[g]) continue;
      const auto& cb = rs.simple_coordinates[static_cast<std::size_t>(b)];
      const auto& cg = rs.simple_coordinates[g];
      bool below = true;
      for (std::size_t k = 0; k < cb.size(); ++k)
        if (cb[k] < cg[k]) below = false;
      if (below) {
        *beta = b;
        *gamma = static_cast<int>(g);
        return true;
      }
    }
  return false;
}

}  // namespace

void validate_lower_ideal(const RootSystem& rs, const std::vector<int>& ideal) {
  int b = 0, g = 0;
  if (find_violation(rs, ideal, &b, &g))
    throw ArrangementError("not a lower ideal: " + root_string(rs.roots[static_cast<std::size_t>(b)]) +
                           " is in the ideal but " + root_string(rs.roots[static_cast<std::size_t>(g)]) +
                           " below it is not");
}

bool is_lower_ideal(const RootSystem& rs, const std::vector<int>& ideal) {
  int b = 0, g = 0;
  return !find_violation(rs, ideal, &b, &g);
}

std::vector<std::vector<int>> all_lower_ideals(const RootSystem& rs) {
  const int n = static_cast<int>(rs.roots.size());
  if (n > 20) throw ArrangementError("too many positive roots to enumerate ideals");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> ideal;
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) ideal.push_back(i);
    if (is_lower_ideal(rs, ideal)) out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> ideal_exponents(const RootSystem& rs, const std::vector<int>& ideal, int length) {
  validate_lower_ideal(rs, ideal);
  std::vector<int> counts;  // counts[h - 1] = roots of height h
  for (int i : ideal) {
    const int h = rs.heights[static_cast<std::size_t>(i)];
    if (static_cast<int>(counts.size()) < h) counts.resize(static_cast<std::size_t>(h), 0);
    ++counts[static_cast<std::size_t>(h - 1)];
  }
  std::vector<int> dual;
  const int parts = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  for (int j = 1; j <= parts; ++j)
    dual.push_back(static_cast<int>(std::count_if(counts.begin(), counts.end(), [j](int c) { return c >= j; })));
  if (length < 0) length = rs.rank;
  while (static_cast<int>(dual.size()) < length) dual.push_back(0);
  std::sort(dual.begin(), dual.end());
  return dual;
}

Arrangement ideal_arrangement(const RootSystem& rs, const std::vector<int>& ideal) {
  validate_lower_ideal(rs, ideal);
  const auto* q = FieldDescriptor::rational();
  std::vector<ScalarVector> normals;
  for (int i : ideal) {
    ScalarVector v;
    for (int c : rs.roots[static_cast<std::size_t>(i)]) v.emplace_back(q, c);
    normals.push_back(std::move(v));
  }
  return Arrangement(q, rs.ambient, normals);
}

Arrangement weyl_arrangement(const RootSystem& rs) {
  std::vector<int> all(rs.roots.size());
  std::iota(all.begin(), all.end(), 0);
  return ideal_arrangement(rs, all);
}

Polynomial lowest_invariant(const RootSystem& rs) {
  const auto* q = FieldDescriptor::rational();
  Polynomial p(q, rs.ambient);
  for (int i = 0; i < rs.ambient; ++i) p += Polynomial::monomial(q, rs.ambient, Monomial::variable(i, 2), Scalar(q, 1));
  return p;
}

Permutation parse_permutation(const std::string& s) {
  Permutation w;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        w.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ArrangementError("bad permutation entry '" + item + "'");
      }
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw ArrangementError("bad permutation '" + s + "'");
      w.push_back(c - '0');
    }
  }
  validate_permutation(w);
  return w;
}

void validate_permutation(const Permutation& w) {
  const int n = static_cast<int>(w.size());
  if (n == 0 || n > 8) throw ArrangementError("permutations need 1 to 8 letters");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : w) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw ArrangementError("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

std::string permutation_to_string(const Permutation& w) {
  std::string s;
  const bool wide = w.size() > 9;
  for (std::size_t i = 0; i < w.size(); ++i) s += (wide && i ? "," : "") + std::to_string(w[i]);
  return s;
}

Arrangement inversion_arrangement(const Permutation& w) {
  validate_permutation(w);
  const int n = static_cast<int>(w.size());
  const auto* q = FieldDescriptor::rational();
  std::vector<ScalarVector> normals;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)]) {
        ScalarVector v(static_cast<std::size_t>(n), Scalar(q));
        v[static_cast<std::size_t>(i)] = Scalar(q, 1);
        v[static_cast<std::size_t>(j)] = Scalar(q, -1);
        normals.push_back(std::move(v));
      }
  return Arrangement(q, n, normals);
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw ArrangementError("permutations of different sizes");
  for (std::size_t k = 1; k < u.size(); ++k) {
    std::vector<int> a(u.begin(), u.begin() + static_cast<long>(k));
    std::vector<int> b(w.begin(), w.begin() + static_cast<long>(k));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

long bruhat_interval_size(const Permutation& w) {
  validate_permutation(w);
  long count = 0;
  for (const auto& u : all_permutations(static_cast<int>(w.size())))
    if (bruhat_leq(u, w)) ++count;
  return count;
}

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(pattern.size());
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    bool match = true;
    for (int a = 0; a < k && match; ++a)
      for (int b = a + 1; b < k && match; ++b)
        match = (w[static_cast<std::size_t>(pick[static_cast<std::size_t>(a)])] <
                 w[static_cast<std::size_t>(pick[static_cast<std::size_t>(b)])]) ==
                (pattern[static_cast<std::size_t>(a)] < pattern[static_cast<std::size_t>(b)]);
    if (match) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool schubert_smooth(const Permutation& w) {
  return !contains_pattern(w, {3, 4, 1, 2}) && !contains_pattern(w, {4, 2, 3, 1});
}

}  // namespace starr
