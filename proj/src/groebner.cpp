#include "starr/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "starr/linalg.hpp"

namespace starr {

namespace {

using Accumulator = std::map<ModuleKey, Scalar, ModuleKeyGreater>;

void accumulate(Accumulator& acc, int comp, const Monomial& m, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(ModuleKey{comp, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

int find_reducer(const std::vector<ModuleElement>& basis, const std::vector<int>& candidates,
                 const Monomial& m, int skip) {
  for (int k : candidates) {
    if (k == skip) continue;
    if (basis[static_cast<std::size_t>(k)].leading_term().mono.divides(m)) return k;
  }
  return -1;
}

// Full reduction against monic elements; `skip` excludes one index.
ModuleElement reduce(const ModuleElement& f, const std::vector<ModuleElement>& basis,
                     const std::vector<std::vector<int>>& by_comp, int skip = -1) {
  if (f.is_zero()) return f;
  Accumulator acc;
  for (const auto& t : f.terms()) acc.emplace(ModuleKey{t.comp, t.mono}, t.coeff);
  std::vector<ModuleTerm> out;
  while (!acc.empty()) {
    auto it = acc.begin();
    const int comp = it->first.comp;
    const Monomial mono = it->first.mono;
    const Scalar c = it->second;
    acc.erase(it);
    const int k = find_reducer(basis, by_comp[static_cast<std::size_t>(comp)], mono, skip);
    if (k < 0) {
      out.push_back({comp, mono, c});
      continue;
    }
    const auto& g = basis[static_cast<std::size_t>(k)];
    const Monomial q = Monomial::quotient(mono, g.leading_term().mono);
    const Scalar neg = -c;
    const auto& gt = g.terms();
    for (std::size_t i = 1; i < gt.size(); ++i) accumulate(acc, gt[i].comp, gt[i].mono * q, neg * gt[i].coeff);
  }
  return ModuleElement::from_terms(f.field(), f.nvars(), f.rank(), std::move(out));
}

ModuleElement spair(const ModuleElement& a, const ModuleElement& b) {
  const auto& la = a.leading_term();
  const auto& lb = b.leading_term();
  const Monomial l = Monomial::lcm(la.mono, lb.mono);
  return a.multiply_term(Monomial::quotient(l, la.mono), lb.coeff) -
         b.multiply_term(Monomial::quotient(l, lb.mono), la.coeff);
}

std::vector<std::vector<int>> index_by_component(const std::vector<ModuleElement>& basis, int rank) {
  std::vector<std::vector<int>> by(static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < basis.size(); ++i)
    by[static_cast<std::size_t>(basis[i].leading_term().comp)].push_back(static_cast<int>(i));
  return by;
}

struct Item {
  int degree;
  int kind;  // 0: input generator, 1: S-pair
  int comp;
  Monomial lcm;
  int i;
  int j;
};

struct ItemLess {
  bool operator()(const Item& a, const Item& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == 1) {
      int c = compare_pot(a.comp, a.lcm, b.comp, b.lcm);
      if (c != 0) return c < 0;
    }
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<ModuleElement> interreduce(std::vector<ModuleElement> g, int rank) {
  std::vector<ModuleElement> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& li = g[i].leading_term();
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& lj = g[j].leading_term();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      redundant = lj.mono != li.mono || j < i;
    }
    if (!redundant) kept.push_back(g[i]);
  }
  auto by = index_by_component(kept, rank);
  std::vector<ModuleElement> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) out.push_back(reduce(kept[i], kept, by, static_cast<int>(i)).monic());
  std::sort(out.begin(), out.end(), [](const ModuleElement& a, const ModuleElement& b) {
    const auto& x = a.leading_term();
    const auto& y = b.leading_term();
    return compare_pot(x.comp, x.mono, y.comp, y.mono) > 0;
  });
  return out;
}

}  // namespace

GroebnerBasis::GroebnerBasis(FreeModule ambient, std::vector<ModuleElement> reduced)
    : ambient_(std::move(ambient)), elems_(std::move(reduced)) {
  by_comp_ = index_by_component(elems_, ambient_.rank);
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elems_.size());
  for (const auto& e : elems_) out.push_back(e.component(0));
  return out;
}

ModuleElement GroebnerBasis::normal_form(const ModuleElement& f) const {
  if (f.rank() != ambient_.rank) throw PolynomialError("normal form: rank mismatch");
  return reduce(f, elems_, by_comp_);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (ambient_.rank != 1) throw PolynomialError("polynomial normal form needs a rank-one ambient");
  if (f.is_zero()) return f;
  return reduce(ModuleElement::from_polynomial(f), elems_, by_comp_).component(0);
}

bool GroebnerBasis::is_everything() const {
  for (int c = 0; c < ambient_.rank; ++c) {
    bool unit = false;
    for (int k : by_comp_[static_cast<std::size_t>(c)])
      if (elems_[static_cast<std::size_t>(k)].leading_term().mono.is_one()) unit = true;
    if (!unit) return false;
  }
  return true;
}

bool GroebnerBasis::all_spairs_reduce_to_zero() const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = i + 1; j < elems_.size(); ++j) {
      if (elems_[i].leading_term().comp != elems_[j].leading_term().comp) continue;
      if (!normal_form(spair(elems_[i], elems_[j])).is_zero()) return false;
    }
  return true;
}

std::vector<std::vector<Monomial>> GroebnerBasis::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(ambient_.rank));
  for (const auto& e : elems_) out[static_cast<std::size_t>(e.leading_term().comp)].push_back(e.leading_term().mono);
  return out;
}

HilbertSeries GroebnerBasis::quotient_hilbert_series() const {
  auto leads = leading_monomials();
  IntPoly num;
  for (int c = 0; c < ambient_.rank; ++c) {
    if (ambient_.shift(c) < 0) throw SeriesError("negative degree shift");
    num += IntPoly::monomial(ambient_.shift(c)) * hilbert_numerator(leads[static_cast<std::size_t>(c)]);
  }
  return {num, ambient_.nvars};
}

HilbertSeries GroebnerBasis::submodule_hilbert_series() const {
  auto leads = leading_monomials();
  IntPoly num;
  for (int c = 0; c < ambient_.rank; ++c) {
    if (ambient_.shift(c) < 0) throw SeriesError("negative degree shift");
    num += IntPoly::monomial(ambient_.shift(c)) * (IntPoly{1} - hilbert_numerator(leads[static_cast<std::size_t>(c)]));
  }
  return {num, ambient_.nvars};
}

GroebnerBasis buchberger(const FreeModule& ambient, const std::vector<ModuleElement>& gens) {
  const bool ideal = ambient.rank == 1;
  std::vector<ModuleElement> g;
  std::vector<std::vector<int>> by(static_cast<std::size_t>(ambient.rank));
  std::vector<std::vector<char>> pending;  // pending[j][i], i < j
  std::set<Item, ItemLess> queue;

  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].rank() != ambient.rank) throw PolynomialError("generator rank mismatch");
    if (gens[i].is_zero()) continue;
    queue.insert({gens[i].degree(ambient.shifts), 0, 0, Monomial(), static_cast<int>(i), 0});
  }

  auto is_pending = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return pending[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] != 0;
  };

  auto add = [&](ModuleElement h) {
    h = h.monic();
    const int t = static_cast<int>(g.size());
    const int comp = h.leading_term().comp;
    pending.emplace_back(static_cast<std::size_t>(t), 0);
    for (int i : by[static_cast<std::size_t>(comp)]) {
      const Monomial l = Monomial::lcm(g[static_cast<std::size_t>(i)].leading_term().mono, h.leading_term().mono);
      queue.insert({l.degree() + ambient.shift(comp), 1, comp, l, i, t});
      pending[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] = 1;
    }
    by[static_cast<std::size_t>(comp)].push_back(t);
    g.push_back(std::move(h));
  };

  while (!queue.empty()) {
    Item item = *queue.begin();
    queue.erase(queue.begin());
    ModuleElement h;
    if (item.kind == 0) {
      h = reduce(gens[static_cast<std::size_t>(item.i)], g, by);
    } else {
      pending[static_cast<std::size_t>(item.j)][static_cast<std::size_t>(item.i)] = 0;
      const auto& a = g[static_cast<std::size_t>(item.i)];
      const auto& b = g[static_cast<std::size_t>(item.j)];
      if (ideal && a.leading_term().mono.coprime(b.leading_term().mono)) continue;
      bool chain = false;
      for (int k : by[static_cast<std::size_t>(item.comp)]) {
        if (k == item.i || k == item.j) continue;
        if (!g[static_cast<std::size_t>(k)].leading_term().mono.divides(item.lcm)) continue;
        if (!is_pending(item.i, k) && !is_pending(item.j, k)) {
          chain = true;
          break;
        }
      }
      if (chain) continue;
      h = reduce(spair(a, b), g, by);
    }
    if (!h.is_zero()) add(std::move(h));
  }
  return GroebnerBasis(ambient, interreduce(std::move(g), ambient.rank));
}

GroebnerBasis ideal_basis(const FieldDescriptor* field, int nvars, const std::vector<Polynomial>& gens) {
  std::vector<ModuleElement> m;
  m.reserve(gens.size());
  for (const auto& p : gens) {
    if (p.nvars() != nvars || p.field() != field) throw PolynomialError("ideal generator lives in another ring");
    m.push_back(ModuleElement::from_polynomial(p));
  }
  return buchberger(FreeModule::make(field, nvars, 1), m);
}

IntPoly hilbert_numerator(std::vector<Monomial> gens) {
  // Keep the minimal generators only.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b) < 0; });
  std::vector<Monomial> minimal;
  for (const auto& m : gens) {
    bool divisible = false;
    for (const auto& k : minimal)
      if (k.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) minimal.push_back(m);
  }
  if (minimal.empty()) return IntPoly{1};
  if (minimal.front().is_one()) return IntPoly();

  std::array<int, kMaxVars> count{};
  bool coprime = true;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    for (int v = 0; v < kMaxVars; ++v)
      if (minimal[i][v]) ++count[static_cast<std::size_t>(v)];
  }
  for (int v = 0; v < kMaxVars; ++v)
    if (count[static_cast<std::size_t>(v)] > 1) coprime = false;
  if (coprime) {
    IntPoly out{1};
    for (const auto& m : minimal) out = out * (IntPoly{1} - IntPoly::monomial(m.degree()));
    return out;
  }

  const int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  const Monomial p = Monomial::variable(pivot);
  std::vector<Monomial> sum = minimal;
  sum.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(minimal.size());
  for (const auto& m : minimal) colon.push_back(Monomial::colon(m, p));
  return hilbert_numerator(std::move(sum)) + IntPoly::monomial(1) * hilbert_numerator(std::move(colon));
}

GroebnerBasis kernel_of_map(const FreeModule& source, const FreeModule& target,
                            const std::vector<ModuleElement>& columns,
                            const std::vector<ModuleElement>& relations) {
  if (static_cast<int>(columns.size()) != source.rank) throw PolynomialError("kernel: one column per source generator");
  const int m = target.rank;
  const int rank = m + source.rank;
  std::vector<int> shifts = target.shifts;
  shifts.insert(shifts.end(), source.shifts.begin(), source.shifts.end());
  FreeModule aug = FreeModule::make(source.field, source.nvars, rank, shifts);

  std::vector<ModuleElement> gens;
  gens.reserve(columns.size() + relations.size());
  for (int j = 0; j < source.rank; ++j) {
    const auto& col = columns[static_cast<std::size_t>(j)];
    if (col.rank() != m) throw PolynomialError("kernel: column rank mismatch");
    gens.push_back(col.shifted_components(0, rank) + ModuleElement::basis_vector(source.field, source.nvars, rank, m + j));
  }
  for (const auto& r : relations) {
    if (r.rank() != m) throw PolynomialError("kernel: relation rank mismatch");
    gens.push_back(r.shifted_components(0, rank));
  }
  GroebnerBasis gb = buchberger(aug, gens);
  std::vector<ModuleElement> kernel;
  for (const auto& e : gb.elements())
    if (e.leading_term().comp >= m) kernel.push_back(e.shifted_components(-m, source.rank));
  return GroebnerBasis(source, std::move(kernel));
}

GroebnerBasis syzygies(const FreeModule& ambient, const std::vector<ModuleElement>& gens) {
  std::vector<int> shifts;
  shifts.reserve(gens.size());
  for (const auto& g : gens) shifts.push_back(std::max(g.degree(ambient.shifts), 0));
  FreeModule source = FreeModule::make(ambient.field, ambient.nvars, static_cast<int>(gens.size()), shifts);
  return kernel_of_map(source, ambient, gens, {});
}

std::vector<ModuleElement> minimal_generators(const FreeModule& ambient, const std::vector<ModuleElement>& gens) {
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    if (!gens[i].is_homogeneous(ambient.shifts)) throw PolynomialError("minimal generators need homogeneous input");
    order.emplace_back(gens[i].degree(ambient.shifts), i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<ModuleElement> kept;
  std::size_t pos = 0;
  while (pos < order.size()) {
    const int d = order[pos].first;
    std::size_t end = pos;
    while (end < order.size() && order[end].first == d) ++end;

    GroebnerBasis gb = buchberger(ambient, kept);
    std::vector<ModuleElement> nfs;
    std::map<ModuleKey, int, ModuleKeyGreater> columns;
    for (std::size_t k = pos; k < end; ++k) {
      nfs.push_back(gb.normal_form(gens[order[k].second]));
      for (const auto& t : nfs.back().terms()) columns.try_emplace(ModuleKey{t.comp, t.mono}, 0);
    }
    int idx = 0;
    for (auto& [key, col] : columns) col = idx++;
    RowSpace space(ambient.field, idx);
    for (std::size_t k = pos; k < end; ++k) {
      const auto& nf = nfs[k - pos];
      if (nf.is_zero()) continue;
      ScalarVector v(static_cast<std::size_t>(idx), Scalar(ambient.field));
      for (const auto& t : nf.terms()) v[static_cast<std::size_t>(columns.at(ModuleKey{t.comp, t.mono}))] = t.coeff;
      if (space.insert(std::move(v))) kept.push_back(gens[order[k].second]);
    }
    pos = end;
  }
  return kept;
}

std::vector<Polynomial> minimal_generators(const FieldDescriptor* field, int nvars, const std::vector<Polynomial>& gens) {
  std::vector<ModuleElement> m;
  for (const auto& p : gens) m.push_back(ModuleElement::from_polynomial(p));
  std::vector<Polynomial> out;
  for (const auto& e : minimal_generators(FreeModule::make(field, nvars, 1), m)) out.push_back(e.component(0));
  return out;
}

HilbertSeries FreeResolution::euler_characteristic(int nvars) const {
  IntPoly num;
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (int d : levels[i]) {
      if (i % 2 == 0) num += IntPoly::monomial(d);
      else num -= IntPoly::monomial(d);
    }
  return {num, nvars};
}

FreeResolution free_resolution(const FreeModule& ambient, const std::vector<ModuleElement>& gens) {
  FreeResolution res;
  FreeModule f = ambient;
  std::vector<ModuleElement> current = minimal_generators(ambient, gens);
  while (!current.empty()) {
    std::vector<int> degrees;
    for (const auto& g : current) degrees.push_back(g.degree(f.shifts));
    res.levels.push_back(degrees);
    GroebnerBasis syz = syzygies(f, current);
    f = FreeModule::make(ambient.field, ambient.nvars, static_cast<int>(current.size()), degrees);
    current = minimal_generators(f, syz.elements());
  }
  return res;
}

int projective_dimension(const FreeModule& ambient, const std::vector<ModuleElement>& gens) {
  return free_resolution(ambient, gens).length();
}

}  // namespace starr
