#ifndef STARR_TESTS_BRUHAT_ORACLE_HPP
#define STARR_TESTS_BRUHAT_ORACLE_HPP

// [e, w] by breadth-first search: u covers u * (i j) whenever the swap of
// positions i < j with u(i) > u(j) lowers the length by one.

#include <queue>
#include <set>
#include <vector>

namespace oracle {

inline int inversions(const std::vector<int>& u) {
  int c = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] > u[j]) ++c;
  return c;
}

inline long bruhat_lower_interval(const std::vector<int>& w) {
  std::set<std::vector<int>> seen{w};
  std::queue<std::vector<int>> todo;
  todo.push(w);
  while (!todo.empty()) {
    const auto u = todo.front();
    todo.pop();
    const int len = inversions(u);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        if (u[i] < u[j]) continue;
        auto v = u;
        std::swap(v[i], v[j]);
        if (inversions(v) != len - 1) continue;
        if (seen.insert(v).second) todo.push(v);
      }
  }
  return static_cast<long>(seen.size());
}

}  // namespace oracle

#endif
