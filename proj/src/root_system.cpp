#include "binf/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace binf {

LieType LieType::parse(std::string_view text) {
  if (text == "e6" || text == "E6") return e6();
  if (text == "e7" || text == "E7") return e7();
  throw std::invalid_argument("unknown Lie type '" + std::string(text) + "' (expected e6 or e7)");
}

namespace {

template <class V>
std::string format_vector(const V& v) {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < v.rank; ++k) os << (k ? "," : "") << v.c[k];
  os << ')';
  return os.str();
}

}  // namespace

std::string to_string(const WeightVector& w) { return format_vector(w); }
std::string to_string(const RootVector& r) { return format_vector(r); }

CartanMatrix::CartanMatrix(LieType t) : type_(t) {
  const int n = t.rank();
  for (int i = 0; i < n; ++i) a_[i][i] = 2;
  auto link = [&](int i, int j) {
    a_[i - 1][j - 1] = -1;
    a_[j - 1][i - 1] = -1;
  };
  link(1, 2);
  link(2, 3);
  link(3, 4);
  link(4, 5);
  link(3, 6);
  if (t.kind() == LieKind::E7) link(7, 1);
}

CartanMatrix cartan_matrix(LieType t) { return CartanMatrix(t); }

WeightVector simple_root_as_weight(LieType t, int i) {
  if (i < 1 || i > t.rank()) throw std::out_of_range("color index " + std::to_string(i) + " out of range");
  const CartanMatrix a(t);
  WeightVector w(t.rank());
  for (int j = 1; j <= t.rank(); ++j) w[j] = a(i, j);
  return w;
}

WeightVector to_weight(LieType t, const RootVector& r) {
  const CartanMatrix a(t);
  WeightVector w(t.rank());
  for (int i = 1; i <= t.rank(); ++i) {
    if (r[i] == 0) continue;
    for (int j = 1; j <= t.rank(); ++j) w[j] += r[i] * a(i, j);
  }
  return w;
}

RootVector simple_root(LieType t, int i) {
  if (i < 1 || i > t.rank()) throw std::out_of_range("color index " + std::to_string(i) + " out of range");
  RootVector r(t.rank());
  r[i] = 1;
  return r;
}

std::vector<RootVector> positive_roots(LieType t) {
  const CartanMatrix a(t);
  const int n = t.rank();
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i = 1; i <= n; ++i) {
    seen.insert(simple_root(t, i));
    queue.push_back(simple_root(t, i));
  }
  while (!queue.empty()) {
    const RootVector beta = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      // (beta, alpha_i) via the symmetric form; -1 means beta + alpha_i is a root.
      int inner = 0;
      for (int j = 1; j <= n; ++j) inner += beta[j] * a(j, i);
      if (inner != -1) continue;
      RootVector next = beta + simple_root(t, i);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<RootVector> roots(seen.begin(), seen.end());
  std::stable_sort(roots.begin(), roots.end(),
                   [](const RootVector& x, const RootVector& y) { return x.sum() < y.sum(); });
  return roots;
}

std::uint64_t kostant_count(LieType t, const RootVector& mu) {
  const int n = t.rank();
  for (int k = 0; k < n; ++k)
    if (mu.c[k] < 0) return 0;

  // Dense table over the box [0, mu], mixed radix.
  std::array<std::size_t, kMaxRank> stride{};
  std::size_t size = 1;
  for (int k = 0; k < n; ++k) {
    stride[k] = size;
    size *= static_cast<std::size_t>(mu.c[k] + 1);
  }
  std::vector<std::uint64_t> f(size, 0);
  f[0] = 1;

  for (const RootVector& beta : positive_roots(t)) {
    bool fits = true;
    std::size_t offset = 0;
    for (int k = 0; k < n; ++k) {
      if (beta.c[k] > mu.c[k]) fits = false;
      offset += stride[k] * static_cast<std::size_t>(beta.c[k]);
    }
    if (!fits) continue;
    // Unbounded-knapsack sweep: index order is compatible with componentwise order.
    for (std::size_t idx = 0; idx < size; ++idx) {
      bool ok = true;
      std::size_t rem = idx;
      for (int k = n - 1; k >= 0; --k) {
        const std::size_t digit = rem / stride[k];
        rem %= stride[k];
        if (static_cast<int>(digit) < beta.c[k]) {
          ok = false;
          break;
        }
      }
      if (ok) f[idx] += f[idx - offset];
    }
  }
  return f[size - 1];
}

std::vector<RootVector> vectors_of_height(LieType t, int height) {
  std::vector<RootVector> out;
  RootVector cur(t.rank());
  auto rec = [&](auto&& self, int color, int remaining) -> void {
    if (color == t.rank()) {
      cur[color] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[color] = v;
      self(self, color + 1, remaining - v);
    }
  };
  if (height >= 0) rec(rec, 1, height);
  return out;
}

std::map<RootVector, std::uint64_t> kostant_table(LieType t, int max_height) {
  std::map<RootVector, std::uint64_t> table;
  table[RootVector(t.rank())] = 1;
  std::vector<RootVector> all{RootVector(t.rank())};
  for (int h = 1; h <= max_height; ++h)
    for (const RootVector& v : vectors_of_height(t, h)) {
      table[v] = 0;
      all.push_back(v);
    }
  // Roots processed one at a time; vectors visited in nondecreasing height.
  for (const RootVector& beta : positive_roots(t)) {
    for (const RootVector& v : all) {
      const RootVector prev = v - beta;
      bool nonneg = true;
      for (int k = 0; k < t.rank(); ++k)
        if (prev.c[k] < 0) nonneg = false;
      if (!nonneg) continue;
      table[v] += table[prev];
    }
  }
  return table;
}

}  // namespace binf
