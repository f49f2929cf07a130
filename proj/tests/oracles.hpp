// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's algorithms.
#ifndef PBW_TESTS_ORACLES_HPP
#define PBW_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<int, int>;  // (i, j)

inline bool leq(Pair a, Pair b) { return a.first <= b.first && a.second <= b.second; }

/// Elements (i, j) with j <= d < i for some d in ds, lexicographic.
inline std::vector<Pair> poset(int n, const std::vector<int>& ds) {
  std::vector<Pair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      for (int d : ds)
        if (j <= d && d < i) {
          out.emplace_back(i, j);
          break;
        }
  return out;
}

/// Largest antichain by checking every subset.
inline int width(const std::vector<Pair>& s) {
  const std::size_t k = s.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    bool ok = true;
    int size = 0;
    for (std::size_t a = 0; a < k && ok; ++a) {
      if (!(mask >> a & 1u)) continue;
      ++size;
      for (std::size_t b = a + 1; b < k; ++b)
        if ((mask >> b & 1u) && (leq(s[a], s[b]) || leq(s[b], s[a]))) {
          ok = false;
          break;
        }
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

/// Prefix markings Λ_1..Λ_n (index 0 unused).
inline std::vector<int> markings(const std::vector<int>& m) {
  std::vector<int> L(m.size() + 2, 0);
  for (std::size_t t = 2; t < L.size(); ++t) L[t] = L[t - 1] + m[t - 2];
  return L;
}

/// max over subsets S of the support of sum_S x - sum_d m_d width(S ∩ P_d).
inline int defect(int n, const std::vector<int>& ds, const std::vector<int>& m, const std::vector<int>& x) {
  const auto P = poset(n, ds);
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < P.size(); ++k)
    if (x[k] > 0) support.push_back(k);
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << support.size()); ++mask) {
    int value = 0;
    std::vector<Pair> S;
    for (std::size_t a = 0; a < support.size(); ++a)
      if (mask >> a & 1u) {
        value += x[support[a]];
        S.push_back(P[support[a]]);
      }
    for (int d : ds) {
      std::vector<Pair> layer;
      for (auto p : S)
        if (p.second <= d && d < p.first) layer.push_back(p);
      value -= m[static_cast<std::size_t>(d - 1)] * width(layer);
    }
    best = std::max(best, value);
  }
  return best;
}

/// Lattice points of the polytope by scanning the box of singleton bounds.
inline std::vector<std::vector<int>> lattice_points(int n, const std::vector<int>& ds, const std::vector<int>& m,
                                                    int M) {
  const auto P = poset(n, ds);
  const auto L = markings(m);
  std::vector<int> bound;
  for (auto [i, j] : P) bound.push_back(M + L[static_cast<std::size_t>(i)] - L[static_cast<std::size_t>(j)]);
  std::vector<std::vector<int>> out;
  std::vector<int> x(P.size(), 0);
  while (true) {
    if (defect(n, ds, m, x) <= M) out.push_back(x);
    std::size_t k = P.size();
    while (k > 0) {
      --k;
      if (x[k] < bound[k]) {
        ++x[k];
        break;
      }
      x[k] = 0;
      if (k == 0) return out;
    }
    if (P.empty()) return out;
  }
}

/// Collections of subsets with |J_d| = d and J_{d_a} \ {d_a+1..d_{a+1}} ⊆ J_{d_{a+1}},
/// found by scanning every tuple of bitmasks.
inline std::vector<std::vector<std::vector<int>>> admissible_tuples(int n, const std::vector<int>& ds) {
  std::vector<std::vector<std::uint32_t>> choices;
  for (int d : ds) {
    std::vector<std::uint32_t> c;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (__builtin_popcount(mask) == d) c.push_back(mask);
    choices.push_back(c);
  }
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::size_t> pick(ds.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a + 1 < ds.size() && ok; ++a) {
      std::uint32_t killed = 0;
      for (int r = ds[a] + 1; r <= ds[a + 1]; ++r) killed |= 1u << (r - 1);
      const std::uint32_t lower = choices[a][pick[a]] & ~killed;
      ok = (lower & ~choices[a + 1][pick[a + 1]]) == 0;
    }
    if (ok) {
      std::vector<std::vector<int>> tuple;
      for (std::size_t a = 0; a < ds.size(); ++a) {
        std::vector<int> s;
        for (int r = 1; r <= n; ++r)
          if (choices[a][pick[a]] >> (r - 1) & 1u) s.push_back(r);
        tuple.push_back(s);
      }
      out.push_back(tuple);
    }
    std::size_t a = ds.size();
    while (a > 0) {
      --a;
      if (++pick[a] < choices[a].size()) break;
      pick[a] = 0;
      if (a == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

/// Normalized median Genocchi numbers h_n for n = 1, 2, ...: 1, 2, 7, 38, 295, ...
/// from the Seidel triangle. Row r is built by partial sums, alternating direction.
inline std::vector<std::uint64_t> normalized_median_genocchi(int count) {
  std::vector<std::vector<std::uint64_t>> rows{{1}};
  const int needed = 2 * count + 2;
  while (static_cast<int>(rows.size()) < needed) {
    const auto& p = rows.back();
    std::vector<std::uint64_t> row;
    if (rows.size() % 2 == 1) {
      // next row has even 1-based index: suffix sums with a trailing zero
      for (std::size_t k = 0; k <= p.size(); ++k) {
        std::uint64_t s = 0;
        for (std::size_t t = k; t < p.size(); ++t) s += p[t];
        row.push_back(s);
      }
    } else {
      for (std::size_t k = 0; k < p.size(); ++k) {
        std::uint64_t s = 0;
        for (std::size_t t = 0; t <= k; ++t) s += p[t];
        row.push_back(s);
      }
    }
    rows.push_back(row);
  }
  // The head of the (2n+2)-th row is 2^n h_n.
  std::vector<std::uint64_t> out;
  for (int n = 1; n <= count; ++n) out.push_back(rows[static_cast<std::size_t>(2 * n + 1)][0] >> n);
  return out;
}

/// dim of the sl_n irreducible of partition λ via the hook content formula.
inline std::uint64_t hook_content_dim(int n, const std::vector<int>& m) {
  std::vector<int> part(static_cast<std::size_t>(n), 0);
  for (int i = n - 2; i >= 0; --i) part[static_cast<std::size_t>(i)] = part[static_cast<std::size_t>(i) + 1] + m[static_cast<std::size_t>(i)];
  // conjugate partition
  std::vector<int> conj(part.empty() ? 0 : static_cast<std::size_t>(part[0]), 0);
  for (int r : part)
    for (int c = 0; c < r; ++c) ++conj[static_cast<std::size_t>(c)];
  unsigned __int128 num = 1, den = 1;
  for (std::size_t r = 0; r < part.size(); ++r)
    for (int c = 0; c < part[r]; ++c) {
      num *= static_cast<unsigned>(n + c - static_cast<int>(r));
      den *= static_cast<unsigned>(part[r] - c + conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1);
      const auto g = std::__gcd(num, den);
      num /= g;
      den /= g;
    }
  return static_cast<std::uint64_t>(num / den);
}

/// Pascal triangle entry C(a, b).
inline std::uint64_t pascal(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= a; ++r) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(r) + 1, 1);
    for (int k = 1; k < r; ++k) next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1] + row[static_cast<std::size_t>(k)];
    row = next;
  }
  return row[static_cast<std::size_t>(b)];
}

}  // namespace oracle

#endif
