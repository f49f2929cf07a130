#include "pbw/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>

namespace pbw {

RootPoset::RootPoset(FlagType type) : type_(std::move(type)) {
  const int n = type_.n();
  index_.assign(static_cast<std::size_t>(n * n), -1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      const PosetElement e{i, j};
      const bool member = std::any_of(type_.d().begin(), type_.d().end(),
                                      [&](int d) { return in_layer(e, d); });
      if (!member) continue;
      index_[static_cast<std::size_t>((i - 1) * n + (j - 1))] = static_cast<int>(elements_.size());
      elements_.push_back(e);
    }
  }
}

std::optional<std::size_t> RootPoset::index_of(PosetElement e) const {
  const int n = type_.n();
  if (e.i < 1 || e.i > n || e.j < 1 || e.j > n) return std::nullopt;
  const int k = index_[static_cast<std::size_t>((e.i - 1) * n + (e.j - 1))];
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

std::vector<PosetElement> RootPoset::layer(int d) const {
  if (!type_.contains(d)) throw ValidationError("layer " + std::to_string(d) + " not in flag type");
  std::vector<PosetElement> out;
  for (const auto& e : elements_)
    if (in_layer(e, d)) out.push_back(e);
  return out;
}

void RootPoset::check_subset(std::span<const PosetElement> subset) const {
  std::set<PosetElement> seen;
  for (const auto& e : subset) {
    if (!contains(e))
      throw ValidationError("element (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                            ") is not in the poset");
    if (!seen.insert(e).second) throw ValidationError("subset contains duplicates");
  }
}

RootPoset build_poset(const FlagType& type) { return RootPoset(type); }

bool Chain::meets_layer(int d) const {
  return std::any_of(elements.begin(), elements.end(), [d](PosetElement e) { return in_layer(e, d); });
}

bool Chain::is_chain() const {
  if (elements.empty()) return false;
  for (std::size_t k = 1; k < elements.size(); ++k)
    if (!poset_less(elements[k - 1], elements[k])) return false;
  return true;
}

std::vector<PosetElement> max_antichain_bruteforce(std::span<const PosetElement> subset) {
  const std::size_t k = subset.size();
  if (k > 63) throw ResourceGuardError("brute-force antichain search limited to 63 elements");
  std::vector<std::uint64_t> comparable_mask(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a != b && comparable(subset[a], subset[b])) comparable_mask[a] |= std::uint64_t{1} << b;

  // Branch on the lowest remaining element: take it (dropping everything it is
  // comparable with) or skip it.
  std::uint64_t best_set = 0;
  int best_size = 0;
  std::function<void(std::uint64_t, std::uint64_t, int)> search = [&](std::uint64_t remaining,
                                                                     std::uint64_t chosen, int size) {
    if (size + std::popcount(remaining) <= best_size) return;
    if (remaining == 0) {
      best_size = size;
      best_set = chosen;
      return;
    }
    const int v = std::countr_zero(remaining);
    const std::uint64_t bit = std::uint64_t{1} << v;
    search(remaining & ~bit & ~comparable_mask[static_cast<std::size_t>(v)], chosen | bit, size + 1);
    search(remaining & ~bit, chosen, size);
  };
  const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  search(all, 0, 0);

  std::vector<PosetElement> out;
  for (std::size_t a = 0; a < k; ++a)
    if (best_set >> a & 1u) out.push_back(subset[a]);
  std::sort(out.begin(), out.end());
  return out;
}

int width_bruteforce(std::span<const PosetElement> subset) {
  return static_cast<int>(max_antichain_bruteforce(subset).size());
}

std::vector<Chain> minimum_chain_cover(std::span<const PosetElement> subset) {
  std::vector<PosetElement> elems(subset.begin(), subset.end());
  std::sort(elems.begin(), elems.end());
  const std::size_t k = elems.size();

  // Left copy a -> right copy b whenever a < b. The order is transitive, so a
  // maximum matching gives a minimum chain cover with k - |matching| chains.
  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (poset_less(elems[a], elems[b])) adj[a].push_back(b);

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_right(k, none), match_left(k, none);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t a) {
    for (std::size_t b : adj[a]) {
      if (visited[b]) continue;
      visited[b] = 1;
      if (match_right[b] == none || augment(match_right[b])) {
        match_right[b] = a;
        match_left[a] = b;
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < k; ++a) {
    visited.assign(k, 0);
    augment(a);
  }

  std::vector<Chain> chains;
  for (std::size_t a = 0; a < k; ++a) {
    if (match_right[a] != none) continue;  // not a chain head
    Chain c;
    for (std::size_t v = a; v != none; v = match_left[v]) c.elements.push_back(elems[v]);
    chains.push_back(std::move(c));
  }
  return chains;
}

int width_matching(std::span<const PosetElement> subset) {
  return static_cast<int>(minimum_chain_cover(subset).size());
}

int width(std::span<const PosetElement> subset) {
  if (subset.size() <= kBruteforceWidthLimit) return width_bruteforce(subset);
  return width_matching(subset);
}

int width(const RootPoset& poset, std::span<const PosetElement> subset) {
  poset.check_subset(subset);
  return width(subset);
}

std::vector<Chain> chain_cover(const RootPoset& poset, std::span<const PosetElement> subset) {
  poset.check_subset(subset);
  std::set<PosetElement> rest(subset.begin(), subset.end());
  std::vector<Chain> chains;
  while (!rest.empty()) {
    Chain c;
    // Minimal j, then minimal i: the set order is (i, j), so scan.
    int col = rest.begin()->j;
    for (const auto& e : rest) col = std::min(col, e.j);
    int row_floor = 0;
    while (true) {
      std::vector<PosetElement> run;
      for (const auto& e : rest)
        if (e.j == col && e.i >= row_floor) run.push_back(e);
      // run is sorted by i; it is the stretch from the smallest to the largest
      // admissible element of this column.
      c.elements.insert(c.elements.end(), run.begin(), run.end());
      row_floor = run.back().i;
      int next_col = 0;
      for (const auto& e : rest)
        if (e.j > col && e.i >= row_floor && (next_col == 0 || e.j < next_col)) next_col = e.j;
      if (next_col == 0) break;
      col = next_col;
    }
    for (const auto& e : c.elements) rest.erase(e);
    chains.push_back(std::move(c));
  }
  return chains;
}

}  // namespace pbw
