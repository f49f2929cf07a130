#include "pbw/admissible.hpp"

#include <algorithm>
#include <sstream>

namespace pbw {

namespace {

bool member(const IndexSet& s, int i) { return std::binary_search(s.begin(), s.end(), i); }

void check_shape(const FlagType& type, const std::vector<IndexSet>& sets) {
  if (sets.size() != type.length())
    throw ValidationError("admissible collection: expected " + std::to_string(type.length()) + " sets");
  for (std::size_t a = 0; a < sets.size(); ++a) {
    const IndexSet& s = sets[a];
    if (static_cast<int>(s.size()) != type.d()[a])
      throw ValidationError("admissible collection: |J_" + std::to_string(type.d()[a]) + "| must be " +
                            std::to_string(type.d()[a]));
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 1 || s[k] > type.n()) throw ValidationError("admissible collection: index outside [1, n]");
      if (k > 0 && s[k] <= s[k - 1]) throw ValidationError("admissible collection: sets must be sorted and distinct");
    }
  }
}

// pr_{lo+1} ... pr_{hi} span(lower) ⊆ span(upper) for coordinate subspaces.
bool step_holds(int lo, int hi, const IndexSet& lower, const IndexSet& upper) {
  for (int i : lower) {
    const bool killed = i > lo && i <= hi;
    if (!killed && !member(upper, i)) return false;
  }
  return true;
}

bool containments_hold(const FlagType& type, const std::vector<IndexSet>& sets) {
  const auto& d = type.d();
  for (std::size_t a = 0; a + 1 < sets.size(); ++a)
    if (!step_holds(d[a], d[a + 1], sets[a], sets[a + 1])) return false;
  return true;
}

// Lexicographic k-subsets of [n].
std::vector<IndexSet> combinations(int n, int k) {
  std::vector<IndexSet> out;
  IndexSet cur(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) cur[static_cast<std::size_t>(t)] = t + 1;
  while (true) {
    out.push_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == n - k + t + 1) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) cur[static_cast<std::size_t>(u)] = cur[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

}  // namespace

bool is_admissible(const FlagType& type, const std::vector<IndexSet>& sets) {
  try {
    check_shape(type, sets);
  } catch (const ValidationError&) {
    return false;
  }
  return containments_hold(type, sets);
}

AdmissibleCollection::AdmissibleCollection(FlagType type, std::vector<IndexSet> sets)
    : type_(std::move(type)), sets_(std::move(sets)) {
  check_shape(type_, sets_);
  if (!containments_hold(type_, sets_)) throw ValidationError("inadmissible collection " + to_string());
}

AdmissibleCollection AdmissibleCollection::standard(const FlagType& type) {
  std::vector<IndexSet> sets;
  for (int d : type.d()) {
    IndexSet s;
    for (int i = 1; i <= d; ++i) s.push_back(i);
    sets.push_back(std::move(s));
  }
  return AdmissibleCollection(type, std::move(sets));
}

const IndexSet& AdmissibleCollection::at(int d) const {
  const auto& ds = type_.d();
  const auto it = std::lower_bound(ds.begin(), ds.end(), d);
  if (it == ds.end() || *it != d) throw ValidationError("J_" + std::to_string(d) + " is not part of the flag type");
  return sets_[static_cast<std::size_t>(it - ds.begin())];
}

bool AdmissibleCollection::holds(int d, int i) const {
  if (d == 0) return false;
  if (d == type_.n()) return i >= 1 && i <= type_.n();
  return member(at(d), i);
}

bool AdmissibleCollection::is_standard() const { return *this == standard(type_); }

std::string AdmissibleCollection::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t a = 0; a < sets_.size(); ++a) {
    os << (a ? "," : "") << "{";
    for (std::size_t k = 0; k < sets_[a].size(); ++k) os << (k ? "," : "") << sets_[a][k];
    os << "}";
  }
  os << ")";
  return os.str();
}

std::vector<AdmissibleCollection> admissible_collections(const FlagType& type) {
  std::vector<std::vector<IndexSet>> choices;
  for (int d : type.d()) choices.push_back(combinations(type.n(), d));

  std::vector<AdmissibleCollection> out;
  std::vector<IndexSet> partial;
  // Depth-first over the layers in order, pruning on the containment between
  // consecutive layers; lexicographic order falls out of the iteration order.
  auto extend = [&](auto& self, std::size_t a) -> void {
    if (a == choices.size()) {
      out.emplace_back(type, partial);
      return;
    }
    for (const auto& s : choices[a]) {
      if (a > 0 && !step_holds(type.d()[a - 1], type.d()[a], partial[a - 1], s)) continue;
      partial.push_back(s);
      self(self, a + 1);
      partial.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

AdmissibleCollection mutate(const AdmissibleCollection& J, int a, int b) {
  const FlagType& type = J.flag_type();
  if (!type.is_full()) throw ValidationError("mutate: defined for full flags only");
  if (a <= b) throw ValidationError("mutate: requires a > b");
  if (b < 1 || a > type.n()) throw ValidationError("mutate: labels outside [1, n]");
  std::vector<IndexSet> sets = J.sets();
  for (int d = b; d < a && d <= type.n() - 1; ++d) {
    IndexSet& s = sets[static_cast<std::size_t>(d - 1)];
    if (member(s, b) && !member(s, a)) {
      s.erase(std::find(s.begin(), s.end(), b));
      s.insert(std::upper_bound(s.begin(), s.end(), a), a);
    }
  }
  return AdmissibleCollection(type, std::move(sets));
}

}  // namespace pbw
