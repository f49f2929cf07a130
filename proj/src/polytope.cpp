#include "pbw/polytope.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>
#include <optional>

#include "pbw/max_profit_flow.hpp"

namespace pbw {

PolytopeSpec::PolytopeSpec(FlagType type, Weight w, int level)
    : flag_type(std::move(type)), weight(std::move(w)), M(level) {
  if (M < 0) throw ValidationError("polytope: M must be non-negative");
  if (weight.n() != flag_type.n()) throw ValidationError("polytope: weight rank does not match flag type");
  if (!weight.supported_on(flag_type)) throw ValidationError("polytope: weight not supported on the flag type");
}

PolytopeSpec PolytopeSpec::dilate(int t) const { return PolytopeSpec(flag_type, weight * t, M * t); }

int LatticePoint::total() const { return std::accumulate(x.begin(), x.end(), 0); }

LatticePoint LatticePoint::operator+(const LatticePoint& other) const {
  if (other.x.size() != x.size()) throw ValidationError("lattice point: dimension mismatch");
  LatticePoint out{x};
  for (std::size_t k = 0; k < x.size(); ++k) out.x[k] += other.x[k];
  return out;
}

LatticePoint zero_point(const RootPoset& poset) { return LatticePoint{std::vector<int>(poset.size(), 0)}; }

LatticePoint unit_point(const RootPoset& poset, PosetElement e) {
  const auto k = poset.index_of(e);
  if (!k) throw ValidationError("unit point: element not in poset");
  LatticePoint p = zero_point(poset);
  p.x[*k] = 1;
  return p;
}

bool PointSet::contains(const LatticePoint& p) const { return std::binary_search(points.begin(), points.end(), p); }

bool PointSet::same_set(const PointSet& other) const {
  return flag_type == other.flag_type && points == other.points;
}

namespace {

void check_point(const RootPoset& poset, const LatticePoint& x) {
  if (x.x.size() != poset.size())
    throw ValidationError("lattice point has " + std::to_string(x.x.size()) + " coordinates, poset has " +
                          std::to_string(poset.size()));
  for (int v : x.x)
    if (v < 0) throw ValidationError("lattice point coordinates must be non-negative");
}

std::vector<std::size_t> support(const LatticePoint& x) {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < x.x.size(); ++k)
    if (x.x[k] > 0) s.push_back(k);
  return s;
}

// Flow value on the support of x; zero coordinates never help a chain
// (as endpoints they only widen the budget, inside they add nothing).
std::int64_t flow_optimum(const RootPoset& poset, const Weight& w, const LatticePoint& x) {
  const auto supp = support(x);
  const int k = static_cast<int>(supp.size());
  if (k == 0) return 0;
  const int source = 0, sink = 1;
  MaxProfitFlow net(2 + 2 * k);
  for (int a = 0; a < k; ++a) {
    const PosetElement e = poset[supp[static_cast<std::size_t>(a)]];
    const int in = 2 + 2 * a, out = in + 1;
    net.add_arc(in, out, 1, x.x[supp[static_cast<std::size_t>(a)]]);
    net.add_arc(source, in, 1, w.marking(e.j));
    net.add_arc(out, sink, 1, -w.marking(e.i));
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (poset_less(poset[supp[static_cast<std::size_t>(a)]], poset[supp[static_cast<std::size_t>(b)]]))
        net.add_arc(3 + 2 * a, 2 + 2 * b, 1, 0);
  return std::max<std::int64_t>(0, net.solve(source, sink));
}

}  // namespace

int defect_bruteforce(const PolytopeSpec& spec, const LatticePoint& x) {
  const RootPoset poset(spec.flag_type);
  if (poset.size() > kBruteforceDefectLimit)
    throw ResourceGuardError("brute-force defect limited to " + std::to_string(kBruteforceDefectLimit) +
                             " poset elements");
  check_point(poset, x);

  // Subposets containing zero coordinates never score higher (widths are
  // monotone), so the scan runs over subsets of the support.
  const auto supp = support(x);
  const std::size_t k = supp.size();
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<std::uint32_t> comp(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a != b && comparable(poset[supp[a]], poset[supp[b]])) comp[a] |= std::uint32_t{1} << b;

  // width[S] by exhaustive recursion on the lowest element of S.
  std::vector<std::uint8_t> width_of(std::size_t{1} << k, 0);
  for (std::uint32_t s = 1; s <= full && k > 0; ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t without = s & ~(std::uint32_t{1} << v);
    width_of[s] = std::max<std::uint8_t>(width_of[without],
                                         static_cast<std::uint8_t>(1 + width_of[without & ~comp[static_cast<std::size_t>(v)]]));
  }

  std::vector<std::pair<std::uint32_t, int>> layers;
  for (int d : spec.flag_type.d()) {
    if (spec.weight[d] == 0) continue;
    std::uint32_t mask = 0;
    for (std::size_t a = 0; a < k; ++a)
      if (in_layer(poset[supp[a]], d)) mask |= std::uint32_t{1} << a;
    layers.emplace_back(mask, spec.weight[d]);
  }

  long best = 0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    long value = 0;
    for (std::size_t a = 0; a < k; ++a)
      if (s >> a & 1u) value += x.x[supp[a]];
    for (const auto& [mask, m] : layers) value -= static_cast<long>(m) * width_of[s & mask];
    best = std::max(best, value);
    if (s == full) break;
  }
  return static_cast<int>(best);
}

int defect_flow(const PolytopeSpec& spec, const LatticePoint& x) {
  const RootPoset poset(spec.flag_type);
  check_point(poset, x);
  return static_cast<int>(flow_optimum(poset, spec.weight, x));
}

bool contains(const PolytopeSpec& spec, const LatticePoint& x) { return defect_flow(spec, x) <= spec.M; }

std::vector<int> coordinate_bounds(const PolytopeSpec& spec) {
  const RootPoset poset(spec.flag_type);
  std::vector<int> bounds;
  for (const auto& e : poset.elements()) bounds.push_back(spec.M + spec.weight.pairing(e));
  return bounds;
}

namespace {

// Depth-first fill of coordinates [depth, N). Membership is monotone in each
// coordinate, so each level stops at the first value that leaves the polytope.
void enumerate_from(const RootPoset& poset, const PolytopeSpec& spec, const std::vector<int>& bounds,
                    LatticePoint& x, std::size_t depth, std::vector<LatticePoint>& out) {
  if (depth == x.x.size()) {
    out.push_back(x);
    return;
  }
  for (int v = 0; v <= bounds[depth]; ++v) {
    x.x[depth] = v;
    if (v > 0 && flow_optimum(poset, spec.weight, x) > spec.M) break;
    enumerate_from(poset, spec, bounds, x, depth + 1, out);
  }
  x.x[depth] = 0;
}

}  // namespace

PointSet lattice_points(const PolytopeSpec& spec, const EnumerationOptions& options) {
  const RootPoset poset(spec.flag_type);
  const auto bounds = coordinate_bounds(spec);
  double volume = 1;
  for (int b : bounds) volume *= static_cast<double>(b) + 1;
  if (volume > options.volume_limit)
    throw ResourceGuardError("enumeration box volume " + std::to_string(volume) + " exceeds limit");

  PointSet result{spec.flag_type, {}, Provenance::enumerated};
  if (poset.size() == 0) return result;

  // Shard the outermost coordinate; shards are concatenated in value order.
  std::vector<int> first_values;
  LatticePoint probe = zero_point(poset);
  for (int v = 0; v <= bounds[0]; ++v) {
    probe.x[0] = v;
    if (v > 0 && flow_optimum(poset, spec.weight, probe) > spec.M) break;
    first_values.push_back(v);
  }
  auto shard = [&](int v) {
    std::vector<LatticePoint> out;
    LatticePoint x = zero_point(poset);
    x.x[0] = v;
    enumerate_from(poset, spec, bounds, x, 1, out);
    return out;
  };

  std::vector<std::vector<LatticePoint>> parts(first_values.size());
  const unsigned jobs = std::max(1u, options.jobs);
  for (std::size_t start = 0; start < first_values.size(); start += jobs) {
    std::vector<std::future<std::vector<LatticePoint>>> running;
    const std::size_t stop = std::min(first_values.size(), start + jobs);
    for (std::size_t s = start + 1; s < stop; ++s)
      running.push_back(std::async(std::launch::async, shard, first_values[s]));
    parts[start] = shard(first_values[start]);
    for (std::size_t s = start + 1; s < stop; ++s) parts[s] = running[s - start - 1].get();
  }
  for (auto& part : parts) result.points.insert(result.points.end(), part.begin(), part.end());
  return result;
}

namespace {

constexpr double kBitmapLimit = 1u << 31;

// Mixed-radix code with coordinate 0 most significant, so code order is
// lexicographic order. With radix_k > a_k + b_k the code of a + b is the sum
// of the codes.
struct MixedRadix {
  std::vector<std::uint64_t> radix;
  std::vector<std::uint64_t> place;
  std::uint64_t volume = 1;

  explicit MixedRadix(std::vector<std::uint64_t> r) : radix(std::move(r)), place(radix.size()) {
    for (std::size_t k = radix.size(); k-- > 0;) {
      place[k] = volume;
      volume *= radix[k];
    }
  }
  bool fits(const LatticePoint& p) const {
    for (std::size_t k = 0; k < radix.size(); ++k)
      if (static_cast<std::uint64_t>(p.x[k]) >= radix[k]) return false;
    return true;
  }
  std::uint64_t encode(const LatticePoint& p) const {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < radix.size(); ++k) code += place[k] * static_cast<std::uint64_t>(p.x[k]);
    return code;
  }
  LatticePoint decode(std::uint64_t code) const {
    LatticePoint p{std::vector<int>(radix.size())};
    for (std::size_t k = 0; k < radix.size(); ++k) {
      p.x[k] = static_cast<int>(code / place[k]);
      code %= place[k];
    }
    return p;
  }
};

void check_operands(const PointSet& a, const PointSet& b) {
  if (!(a.flag_type == b.flag_type)) throw ValidationError("minkowski sum: flag types differ");
  const std::size_t dim = RootPoset(a.flag_type).size();
  for (const auto* set : {&a, &b})
    for (const auto& p : set->points)
      if (p.x.size() != dim) throw ValidationError("minkowski sum: dimension mismatch");
}

std::optional<MixedRadix> sum_radix(const PointSet& a, const PointSet& b) {
  const std::size_t dim = RootPoset(a.flag_type).size();
  std::vector<std::uint64_t> radix(dim, 1);
  for (std::size_t k = 0; k < dim; ++k) {
    int ma = 0, mb = 0;
    for (const auto& p : a.points) ma = std::max(ma, p.x[k]);
    for (const auto& p : b.points) mb = std::max(mb, p.x[k]);
    radix[k] = static_cast<std::uint64_t>(ma + mb + 1);
  }
  double volume = 1;
  for (auto r : radix) volume *= static_cast<double>(r);
  if (volume > kBitmapLimit) return std::nullopt;
  return MixedRadix(std::move(radix));
}

using Bitmap = std::vector<std::uint64_t>;

Bitmap sum_bitmap(const PointSet& a, const PointSet& b, const MixedRadix& code) {
  Bitmap bits((code.volume + 63) / 64, 0);
  std::vector<std::uint64_t> ca, cb;
  for (const auto& p : a.points) ca.push_back(code.encode(p));
  for (const auto& q : b.points) cb.push_back(code.encode(q));
  for (auto u : ca)
    for (auto v : cb) {
      const std::uint64_t w = u + v;
      bits[w >> 6] |= std::uint64_t{1} << (w & 63);
    }
  return bits;
}

std::size_t popcount(const Bitmap& bits) {
  std::size_t total = 0;
  for (auto w : bits) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

}  // namespace

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  check_operands(a, b);
  PointSet out{a.flag_type, {}, Provenance::minkowski_sum};
  if (a.points.empty() || b.points.empty()) return out;

  if (const auto code = sum_radix(a, b)) {
    const Bitmap bits = sum_bitmap(a, b, *code);
    out.points.reserve(popcount(bits));
    for (std::size_t w = 0; w < bits.size(); ++w)
      for (std::uint64_t word = bits[w]; word != 0; word &= word - 1)
        out.points.push_back(code->decode(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
    return out;
  }
  out.points.reserve(a.size() * b.size());
  for (const auto& p : a.points)
    for (const auto& q : b.points) out.points.push_back(p + q);
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

MinkowskiReport minkowski_report(const PointSet& a, const PointSet& b, const PointSet& target) {
  check_operands(a, b);
  if (!(target.flag_type == a.flag_type)) throw ValidationError("minkowski check: flag types differ");
  const auto code = a.points.empty() || b.points.empty() ? std::nullopt : sum_radix(a, b);
  if (!code) {
    const PointSet lhs = minkowski_sum(a, b);
    return MinkowskiReport{lhs.same_set(target), lhs.size(), target.size()};
  }
  // Same comparison as materializing the sum, done on codes.
  const Bitmap lhs = sum_bitmap(a, b, *code);
  Bitmap rhs(lhs.size(), 0);
  bool fits = true;
  for (const auto& p : target.points) {
    if (!code->fits(p)) {
      fits = false;
      continue;
    }
    const std::uint64_t w = code->encode(p);
    rhs[w >> 6] |= std::uint64_t{1} << (w & 63);
  }
  return MinkowskiReport{fits && lhs == rhs, popcount(lhs), target.size()};
}

MinkowskiReport minkowski_report(const FlagType& type, const Weight& m, int M, const Weight& m2, int M2,
                                 const EnumerationOptions& options) {
  return minkowski_report(lattice_points(PolytopeSpec(type, m, M), options),
                          lattice_points(PolytopeSpec(type, m2, M2), options),
                          lattice_points(PolytopeSpec(type, m + m2, M + M2), options));
}

bool minkowski_verify(const FlagType& type, const Weight& m, int M, const Weight& m2, int M2) {
  return minkowski_report(type, m, M, m2, M2).match;
}

std::vector<std::uint64_t> dilation_counts(const PolytopeSpec& spec, int t_max, const EnumerationOptions& options) {
  if (t_max < 1) throw ValidationError("dilation counts: t_max must be at least 1");
  std::vector<std::uint64_t> counts;
  for (int t = 1; t <= t_max; ++t) counts.push_back(lattice_points(spec.dilate(t), options).size());
  return counts;
}

}  // namespace pbw
