#include "pbw/rep_oracle.hpp"

#include <numeric>
#include <sstream>

#include "pbw/polytope.hpp"

namespace pbw {

Polynomial Polynomial::monomial(Monomial m, Rational c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  const auto& m = terms_.begin()->first;
  return std::accumulate(m.begin(), m.end(), 0);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != variables_) throw ValidationError("polynomial: monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  if (out.variables_ == 0) out.variables_ = other.variables_;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other * Rational(-1); }

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(variables_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

Polynomial Polynomial::times_variable(std::size_t k) const {
  Polynomial out(variables_);
  for (const auto& [m, c] : terms_) {
    Monomial next = m;
    ++next[k];
    out.terms_.emplace(std::move(next), c);
  }
  return out;
}

std::string Polynomial::to_string(const RootPoset& poset) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    os << (first ? "" : " + ") << pbw::to_string(c);
    first = false;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      os << "*E" << poset[k].i << "_" << poset[k].j;
      if (m[k] > 1) os << "^" << m[k];
    }
  }
  return os.str();
}

namespace {

struct Image {
  std::size_t var;
  int sign;
};

std::vector<Image> bracket(const RootPoset& poset, int a, int b, PosetElement e) {
  std::vector<Image> out;
  if (b == e.i && a > e.j)
    if (auto k = poset.index_of({a, e.j})) out.push_back({*k, 1});
  if (e.j == a && e.i > b)
    if (auto k = poset.index_of({e.i, b})) out.push_back({*k, -1});
  return out;
}

}  // namespace

Polynomial derivation_apply_root(const RootPoset& poset, int a, int b, const Polynomial& p) {
  const int n = poset.n();
  if (a < 1 || b > n || a >= b) throw ValidationError("derivation: need 1 <= a < b <= n");
  if (p.variables() != poset.size() && !p.is_zero()) throw ValidationError("derivation: variable count mismatch");
  std::vector<std::vector<Image>> images(poset.size());
  for (std::size_t k = 0; k < poset.size(); ++k) images[k] = bracket(poset, a, b, poset[k]);
  Polynomial out(poset.size());
  for (const auto& [m, c] : p.terms())
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      for (const auto& img : images[k]) {
        Monomial next = m;
        --next[k];
        ++next[img.var];
        out.add_term(next, c * m[k] * img.sign);
      }
    }
  return out;
}

Polynomial derivation_apply(const RootPoset& poset, int k, const Polynomial& p) {
  if (k < 1 || k >= poset.n()) throw ValidationError("derivation: simple root index out of range");
  return derivation_apply_root(poset, k, k + 1, p);
}

RelationSpec::RelationSpec(FlagType t, Weight w, int m, int k) : type(std::move(t)), weight(std::move(w)), M(m), K(k) {
  if (weight.n() != type.n()) throw ValidationError("relation spec: weight rank does not match n");
  if (!weight.supported_on(type)) throw ValidationError("relation spec: weight not supported on the flag type");
  if (M < 0) throw ValidationError("relation spec: M must be non-negative");
  if (K < 0) throw ValidationError("relation spec: degree cutoff must be non-negative");
}

std::vector<Polynomial> relation_generators(const RelationSpec& spec) {
  const RootPoset poset(spec.type);
  const std::size_t N = poset.size();
  std::vector<Polynomial> out;
  for (std::uint32_t mask = 1; mask < (1u << N); ++mask) {
    std::vector<std::size_t> support;
    int total = spec.M + 1;
    for (std::size_t k = 0; k < N; ++k)
      if (mask >> k & 1u) {
        support.push_back(k);
        total += spec.weight.pairing(poset[k]);
      }
    if (total > spec.K || total < static_cast<int>(support.size())) continue;
    // Compositions of total into |support| positive parts.
    Monomial m(N, 0);
    for (auto k : support) m[k] = 1;
    int spare = total - static_cast<int>(support.size());
    auto place = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos + 1 == support.size()) {
        m[support[pos]] += left;
        out.push_back(Polynomial::monomial(m));
        m[support[pos]] -= left;
        return;
      }
      for (int e = 0; e <= left; ++e) {
        m[support[pos]] += e;
        self(self, pos + 1, left - e);
        m[support[pos]] -= e;
      }
    };
    place(place, 0, spare);
  }
  return out;
}

Polynomial EchelonSpace::reduce(const Polynomial& p) const {
  Polynomial v = p;
  while (!v.is_zero()) {
    const auto& [lead, c] = *v.terms().begin();
    auto it = rows_.find(lead);
    if (it == rows_.end()) break;
    v = v - it->second * c;
  }
  return v;
}

Polynomial EchelonSpace::insert(const Polynomial& p) {
  Polynomial v = reduce(p);
  if (v.is_zero()) return v;
  const Rational lead = v.terms().begin()->second;
  v = v * (Rational(1) / lead);
  rows_.emplace(v.terms().begin()->first, v);
  return v;
}

bool EchelonSpace::contains(const Polynomial& p) const { return reduce(p).is_zero(); }

std::vector<Polynomial> EchelonSpace::basis() const {
  std::vector<Polynomial> out;
  for (const auto& [lead, row] : rows_) out.push_back(row);
  return out;
}

GradedIdeal::GradedIdeal(const RelationSpec& spec) : spec_(spec), poset_(spec.type) {
  if (spec.type.n() > kOracleMaxRank)
    throw ResourceGuardError("rep oracle: n = " + std::to_string(spec.type.n()) + " exceeds " +
                             std::to_string(kOracleMaxRank));
  if (spec.K > kOracleMaxDegree)
    throw ResourceGuardError("rep oracle: K = " + std::to_string(spec.K) + " exceeds " +
                             std::to_string(kOracleMaxDegree));
  const int n = poset_.n();
  const std::size_t N = poset_.size();
  std::vector<std::vector<Polynomial>> gens(static_cast<std::size_t>(spec.K) + 1);
  for (auto& g : relation_generators(spec)) gens[static_cast<std::size_t>(g.degree())].push_back(std::move(g));

  pieces_.resize(static_cast<std::size_t>(spec.K) + 1);
  for (int k = 0; k <= spec.K; ++k) {
    auto& piece = pieces_[static_cast<std::size_t>(k)];
    std::vector<Polynomial> queue;
    auto push = [&](const Polynomial& p) {
      auto r = piece.insert(p);
      if (!r.is_zero()) queue.push_back(std::move(r));
    };
    if (k > 0)
      for (const auto& b : pieces_[static_cast<std::size_t>(k) - 1].basis())
        for (std::size_t v = 0; v < N; ++v) push(b.times_variable(v));
    for (const auto& g : gens[static_cast<std::size_t>(k)]) push(g);
    while (!queue.empty()) {
      const Polynomial v = std::move(queue.back());
      queue.pop_back();
      for (int s = 1; s < n; ++s) push(derivation_apply(poset_, s, v));
    }
  }
}

std::vector<int> GradedIdeal::dims() const {
  std::vector<int> out;
  for (const auto& p : pieces_) out.push_back(static_cast<int>(p.dimension()));
  return out;
}

bool GradedIdeal::contains(const Polynomial& p) const {
  if (p.is_zero()) return true;
  const int deg = p.degree();
  if (deg > spec_.K) throw ValidationError("graded ideal: degree beyond the cutoff");
  return piece(deg).contains(p);
}

bool GradedIdeal::is_stable() const {
  const int n = poset_.n();
  for (int k = 0; k <= spec_.K; ++k)
    for (const auto& b : piece(k).basis()) {
      for (int a = 1; a <= n; ++a)
        for (int c = a + 1; c <= n; ++c)
          if (!contains(derivation_apply_root(poset_, a, c, b))) return false;
      if (k < spec_.K)
        for (std::size_t v = 0; v < poset_.size(); ++v)
          if (!contains(b.times_variable(v))) return false;
    }
  return true;
}

std::vector<int> ideal_graded_dims(const RelationSpec& spec) { return GradedIdeal(spec).dims(); }

BigInt binomial(int a, int b) {
  if (b < 0 || a < b) return 0;
  BigInt r = 1;
  for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
  return r;
}

HilbertReport hilbert_compare(const RelationSpec& spec) {
  const GradedIdeal ideal(spec);
  const auto dims = ideal.dims();
  const int N = static_cast<int>(ideal.poset().size());
  HilbertReport out;
  for (int k = 0; k <= spec.K; ++k)
    out.quotient_dims.push_back(binomial(N + k - 1, k).convert_to<std::int64_t>() - dims[static_cast<std::size_t>(k)]);
  out.lattice_dims.assign(static_cast<std::size_t>(spec.K) + 1, 0);
  const auto points = lattice_points(PolytopeSpec(spec.type, spec.weight, spec.M));
  for (const auto& p : points.points) {
    const int t = p.total();
    if (t <= spec.K) ++out.lattice_dims[static_cast<std::size_t>(t)];
  }
  out.match = out.quotient_dims == out.lattice_dims;
  out.tail_zero = out.quotient_dims.back() == 0;
  return out;
}

BigInt weyl_dim(const Weight& lambda) {
  const int n = lambda.n();
  // Partition λ_i = m_i + ... + m_{n-1}.
  std::vector<long> part(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 1; --i) part[static_cast<std::size_t>(i)] = part[static_cast<std::size_t>(i) + 1] + lambda[i];
  BigInt num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= part[static_cast<std::size_t>(i)] - part[static_cast<std::size_t>(j)] + (j - i);
      den *= j - i;
    }
  return num / den;
}

}  // namespace pbw
