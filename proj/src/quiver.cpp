#include "pbw/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace pbw {

QuiverModule::QuiverModule(int vertices, std::vector<Interval> summands)
    : vertices_(vertices), summands_(std::move(summands)) {
  if (vertices_ < 1) throw ValidationError("quiver module: needs at least one vertex");
  for (const auto& s : summands_)
    if (s.a < 1 || s.a > s.b || s.b > vertices_)
      throw ValidationError("quiver module: interval [" + std::to_string(s.a) + "," + std::to_string(s.b) +
                            "] outside [1, " + std::to_string(vertices_) + "]");
  std::sort(summands_.begin(), summands_.end());
}

std::vector<int> QuiverModule::dimension_vector() const {
  std::vector<int> dims(static_cast<std::size_t>(vertices_), 0);
  for (const auto& s : summands_)
    for (int v = s.a; v <= s.b; ++v) ++dims[static_cast<std::size_t>(v - 1)];
  return dims;
}

QuiverModule QuiverModule::operator+(const QuiverModule& other) const {
  if (other.vertices_ != vertices_) throw ValidationError("quiver module: rank mismatch in direct sum");
  std::vector<Interval> all = summands_;
  all.insert(all.end(), other.summands_.begin(), other.summands_.end());
  return QuiverModule(vertices_, std::move(all));
}

std::string QuiverModule::to_string() const {
  if (summands_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < summands_.size(); ++k)
    os << (k ? " + " : "") << "M[" << summands_[k].a << "," << summands_[k].b << "]";
  return os.str();
}

QuiverModule projective_sum(int n) {
  std::vector<Interval> s;
  for (int a = 1; a <= n - 1; ++a) s.push_back({a, n - 1});
  return QuiverModule(n - 1, std::move(s));
}

namespace {

void require_full(const AdmissibleCollection& J) {
  if (!J.flag_type().is_full()) throw ValidationError("quiver decomposition needs a full flag type");
}

}  // namespace

std::pair<QuiverModule, QuiverModule> quiver_decomposition(const AdmissibleCollection& J) {
  require_full(J);
  const int n = J.flag_type().n();
  std::vector<Interval> quotient, injective_part;
  // P_a survives in the quotient at vertices a..t(a), where a ∉ J_{t(a)}
  // and a ∈ J_{t(a)+1} (J_n = [n]).
  for (int a = 1; a <= n - 1; ++a) {
    if (J.holds(a, a)) continue;
    int t = a;
    while (!J.holds(t + 1, a)) ++t;
    quotient.push_back({a, t});
  }
  // N_I contains M_{s(b),b} when b+1 ∈ J_b; s(b) is the first d with b+1 ∈ J_d.
  for (int b = 1; b <= n - 1; ++b) {
    if (!J.holds(b, b + 1)) continue;
    int s = b;
    while (J.holds(s - 1, b + 1)) --s;
    injective_part.push_back({s, b});
  }
  return {QuiverModule(n - 1, std::move(quotient)), QuiverModule(n - 1, std::move(injective_part))};
}

std::vector<int> submodule_dims_from_J(const AdmissibleCollection& J) {
  require_full(J);
  std::vector<int> dims;
  for (int d : J.flag_type().d()) {
    const auto& s = J.at(d);
    dims.push_back(static_cast<int>(std::count_if(s.begin(), s.end(), [d](int i) { return i <= d; })));
  }
  return dims;
}

int hom_dim(const QuiverModule& x, const QuiverModule& y) {
  if (x.vertices() != y.vertices()) throw ValidationError("hom: quiver rank mismatch");
  int total = 0;
  for (const auto& s : x.summands())
    for (const auto& t : y.summands())
      if (t.a <= s.a && s.a <= t.b && t.b <= s.b) ++total;
  return total;
}

int euler_form(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) throw ValidationError("euler form: rank mismatch");
  int total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total += x[i] * y[i];
    if (i + 1 < y.size()) total -= x[i] * y[i + 1];
  }
  return total;
}

int ext_dim(const QuiverModule& x, const QuiverModule& y) {
  if (x.vertices() != y.vertices()) throw ValidationError("ext: quiver rank mismatch");
  return hom_dim(x, y) - euler_form(x.dimension_vector(), y.dimension_vector());
}

bool smoothness_check(const AdmissibleCollection& J) {
  const auto [quotient, injective_part] = quiver_decomposition(J);
  return ext_dim(injective_part, quotient) == 0;
}

}  // namespace pbw
