#include "pbw/flag_type.hpp"

#include <algorithm>
#include <sstream>

namespace pbw {

FlagType::FlagType(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {
  if (n_ < 2) throw ValidationError("flag type: rank n must be at least 2");
  if (d_.empty()) throw ValidationError("flag type: d must be nonempty");
  for (std::size_t a = 0; a < d_.size(); ++a) {
    if (d_[a] < 1 || d_[a] > n_ - 1)
      throw ValidationError("flag type: entry " + std::to_string(d_[a]) + " outside [1, n-1]");
    if (a > 0 && d_[a] <= d_[a - 1]) throw ValidationError("flag type: d must be strictly increasing");
  }
}

FlagType FlagType::full(int n) {
  if (n < 2) throw ValidationError("flag type: rank n must be at least 2");
  std::vector<int> d(static_cast<std::size_t>(n - 1));
  for (int k = 0; k < n - 1; ++k) d[static_cast<std::size_t>(k)] = k + 1;
  return FlagType(n, std::move(d));
}

bool FlagType::contains(int dim) const { return std::binary_search(d_.begin(), d_.end(), dim); }

int FlagType::dimension() const {
  int total = 0;
  int prev = 0;
  for (int da : d_) {
    total += (da - prev) * (n_ - da);
    prev = da;
  }
  return total;
}

std::string FlagType::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " d=(";
  for (std::size_t a = 0; a < d_.size(); ++a) os << (a ? "," : "") << d_[a];
  os << ")";
  return os.str();
}

std::vector<FlagType> all_flag_types(int n) {
  std::vector<FlagType> out;
  const int k = n - 1;
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> d;
    for (int b = 0; b < k; ++b)
      if (mask >> b & 1u) d.push_back(b + 1);
    subsets.push_back(std::move(d));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto& d : subsets) out.emplace_back(n, std::move(d));
  return out;
}

Weight::Weight(std::vector<int> m) : m_(std::move(m)) {
  if (m_.empty()) throw ValidationError("weight: needs n-1 >= 1 entries");
  for (int v : m_)
    if (v < 0) throw ValidationError("weight: entries must be non-negative");
  prefix_.assign(m_.size() + 2, 0);
  // prefix_[d] = m_1 + ... + m_{d-1}
  for (std::size_t d = 2; d < prefix_.size(); ++d) prefix_[d] = prefix_[d - 1] + m_[d - 2];
}

Weight Weight::zero(int n) {
  if (n < 2) throw ValidationError("weight: rank n must be at least 2");
  return Weight(std::vector<int>(static_cast<std::size_t>(n - 1), 0));
}

Weight Weight::fundamental(int n, int d) {
  if (d < 1 || d > n - 1) throw ValidationError("weight: fundamental index outside [1, n-1]");
  std::vector<int> m(static_cast<std::size_t>(n - 1), 0);
  m[static_cast<std::size_t>(d - 1)] = 1;
  return Weight(std::move(m));
}

int Weight::marking(int d) const {
  if (d < 1 || d > n()) throw ValidationError("weight: marking index outside [1, n]");
  return prefix_[static_cast<std::size_t>(d)];
}

bool Weight::supported_on(const FlagType& type) const {
  if (type.n() != n()) return false;
  for (int d = 1; d <= n() - 1; ++d)
    if ((*this)[d] != 0 && !type.contains(d)) return false;
  return true;
}

bool Weight::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](int v) { return v == 0; });
}

Weight Weight::operator+(const Weight& other) const {
  if (other.m_.size() != m_.size()) throw ValidationError("weight: rank mismatch in sum");
  std::vector<int> m(m_);
  for (std::size_t k = 0; k < m.size(); ++k) m[k] += other.m_[k];
  return Weight(std::move(m));
}

Weight Weight::operator*(int t) const {
  if (t < 0) throw ValidationError("weight: negative dilation");
  std::vector<int> m(m_);
  for (int& v : m) v *= t;
  return Weight(std::move(m));
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < m_.size(); ++k) os << (k ? "," : "") << m_[k];
  os << ")";
  return os.str();
}

}  // namespace pbw
