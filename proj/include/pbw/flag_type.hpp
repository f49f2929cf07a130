#ifndef PBW_FLAG_TYPE_HPP
#define PBW_FLAG_TYPE_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbw {

/// Thrown when an input fails validation (bad ranks, indices, shapes).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed a configured size limit.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A parabolic type: the ambient rank n together with a strictly increasing
 * list d_1 < ... < d_s of subspace dimensions in [1, n-1]. The full flag is
 * d = (1, ..., n-1).
 */
class FlagType {
 public:
  FlagType(int n, std::vector<int> d);

  static FlagType full(int n);

  int n() const { return n_; }
  const std::vector<int>& d() const { return d_; }
  std::size_t length() const { return d_.size(); }
  bool is_full() const { return static_cast<int>(d_.size()) == n_ - 1; }
  bool contains(int dim) const;

  /// Sum over a of (d_a - d_{a-1})(n - d_a): the number of radical entries.
  int dimension() const;

  std::string to_string() const;

  friend bool operator==(const FlagType&, const FlagType&) = default;

 private:
  int n_;
  std::vector<int> d_;
};

/// Every flag type of rank n, ordered by length and then lexicographically.
std::vector<FlagType> all_flag_types(int n);

/// The pair (i, j), n >= i > j >= 1, standing for the matrix unit E_{i,j}.
struct PosetElement {
  int i = 0;
  int j = 0;

  // Lexicographic: i major, j minor. This is the canonical coordinate order.
  friend auto operator<=>(const PosetElement&, const PosetElement&) = default;
};

/// Poset order: (i,j) <= (i',j') iff i <= i' and j <= j'.
inline bool poset_leq(PosetElement a, PosetElement b) { return a.i <= b.i && a.j <= b.j; }
inline bool poset_less(PosetElement a, PosetElement b) { return poset_leq(a, b) && a != b; }
inline bool comparable(PosetElement a, PosetElement b) { return poset_leq(a, b) || poset_leq(b, a); }

/// Membership in the layer P_d: j <= d < i.
inline bool in_layer(PosetElement e, int d) { return e.j <= d && d < e.i; }

/**
 * A dominant integral weight sum m_d omega_d, stored as (m_1, ..., m_{n-1}).
 * marking(d) is the prefix sum m_1 + ... + m_{d-1} attached to the diagonal
 * vertex (d, d); marking(1) = 0.
 */
class Weight {
 public:
  explicit Weight(std::vector<int> m);
  static Weight zero(int n);
  static Weight fundamental(int n, int d);

  int n() const { return static_cast<int>(m_.size()) + 1; }
  const std::vector<int>& m() const { return m_; }
  int operator[](int d) const { return m_.at(static_cast<std::size_t>(d - 1)); }

  int marking(int d) const;
  /// (lambda, alpha_{j, i-1}) for the root attached to E_{i,j}.
  int pairing(PosetElement e) const { return marking(e.i) - marking(e.j); }

  bool supported_on(const FlagType& type) const;
  bool is_zero() const;

  Weight operator+(const Weight& other) const;
  Weight operator*(int t) const;
  friend bool operator==(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<int> m_;
  std::vector<int> prefix_;
};

}  // namespace pbw

#endif
