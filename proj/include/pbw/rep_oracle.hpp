#ifndef PBW_REP_ORACLE_HPP
#define PBW_REP_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pbw/flag_type.hpp"
#include "pbw/linalg.hpp"
#include "pbw/poset.hpp"

namespace pbw {

/// Exponent vector indexed by poset position; variable k is the matrix unit
/// E_{i,j} for the k-th poset element (i, j).
using Monomial = std::vector<int>;

/// Sparse polynomial in the poset variables with exact coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t variables) : variables_(variables) {}
  static Polynomial monomial(Monomial m, Rational c = 1);

  std::size_t variables() const { return variables_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a homogeneous polynomial; -1 for zero.
  int degree() const;

  void add_term(const Monomial& m, const Rational& c);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial times_variable(std::size_t k) const;

  std::string to_string(const RootPoset& poset) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t variables_ = 0;
  std::map<Monomial, Rational> terms_;  // no zero coefficients
};

/// Derivation induced by ad E_{a,b} (a < b) on the radical, modulo the
/// parabolic: [E_ab, E_ij] = δ_{b,i} E_{a,j} - δ_{j,a} E_{i,b}, terms outside
/// the poset dropped, extended by the Leibniz rule.
Polynomial derivation_apply_root(const RootPoset& poset, int a, int b, const Polynomial& p);
/// e_k = E_{k,k+1}, 1 <= k <= n-1.
Polynomial derivation_apply(const RootPoset& poset, int k, const Polynomial& p);

struct RelationSpec {
  FlagType type;
  Weight weight;
  int M = 0;
  int K = 1;

  RelationSpec(FlagType type, Weight weight, int M, int K);
};

inline constexpr int kOracleMaxRank = 4;
inline constexpr int kOracleMaxDegree = 8;

/// Monomials of degree <= K whose support S has exponent sum
/// M + Σ_{β∈S} (λ, β) + 1.
std::vector<Polynomial> relation_generators(const RelationSpec& spec);

/// Semi-echelon basis of a subspace of one graded piece.
class EchelonSpace {
 public:
  /// Reduces p against the basis; returns the normalized remainder and adds
  /// it, or returns a zero polynomial if p already lies in the span.
  Polynomial insert(const Polynomial& p);
  bool contains(const Polynomial& p) const;
  std::size_t dimension() const { return rows_.size(); }
  std::vector<Polynomial> basis() const;

 private:
  Polynomial reduce(const Polynomial& p) const;
  std::map<Monomial, Polynomial> rows_;  // leading monomial -> row with leading coefficient 1
};

/// Pieces I_0, ..., I_K of the ideal generated by the relations and closed
/// under the simple raising derivations.
class GradedIdeal {
 public:
  explicit GradedIdeal(const RelationSpec& spec);

  const RelationSpec& spec() const { return spec_; }
  const RootPoset& poset() const { return poset_; }
  std::vector<int> dims() const;
  const EchelonSpace& piece(int k) const { return pieces_.at(static_cast<std::size_t>(k)); }
  bool contains(const Polynomial& p) const;

  /// Every e_{a,b} image and every variable multiple of a basis element of
  /// degree < K lies back in the computed pieces.
  bool is_stable() const;

 private:
  RelationSpec spec_;
  RootPoset poset_;
  std::vector<EchelonSpace> pieces_;
};

std::vector<int> ideal_graded_dims(const RelationSpec& spec);

struct HilbertReport {
  std::vector<std::int64_t> quotient_dims;
  std::vector<std::int64_t> lattice_dims;
  bool match = false;
  /// quotient_dims[K] == 0, so every higher degree vanishes too.
  bool tail_zero = false;
};

HilbertReport hilbert_compare(const RelationSpec& spec);

/// Dimension of the irreducible module of highest weight λ.
BigInt weyl_dim(const Weight& lambda);

/// C(a, b) exactly.
BigInt binomial(int a, int b);

}  // namespace pbw

#endif
