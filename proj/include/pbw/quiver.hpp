#ifndef PBW_QUIVER_HPP
#define PBW_QUIVER_HPP

#include <string>
#include <utility>
#include <vector>

#include "pbw/admissible.hpp"

namespace pbw {

/// The indecomposable M_{a,b}: one-dimensional at vertices a..b of the
/// equioriented A_{n-1} quiver 1 -> 2 -> ... -> n-1.
struct Interval {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

class QuiverModule {
 public:
  /// vertices = n - 1.
  explicit QuiverModule(int vertices, std::vector<Interval> summands = {});

  int vertices() const { return vertices_; }
  const std::vector<Interval>& summands() const { return summands_; }
  std::vector<int> dimension_vector() const;
  bool is_zero() const { return summands_.empty(); }

  QuiverModule operator+(const QuiverModule& other) const;  // direct sum
  std::string to_string() const;

  friend bool operator==(const QuiverModule&, const QuiverModule&) = default;

 private:
  int vertices_;
  std::vector<Interval> summands_;  // sorted
};

/// P = ⊕ M_{a,n-1}.
QuiverModule projective_sum(int n);

/// (P/N_P, N_I) for the fixed point of an admissible full-flag collection.
std::pair<QuiverModule, QuiverModule> quiver_decomposition(const AdmissibleCollection& J);

/// dim N_P at each vertex, read off J directly: |J_d ∩ [d]|.
std::vector<int> submodule_dims_from_J(const AdmissibleCollection& J);

/// Sum over summand pairs of [c <= a <= d <= b] for M_{a,b} -> M_{c,d}.
int hom_dim(const QuiverModule& x, const QuiverModule& y);
/// <x, y> = sum_i x_i y_i - sum_i x_i y_{i+1}.
int euler_form(const std::vector<int>& x, const std::vector<int>& y);
int ext_dim(const QuiverModule& x, const QuiverModule& y);

/// Ext^1(N_I, P/N_P) = 0.
bool smoothness_check(const AdmissibleCollection& J);

}  // namespace pbw

#endif
