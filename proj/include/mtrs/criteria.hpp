#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mtrs/field.hpp"
#include "mtrs/matrix.hpp"
#include "mtrs/twisted_code.hpp"

namespace mtrs {

/// Coefficients of prod_{v in values} (x - v), constant term first.
std::vector<Elem> sigma_coeffs(const Field& f, std::span<const Elem> values);

/// e[j] = j-th elementary symmetric polynomial of `values`, j = 0..|values|.
std::vector<Elem> elementary_symmetric(const Field& f, std::span<const Elem> values);

/// The t_l x t_l coefficient matrix of the homogeneous system for the
/// quotient g = f / prod_{i in I}(x - alpha_i), given the sigma
/// coefficients of I. Row r stands for the coefficient of x^{k+t_l-1-r},
/// column c for the unknown g_{t_l-1-c}. Rows r = t_l - t_s carry the twist
/// equations and are scaled by eta_s^{-1}.
Matrix mds_system_matrix(const Field& f, const TwistProfile& profile, std::span<const Elem> sigma);
Matrix mds_system_matrix(const MultiTwistedCode& code, std::span<const std::size_t> subset);

/// MDS iff the system matrix is nonsingular for every k-subset of positions.
/// Codes without twists are plain RS and pass immediately.
MdsVerdict is_mds_subset_systems(const MultiTwistedCode& code, ScanOptions options = {});

/// Arguments shared by the closed-form double-twist tests (t=(1,2), h=(0,1)).
struct DoubleTwist {
  std::vector<Elem> alpha;
  std::uint32_t k = 2;
  Elem eta1;
  Elem eta2;

  void validate(const Field& f) const;
};

/// 1 - eta1 (-1)^k P + eta2 (-1)^k (e_{k-1} e_1 - P) + eta1 eta2 P^2 for the
/// subset `values`, where P is the product of the values.
Elem double_twist_expression(const Field& f, std::span<const Elem> values, std::uint32_t k, Elem eta1, Elem eta2);

/// MDS iff double_twist_expression is nonzero on every k-subset of alpha.
MdsVerdict is_mds_double_twisted(const Field& f, const DoubleTwist& dt, ScanOptions options = {});

/// Literal exclusion conditions on (eta1, eta2):
///  (i)   eta1 != (-1)^k / P(J)             whenever e_{k-1}(J) = 0,
///  (ii)  eta1 != rational value in eta2    whenever eta2 != (-1)^k / P(J),
///  (iii) eta2 != (-1)^{k-1} / (e_1 P)(J')  whenever 0 is an evaluation point,
/// over k-subsets J and (k-1)-subsets J' of the nonzero evaluation points.
/// Subsets J' with e_1(J') = 0 give no finite value and are skipped.
MdsVerdict is_mds_eta_conditions(const Field& f, const DoubleTwist& dt, ScanOptions options = {});

/// det(diag(eta2^-1, eta1^-1) [[1,0],[s_{k-1},1]] + [[-s_0,-s_1],[0,-s_0]])
/// for every k-subset of alpha, in lexicographic subset order.
std::vector<Elem> double_twist_system_determinants(const Field& f, const DoubleTwist& dt);

/// Dispatches to the requested criterion. The closed-form criteria require
/// the profile t=(1,2), h=(0,1).
MdsVerdict check_mds(const MultiTwistedCode& code, MdsMethod method, ScanOptions options = {});

/// Builds C_k(alpha, t, h, eta) after checking the chain conditions: chain
/// q_0 < q_1 < ... < q_l = q of subfield orders, alpha in F_{q_0} and eta_i
/// in F_{q_i} but not in F_{q_{i-1}}.
MultiTwistedCode construct_subfield_chain(const Field& f, std::span<const std::uint64_t> chain,
                                          std::vector<Elem> alpha, TwistProfile profile);

/// Values of (eta1, eta2) that make the double-twisted code on alpha non-MDS,
/// grouped so a search can discard them before testing.
class ForbiddenEta {
 public:
  ForbiddenEta(const Field& f, std::span<const Elem> alpha, std::uint32_t k);

  /// eta2 values excluded for every eta1, sorted.
  const std::vector<Elem>& eta2() const { return eta2_; }
  /// eta1 values excluded for every eta2, sorted.
  const std::vector<Elem>& eta1() const { return eta1_; }
  /// eta1 values excluded once eta2 is fixed, sorted; includes eta1().
  std::vector<Elem> eta1_given(Elem eta2) const;
  bool excludes(Elem eta1, Elem eta2) const;

 private:
  struct Subset {
    Elem prod;
    Elem e1;
    Elem ek1;
  };
  Field f_;
  std::uint32_t k_;
  std::vector<Subset> nonzero_;
  std::vector<Elem> eta1_;
  std::vector<Elem> eta2_;
};

ForbiddenEta forbidden_eta_values(const Field& f, std::span<const Elem> alpha, std::uint32_t k);

}  // namespace mtrs
