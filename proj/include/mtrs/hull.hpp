#pragma once

#include <cstdint>
#include <vector>

#include "mtrs/field.hpp"
#include "mtrs/matrix.hpp"
#include "mtrs/twisted_code.hpp"

namespace mtrs {

/// sum_{i=1..k} alpha_i^m over the order-k subgroup alpha_i = gamma^{(q-1)i/k}:
/// k (as a field element) when k | m, else 0. Requires k | q-1.
Elem subgroup_power_sum(const Field& f, std::uint32_t k, std::int64_t m);
/// Same sum computed term by term.
Elem subgroup_power_sum_direct(const Field& f, std::uint32_t k, std::int64_t m);

/// (alpha_1, ..., alpha_k) with alpha_i = gamma^{(q-1)i/k}.
std::vector<Elem> subgroup_points(const Field& f, std::uint32_t k);
/// (alpha_1, ..., alpha_k, gamma alpha_1, ..., gamma alpha_k); needs k < q-1.
std::vector<Elem> doubled_subgroup_points(const Field& f, std::uint32_t k);

struct HullReport {
  std::size_t code_dim = 0;
  std::size_t gram_rank = 0;
  std::size_t hull_dim_rank = 0;    // code_dim - gram_rank
  std::size_t hull_dim_direct = 0;  // dim(C ∩ C^⊥)
  Matrix gram;
};

/// Gram matrix G G^T and the hull dimension computed both ways. Throws
/// std::logic_error if the two dimensions differ.
HullReport hull_report(const LinearCode& code);

enum class Parity { even, odd };

/// A code over doubled subgroup points together with the blocks of
/// G = [A_1 + B_1 | A_gamma + B_gamma].
struct SubgroupCode {
  Parity parity;
  TwistProfile params;  // k = subgroup order, t and h as given to the constructor
  MultiTwistedCode code;
  Matrix a1, ag, b1, bg;
};

/// [2k, k] code over even q: rows (beta alpha)^r for r < k, with
/// eta_j (beta alpha)^{k-1+t_j} added on row h_j.
SubgroupCode construct_even(const Field& f, const TwistProfile& params);

/// [2k, k-1] code over odd q: rows (beta alpha)^r for r < k-1, with
/// eta_j (beta alpha)^{k-1+t_j} added on row h_j. As a multi-twisted code it
/// has dimension k-1 and twists t_j + 1.
SubgroupCode construct_odd(const Field& f, const TwistProfile& params);

struct GramDecomposition {
  Matrix a1a1, agag, b1b1, bgbg;
  Matrix aa_sum, bb_sum;
  Matrix cross;  // sum over beta of A B^T + B A^T
  Matrix total;  // aa_sum + bb_sum + cross
};

GramDecomposition gram_decomposition(const SubgroupCode& sc);

}  // namespace mtrs
