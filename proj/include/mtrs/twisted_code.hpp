#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mtrs/field.hpp"
#include "mtrs/matrix.hpp"

namespace mtrs {

/// Parameters of the twisted polynomial space
///   { sum_{i<k} a_i x^i + sum_j eta_j a_{h_j} x^{k-1+t_j} }.
/// No twists means a plain Reed-Solomon space.
struct TwistProfile {
  std::uint32_t k = 1;
  std::vector<std::uint32_t> t;  // twists, strictly increasing, >= 1
  std::vector<std::uint32_t> h;  // hooks, strictly increasing, <= k-1
  std::vector<Elem> eta;         // nonzero

  std::size_t twists() const { return t.size(); }
  /// Largest monomial degree: k-1+t_l, or k-1 without twists.
  std::uint32_t max_degree() const { return t.empty() ? k - 1 : k - 1 + t.back(); }
  /// t = (1,2), h = (0,1): the double-twisted family with closed-form MDS tests.
  bool is_double_01() const { return t == std::vector<std::uint32_t>{1, 2} && h == std::vector<std::uint32_t>{0, 1}; }
  void validate() const;
};

/// How an MDS verdict was reached. The wire names used by the CLI and JSON
/// output are "bruteforce", "theorem31", "remark44" and "theorem42".
enum class MdsMethod {
  bruteforce,      // every k columns of G independent
  subset_systems,  // per-subset t_l x t_l linear systems
  closed_form,     // bilinear expression in (eta1, eta2), t=(1,2), h=(0,1)
  eta_conditions,  // exclusion conditions on eta1, eta2, t=(1,2), h=(0,1)
};
std::string_view to_string(MdsMethod m);
MdsMethod parse_mds_method(std::string_view name);

/// Outcome of an MDS test. `witness` holds the offending index subset
/// (generator columns / evaluation positions) when the code is not MDS.
struct MdsVerdict {
  bool is_mds = true;
  MdsMethod method = MdsMethod::bruteforce;
  std::vector<std::size_t> witness;
};

/// Limits for exhaustive scans. `limit` bounds the number of enumerated
/// objects (messages or subsets); exceeding it is an error, never a
/// truncation.
struct ScanOptions {
  std::uint64_t limit = 10'000'000;
  unsigned workers = 1;
};

/// A linear code given by a full-rank generator matrix.
class LinearCode {
 public:
  explicit LinearCode(Matrix generator);

  const Field& field() const { return g_.field(); }
  const Matrix& generator() const { return g_; }
  std::size_t length() const { return g_.cols(); }
  std::size_t dimension() const { return g_.rows(); }
  std::vector<Elem> encode(std::span<const Elem> msg) const;

 private:
  Matrix g_;
};

/// C_k(alpha, t, h, eta): evaluations of the twisted space at distinct points.
class MultiTwistedCode {
 public:
  MultiTwistedCode(Field f, TwistProfile profile, std::vector<Elem> alpha);

  const Field& field() const { return f_; }
  const TwistProfile& profile() const { return profile_; }
  std::span<const Elem> alpha() const { return alpha_; }
  std::size_t length() const { return alpha_.size(); }
  std::size_t dimension() const { return profile_.k; }
  const Matrix& generator() const { return g_; }
  LinearCode linear() const { return LinearCode(g_); }

  /// (f(alpha_1), ..., f(alpha_n)) for the twisted polynomial of `msg`.
  std::vector<Elem> encode(std::span<const Elem> msg) const;

 private:
  Field f_;
  TwistProfile profile_;
  std::vector<Elem> alpha_;
  Matrix g_;
};

/// Coefficients (constant term first, length k + t_l) of the twisted
/// polynomial carrying message (a_0, ..., a_{k-1}).
std::vector<Elem> twisted_poly(const Field& f, const TwistProfile& profile, std::span<const Elem> msg);
Elem eval_poly(const Field& f, std::span<const Elem> coeffs, Elem x);

/// Generator matrix: row i is alpha^i pointwise, and row h_j additionally
/// carries eta_j alpha^{k-1+t_j}.
Matrix twisted_generator(const Field& f, const TwistProfile& profile, std::span<const Elem> alpha);

/// Exact minimum distance by enumerating all messages up to scalars.
/// Requires q^dim <= options.limit.
std::uint32_t min_distance_bruteforce(const LinearCode& code, ScanOptions options = {});

/// MDS iff every dim-subset of generator columns is independent.
/// Requires C(n, dim) <= options.limit.
MdsVerdict is_mds_bruteforce(const LinearCode& code, ScanOptions options = {});

LinearCode dual_code(const LinearCode& code);

struct HullBasis {
  std::size_t dimension;
  Matrix basis;
};

/// C ∩ C^⊥ from the row-space intersection of G and a dual generator.
HullBasis hull_direct(const LinearCode& code);

}  // namespace mtrs
