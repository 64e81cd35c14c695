#include "mtrs/hull.hpp"

#include <stdexcept>
#include <string>

#include "mtrs/error.hpp"

namespace mtrs {

namespace {

void require_subgroup(const Field& f, std::uint32_t k) {
  if (k == 0 || (f.order() - 1) % k != 0) {
    throw Error(ErrorKind::precondition, "k = " + std::to_string(k) + " does not divide q-1");
  }
}

void fail(const std::string& what) { throw Error(ErrorKind::precondition, what); }

Matrix power_block(const Field& f, std::span<const Elem> pts, std::size_t rows) {
  Matrix a(f, rows, pts.size());
  for (std::size_t c = 0; c < pts.size(); ++c) {
    Elem x = f.one();
    for (std::size_t r = 0; r < rows; ++r) {
      a.at(r, c) = x;
      x = f.mul(x, pts[c]);
    }
  }
  return a;
}

Matrix twist_block(const Field& f, const TwistProfile& params, std::span<const Elem> pts, std::size_t rows) {
  Matrix b(f, rows, pts.size());
  for (std::size_t j = 0; j < params.twists(); ++j) {
    const std::int64_t deg = params.k - 1 + params.t[j];
    for (std::size_t c = 0; c < pts.size(); ++c) b.at(params.h[j], c) = f.mul(params.eta[j], f.pow(pts[c], deg));
  }
  return b;
}

SubgroupCode build(const Field& f, const TwistProfile& params, Parity parity, TwistProfile code_profile) {
  const std::size_t rows = parity == Parity::even ? params.k : params.k - 1;
  const auto alpha = doubled_subgroup_points(f, params.k);
  const std::span<const Elem> first(alpha.data(), params.k);
  std::vector<Elem> second(alpha.begin() + params.k, alpha.end());
  MultiTwistedCode code(f, std::move(code_profile), alpha);
  SubgroupCode sc{parity,
                  params,
                  std::move(code),
                  power_block(f, first, rows),
                  power_block(f, second, rows),
                  twist_block(f, params, first, rows),
                  twist_block(f, params, second, rows)};
  // The blocks must reassemble the generator.
  const Matrix left = add(sc.a1, sc.b1);
  const Matrix right = add(sc.ag, sc.bg);
  const Matrix& g = sc.code.generator();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < params.k; ++c)
      if (g.at(r, c) != left.at(r, c) || g.at(r, params.k + c) != right.at(r, c)) {
        throw std::logic_error("subgroup blocks do not match the generator matrix");
      }
  return sc;
}

void check_common(const Field& f, const TwistProfile& params) {
  params.validate();
  require_subgroup(f, params.k);
  if (params.k >= f.order() - 1) fail("k = q-1 makes the two halves of the evaluation vector coincide");
  if (params.twists() == 0) fail("the construction needs at least one twist");
}

}  // namespace

Elem subgroup_power_sum(const Field& f, std::uint32_t k, std::int64_t m) {
  require_subgroup(f, k);
  const std::int64_t r = m % static_cast<std::int64_t>(k);
  return r == 0 ? f.from_int(k) : f.zero();
}

Elem subgroup_power_sum_direct(const Field& f, std::uint32_t k, std::int64_t m) {
  Elem sum = f.zero();
  for (Elem a : subgroup_points(f, k)) sum = f.add(sum, f.pow(a, m));
  return sum;
}

std::vector<Elem> subgroup_points(const Field& f, std::uint32_t k) {
  require_subgroup(f, k);
  const std::int64_t step = (f.order() - 1) / k;
  std::vector<Elem> pts;
  for (std::uint32_t i = 1; i <= k; ++i) pts.push_back(f.exp(step * i));
  return pts;
}

std::vector<Elem> doubled_subgroup_points(const Field& f, std::uint32_t k) {
  require_subgroup(f, k);
  if (k >= f.order() - 1) fail("k = q-1 makes the two halves of the evaluation vector coincide");
  auto pts = subgroup_points(f, k);
  const Elem g = f.primitive();
  for (std::uint32_t i = 0; i < k; ++i) pts.push_back(f.mul(g, pts[i]));
  return pts;
}

HullReport hull_report(const LinearCode& code) {
  const Matrix& g = code.generator();
  HullReport rep{code.dimension(), 0, 0, 0, multiply(g, transpose(g))};
  rep.gram_rank = rank(rep.gram);
  rep.hull_dim_rank = rep.code_dim - rep.gram_rank;
  rep.hull_dim_direct = hull_direct(code).dimension;
  if (rep.hull_dim_rank != rep.hull_dim_direct) {
    throw std::logic_error("hull dimension from the Gram rank disagrees with the direct intersection");
  }
  return rep;
}

SubgroupCode construct_even(const Field& f, const TwistProfile& params) {
  if (f.characteristic() != 2) fail("construct_even needs q even");
  if (params.k <= 1) fail("construct_even needs k > 1");
  check_common(f, params);
  if (params.h.front() == 0) fail("construct_even needs h_1 > 0");
  if (params.t.front() <= 1) fail("construct_even needs t_1 > 1");
  if (params.t.back() > params.k) fail("construct_even needs t_l <= k");
  return build(f, params, Parity::even, params);
}

SubgroupCode construct_odd(const Field& f, const TwistProfile& params) {
  if (f.characteristic() == 2) fail("construct_odd needs q odd");
  if (params.k <= 2) fail("construct_odd needs k > 2");
  check_common(f, params);
  if (params.h.front() <= 1) fail("construct_odd needs h_1 > 1");
  if (params.h.back() > params.k - 2) fail("construct_odd needs h_l <= k-2");
  if (params.t.back() >= params.k) fail("construct_odd needs t_l < k");
  TwistProfile shifted = params;
  shifted.k = params.k - 1;
  for (auto& t : shifted.t) ++t;
  return build(f, params, Parity::odd, std::move(shifted));
}

GramDecomposition gram_decomposition(const SubgroupCode& sc) {
  auto outer = [](const Matrix& x, const Matrix& y) { return multiply(x, transpose(y)); };
  GramDecomposition d{outer(sc.a1, sc.a1), outer(sc.ag, sc.ag), outer(sc.b1, sc.b1), outer(sc.bg, sc.bg),
                      sc.a1,               sc.a1,               sc.a1,               sc.a1};
  d.aa_sum = add(d.a1a1, d.agag);
  d.bb_sum = add(d.b1b1, d.bgbg);
  d.cross = add(add(outer(sc.a1, sc.b1), outer(sc.b1, sc.a1)), add(outer(sc.ag, sc.bg), outer(sc.bg, sc.ag)));
  d.total = add(add(d.aa_sum, d.bb_sum), d.cross);
  return d;
}

}  // namespace mtrs
