#include "mtrs/criteria.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mtrs/combinatorics.hpp"
#include "mtrs/error.hpp"

namespace mtrs {

namespace {

void check_budget(std::uint64_t subsets, const ScanOptions& options) {
  if (subsets > options.limit) {
    throw Error(ErrorKind::budget_exceeded,
                std::to_string(subsets) + " subsets exceed the budget of " + std::to_string(options.limit));
  }
}

// prod (x - v) in place, buf has room for |values|+1 coefficients.
void expand_roots(const Field& f, std::span<const Elem> values, std::span<Elem> buf) {
  std::fill(buf.begin(), buf.end(), f.zero());
  buf[0] = f.one();
  std::size_t deg = 0;
  for (Elem v : values) {
    const Elem nv = f.neg(v);
    buf[deg + 1] = buf[deg];
    for (std::size_t i = deg; i > 0; --i) buf[i] = f.add(buf[i - 1], f.mul(nv, buf[i]));
    buf[0] = f.mul(nv, buf[0]);
    ++deg;
  }
}

void fill_system(const Field& f, const TwistProfile& p, std::span<const Elem> sigma, std::span<Elem> out) {
  const std::size_t T = p.t.back();
  const auto k = static_cast<std::int64_t>(p.k);
  auto sig = [&](std::int64_t i) { return (i >= 0 && i <= k) ? sigma[static_cast<std::size_t>(i)] : f.zero(); };
  for (std::size_t r = 0; r < T; ++r) {
    std::size_t twist = p.t.size();
    for (std::size_t s = 0; s < p.t.size(); ++s)
      if (r == T - p.t[s]) twist = s;
    const Elem d = twist == p.t.size() ? f.one() : f.inv(p.eta[twist]);
    for (std::size_t c = 0; c < T; ++c) {
      Elem v = f.mul(d, sig(k - static_cast<std::int64_t>(r) + static_cast<std::int64_t>(c)));
      if (twist != p.t.size()) {
        const auto j = static_cast<std::int64_t>(T - 1 - c);
        const auto hs = static_cast<std::int64_t>(p.h[twist]);
        if (j <= hs) v = f.sub(v, sig(hs - j));
      }
      out[r * T + c] = v;
    }
  }
}

std::vector<std::size_t> widen(std::span<const std::uint32_t> idx) { return {idx.begin(), idx.end()}; }

MdsVerdict verdict_from_rank(std::uint64_t rank, std::uint32_t n, std::uint32_t k, MdsMethod method) {
  MdsVerdict v{true, method, {}};
  if (rank != kSaturated) {
    v.is_mds = false;
    v.witness = widen(Combination::unrank(n, k, rank).indices());
  }
  return v;
}

struct Symmetric {
  Elem prod;
  Elem e1;
  Elem ek1;
};

Symmetric symmetric_of(const Field& f, std::span<const Elem> values, std::span<Elem> scratch) {
  const std::size_t k = values.size();
  expand_roots(f, values, scratch.first(k + 1));
  // e_j = (-1)^j sigma_{k-j}
  Symmetric s;
  s.prod = f.mul(f.sign(static_cast<std::int64_t>(k)), scratch[0]);
  s.e1 = k >= 1 ? f.neg(scratch[k - 1]) : f.zero();
  s.ek1 = k >= 1 ? f.mul(f.sign(static_cast<std::int64_t>(k) - 1), scratch[1]) : f.zero();
  return s;
}

void sort_unique(std::vector<Elem>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Elem> sigma_coeffs(const Field& f, std::span<const Elem> values) {
  std::vector<Elem> out(values.size() + 1);
  expand_roots(f, values, out);
  return out;
}

std::vector<Elem> elementary_symmetric(const Field& f, std::span<const Elem> values) {
  const std::size_t k = values.size();
  const auto sigma = sigma_coeffs(f, values);
  std::vector<Elem> e(k + 1);
  for (std::size_t j = 0; j <= k; ++j) e[j] = f.mul(f.sign(static_cast<std::int64_t>(j)), sigma[k - j]);
  return e;
}

Matrix mds_system_matrix(const Field& f, const TwistProfile& profile, std::span<const Elem> sigma) {
  profile.validate();
  if (profile.twists() == 0) throw Error(ErrorKind::precondition, "system matrix needs at least one twist");
  if (sigma.size() != profile.k + 1) throw Error(ErrorKind::dimension_mismatch, "sigma must have k+1 coefficients");
  const std::size_t T = profile.t.back();
  std::vector<Elem> buf(T * T);
  fill_system(f, profile, sigma, buf);
  return Matrix(f, T, T, std::move(buf));
}

Matrix mds_system_matrix(const MultiTwistedCode& code, std::span<const std::size_t> subset) {
  if (subset.size() != code.dimension()) throw Error(ErrorKind::dimension_mismatch, "subset size differs from k");
  std::vector<Elem> values;
  for (auto i : subset) {
    if (i >= code.length()) throw Error(ErrorKind::invalid_argument, "subset index out of range");
    values.push_back(code.alpha()[i]);
  }
  return mds_system_matrix(code.field(), code.profile(), sigma_coeffs(code.field(), values));
}

MdsVerdict is_mds_subset_systems(const MultiTwistedCode& code, ScanOptions options) {
  const TwistProfile& p = code.profile();
  if (p.twists() == 0) return MdsVerdict{true, MdsMethod::subset_systems, {}};
  const Field& f = code.field();
  const auto n = static_cast<std::uint32_t>(code.length());
  const std::uint32_t k = p.k;
  check_budget(binomial(n, k), options);
  const std::size_t T = p.t.back();
  const unsigned workers = std::max(1u, options.workers);
  struct Scratch {
    std::vector<Elem> values, sigma, system;
  };
  std::vector<Scratch> scratch(workers, Scratch{std::vector<Elem>(k), std::vector<Elem>(k + 1),
                                                std::vector<Elem>(T * T)});
  const auto alpha = code.alpha();
  const std::uint64_t bad =
      first_rejected_combination(n, k, workers, [&](std::span<const std::uint32_t> idx, unsigned w) {
        Scratch& s = scratch[w];
        for (std::size_t i = 0; i < k; ++i) s.values[i] = alpha[idx[i]];
        expand_roots(f, s.values, s.sigma);
        fill_system(f, p, s.sigma, s.system);
        return !detail::det_in_place(f, s.system, T).is_zero();
      });
  return verdict_from_rank(bad, n, k, MdsMethod::subset_systems);
}

void DoubleTwist::validate(const Field& f) const {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be at least 1");
  if (k >= alpha.size()) throw Error(ErrorKind::precondition, "need k < n");
  if (alpha.size() > f.order()) throw Error(ErrorKind::invalid_argument, "more evaluation points than field elements");
  std::set<Elem> seen;
  for (auto a : alpha) {
    if (!f.contains(a)) throw Error(ErrorKind::invalid_argument, "evaluation point outside the field");
    if (!seen.insert(a).second) throw Error(ErrorKind::invalid_argument, "evaluation points must be distinct");
  }
  if (eta1.is_zero() || eta2.is_zero() || !f.contains(eta1) || !f.contains(eta2)) {
    throw Error(ErrorKind::invalid_argument, "eta1 and eta2 must be nonzero field elements");
  }
}

Elem double_twist_expression(const Field& f, std::span<const Elem> values, std::uint32_t k, Elem eta1, Elem eta2) {
  if (values.size() != k) throw Error(ErrorKind::dimension_mismatch, "subset size differs from k");
  std::vector<Elem> scratch(k + 1);
  const Symmetric s = symmetric_of(f, values, scratch);
  const Elem sk = f.sign(k);
  Elem e = f.one();
  e = f.sub(e, f.mul(f.mul(eta1, sk), s.prod));
  e = f.add(e, f.mul(f.mul(eta2, sk), f.sub(f.mul(s.ek1, s.e1), s.prod)));
  e = f.add(e, f.mul(f.mul(eta1, eta2), f.mul(s.prod, s.prod)));
  return e;
}

MdsVerdict is_mds_double_twisted(const Field& f, const DoubleTwist& dt, ScanOptions options) {
  dt.validate(f);
  const auto n = static_cast<std::uint32_t>(dt.alpha.size());
  const std::uint32_t k = dt.k;
  check_budget(binomial(n, k), options);
  const Elem sk = f.sign(k);
  const Elem a1 = f.mul(dt.eta1, sk);
  const Elem a2 = f.mul(dt.eta2, sk);
  const Elem a12 = f.mul(dt.eta1, dt.eta2);
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::vector<Elem>> values(workers, std::vector<Elem>(k));
  std::vector<std::vector<Elem>> scratch(workers, std::vector<Elem>(k + 1));
  const std::uint64_t bad =
      first_rejected_combination(n, k, workers, [&](std::span<const std::uint32_t> idx, unsigned w) {
        for (std::size_t i = 0; i < k; ++i) values[w][i] = dt.alpha[idx[i]];
        const Symmetric s = symmetric_of(f, values[w], scratch[w]);
        Elem e = f.sub(f.one(), f.mul(a1, s.prod));
        e = f.add(e, f.mul(a2, f.sub(f.mul(s.ek1, s.e1), s.prod)));
        e = f.add(e, f.mul(a12, f.mul(s.prod, s.prod)));
        return !e.is_zero();
      });
  return verdict_from_rank(bad, n, k, MdsMethod::closed_form);
}

MdsVerdict is_mds_eta_conditions(const Field& f, const DoubleTwist& dt, ScanOptions options) {
  dt.validate(f);
  const std::uint32_t k = dt.k;
  std::vector<std::size_t> nz;  // positions of nonzero evaluation points
  bool has_zero = false;
  for (std::size_t i = 0; i < dt.alpha.size(); ++i) {
    if (dt.alpha[i].is_zero()) has_zero = true;
    else nz.push_back(i);
  }
  const auto m = static_cast<std::uint32_t>(nz.size());
  check_budget(binomial(m, k) + binomial(m, k - 1), options);

  const Elem sk = f.sign(k);
  const Elem sk1 = f.sign(static_cast<std::int64_t>(k) - 1);
  std::vector<Elem> values;
  std::vector<Elem> scratch(k + 1);
  MdsVerdict v{true, MdsMethod::eta_conditions, {}};
  auto fail = [&](std::span<const std::uint32_t> idx) {
    v.is_mds = false;
    for (auto i : idx) v.witness.push_back(nz[i]);
    return false;
  };
  auto load = [&](std::span<const std::uint32_t> idx) {
    values.clear();
    for (auto i : idx) values.push_back(dt.alpha[nz[i]]);
    return symmetric_of(f, values, scratch);
  };

  // (i) and (ii) over k-subsets of the nonzero points.
  for_each_combination(m, k, [&](std::span<const std::uint32_t> idx) {
    const Symmetric s = load(idx);
    const Elem base = f.div(sk, s.prod);
    if (s.ek1.is_zero() && dt.eta1 == base) return fail(idx);
    if (dt.eta2 != base) {
      const Elem gap = f.sub(f.div(sk, dt.eta2), s.prod);
      const Elem num = f.add(f.mul(s.ek1, s.e1), gap);
      const Elem den = f.mul(f.mul(sk, s.prod), gap);
      if (dt.eta1 == f.div(num, den)) return fail(idx);
    }
    return true;
  });
  if (!v.is_mds) return v;

  // (iii) over (k-1)-subsets of the nonzero points, when 0 is a point.
  if (has_zero) {
    for_each_combination(m, k - 1, [&](std::span<const std::uint32_t> idx) {
      const Symmetric s = load(idx);
      const Elem d = f.mul(s.e1, s.prod);
      if (!d.is_zero() && dt.eta2 == f.div(sk1, d)) return fail(idx);
      return true;
    });
  }
  return v;
}

std::vector<Elem> double_twist_system_determinants(const Field& f, const DoubleTwist& dt) {
  dt.validate(f);
  const std::uint32_t k = dt.k;
  if (k < 2) throw Error(ErrorKind::precondition, "the t=(1,2), h=(0,1) profile needs k >= 2");
  const Elem d2 = f.inv(dt.eta2);
  const Elem d1 = f.inv(dt.eta1);
  std::vector<Elem> out;
  std::vector<Elem> values(k);
  for_each_combination(static_cast<std::uint32_t>(dt.alpha.size()), k, [&](std::span<const std::uint32_t> idx) {
    for (std::size_t i = 0; i < k; ++i) values[i] = dt.alpha[idx[i]];
    const auto sigma = sigma_coeffs(f, values);
    const Matrix a(f, 2, 2, {f.one(), f.zero(), sigma[k - 1], f.one()});
    const Matrix b(f, 2, 2, {f.neg(sigma[0]), f.neg(sigma[1]), f.zero(), f.neg(sigma[0])});
    const Matrix d(f, 2, 2, {d2, f.zero(), f.zero(), d1});
    out.push_back(det(add(multiply(d, a), b)));
    return true;
  });
  return out;
}

MdsVerdict check_mds(const MultiTwistedCode& code, MdsMethod method, ScanOptions options) {
  switch (method) {
    case MdsMethod::bruteforce: return is_mds_bruteforce(code.linear(), options);
    case MdsMethod::subset_systems: return is_mds_subset_systems(code, options);
    case MdsMethod::closed_form:
    case MdsMethod::eta_conditions: {
      if (!code.profile().is_double_01()) {
        throw Error(ErrorKind::precondition, std::string(to_string(method)) + " requires t=(1,2) and h=(0,1)");
      }
      DoubleTwist dt{{code.alpha().begin(), code.alpha().end()}, code.profile().k, code.profile().eta[0],
                     code.profile().eta[1]};
      return method == MdsMethod::closed_form ? is_mds_double_twisted(code.field(), dt, options)
                                              : is_mds_eta_conditions(code.field(), dt, options);
    }
  }
  throw Error(ErrorKind::invalid_argument, "unknown MDS method");
}

MultiTwistedCode construct_subfield_chain(const Field& f, std::span<const std::uint64_t> chain,
                                          std::vector<Elem> alpha, TwistProfile profile) {
  profile.validate();
  if (chain.size() != profile.twists() + 1) {
    throw Error(ErrorKind::invalid_argument, "chain must have one more field than there are twists");
  }
  if (chain.back() != f.order()) throw Error(ErrorKind::invalid_argument, "chain must end at the field order");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!f.has_subfield(chain[i])) {
      throw Error(ErrorKind::invalid_argument, std::to_string(chain[i]) + " is not a subfield order");
    }
    if (i > 0 && chain[i] <= chain[i - 1]) throw Error(ErrorKind::invalid_argument, "chain must be strictly increasing");
    if (i > 0 && !Field::of_order(chain[i]).has_subfield(chain[i - 1])) {
      throw Error(ErrorKind::invalid_argument, "chain entries must be nested subfields");
    }
  }
  if (alpha.size() > chain.front()) {
    throw Error(ErrorKind::precondition, "more evaluation points than elements of the smallest subfield");
  }
  for (auto a : alpha)
    if (!f.contains(a) || !f.in_subfield(a, chain.front())) {
      throw Error(ErrorKind::precondition, "evaluation point outside the smallest subfield");
    }
  for (std::size_t i = 0; i < profile.twists(); ++i) {
    const Elem e = profile.eta[i];
    if (!f.contains(e) || !f.in_subfield(e, chain[i + 1]) || f.in_subfield(e, chain[i])) {
      throw Error(ErrorKind::precondition, "eta_" + std::to_string(i + 1) + " must lie in F_" +
                                               std::to_string(chain[i + 1]) + " but not in F_" +
                                               std::to_string(chain[i]));
    }
  }
  return MultiTwistedCode(f, std::move(profile), std::move(alpha));
}

ForbiddenEta::ForbiddenEta(const Field& f, std::span<const Elem> alpha, std::uint32_t k) : f_(f), k_(k) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be at least 1");
  std::vector<Elem> nz;
  bool has_zero = false;
  for (auto a : alpha) {
    if (a.is_zero()) has_zero = true;
    else nz.push_back(a);
  }
  const auto m = static_cast<std::uint32_t>(nz.size());
  const Elem sk = f.sign(k);
  std::vector<Elem> values;
  std::vector<Elem> scratch(k + 1);
  auto load = [&](std::span<const std::uint32_t> idx) {
    values.clear();
    for (auto i : idx) values.push_back(nz[i]);
    return symmetric_of(f, values, scratch);
  };
  for_each_combination(m, k, [&](std::span<const std::uint32_t> idx) {
    const Symmetric s = load(idx);
    nonzero_.push_back({s.prod, s.e1, s.ek1});
    const Elem base = f.div(sk, s.prod);
    const bool degenerate = f.mul(s.ek1, s.e1).is_zero();
    // eta1 = (-1)^k / P leaves eta2 (-1)^k e_{k-1} e_1, eta2 = (-1)^k / P leaves the same.
    if (k == 1 || degenerate) eta1_.push_back(base);
    if (k >= 2 && degenerate) eta2_.push_back(base);
    return true;
  });
  if (has_zero) {
    const Elem sk1 = f.sign(static_cast<std::int64_t>(k) - 1);
    for_each_combination(m, k - 1, [&](std::span<const std::uint32_t> idx) {
      const Symmetric s = load(idx);
      const Elem d = f.mul(s.e1, s.prod);
      if (!d.is_zero()) eta2_.push_back(f.div(sk1, d));
      return true;
    });
  }
  sort_unique(eta1_);
  sort_unique(eta2_);
}

std::vector<Elem> ForbiddenEta::eta1_given(Elem eta2) const {
  const Field& f = f_;
  const Elem sk = f.sign(k_);
  std::vector<Elem> out = eta1_;
  for (const auto& s : nonzero_) {
    const Elem gap = f.sub(f.div(sk, eta2), s.prod);
    if (gap.is_zero()) continue;
    const Elem num = f.add(f.mul(s.ek1, s.e1), gap);
    const Elem den = f.mul(f.mul(sk, s.prod), gap);
    out.push_back(f.div(num, den));
  }
  sort_unique(out);
  return out;
}

bool ForbiddenEta::excludes(Elem eta1, Elem eta2) const {
  if (std::binary_search(eta2_.begin(), eta2_.end(), eta2)) return true;
  const auto e1 = eta1_given(eta2);
  return std::binary_search(e1.begin(), e1.end(), eta1);
}

ForbiddenEta forbidden_eta_values(const Field& f, std::span<const Elem> alpha, std::uint32_t k) {
  return ForbiddenEta(f, alpha, k);
}

}  // namespace mtrs
