#include "mtrs/twisted_code.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>

#include "mtrs/combinatorics.hpp"
#include "mtrs/error.hpp"

namespace mtrs {

std::string_view to_string(MdsMethod m) {
  switch (m) {
    case MdsMethod::bruteforce: return "bruteforce";
    case MdsMethod::subset_systems: return "theorem31";
    case MdsMethod::closed_form: return "remark44";
    case MdsMethod::eta_conditions: return "theorem42";
  }
  return "unknown";
}

MdsMethod parse_mds_method(std::string_view name) {
  for (auto m : {MdsMethod::bruteforce, MdsMethod::subset_systems, MdsMethod::closed_form, MdsMethod::eta_conditions}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorKind::invalid_argument, "unknown MDS method '" + std::string(name) + "'");
}

void TwistProfile::validate() const {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be at least 1");
  if (t.size() != h.size() || t.size() != eta.size()) {
    throw Error(ErrorKind::invalid_argument, "t, h and eta must have the same length");
  }
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] < 1) throw Error(ErrorKind::invalid_argument, "twists must be >= 1");
    if (h[j] > k - 1) throw Error(ErrorKind::invalid_argument, "hooks must be <= k-1");
    if (j > 0 && (t[j] <= t[j - 1] || h[j] <= h[j - 1])) {
      throw Error(ErrorKind::invalid_argument, "twists and hooks must be strictly increasing");
    }
    if (eta[j].is_zero()) throw Error(ErrorKind::invalid_argument, "eta entries must be nonzero");
  }
}

LinearCode::LinearCode(Matrix generator) : g_(std::move(generator)) {
  if (rank(g_) != g_.rows()) {
    throw Error(ErrorKind::precondition, "generator matrix is not of full row rank");
  }
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> msg) const {
  if (msg.size() != dimension()) throw Error(ErrorKind::dimension_mismatch, "message length differs from dimension");
  const Field& f = field();
  std::vector<Elem> cw(length(), f.zero());
  for (std::size_t i = 0; i < msg.size(); ++i) {
    if (msg[i].is_zero()) continue;
    for (std::size_t j = 0; j < cw.size(); ++j) cw[j] = f.add(cw[j], f.mul(msg[i], g_.at(i, j)));
  }
  return cw;
}

std::vector<Elem> twisted_poly(const Field& f, const TwistProfile& profile, std::span<const Elem> msg) {
  if (msg.size() != profile.k) throw Error(ErrorKind::dimension_mismatch, "message length differs from k");
  std::vector<Elem> c(profile.max_degree() + 1, f.zero());
  std::copy(msg.begin(), msg.end(), c.begin());
  for (std::size_t j = 0; j < profile.twists(); ++j) {
    Elem& slot = c[profile.k - 1 + profile.t[j]];
    slot = f.add(slot, f.mul(profile.eta[j], msg[profile.h[j]]));
  }
  return c;
}

Elem eval_poly(const Field& f, std::span<const Elem> coeffs, Elem x) {
  Elem acc = f.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
  return acc;
}

Matrix twisted_generator(const Field& f, const TwistProfile& profile, std::span<const Elem> alpha) {
  Matrix g(f, profile.k, alpha.size());
  for (std::size_t c = 0; c < alpha.size(); ++c) {
    Elem power = f.one();
    for (std::uint32_t r = 0; r < profile.k; ++r) {
      g.at(r, c) = power;
      power = f.mul(power, alpha[c]);
    }
    for (std::size_t j = 0; j < profile.twists(); ++j) {
      const Elem extra = f.mul(profile.eta[j], f.pow(alpha[c], profile.k - 1 + profile.t[j]));
      g.at(profile.h[j], c) = f.add(g.at(profile.h[j], c), extra);
    }
  }
  return g;
}

MultiTwistedCode::MultiTwistedCode(Field f, TwistProfile profile, std::vector<Elem> alpha)
    : f_(std::move(f)), profile_(std::move(profile)), alpha_(std::move(alpha)), g_(f_, 0, 0) {
  profile_.validate();
  for (auto e : profile_.eta)
    if (!f_.contains(e)) throw Error(ErrorKind::invalid_argument, "eta entry outside the field");
  std::set<Elem> seen;
  for (auto a : alpha_) {
    if (!f_.contains(a)) throw Error(ErrorKind::invalid_argument, "evaluation point outside the field");
    if (!seen.insert(a).second) throw Error(ErrorKind::invalid_argument, "evaluation points must be distinct");
  }
  const std::size_t n = alpha_.size();
  if (n > f_.order()) throw Error(ErrorKind::invalid_argument, "more evaluation points than field elements");
  if (profile_.k >= n) throw Error(ErrorKind::precondition, "need k < n");
  if (profile_.max_degree() >= n) {
    throw Error(ErrorKind::precondition, "twisted degree k-1+t_l must be below n");
  }
  g_ = twisted_generator(f_, profile_, alpha_);
  if (rank(g_) != profile_.k) throw Error(ErrorKind::precondition, "twisted generator lost rank");
}

std::vector<Elem> MultiTwistedCode::encode(std::span<const Elem> msg) const {
  const auto poly = twisted_poly(f_, profile_, msg);
  std::vector<Elem> cw(alpha_.size());
  for (std::size_t i = 0; i < alpha_.size(); ++i) cw[i] = eval_poly(f_, poly, alpha_[i]);
  return cw;
}

std::uint32_t min_distance_bruteforce(const LinearCode& code, ScanOptions options) {
  const Field& f = code.field();
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  const std::uint32_t q = f.order();
  if (k == 0) throw Error(ErrorKind::precondition, "zero-dimensional code has no minimum distance");
  if (saturating_pow(q, k) > options.limit) {
    throw Error(ErrorKind::budget_exceeded,
                "q^k = " + std::to_string(q) + "^" + std::to_string(k) + " exceeds the message budget");
  }
  const Matrix& g = code.generator();
  std::atomic<std::uint32_t> best{static_cast<std::uint32_t>(n)};

  // Messages normalised so the first nonzero coordinate (position lead) is 1.
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t free = k - 1 - lead;
    const std::uint64_t count = saturating_pow(q, free);
    parallel_blocks(count, options.workers, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
      std::vector<std::uint32_t> digit(free);
      std::uint64_t ord = begin;
      for (std::size_t d = free; d-- > 0;) {
        digit[d] = static_cast<std::uint32_t>(ord % q);
        ord /= q;
      }
      std::vector<Elem> cw(g.row(lead).begin(), g.row(lead).end());
      for (std::size_t d = 0; d < free; ++d) {
        const Elem c(digit[d]);
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(c, g.at(lead + 1 + d, j)));
      }
      std::uint32_t local = static_cast<std::uint32_t>(n);
      for (std::uint64_t o = begin; o < end; ++o) {
        std::uint32_t w = 0;
        for (auto e : cw) w += e.is_zero() ? 0 : 1;
        local = std::min(local, w);
        if (o + 1 == end) break;
        // Odometer step, least significant digit last.
        for (std::size_t d = free; d-- > 0;) {
          const std::uint32_t old = digit[d];
          const std::uint32_t nxt = old + 1 == q ? 0 : old + 1;
          digit[d] = nxt;
          const Elem delta = f.sub(Elem(nxt), Elem(old));
          const auto row = g.row(lead + 1 + d);
          for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(delta, row[j]));
          if (nxt != 0) break;
        }
      }
      std::uint32_t cur = best.load();
      while (local < cur && !best.compare_exchange_weak(cur, local)) {
      }
    });
  }
  return best.load();
}

MdsVerdict is_mds_bruteforce(const LinearCode& code, ScanOptions options) {
  const Field& f = code.field();
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  if (binomial(n, k) > options.limit) {
    throw Error(ErrorKind::budget_exceeded, "C(n,k) column subsets exceed the budget");
  }
  const Matrix& g = code.generator();
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::vector<Elem>> scratch(workers, std::vector<Elem>(k * k));
  const std::uint64_t first = first_rejected_combination(
      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k), workers,
      [&](std::span<const std::uint32_t> cols, unsigned w) {
        auto& buf = scratch[w];
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) buf[r * k + c] = g.at(r, cols[c]);
        return !detail::det_in_place(f, buf, k).is_zero();
      });
  MdsVerdict v{true, MdsMethod::bruteforce, {}};
  if (first != kSaturated) {
    v.is_mds = false;
    const auto c = Combination::unrank(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k), first);
    v.witness.assign(c.indices().begin(), c.indices().end());
  }
  return v;
}

LinearCode dual_code(const LinearCode& code) { return LinearCode(null_space(code.generator())); }

HullBasis hull_direct(const LinearCode& code) {
  const LinearCode dual = dual_code(code);
  Matrix basis = row_space_intersection(code.generator(), dual.generator());
  const std::size_t dim = basis.rows();
  return HullBasis{dim, std::move(basis)};
}

}  // namespace mtrs
