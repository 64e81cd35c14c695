#include "mtrs/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "mtrs/combinatorics.hpp"
#include "mtrs/criteria.hpp"
#include "mtrs/error.hpp"

namespace mtrs {

namespace {

TwistProfile double_01(std::uint32_t k, Elem eta1, Elem eta2) { return TwistProfile{k, {1, 2}, {0, 1}, {eta1, eta2}}; }

bool is_prime_power(std::uint32_t q) {
  try {
    FieldSpec::default_for(q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::uint32_t count_bruteforce(const Field& f, std::span<const Elem> values, std::uint32_t k) {
  const std::vector<Elem> alpha(values.begin(), values.end());
  std::uint32_t count = 0;
  for (std::uint32_t i = 1; i < f.order(); ++i)
    for (std::uint32_t j = 1; j < f.order(); ++j) {
      MultiTwistedCode code(f, double_01(k, Elem(i), Elem(j)), alpha);
      if (is_mds_bruteforce(code.linear(), {kSaturated, 1}).is_mds) ++count;
    }
  return count;
}

// Walks the n-subsets of the field elements with ranks in [begin, end).
template <class Fn>
void for_each_value_set(const Field& f, std::uint32_t n, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  Combination c = Combination::unrank(f.order(), n, begin);
  std::vector<Elem> values(n);
  for (std::uint64_t r = begin; r < end; ++r, c.next()) {
    const auto idx = c.indices();
    for (std::uint32_t i = 0; i < n; ++i) values[i] = Elem(idx[i]);
    fn(r, std::span<const Elem>(values));
  }
}

}  // namespace

std::string_view to_string(EnumCriterion c) { return c == EnumCriterion::closed_form ? "remark44" : "bruteforce"; }

EnumCriterion parse_enum_criterion(std::string_view name) {
  if (name == "remark44") return EnumCriterion::closed_form;
  if (name == "bruteforce") return EnumCriterion::bruteforce;
  throw Error(ErrorKind::invalid_argument, "unknown enumeration criterion '" + std::string(name) + "'");
}

void EnumTask::validate() const {
  if (!is_prime_power(q)) throw Error(ErrorKind::invalid_argument, std::to_string(q) + " is not a supported field order");
  if (k < 2) throw Error(ErrorKind::invalid_argument, "hooks h=(0,1) need k >= 2");
  if (n > q) throw Error(ErrorKind::invalid_argument, "n cannot exceed q");
  if (n < k + 2) {
    throw Error(ErrorKind::invalid_argument, "twisted degree k+1 must be below n, so n >= k+2 (n = k+1 is invalid)");
  }
  const std::uint64_t cost = enumeration_cost(q, n, k);
  if (cost > budget) {
    throw Error(ErrorKind::budget_exceeded,
                "enumeration needs " + std::to_string(cost) + " subset evaluations, budget is " + std::to_string(budget));
  }
}

std::uint64_t enumeration_cost(std::uint32_t q, std::uint32_t n, std::uint32_t k) {
  const std::uint64_t etas = static_cast<std::uint64_t>(q - 1) * (q - 1);
  return saturating_mul(saturating_mul(binomial(q, n), etas), binomial(n, k));
}

std::uint32_t count_mds_eta_pairs(const Field& f, std::span<const Elem> values, std::uint32_t k) {
  const std::uint32_t q1 = f.order() - 1;
  std::vector<Elem> etas(q1);
  for (std::uint32_t j = 0; j < q1; ++j) etas[j] = f.exp(j);
  std::vector<std::uint8_t> bad(static_cast<std::size_t>(q1) * q1, 0);
  std::vector<std::uint8_t> dead(q1, 0);
  const Elem sk = f.sign(k);
  const Elem one = f.one();
  std::vector<Elem> sub(k);
  std::vector<Elem> sigma(k + 1);

  // E = (1 + b eta2) + eta1 (a + c eta2) for each k-subset.
  for_each_combination(static_cast<std::uint32_t>(values.size()), k, [&](std::span<const std::uint32_t> idx) {
    for (std::uint32_t i = 0; i < k; ++i) sub[i] = values[idx[i]];
    std::fill(sigma.begin(), sigma.end(), f.zero());
    sigma[0] = one;
    for (std::uint32_t d = 0; d < k; ++d) {
      const Elem nv = f.neg(sub[d]);
      sigma[d + 1] = sigma[d];
      for (std::uint32_t i = d; i > 0; --i) sigma[i] = f.add(sigma[i - 1], f.mul(nv, sigma[i]));
      sigma[0] = f.mul(nv, sigma[0]);
    }
    const Elem prod = f.mul(sk, sigma[0]);
    const Elem e1 = f.neg(sigma[k - 1]);
    const Elem ek1 = f.mul(f.sign(static_cast<std::int64_t>(k) - 1), sigma[1]);
    const Elem a = f.neg(f.mul(sk, prod));
    const Elem b = f.mul(sk, f.sub(f.mul(ek1, e1), prod));
    const Elem c = f.mul(prod, prod);
    for (std::uint32_t j = 0; j < q1; ++j) {
      if (dead[j]) continue;
      const Elem x = f.add(a, f.mul(c, etas[j]));
      const Elem y = f.add(one, f.mul(b, etas[j]));
      if (x.is_zero()) {
        if (y.is_zero()) dead[j] = 1;
        continue;
      }
      const Elem e1_bad = f.neg(f.div(y, x));
      if (!e1_bad.is_zero()) bad[static_cast<std::size_t>(j) * q1 + f.log(e1_bad)] = 1;
    }
    return true;
  });

  std::uint32_t count = 0;
  for (std::uint32_t j = 0; j < q1; ++j) {
    if (dead[j]) continue;
    const auto row = std::span<const std::uint8_t>(bad).subspan(static_cast<std::size_t>(j) * q1, q1);
    count += q1 - static_cast<std::uint32_t>(std::count(row.begin(), row.end(), std::uint8_t{1}));
  }
  return count;
}

EnumResult count_mds_double_twisted(const EnumTask& task) {
  task.validate();
  const auto start = std::chrono::steady_clock::now();
  const Field f = Field::of_order(task.q);
  const std::uint64_t sets = binomial(task.q, task.n);
  const unsigned workers = std::max(1u, task.workers);
  std::vector<std::uint64_t> partial(workers, 0);
  EnumResult res;
  res.criterion = task.criterion;
  if (task.histogram) res.per_set.assign(sets, 0);

  parallel_blocks(sets, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::uint64_t sum = 0;
    for_each_value_set(f, task.n, begin, end, [&](std::uint64_t rank, std::span<const Elem> values) {
      const std::uint32_t c = task.criterion == EnumCriterion::closed_form ? count_mds_eta_pairs(f, values, task.k)
                                                                           : count_bruteforce(f, values, task.k);
      if (task.histogram) res.per_set[rank] = c;
      sum += c;
    });
    partial[w] = sum;
  });
  res.count = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<TableCell> table_cells(std::uint32_t q_lo, std::uint32_t q_hi) {
  std::vector<TableCell> cells;
  for (std::uint32_t q = std::max(2u, q_lo); q <= q_hi; ++q) {
    if (!is_prime_power(q)) continue;
    for (std::uint32_t n = 4; n <= q; ++n)
      for (std::uint32_t k = 2; k + 2 <= n; ++k) cells.push_back({q, n, k, 0});
  }
  return cells;
}

void fill_table(std::vector<TableCell>& cells, unsigned workers, std::uint64_t budget) {
  for (auto& cell : cells) {
    EnumTask task{cell.q, cell.n, cell.k, EnumCriterion::closed_form, workers, budget, false};
    cell.count = count_mds_double_twisted(task).count;
  }
}

std::vector<SearchHit> search_mds(const Field& f, std::uint32_t n, const TwistProfile& shape,
                                  const SearchOptions& options) {
  TwistProfile probe = shape;
  probe.eta.assign(shape.t.size(), f.one());
  probe.validate();
  if (probe.twists() == 0) throw Error(ErrorKind::invalid_argument, "search needs at least one twist");
  const bool fixed = !options.alpha.empty();
  if (fixed && options.alpha.size() != n) throw Error(ErrorKind::dimension_mismatch, "fixed alpha must have n entries");
  if (n > f.order() || n == 0) throw Error(ErrorKind::invalid_argument, "empty search space: need 0 < n <= q");
  if (probe.k >= n || probe.max_degree() >= n) {
    throw Error(ErrorKind::invalid_argument, "empty search space: k-1+t_l must be below n");
  }
  if (options.strategy == SearchStrategy::random && options.trials == 0) {
    throw Error(ErrorKind::invalid_argument, "empty search space: zero trials");
  }
  const bool closed = probe.is_double_01();
  const std::size_t ell = probe.twists();
  const std::uint32_t q1 = f.order() - 1;

  auto judge = [&](const std::vector<Elem>& alpha, const std::vector<Elem>& eta) {
    if (closed) return is_mds_double_twisted(f, DoubleTwist{alpha, probe.k, eta[0], eta[1]}, {kSaturated, 1});
    TwistProfile p = probe;
    p.eta = eta;
    return is_mds_subset_systems(MultiTwistedCode(f, p, alpha), {kSaturated, 1});
  };

  // All eta vectors for one alpha, in lexicographic order of discrete logs.
  auto scan_alpha = [&](const std::vector<Elem>& alpha, std::vector<SearchHit>& out) {
    if (closed) {
      // skip[j]: eta1 values ruled out for eta2 = gamma^j
      std::vector<std::vector<Elem>> skip(q1);
      std::vector<bool> skip_all(q1, false);
      if (options.prune) {
        const ForbiddenEta forbid(f, alpha, probe.k);
        for (std::uint32_t j = 0; j < q1; ++j) {
          const Elem eta2 = f.exp(j);
          skip_all[j] = std::binary_search(forbid.eta2().begin(), forbid.eta2().end(), eta2);
          if (!skip_all[j]) skip[j] = forbid.eta1_given(eta2);
        }
      }
      for (std::uint32_t i = 0; i < q1; ++i) {
        const Elem eta1 = f.exp(i);
        for (std::uint32_t j = 0; j < q1; ++j) {
          const Elem eta2 = f.exp(j);
          if (skip_all[j] || std::binary_search(skip[j].begin(), skip[j].end(), eta1)) continue;
          std::vector<Elem> eta{eta1, eta2};
          auto v = judge(alpha, eta);
          if (v.is_mds) out.push_back({alpha, std::move(eta), std::move(v)});
        }
      }
      return;
    }
    std::vector<std::uint32_t> logs(ell, 0);
    for (;;) {
      std::vector<Elem> eta(ell);
      for (std::size_t s = 0; s < ell; ++s) eta[s] = f.exp(logs[s]);
      auto v = judge(alpha, eta);
      if (v.is_mds) out.push_back({alpha, std::move(eta), std::move(v)});
      std::size_t s = ell;
      while (s > 0 && ++logs[s - 1] == q1) logs[--s] = 0;
      if (s == 0) break;
    }
  };

  std::vector<SearchHit> hits;
  if (options.strategy == SearchStrategy::exhaustive) {
    const std::uint64_t sets = fixed ? 1 : binomial(f.order(), n);
    const std::uint64_t cost = saturating_mul(sets, saturating_pow(q1, ell));
    if (cost > options.limit) {
      throw Error(ErrorKind::budget_exceeded,
                  std::to_string(cost) + " candidates exceed the budget of " + std::to_string(options.limit));
    }
    if (fixed) {
      scan_alpha(options.alpha, hits);
      return hits;
    }
    const unsigned workers = std::max(1u, options.workers);
    std::vector<std::vector<SearchHit>> partial(workers);
    parallel_blocks(sets, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
      for_each_value_set(f, n, begin, end, [&](std::uint64_t, std::span<const Elem> values) {
        scan_alpha(std::vector<Elem>(values.begin(), values.end()), partial[w]);
      });
    });
    for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(hits));
    return hits;
  }

  std::mt19937_64 rng(options.seed);
  std::vector<Elem> all = f.elements();
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    std::vector<Elem> alpha = options.alpha;
    if (!fixed) {
      // Partial Fisher-Yates with explicit index draws keeps the stream portable.
      for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t j = i + rng() % (all.size() - i);
        std::swap(all[i], all[j]);
      }
      alpha.assign(all.begin(), all.begin() + n);
    }
    std::vector<Elem> eta(ell);
    for (auto& e : eta) e = f.exp(static_cast<std::int64_t>(rng() % q1));
    if (closed && options.prune && ForbiddenEta(f, alpha, probe.k).excludes(eta[0], eta[1])) continue;
    auto v = judge(alpha, eta);
    if (v.is_mds) hits.push_back({std::move(alpha), std::move(eta), std::move(v)});
  }
  return hits;
}

}  // namespace mtrs
