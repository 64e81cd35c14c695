#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mtrs/field.hpp"
#include "mtrs/twisted_code.hpp"

namespace mtrs {

/// How each (evaluation set, eta) candidate is judged during enumeration.
enum class EnumCriterion { closed_form, bruteforce };
std::string_view to_string(EnumCriterion c);  // "remark44" / "bruteforce"
EnumCriterion parse_enum_criterion(std::string_view name);

/// Count MDS double-twisted codes (t=(1,2), h=(0,1)) of length n and
/// dimension k over F_q, taken over unordered n-subsets of F_q and ordered
/// pairs (eta1, eta2) of nonzero elements.
struct EnumTask {
  std::uint32_t q = 2;
  std::uint32_t n = 4;
  std::uint32_t k = 2;
  EnumCriterion criterion = EnumCriterion::closed_form;
  unsigned workers = 1;
  std::uint64_t budget = 1'000'000'000;  // C(q,n) (q-1)^2 C(n,k)
  bool histogram = false;                // keep the per-set counts

  void validate() const;
};

struct EnumResult {
  std::uint64_t count = 0;
  std::vector<std::uint32_t> per_set;  // indexed by lexicographic rank of the n-subset
  double elapsed_seconds = 0;
  EnumCriterion criterion = EnumCriterion::closed_form;
};

/// C(q,n) (q-1)^2 C(n,k), saturating.
std::uint64_t enumeration_cost(std::uint32_t q, std::uint32_t n, std::uint32_t k);

/// The result is independent of task.workers.
EnumResult count_mds_double_twisted(const EnumTask& task);

/// Number of (eta1, eta2) in (F*)^2 for which the double-twisted code on
/// `values` with dimension k is MDS.
std::uint32_t count_mds_eta_pairs(const Field& f, std::span<const Elem> values, std::uint32_t k);

/// One cell of the regenerated table.
struct TableCell {
  std::uint32_t q, n, k;
  std::uint64_t count;
};

/// Every prime power q in [lo, hi] with k >= 2 and k + 2 <= n <= q.
std::vector<TableCell> table_cells(std::uint32_t q_lo, std::uint32_t q_hi);
/// Fills in the counts of `cells`.
void fill_table(std::vector<TableCell>& cells, unsigned workers, std::uint64_t budget);

enum class SearchStrategy { exhaustive, random };

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  bool prune = true;                    // discard forbidden eta values before testing
  std::vector<Elem> alpha;              // fixed evaluation vector, or empty to range over n-subsets
  std::uint64_t limit = 100'000'000;    // candidate budget for exhaustive search
  unsigned workers = 1;
};

struct SearchHit {
  std::vector<Elem> alpha;
  std::vector<Elem> eta;
  MdsVerdict verdict;
};

/// Every emitted (alpha, eta) passes the criterion for the shape: the
/// closed form for t=(1,2), h=(0,1), the subset systems otherwise. The eta
/// entries of `shape` are ignored. Exhaustive output is ordered by alpha
/// subset rank, then eta; random output follows the draw order.
std::vector<SearchHit> search_mds(const Field& f, std::uint32_t n, const TwistProfile& shape,
                                  const SearchOptions& options);

}  // namespace mtrs
