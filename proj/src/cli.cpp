#include "mtrs/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtrs/combinatorics.hpp"
#include "mtrs/criteria.hpp"
#include "mtrs/enumerate.hpp"
#include "mtrs/error.hpp"
#include "mtrs/hull.hpp"
#include "mtrs/profile_io.hpp"

namespace mtrs {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p, m;
  std::string modulus, field, profile;
  std::optional<std::uint32_t> n, k;
  std::string t, h, eta, alpha;
  std::string method;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  bool compact = false;
  std::uint64_t budget = 0;
  std::uint64_t trials = 1000;
  std::string chain;
  std::string strategy = "exhaustive";
  bool no_prune = false;
  std::optional<std::uint64_t> limit;
  bool table = false;
  std::uint32_t q_min = 2;
  std::string out_path;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

template <class T>
std::vector<T> int_list(const std::string& s, const char* name) {
  std::vector<T> out;
  for (const auto& item : split(s, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (v < 0 || item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + name + ": bad integer '" + item + "'");
    }
  }
  return out;
}

std::vector<Elem> elem_list(const Field& f, const std::string& s) {
  std::vector<Elem> out;
  for (const auto& item : split(s, ',')) out.push_back(f.parse(item));
  return out;
}

FieldSpec resolve_field(const Options& o) {
  if (!o.field.empty()) return FieldSpec::parse(o.field);
  std::optional<std::uint32_t> p = o.p, m = o.m;
  if (o.q) {
    const FieldSpec d = FieldSpec::default_for(*o.q);
    if ((p && *p != d.p) || (m && *m != d.m)) throw UsageError("--q disagrees with --p/--m");
    p = d.p;
    m = d.m;
    if (o.modulus.empty()) return d;
  }
  if (!p || !m) throw UsageError("the field needs --q, --p/--m, --field or --profile");
  if (o.modulus.empty()) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < *m; ++i) q = saturating_mul(q, *p);
    return FieldSpec::default_for(q);
  }
  return FieldSpec{*p, *m, int_list<std::uint32_t>(o.modulus, "modulus")};
}

TwistProfile resolve_shape(const Field& f, const Options& o) {
  if (!o.k) throw UsageError("--k is required");
  TwistProfile p;
  p.k = *o.k;
  p.t = int_list<std::uint32_t>(o.t, "t");
  p.h = int_list<std::uint32_t>(o.h, "h");
  p.eta = elem_list(f, o.eta);
  return p;
}

std::vector<Elem> resolve_alpha(const Field& f, const Options& o) {
  if (!o.alpha.empty()) return elem_list(f, o.alpha);
  if (!o.n) throw UsageError("give --alpha or --n");
  if (*o.n > f.order()) throw Error(ErrorKind::invalid_argument, "n exceeds the field order");
  std::vector<Elem> a;
  for (std::uint32_t i = 0; i < *o.n; ++i) a.push_back(Elem(i));
  return a;
}

MultiTwistedCode resolve_code(const Options& o) {
  if (!o.profile.empty()) return load_code(o.profile);
  const Field f(resolve_field(o));
  return MultiTwistedCode(f, resolve_shape(f, o), resolve_alpha(f, o));
}

ScanOptions scan(const Options& o) { return ScanOptions{o.budget ? o.budget : ScanOptions{}.limit, o.workers}; }

json code_summary(const MultiTwistedCode& c) {
  return json{{"n", c.length()}, {"k", c.dimension()}, {"q", c.field().order()}, {"profile", code_to_json(c)}};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json cmd_check_mds(const Options& o) {
  const MultiTwistedCode code = resolve_code(o);
  std::vector<MdsMethod> methods;
  const std::string name = o.method.empty() ? "all" : o.method;
  if (name == "all") {
    methods = {MdsMethod::bruteforce, MdsMethod::subset_systems};
    if (code.profile().is_double_01()) {
      methods.push_back(MdsMethod::closed_form);
      methods.push_back(MdsMethod::eta_conditions);
    }
  } else {
    try {
      methods = {parse_mds_method(name)};
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  json verdicts = json::array();
  std::optional<bool> first;
  bool agree = true;
  for (auto m : methods) {
    const auto t0 = std::chrono::steady_clock::now();
    const MdsVerdict v = check_mds(code, m, scan(o));
    json vj = verdict_to_json(v);
    vj["seconds"] = seconds_since(t0);
    verdicts.push_back(vj);
    if (!first) first = v.is_mds;
    else if (*first != v.is_mds) agree = false;
  }
  json out = code_summary(code);
  out["verdicts"] = verdicts;
  out["agree"] = agree;
  out["is_mds"] = *first;
  return out;
}

json cmd_min_distance(const Options& o) {
  const MultiTwistedCode code = resolve_code(o);
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint32_t d = min_distance_bruteforce(code.linear(), scan(o));
  json out = code_summary(code);
  out["d"] = d;
  out["singleton"] = code.length() - code.dimension() + 1;
  out["is_mds"] = d == code.length() - code.dimension() + 1;
  out["seconds"] = seconds_since(t0);
  return out;
}

json hull_json(const MultiTwistedCode& code, const Options& o) {
  json out = hull_report_to_json(hull_report(code.linear()));
  out["n"] = code.length();
  const ScanOptions s = scan(o);
  if (binomial(code.length(), code.dimension()) <= s.limit) {
    out["is_mds"] = is_mds_bruteforce(code.linear(), s).is_mds;
  } else {
    out["is_mds"] = nullptr;
  }
  return out;
}

json cmd_hull(const Options& o) {
  const MultiTwistedCode code = resolve_code(o);
  json out = hull_json(code, o);
  out["profile"] = code_to_json(code);
  return out;
}

json cmd_construct(const Options& o, Parity parity) {
  const Field f(resolve_field(o));
  const TwistProfile params = resolve_shape(f, o);
  const SubgroupCode sc = parity == Parity::even ? construct_even(f, params) : construct_odd(f, params);
  json out;
  out["parity"] = parity == Parity::even ? "even" : "odd";
  out["subgroup_order"] = params.k;
  out["n"] = sc.code.length();
  out["dim"] = sc.code.dimension();
  out["profile"] = code_to_json(sc.code);
  out["gram_decomposition"] = gram_decomposition_to_json(gram_decomposition(sc));
  out["hull"] = hull_json(sc.code, o);
  return out;
}

json cmd_enumerate(const Options& o) {
  if (o.table) {
    const std::uint32_t hi = o.q ? static_cast<std::uint32_t>(*o.q) : 17;
    auto cells = table_cells(o.q_min, hi);
    const auto t0 = std::chrono::steady_clock::now();
    fill_table(cells, o.workers, o.budget ? o.budget : 2'000'000'000ULL);
    json doc = table_to_json(cells);
    if (!o.out_path.empty()) {
      std::ofstream f(o.out_path);
      if (!f) throw Error(ErrorKind::invalid_argument, "cannot write " + o.out_path);
      f << doc.dump(2) << "\n";
    }
    doc["seconds"] = seconds_since(t0);
    return doc;
  }
  if (!o.q || !o.n || !o.k) throw UsageError("enumerate needs --q, --n and --k (or --table)");
  EnumTask task;
  task.q = static_cast<std::uint32_t>(*o.q);
  task.n = *o.n;
  task.k = *o.k;
  task.workers = o.workers;
  if (o.budget) task.budget = o.budget;
  if (!o.method.empty()) {
    try {
      task.criterion = parse_enum_criterion(o.method);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  const EnumResult r = count_mds_double_twisted(task);
  return json{{"q", task.q},
              {"n", task.n},
              {"k", task.k},
              {"criterion", std::string(to_string(r.criterion))},
              {"workers", task.workers},
              {"count", r.count},
              {"elapsed_seconds", r.elapsed_seconds}};
}

json cmd_search(const Options& o) {
  const Field f(resolve_field(o));
  TwistProfile shape = resolve_shape(f, o);
  if (!o.n && o.alpha.empty()) throw UsageError("search needs --n or --alpha");
  SearchOptions so;
  if (!o.alpha.empty()) so.alpha = elem_list(f, o.alpha);
  const std::uint32_t n = o.n ? *o.n : static_cast<std::uint32_t>(so.alpha.size());
  if (o.strategy == "exhaustive") so.strategy = SearchStrategy::exhaustive;
  else if (o.strategy == "random") so.strategy = SearchStrategy::random;
  else throw UsageError("--strategy must be exhaustive or random");
  so.seed = o.seed;
  so.trials = o.trials;
  so.prune = !o.no_prune;
  so.workers = o.workers;
  if (o.limit) so.limit = *o.limit;
  const auto hits = search_mds(f, n, shape, so);
  json arr = json::array();
  for (const auto& hit : hits) {
    arr.push_back(json{{"alpha", elems_to_json(f, hit.alpha)},
                       {"eta", elems_to_json(f, hit.eta)},
                       {"method", std::string(to_string(hit.verdict.method))}});
  }
  return json{{"q", f.order()}, {"n", n},         {"k", shape.k},        {"t", shape.t},
              {"h", shape.h},   {"pruned", so.prune}, {"count", hits.size()}, {"hits", arr}};
}

json cmd_subfield(const Options& o) {
  const Field f(resolve_field(o));
  if (o.chain.empty()) throw UsageError("subfield-construct needs --chain q0,q1,...,q");
  const auto chain = int_list<std::uint64_t>(o.chain, "chain");
  const MultiTwistedCode code = construct_subfield_chain(f, chain, resolve_alpha(f, o), resolve_shape(f, o));
  json out = code_summary(code);
  out["chain"] = chain;
  out["verdict"] = verdict_to_json(is_mds_bruteforce(code.linear(), scan(o)));
  return out;
}

void add_field_options(CLI::App* c, Options& o) {
  c->add_option("--q", o.q, "field order (default modulus)");
  c->add_option("--p", o.p, "characteristic");
  c->add_option("--m", o.m, "extension degree");
  c->add_option("--modulus", o.modulus, "modulus coefficients c0,...,cm");
  c->add_option("--field", o.field, "field spec p,m,c0,...,cm");
}

void add_shape_options(CLI::App* c, Options& o) {
  c->add_option("--k", o.k, "dimension parameter k");
  c->add_option("--t", o.t, "twists, e.g. 1,2");
  c->add_option("--h", o.h, "hooks, e.g. 0,1");
  c->add_option("--eta", o.eta, "eta values, comma separated element strings");
}

void add_code_options(CLI::App* c, Options& o) {
  add_field_options(c, o);
  add_shape_options(c, o);
  c->add_option("--profile", o.profile, "code profile JSON file");
  c->add_option("--n", o.n, "length (alpha = first n field elements)");
  c->add_option("--alpha", o.alpha, "evaluation points, comma separated element strings");
}

void add_common(CLI::App* c, Options& o) {
  c->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  c->add_option("--budget", o.budget, "scan budget");
  c->add_flag("--json", o.compact, "compact single-line JSON");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-twisted Reed-Solomon code toolkit", "mtrs"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check-mds", "decide whether a code is MDS");
  add_code_options(check, o);
  check->add_option("--method", o.method, "bruteforce|theorem31|remark44|theorem42|all");
  auto* dist = app.add_subcommand("min-distance", "exact minimum distance");
  add_code_options(dist, o);
  auto* hull = app.add_subcommand("hull", "hull dimension and Gram matrix");
  add_code_options(hull, o);
  auto* even = app.add_subcommand("construct-even", "[2k,k] code over doubled subgroup points, q even");
  add_field_options(even, o);
  add_shape_options(even, o);
  auto* odd = app.add_subcommand("construct-odd", "[2k,k-1] code over doubled subgroup points, q odd");
  add_field_options(odd, o);
  add_shape_options(odd, o);
  auto* en = app.add_subcommand("enumerate", "count MDS double-twisted codes");
  en->add_option("--q", o.q, "field order (largest order with --table)");
  en->add_option("--n", o.n, "length");
  en->add_option("--k", o.k, "dimension");
  en->add_option("--method", o.method, "remark44|bruteforce");
  en->add_flag("--table", o.table, "regenerate the table of counts for all q in [--q-min, --q]");
  en->add_option("--q-min", o.q_min, "smallest order with --table");
  en->add_option("--out", o.out_path, "write the table JSON to this file");
  auto* se = app.add_subcommand("search", "search for MDS parameters");
  add_field_options(se, o);
  add_shape_options(se, o);
  se->add_option("--n", o.n, "length");
  se->add_option("--alpha", o.alpha, "fixed evaluation points");
  se->add_option("--strategy", o.strategy, "exhaustive|random");
  se->add_option("--seed", o.seed, "random seed");
  se->add_option("--trials", o.trials, "random draws");
  se->add_flag("--no-prune", o.no_prune, "do not discard forbidden eta values");
  se->add_option("--limit", o.limit, "candidate budget for exhaustive search");
  auto* sub = app.add_subcommand("subfield-construct", "code from a chain of subfields");
  add_code_options(sub, o);
  sub->add_option("--chain", o.chain, "subfield orders q0,q1,...,q");
  for (auto* c : {check, dist, hull, even, odd, en, se, sub}) add_common(c, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mtrs: " << e.what() << "\n" << "run 'mtrs --help' for usage\n";
    return 2;
  }

  try {
    json result;
    if (check->parsed()) result = cmd_check_mds(o);
    else if (dist->parsed()) result = cmd_min_distance(o);
    else if (hull->parsed()) result = cmd_hull(o);
    else if (even->parsed()) result = cmd_construct(o, Parity::even);
    else if (odd->parsed()) result = cmd_construct(o, Parity::odd);
    else if (en->parsed()) result = cmd_enumerate(o);
    else if (se->parsed()) result = cmd_search(o);
    else result = cmd_subfield(o);
    out << result.dump(o.compact ? -1 : 2) << "\n";
    return 0;
  } catch (const UsageError& e) {
    err << "mtrs: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << json{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}}.dump(o.compact ? -1 : 2)
        << "\n";
    return 1;
  } catch (const std::exception& e) {
    out << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(o.compact ? -1 : 2) << "\n";
    return 1;
  }
}

}  // namespace mtrs
