#include "mtrs/profile_io.hpp"

#include <fstream>

#include "mtrs/error.hpp"

namespace mtrs {

namespace {

Elem elem_from_json(const Field& f, const json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.parse(std::to_string(j.get<std::int64_t>()));
  throw Error(ErrorKind::parse, "field element must be a string or integer");
}

template <class T>
std::vector<T> uint_list(const json& j, const char* name) {
  if (!j.is_array()) throw Error(ErrorKind::parse, std::string(name) + " must be an array");
  std::vector<T> out;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0)) {
      throw Error(ErrorKind::parse, std::string(name) + " entries must be non-negative integers");
    }
    out.push_back(x.get<T>());
  }
  return out;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::parse, std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

FieldSpec field_spec_from_json(const json& j) {
  if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
  if (j.is_number_unsigned()) return FieldSpec::default_for(j.get<std::uint64_t>());
  if (!j.is_object()) throw Error(ErrorKind::parse, "field must be an object or a \"p,m,c0,...\" string");
  if (!j.contains("modulus") && j.contains("q")) return FieldSpec::default_for(j.at("q").get<std::uint64_t>());
  FieldSpec spec;
  spec.p = member(j, "p").get<std::uint32_t>();
  spec.m = member(j, "m").get<std::uint32_t>();
  spec.modulus = uint_list<std::uint32_t>(member(j, "modulus"), "modulus");
  return spec;
}

json field_spec_to_json(const FieldSpec& spec) {
  return json{{"p", spec.p}, {"m", spec.m}, {"modulus", spec.modulus}};
}

MultiTwistedCode code_from_json(const json& doc) {
  const json& j = doc.is_object() && doc.contains("profile") ? doc.at("profile") : doc;
  try {
    const Field f(field_spec_from_json(member(j, "field")));
    TwistProfile p;
    p.k = member(j, "k").get<std::uint32_t>();
    if (j.contains("t")) p.t = uint_list<std::uint32_t>(j.at("t"), "t");
    if (j.contains("h")) p.h = uint_list<std::uint32_t>(j.at("h"), "h");
    if (j.contains("eta")) p.eta = elems_from_json(f, j.at("eta"));
    return MultiTwistedCode(f, std::move(p), elems_from_json(f, member(j, "alpha")));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad profile: ") + e.what());
  }
}

json code_to_json(const MultiTwistedCode& code) {
  const Field& f = code.field();
  const TwistProfile& p = code.profile();
  return json{{"field", field_spec_to_json(f.spec())},
              {"alpha", elems_to_json(f, code.alpha())},
              {"k", p.k},
              {"t", p.t},
              {"h", p.h},
              {"eta", elems_to_json(f, p.eta)}};
}

MultiTwistedCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, path + ": " + e.what());
  }
  return code_from_json(j);
}

json elems_to_json(const Field& f, std::span<const Elem> v) {
  json out = json::array();
  for (Elem e : v) out.push_back(f.format(e));
  return out;
}

std::vector<Elem> elems_from_json(const Field& f, const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "expected an array of field elements");
  std::vector<Elem> out;
  for (const auto& x : j) out.push_back(elem_from_json(f, x));
  return out;
}

json matrix_to_json(const Matrix& m) { return json(m.to_strings()); }

json verdict_to_json(const MdsVerdict& v) {
  return json{{"method", std::string(to_string(v.method))}, {"is_mds", v.is_mds}, {"witness", v.witness}};
}

json hull_report_to_json(const HullReport& r) {
  return json{{"dim", r.code_dim},
              {"gram_rank", r.gram_rank},
              {"hull_dim", r.hull_dim_rank},
              {"hull_dim_direct", r.hull_dim_direct},
              {"gram", matrix_to_json(r.gram)}};
}

json gram_decomposition_to_json(const GramDecomposition& d) {
  return json{{"a1a1", matrix_to_json(d.a1a1)},     {"agag", matrix_to_json(d.agag)},
              {"b1b1", matrix_to_json(d.b1b1)},     {"bgbg", matrix_to_json(d.bgbg)},
              {"aa_sum", matrix_to_json(d.aa_sum)}, {"bb_sum", matrix_to_json(d.bb_sum)},
              {"cross", matrix_to_json(d.cross)},   {"total", matrix_to_json(d.total)}};
}

json table_to_json(const std::vector<TableCell>& cells) {
  json arr = json::array();
  for (const auto& c : cells) arr.push_back(json{{"q", c.q}, {"n", c.n}, {"k", c.k}, {"count", c.count}});
  return json{{"twists", {1, 2}}, {"hooks", {0, 1}}, {"cells", arr}};
}

std::vector<TableCell> table_from_json(const json& j) {
  std::vector<TableCell> out;
  for (const auto& c : member(j, "cells")) {
    out.push_back({c.at("q").get<std::uint32_t>(), c.at("n").get<std::uint32_t>(), c.at("k").get<std::uint32_t>(),
                   c.at("count").get<std::uint64_t>()});
  }
  return out;
}

}  // namespace mtrs
