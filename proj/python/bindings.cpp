#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mtrs/cli.hpp"
#include "mtrs/criteria.hpp"
#include "mtrs/enumerate.hpp"
#include "mtrs/error.hpp"
#include "mtrs/hull.hpp"
#include "mtrs/profile_io.hpp"

namespace py = pybind11;
using mtrs::json;

namespace {

mtrs::MultiTwistedCode code_of(const std::string& profile) { return mtrs::code_from_json(json::parse(profile)); }

mtrs::TwistProfile shape_of(const mtrs::Field& f, std::uint32_t k, std::vector<std::uint32_t> t,
                            std::vector<std::uint32_t> h, const std::vector<std::string>& eta) {
  mtrs::TwistProfile p;
  p.k = k;
  p.t = std::move(t);
  p.h = std::move(h);
  for (const auto& e : eta) p.eta.push_back(f.parse(e));
  return p;
}

std::string construct(std::uint64_t q, std::uint32_t k, std::vector<std::uint32_t> t, std::vector<std::uint32_t> h,
                      const std::vector<std::string>& eta, mtrs::Parity parity) {
  const mtrs::Field f = mtrs::Field::of_order(q);
  const auto params = shape_of(f, k, std::move(t), std::move(h), eta);
  const mtrs::SubgroupCode sc = parity == mtrs::Parity::even ? construct_even(f, params) : construct_odd(f, params);
  return json{{"n", sc.code.length()},
              {"dim", sc.code.dimension()},
              {"profile", mtrs::code_to_json(sc.code)},
              {"gram_decomposition", mtrs::gram_decomposition_to_json(mtrs::gram_decomposition(sc))},
              {"hull", mtrs::hull_report_to_json(mtrs::hull_report(sc.code.linear()))}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-twisted Reed-Solomon code toolkit";

  py::register_exception<mtrs::Error>(m, "DomainError", PyExc_ValueError);

  py::class_<mtrs::Field>(m, "Field")
      .def(py::init([](std::uint64_t q) { return mtrs::Field::of_order(q); }), py::arg("q"))
      .def_property_readonly("order", &mtrs::Field::order)
      .def_property_readonly("characteristic", &mtrs::Field::characteristic)
      .def_property_readonly("degree", &mtrs::Field::degree)
      .def_property_readonly("modulus", [](const mtrs::Field& f) { return f.spec().modulus; })
      .def("elements",
           [](const mtrs::Field& f) {
             std::vector<std::string> out;
             for (auto e : f.elements()) out.push_back(f.format(e));
             return out;
           })
      .def("primitive", [](const mtrs::Field& f) { return f.format(f.primitive()); })
      .def("normalize", [](const mtrs::Field& f, const std::string& x) { return f.format(f.parse(x)); })
      .def("add", [](const mtrs::Field& f, const std::string& x, const std::string& y) {
        return f.format(f.add(f.parse(x), f.parse(y)));
      })
      .def("mul", [](const mtrs::Field& f, const std::string& x, const std::string& y) {
        return f.format(f.mul(f.parse(x), f.parse(y)));
      })
      .def("inv", [](const mtrs::Field& f, const std::string& x) { return f.format(f.inv(f.parse(x))); })
      .def("pow", [](const mtrs::Field& f, const std::string& x, std::int64_t e) { return f.format(f.pow(f.parse(x), e)); });

  m.def(
      "check_mds",
      [](const std::string& profile, const std::string& method) {
        return mtrs::verdict_to_json(check_mds(code_of(profile), mtrs::parse_mds_method(method))).dump();
      },
      py::arg("profile"), py::arg("method"));
  m.def("min_distance", [](const std::string& profile) {
    return mtrs::min_distance_bruteforce(code_of(profile).linear(), {100'000'000, 1});
  });
  m.def("hull", [](const std::string& profile) {
    return mtrs::hull_report_to_json(mtrs::hull_report(code_of(profile).linear())).dump();
  });
  m.def("construct_even", [](std::uint64_t q, std::uint32_t k, std::vector<std::uint32_t> t, std::vector<std::uint32_t> h,
                             const std::vector<std::string>& eta) { return construct(q, k, t, h, eta, mtrs::Parity::even); });
  m.def("construct_odd", [](std::uint64_t q, std::uint32_t k, std::vector<std::uint32_t> t, std::vector<std::uint32_t> h,
                            const std::vector<std::string>& eta) { return construct(q, k, t, h, eta, mtrs::Parity::odd); });
  m.def(
      "count_mds_double_twisted",
      [](std::uint32_t q, std::uint32_t n, std::uint32_t k, const std::string& criterion, unsigned workers) {
        mtrs::EnumTask task;
        task.q = q;
        task.n = n;
        task.k = k;
        task.criterion = mtrs::parse_enum_criterion(criterion);
        task.workers = workers;
        py::gil_scoped_release release;
        return mtrs::count_mds_double_twisted(task).count;
      },
      py::arg("q"), py::arg("n"), py::arg("k"), py::arg("criterion") = "remark44", py::arg("workers") = 1);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"mtrs"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = mtrs::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
