#include "bruhat/appendix_dh.hpp"
#include "bruhat/doubles.hpp"
#include "bruhat/hcd.hpp"
#include "bruhat/report.hpp"
#include "bruhat/rpoly.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bruhat;

namespace {

Interval interval_of(const std::string& u, const std::string& v) {
  return Interval::build(Permutation::parse(u), Permutation::parse(v));
}

std::vector<std::string> names(const std::vector<Permutation>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs)
    out.push_back(x.str());
  return out;
}

// (degree, element) pairs with multiplicity, sorted
std::vector<std::pair<int, std::string>> items(const DegreeMultiset& m) {
  std::vector<std::pair<int, std::string>> out;
  for (const auto& [item, count] : m.entries())
    for (std::size_t k = 0; k < count; ++k)
      out.emplace_back(item.first, item.second.str());
  return out;
}

std::vector<std::string> coefficients(const QPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs())
    out.push_back(c.str());
  return out;
}

} // namespace

PYBIND11_MODULE(_bruhat, m) {
  m.doc() = "Bruhat intervals of S_n: R-polynomials and hypercube decompositions";

  m.def("length", [](const std::string& w) { return Permutation::parse(w).length(); });
  m.def("leq", [](const std::string& x, const std::string& y) {
    return bruhat_leq(Permutation::parse(x), Permutation::parse(y));
  });

  m.def(
      "rtilde",
      [](const std::string& u, const std::string& v, const std::string& method,
         std::vector<int> word) {
        const auto pu = Permutation::parse(u), pv = Permutation::parse(v);
        if (method == "recurrence")
          return rtilde_recurrence(pu, pv).str();
        if (method != "dyer")
          throw std::invalid_argument("method must be recurrence or dyer");
        const int n = pu.n();
        if (word.empty())
          word = reduced_words_of_longest(n, 1).front();
        return rtilde_dyer(Interval::build(pu, pv), reflection_order_from_word(n, word)).str();
      },
      py::arg("u"), py::arg("v"), py::arg("method") = "recurrence",
      py::arg("order_word") = std::vector<int>{},
      "R-tilde polynomial as a string such as 'q^3+q'.");

  m.def(
      "rtilde_coefficients",
      [](const std::string& u, const std::string& v) {
        return coefficients(rtilde_recurrence(Permutation::parse(u), Permutation::parse(v)));
      },
      py::arg("u"), py::arg("v"), "Coefficients by ascending degree, as decimal strings.");

  m.def(
      "inspect",
      [](const std::string& u, const std::string& v) {
        return py::module_::import("json").attr("loads")(
            interval_summary(interval_of(u, v)).dump());
      },
      py::arg("u"), py::arg("v"), "Interval summary as a dict.");

  m.def(
      "elements", [](const std::string& u, const std::string& v) {
        return names(interval_of(u, v).elements());
      },
      py::arg("u"), py::arg("v"));

  m.def(
      "standard_hcds",
      [](const std::string& u, const std::string& v) {
        std::vector<std::string> out;
        for (const auto& s : standard_hcds(interval_of(u, v)))
          out.push_back(s.z.str());
        return out;
      },
      py::arg("u"), py::arg("v"));

  m.def(
      "hcds",
      [](const std::string& u, const std::string& v, bool amazing_only) {
        return names(enumerate_hcds(interval_of(u, v), amazing_only));
      },
      py::arg("u"), py::arg("v"), py::arg("amazing_only") = false);

  m.def(
      "shortcuts",
      [](const std::string& u, const std::string& v, const std::string& z) {
        return names(shortcuts(interval_of(u, v), Permutation::parse(z)));
      },
      py::arg("u"), py::arg("v"), py::arg("z"));

  m.def(
      "rtilde_z",
      [](const std::string& u, const std::string& v, const std::string& z) {
        return rtilde_z(interval_of(u, v), Permutation::parse(z)).str();
      },
      py::arg("u"), py::arg("v"), py::arg("z"));

  m.def(
      "ds",
      [](const std::string& u, const std::string& v, const std::string& z,
         const std::string& z2) {
        return items(ds_multiset(interval_of(u, v), Permutation::parse(z), Permutation::parse(z2)));
      },
      py::arg("u"), py::arg("v"), py::arg("z"), py::arg("z2"));

  m.def(
      "dh",
      [](const std::string& u, const std::string& v, const std::string& z,
         const std::string& z2) {
        return items(dh_multiset(interval_of(u, v), Permutation::parse(z), Permutation::parse(z2)));
      },
      py::arg("u"), py::arg("v"), py::arg("z"), py::arg("z2"));

  m.def(
      "is_cosimple",
      [](const std::string& u, const std::string& v) { return is_cosimple(interval_of(u, v)); },
      py::arg("u"), py::arg("v"));
}
