#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpi/measures.hpp"
#include "qpi/models.hpp"
#include "qpi/partial_maps.hpp"
#include "qpi/weingarten.hpp"

namespace py = pybind11;
using namespace qpi;

namespace {

py::dict measure_to_dict(const RationalMeasure& m) {
  py::dict d;
  d["x"] = m.x;
  py::list atoms;
  for (const auto& [point, w] : m.atoms) {
    py::dict a;
    a["point"] = point.to_complex();
    a["weight"] = to_string(w);
    a["weight_float"] = to_double(w) * m.normalization_factor();
    atoms.append(a);
  }
  d["atoms"] = atoms;
  d["normalization"] =
      m.exp_rate == 0 ? std::string("exact") : to_string(m.exp_rate);
  return d;
}

std::vector<std::string> rationals_to_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "exact and numeric engines for partial-isometry semigroups";

  mod.def("count", [](int N, long x) { return count(N, x).str(); },
          py::arg("N"), py::arg("x") = 1);

  mod.def(
      "enumerate_signed",
      [](int N, long x, std::optional<int> k) {
        py::list out;
        enumerate(N, x, k, [&](const SignedPartialPermutation& f) {
          py::dict d;
          d["n"] = f.base.n;
          d["x"] = f.x;
          d["map"] = f.base.map;
          std::vector<std::string> signs;
          for (const auto& s : f.signs) signs.push_back(to_string(s));
          d["signs"] = signs;
          out.append(d);
        });
        return out;
      },
      py::arg("N"), py::arg("x") = 1, py::arg("k") = std::nullopt);

  mod.def(
      "mu_formula",
      [](int N, int k, int l) { return measure_to_dict(mu_formula(N, k, l)); },
      py::arg("N"), py::arg("k"), py::arg("l"));
  mod.def(
      "mu_bruteforce",
      [](int N, int k, int l, long x) {
        return measure_to_dict(mu_bruteforce(N, k, l, x));
      },
      py::arg("N"), py::arg("k"), py::arg("l"), py::arg("x") = 1);
  mod.def(
      "sign_mixing",
      [](int N, int k, int l) {
        return measure_to_dict(sign_mixing(N, k, l));
      },
      py::arg("N"), py::arg("k"), py::arg("l"));

  mod.def(
      "weingarten_moment",
      [](int n, long N, int l, const std::string& cat) {
        return to_string(single_group_moment(n, N, l, parse_category(cat)));
      },
      py::arg("n"), py::arg("N"), py::arg("l"), py::arg("cat"));
  mod.def(
      "triple_moment",
      [](int n, long N, long k, int l, const std::string& cat) {
        return to_string(triple_moment(n, N, k, l, parse_category(cat)));
      },
      py::arg("n"), py::arg("N"), py::arg("k"), py::arg("l"), py::arg("cat"));

  mod.def(
      "bp_check",
      [](const std::vector<std::string>& classical_moments,
         const std::vector<std::string>& free_moments, int n_max) {
        std::vector<Rational> cm, fm;
        for (const auto& s : classical_moments) cm.push_back(parse_rational(s));
        for (const auto& s : free_moments) fm.push_back(parse_rational(s));
        auto rep = bp_check(cm, fm, n_max);
        py::dict d;
        d["pass"] = rep.pass;
        d["first_fail"] = rep.first_fail;
        d["classical_cumulants"] = rationals_to_strings(rep.classical);
        d["free_cumulants"] = rationals_to_strings(rep.free);
        return d;
      },
      py::arg("classical_moments"), py::arg("free_moments"), py::arg("n_max"));

  mod.def(
      "sample",
      [](const std::string& cls, int N, int k, uint64_t seed) {
        return sample(parse_class(cls), N, k, seed).m;
      },
      py::arg("cls"), py::arg("N"), py::arg("k"), py::arg("seed") = 0);

  mod.def(
      "compose",
      [](const CMat& u, const CMat& v) {
        return compose(PartialIsometryMatrix(u), PartialIsometryMatrix(v)).m;
      },
      py::arg("u"), py::arg("v"));

  mod.def(
      "membership",
      [](const CMat& u, const std::string& cls, double tol) {
        auto rep = membership(PartialIsometryMatrix(u), parse_class(cls), tol);
        py::dict d;
        d["member"] = rep.member;
        d["residual"] = rep.residual;
        return d;
      },
      py::arg("u"), py::arg("cls"), py::arg("tol") = -1.0);

  mod.def(
      "monte_carlo_law",
      [](const std::string& cls, int N, int k, int l, long samples,
         uint64_t seed, int n_max, int threads) {
        auto rep = monte_carlo_law(parse_class(cls), N, k, l, samples, seed,
                                   n_max, threads);
        py::dict d;
        d["samples"] = rep.samples;
        d["moments"] = rep.moments;
        d["std_errors"] = rep.std_errors;
        return d;
      },
      py::arg("cls"), py::arg("N"), py::arg("k"), py::arg("l"),
      py::arg("samples"), py::arg("seed") = 0, py::arg("n_max") = 4,
      py::arg("threads") = 1);

  mod.def(
      "crossed_model_check",
      [](const CMat& u, double tol) {
        PartialIsometryMatrix U(u);
        auto m = crossed_model(U);
        auto hc = check_half_commutation(m, HalfCommVariant::AbcCba, tol);
        py::dict d;
        d["pattern_residual"] = m.pattern_residual();
        d["isometry_residual"] = m.isometry_residual();
        d["half_commutation_residual"] = hc.max_residual;
        d["pass"] = m.pattern_residual() <= tol &&
                    m.isometry_residual() <= tol && hc.pass;
        return d;
      },
      py::arg("u"), py::arg("tol") = 1e-9);

  mod.def(
      "double_matrix",
      [](const CMat& u) { return double_matrix(PartialIsometryMatrix(u)).m; },
      py::arg("u"));
}
