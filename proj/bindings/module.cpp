#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sytkit/errors.hpp"
#include "sytkit/moments.hpp"
#include "sytkit/qpolynomial.hpp"
#include "sytkit/sampling.hpp"
#include "sytkit/selftest.hpp"
#include "sytkit/version.hpp"

namespace py = pybind11;
using namespace sytkit;

namespace {

py::object to_py_int(const Integer& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object to_py_fraction(const Rational& v) {
  const auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(numerator(v)), to_py_int(denominator(v)));
}

Partition shape_of(const std::vector<int>& parts) { return Partition(parts); }

// A statistic is either a spec string ("des", "maj", "power:1.5") or a list
// of table values (ints, "p/q" strings, or Fractions).
DescentFunction stat_of(const py::object& spec) {
  if (py::isinstance<py::str>(spec))
    return DescentFunction::parse(spec.cast<std::string>());
  if (py::isinstance<py::list>(spec) || py::isinstance<py::tuple>(spec)) {
    std::vector<Rational> values;
    for (const auto& item : spec) {
      values.push_back(
          rational_parse(py::str(item).cast<std::string>()));
    }
    return DescentFunction::table(std::move(values));
  }
  throw domain_error("statistic must be a string or a list of values");
}

std::vector<std::vector<int>> as_rows(const StandardTableau& t) {
  return t.rows();
}

EnumerationOptions cap_options(std::optional<long long> cap) {
  EnumerationOptions opts;
  if (cap.has_value()) {
    if (*cap < 1) throw domain_error("cap must be >= 1");
    opts.cap = *cap;
  }
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact and Monte Carlo descent statistics of standard Young tableaux";
  m.attr("__version__") = kVersion;

  py::register_exception<cap_exceeded>(m, "CapExceeded", PyExc_ValueError);
  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<internal_error>(m, "InternalError",
                                         PyExc_RuntimeError);

  // shapes
  m.def("conjugate",
        [](const std::vector<int>& parts) {
          return shape_of(parts).conjugate().parts();
        },
        py::arg("shape"));
  m.def("dominates",
        [](const std::vector<int>& mu, const std::vector<int>& lam) {
          return dominates(shape_of(mu), shape_of(lam));
        },
        py::arg("mu"), py::arg("lam"),
        "True when every prefix sum of mu is >= the matching one of lam");
  m.def("hook_lengths",
        [](const std::vector<int>& parts) {
          return hook_lengths(shape_of(parts));
        },
        py::arg("shape"));
  m.def("content_sum",
        [](const std::vector<int>& parts) {
          return to_py_int(content_sum(shape_of(parts)));
        },
        py::arg("shape"));
  m.def("squared_content_sum",
        [](const std::vector<int>& parts) {
          return to_py_int(squared_content_sum(shape_of(parts)));
        },
        py::arg("shape"));
  m.def("all_partitions",
        [](int n) {
          std::vector<std::vector<int>> out;
          for (const auto& lam : all_partitions(n)) out.push_back(lam.parts());
          return out;
        },
        py::arg("n"));

  // tableaux
  m.def("count_syt",
        [](const std::vector<int>& parts) {
          return to_py_int(count_syt(shape_of(parts)));
        },
        py::arg("shape"));
  m.def("enumerate_syt",
        [](const std::vector<int>& parts, std::optional<long long> cap) {
          std::vector<std::vector<std::vector<int>>> out;
          for_each_syt(
              shape_of(parts),
              [&](const StandardTableau& t) {
                out.push_back(as_rows(t));
                return true;
              },
              cap_options(cap));
          return out;
        },
        py::arg("shape"), py::arg("cap") = std::nullopt,
        "All standard tableaux in reproducible stream order");
  m.def("descent_set",
        [](const std::vector<std::vector<int>>& rows) {
          return StandardTableau::from_rows(rows).descent_set();
        },
        py::arg("rows"));
  m.def("des",
        [](const std::vector<std::vector<int>>& rows) {
          return StandardTableau::from_rows(rows).des();
        },
        py::arg("rows"));
  m.def("maj",
        [](const std::vector<std::vector<int>>& rows) {
          return StandardTableau::from_rows(rows).maj();
        },
        py::arg("rows"));
  m.def("descent_statistic",
        [](const std::vector<std::vector<int>>& rows, const py::object& stat) {
          const auto f = stat_of(stat);
          const auto t = StandardTableau::from_rows(rows);
          if (f.exact()) return to_py_fraction(descent_statistic(t, f));
          return py::cast(descent_statistic_real(t, f)).cast<py::object>();
        },
        py::arg("rows"), py::arg("stat"));

  // q-series
  m.def("maj_genfun_coeffs",
        [](const std::vector<int>& parts) {
          const QPolynomial gf = maj_generating_function(shape_of(parts));
          py::list out;
          for (const auto& c : gf.coeffs()) out.append(to_py_int(c));
          return out;
        },
        py::arg("shape"),
        "Coefficient list of the maj generating function, constant term first");
  m.def("genfun_moments",
        [](const std::vector<int>& parts) {
          const auto gm = moments_from_genfun(shape_of(parts));
          return py::make_tuple(to_py_int(gm.count),
                                to_py_fraction(gm.expectation),
                                to_py_fraction(gm.variance));
        },
        py::arg("shape"), "(count, expected maj, variance of maj)");

  // characters
  m.def("mn_character",
        [](const std::vector<int>& lam, const std::vector<int>& mu) {
          return to_py_int(mn_character(shape_of(lam), shape_of(mu)));
        },
        py::arg("shape"), py::arg("mu"),
        "Character value via the rim-hook recursion");
  m.def("character_via_descent_weights",
        [](const std::vector<int>& lam, const std::vector<int>& mu,
           std::optional<long long> cap) {
          return to_py_int(character_via_descent_weights(
              shape_of(lam), shape_of(mu), cap_options(cap)));
        },
        py::arg("shape"), py::arg("mu"), py::arg("cap") = std::nullopt);
  m.def("char_ratios",
        [](const std::vector<int>& parts) {
          const auto r = char_ratios(shape_of(parts));
          return py::make_tuple(to_py_fraction(r.r2), to_py_fraction(r.r3),
                                to_py_fraction(r.r22));
        },
        py::arg("shape"), "(r2, r3, r22) normalized character values");
  m.def("joint_descent_probabilities",
        [](const std::vector<int>& parts) {
          const auto p = joint_descent_probabilities(shape_of(parts));
          return py::make_tuple(to_py_fraction(p.p2), to_py_fraction(p.p3),
                                to_py_fraction(p.p22));
        },
        py::arg("shape"), "(p2, p3, p22) exact descent probabilities");

  // moments
  m.def("descent_position_probability",
        [](const std::vector<int>& parts) {
          return to_py_fraction(descent_position_probability(shape_of(parts)));
        },
        py::arg("shape"));
  m.def("expected_maj",
        [](const std::vector<int>& parts) {
          return to_py_fraction(expected_maj(shape_of(parts)));
        },
        py::arg("shape"));
  m.def("variance_maj",
        [](const std::vector<int>& parts) {
          return to_py_fraction(variance_maj(shape_of(parts)));
        },
        py::arg("shape"));
  m.def("expected_descent_statistic",
        [](const std::vector<int>& parts, const py::object& stat) {
          const auto f = stat_of(stat);
          const auto lam = shape_of(parts);
          if (f.exact())
            return to_py_fraction(expected_descent_statistic(lam, f));
          return py::cast(expected_descent_statistic_real(lam, f))
              .cast<py::object>();
        },
        py::arg("shape"), py::arg("stat"));
  m.def("variance_descent_statistic",
        [](const std::vector<int>& parts, const py::object& stat) {
          const auto f = stat_of(stat);
          const auto lam = shape_of(parts);
          if (f.exact())
            return to_py_fraction(variance_descent_statistic(lam, f));
          return py::cast(variance_descent_statistic_real(lam, f))
              .cast<py::object>();
        },
        py::arg("shape"), py::arg("stat"));
  m.def("chebyshev_tail_bound",
        [](const std::vector<int>& parts, const py::object& stat,
           const py::object& t) {
          return to_py_fraction(chebyshev_tail_bound(
              shape_of(parts), stat_of(stat),
              rational_parse(py::str(t).cast<std::string>())));
        },
        py::arg("shape"), py::arg("stat"), py::arg("t"));
  m.def("hecke_exponents",
        [](const std::vector<int>& parts, bool include_omega,
           std::optional<long long> cap) {
          const auto r = hecke_exponents(shape_of(parts), include_omega,
                                         cap_options(cap));
          py::dict out;
          out["maj_exponent"] = to_py_fraction(r.maj_exponent);
          out["des_exponent"] = to_py_fraction(r.des_exponent);
          if (r.has_omega) out["omega_exponents"] = r.omega_exponents;
          return out;
        },
        py::arg("shape"), py::arg("include_omega") = false,
        py::arg("cap") = std::nullopt);

  // sampling
  m.def("sample_syt",
        [](const std::vector<int>& parts, std::uint64_t seed,
           std::uint64_t stream) {
          RandomSource rng(seed, stream);
          return as_rows(sample_syt(shape_of(parts), rng));
        },
        py::arg("shape"), py::arg("seed"), py::arg("stream") = 0,
        "One uniform tableau via the hook walk");
  m.def("sample_statistics",
        [](const std::vector<int>& parts, const py::object& stat,
           long long count, std::uint64_t seed, std::uint64_t stream,
           int workers) {
          const auto f = stat_of(stat);
          const auto lam = shape_of(parts);
          const RandomSource base(seed, stream);
          py::list out;
          if (f.exact()) {
            for (const auto& v :
                 sample_statistics(lam, f, count, base, workers))
              out.append(to_py_fraction(v));
          } else {
            for (double v :
                 sample_statistics_real(lam, f, count, base, workers))
              out.append(v);
          }
          return out;
        },
        py::arg("shape"), py::arg("stat"), py::arg("count"), py::arg("seed"),
        py::arg("stream") = 0, py::arg("workers") = 1);
  m.def("run_concentration_experiment",
        [](const std::vector<int>& parts, const py::object& stat,
           long long samples, std::uint64_t seed, double epsilon, double delta,
           std::optional<double> t, std::uint64_t stream, int workers) {
          ConcentrationConfig cfg;
          cfg.samples = samples;
          cfg.seed = seed;
          cfg.stream = stream;
          cfg.epsilon = epsilon;
          cfg.delta = delta;
          cfg.t = t;
          cfg.workers = workers;
          const auto r =
              run_concentration_experiment(cfg, shape_of(parts), stat_of(stat));
          py::dict out;
          out["t"] = r.t;
          out["row_bound_ok"] = r.row_bound_ok;
          out["growth_ok"] = r.growth_ok;
          out["expectation"] = r.exact ? to_py_fraction(r.expectation)
                                       : py::cast(r.expectation_d);
          out["variance"] =
              r.exact ? to_py_fraction(r.variance) : py::cast(r.variance_d);
          out["empirical_mean"] = r.empirical_mean;
          out["empirical_variance"] = r.empirical_variance;
          out["outside_fraction"] = r.outside_fraction;
          out["chebyshev_bound"] = r.chebyshev_bound;
          out["var_over_e2"] = r.var_over_e2;
          if (r.terms_available && r.exact) {
            out["ratio_terms"] = py::make_tuple(to_py_fraction(r.term_square),
                                                to_py_fraction(r.term_adjacent),
                                                to_py_fraction(r.term_constant));
          } else if (r.terms_available) {
            out["ratio_terms"] = py::make_tuple(
                r.term_square_d, r.term_adjacent_d, r.term_constant_d);
          }
          return out;
        },
        py::arg("shape"), py::arg("stat"), py::arg("samples"), py::arg("seed"),
        py::arg("epsilon") = 0.1, py::arg("delta") = 0.5,
        py::arg("t") = std::nullopt, py::arg("stream") = 0,
        py::arg("workers") = 1);

  m.def("verify",
        [](int max_n, std::uint64_t seed, bool include_sampling) {
          selftest::VerifyOptions opts;
          opts.max_n = max_n;
          opts.seed = seed;
          opts.include_sampling = include_sampling;
          py::list out;
          for (const auto& r : selftest::run_verification(opts)) {
            py::dict item;
            item["name"] = r.name;
            item["pass"] = r.pass;
            item["detail"] = r.detail;
            item["ms"] = r.ms;
            out.append(item);
          }
          return out;
        },
        py::arg("max_n") = 7, py::arg("seed") = 42,
        py::arg("include_sampling") = true,
        "Run the oracle cross-check battery");
}
