#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abcins/arith.hpp"
#include "abcins/enumeration.hpp"
#include "abcins/errors.hpp"
#include "abcins/report.hpp"
#include "abcins/verify.hpp"
#include "abcins/version.hpp"

namespace py = pybind11;
using namespace abcins;

namespace {

py::int_ to_py(const BigInt& v) {
  PyObject* o = PyLong_FromString(v.get_str(16).c_str(), nullptr, 16);
  if (!o) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(o);
}

BigInt from_py(const py::int_& v) {
  BigInt r;
  if (r.set_str(py::str(v).cast<std::string>(), 10) != 0) throw InvalidArgument("not an integer");
  return r;
}

py::dict stats_dict(const Triple& t, const TripleStats& s) {
  py::dict d;
  d["a"] = t.a();
  d["b"] = t.b();
  d["c"] = t.c();
  d["H"] = s.height;
  d["N"] = to_py(s.conductor);
  d["S"] = s.smoothness;
  d["I"] = to_py(s.insulator);
  d["quality"] = s.abc_quality;
  d["merit"] = s.xyz_merit;
  d["ratio"] = s.weak_ratio;
  return d;
}

py::list rows_list(const std::vector<Row>& rows) {
  py::list out;
  for (const Row& r : rows) out.append(stats_dict(r.triple, r.stats));
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  return py::module_::import("json").attr("loads")(report_json(r).dump());
}

std::vector<Row> rows_from_pairs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                                 const PrimeTable& table) {
  std::vector<Row> rows;
  rows.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    Triple t(a, b);
    rows.push_back({t, stats(t, table)});
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_abcins, m) {
  m.doc() = "Heights, conductors, smoothness and insulators of primitive solutions of A + B + C = 0";
  m.attr("__version__") = kVersion;

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<CoverageError>(m, "CoverageError", PyExc_RuntimeError);
  py::register_exception<IncompleteFactorization>(m, "IncompleteFactorization", PyExc_RuntimeError);

  py::class_<PrimeTable>(m, "PrimeTable")
      .def(py::init<std::uint64_t>(), py::arg("limit"))
      .def_property_readonly("limit", &PrimeTable::limit)
      .def("primes", [](const PrimeTable& t) { return std::vector<std::uint32_t>(t.primes().begin(), t.primes().end()); })
      .def("spf", [](const PrimeTable& t, std::uint64_t n) {
        if (n < 2 || n > t.limit()) throw InvalidArgument("spf index out of range");
        return t.spf(n);
      });

  m.def("factorize", [](std::int64_t n, const PrimeTable& t) {
        Factorization f = factorize(n, t);
        std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
        for (const auto& pp : f.factors()) out.emplace_back(pp.prime, pp.exponent);
        return py::make_tuple(f.sign(), out, f.to_string());
      }, py::arg("n"), py::arg("table"), "Returns (sign, [(prime, exponent)], rendering).");
  m.def("radical", [](std::int64_t n, const PrimeTable& t) { return to_py(radical(factorize(n, t))); });
  m.def("largest_prime", [](std::int64_t n, const PrimeTable& t) { return largest_prime(factorize(n, t)); });
  m.def("primorial", [](double x, const PrimeTable& t) { return to_py(primorial(x, t)); });
  m.def("chebyshev_theta", &chebyshev_theta, py::arg("x"), py::arg("table"));
  m.def("is_insulated", [](std::int64_t n, const PrimeTable& t) { return is_insulated(factorize(n, t), t); });
  m.def("insulator", [](std::int64_t n, const PrimeTable& t) { return to_py(insulator(factorize(n, t), t)); });

  m.def("canonicalize", [](std::int64_t A, std::int64_t B, std::int64_t C) {
        CanonicalTriple c = canonicalize(A, B, C);
        return py::make_tuple(c.triple.a(), c.triple.b(), c.orbit_size);
      }, "Returns (a, b, orbit_size).");
  m.def("stats", [](std::uint64_t a, std::uint64_t b, const PrimeTable& t) {
    Triple tr(a, b);
    return stats_dict(tr, stats(tr, t));
  });
  m.def("mersenne_family", [](int k) {
    Triple t = mersenne_family(k);
    return py::make_tuple(t.a(), t.b());
  });

  m.def("enumerate_by_height", [](std::uint64_t X, const PrimeTable& t, unsigned threads, bool inclusive) {
        std::vector<Row> rows;
        {
          py::gil_scoped_release release;
          rows = collect_by_height({X, 16, threads, inclusive}, t);
        }
        return rows_list(rows);
      }, py::arg("height_bound"), py::arg("table"), py::arg("threads") = 1, py::arg("inclusive") = false);
  m.def("generate_smooth_numbers", &generate_smooth_numbers, py::arg("P"), py::arg("limit"), py::arg("table"));
  m.def("enumerate_by_smoothness", [](std::uint64_t P, std::uint64_t cap, const PrimeTable& t) {
    SmoothScan s = enumerate_by_smoothness(P, cap, t);
    py::dict d;
    d["cap_limited"] = s.cap_limited;
    d["rows"] = rows_list(s.rows);
    return d;
  });
  m.def("find_by_insulator", [](const py::int_& target, std::uint64_t cap, const PrimeTable& t, unsigned threads) {
        return rows_list(find_by_insulator(from_py(target), cap, t, threads));
      }, py::arg("target"), py::arg("height_cap"), py::arg("table"), py::arg("threads") = 1);
  m.def("insulator_spectrum", [](std::uint64_t X, const PrimeTable& t, unsigned threads) {
        Spectrum s = insulator_spectrum(X, t, threads);
        py::dict out;
        for (const auto& [value, b] : s.buckets)
          out[to_py(value)] = py::make_tuple(b.count, b.min_height, py::make_tuple(b.example.a(), b.example.b()));
        return out;
      }, py::arg("height_bound"), py::arg("table"), py::arg("threads") = 1,
      "Maps insulator -> (count, min_height, (a, b)).");
  m.def("records", [](std::uint64_t X, const std::string& merit, const PrimeTable& t) {
    auto which = parse_merit(merit);
    if (!which) throw InvalidArgument("unknown merit " + merit);
    RecordTracker tracker(*which);
    enumerate_by_height({X, 16, 1, false}, t, [&](const Row& r) { tracker.add(r); });
    py::list out;
    for (const ReportRow& r : tracker.rows()) out.append(stats_dict(r.triple, r.stats));
    return out;
  }, py::arg("height_bound"), py::arg("merit"), py::arg("table"));

  m.def("check_eq2", [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs, const PrimeTable& t) {
    return report_dict(check_eq2(rows_from_pairs(pairs, t)));
  });
  m.def("check_height_rad", [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs, const PrimeTable& t) {
    return report_dict(check_height_rad(rows_from_pairs(pairs, t)));
  });
  m.def("check_sandwich", [](double alpha, double beta, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                             const PrimeTable& t) {
    return report_dict(check_sandwich(alpha, beta, rows_from_pairs(pairs, t)));
  });
  m.def("theta_ratio_threshold", [](std::uint64_t limit, const PrimeTable& t) {
    ThetaThresholds th = theta_ratio_threshold(limit, t);
    return py::make_tuple(th.x0_lower, th.x0_upper);
  });
}
