#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "threegap/alpha_parse.hpp"
#include "threegap/error.hpp"
#include "threegap/format.hpp"
#include "threegap/gap_oracle.hpp"
#include "threegap/gap_predictor.hpp"
#include "threegap/metric_mc.hpp"
#include "threegap/quadratic.hpp"
#include "threegap/version.hpp"

namespace py = pybind11;
using namespace threegap;

namespace {

py::int_ to_py(const Int& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Int to_int(const py::object& v) {
    py::int_ as_int(v);  // raises TypeError for non-integers
    return Int(std::string(py::str(as_int)));
}

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(r.get_num()), to_py(r.get_den()));
}

std::vector<Int> to_int_vector(const py::sequence& seq) {
    std::vector<Int> out;
    out.reserve(seq.size());
    for (py::handle h : seq) out.push_back(to_int(py::reinterpret_borrow<py::object>(h)));
    return out;
}

py::list int_list(const std::vector<Int>& values) {
    py::list out;
    for (const Int& v : values) out.append(to_py(v));
    return out;
}

AlphaSource to_source(const py::object& alpha) {
    if (py::isinstance<py::str>(alpha)) return parse_alpha(alpha.cast<std::string>());
    return alpha.cast<AlphaSource>();
}

CFExpansion to_cf(const py::object& alpha) {
    if (py::isinstance<CFExpansion>(alpha)) return alpha.cast<CFExpansion>();
    return to_source(alpha).cf();
}

}  // namespace

PYBIND11_MODULE(_threegap, m) {
    m.doc() = "exact gap structure of <k alpha> sequences";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "DomainError", PyExc_ValueError);

    py::class_<CFExpansion>(m, "CFExpansion")
        .def_static("finite",
                    [](const py::sequence& digits) {
                        return CFExpansion::finite(to_int_vector(digits));
                    })
        .def_static("truncated_prefix",
                    [](const py::sequence& digits) {
                        return CFExpansion::truncated_prefix(to_int_vector(digits));
                    })
        .def_static("periodic",
                    [](const py::sequence& pre, const py::sequence& per) {
                        return CFExpansion::periodic(to_int_vector(pre), to_int_vector(per));
                    })
        .def_property_readonly("is_periodic", &CFExpansion::is_periodic)
        .def_property_readonly("is_truncated", &CFExpansion::is_truncated)
        .def_property_readonly("preperiod",
                               [](const CFExpansion& cf) { return int_list(cf.preperiod()); })
        .def_property_readonly("period",
                               [](const CFExpansion& cf) { return int_list(cf.period()); })
        .def("digit", [](const CFExpansion& cf, std::size_t i) { return to_py(cf.digit(i)); })
        .def("has_digit", &CFExpansion::has_digit)
        .def("digit_count", &CFExpansion::digit_count)
        .def("evaluate", [](const CFExpansion& cf) { return to_fraction(cf.evaluate()); })
        .def("__str__", &CFExpansion::to_string)
        .def("__repr__",
             [](const CFExpansion& cf) { return "CFExpansion(" + cf.to_string() + ")"; })
        .def("__eq__", [](const CFExpansion& a, const CFExpansion& b) { return a == b; });

    py::class_<Convergent>(m, "Convergent")
        .def_property_readonly("n", [](const Convergent& c) { return c.n; })
        .def_property_readonly("p", [](const Convergent& c) { return to_py(c.p); })
        .def_property_readonly("q", [](const Convergent& c) { return to_py(c.q); })
        .def_property_readonly("sub_index",
                               [](const Convergent& c) -> py::object {
                                   if (!c.sub_index) return py::none();
                                   return to_py(*c.sub_index);
                               })
        .def("__repr__", [](const Convergent& c) {
            return "Convergent(n=" + std::to_string(c.n) + ", " + c.p.get_str() + "/" +
                   c.q.get_str() + ")";
        });

    py::class_<Mat2>(m, "Mat2")
        .def_property_readonly("entries",
                               [](const Mat2& mt) {
                                   return py::make_tuple(to_py(mt.m11), to_py(mt.m12),
                                                         to_py(mt.m21), to_py(mt.m22));
                               })
        .def("det", [](const Mat2& mt) { return to_py(mt.det()); });

    py::class_<QuadraticSurd>(m, "QuadraticSurd")
        .def_static("make",
                    [](const py::object& p, const py::object& d, const py::object& q) {
                        return QuadraticSurd::make(to_int(p), to_int(d), to_int(q));
                    })
        .def("__str__", &QuadraticSurd::to_string);

    py::class_<AlphaSource>(m, "AlphaSource")
        .def_static("from_rational",
                    [](const py::object& num, const py::object& den) {
                        return AlphaSource::from_rational(to_int(num), to_int(den));
                    })
        .def_static("from_surd", &AlphaSource::from_surd)
        .def_static("from_cf", &AlphaSource::from_cf)
        .def_property_readonly("cf", &AlphaSource::cf)
        .def_property_readonly("is_exact_rational", &AlphaSource::is_exact_rational)
        .def_property_readonly("rational_value",
                               [](const AlphaSource& s) { return to_fraction(s.rational_value()); })
        .def("__repr__", [](const AlphaSource& s) { return "AlphaSource(" + s.describe() + ")"; });

    py::class_<Surrogate>(m, "Surrogate")
        .def_readonly("approx", &Surrogate::approx)
        .def_readonly("is_exact", &Surrogate::is_exact);

    py::class_<GapReport>(m, "GapReport")
        .def_readonly("n_points", &GapReport::n_points)
        .def_readonly("surrogate", &GapReport::surrogate)
        .def_property_readonly("gaps",
                               [](const GapReport& r) {
                                   py::list out;
                                   for (const Rational& g : r.gaps) out.append(to_fraction(g));
                                   return out;
                               })
        .def_readonly("multiplicities", &GapReport::multiplicities)
        .def_property_readonly("distinct_count",
                               [](const GapReport& r) { return r.gaps.size(); });

    py::class_<UPermutation>(m, "UPermutation")
        .def_readonly("n_points", &UPermutation::n_points)
        .def_readonly("u", &UPermutation::u);

    py::class_<TwoGapPrediction>(m, "TwoGapPrediction")
        .def_readonly("n_points", &TwoGapPrediction::n_points)
        .def_property_readonly("scenario",
                               [](const TwoGapPrediction& p) {
                                   return std::string(scenario_name(p.scenario));
                               })
        .def_readonly("n", &TwoGapPrediction::n)
        .def_property_readonly("i",
                               [](const TwoGapPrediction& p) -> py::object {
                                   if (!p.i) return py::none();
                                   return to_py(*p.i);
                               })
        .def_property_readonly("u2", [](const TwoGapPrediction& p) { return to_py(p.u2); })
        .def_property_readonly("uN", [](const TwoGapPrediction& p) { return to_py(p.un); })
        .def_readonly("is_two_gap", &TwoGapPrediction::is_two_gap);

    py::class_<FrequencyRow>(m, "FrequencyRow")
        .def_readonly("n_points", &FrequencyRow::n_points)
        .def_readonly("count", &FrequencyRow::count)
        .def_property_readonly("ratio", [](const FrequencyRow& r) { return to_fraction(r.ratio); })
        .def_property_readonly("upper_bound",
                               [](const FrequencyRow& r) { return to_fraction(r.upper_bound); });

    py::class_<SampleBatch>(m, "SampleBatch")
        .def_readonly("samples", &SampleBatch::samples)
        .def_readonly("redraws", &SampleBatch::redraws);

    py::class_<MetricReport>(m, "MetricReport")
        .def_readonly("used", &MetricReport::used)
        .def_readonly("skipped", &MetricReport::skipped)
        .def_readonly("mean", &MetricReport::mean)
        .def_readonly("stddev", &MetricReport::stddev)
        .def_readonly("values", &MetricReport::values);

    m.def("parse_alpha", &parse_alpha, py::arg("text"));
    m.def(
        "cf_from_rational",
        [](const py::object& num, const py::object& den) {
            return cf_from_rational(to_int(num), to_int(den));
        },
        py::arg("num"), py::arg("den"));
    m.def(
        "expand_surd",
        [](const py::object& p, const py::object& d, const py::object& q) {
            return expand_surd(QuadraticSurd::make(to_int(p), to_int(d), to_int(q)));
        },
        py::arg("p"), py::arg("d"), py::arg("q"));
    m.def(
        "convergents",
        [](const py::object& alpha, long up_to) { return convergents(to_cf(alpha), up_to); },
        py::arg("alpha"), py::arg("up_to"));
    m.def(
        "semiconvergent",
        [](const py::object& alpha, long n, const py::object& i) {
            return semiconvergent(to_cf(alpha), n, to_int(i));
        },
        py::arg("alpha"), py::arg("n"), py::arg("i"));
    m.def(
        "matrix_form",
        [](const py::object& alpha, long n) { return matrix_form(to_cf(alpha), n); },
        py::arg("alpha"), py::arg("n"));
    m.def(
        "q_closed_form",
        [](const py::object& alpha, long n) { return to_py(q_closed_form(to_cf(alpha), n)); },
        py::arg("alpha"), py::arg("n"));
    m.def(
        "digit_sum_over_q",
        [](const py::object& alpha, long n) {
            return to_fraction(digit_sum_over_q(to_cf(alpha), n));
        },
        py::arg("alpha"), py::arg("n"));
    m.def(
        "surrogate_convergent",
        [](const py::object& alpha, long long n_points, int index_bump) {
            return surrogate_convergent(to_source(alpha), n_points, index_bump);
        },
        py::arg("alpha"), py::arg("n_points"), py::arg("index_bump") = 0);
    m.def(
        "gap_report",
        [](const py::object& alpha, long long n_points, int index_bump) {
            return gap_report(to_source(alpha), n_points, index_bump);
        },
        py::arg("alpha"), py::arg("n_points"), py::arg("index_bump") = 0);
    m.def(
        "u_permutation",
        [](const py::object& alpha, long long n_points, int index_bump) {
            return u_permutation(to_source(alpha), n_points, index_bump);
        },
        py::arg("alpha"), py::arg("n_points"), py::arg("index_bump") = 0);
    m.def(
        "predict_uvals",
        [](const py::object& alpha, long long n_points) {
            return predict_uvals(to_cf(alpha), n_points);
        },
        py::arg("alpha"), py::arg("n_points"));
    m.def(
        "two_gap_set_up_to",
        [](const py::object& alpha, long long n_max) {
            return two_gap_set_up_to(to_cf(alpha), n_max);
        },
        py::arg("alpha"), py::arg("n_max"));
    m.def(
        "frequency_trace",
        [](const py::object& alpha, const std::vector<long long>& checkpoints) {
            return frequency_trace(to_cf(alpha), checkpoints);
        },
        py::arg("alpha"), py::arg("checkpoints"));
    m.def(
        "frequency_upper_bound",
        [](const py::object& alpha, long long n_points) {
            return to_fraction(frequency_upper_bound(to_cf(alpha), n_points));
        },
        py::arg("alpha"), py::arg("n_points"));
    m.def(
        "sample_alpha",
        [](std::uint64_t seed, std::size_t count, unsigned precision_bits, unsigned max_index) {
            return sample_alpha(SampleSpec{seed, count, precision_bits, max_index});
        },
        py::arg("seed"), py::arg("count"), py::arg("precision_bits") = 128,
        py::arg("max_index") = 25);
    m.def("levy_statistic", [](const py::object& alpha, long n) {
        return levy_statistic(to_cf(alpha), n);
    }, py::arg("alpha"), py::arg("n"));
    m.def("levy_reference", &levy_reference);
    m.def("large_digit_census", &large_digit_census, py::arg("samples"), py::arg("n_lo"),
          py::arg("n_hi"));
    m.def("digit_sum_report", &digit_sum_report, py::arg("samples"), py::arg("n"));
    m.def(
        "first_digit_fraction",
        [](const std::vector<CFExpansion>& samples, const py::object& k) {
            return first_digit_fraction(samples, to_int(k));
        },
        py::arg("samples"), py::arg("k"));
}
