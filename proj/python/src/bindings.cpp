// Thin pybind11 layer: the heavy lifting stays in the C++ library, values
// cross the boundary as JSON strings or decimal strings so arbitrary
// precision survives the trip.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "galrep/report.hpp"

namespace py = pybind11;
using namespace galrep;

namespace {

PipelineOptions options_from_kwargs(unsigned long witness_bound,
                                    unsigned long counting_bound,
                                    long xns11_bound, const std::string& mode,
                                    bool ladic) {
    PipelineOptions opts;
    opts.certify.witness_bound = witness_bound;
    opts.certify.xns11_bound = xns11_bound;
    opts.certify.counting.counting_bound = counting_bound;
    opts.sieve.counting.counting_bound = counting_bound;
    opts.ladic = ladic;
    if (mode == "sieve") opts.mode = PipelineOptions::ModeSelect::force_sieve;
    else if (mode == "shortcut")
        opts.mode = PipelineOptions::ModeSelect::force_shortcut;
    else if (mode != "auto")
        throw std::invalid_argument("mode must be auto, sieve or shortcut");
    return opts;
}

std::string report_line(const std::string& line, unsigned long witness_bound,
                        unsigned long counting_bound, long xns11_bound,
                        const std::string& mode, bool ladic) {
    CurveInput c = parse_curve_line(line, 1);
    PipelineOptions opts = options_from_kwargs(witness_bound, counting_bound,
                                               xns11_bound, mode, ladic);
    return report_to_json(process_curve(c, opts));
}

std::vector<std::string> report_batch(const std::string& text,
                                      unsigned long witness_bound,
                                      unsigned long counting_bound,
                                      long xns11_bound,
                                      const std::string& mode, bool ladic,
                                      unsigned jobs) {
    std::istringstream in(text);
    auto lines = parse_curves_lenient(in);
    PipelineOptions opts = options_from_kwargs(witness_bound, counting_bound,
                                               xns11_bound, mode, ladic);
    opts.jobs = jobs;
    std::vector<std::string> out;
    for (const auto& oc : process_lines(lines, opts))
        out.push_back(report_to_json(oc));
    return out;
}

WeierstrassModel model_from_list(const std::vector<std::string>& a) {
    if (a.size() != 5)
        throw std::invalid_argument("need exactly 5 a-invariants");
    std::array<Integer, 5> ai;
    for (int i = 0; i < 5; ++i) ai[i] = Integer(a[i]);
    return WeierstrassModel::from_ai(ai);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exceptional primes of mod-ell Galois representations of "
              "elliptic curves over Q";

    m.def("report", &report_line, py::arg("line"),
          py::arg("witness_bound") = 10000,
          py::arg("counting_bound") = 1000000, py::arg("xns11_bound") = 30,
          py::arg("mode") = "auto", py::arg("ladic") = false,
          "full JSON report for one input record");

    m.def("report_batch", &report_batch, py::arg("text"),
          py::arg("witness_bound") = 10000,
          py::arg("counting_bound") = 1000000, py::arg("xns11_bound") = 30,
          py::arg("mode") = "auto", py::arg("ladic") = false,
          py::arg("jobs") = 1, "JSON reports for a whole input file");

    m.def("conductor",
          [](const std::vector<std::string>& a) {
              return to_string(conductor(model_from_list(a)).n);
          },
          py::arg("a_invariants"));

    m.def("ap",
          [](const std::vector<std::string>& a, long p) {
              return ap_good(model_from_list(a), p);
          },
          py::arg("a_invariants"), py::arg("p"));

    m.def("kodaira_symbol",
          [](const std::vector<std::string>& a, long p) {
              return tate_local_data(model_from_list(a), p).kodaira.to_string();
          },
          py::arg("a_invariants"), py::arg("p"));

    m.def("qlist",
          [](const std::string& j) {
              std::vector<std::string> out;
              for (const auto& q : compute_qlist(rational_from_string(j)))
                  out.push_back(to_string(q));
              return out;
          },
          py::arg("j"));

    m.def("is_cm_j",
          [](const std::string& j) { return is_cm_j(rational_from_string(j)); },
          py::arg("j"));

    m.def("conductor_bound",
          [](const std::string& n) {
              return to_string(conductor_bound_for_n(Integer(n)));
          },
          py::arg("n"));

    m.def("sturm_prime_bound",
          [](const std::string& n) {
              return to_string(sturm_prime_bound(Integer(n)));
          },
          py::arg("n"));

    m.def("xns11_j",
          [](long n) -> py::object {
              if (n == 0) throw std::invalid_argument("n must be non-zero");
              auto g = xns11_generator();
              auto p = Xns11Point::O();
              for (long i = 0; i < std::labs(n); ++i) p = xns11_add(p, g);
              if (n < 0) p = xns11_negate(p);
              auto v = xns11_J(p);
              if (!v) return py::none();
              return py::str(to_string(*v));
          },
          py::arg("n"), "J at the n-th multiple of the generator (4, 5)");

    py::register_exception<cm_curve_error>(m, "CMCurveError");
    py::register_exception<budget_error>(m, "ResourceLimitError");
}
