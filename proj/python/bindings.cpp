#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclocoef/arith.hpp"
#include "cyclocoef/asympt.hpp"
#include "cyclocoef/cyclotomic.hpp"
#include "cyclocoef/errors.hpp"
#include "cyclocoef/hmax.hpp"

namespace py = pybind11;
using namespace cyclocoef;

namespace {

// Exact integers cross the boundary as Python ints via their decimal form.
py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list to_py(std::span<const Integer> values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::dict h_dict(const HResult& res) {
  py::dict d;
  d["r"] = res.r;
  d["n"] = res.n;
  d["value"] = to_py(res.value);
  d["witness"] = res.witness;
  d["method"] = std::string(to_string(res.method));
  return d;
}

SummandKind summand_kind(const std::string& kind) {
  if (kind == "h") return SummandKind::h;
  if (kind == "nu") return SummandKind::two_pow_r_nu;
  throw std::invalid_argument("kind must be 'h' or 'nu', got '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact maximal coefficients of divisors of x^n - 1";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  m.def("factorize", [](std::uint64_t n) {
    const auto f = factorize(n);
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (const auto& pp : f.factors()) out.emplace_back(pp.prime, pp.exponent);
    return out;
  }, py::arg("n"), "Prime factorization as ascending (prime, exponent) pairs.");
  m.def("divisors", [](std::uint64_t n) { return divisors(factorize(n)); }, py::arg("n"));
  m.def("mobius", py::overload_cast<std::uint64_t>(&mobius), py::arg("n"));

  m.def("cyclotomic", [](std::uint64_t m_, std::optional<unsigned> order) -> py::list {
    if (!order) {
      py::list out;
      for (auto c : cyclotomic_full(m_)) out.append(c);
      return out;
    }
    const auto t = cyclotomic_truncated(m_, *order);
    return to_py(t.series.coeffs());
  }, py::arg("m"), py::arg("order") = py::none(),
        "Coefficients of Phi_m, or of delta(m) Phi_m mod x^(order+1) when order is given.");

  m.def("h", [](unsigned r, std::uint64_t n, const std::string& method, unsigned max_tau,
                std::size_t max_vectors) {
    HResult res;
    {
      py::gil_scoped_release release;
      if (method == "brute")
        res = h_bruteforce(r, n, BruteforceOptions{max_tau});
      else if (method == "fast")
        res = h_fast(r, n, FastOptions{max_vectors});
      else
        throw std::invalid_argument("method must be 'fast' or 'brute', got '" + method + "'");
    }
    return h_dict(res);
  }, py::arg("r"), py::arg("n"), py::arg("method") = "fast", py::arg("max_tau") = 20,
        py::arg("max_vectors") = FastOptions{}.max_vectors,
        "H(r, n) with a witness divisor subset.");

  m.def("reachable_vectors", [](std::uint64_t n, unsigned order) {
    std::vector<std::vector<int>> out;
    for (auto& v : reachable_vectors(n, order)) out.push_back(std::move(v.k));
    return out;
  }, py::arg("n"), py::arg("order"));

  m.def("mobius_witness", [](unsigned r, std::uint64_t n) {
    const auto w = mobius_witness(r, n);
    return py::make_tuple(w.subset, to_py(w.coefficient));
  }, py::arg("r"), py::arg("n"));
  m.def("coefficient_upper_bound",
        [](unsigned r, std::uint64_t n) { return to_py(coefficient_upper_bound(r, n)); },
        py::arg("r"), py::arg("n"));

  m.def("constant", [](unsigned r, std::uint64_t prime_limit, const std::string& kind) {
    EulerProductEstimate est;
    {
      py::gil_scoped_release release;
      if (kind == "g")
        est = euler_product(r, prime_limit);
      else if (kind == "c")
        est = asymptotic_constant(r, prime_limit);
      else
        throw std::invalid_argument("kind must be 'g' or 'c', got '" + kind + "'");
    }
    py::dict d;
    d["r"] = r;
    d["kind"] = kind;
    d["value"] = est.value.convert_to<double>();
    d["value_digits"] = format_real(est.value, 40);
    d["tail_bound"] = est.tail_bound.convert_to<double>();
    d["prime_limit"] = prime_limit;
    return d;
  }, py::arg("r"), py::arg("prime_limit") = 1'000'000, py::arg("kind") = "g");

  m.def("two_pow_nu_sum", [](unsigned r, std::uint64_t x, unsigned jobs) {
    Integer s;
    {
      py::gil_scoped_release release;
      s = two_pow_nu_sum(r, x, jobs);
    }
    return to_py(s);
  }, py::arg("r"), py::arg("x"), py::arg("jobs") = 1);
  m.def("h_sum", [](unsigned r, std::uint64_t x, unsigned jobs) {
    Integer s;
    {
      py::gil_scoped_release release;
      s = h_sum(r, x, jobs);
    }
    return to_py(s);
  }, py::arg("r"), py::arg("x"), py::arg("jobs") = 1);

  m.def("partial_sums", [](const std::string& kind, unsigned r, std::vector<std::uint64_t> checkpoints,
                           std::uint64_t prime_limit, unsigned jobs) {
    PartialSumReport report;
    {
      py::gil_scoped_release release;
      report = partial_sum_report(summand_kind(kind), r, checkpoints,
                                  ReportOptions{prime_limit, jobs, {}});
    }
    py::list rows;
    for (const auto& row : report.rows) {
      py::dict d;
      d["x"] = row.x;
      d["sum"] = to_py(row.sum);
      d["leading"] = row.leading.convert_to<double>();
      d["ratio"] = row.ratio.convert_to<double>();
      rows.append(d);
    }
    return rows;
  }, py::arg("kind"), py::arg("r"), py::arg("checkpoints"), py::arg("prime_limit") = 1'000'000,
        py::arg("jobs") = 1, "Rows of (x, sum, leading term, ratio) at each checkpoint.");
}
