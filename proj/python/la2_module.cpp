// Python bindings for the la2 core. Integers cross the boundary as
// arbitrary-precision Python ints (through decimal strings), never as
// doubles; Pell data overflows a 53-bit mantissa immediately.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "la2/counting.hpp"
#include "la2/equation.hpp"
#include "la2/oracle.hpp"

namespace py = pybind11;
using namespace la2;

namespace {

Integer to_mpz(const py::int_& value) {
    return Integer(py::str(value).cast<std::string>(), 10);
}

py::int_ to_py(const Integer& value) {
    PyObject* obj = PyLong_FromString(value.get_str().c_str(), nullptr, 10);
    if (obj == nullptr) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(obj);
}

py::object to_py_opt(const std::optional<Integer>& value) {
    if (value) {
        return to_py(*value);
    }
    return py::none();
}

py::tuple point_tuple(const std::pair<Integer, Integer>& p) {
    return py::make_tuple(to_py(p.first), to_py(p.second));
}

py::list point_list(const std::vector<std::pair<Integer, Integer>>& points) {
    py::list out;
    for (const auto& p : points) {
        out.append(point_tuple(p));
    }
    return out;
}

LA2Equation make_equation(const py::int_& a, const py::int_& b,
                          const py::int_& c, const py::int_& d,
                          const py::int_& e, const py::int_& f) {
    return LA2Equation(to_mpz(a), to_mpz(b), to_mpz(c), to_mpz(d), to_mpz(e),
                       to_mpz(f));
}

py::dict classification_dict(const ClassificationReport& report) {
    py::dict out;
    out["la2"] = report.la2;
    py::list failed;
    for (ClassCondition c : report.failed) {
        failed.append(condition_name(c));
    }
    out["failed_conditions"] = failed;
    out["j"] = to_py_opt(report.j);
    py::dict derived;
    derived["D"] = to_py(report.derived.D);
    derived["E"] = to_py(report.derived.E);
    derived["F"] = to_py(report.derived.F);
    derived["N"] = to_py(report.derived.N);
    derived["lambda"] = to_py_opt(report.derived.lambda);
    derived["tau"] = to_py_opt(report.derived.tau);
    derived["E_over_D"] = to_py_opt(report.derived.e_over_d);
    derived["half_d"] = to_py_opt(report.derived.half_d);
    out["derived"] = derived;
    out["coefficient_gcd"] = to_py(report.coefficient_gcd);
    return out;
}

py::dict reduced_dict(const ReducedForm& r) {
    py::dict out;
    out["tau"] = to_py(r.tau);
    out["j"] = to_py(r.j);
    out["lambda"] = to_py(r.lambda);
    out["E_over_D"] = to_py(r.e_over_d);
    out["half_d"] = to_py(r.half_d);
    out["shift_u"] = to_py(r.shift_u);
    out["shift_v"] = to_py(r.shift_v);
    return out;
}

}  // namespace

PYBIND11_MODULE(_la2, m) {
    m.doc() = "exact solver and solution counter for LA2-type quadratic "
              "Diophantine equations";

    py::register_exception<RingMismatchError>(m, "RingMismatchError",
                                              PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ClassificationError>(m, "ClassificationError",
                                                PyExc_ValueError);
    py::register_exception<UnsupportedClassError>(m, "UnsupportedClassError",
                                                  PyExc_ValueError);
    py::register_exception<ThresholdError>(m, "ThresholdError",
                                           PyExc_ValueError);
    py::register_exception<CapExceededError>(m, "CapExceededError",
                                             PyExc_ValueError);

    m.def("classify",
          [](const py::int_& a, const py::int_& b, const py::int_& c,
             const py::int_& d, const py::int_& e, const py::int_& f) {
              return classification_dict(classify(make_equation(a, b, c, d, e, f)));
          },
          "Decide LA2-type membership; returns the verdict, the failed "
          "conditions, and the derived quantities D, E, F, N.");

    m.def("reduce",
          [](const py::int_& a, const py::int_& b, const py::int_& c,
             const py::int_& d, const py::int_& e, const py::int_& f) {
              return reduced_dict(reduce(make_equation(a, b, c, d, e, f)));
          },
          "Rewrite as u~^2 - tau v~^2 = j; returns tau, j and the affine "
          "map constants.");

    m.def("evaluate",
          [](const py::int_& a, const py::int_& b, const py::int_& c,
             const py::int_& d, const py::int_& e, const py::int_& f,
             const py::int_& u, const py::int_& v) {
              return to_py(evaluate(make_equation(a, b, c, d, e, f),
                                    to_mpz(u), to_mpz(v)));
          },
          "Exact value of the quadratic form at (u, v).");

    m.def("make_z1_equation",
          [](const py::int_& lam, const py::int_& tau, const py::int_& p,
             const py::int_& q) {
              const LA2Equation eq = make_z1_equation(to_mpz(lam), to_mpz(tau),
                                                      to_mpz(p), to_mpz(q));
              return py::make_tuple(to_py(eq.a), to_py(eq.b), to_py(eq.c),
                                    to_py(eq.d), to_py(eq.e), to_py(eq.f));
          },
          "Coefficients (a..f) of the Z(1) equation with the given lambda, "
          "tau, E/D = p and d/2 = q.");

    m.def("fundamental_solution",
          [](const py::int_& tau) {
              const PellFundamental fund = fundamental_solution(to_mpz(tau));
              return py::make_tuple(to_py(fund.alpha), to_py(fund.beta));
          },
          "Minimal (alpha, beta) with alpha^2 - tau beta^2 = 1.");

    m.def("pell_sequence",
          [](const py::int_& tau, long m) {
              const auto [u, v] =
                  pell_sequence(fundamental_solution(to_mpz(tau)), m);
              return py::make_tuple(to_py(u), to_py(v));
          },
          "(u_m, v_m) of the Pell solution sequence for the given tau.");

    m.def("thresholds",
          [](const py::int_& a, const py::int_& b, const py::int_& c,
             const py::int_& d, const py::int_& e, const py::int_& f) {
              const ReducedForm r = reduce(make_equation(a, b, c, d, e, f));
              const PellFundamental fund = fundamental_solution(r.tau);
              const Thresholds thr = compute_thresholds(r, fund);
              py::dict out;
              out["N0"] = thr.n0;
              py::list nl, mp, branches;
              for (int l = 1; l <= 4; ++l) {
                  nl.append(thr.nl[l - 1]);
                  mp.append(to_py(thr.m_prime[l - 1]));
                  const BranchParameters params = branch_parameters(r, l);
                  py::dict bp;
                  bp["l"] = l;
                  bp["P"] = py::make_tuple(to_py(params.P.rational_part()),
                                           to_py(params.P.surd_part()));
                  bp["Q"] = to_py(params.Q);
                  bp["R"] = params.R;
                  branches.append(bp);
              }
              out["N_l"] = nl;
              out["M_prime"] = mp;
              out["branches"] = branches;
              out["L"] = to_py(thr.big_l);
              return out;
          },
          "N0, per-branch N_l and M'_l, the branch constants P, Q, R, and "
          "the overall threshold L.");

    m.def("count_solutions",
          [](const py::int_& a, const py::int_& b, const py::int_& c,
             const py::int_& d, const py::int_& e, const py::int_& f,
             const py::int_& x) {
              return to_py(count_solutions(make_equation(a, b, c, d, e, f),
                                           to_mpz(x)));
          },
          "Closed-form |D_A(x)| for floor(x) >= L.");

    m.def("enumerate_solutions",
          [](const py::int_& a, const py::int_& b, const py::int_& c,
             const py::int_& d, const py::int_& e, const py::int_& f,
             const py::int_& x) {
              const SolutionSet set = enumerate_solutions(
                  make_equation(a, b, c, d, e, f), to_mpz(x));
              py::dict out;
              out["class0"] = py::make_tuple(point_tuple(set.class0[0]),
                                             point_tuple(set.class0[1]));
              py::list branches;
              for (const auto& branch : set.branches) {
                  py::list points;
                  for (const auto& point : branch) {
                      points.append(py::make_tuple(point.m, to_py(point.u),
                                                   to_py(point.v)));
                  }
                  branches.append(points);
              }
              out["branches"] = branches;
              out["sorted"] = point_list(set.sorted());
              return out;
          },
          "The explicit solution set inside |u| + |v| <= x, per family and "
          "as one sorted list.");

    m.def("brute_force_solutions",
          [](const py::int_& a, const py::int_& b, const py::int_& c,
             const py::int_& d, const py::int_& e, const py::int_& f,
             const py::int_& x, const py::int_& cap) {
              return point_list(
                  brute_force_solutions(make_equation(a, b, c, d, e, f),
                                        to_mpz(x), to_mpz(cap))
                      .solutions);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("e"),
          py::arg("f"), py::arg("x"), py::arg("cap") = py::int_(kDefaultOracleCap),
          "Ground-truth solution list by direct enumeration of the region.");

    m.def("verify",
          [](const py::int_& a, const py::int_& b, const py::int_& c,
             const py::int_& d, const py::int_& e, const py::int_& f,
             const py::int_& x, const py::int_& cap) {
              const VerificationReport report = verify(
                  make_equation(a, b, c, d, e, f), to_mpz(x), to_mpz(cap));
              py::dict out;
              out["x_floor"] = to_py(report.x_floor);
              out["L"] = to_py(report.threshold);
              out["formula_applicable"] = report.formula_applicable;
              out["oracle_count"] = py::int_(report.oracle.count());
              out["formula_count"] = to_py_opt(report.formula_count);
              out["match"] = report.match ? py::cast(*report.match)
                                          : py::object(py::none());
              out["missing"] = point_list(report.missing);
              out["extra"] = point_list(report.extra);
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("e"),
          py::arg("f"), py::arg("x"), py::arg("cap") = py::int_(kDefaultOracleCap),
          "Formula-vs-oracle comparison at one region size.");
}
