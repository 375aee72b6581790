#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <tuple>

#include "c34/curve.hpp"
#include "c34/divisor.hpp"
#include "c34/error.hpp"
#include "c34/io.hpp"
#include "c34/jacobian.hpp"
#include "c34/random.hpp"
#include "c34/reduction.hpp"

namespace py = pybind11;
using namespace c34;

namespace {

using Coeffs = std::array<std::uint64_t, 6>;
using Six = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t,
                       std::uint64_t>;
using Counted = std::tuple<Six, std::uint64_t, std::uint64_t>;

Six to_tuple(const DivisorRep& D) { return {D.a.v, D.b.v, D.c.v, D.d.v, D.e.v, D.f.v}; }

DivisorRep from_tuple(const Curve& curve, const Coeffs& v) {
  for (std::uint64_t x : v)
    if (x >= curve.modulus()) throw Error(Errc::InvalidInput, "coefficient is not a residue mod p");
  const DivisorRep D = make_divisor(curve.scratch(), Element{v[0]}, Element{v[1]}, Element{v[2]},
                                    Element{v[3]}, Element{v[4]}, Element{v[5]});
  if (!lies_on_curve(curve, D)) throw Error(Errc::InvalidInput, "divisor does not lie on the curve");
  return D;
}

template <class Fn>
Counted run(const Curve& curve, Fn&& fn) {
  FieldCtx k = curve.scratch();
  const DivisorRep out = fn(k);
  return {to_tuple(out), k.counter().muls, k.counter().invs};
}

}  // namespace

PYBIND11_MODULE(_c34, m) {
  m.doc() = "Group law on Jacobians of C34 curves over prime fields";

  static py::exception<Error> error(m, "C34Error");
  static py::exception<AtypicalError> atypical(m, "AtypicalError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const AtypicalError& e) {
      py::set_error(atypical, e.what());
    } catch (const Error& e) {
      py::set_error(error, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("is_prime", &is_prime, py::arg("n"));

  py::class_<Curve>(m, "Curve")
      .def(py::init([](std::uint64_t p, const Coeffs& k) {
             return Curve(FieldCtx(p), CurveCoeffs{Element{k[0]}, Element{k[1]}, Element{k[2]},
                                                   Element{k[3]}, Element{k[4]}, Element{k[5]}});
           }),
           py::arg("p"), py::arg("coeffs"), "coeffs = (p2, p1, p0, q2, q1, q0)")
      .def_static("random", [](std::uint64_t p, std::uint64_t seed) {
            Rng rng(seed);
            return random_curve(FieldCtx(p), rng);
          }, py::arg("p"), py::arg("seed") = 1)
      .def_static("parse", [](const std::string& text) { return parse_curve(text); })
      .def("__str__", &format_curve)
      .def_property_readonly("p", &Curve::modulus)
      .def_property_readonly("coeffs", [](const Curve& c) {
        const CurveCoeffs& k = c.coeffs();
        return Six{k.p2.v, k.p1.v, k.p0.v, k.q2.v, k.q1.v, k.q0.v};
      })
      .def("contains", [](const Curve& c, std::uint64_t x, std::uint64_t y) {
        return eval_f(c, Element{x % c.modulus()}, Element{y % c.modulus()}).v == 0;
      })
      .def("random_divisor", [](const Curve& c, std::uint64_t seed) {
        Rng rng(seed);
        return to_tuple(random_typical(c, rng));
      }, py::arg("seed"))
      .def("from_points", [](const Curve& c, const std::array<std::pair<std::uint64_t, std::uint64_t>, 3>& pts) {
        std::array<AffinePoint, 3> q;
        for (int i = 0; i < 3; ++i) q[i] = {Element{pts[i].first}, Element{pts[i].second}};
        return to_tuple(from_points(c, q[0], q[1], q[2]));
      })
      .def("add", [](const Curve& c, const Coeffs& d1, const Coeffs& d2) {
        return run(c, [&](FieldCtx& k) { return add(k, c, from_tuple(c, d1), from_tuple(c, d2)); });
      }, "D1 + D2 as (divisor, muls, invs)")
      .def("double", [](const Curve& c, const Coeffs& d) {
        return run(c, [&](FieldCtx& k) { return double_class(k, c, from_tuple(c, d)); });
      }, "2D as (divisor, muls, invs)")
      .def("addflip", [](const Curve& c, const Coeffs& d1, const Coeffs& d2) {
        return run(c, [&](FieldCtx& k) { return addflip(k, c, from_tuple(c, d1), from_tuple(c, d2)); });
      }, "-(D1 + D2) as (divisor, muls, invs)")
      .def("negate", [](const Curve& c, const Coeffs& d) {
        return run(c, [&](FieldCtx& k) { return negate(k, c, from_tuple(c, d)); });
      }, "-D as (divisor, muls, invs)")
      .def("scalar_mul", [](const Curve& c, std::int64_t n, const Coeffs& d) {
        return run(c, [&](FieldCtx& k) { return scalar_mul(k, c, n, from_tuple(c, d)); });
      }, py::arg("m"), py::arg("d"), "m D as (divisor, muls, invs)");
}
