/* Python bindings for the knotcomm core.

   Exactness survives the language boundary: arbitrary precision integers
   cross as python ints, exact rational turns cross as ints or
   fractions.Fraction values, and certified enclosures cross as CertifiedReal
   objects rather than bare floats.  Floats are only produced on request
   (midpoint, radius, float()). */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotcomm/catalog.hpp"
#include "knotcomm/covers.hpp"
#include "knotcomm/errors.hpp"
#include "knotcomm/interval.hpp"
#include "knotcomm/knot.hpp"
#include "knotcomm/obstructions.hpp"
#include "knotcomm/poly.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace knotcomm;

namespace {

Int to_int(const py::handle& obj) {
  if (!py::isinstance<py::int_>(obj)) {
    throw py::type_error("expected an int, got " +
                         std::string(py::str(py::type::of(obj))));
  }
  return Int(py::str(obj).cast<std::string>(), 10);
}

py::int_ from_int(const Int& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object from_rat(const Rat& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(from_int(r.get_num()), from_int(r.get_den()));
}

/* Accepts any exact rational: python int, fractions.Fraction, or anything
   else exposing integer numerator/denominator attributes.  Floats are
   rejected on purpose; an inexact turn has no well-defined signature. */
Rat to_rat(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj) || !py::hasattr(obj, "numerator") ||
      !py::hasattr(obj, "denominator")) {
    throw py::type_error("expected an exact rational (int or fractions.Fraction)");
  }
  Rat r(to_int(obj.attr("numerator")), to_int(obj.attr("denominator")));
  r.canonicalize();
  return r;
}

IntPoly to_poly(const py::sequence& coeffs) {
  std::vector<Int> c;
  for (py::handle x : coeffs) c.push_back(to_int(x));
  return IntPoly(std::move(c));
}

IntMatrix to_matrix(const py::sequence& rows) {
  IntMatrix m;
  for (py::handle row : rows) {
    m.emplace_back();
    for (py::handle x : py::cast<py::sequence>(row)) m.back().push_back(to_int(x));
  }
  return m;
}

std::vector<DeclaredJump> to_jumps(const py::sequence& jumps) {
  std::vector<DeclaredJump> out;
  for (py::handle j : jumps) {
    auto pair = py::cast<py::sequence>(j);
    out.push_back(parse_jump(py::cast<std::string>(pair[0]), py::cast<int>(pair[1])));
  }
  return out;
}

KnotRecord finish_record(KnotData d, std::optional<int> signature,
                         const std::optional<py::sequence>& jumps, bool mirror,
                         std::optional<int> genus, std::optional<bool> fibered,
                         std::string comment, double radius) {
  d.signature = signature;
  if (jumps) d.jumps = to_jumps(*jumps);
  d.mirror = mirror;
  d.genus = genus;
  d.fibered = fibered;
  d.comment = std::move(comment);
  CertifyOptions opts;
  opts.target_radius = radius;
  return KnotRecord(std::move(d), opts);
}

CompareOptions make_options(Orientation orientation, double pass_width) {
  CompareOptions o;
  o.orientation = orientation;
  o.pass_width = pass_width;
  return o;
}

}  // namespace

PYBIND11_MODULE(_knotcomm, m) {
  m.doc() = "Certified commensurability invariants of knots";
  m.attr("__version__") = "0.1.0";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ZeroPolynomial>(m, "ZeroPolynomial", base);
  py::register_exception<NotReciprocal>(m, "NotReciprocal", base);
  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", base);
  py::register_exception<InvalidSeifert>(m, "InvalidSeifert", base);
  py::register_exception<SingularAtRootOfUnity>(m, "SingularAtRootOfUnity", base);
  py::register_exception<SingularAtZ>(m, "SingularAtZ", base);
  py::register_exception<InsufficientData>(m, "InsufficientData", base);
  py::register_exception<NotAdmissible>(m, "NotAdmissible", base);
  py::register_exception<B1Violation>(m, "B1Violation", base);
  py::register_exception<CatalogError>(m, "CatalogError", base);
  py::register_exception<UnknownKnot>(m, "UnknownKnot", base);

  py::enum_<Verdict>(m, "Verdict",
                     "Three-valued outcome of an obstruction test.  FAIL is a "
                     "certified violation, PASS is agreement within tight "
                     "enclosures, INCONCLUSIVE is everything else.")
      .value("PASS", Verdict::pass)
      .value("FAIL", Verdict::fail)
      .value("INCONCLUSIVE", Verdict::inconclusive);

  py::enum_<Orientation>(m, "Orientation",
                         "Whether a common cover matches or reverses the "
                         "orientations of the two knot complements.")
      .value("PRESERVING", Orientation::preserving)
      .value("REVERSING", Orientation::reversing)
      .value("BOTH", Orientation::both);

  py::class_<CertifiedReal>(m, "CertifiedReal",
                            "An interval certified to contain the exact value.")
      .def_property_readonly("midpoint", &CertifiedReal::midpoint)
      .def_property_readonly("radius", &CertifiedReal::radius)
      .def("contains_zero", &CertifiedReal::contains_zero)
      .def("sign", &CertifiedReal::sign,
           "Certified sign, or None when the interval straddles zero.")
      .def("__float__", &CertifiedReal::midpoint)
      .def("__add__",
           [](const CertifiedReal& a, const CertifiedReal& b) { return a + b; })
      .def("__sub__",
           [](const CertifiedReal& a, const CertifiedReal& b) { return a - b; })
      .def("__mul__",
           [](const CertifiedReal& a, const CertifiedReal& b) { return a * b; })
      .def("__rmul__",
           [](const CertifiedReal& a, const py::handle& c) { return to_rat(c) * a; })
      .def("__repr__", [](const CertifiedReal& x) { return x.str(); });

  py::class_<IntPoly>(m, "IntPoly",
                      "Integer polynomial, constant coefficient first.")
      .def(py::init([](const py::sequence& coeffs) { return to_poly(coeffs); }),
           "coeffs"_a)
      .def_property_readonly("degree", [](const IntPoly& p) { return p.degree(); })
      .def_property_readonly("coeffs",
                             [](const IntPoly& p) {
                               py::list out;
                               for (const Int& c : p.coeffs()) out.append(from_int(c));
                               return out;
                             })
      .def("__call__",
           [](const IntPoly& p, const py::handle& x) { return from_int(p.eval(to_int(x))); })
      .def("__eq__", [](const IntPoly& a, const IntPoly& b) { return a == b; })
      .def("__str__", [](const IntPoly& p) { return p.str(); })
      .def("__repr__", [](const IntPoly& p) { return "IntPoly(" + p.str() + ")"; });

  py::class_<SignatureJump>(m, "SignatureJump",
                            "One conjugate pair of signature jumps at "
                            "e^(2 pi i turn), turn in (0, 1/2).")
      .def_readonly("turn", &SignatureJump::turn)
      .def_property_readonly("exact_turn",
                             [](const SignatureJump& j) -> py::object {
                               if (!j.exact_turn) return py::none();
                               return from_rat(*j.exact_turn);
                             },
                             "The turn as a Fraction when it is rational, else None.")
      .def_readonly("multiplicity", &SignatureJump::multiplicity)
      .def_readonly("value_after", &SignatureJump::value_after)
      .def("__repr__", [](const SignatureJump& j) {
        return "SignatureJump(turn=" + j.turn.str() + ", value_after=" +
               std::to_string(j.value_after) + ")";
      });

  py::class_<KnotRecord>(m, "KnotRecord",
                         "A validated knot with its certified invariants.")
      .def_property_readonly("name", &KnotRecord::name)
      .def_property_readonly("mirror", &KnotRecord::mirror)
      .def_property_readonly("comment", &KnotRecord::comment)
      .def_property_readonly("genus", &KnotRecord::genus)
      .def_property_readonly("fibered", &KnotRecord::fibered)
      .def_property_readonly("alexander", &KnotRecord::alexander,
                             py::return_value_policy::copy)
      .def_property_readonly("admissible", &KnotRecord::admissible)
      .def_property_readonly("cyclotomic_divisors", &KnotRecord::cyclotomic_divisors,
                             py::return_value_policy::copy)
      .def_property_readonly("has_profile", &KnotRecord::has_profile)
      .def_property_readonly("jumps",
                             [](const KnotRecord& k) { return k.profile().jumps; },
                             "The signature jump pairs in (0, 1/2), in order.")
      .def("signature", &KnotRecord::signature)
      .def("signature_at",
           [](const KnotRecord& k, const py::handle& turn) {
             return k.signature_at(to_rat(turn));
           },
           "turn"_a, "Signature at e^(2 pi i turn) for an exact rational turn.")
      .def("signature_sum", &KnotRecord::signature_sum, "n"_a,
           "Sum of the signatures over all n-th roots of unity.")
      .def("rho", &KnotRecord::rho,
           "Integral of the signature function over the circle, measure 1.")
      .def("tau", &KnotRecord::tau,
           "Logarithmic Mahler measure of the Alexander polynomial.")
      .def("mirrored", &KnotRecord::mirrored)
      .def("__repr__",
           [](const KnotRecord& k) { return "<KnotRecord " + k.name() + ">"; });

  m.def("knot_from_seifert",
        [](std::string name, const py::sequence& matrix, std::optional<int> signature,
           const std::optional<py::sequence>& jumps, bool mirror,
           std::optional<int> genus, std::optional<bool> fibered, std::string comment,
           double radius) {
          KnotData d;
          d.name = std::move(name);
          d.seifert = to_matrix(matrix);
          return finish_record(std::move(d), signature, jumps, mirror, genus, fibered,
                               std::move(comment), radius);
        },
        "name"_a, "matrix"_a, py::kw_only(), "signature"_a = py::none(),
        "jumps"_a = py::none(), "mirror"_a = false, "genus"_a = py::none(),
        "fibered"_a = py::none(), "comment"_a = "", "radius"_a = 1e-12,
        "Builds a knot record from a Seifert matrix.  jumps is a list of "
        "(turn, value) pairs with the turn spelled as 'p/q' or a decimal.");

  m.def("knot_from_alexander",
        [](std::string name, const py::sequence& coeffs, std::optional<int> signature,
           const std::optional<py::sequence>& jumps, bool mirror,
           std::optional<int> genus, std::optional<bool> fibered, std::string comment,
           double radius) {
          KnotData d;
          d.name = std::move(name);
          d.alexander = to_poly(coeffs);
          return finish_record(std::move(d), signature, jumps, mirror, genus, fibered,
                               std::move(comment), radius);
        },
        "name"_a, "coeffs"_a, py::kw_only(), "signature"_a = py::none(),
        "jumps"_a = py::none(), "mirror"_a = false, "genus"_a = py::none(),
        "fibered"_a = py::none(), "comment"_a = "", "radius"_a = 1e-12,
        "Builds a knot record from Alexander coefficients, constant term first.");

  py::class_<Catalog>(m, "Catalog", "A named collection of knot descriptions.")
      .def_static("builtin", &Catalog::builtin)
      .def_static("parse", &Catalog::parse, "text"_a, "origin"_a = "<string>")
      .def_static("load", &Catalog::load, "path"_a)
      .def_static("resolve", &Catalog::resolve, "path"_a = py::none(),
                  "Explicit path, else $KNOTCOMM_CATALOG, else the builtin set.")
      .def("names", &Catalog::names)
      .def("record",
           [](const Catalog& c, const std::string& name, double radius) {
             CertifyOptions opts;
             opts.target_radius = radius;
             return c.record(name, opts);
           },
           "name"_a, "radius"_a = 1e-12)
      .def("to_json", &Catalog::to_json)
      .def("save", &Catalog::save, "path"_a)
      .def("__len__", [](const Catalog& c) { return c.knots().size(); })
      .def("__contains__",
           [](const Catalog& c, const std::string& n) { return c.find(n) != nullptr; });

  m.def("torsion_order",
        [](const KnotRecord& k, unsigned long n) { return from_int(torsion_order(k, n)); },
        "knot"_a, "n"_a,
        "Order of the homology torsion of the n-th cyclic branched cover; "
        "0 means the homology is infinite.");
  m.def("b1_of_cover",
        [](const KnotRecord& k, unsigned long n) { return b1_of_cover(k, n); },
        "knot"_a, "n"_a, "First Betti number of the n-th cyclic cover of the complement.");
  m.def("growth_sequence",
        [](const KnotRecord& k, unsigned long n_max) {
          py::list out;
          for (const GrowthTerm& g : growth_sequence(k, n_max)) {
            out.append(py::make_tuple(g.n, g.value));
          }
          return out;
        },
        "knot"_a, "n_max"_a = 2000,
        "Pairs (n, (1/n) ln T_n); the values converge to tau.");

  py::class_<TestEntry>(m, "TestEntry")
      .def_readonly("name", &TestEntry::name)
      .def_readonly("verdict", &TestEntry::verdict)
      .def_readonly("detail", &TestEntry::detail)
      .def("__repr__", [](const TestEntry& e) {
        return "TestEntry(" + e.name + ": " + verdict_name(e.verdict) + ")";
      });

  py::class_<ObstructionReport>(m, "ObstructionReport")
      .def_readonly("subject", &ObstructionReport::subject)
      .def_readonly("entries", &ObstructionReport::entries)
      .def_readonly("overall", &ObstructionReport::overall)
      .def("find",
           [](const ObstructionReport& r, const std::string& name)
               -> std::optional<TestEntry> {
             const TestEntry* e = r.find(name);
             if (!e) return std::nullopt;
             return *e;
           },
           "name"_a)
      .def("__repr__", [](const ObstructionReport& r) {
        return "<ObstructionReport " + r.subject + ": " + verdict_name(r.overall) + ">";
      });

  m.def("static_compare", &static_compare, "a"_a, "b"_a,
        "Invariants commensurable knots must share outright.");
  m.def("cover_pair_test",
        [](const KnotRecord& a, unsigned long n1, const KnotRecord& b, unsigned long n2,
           Orientation orientation, double pass_width) {
          return cover_pair_test(a, n1, b, n2, make_options(orientation, pass_width));
        },
        "a"_a, "n1"_a, "b"_a, "n2"_a, py::kw_only(),
        "orientation"_a = Orientation::both, "pass_width"_a = 1e-4,
        "Tests whether the covers of index n1 over a and n2 over b could "
        "be the same manifold.");
  m.def("multiset_power_test", &multiset_power_test, "a"_a, "n1"_a, "b"_a, "n2"_a,
        "Exact comparison of the multisets of powered Alexander roots.");

  py::class_<RatioCandidate>(m, "RatioCandidate")
      .def_readonly("p", &RatioCandidate::p)
      .def_readonly("q", &RatioCandidate::q)
      .def_readonly("midpoint", &RatioCandidate::midpoint)
      .def("__repr__", [](const RatioCandidate& r) {
        return "RatioCandidate(" + std::to_string(r.p) + ":" + std::to_string(r.q) + ")";
      });

  m.def("ratio_scan", &ratio_scan, "a"_a, "b"_a, "n_max"_a = 24,
        "Coprime cover ratios not excluded by the tau condition.");

  py::class_<OrientationScan>(m, "OrientationScan")
      .def_readonly("p", &OrientationScan::p)
      .def_readonly("q", &OrientationScan::q)
      .def_readonly("k_max", &OrientationScan::k_max)
      .def_readonly("confirm_max", &OrientationScan::confirm_max)
      .def_readonly("plus_candidates", &OrientationScan::plus_candidates)
      .def_readonly("minus_candidates", &OrientationScan::minus_candidates)
      .def_readonly("plus_confirmed", &OrientationScan::plus_confirmed)
      .def_readonly("minus_confirmed", &OrientationScan::minus_confirmed)
      .def("__repr__", [](const OrientationScan& s) {
        return "<OrientationScan " + std::to_string(s.p) + ":" + std::to_string(s.q) +
               ", " + std::to_string(s.plus_candidates.size()) + " preserving, " +
               std::to_string(s.minus_candidates.size()) + " reversing candidate(s)>";
      });

  m.def("orientation_test",
        [](const KnotRecord& a, const KnotRecord& b, unsigned long p, unsigned long q,
           unsigned long k_max, unsigned long confirm_max, Orientation orientation,
           double pass_width) {
          return orientation_test(a, b, p, q, k_max, confirm_max,
                                  make_options(orientation, pass_width));
        },
        "a"_a, "b"_a, "p"_a, "q"_a, py::kw_only(), "k_max"_a = 480,
        "confirm_max"_a = 8, "orientation"_a = Orientation::both,
        "pass_width"_a = 1e-4,
        "Scans the cover ladder (k p, k q), excluding k whose rho combination "
        "certifiably misses the integers and confirming small survivors.");
}
