// Python bindings for the core operations: shapes, tableaux, crystal
// operators, q-polynomials, sieving checkers, and the sweep engine.
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewsieve/sweep.hpp"

namespace py = pybind11;
using namespace skewsieve;

namespace {

// Exact coefficients cross the boundary as arbitrary-precision Python ints.
py::object to_py_int(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::list dense_coefficients(const QPolynomial& f) {
    py::list out;
    if (f.is_zero()) return out;
    for (long long e = 0; e <= *f.max_exponent(); ++e) out.append(to_py_int(f.coeff(e)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact skew tableau enumeration and cyclic sieving checks";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<TableauError>(m, "TableauError", PyExc_ValueError);
    py::register_exception<GcdError>(m, "GcdError", PyExc_ValueError);

    py::class_<Partition>(m, "Partition")
        .def(py::init<std::vector<int>>(), py::arg("parts"))
        .def_static("parse", &Partition::parse, py::arg("text"))
        .def_property_readonly("parts", &Partition::parts)
        .def("sum", &Partition::sum)
        .def("contains", &Partition::contains)
        .def("__len__", &Partition::length)
        .def("__str__", &Partition::str)
        .def("__repr__", [](const Partition& p) { return "Partition(\"" + p.str() + "\")"; })
        .def(py::self == py::self)
        .def(py::self < py::self);
    m.def("weighted_size", &weighted_size, py::arg("partition"));

    py::class_<SkewShape>(m, "SkewShape")
        .def(py::init<Partition, Partition>(), py::arg("outer"),
             py::arg("inner") = Partition())
        .def_property_readonly("outer", &SkewShape::outer)
        .def_property_readonly("inner", &SkewShape::inner)
        .def_property_readonly("is_straight", &SkewShape::is_straight)
        .def("num_cells", &SkewShape::num_cells)
        .def("num_rows", &SkewShape::num_rows)
        .def("__str__", &SkewShape::str)
        .def("__repr__", [](const SkewShape& s) { return "SkewShape(\"" + s.str() + "\")"; })
        .def(py::self == py::self)
        .def(py::self < py::self);

    py::class_<WeakComposition>(m, "WeakComposition")
        .def(py::init<std::vector<int>>(), py::arg("entries"))
        .def_static("parse", &WeakComposition::parse, py::arg("text"))
        .def_property_readonly("entries", &WeakComposition::entries)
        .def("sum", &WeakComposition::sum)
        .def("__len__", &WeakComposition::length)
        .def("__str__", &WeakComposition::str)
        .def("__repr__",
             [](const WeakComposition& a) { return "WeakComposition(\"" + a.str() + "\")"; })
        .def(py::self == py::self)
        .def(py::self < py::self);
    m.def("cyclic_shift", &cyclic_shift, py::arg("a"), py::arg("r"));
    m.def("all_shifts_distinct", &all_shifts_distinct, py::arg("a"));
    m.def("shifted_residues", &shifted_residues, py::arg("a"));

    py::class_<Tableau>(m, "Tableau")
        .def_static("parse", &Tableau::parse, py::arg("text"), py::arg("alphabet"))
        .def_static("validate", &Tableau::validate, py::arg("shape"), py::arg("filling"),
                    py::arg("alphabet"))
        .def_property_readonly("shape", &Tableau::shape)
        .def_property_readonly("alphabet", &Tableau::alphabet)
        .def_property_readonly("rows", [](const Tableau& t) { return t.rows(); })
        .def("row_major", &Tableau::row_major)
        .def("__str__", &Tableau::str)
        .def("__repr__", [](const Tableau& t) { return "Tableau(\"" + t.str() + "\")"; })
        .def(py::self == py::self)
        .def(py::self < py::self);
    m.def("weight", &weight, py::arg("t"));
    m.def("reading_word", &reading_word, py::arg("t"));
    m.def("enumerate", &enumerate, py::arg("shape"), py::arg("n"));
    m.def("enumerate_content", &enumerate_content, py::arg("shape"), py::arg("content"));
    m.def("kostka", &kostka, py::arg("shape"), py::arg("content"));

    m.def("lower", &skewsieve::lower, py::arg("t"), py::arg("i"));
    m.def("raise_", &skewsieve::raise, py::arg("t"), py::arg("i"));
    m.def("reflect", &reflect, py::arg("t"), py::arg("i"));
    m.def("cyclic_action", &cyclic_action, py::arg("t"));
    py::class_<CyclicOrbit>(m, "CyclicOrbit")
        .def_readonly("representative", &CyclicOrbit::representative)
        .def_readonly("elements", &CyclicOrbit::elements)
        .def("__len__", &CyclicOrbit::size);
    m.def("orbit", &orbit, py::arg("t"), py::arg("safety_bound") = kOrbitSafetyBound);
    m.def("action_order", &action_order, py::arg("shape"), py::arg("n"));
    m.def("bk_involution", &bk_involution, py::arg("t"), py::arg("i"));
    m.def("promotion", &promotion, py::arg("t"));
    m.def("promotion_order", &promotion_order, py::arg("shape"), py::arg("n"));

    py::enum_<StatisticConvention>(m, "StatisticConvention")
        .value("ZeroBased", StatisticConvention::ZeroBased)
        .value("OneBased", StatisticConvention::OneBased);

    py::class_<QPolynomial>(m, "QPolynomial")
        .def(py::init<>())
        .def_static("parse_dense", &QPolynomial::parse_dense, py::arg("text"))
        .def_static("parse_sparse", &QPolynomial::parse_sparse, py::arg("text"))
        .def_static(
            "monomial",
            [](long long e, long long c) { return QPolynomial::monomial(e, c); },
            py::arg("exponent"), py::arg("coefficient"))
        .def("add_term",
             [](QPolynomial& f, long long e, long long c) { f.add_term(e, c); },
             py::arg("exponent"), py::arg("coefficient"))
        .def("coeff",
             [](const QPolynomial& f, long long e) { return to_py_int(f.coeff(e)); },
             py::arg("exponent"))
        .def("dense", &dense_coefficients)
        .def("is_zero", &QPolynomial::is_zero)
        .def("min_exponent", &QPolynomial::min_exponent)
        .def("max_exponent", &QPolynomial::max_exponent)
        .def("at_one", [](const QPolynomial& f) { return to_py_int(f.at_one()); })
        .def("shifted", &QPolynomial::shifted, py::arg("delta"))
        .def(py::self + py::self)
        .def(py::self == py::self)
        .def("__str__", &QPolynomial::str_dense)
        .def("__repr__",
             [](const QPolynomial& f) {
                 return "QPolynomial.parse_sparse(\"" + f.str_sparse() + "\")";
             });
    m.def("q_integer", &q_integer, py::arg("n"));
    m.def("reduce_mod_cyclic", &reduce_mod_cyclic, py::arg("f"), py::arg("n"));
    m.def(
        "multiple_of_q_integer",
        [](const QPolynomial& f, int n) -> py::object {
            auto c = multiple_of_q_integer(f, n);
            return c ? to_py_int(*c) : py::none();
        },
        py::arg("f"), py::arg("n"));
    m.def("statistic", &statistic, py::arg("w"), py::arg("convention"));
    m.def("statistic_gf", &statistic_gf, py::arg("tableaux"), py::arg("convention"));
    m.def("principal_specialization", &principal_specialization, py::arg("shape"),
          py::arg("n"), py::arg("convention"));

    py::enum_<Scope>(m, "Scope")
        .value("FullSet", Scope::FullSet)
        .value("RefinedUnion", Scope::RefinedUnion);
    py::enum_<Verdict>(m, "Verdict")
        .value("Holds", Verdict::Holds)
        .value("Fails", Verdict::Fails);

    py::class_<CongruenceWitness>(m, "CongruenceWitness")
        .def_readonly("power", &CongruenceWitness::power)
        .def_property_readonly(
            "expected", [](const CongruenceWitness& w) { return to_py_int(w.expected); })
        .def_property_readonly(
            "actual", [](const CongruenceWitness& w) { return to_py_int(w.actual); });

    py::class_<CspReport>(m, "CspReport")
        .def_readonly("shape", &CspReport::shape)
        .def_readonly("n", &CspReport::n)
        .def_readonly("scope", &CspReport::scope)
        .def_readonly("content", &CspReport::content)
        .def_readonly("convention", &CspReport::convention)
        .def_readonly("orbit_sizes", &CspReport::orbit_sizes)
        .def_readonly("candidate", &CspReport::candidate)
        .def_readonly("reduced", &CspReport::reduced)
        .def_readonly("orbit_gf", &CspReport::orbit_gf)
        .def_readonly("verdict", &CspReport::verdict)
        .def_readonly("witness", &CspReport::witness)
        .def("holds", &CspReport::holds)
        .def("fixed_points", &CspReport::fixed_points, py::arg("k"))
        .def("to_json", [](const CspReport& r) { return to_json(r); })
        .def("to_tsv_row", [](const CspReport& r) { return to_tsv_row(r); });
    m.attr("TSV_HEADER") = kTsvHeader;

    m.def("orbit_generating_function", &orbit_generating_function,
          py::arg("orbit_sizes"), py::arg("n"));
    m.def("fixed_point_counts", &fixed_point_counts, py::arg("tableaux"), py::arg("n"));
    m.def("verify_csp", &verify_csp, py::arg("tableaux"), py::arg("n"), py::arg("f"),
          py::arg("convention") = StatisticConvention::ZeroBased,
          py::arg("scope") = Scope::FullSet,
          py::arg("content") = std::optional<WeakComposition>());
    m.def("verify_refined_csp", &verify_refined_csp, py::arg("shape"), py::arg("content"),
          py::arg("n"));
    m.def("verify_full_csp", &verify_full_csp, py::arg("shape"), py::arg("n"),
          py::arg("convention") = StatisticConvention::ZeroBased,
          py::arg("shift_to_zero") = false);
    m.def(
        "orbit_sum_multiplier",
        [](const SkewShape& shape, const WeakComposition& a, int n) {
            return to_py_int(orbit_sum_multiplier(shape, a, n));
        },
        py::arg("shape"), py::arg("content"), py::arg("n"));

    m.def("reduced_skew_shapes", &reduced_skew_shapes, py::arg("size"),
          py::arg("include_skew") = true);
    m.def("weak_compositions", &weak_compositions, py::arg("total"), py::arg("length"));
    m.def("shift_class_representative", &shift_class_representative, py::arg("a"));

    py::class_<SweepOptions>(m, "SweepOptions")
        .def(py::init<>())
        .def_readwrite("max_size", &SweepOptions::max_size)
        .def_readwrite("max_n", &SweepOptions::max_n)
        .def_readwrite("include_skew", &SweepOptions::include_skew)
        .def_readwrite("coprime_only", &SweepOptions::coprime_only)
        .def_readwrite("convention", &SweepOptions::convention)
        .def_readwrite("threads", &SweepOptions::threads)
        .def_readwrite("crystal_checks", &SweepOptions::crystal_checks)
        .def_readwrite("cross_checks", &SweepOptions::cross_checks);

    py::class_<ClassOutcome>(m, "ClassOutcome")
        .def_readonly("content", &ClassOutcome::content)
        .def_readonly("size", &ClassOutcome::size)
        .def_readonly("orbit_sizes", &ClassOutcome::orbit_sizes)
        .def_readonly("gf_one", &ClassOutcome::gf_one)
        .def_readonly("kostka_value", &ClassOutcome::kostka_value)
        .def_readonly("congruence_holds", &ClassOutcome::congruence_holds)
        .def_readonly("sizes_all_n", &ClassOutcome::sizes_all_n)
        .def_readonly("multiplier_matches_kostka", &ClassOutcome::multiplier_matches_kostka);

    py::class_<InstanceOutcome>(m, "InstanceOutcome")
        .def_readonly("shape", &InstanceOutcome::shape)
        .def_readonly("n", &InstanceOutcome::n)
        .def_readonly("coprime", &InstanceOutcome::coprime)
        .def_readonly("total", &InstanceOutcome::total)
        .def_readonly("orbit_sizes", &InstanceOutcome::orbit_sizes)
        .def_readonly("gf_zero", &InstanceOutcome::gf_zero)
        .def_readonly("gf_one", &InstanceOutcome::gf_one)
        .def_readonly("classes", &InstanceOutcome::classes)
        .def_readonly("orbits_divide_n", &InstanceOutcome::orbits_divide_n)
        .def_readonly("full_congruence_holds", &InstanceOutcome::full_congruence_holds)
        .def_readonly("shift_identity_ok", &InstanceOutcome::shift_identity_ok)
        .def_readonly("content_symmetry_ok", &InstanceOutcome::content_symmetry_ok)
        .def_readonly("is_straight", &InstanceOutcome::is_straight)
        .def_readonly("min_exponent_ok", &InstanceOutcome::min_exponent_ok)
        .def_readonly("shifted_congruence_holds", &InstanceOutcome::shifted_congruence_holds)
        .def_readonly("crystal_checked", &InstanceOutcome::crystal_checked)
        .def_readonly("crystal_failures", &InstanceOutcome::crystal_failures)
        .def_readonly("cross_checked", &InstanceOutcome::cross_checked)
        .def_readonly("cross_check_ok", &InstanceOutcome::cross_check_ok);

    m.def("scan_instance", &scan_instance, py::arg("shape"), py::arg("n"),
          py::arg("options") = SweepOptions());
    m.def("run_sweep", &run_sweep, py::arg("options"), py::arg("visit"));
    m.def("full_report", &full_report, py::arg("outcome"), py::arg("convention"));
    m.def("class_report", &class_report, py::arg("outcome"), py::arg("cls"));

    py::class_<PromotionContrast>(m, "PromotionContrast")
        .def_readonly("shape", &PromotionContrast::shape)
        .def_readonly("n", &PromotionContrast::n)
        .def_readonly("cyclic_order", &PromotionContrast::cyclic_order)
        .def_readonly("promotion_order", &PromotionContrast::promotion_order);
    m.def("find_promotion_contrast", &find_promotion_contrast, py::arg("max_size"),
          py::arg("max_n"));
}
