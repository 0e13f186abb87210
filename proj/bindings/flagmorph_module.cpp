#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagmorph/io.hpp"
#include "flagmorph/symmetric.hpp"

namespace py = pybind11;
namespace fm = flagmorph;

namespace {

py::object json_to_py(const nlohmann::json& value) {
    return py::module_::import("json").attr("loads")(value.dump());
}

py::object to_py_int(const fm::Int& value) {
    PyObject* obj = PyLong_FromString(value.get_str().c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

fm::linalg::Vec point_from_py(const py::sequence& entries) {
    fm::linalg::Vec point;
    for (const auto& entry : entries)
        point.push_back(fm::io::parse_rational(py::str(entry).cast<std::string>()));
    return point;
}

std::vector<fm::Int> ints_from_py(const py::sequence& entries) {
    std::vector<fm::Int> values;
    for (const auto& entry : entries)
        values.push_back(fm::Int(py::str(entry).cast<std::string>()));
    return values;
}

fm::chow::FlagVariety resolve_flag(int n, const py::object& dims, const py::object& i, int m) {
    if (!dims.is_none()) return fm::chow::FlagVariety(n, dims.cast<std::vector<int>>());
    if (!i.is_none())
        return fm::chow::to_flag_variety(fm::chow::ConsecutiveComplementForm{n, m, i.cast<int>()});
    throw std::invalid_argument("pass either dims=[...] or i=<run start>");
}

}  // namespace

PYBIND11_MODULE(flagmorph, module) {
    module.doc() =
        "Chow-ring obstruction engine: constancy certificates and symplectic witnesses for "
        "morphisms from projective spaces to type-A flag varieties, plus the uniform-bundle "
        "splitting classifier.";

    module.def(
        "decide",
        [](int n, int m, const py::object& i, const py::object& dims, bool evidence,
           long long bound, int threads) {
            fm::chow::FlagVariety fv = resolve_flag(n, dims, i, m);
            fm::obstruction::DecideOptions options;
            options.attach_evidence = evidence;
            options.bound = bound;
            options.limits.threads = threads;
            return json_to_py(
                fm::io::verdict_json(fm::obstruction::decide_pm_to_flag(n, m, fv.dims, options)));
        },
        py::arg("n"), py::arg("m"), py::arg("i") = py::none(), py::arg("dims") = py::none(),
        py::arg("evidence") = true, py::arg("bound") = 4, py::arg("threads") = 1,
        "Constancy verdict for morphisms from P^m into the flag variety.");

    module.def(
        "decide_flag",
        [](int source_n, const std::vector<int>& source_dims, int n, int m,
           const py::object& i, const py::object& dims) {
            fm::chow::FlagVariety target = resolve_flag(n, dims, i, m);
            return json_to_py(fm::io::verdict_json(
                fm::obstruction::decide_flag_to_flag(source_n, source_dims, n, m, target.dims)));
        },
        py::arg("source_n"), py::arg("source_dims"), py::arg("n"), py::arg("m"),
        py::arg("i") = py::none(), py::arg("dims") = py::none());

    module.def(
        "search",
        [](int n, const std::vector<int>& dims, int m, long long bound, int threads) {
            fm::chow::FlagVariety fv(n, dims);
            fm::obstruction::ConstraintSystem system = fm::obstruction::build_system(fv, m);
            fm::obstruction::SearchLimits limits;
            limits.threads = threads;
            auto solutions = fm::obstruction::bounded_search(system, bound, limits);
            return json_to_py(fm::io::search_json(system, bound, solutions));
        },
        py::arg("n"), py::arg("dims"), py::arg("m"), py::arg("bound") = 4, py::arg("threads") = 1,
        "Exhaustive admissible pullback assignments within the bound.");

    module.def(
        "presentation",
        [](int n, const std::vector<int>& dims) {
            return json_to_py(
                fm::io::presentation_json(fm::chow::presentation(fm::chow::FlagVariety(n, dims))));
        },
        py::arg("n"), py::arg("dims"));

    module.def(
        "dualize",
        [](int n, const std::vector<int>& dims) {
            return fm::chow::dualize(fm::chow::FlagVariety(n, dims)).dims;
        },
        py::arg("n"), py::arg("dims"));

    module.def(
        "consecutive_run",
        [](int n, const std::vector<int>& marked) {
            fm::chow::RunAnalysis run = fm::chow::consecutive_run(n, marked);
            py::dict out;
            out["single_run"] = run.single_run;
            out["max_run_length"] = run.max_run_length;
            out["start"] = run.start ? py::object(py::int_(*run.start)) : py::none();
            return out;
        },
        py::arg("n"), py::arg("marked"));

    module.def(
        "duality_consistency",
        [](int n, int m, const std::vector<int>& dims) {
            return fm::obstruction::duality_consistency(n, m, dims);
        },
        py::arg("n"), py::arg("m"), py::arg("dims"));

    module.def("claim_check", &fm::sym::claim_check, py::arg("j"), py::arg("k"));
    module.def("genfun_check", &fm::sym::genfun_check, py::arg("k"), py::arg("max_degree"));
    module.def("newton_identity_check", &fm::sym::newton_identity_check, py::arg("l"),
               py::arg("k"));

    module.def(
        "even_positivity",
        [](int m, const py::sequence& values) {
            fm::sym::PositivityResult result = fm::sym::even_positivity_oracle(m, ints_from_py(values));
            const char* certificate =
                result.certificate == fm::sym::PositivityCertificate::Positive ? "Positive"
                                                                               : "ZeroAtOrigin";
            return py::make_tuple(to_py_int(result.value), certificate);
        },
        py::arg("m"), py::arg("values"));

    module.def(
        "recurrence_sequence",
        [](long long a, long long b1, int length) {
            py::list out;
            for (const fm::Int& v : fm::obstruction::recurrence_sequence(a, b1, length))
                out.append(to_py_int(v));
            return out;
        },
        py::arg("a"), py::arg("b1"), py::arg("length"));

    module.def(
        "recurrence_certificate",
        [](int k, long long a_max, long long b_abs_max, int parity_l_max) {
            auto cert = fm::obstruction::recurrence_certificate(k, a_max, b_abs_max, parity_l_max);
            py::dict out;
            out["pass"] = cert.pass;
            out["k"] = cert.k;
            out["pairs_checked"] = cert.pairs_checked;
            out["counterexample"] =
                cert.counterexample
                    ? py::object(py::make_tuple(cert.counterexample->a, cert.counterexample->b1,
                                                cert.counterexample->index,
                                                cert.counterexample->fact))
                    : py::none();
            return out;
        },
        py::arg("k"), py::arg("a_max") = 6, py::arg("b_abs_max") = 6, py::arg("parity_l_max") = 10);

    module.def(
        "parity_facts",
        [](long long a_max, long long b_abs_max, int l_max) {
            auto report = fm::obstruction::parity_facts_check(a_max, b_abs_max, l_max);
            py::dict out;
            out["pass"] = report.pass;
            out["pairs_checked"] = report.pairs_checked;
            return out;
        },
        py::arg("a_max") = 6, py::arg("b_abs_max") = 6, py::arg("l_max") = 10);

    module.def(
        "odd_case_certificate",
        [](const py::sequence& values, int m) {
            auto trace = fm::obstruction::odd_case_certificate(ints_from_py(values), m);
            py::dict out;
            out["ok"] = trace.ok;
            out["steps"] = trace.steps;
            return out;
        },
        py::arg("values"), py::arg("m"));

    module.def(
        "witness_build",
        [](int n, int i, int m, const py::sequence& point) {
            return json_to_py(
                fm::io::flag_point_json(fm::witness::embed_in_fiber(n, i, m, point_from_py(point))));
        },
        py::arg("n"), py::arg("i"), py::arg("m"), py::arg("point"));

    module.def(
        "witness_verify",
        [](int n, const std::vector<int>& dims, const py::dict& point) {
            nlohmann::json value = nlohmann::json::parse(
                py::module_::import("json").attr("dumps")(point).cast<std::string>());
            return fm::witness::verify_flag_point(fm::chow::FlagVariety(n, dims),
                                                  fm::io::flag_point_from_json(value));
        },
        py::arg("n"), py::arg("dims"), py::arg("point"));

    module.def(
        "witness_sample",
        [](int n, int i, int m, int samples, unsigned long long seed) {
            auto report = fm::witness::sample_verification(n, i, m, samples, seed);
            py::dict out;
            out["samples"] = report.samples;
            out["all_valid"] = report.all_valid;
            out["linearity_ok"] = report.linearity_ok;
            out["scaling_ok"] = report.scaling_ok;
            out["pass"] = report.pass();
            return out;
        },
        py::arg("n"), py::arg("i"), py::arg("m"), py::arg("samples") = 100, py::arg("seed") = 0);

    module.def("nonconstancy", &fm::witness::nonconstancy_check, py::arg("k"));
    module.def("nonconstancy_composed", &fm::witness::nonconstancy_check_composed, py::arg("n"),
               py::arg("i"), py::arg("m"));

    module.def(
        "symplectic_witness",
        [](int k, const py::sequence& point) {
            fm::witness::WitnessPair pair = fm::witness::symplectic_witness(k, point_from_py(point));
            auto as_strings = [](const fm::linalg::Vec& v) {
                py::list out;
                for (const fm::linalg::Rat& r : v) out.append(r.get_str());
                return out;
            };
            py::dict out;
            out["line"] = as_strings(pair.line);
            out["covector"] = as_strings(pair.covector);
            return out;
        },
        py::arg("k"), py::arg("point"));

    module.def(
        "classify",
        [](int m, const std::vector<long long>& entries) {
            fm::bundles::SplittingType type(m, entries);
            return json_to_py(fm::io::classification_json(type, fm::bundles::classify(type)));
        },
        py::arg("m"), py::arg("type"));

    module.def(
        "dual_type",
        [](int m, const std::vector<long long>& entries) {
            return fm::bundles::dual_type(fm::bundles::SplittingType(m, entries)).entries;
        },
        py::arg("m"), py::arg("type"));
}
