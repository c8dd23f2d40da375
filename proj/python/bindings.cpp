#include "adreal/jobs.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace adreal;

namespace {

jobs::Options make_options(const std::optional<std::string>& field, const std::string& hints, bool gl_mode,
                           bool strong)
{
    jobs::Options opts;
    if (field)
        opts.field = parse_field(*field);
    opts.hints = io::parse_hints(hints);
    opts.gl_mode = gl_mode;
    opts.strong = strong;
    return opts;
}

std::string classify_json(const std::string& doc, const std::optional<std::string>& field, const std::string& hints,
                          bool gl_mode)
{
    return jobs::classify(io::parse_json(doc), make_options(field, hints, gl_mode, false)).dump();
}

std::string witness_json(const std::string& doc, const std::optional<std::string>& field, const std::string& hints,
                         bool gl_mode, bool strong)
{
    return jobs::witness(io::parse_json(doc), make_options(field, hints, gl_mode, strong)).dump();
}

std::string verify_json(const std::string& doc) { return jobs::verify(io::parse_json(doc)).document.dump(); }

py::dict census_dict(std::size_t n)
{
    const Census c = census(n);
    py::dict d;
    d["n"] = c.n;
    d["total"] = c.total;
    d["even"] = c.even;
    d["very_even"] = c.very_even;
    d["p_tilde_e"] = c.p_tilde_e;
    d["strong_nilpotent_C"] = c.strong_nilpotent_C();
    d["strong_nilpotent_H"] = c.strong_nilpotent_H();
    return d;
}

py::dict classify_partition_dict(const std::vector<std::size_t>& parts)
{
    const PartitionClassification c = classify_partition(Partition::from_parts(parts));
    py::dict d;
    d["even"] = c.even;
    d["very_even"] = c.very_even;
    d["in_p_tilde_e"] = c.in_p_tilde_e;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact reality and strong reality of elements of sl(n, C) and sl(n, H)";

    static py::exception<Error> error(m, "Error");
    static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
    static py::exception<ExactnessRefusal> exactness(m, "ExactnessRefusal", error.ptr());
    static py::exception<NoWitness> no_witness(m, "NoWitness", error.ptr());
    static py::exception<NonZeroTrace> non_zero_trace(m, "NonZeroTrace", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const NoWitness& e) {
            py::set_error(no_witness, py::make_tuple(e.what(), e.reason()));
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const ExactnessRefusal& e) {
            py::set_error(exactness, e.what());
        } catch (const NonZeroTrace& e) {
            py::set_error(non_zero_trace, e.what());
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("classify", &classify_json, py::arg("document"), py::arg("field") = py::none(), py::arg("hints") = "",
          py::arg("gl_mode") = false, "Classify a matrix or spectral document; returns the report as JSON text.");
    m.def("witness", &witness_json, py::arg("document"), py::arg("field") = py::none(), py::arg("hints") = "",
          py::arg("gl_mode") = false, py::arg("strong") = false,
          "Build and verify a certificate; returns the certificate as JSON text.");
    m.def("verify", &verify_json, py::arg("document"), "Check a certificate document; returns flags and transcript.");
    m.def("atlas_csv", &atlas_csv, py::arg("bound") = 30);
    m.def("census", &census_dict, py::arg("n"));
    m.def("classify_partition", &classify_partition_dict, py::arg("parts"));
    m.def(
        "quat_mul",
        [](const std::string& p, const std::string& q) { return to_string(parse_quaternion(p) * parse_quaternion(q)); },
        py::arg("p"), py::arg("q"));
    m.def(
        "det_H", [](const std::string& doc) { return to_string(det_H(io::parse_matrix_H(io::parse_json(doc)))); },
        py::arg("document"));
    m.def(
        "phi_embed",
        [](const std::string& doc) { return io::matrix_to_json(phi_embed(io::parse_matrix_H(io::parse_json(doc)))).dump(); },
        py::arg("document"));
}
