#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qcss/bch.hpp"
#include "qcss/channel.hpp"
#include "qcss/codes.hpp"
#include "qcss/constructions.hpp"
#include "qcss/css.hpp"
#include "qcss/errors.hpp"
#include "qcss/projective.hpp"
#include "qcss/reed_muller.hpp"
#include "qcss/tables.hpp"

namespace py = pybind11;
using namespace qcss;

namespace {

LinearCode code_from_rows(std::size_t n, const std::vector<std::string>& rows) {
  BitMatrix m = BitMatrix::with_cols(n);
  for (const auto& r : rows) {
    const auto v = BitVector::from_string(r);
    if (v.size() != n) throw InvalidInput("row length differs from n");
    m.append_row(v);
  }
  return LinearCode(m);
}

std::vector<std::string> rows_of(const LinearCode& c) {
  std::vector<std::string> out;
  for (const auto& r : c.generator().row_list()) out.push_back(r.to_string());
  return out;
}

/// Python ints from the exact counts.
std::vector<py::int_> counts(const WeightEnumerator& w) {
  std::vector<py::int_> out;
  for (const auto& c : w.coeffs) {
    const auto s = c.str();
    out.push_back(py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10)));
  }
  return out;
}

py::dict report_dict(const TrialReport& r) {
  py::dict d;
  d["trials"] = r.trials;
  d["successes"] = r.successes;
  d["decode_failures"] = r.decode_failures;
  d["logical_errors"] = r.logical_errors;
  d["logical_rate"] = r.logical_rate();
  d["p"] = r.p;
  d["seed"] = r.seed;
  d["channel"] = r.channel;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Self-orthogonal binary codes, CSS codes and their decoders";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init(&code_from_rows), py::arg("n"), py::arg("rows"),
           "Span of the given '0'/'1' rows; dependent rows are dropped.")
      .def_property_readonly("n", &LinearCode::n)
      .def_property_readonly("k", &LinearCode::k)
      .def_property_readonly("rows", &rows_of)
      .def("contains", [](const LinearCode& c, const std::string& v) { return c.contains(BitVector::from_string(v)); })
      .def("same_code", &LinearCode::same_code)
      .def("to_text", [](const LinearCode& c) { return to_text(c); })
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return code_from_text(in);
                  })
      .def("__repr__", [](const LinearCode& c) {
        return "<LinearCode [" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "]>";
      });

  m.def("dual", &dual);
  m.def("is_self_orthogonal", &is_self_orthogonal);
  m.def("weight_distribution", [](const LinearCode& c) { return counts(weight_enumerator(c)); });
  m.def("dual_weight_distribution",
        [](const LinearCode& c) { return counts(macwilliams(weight_enumerator(c), c.n(), c.k())); });
  m.def("min_distance", [](const LinearCode& c) { return min_distance_exhaustive(c); });
  m.def("dual_distance", [](const LinearCode& c) { return dual_distance(c); });

  m.def("reed_muller", [](std::size_t mm, std::size_t r) { return rm_generator(mm, r).code; }, py::arg("m"),
        py::arg("r"));
  m.def("golay24", &golay24);
  m.def("bch_code", [](std::size_t n, std::size_t b, std::size_t delta) { return cyclic_code(bch_generator(n, b, delta)); },
        py::arg("n"), py::arg("b"), py::arg("delta"));
  m.def("cyclic_code_from_hex",
        [](std::size_t n, const std::string& hex) {
          const auto g = BitVector::from_hex(hex, n + 1);
          return cyclic_code(cyclic_from_zero_set(n, zero_set_of(g, n)));
        },
        py::arg("n"), py::arg("generator_hex"));
  m.def("search_self_orthogonal_bch", [](std::size_t n) {
    py::list out;
    for (const auto& r : search_self_orthogonal_bch(n)) {
      py::dict d;
      d["n"] = r.code.n;
      d["quantum_k"] = r.quantum_k();
      d["designed_distance"] = r.dual_designed_distance;
      d["generator_hex"] = r.code.generator_hex();
      d["b"] = r.code.b;
      d["delta"] = r.code.delta;
      out.append(d);
    }
    return out;
  });
  m.def("projective_code",
        [](unsigned k, unsigned q, unsigned l) { return build_so_code(enumerate_spaces(k, q, l)); }, py::arg("k"),
        py::arg("q"), py::arg("l"), "Self-orthogonal code of the l-spaces of PG(k, q).");
  m.def("construct",
        [](const std::string& name, const std::vector<LinearCode>& inputs, std::size_t coordinate) {
          return construct_by_name(name, inputs, coordinate).result;
        },
        py::arg("name"), py::arg("inputs"), py::arg("coordinate") = 0);

  py::class_<CssCode>(m, "CssCode")
      .def_property_readonly("n", &CssCode::n)
      .def_property_readonly("quantum_k", &CssCode::quantum_k)
      .def_property_readonly("decoders",
                             [](const CssCode& c) {
                               return py::make_tuple(c.z_decoder()->kind(), c.x_decoder()->kind());
                             })
      .def("distance", [](const CssCode& c) { return c.distance(); })
      .def("correct",
           [](const CssCode& c, const std::string& pauli) {
             const auto e = PauliError::from_string(pauli);
             const auto r = decode(c, syndrome(c, e));
             if (!r.estimate) return std::string("decode-failure");
             return std::string(residual_is_logical(c, e, *r.estimate) ? "logical-error" : "success");
           },
           "Decode the syndrome of a Pauli string such as 'IXZY' and classify the outcome.")
      .def("simulate",
           [](const CssCode& c, double p, std::uint64_t trials, std::uint64_t seed, std::size_t workers) {
             py::gil_scoped_release release;
             const auto r = monte_carlo(c, ChannelSpec::depolarizing(p), trials, seed, workers);
             py::gil_scoped_acquire acquire;
             return report_dict(r);
           },
           py::arg("p"), py::arg("trials"), py::arg("seed"), py::arg("workers") = 0)
      .def("to_text", [](const CssCode& c) {
        std::ostringstream os;
        write_css(os, c);
        return os.str();
      });

  m.def("build_css", py::overload_cast<const LinearCode&, const std::string&>(&build_css), py::arg("code"),
        py::arg("decoder") = "auto");

  m.def("verify_table", [](const std::string& which) {
    if (which == "1") return verify_table1().to_json();
    if (which == "2") return verify_table2().to_json();
    if (which == "rm") return verify_rm_scan().to_json();
    throw InvalidInput("table must be '1', '2' or 'rm'");
  });
}
