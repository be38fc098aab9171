#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tribo/certify.hpp"
#include "tribo/corpus.hpp"
#include "tribo/derive.hpp"
#include "tribo/fast_eval.hpp"
#include "tribo/report.hpp"
#include "tribo/sequence.hpp"

namespace py = pybind11;
using namespace tribo;

namespace {

// Hex text, because CPython caps decimal int <-> str conversion length.
py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str(16).c_str(), nullptr, 16));
}

BigInt from_py(const py::int_& v) {
  const auto hex = py::reinterpret_steal<py::object>(PyNumber_ToBase(v.ptr(), 16));
  if (!hex) throw py::error_already_set();
  return BigInt(hex.cast<std::string>(), 0);
}

SequenceSpec spec_of(const std::string& seq, const std::optional<std::vector<py::int_>>& seed) {
  if (seed) {
    if (seed->size() != 3) throw py::value_error("seed must have exactly three entries");
    return SequenceSpec::generalized({from_py((*seed)[0]), from_py((*seed)[1]), from_py((*seed)[2])});
  }
  if (seq == "T") return SequenceSpec::tribonacci();
  if (seq == "K") return SequenceSpec::lucas();
  throw py::value_error("seq must be 'T' or 'K'");
}

Basis basis_of(const std::string& b) {
  if (b == "T") return Basis::Tribonacci;
  if (b == "K") return Basis::Lucas;
  throw py::value_error("basis must be 'T' or 'K'");
}

}  // namespace

PYBIND11_MODULE(_tribo, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegenerateOffsets>(m, "DegenerateOffsets", PyExc_ArithmeticError);
  py::register_exception<CorpusError>(m, "CorpusError", PyExc_ValueError);

  m.def("term", [](Index n, const std::string& seq, const std::optional<std::vector<py::int_>>& seed) {
    return to_py(term(spec_of(seq, seed), n));
  }, py::arg("n"), py::arg("seq") = "T", py::arg("seed") = py::none());

  m.def("fast_term", [](Index n, const std::string& seq, const std::optional<std::vector<py::int_>>& seed) {
    return to_py(fast_term(spec_of(seq, seed), n));
  }, py::arg("n"), py::arg("seq") = "T", py::arg("seed") = py::none());

  m.def("matrix_power_term", [](Index n, const std::string& seq, const std::optional<std::vector<py::int_>>& seed) {
    return to_py(matrix_power_term(spec_of(seq, seed), n));
  }, py::arg("n"), py::arg("seq") = "T", py::arg("seed") = py::none());

  m.def("term_range", [](Index lo, Index hi, const std::string& seq, const std::optional<std::vector<py::int_>>& seed) {
    py::list out;
    for (const auto& v : term_range(spec_of(seq, seed), lo, hi)) out.append(to_py(v));
    return out;
  }, py::arg("lo"), py::arg("hi"), py::arg("seq") = "T", py::arg("seed") = py::none());

  m.def("basis_decomposition", [](Index n) {
    const auto b = basis_decomposition(n);
    return py::make_tuple(to_py(b.a), to_py(b.b), to_py(b.c));
  }, py::arg("n"));

  m.def("multiplications", [](Index n) {
    MulCounter c;
    fast_term(SequenceSpec::tribonacci(), n, &c);
    return c.count;
  }, py::arg("n"));

  m.def("derive_text", [](const std::string& basis, Index o1, Index o2, Index o3) {
    return derive(basis_of(basis), o1, o2, o3).text();
  });
  m.def("derive_json", [](const std::string& basis, Index o1, Index o2, Index o3) {
    return to_json(derive(basis_of(basis), o1, o2, o3)).dump();
  });

  m.def("canonical", [](const std::string& text) { return render(parse(text)); }, py::arg("text"));
  m.def("parse_error_position", [](const std::string& text) -> std::optional<std::size_t> {
    try {
      parse(text);
      return std::nullopt;
    } catch (const ParseError& e) {
      return e.position();
    }
  }, py::arg("text"));

  m.def("certify_json", [](const std::string& text) { return to_json(certify(parse(text))).dump(); },
        py::arg("text"));

  m.def("fuzz", [](const std::string& text, std::uint64_t trials, std::uint64_t rng_seed) {
    const auto rep = fuzz(parse(text), trials, rng_seed);
    py::dict d;
    d["trials"] = rep.trials;
    d["passes"] = rep.passes;
    d["failure"] = rep.failure ? py::object(py::str(to_json(*rep.failure).dump())) : py::object(py::none());
    return d;
  }, py::arg("text"), py::arg("trials") = 1000, py::arg("rng_seed") = 0);

  m.def("corpus_entries", [](const std::string& path) {
    py::list out;
    for (const auto& e : load_corpus(path)) out.append(py::make_tuple(e.id, e.source, e.text));
    return out;
  }, py::arg("path"));
}
