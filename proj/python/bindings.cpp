#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "semacode/anbn.hpp"
#include "semacode/congruence.hpp"
#include "semacode/machine_codes.hpp"
#include "semacode/projective.hpp"

namespace py = pybind11;
using namespace semacode;

namespace {

std::vector<std::string> format_all(const Alphabet& a, const WordSet& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.empty() ? "" : a.format(w));
  return out;
}

std::vector<Word> parse_all(const Alphabet& a, const std::vector<std::string>& words) {
  std::vector<Word> out;
  for (const auto& w : words) out.push_back(a.parse(w));
  return out;
}

template <class F>
auto from_text(const std::string& text, F read) {
  std::istringstream in(text);
  return read(in);
}

Side side_of(const std::string& s) { return side_from_string(s); }

Order order_of(const std::string& s) {
  if (s == "suffix") return Order::suffix;
  if (s == "prefix") return Order::prefix;
  throw Error("order must be suffix or prefix");
}

ResetSide reset_side_of(const std::string& s) {
  if (s == "right") return ResetSide::right;
  if (s == "left") return ResetSide::left;
  throw Error("side must be right or left");
}

CongruenceRepr congruence_of(const std::string& fixture, const std::string& partition) {
  if (!fixture.empty()) {
    auto all = examples_fixtures();
    auto it = all.find(fixture);
    if (it == all.end()) throw Error("unknown fixture " + fixture);
    return it->second;
  }
  return HatLift{from_text(partition, [](std::istream& in) { return read_partition(in); })};
}

py::dict run_machine(const TuringMachine& t, const std::string& input, std::size_t max_steps) {
  Tape tape(t, initial_configuration(t, t.input().parse(input)));
  const std::size_t steps = tape.run(max_steps);
  py::dict out;
  out["steps"] = steps;
  out["tape"] = t.omega().format(tape.word());
  out["halted"] = tape.halted();
  out["accepted"] = tape.halted() && tape.has_head() && t.is_final(tape.state());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Resets, semaphore codes and right congruences on left-infinite words";
  py::register_exception<Error>(m, "SemacodeError", PyExc_ValueError);

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::vector<std::string>>())
      .def_static("binary", &Alphabet::binary)
      .def_property_readonly("names", &Alphabet::names)
      .def("__len__", &Alphabet::size)
      .def("parse", [](const Alphabet& a, const std::string& s) { return a.parse(s); })
      .def("format", &Alphabet::format)
      .def("__eq__", &Alphabet::operator==);

  py::class_<Ideal>(m, "Ideal")
      .def_static(
          "generated",
          [](const Alphabet& a, const std::string& side, const std::vector<std::string>& gens) {
            return Ideal::generated(a, side_of(side), parse_all(a, gens));
          },
          py::arg("alphabet"), py::arg("side"), py::arg("generators"))
      .def_static(
          "cofinite",
          [](const Alphabet& a, const std::string& side, const std::vector<std::string>& excluded) {
            const auto words = parse_all(a, excluded);
            return Ideal::cofinite(a, side_of(side), WordSet(words.begin(), words.end()));
          },
          py::arg("alphabet"), py::arg("side"), py::arg("excluded"))
      .def_static("at_least", &Ideal::all_of_length_at_least)
      .def_static("parse",
                  [](const std::string& text) { return from_text(text, [](std::istream& in) { return read_ideal(in); }); })
      .def_property_readonly("alphabet", &Ideal::alphabet)
      .def_property_readonly("side", [](const Ideal& i) { return to_string(i.side()); })
      .def("__contains__", [](const Ideal& i, const std::string& w) { return i.contains(i.alphabet().parse(w)); })
      .def("subset_of", &Ideal::subset_of)
      .def("__eq__", &Ideal::operator==)
      .def("__and__", [](const Ideal& i, const Ideal& j) { return ideal_meet(i, j); })
      .def("__or__", [](const Ideal& i, const Ideal& j) { return ideal_join(i, j); })
      .def("members", [](const Ideal& i, std::size_t cap) { return format_all(i.alphabet(), members_upto(i, cap)); })
      .def(
          "code",
          [](const Ideal& i, std::size_t cap, const std::string& order) {
            return format_all(i.alphabet(), minimal_elements(i, cap, order_of(order)));
          },
          py::arg("cap"), py::arg("order") = "suffix")
      .def("__str__", [](const Ideal& i) {
        std::ostringstream out;
        write_ideal(out, i);
        return out.str();
      });

  m.def(
      "is_semaphore_code",
      [](const Alphabet& a, const std::vector<std::string>& words) {
        const auto ws = parse_all(a, words);
        return is_semaphore_code(WordSet(ws.begin(), ws.end()), a);
      },
      "Suffix code S with SA contained in A*S.");

  py::class_<TuringMachine>(m, "TuringMachine")
      .def_static("example", &example_machine, "The machine accepting a^n b^n.")
      .def_static("parse",
                  [](const std::string& text) { return from_text(text, [](std::istream& in) { return read_machine(in); }); })
      .def_property_readonly("omega", &TuringMachine::omega)
      .def("run", &run_machine, py::arg("input"), py::arg("max_steps") = 100000)
      .def("is_legal", [](const TuringMachine& t, const std::string& w) { return is_legal(t, t.omega().parse(w)); })
      .def(
          "beta_omega_tracked",
          [](const TuringMachine& t, const std::string& u, const std::string& x, const std::string& v,
             std::size_t max_steps) -> std::optional<std::string> {
            const auto& om = t.omega();
            const auto r = beta_omega_tracked(t, om.parse(u), om.index(x), om.parse(v), max_steps);
            if (!r) return std::nullopt;
            return om.name(*r);
          },
          py::arg("u"), py::arg("x"), py::arg("v"), py::arg("max_steps") = 100000);

  m.def(
      "reset_search",
      [](const TuringMachine& t, const std::string& w, const std::string& side, std::size_t ctx, std::size_t steps) {
        return to_string(is_reset_bounded(reset_side_of(side), t, t.omega().parse(w), SearchBounds{ctx, steps}).kind);
      },
      py::arg("machine"), py::arg("word"), py::arg("side") = "right", py::arg("ctx") = 2, py::arg("n_max") = 50,
      "Bounded reset search: 'Reset', 'NonReset' or 'Unknown'.");
  m.def(
      "example_nonreset",
      [](const TuringMachine& t, const std::string& w) { return example_nonreset_oracle(t, t.omega().parse(w)); },
      "Closed form for the non-resets of the example machine.");
  m.def(
      "rsc_ell",
      [](const TuringMachine& t, std::size_t ell) {
        const auto oracle = example_oracle(t);
        return format_all(t.omega(), rsc_ell(t, ell, decider_from_oracle(oracle, ResetSide::right)));
      },
      "RSC_l of the example machine, decided by its closed form.");

  m.def(
      "classify",
      [](const std::string& fixture, const std::string& partition, std::size_t cap, std::size_t max_k) {
        const auto repr = congruence_of(fixture, partition);
        const auto c = classify(repr, cap, max_k);
        const auto& a = repr_alphabet(repr);
        py::dict out;
        out["open"] = c.open;
        out["special"] = to_string(c.special);
        out["profinite"] = c.profinite_to_k;
        out["k"] = c.k_checked;
        out["lambda"] = format_all(a, lambda_sets(repr, cap).lambda);
        out["res"] = format_all(a, res_set(repr, std::min<std::size_t>(cap, 4)));
        return out;
      },
      py::arg("fixture") = "", py::arg("partition") = "", py::arg("cap") = 6, py::arg("max_k") = 6,
      "Classify a named fixture or a partition file given as text.");
  m.def(
      "rho_k",
      [](const std::string& fixture, std::size_t k, std::size_t depth) {
        const auto repr = congruence_of(fixture, "");
        const auto& a = repr_alphabet(repr);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [u, v] : rho_k(repr, k, depth)) out.emplace_back(a.format(u), a.format(v));
        return out;
      },
      py::arg("fixture"), py::arg("k"), py::arg("depth") = 64);

  m.def(
      "graph_resets",
      [](const std::string& text, std::size_t cap) {
        const AGraph g = from_text(text, [](std::istream& in) { return read_graph(in); });
        return format_all(g.alphabet(), reset_words_upto(g, cap));
      },
      "Reset words up to cap of a graph file given as text.");
  m.def(
      "is_k_reset",
      [](const std::string& text, std::size_t k) {
        return is_k_reset(from_text(text, [](std::istream& in) { return read_graph(in); }), k);
      });

  m.def(
      "verify_projective",
      [](const std::string& text, std::size_t cap) {
        const auto seq = from_text(text, [](std::istream& in) { return read_sequence(in); });
        const auto r = verify_projective_system(seq, cap);
        py::dict out;
        out["maps_checked"] = r.maps_checked;
        out["violations"] = r.violations;
        out["unverified"] = r.unverified;
        return out;
      },
      py::arg("text"), py::arg("cap") = 6);
}
