#include <istream>
#include <ostream>

#include "semacode/turing.hpp"
#include "text_util.hpp"

namespace semacode {

TuringMachine read_machine(std::istream& in) {
  std::optional<std::vector<std::string>> states, input, tape, finals;
  std::optional<std::string> initial;
  std::vector<RuleSpec> rules;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> Error { return Error("line " + std::to_string(lineno) + ": " + msg); };
  auto set_once = [&](auto& slot, auto value, const std::string& key) {
    if (slot) throw fail("duplicate key '" + key + "'");
    slot = std::move(value);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    auto [key, value] = detail::split_key(text);
    auto fields = detail::split_ws(value);
    if (key == "states") {
      set_once(states, fields, key);
    } else if (key == "input") {
      set_once(input, fields, key);
    } else if (key == "tape") {
      set_once(tape, fields, key);
    } else if (key == "final") {
      set_once(finals, fields, key);
    } else if (key == "initial") {
      if (fields.size() != 1) throw fail("expected one initial state");
      set_once(initial, fields[0], key);
    } else if (key == "delta") {
      if (fields.size() != 6 || fields[2] != "->") throw fail("expected 'delta: q X -> q' Y L|R'");
      RuleSpec r{fields[0], fields[1], fields[3], fields[4], Dir::right};
      if (fields[5] == "L") r.dir = Dir::left;
      else if (fields[5] != "R") throw fail("direction must be L or R");
      rules.push_back(r);
    } else {
      throw fail(key.empty() ? "expected 'key: value'" : "unknown key '" + key + "'");
    }
  }
  if (!states || !input || !tape || !initial) throw Error("machine file needs states, input, tape and initial");
  try {
    return TuringMachine(*states, *input, *tape, *initial, finals.value_or(std::vector<std::string>{}), rules);
  } catch (const Error& e) {
    throw Error(std::string("invalid machine: ") + e.what());
  }
}

void write_machine(std::ostream& out, const TuringMachine& t) {
  auto list = [&](const char* key, const std::vector<std::string>& names) {
    out << key << ':';
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
  };
  list("states", t.states().names());
  list("input", t.input().names());
  list("tape", t.tape().names());
  out << "initial: " << t.states().name(t.initial()) << '\n';
  std::vector<std::string> finals;
  for (State q = 0; q < t.states().size(); ++q)
    if (t.is_final(q)) finals.push_back(t.states().name(q));
  list("final", finals);
  for (const auto& r : t.rules())
    out << "delta: " << r.state << ' ' << r.read << " -> " << r.next << ' ' << r.write << ' '
        << (r.dir == Dir::left ? 'L' : 'R') << '\n';
}

}  // namespace semacode
