#include "semacode/anbn.hpp"

namespace semacode {

TuringMachine example_machine() {
  std::vector<RuleSpec> rules{
      {"q0", "a", "q1", "X", Dir::right}, {"q0", "Y", "q5", "Y", Dir::right}, {"q1", "a", "q1", "a", Dir::right},
      {"q1", "Y", "q2", "Y", Dir::right}, {"q1", "b", "q3", "Y", Dir::left},  {"q2", "Y", "q2", "Y", Dir::right},
      {"q2", "b", "q3", "Y", Dir::left},  {"q5", "Y", "q5", "Y", Dir::right}, {"q5", "_", "q6", "Z", Dir::left},
      {"q4", "a", "q4", "a", Dir::left},  {"q4", "X", "q0", "X", Dir::right}, {"q3", "Y", "q3", "Y", Dir::left},
      {"q3", "a", "q4", "a", Dir::left},  {"q3", "X", "q0", "X", Dir::right},
  };
  return TuringMachine({"q0", "q1", "q2", "q3", "q4", "q5", "q6"}, {"a", "b"}, {"a", "b", "X", "Y", "Z", "_"}, "q0",
                       {"q6"}, rules);
}

namespace {

// Symbol classes of the closed form.
enum class Cls { a, b, y, head_a, head_b, head_y, other };

Cls classify(const TuringMachine& t, Letter s) {
  const std::string& x = t.tape().name(t.tape_of(s));
  auto q = t.state_of(s);
  if (!q) {
    if (x == "a") return Cls::a;
    if (x == "b") return Cls::b;
    if (x == "Y") return Cls::y;
    return Cls::other;
  }
  const std::string& state = t.states().name(*q);
  if (x == "a" && (state == "q1" || state == "q3" || state == "q4")) return Cls::head_a;
  if (x == "b" && (state == "q1" || state == "q2")) return Cls::head_b;
  if (x == "Y" && (state == "q1" || state == "q2" || state == "q3")) return Cls::head_y;
  return Cls::other;
}

}  // namespace

bool example_nonreset_oracle(const TuringMachine& t, const Word& w) {
  std::vector<Cls> c;
  c.reserve(w.size());
  std::size_t heads = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    c.push_back(classify(t, w[i]));
    if (c.back() == Cls::other) return false;
    if (c.back() == Cls::head_a || c.back() == Cls::head_b || c.back() == Cls::head_y) {
      ++heads;
      at = i;
    }
  }
  if (heads > 1) return false;
  auto by = [](Cls k) { return k == Cls::b || k == Cls::y; };
  // a*{b,Y}* on [from, c.size())
  auto a_then_by = [&](std::size_t from) {
    std::size_t i = from;
    while (i < c.size() && c[i] == Cls::a) ++i;
    while (i < c.size() && by(c[i])) ++i;
    return i == c.size();
  };
  if (heads == 0) return a_then_by(0);
  std::size_t i = 0;
  if (c[at] == Cls::head_a) {
    while (i < at && c[i] == Cls::a) ++i;
    return i == at && a_then_by(at + 1);
  }
  while (i < at && c[i] == Cls::a) ++i;
  while (i < at && c[i] == Cls::y) ++i;
  if (i != at) return false;
  for (std::size_t j = at + 1; j < c.size(); ++j)
    if (!by(c[j])) return false;
  return true;
}

ClosedFormOracle example_oracle(const TuringMachine& t) {
  auto pred = [t](const Word& w) { return example_nonreset_oracle(t, w); };
  return ClosedFormOracle{"builtin-anbn", pred, pred};
}

}  // namespace semacode
