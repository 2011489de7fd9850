#include "semacode/turing.hpp"

#include <algorithm>

namespace semacode {

namespace {

std::vector<std::string> omega_names(const Alphabet& tape, const Alphabet& states) {
  std::vector<std::string> names = tape.names();
  for (const auto& q : states.names())
    for (const auto& x : tape.names()) names.push_back(x + "@" + q);
  return names;
}

}  // namespace

TuringMachine::TuringMachine(std::vector<std::string> states, std::vector<std::string> input,
                             std::vector<std::string> tape, const std::string& initial,
                             const std::vector<std::string>& finals, const std::vector<RuleSpec>& rules)
    : states_(std::move(states)), input_(std::move(input)), tape_(std::move(tape)), rules_(rules) {
  for (const auto& n : states_.names())
    if (n.find('@') != std::string::npos) throw Error("state name must not contain '@': " + n);
  for (const auto& n : tape_.names())
    if (n.find('@') != std::string::npos) throw Error("tape letter must not contain '@': " + n);
  auto b = tape_.find("_");
  if (!b) throw Error("tape alphabet must contain the blank '_'");
  blank_ = *b;
  for (const auto& a : input_.names()) {
    auto x = tape_.find(a);
    if (!x) throw Error("input letter '" + a + "' missing from the tape alphabet");
    if (*x == blank_) throw Error("the blank cannot be an input letter");
    input_to_tape_.push_back(*x);
  }
  omega_ = Alphabet(omega_names(tape_, states_));
  initial_ = states_.index(initial);
  finals_.assign(states_.size(), false);
  for (const auto& f : finals) finals_[states_.index(f)] = true;
  delta_.assign(states_.size() * tape_.size(), std::nullopt);
  for (const auto& r : rules) {
    const State q = states_.index(r.state);
    const Letter x = tape_.index(r.read);
    Move m{states_.index(r.next), tape_.index(r.write), r.dir};
    if (m.write == blank_) throw Error("transition from " + r.state + " on " + r.read + " writes the blank");
    auto& slot = delta_[q * tape_.size() + x];
    if (slot) throw Error("duplicate transition for " + r.state + " " + r.read);
    slot = m;
  }
}

std::optional<Move> TuringMachine::delta(State q, Letter x) const { return delta_.at(q * tape_.size() + x); }

Word tape_hom(const TuringMachine& t, const Word& w) {
  Word out(w.size());
  std::transform(w.begin(), w.end(), out.begin(), [&](Letter s) { return t.tape_of(s); });
  return out;
}

std::size_t heads_count(const TuringMachine& t, const Word& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](Letter s) { return s >= t.gamma_size(); }));
}

bool is_legal(const TuringMachine& t, const Word& w) {
  std::ptrdiff_t head = -1;
  std::ptrdiff_t first = -1;
  std::ptrdiff_t last = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= t.omega_size()) return false;
    if (w[i] >= t.gamma_size()) {
      if (head >= 0) return false;
      head = static_cast<std::ptrdiff_t>(i);
    }
    if (t.tape_of(w[i]) != t.blank()) {
      if (first < 0) first = static_cast<std::ptrdiff_t>(i);
      last = static_cast<std::ptrdiff_t>(i);
    }
  }
  for (std::ptrdiff_t i = first; i >= 0 && i <= last; ++i)
    if (t.tape_of(w[static_cast<std::size_t>(i)]) == t.blank()) return false;
  if (head >= 0 && first >= 0 && t.tape_of(w[static_cast<std::size_t>(head)]) == t.blank())
    return head == first - 1 || head == last + 1;
  return true;
}

Tape::Tape(const TuringMachine& t, const Word& w) : t_(&t) {
  if (!is_legal(t, w)) throw Error("illegal tape word");
  for (std::size_t i = 0; i < w.size(); ++i) {
    cells_.push_back(t.tape_of(w[i]));
    if (auto q = t.state_of(w[i])) {
      head_ = static_cast<std::ptrdiff_t>(i);
      state_ = *q;
    }
  }
}

bool Tape::halted() const { return head_ < 0 || !t_->delta(state_, cells_[static_cast<std::size_t>(head_)]); }

bool Tape::step() {
  if (head_ < 0) return false;
  auto m = t_->delta(state_, cells_[static_cast<std::size_t>(head_)]);
  if (!m) return false;
  cells_[static_cast<std::size_t>(head_)] = m->write;
  state_ = m->next;
  if (m->dir == Dir::left) {
    if (head_ == 0) {
      cells_.push_front(t_->blank());
      ++origin_;
    } else {
      --head_;
    }
  } else {
    ++head_;
    if (head_ == static_cast<std::ptrdiff_t>(cells_.size())) cells_.push_back(t_->blank());
  }
  return true;
}

std::size_t Tape::run(std::size_t max_steps) {
  std::size_t n = 0;
  while (n < max_steps && step()) ++n;
  return n;
}

Word Tape::word() const {
  Word w(cells_.begin(), cells_.end());
  if (head_ >= 0) w[static_cast<std::size_t>(head_)] = t_->with_head(w[static_cast<std::size_t>(head_)], state_);
  return w;
}

Letter Tape::symbol_at(std::ptrdiff_t pos) const {
  const std::ptrdiff_t i = pos + origin_;
  if (i < 0 || i >= static_cast<std::ptrdiff_t>(cells_.size())) return t_->blank();
  const Letter x = cells_[static_cast<std::size_t>(i)];
  return i == head_ ? t_->with_head(x, state_) : x;
}

Word beta(const TuringMachine& t, const Word& w) {
  Tape tape(t, w);
  tape.step();
  return tape.word();
}

Word beta_n(const TuringMachine& t, const Word& w, std::size_t n) {
  Tape tape(t, w);
  tape.run(n);
  return tape.word();
}

OmegaRun beta_omega(const TuringMachine& t, const Word& w, std::size_t max_steps) {
  Tape tape(t, w);
  OmegaRun out;
  out.steps = tape.run(max_steps);
  out.stabilized = tape.halted();
  out.word = tape.word();
  return out;
}

std::optional<Letter> beta_tracked(const TuringMachine& t, const Word& u, Letter x, const Word& v, std::size_t n) {
  Word w = u;
  w.push_back(x);
  w.insert(w.end(), v.begin(), v.end());
  if (!is_legal(t, w)) return std::nullopt;
  Tape tape(t, w);
  tape.run(n);
  return tape.symbol_at(static_cast<std::ptrdiff_t>(u.size()));
}

std::optional<Letter> beta_omega_tracked(const TuringMachine& t, const Word& u, Letter x, const Word& v,
                                         std::size_t max_steps) {
  Word w = u;
  w.push_back(x);
  w.insert(w.end(), v.begin(), v.end());
  if (!is_legal(t, w)) return std::nullopt;
  Tape tape(t, w);
  tape.run(max_steps);
  if (!tape.halted()) throw NotStabilized("no fixed point within " + std::to_string(max_steps) + " moves");
  return tape.symbol_at(static_cast<std::ptrdiff_t>(u.size()));
}

Word initial_configuration(const TuringMachine& t, const Word& input) {
  if (input.empty()) return Word{t.with_head(t.blank(), t.initial())};
  Word w;
  for (Letter a : input) {
    if (a >= t.input().size()) throw Error("input letter out of range");
    w.push_back(t.input_to_tape(a));
  }
  w[0] = t.with_head(w[0], t.initial());
  return w;
}

std::optional<Word> find_non_halting_legal_word(const TuringMachine& t, std::size_t max_len, std::size_t budget) {
  std::optional<Word> found;
  for (std::size_t n = 0; n <= max_len && !found; ++n) {
    for_each_word(t.omega_size(), n, [&](const Word& w) {
      if (found || !is_legal(t, w)) return;
      if (!beta_omega(t, w, budget).stabilized) found = w;
    });
  }
  return found;
}

}  // namespace semacode
