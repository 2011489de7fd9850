#pragma once

#include <deque>
#include <iosfwd>
#include <string>

#include "semacode/word.hpp"

namespace semacode {

using State = std::uint16_t;

enum class Dir { left, right };

struct Move {
  State next = 0;
  Letter write = 0;
  Dir dir = Dir::right;
};

/// One transition as written in a machine file: "q0 a -> q1 X R".
struct RuleSpec {
  std::string state;
  std::string read;
  std::string next;
  std::string write;
  Dir dir = Dir::right;
};

/// Deterministic single-tape machine (Q, A, Γ, q0, F, δ). The blank is the
/// tape letter named "_".
///
/// Tape words live over Ω = Γ ∪ (Γ × Q): letter X of Γ keeps its index and
/// the head symbol X^q has index |Γ| + q·|Γ| + X. Ω letters are named "a"
/// and "a@q0".
class TuringMachine {
 public:
  TuringMachine(std::vector<std::string> states, std::vector<std::string> input, std::vector<std::string> tape,
                const std::string& initial, const std::vector<std::string>& finals, const std::vector<RuleSpec>& rules);

  const Alphabet& states() const { return states_; }
  const Alphabet& input() const { return input_; }
  const Alphabet& tape() const { return tape_; }
  const Alphabet& omega() const { return omega_; }
  Letter blank() const { return blank_; }
  State initial() const { return initial_; }
  bool is_final(State q) const { return finals_.at(q); }
  const std::vector<RuleSpec>& rules() const { return rules_; }

  std::optional<Move> delta(State q, Letter x) const;

  std::size_t gamma_size() const { return tape_.size(); }
  std::size_t omega_size() const { return omega_.size(); }
  Letter plain(Letter x) const { return x; }
  Letter with_head(Letter x, State q) const {
    return static_cast<Letter>(gamma_size() + q * gamma_size() + x);
  }
  Letter tape_of(Letter s) const { return static_cast<Letter>(s < gamma_size() ? s : (s - gamma_size()) % gamma_size()); }
  std::optional<State> state_of(Letter s) const {
    if (s < gamma_size()) return std::nullopt;
    return static_cast<State>((s - gamma_size()) / gamma_size());
  }

  /// Maps input letter i to its tape letter.
  Letter input_to_tape(Letter x) const { return input_to_tape_.at(x); }

 private:
  Alphabet states_;
  Alphabet input_;
  Alphabet tape_;
  Alphabet omega_;
  Letter blank_ = 0;
  State initial_ = 0;
  std::vector<bool> finals_;
  std::vector<std::optional<Move>> delta_;
  std::vector<Letter> input_to_tape_;
  std::vector<RuleSpec> rules_;
};

class NotStabilized : public Error {
 public:
  using Error::Error;
};

Word tape_hom(const TuringMachine& t, const Word& w);
std::size_t heads_count(const TuringMachine& t, const Word& w);
bool is_legal(const TuringMachine& t, const Word& w);

/// A tape configuration under the one-move map. Cells hold Γ letters;
/// positions are reported relative to the first cell of the starting word,
/// so blank padding on the left shifts nothing for callers.
class Tape {
 public:
  /// Throws Error when w is illegal.
  Tape(const TuringMachine& t, const Word& w);

  /// Applies one move; false (and no change) when no move applies.
  bool step();
  /// Steps until no move applies or `max_steps` moves were made; returns the
  /// number of moves made.
  std::size_t run(std::size_t max_steps);

  Word word() const;
  /// Ω letter at a position of the starting word (which may since have been
  /// padded on either side).
  Letter symbol_at(std::ptrdiff_t pos) const;
  bool has_head() const { return head_ >= 0; }
  State state() const { return state_; }
  bool halted() const;

 private:
  const TuringMachine* t_;
  std::deque<Letter> cells_;
  std::ptrdiff_t origin_ = 0;  // index in cells_ of starting position 0
  std::ptrdiff_t head_ = -1;
  State state_ = 0;
};

/// One move; the identity when no move applies. Throws on illegal input.
Word beta(const TuringMachine& t, const Word& w);
Word beta_n(const TuringMachine& t, const Word& w, std::size_t n);

struct OmegaRun {
  Word word;
  bool stabilized = false;
  std::size_t steps = 0;
};

/// Iterates β until a fixed point or max_steps moves.
OmegaRun beta_omega(const TuringMachine& t, const Word& w, std::size_t max_steps);

/// The symbol at the position of x in u·x·v after n moves; nullopt when uxv
/// is illegal.
std::optional<Letter> beta_tracked(const TuringMachine& t, const Word& u, Letter x, const Word& v, std::size_t n);
/// Same at the fixed point. Throws NotStabilized when max_steps is not enough.
std::optional<Letter> beta_omega_tracked(const TuringMachine& t, const Word& u, Letter x, const Word& v,
                                         std::size_t max_steps);

/// Initial configuration x1^{q0} x2 ... xn, or B^{q0} for the empty input.
Word initial_configuration(const TuringMachine& t, const Word& input);

/// Runs β^ω over every legal word of length <= max_len. Returns the first
/// word that did not stabilize within the budget.
std::optional<Word> find_non_halting_legal_word(const TuringMachine& t, std::size_t max_len, std::size_t budget);

TuringMachine read_machine(std::istream& in);
void write_machine(std::ostream& out, const TuringMachine& t);

}  // namespace semacode
