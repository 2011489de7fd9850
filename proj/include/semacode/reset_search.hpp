#pragma once

#include <functional>

#include "semacode/turing.hpp"

namespace semacode {

enum class ResetSide { right, left };

struct SearchBounds {
  std::size_t ctx_len = 2;
  std::size_t n_max = 50;
};

/// Exact reset membership for a specific machine, e.g. from a closed form.
/// Each predicate returns true for words that are NOT resets.
struct ClosedFormOracle {
  std::string name;
  std::function<bool(const Word&)> right_nonreset;
  std::function<bool(const Word&)> left_nonreset;

  bool nonreset(ResetSide side, const Word& w) const {
    return side == ResetSide::right ? right_nonreset(w) : left_nonreset(w);
  }
};

/// Contexts showing that r is not a reset.
///
/// Right side: β^(steps)(t1·r·t2, x, t3) = value differs from
/// β^(steps)(t1_alt·r·t2, x, t3) = value_alt.
/// Left side: β^(steps)(t1, x, t2·r·t3) = value differs from
/// β^(steps)(t1, x, t2·r·t3_alt) = value_alt.
struct ResetWitness {
  ResetSide side = ResetSide::right;
  Word t1, t1_alt, t2, t3, t3_alt;
  Letter x = 0;
  std::size_t steps = 0;
  Letter value = 0;
  Letter value_alt = 0;
};

struct ResetVerdict {
  enum class Kind { reset, non_reset, unknown };
  Kind kind = Kind::unknown;
  SearchBounds bounds;
  std::optional<ResetWitness> witness;
  /// Why a reset verdict holds: "illegal" or the name of the closed form.
  std::string certified_by;
};

std::string to_string(ResetVerdict::Kind kind);

/// Searches contexts of length <= ctx_len and up to n_max moves for a witness
/// that r is not a right (left) reset. Without a witness the verdict is
/// Unknown, unless r is illegal or `oracle` certifies r as a reset.
///
/// The search is exhaustive within the bounds: one context can be taken
/// empty, and cells are only fixed when a head first reads them, so whole
/// families of contexts that the runs never look at are covered together.
/// Witnesses are replayed through beta_tracked before being returned.
ResetVerdict is_right_reset_bounded(const TuringMachine& t, const Word& r, const SearchBounds& bounds,
                                    const ClosedFormOracle* oracle = nullptr);
ResetVerdict is_left_reset_bounded(const TuringMachine& t, const Word& r, const SearchBounds& bounds,
                                   const ClosedFormOracle* oracle = nullptr);
ResetVerdict is_reset_bounded(ResetSide side, const TuringMachine& t, const Word& r, const SearchBounds& bounds,
                              const ClosedFormOracle* oracle = nullptr);

/// Recomputes both sides of a witness; true iff they really differ.
bool replay_witness(const TuringMachine& t, const Word& r, const ResetWitness& w);

}  // namespace semacode
