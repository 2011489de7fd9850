#pragma once

#include "semacode/ideal.hpp"
#include "semacode/reset_search.hpp"

namespace semacode {

/// Reset membership for short words: true = reset, false = not a reset,
/// nullopt = cannot tell.
using ResetDecider = std::function<std::optional<bool>(const Word&)>;

ResetDecider decider_from_oracle(const ClosedFormOracle& oracle, ResetSide side);
/// Uses the bounded search: a witness means "not a reset", an illegal or
/// oracle-certified word means "reset", anything else is undecided.
ResetDecider decider_from_search(const TuringMachine& t, ResetSide side, const SearchBounds& bounds,
                                 const ClosedFormOracle* oracle = nullptr);

/// RRes_ℓ(T) = RRes(T) ∪ Ω^ℓΩ* (LRes_ℓ for the left side) as a cofinite
/// two-sided ideal over Ω. Throws "oracle insufficient" when the decider
/// cannot settle a word shorter than ℓ.
Ideal reset_ideal_ell(const TuringMachine& t, ResetSide side, std::size_t ell, const ResetDecider& decide);
bool rres_ell_membership(const Word& w, std::size_t ell, const ResetDecider& decide);

/// Suffix-minimal elements of RRes_ℓ(T), from
/// (RSC(T) ∩ Ω^{≤ℓ}) ∪ Ω(Ω^{ℓ-1} ∖ RRes(T)).
CodeSet rsc_ell(const TuringMachine& t, std::size_t ell, const ResetDecider& decide);
/// Prefix-minimal elements of LRes_ℓ(T), from
/// (LSC(T) ∩ Ω^{≤ℓ}) ∪ (Ω^{ℓ-1} ∖ LRes(T))Ω.
CodeSet lsc_ell(const TuringMachine& t, std::size_t ell, const ResetDecider& decide);

/// Shortest suffix of B·u that is a right reset; ε when u ∈ B*.
Word right_code_suffix(const TuringMachine& t, const Word& u, const ResetDecider& right);
/// Shortest prefix of v·B that is a left reset; ε when v ∈ B*.
Word left_code_prefix(const TuringMachine& t, const Word& v, const ResetDecider& left);

/// φ_T(r, x, r') = β^(ω)(r, x, r') for r ∈ RSC(T) ∪ {ε}, r' ∈ LSC(T) ∪ {ε}.
/// Throws when r or r' is not a code word (or ε).
std::optional<Letter> output_function(const TuringMachine& t, const Word& r, Letter x, const Word& rp,
                                      std::size_t max_steps, const ResetDecider& right, const ResetDecider& left);

/// β^(ω)(u, x, v) evaluated through φ_T: pad with blanks, cut u down to its
/// RSC(T) suffix and v to its LSC(T) prefix, then apply φ_T.
std::optional<Letter> beta_omega_via_output(const TuringMachine& t, const Word& u, Letter x, const Word& v,
                                            std::size_t max_steps, const ResetDecider& right,
                                            const ResetDecider& left);

}  // namespace semacode
