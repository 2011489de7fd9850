#pragma once

#include <iosfwd>

#include "semacode/ideal.hpp"
#include "semacode/machine_codes.hpp"

namespace semacode {

/// Ideals I_1 … I_K (levels are 1-based) and their running meets
/// J_k = I_1 ∩ … ∩ I_k.
class IdealSequence {
 public:
  IdealSequence(Alphabet alphabet, std::vector<Ideal> ideals);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return ideals_.size(); }
  const Ideal& ideal(std::size_t k) const;
  const Ideal& meet(std::size_t k) const;

 private:
  Alphabet alphabet_;
  std::vector<Ideal> ideals_;
  std::vector<Ideal> meets_;
};

/// The semaphore code of J_k, up to length cap.
CodeSet code_at(const IdealSequence& seq, std::size_t k, std::size_t cap);

/// φ_km(u): the unique suffix of u in the code of J_m (k ≥ m, u in the code of J_k).
Word phi(const IdealSequence& seq, std::size_t k, std::size_t m, const Word& u, std::size_t cap);

struct ProjectiveReport {
  std::size_t cap = 0;
  std::size_t maps_checked = 0;
  std::vector<std::string> violations;
  /// Code words with no preimage found, at levels whose code may extend past cap.
  std::vector<std::string> unverified;
  bool ok() const { return violations.empty(); }
};

/// Checks that every φ_km is onto, commutes with the right action
/// (u·a means the code suffix of ua) and that φ_lm ∘ φ_kl = φ_km.
ProjectiveReport verify_projective_system(const IdealSequence& seq, std::size_t cap);

/// I_k = RRes_k(T) for k = 1 … K.
IdealSequence turing_sequence(const TuringMachine& t, std::size_t levels, const ResetDecider& decide);

/// Ideal blocks in the format of read_ideal, separated by "---" lines.
IdealSequence read_sequence(std::istream& in, const Alphabet& default_alphabet = Alphabet::binary());
void write_sequence(std::ostream& out, const IdealSequence& seq);

}  // namespace semacode
