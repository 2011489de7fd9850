#pragma once

#include <iosfwd>
#include <string>

#include "semacode/word.hpp"

namespace semacode {

enum class Side { two_sided, left, right };

std::string to_string(Side side);
Side side_from_string(std::string_view text);

/// Which order minimal elements are taken in: suffix order gives semaphore
/// codes, prefix order gives left semaphore codes.
enum class Order { suffix, prefix };

/// A finitely generated or cofinite ideal of the free monoid, or a finite
/// intersection of those (two-sided meets need not be finitely generated).
///
/// Generated ideals keep a normalized generator antichain (no generator is a
/// factor / suffix / prefix of another, according to the side). Cofinite ideals
/// store their finite complement, which must be factor-closed (two-sided),
/// suffix-closed (left) or prefix-closed (right).
class Ideal {
 public:
  static Ideal generated(Alphabet alphabet, Side side, const std::vector<Word>& generators);
  static Ideal cofinite(Alphabet alphabet, Side side, WordSet excluded);
  /// The ideal A* A^k of all words of length >= k.
  static Ideal all_of_length_at_least(Alphabet alphabet, std::size_t k);

  const Alphabet& alphabet() const { return alphabet_; }
  Side side() const { return side_; }
  bool is_cofinite_repr() const { return cofinite_; }
  bool is_meet_repr() const { return !parts_.empty(); }
  /// Operands of an intersection.
  const std::vector<Ideal>& parts() const { return parts_; }
  bool empty() const;
  /// Complement of a cofinite ideal; empty for generated ideals.
  const WordSet& excluded() const { return excluded_; }
  /// Minimal generators for the ideal's side. Computed for cofinite ideals;
  /// throws for an intersection.
  const WordSet& generators() const;
  std::size_t max_generator_length() const;

  bool contains(const Word& w) const;

  /// Exact inclusion test by search over a product of suffix automata.
  bool subset_of(const Ideal& other) const;
  bool operator==(const Ideal& other) const;

  /// The finite complement if it is finite, found by cycle detection on the
  /// avoidance automaton; nullopt when the complement is infinite.
  std::optional<WordSet> finite_complement() const;

 private:
  Ideal(Alphabet alphabet, Side side) : alphabet_(std::move(alphabet)), side_(side) {}
  friend Ideal ideal_meet(const Ideal& i, const Ideal& j);
  friend Ideal ideal_join(const Ideal& i, const Ideal& j);
  void normalize_generators(const std::vector<Word>& gens);
  void compute_generators_from_complement();

  Alphabet alphabet_;
  Side side_ = Side::two_sided;
  bool cofinite_ = false;
  WordSet generators_;
  WordSet excluded_;
  std::vector<Ideal> parts_;
};

/// Minimal elements of I up to length cap: suffix order (two-sided or left
/// ideals) or prefix order (two-sided or right ideals). Throws "cap too small"
/// when cap is shorter than a generator. Intersections are cut at cap.
CodeSet minimal_elements(const Ideal& ideal, std::size_t cap, Order order = Order::suffix);

Ideal ideal_meet(const Ideal& i, const Ideal& j);
Ideal ideal_join(const Ideal& i, const Ideal& j);

/// Words of length <= cap in the ideal.
WordSet members_upto(const Ideal& ideal, std::size_t cap);

/// Ideal file: "side: ..." header, optional "alphabet: ..." line, then one
/// generator per line. A "complement:" line switches to a cofinite ideal
/// whose excluded words follow.
Ideal read_ideal(std::istream& in, const Alphabet& default_alphabet = Alphabet::binary());
void write_ideal(std::ostream& out, const Ideal& ideal);

/// One word per line.
void write_words(std::ostream& out, const Alphabet& alphabet, const WordSet& words);
WordSet read_words(std::istream& in, const Alphabet& alphabet);

}  // namespace semacode
