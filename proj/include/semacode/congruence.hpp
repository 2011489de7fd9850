#pragma once

#include <iosfwd>
#include <map>
#include <variant>

#include "semacode/graph.hpp"
#include "semacode/ideal.hpp"
#include "semacode/left_infinite.hpp"

namespace semacode {

enum class Truth { yes, no, undetermined };
std::string to_string(Truth t);

using WordPairs = std::set<std::pair<Word, Word>>;

/// A right congruence on A^k under the action u·a = ξ_k(ua).
/// Blocks are numbered by first occurrence in lexicographic order of A^k.
class RightCongruenceK {
 public:
  /// Throws unless blocks partition A^k and the partition is stable.
  static RightCongruenceK from_blocks(Alphabet alphabet, std::size_t k, const std::vector<std::vector<Word>>& blocks);
  static RightCongruenceK identity(Alphabet alphabet, std::size_t k);
  static RightCongruenceK one_block(Alphabet alphabet, std::size_t k);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t k() const { return k_; }
  std::size_t block_count() const { return count_; }
  std::size_t block_of(const Word& u) const;
  bool related(const Word& u, const Word& v) const { return block_of(u) == block_of(v); }
  /// Blocks in numbering order, each sorted lexicographically.
  std::vector<std::vector<Word>> blocks() const;
  /// ξ_k(ua).
  Word act(const Word& u, Letter a) const;

  bool operator==(const RightCongruenceK& other) const = default;

  // Used by rc_closure.
  RightCongruenceK(Alphabet alphabet, std::size_t k, std::vector<std::size_t> block);

 private:
  Alphabet alphabet_;
  std::size_t k_ = 0;
  std::vector<std::size_t> block_;
  std::size_t count_ = 0;
};

/// Index of a word of length k in the lexicographic enumeration of A^k.
std::size_t word_index(const Word& u, std::size_t letters);
Word word_at_index(std::size_t index, std::size_t k, std::size_t letters);

/// Is u ≡ v ⇒ ξ_k(ua) ≡ ξ_k(va) for every letter a?
bool is_stable(const Alphabet& alphabet, std::size_t k, const std::vector<std::size_t>& block);

/// Smallest right congruence on A^k containing the pairs.
RightCongruenceK rc_closure(const Alphabet& alphabet, std::size_t k, const WordPairs& pairs);

struct HatLift {
  RightCongruenceK sigma;
};

/// τ_I for a two-sided ideal I.
struct SpecialFromIdeal {
  Ideal ideal;
};

/// A congruence given by rules on left-infinite words, used for the
/// counterexample families that have no finite presentation.
struct RuleFixture {
  std::string name;
  Alphabet alphabet;
  std::function<Truth(const LeftInfiniteWord&, const LeftInfiniteWord&, std::size_t depth)> membership;
  /// Pairs of ρ^(k); empty when the fixture has no generator schema.
  std::function<WordPairs(std::size_t k, std::size_t depth)> trace;
};

using CongruenceRepr = std::variant<HatLift, SpecialFromIdeal, RuleFixture>;

const Alphabet& repr_alphabet(const CongruenceRepr& repr);
std::string repr_kind(const CongruenceRepr& repr);

/// x ρ y; Undetermined when a depth cap could hide the answer.
Truth tau_membership(const CongruenceRepr& repr, const LeftInfiniteWord& x, const LeftInfiniteWord& y,
                     std::size_t depth);

/// ρ^(k): pairs (u, v) of A^k with (A^{-ω}u × A^{-ω}v) ∩ ρ ≠ ∅.
WordPairs rho_k(const CongruenceRepr& repr, std::size_t k, std::size_t depth);
/// ρ^[k], the closure of ρ^(k).
RightCongruenceK rho_bracket_k(const CongruenceRepr& repr, std::size_t k, std::size_t depth);
bool is_transitive(const WordPairs& rel);

/// Cay(ρ) for a hat-lift or a cofinite τ_I; throws "infinite index" otherwise.
/// Vertices of τ_I are the words of its semaphore code in shortlex order.
AGraph cayley_graph(const CongruenceRepr& repr);
/// The vertex xρ of cayley_graph(repr).
Vertex cayley_vertex(const CongruenceRepr& repr, const LeftInfiniteWord& x);

struct LambdaSets {
  WordSet lambda;
  WordSet lambda_prime;
  std::size_t cap = 0;
  /// Classes (Cayley vertices) whose lcs is longer than cap.
  std::vector<Vertex> lcs_over_cap;
};

LambdaSets lambda_sets(const CongruenceRepr& repr, std::size_t cap);
/// Reset words of Cay(ρ) up to cap; for non-cofinite τ_I the members of I.
WordSet res_set(const CongruenceRepr& repr, std::size_t cap);

struct Classification {
  bool open = false;
  /// Λ_ρ ⊆ Res(ρ), within cap.
  Truth special_lambda = Truth::undetermined;
  /// Path condition on Cay(ρ): paths p -aw-> q, p' -bw-> q, p'' -w-> r
  /// with a ≠ b force q = r. Decided exactly on the finite graph.
  Truth special_paths = Truth::undetermined;
  Truth special = Truth::undetermined;
  bool profinite_to_k = false;
  std::size_t k_checked = 0;
};

Classification classify(const CongruenceRepr& repr, std::size_t cap, std::size_t max_k);

/// (ideal generated by Res(ρ), ideal A*Λ_ρ), both within cap.
std::pair<Ideal, Ideal> underline_overline(const CongruenceRepr& repr, std::size_t cap);

/// Named fixtures: cnc, notr, cir, cnp (rule based), newnotsp, newcer,
/// newcer-prime (hat-lifts).
std::map<std::string, CongruenceRepr> examples_fixtures();

/// The left-infinite word ...a^4 b a^3 b a^2 b a b.
LeftInfiniteWord staircase_word();

/// Partition file: "k: 3", "alphabet: a b", then "block: aaa aba baa" lines.
RightCongruenceK read_partition(std::istream& in, const Alphabet& default_alphabet = Alphabet::binary());
void write_partition(std::ostream& out, const RightCongruenceK& sigma);

}  // namespace semacode
