#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semacode {

/// Raised for every contract violation detected by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Shortlex order: shorter words first, then lexicographic on letter indices.
struct ShortLex {
  bool operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
  }
};

using WordSet = std::set<Word, ShortLex>;
using CodeSet = WordSet;

/// A finite ordered alphabet. Letter i is named names()[i].
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// The binary alphabet {a, b} used throughout the worked examples.
  static Alphabet binary();

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Letter x) const { return names_.at(x); }
  std::optional<Letter> find(std::string_view name) const;
  Letter index(std::string_view name) const;

  /// Renders a word; letters are concatenated when every name is a single
  /// character and separated by one space otherwise. ε renders as "@eps".
  std::string format(const Word& w) const;
  /// Inverse of format; also accepts whitespace-separated letters and
  /// greedy longest-match concatenation.
  Word parse(std::string_view text) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  bool single_char_ = true;
};

inline constexpr std::string_view kEpsilonText = "@eps";

bool suffix_leq(const Word& u, const Word& v);
bool prefix_leq(const Word& u, const Word& v);
bool is_factor(const Word& u, const Word& v);
Word lcs(const Word& u, const Word& v);
Word suffix(const Word& w, std::size_t k);
Word concat(const Word& u, const Word& v);
Word reversed(Word w);

/// Calls fn on every word of length exactly n over `letters` letters, in
/// lexicographic order.
void for_each_word(std::size_t letters, std::size_t n, const std::function<void(const Word&)>& fn);
/// All words of length at most cap, shortlex ordered.
std::vector<Word> words_upto(std::size_t letters, std::size_t cap);

bool is_suffix_code(const WordSet& s);
bool is_prefix_code(const WordSet& s);
/// Suffix code with S·A ⊆ A*·S.
bool is_semaphore_code(const WordSet& s, const Alphabet& alphabet);
/// Prefix code with A·S ⊆ S·A*.
bool is_left_semaphore_code(const WordSet& s, const Alphabet& alphabet);
/// Throws Error when s is not a suffix code. Checks candidate extensions up to
/// maxlen(s) + 1.
bool is_maximal_suffix_code(const WordSet& s, const Alphabet& alphabet);

/// Successor in the order where words of equal length compare at the last
/// position where they differ, a < b. Binary alphabets only.
std::optional<Word> colex_successor(const Word& u, const Alphabet& alphabet);
/// The full chain a^k < ... < b^k.
std::vector<Word> colex_chain(std::size_t k, const Alphabet& alphabet);

}  // namespace semacode
