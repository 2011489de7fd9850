#pragma once

#include <functional>
#include <memory>
#include <string>

#include "semacode/word.hpp"

namespace semacode {

inline constexpr std::size_t kDefaultDepthBound = 4096;

/// A left-infinite word ...x3 x2 x1. Positions are counted from the right
/// end, starting at 1.
///
/// Two presentations: eventually periodic period^{-ω}·tail, kept canonical
/// (primitive period, tail not absorbable into the period), and rule based,
/// where a pure function gives the letter at each position up to a depth
/// bound.
class LeftInfiniteWord {
 public:
  using Rule = std::function<Letter(std::size_t)>;

  static LeftInfiniteWord periodic(Word period, Word tail = {});
  static LeftInfiniteWord rule_based(Rule letter_at, std::size_t depth_bound = kDefaultDepthBound);

  bool is_periodic() const { return !rule_; }
  const Word& period() const;
  const Word& tail() const;
  /// Deepest queryable position; unbounded for periodic words.
  std::size_t depth_bound() const;

  Letter letter_at(std::size_t i) const;
  /// Suffix of length k.
  Word xi(std::size_t k) const;
  /// The word x·u.
  LeftInfiniteWord append(const Word& u) const;

  /// Exact equality; only defined between periodic words.
  bool operator==(const LeftInfiniteWord& other) const;

 private:
  LeftInfiniteWord() = default;

  Word period_;
  Word tail_;
  std::shared_ptr<const Rule> rule_;
  std::size_t depth_bound_ = 0;
};

/// Result of comparing two left-infinite words in the suffix metric
/// d(x, y) = 2^{-|lcs(x, y)|}.
struct Distance {
  enum class Kind { exact, at_most };
  Kind kind = Kind::exact;
  /// exact: d = 2^{-exponent}, or 0 when `zero`; at_most: d <= 2^{-exponent}.
  std::size_t exponent = 0;
  bool zero = false;

  double value() const;
  bool operator==(const Distance&) const = default;
};

/// Exact for two periodic words; otherwise exact when the common suffix is
/// shorter than depth and an upper bound 2^{-depth} when it is not.
Distance distance(const LeftInfiniteWord& x, const LeftInfiniteWord& y, std::size_t depth);

/// Length of the longest common suffix, or nullopt when it reaches `depth`
/// (never nullopt for two distinct periodic words).
std::optional<std::size_t> lcs_length(const LeftInfiniteWord& x, const LeftInfiniteWord& y, std::size_t depth);

/// "per:(ab) tail:ba" for (ab)^{-ω}ba. Rule-based words cannot be written.
std::string format_left_infinite(const Alphabet& alphabet, const LeftInfiniteWord& x);
LeftInfiniteWord parse_left_infinite(const Alphabet& alphabet, std::string_view text);

}  // namespace semacode
