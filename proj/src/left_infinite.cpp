#include "semacode/left_infinite.hpp"

#include <algorithm>
#include <cmath>

#include "text_util.hpp"

namespace semacode {

namespace {

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return w;
}

}  // namespace

LeftInfiniteWord LeftInfiniteWord::periodic(Word period, Word tail) {
  if (period.empty()) throw Error("period of a left-infinite word must be non-empty");
  LeftInfiniteWord x;
  x.period_ = primitive_root(period);
  x.tail_ = std::move(tail);
  // ...p0 p1 ... p_{n-1} · p0 t  ==  ...(p1 ... p_{n-1} p0) · t
  std::size_t drop = 0;
  while (drop < x.tail_.size() && x.tail_[drop] == x.period_[0]) {
    std::rotate(x.period_.begin(), x.period_.begin() + 1, x.period_.end());
    ++drop;
  }
  x.tail_.erase(x.tail_.begin(), x.tail_.begin() + static_cast<std::ptrdiff_t>(drop));
  return x;
}

LeftInfiniteWord LeftInfiniteWord::rule_based(Rule letter_at, std::size_t depth_bound) {
  if (!letter_at) throw Error("rule-based word needs a letter function");
  LeftInfiniteWord x;
  x.rule_ = std::make_shared<const Rule>(std::move(letter_at));
  x.depth_bound_ = depth_bound;
  return x;
}

const Word& LeftInfiniteWord::period() const {
  if (rule_) throw Error("rule-based word has no period");
  return period_;
}

const Word& LeftInfiniteWord::tail() const {
  if (rule_) throw Error("rule-based word has no tail");
  return tail_;
}

std::size_t LeftInfiniteWord::depth_bound() const {
  return rule_ ? depth_bound_ : static_cast<std::size_t>(-1);
}

Letter LeftInfiniteWord::letter_at(std::size_t i) const {
  if (i == 0) throw Error("positions start at 1");
  if (rule_) {
    if (i > depth_bound_) throw Error("depth " + std::to_string(i) + " exceeds bound " + std::to_string(depth_bound_));
    return (*rule_)(i);
  }
  if (i <= tail_.size()) return tail_[tail_.size() - i];
  const std::size_t j = (i - tail_.size() - 1) % period_.size();
  return period_[period_.size() - 1 - j];
}

Word LeftInfiniteWord::xi(std::size_t k) const {
  if (rule_ && k > depth_bound_) throw Error("depth " + std::to_string(k) + " exceeds bound " + std::to_string(depth_bound_));
  Word w(k);
  for (std::size_t i = 1; i <= k; ++i) w[k - i] = letter_at(i);
  return w;
}

LeftInfiniteWord LeftInfiniteWord::append(const Word& u) const {
  if (!rule_) return periodic(period_, concat(tail_, u));
  auto base = rule_;
  const Word suffix_word = u;
  return rule_based(
      [base, suffix_word](std::size_t i) -> Letter {
        const std::size_t n = suffix_word.size();
        if (i <= n) return suffix_word[n - i];
        return (*base)(i - n);
      },
      depth_bound_ + u.size());
}

bool LeftInfiniteWord::operator==(const LeftInfiniteWord& other) const {
  if (rule_ || other.rule_) throw Error("equality of rule-based words is not decidable");
  return period_ == other.period_ && tail_ == other.tail_;
}

double Distance::value() const {
  if (zero) return 0.0;
  return std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(exponent, 100000)));
}

std::optional<std::size_t> lcs_length(const LeftInfiniteWord& x, const LeftInfiniteWord& y, std::size_t depth) {
  if (x.is_periodic() && y.is_periodic()) {
    if (x == y) return std::nullopt;
    // distinct canonical forms differ within max tail + both periods
    const std::size_t bound = std::max(x.tail().size(), y.tail().size()) + x.period().size() + y.period().size();
    for (std::size_t i = 1; i <= bound + 1; ++i)
      if (x.letter_at(i) != y.letter_at(i)) return i - 1;
    throw Error("internal: periodic words agree beyond their combined period bound");
  }
  if (depth > x.depth_bound() || depth > y.depth_bound()) throw Error("depth exceeds word bound");
  for (std::size_t i = 1; i <= depth; ++i)
    if (x.letter_at(i) != y.letter_at(i)) return i - 1;
  return std::nullopt;
}

Distance distance(const LeftInfiniteWord& x, const LeftInfiniteWord& y, std::size_t depth) {
  if (depth == 0) throw Error("depth must be at least 1");
  auto m = lcs_length(x, y, depth);
  Distance d;
  if (m) {
    d.exponent = *m;
    return d;
  }
  if (x.is_periodic() && y.is_periodic()) {
    d.zero = true;
    return d;
  }
  d.kind = Distance::Kind::at_most;
  d.exponent = depth;
  return d;
}

std::string format_left_infinite(const Alphabet& alphabet, const LeftInfiniteWord& x) {
  if (!x.is_periodic()) throw Error("rule-based words are not serializable");
  return "per:(" + alphabet.format(x.period()) + ") tail:" + alphabet.format(x.tail());
}

LeftInfiniteWord parse_left_infinite(const Alphabet& alphabet, std::string_view text) {
  text = detail::trim(text);
  if (text.rfind("per:(", 0) != 0) throw Error("left-infinite word must start with 'per:('");
  auto close = text.find(')');
  if (close == std::string_view::npos) throw Error("missing ')' in left-infinite word");
  Word period = alphabet.parse(text.substr(5, close - 5));
  auto rest = detail::trim(text.substr(close + 1));
  Word tail;
  if (!rest.empty()) {
    if (rest.rfind("tail:", 0) != 0) throw Error("expected 'tail:' after the period");
    tail = alphabet.parse(rest.substr(5));
  }
  return LeftInfiniteWord::periodic(std::move(period), std::move(tail));
}

}  // namespace semacode
