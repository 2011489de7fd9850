#include "semacode/word.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace semacode {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("alphabet must be non-empty");
  if (names_.size() > 0xFFFE) throw Error("alphabet too large");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty letter name");
    if (std::any_of(n.begin(), n.end(), [](unsigned char c) { return std::isspace(c); }))
      throw Error("letter name contains whitespace: '" + n + "'");
    if (n == kEpsilonText) throw Error("letter name clashes with the epsilon marker");
    if (!seen.insert(n).second) throw Error("duplicate letter '" + n + "'");
    if (n.size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::binary() { return Alphabet({"a", "b"}); }

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::index(std::string_view name) const {
  auto x = find(name);
  if (!x) throw Error("unknown letter '" + std::string(name) + "'");
  return *x;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return std::string(kEpsilonText);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single_char_) out += ' ';
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  Word w;
  if (text.empty() || text == kEpsilonText) return w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    // greedy longest match
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t x = 0; x < names_.size(); ++x) {
      const auto& n = names_[x];
      if (n.size() > best_len && text.substr(i, n.size()) == n) {
        best_len = n.size();
        best = static_cast<Letter>(x);
      }
    }
    if (best_len == 0)
      throw Error("cannot parse word '" + std::string(text) + "' at offset " + std::to_string(i));
    w.push_back(best);
    i += best_len;
  }
  return w;
}

bool suffix_leq(const Word& u, const Word& v) {
  return u.size() <= v.size() && std::equal(u.rbegin(), u.rend(), v.rbegin());
}

bool prefix_leq(const Word& u, const Word& v) {
  return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

bool is_factor(const Word& u, const Word& v) {
  if (u.size() > v.size()) return false;
  return std::search(v.begin(), v.end(), u.begin(), u.end()) != v.end();
}

Word lcs(const Word& u, const Word& v) {
  std::size_t m = 0;
  while (m < u.size() && m < v.size() && u[u.size() - 1 - m] == v[v.size() - 1 - m]) ++m;
  return Word(u.end() - static_cast<std::ptrdiff_t>(m), u.end());
}

Word suffix(const Word& w, std::size_t k) {
  if (k >= w.size()) return w;
  return Word(w.end() - static_cast<std::ptrdiff_t>(k), w.end());
}

Word concat(const Word& u, const Word& v) {
  Word w;
  w.reserve(u.size() + v.size());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

void for_each_word(std::size_t letters, std::size_t n, const std::function<void(const Word&)>& fn) {
  if (letters == 0) {
    if (n == 0) fn(Word{});
    return;
  }
  Word w(n, 0);
  while (true) {
    fn(w);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++w[i] < letters) break;
      w[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<Word> words_upto(std::size_t letters, std::size_t cap) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= cap; ++n) for_each_word(letters, n, [&](const Word& w) { out.push_back(w); });
  return out;
}

namespace {

bool is_code_for(const WordSet& s, bool suffix_order) {
  // a word is comparable with another iff one of its proper suffixes
  // (prefixes) belongs to the set
  for (const auto& w : s) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      Word part = suffix_order ? Word(w.begin() + static_cast<std::ptrdiff_t>(w.size() - k), w.end())
                               : Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      if (s.count(part)) return false;
    }
  }
  return true;
}

bool has_suffix_in(const Word& w, const WordSet& s) {
  for (std::size_t k = 0; k <= w.size(); ++k)
    if (s.count(suffix(w, k))) return true;
  return false;
}

bool has_prefix_in(const Word& w, const WordSet& s) {
  for (std::size_t k = 0; k <= w.size(); ++k)
    if (s.count(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)))) return true;
  return false;
}

}  // namespace

bool is_suffix_code(const WordSet& s) { return is_code_for(s, true); }
bool is_prefix_code(const WordSet& s) { return is_code_for(s, false); }

bool is_semaphore_code(const WordSet& s, const Alphabet& alphabet) {
  if (!is_suffix_code(s)) return false;
  for (const auto& w : s) {
    Word wa = w;
    wa.push_back(0);
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      wa.back() = static_cast<Letter>(a);
      if (!has_suffix_in(wa, s)) return false;
    }
  }
  return true;
}

bool is_left_semaphore_code(const WordSet& s, const Alphabet& alphabet) {
  if (!is_prefix_code(s)) return false;
  for (const auto& w : s) {
    Word aw;
    aw.reserve(w.size() + 1);
    aw.push_back(0);
    aw.insert(aw.end(), w.begin(), w.end());
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      aw.front() = static_cast<Letter>(a);
      if (!has_prefix_in(aw, s)) return false;
    }
  }
  return true;
}

bool is_maximal_suffix_code(const WordSet& s, const Alphabet& alphabet) {
  if (!is_suffix_code(s)) throw Error("not a suffix code");
  std::size_t maxlen = 0;
  for (const auto& w : s) maxlen = std::max(maxlen, w.size());
  WordSet proper_suffixes;
  for (const auto& w : s)
    for (std::size_t k = 0; k < w.size(); ++k) proper_suffixes.insert(suffix(w, k));
  bool maximal = true;
  for (std::size_t n = 0; n <= maxlen + 1 && maximal; ++n) {
    for_each_word(alphabet.size(), n, [&](const Word& u) {
      if (!maximal || s.count(u)) return;
      // S ∪ {u} stays a suffix code iff u has no suffix in S and is not a
      // proper suffix of a member
      if (!has_suffix_in(u, s) && !proper_suffixes.count(u)) maximal = false;
    });
  }
  return maximal;
}

std::optional<Word> colex_successor(const Word& u, const Alphabet& alphabet) {
  if (alphabet.size() != 2) throw Error("colex order is defined on binary alphabets only");
  // least significant position is the leftmost one
  Word v = u;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) {
      v[i] = 1;
      for (std::size_t j = 0; j < i; ++j) v[j] = 0;
      return v;
    }
  }
  return std::nullopt;
}

std::vector<Word> colex_chain(std::size_t k, const Alphabet& alphabet) {
  std::vector<Word> chain;
  std::optional<Word> cur = Word(k, 0);
  while (cur) {
    chain.push_back(*cur);
    cur = colex_successor(*cur, alphabet);
  }
  return chain;
}

}  // namespace semacode
