#include "semacode/congruence.hpp"

namespace semacode {

namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;

std::size_t sat_pow(std::size_t base, std::size_t e, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / base) return cap;
    r *= base;
  }
  return std::min(r, cap);
}

std::size_t nth_prime(std::size_t j) {
  static std::vector<std::size_t> primes{2};
  for (std::size_t c = primes.back() + 1; primes.size() < j; ++c) {
    bool prime = true;
    for (std::size_t p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes[j - 1];
}

// w_n = ...a^{p_3^n} b a^{p_2^n} b a^{p_1^n} b, exponents saturated past the depth bound.
LeftInfiniteWord prime_word(std::size_t n) {
  const std::size_t cap = kDefaultDepthBound + 1;
  return LeftInfiniteWord::rule_based([n, cap](std::size_t i) -> Letter {
    std::size_t end = 1;  // position of the current b
    for (std::size_t j = 1;; ++j) {
      if (i == end) return kB;
      const std::size_t len = sat_pow(nth_prime(j), n, cap);
      if (i <= end + len) return kA;
      end += len + 1;
    }
  });
}

bool both_periodic(const LeftInfiniteWord& x, const LeftInfiniteWord& y) { return x.is_periodic() && y.is_periodic(); }

// Fixtures built on non eventually periodic words relate two periodic words only when equal.
Truth periodic_identity(const LeftInfiniteWord& x, const LeftInfiniteWord& y) {
  if (both_periodic(x, y)) return x == y ? Truth::yes : Truth::no;
  return Truth::undetermined;
}

void add_symmetric(WordPairs& out, const Word& u, const Word& v) {
  out.emplace(u, v);
  out.emplace(v, u);
}

void add_identity(WordPairs& out, std::size_t k) {
  for_each_word(2, k, [&](const Word& u) { out.emplace(u, u); });
}

Word of(std::initializer_list<Letter> letters) { return Word(letters); }

RuleFixture cnc() {
  RuleFixture f{"cnc", Alphabet::binary(), {}, {}};
  f.membership = [](const LeftInfiniteWord& x, const LeftInfiniteWord& y, std::size_t) {
    return periodic_identity(x, y);
  };
  f.trace = [](std::size_t k, std::size_t) {
    WordPairs out;
    add_identity(out, k);
    const auto w = staircase_word();
    for (std::size_t n = 0; n <= k; ++n)
      for_each_word(2, n, [&](const Word& s) {
        for_each_word(2, n, [&](const Word& t) { out.emplace(w.append(s).xi(k), w.append(t).xi(k)); });
      });
    return out;
  };
  return f;
}

RuleFixture notr() {
  RuleFixture f{"notr", Alphabet::binary(), {}, {}};
  f.membership = [](const LeftInfiniteWord& x, const LeftInfiniteWord& y, std::size_t) {
    return periodic_identity(x, y);
  };
  f.trace = [](std::size_t k, std::size_t) {
    WordPairs out;
    add_identity(out, k);
    const auto w = staircase_word();
    const std::pair<Word, Word> patterns[] = {{of({kA, kA}), of({kB, kA})}, {of({kB, kB, kA}), of({kB, kB, kB})}};
    for (const auto& [p, q] : patterns)
      for (std::size_t n = 0; n <= k; ++n)
        for_each_word(2, n, [&](const Word& u) {
          add_symmetric(out, w.append(concat(p, u)).xi(k), w.append(concat(q, u)).xi(k));
        });
    return out;
  };
  return f;
}

RuleFixture cir() {
  RuleFixture f{"cir", Alphabet::binary(), {}, {}};
  f.membership = [](const LeftInfiniteWord& x, const LeftInfiniteWord& y, std::size_t depth) {
    auto has_b = [&](const LeftInfiniteWord& z) -> Truth {
      if (z.is_periodic()) {
        for (Letter l : z.period())
          if (l == kB) return Truth::yes;
        for (Letter l : z.tail())
          if (l == kB) return Truth::yes;
        return Truth::no;
      }
      const std::size_t d = std::min(depth, z.depth_bound());
      for (std::size_t i = 1; i <= d; ++i)
        if (z.letter_at(i) == kB) return Truth::yes;
      return Truth::undetermined;
    };
    const Truth bx = has_b(x), by = has_b(y);
    if (bx == Truth::undetermined || by == Truth::undetermined)
      return bx == Truth::yes && by == Truth::yes ? Truth::yes : Truth::undetermined;
    return bx == by ? Truth::yes : Truth::no;
  };
  // x = y = b^{-ω} relates any two suffixes.
  f.trace = [](std::size_t k, std::size_t) {
    WordPairs out;
    for_each_word(2, k, [&](const Word& u) { for_each_word(2, k, [&](const Word& v) { out.emplace(u, v); }); });
    return out;
  };
  return f;
}

RuleFixture cnp() {
  RuleFixture f{"cnp", Alphabet::binary(), {}, {}};
  f.membership = [](const LeftInfiniteWord& x, const LeftInfiniteWord& y, std::size_t) {
    if (!both_periodic(x, y)) return Truth::undetermined;
    if (x == y) return Truth::yes;
    // (b^{-ω}a s, a^{-ω}b s) in either order
    auto generated = [](const LeftInfiniteWord& p, const LeftInfiniteWord& q) {
      if (p.period() != Word{kB} || q.period() != Word{kA}) return false;
      const Word& s = p.tail();
      const Word& t = q.tail();
      return !s.empty() && s.size() == t.size() && s[0] == kA && t[0] == kB &&
             std::equal(s.begin() + 1, s.end(), t.begin() + 1);
    };
    return generated(x, y) || generated(y, x) ? Truth::yes : Truth::no;
  };
  f.trace = [](std::size_t k, std::size_t) {
    WordPairs out;
    add_identity(out, k);
    auto add_family = [&](const LeftInfiniteWord& x, const LeftInfiniteWord& y) {
      for (std::size_t n = 0; n <= k; ++n)
        for_each_word(2, n, [&](const Word& s) { add_symmetric(out, x.append(s).xi(k), y.append(s).xi(k)); });
    };
    add_family(LeftInfiniteWord::periodic({kB}, {kA}), LeftInfiniteWord::periodic({kA}, {kB}));
    // Generators of depth above k + 1 only contribute windows already seen at depth k + 1.
    for (std::size_t kk = 1; kk <= k + 1; ++kk) {
      const auto chain = colex_chain(kk, Alphabet::binary());
      for (std::size_t i = 1; i < chain.size(); ++i) {
        const auto w = prime_word(sat_pow(nth_prime(kk), i, std::size_t{1} << 30));
        add_family(w.append(chain[i - 1]), w.append(chain[i]));
      }
    }
    return out;
  };
  return f;
}

RightCongruenceK partition_of(std::initializer_list<std::initializer_list<const char*>> blocks) {
  const Alphabet a = Alphabet::binary();
  std::vector<std::vector<Word>> words;
  for (const auto& block : blocks) {
    words.emplace_back();
    for (const char* w : block) words.back().push_back(a.parse(w));
  }
  return RightCongruenceK::from_blocks(a, 3, words);
}

}  // namespace

LeftInfiniteWord staircase_word() {
  // b sits exactly at the triangular positions 1, 3, 6, 10, ...
  return LeftInfiniteWord::rule_based([](std::size_t i) -> Letter {
    std::size_t t = 0;
    for (std::size_t m = 1; t < i; ++m) t += m;
    return t == i ? kB : kA;
  });
}

std::map<std::string, CongruenceRepr> examples_fixtures() {
  std::map<std::string, CongruenceRepr> out;
  out.emplace("cnc", cnc());
  out.emplace("notr", notr());
  out.emplace("cir", cir());
  out.emplace("cnp", cnp());
  const auto sigma = partition_of({{"aaa", "aba", "baa"}, {"bab", "aab"}, {"abb"}, {"bba"}, {"bbb"}});
  out.emplace("newnotsp", HatLift{sigma});
  out.emplace("newcer", HatLift{sigma});
  out.emplace("newcer-prime",
              HatLift{partition_of({{"aaa", "bba", "baa"}, {"bab", "aab"}, {"abb"}, {"aba"}, {"bbb"}})});
  return out;
}

}  // namespace semacode
