#include "semacode/congruence.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>

#include "text_util.hpp"

namespace semacode {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes: return "true";
    case Truth::no: return "false";
    case Truth::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::size_t word_index(const Word& u, std::size_t letters) {
  std::size_t i = 0;
  for (Letter x : u) i = i * letters + x;
  return i;
}

Word word_at_index(std::size_t index, std::size_t k, std::size_t letters) {
  Word w(k);
  for (std::size_t j = k; j-- > 0;) {
    w[j] = static_cast<Letter>(index % letters);
    index /= letters;
  }
  return w;
}

namespace {

std::size_t power(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

std::vector<std::size_t> renumber(const std::vector<std::size_t>& raw) {
  std::map<std::size_t, std::size_t> seen;
  std::vector<std::size_t> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = seen.emplace(raw[i], seen.size()).first->second;
  return out;
}

std::size_t act_index(std::size_t i, Letter a, std::size_t letters, std::size_t size) {
  return (i * letters + a) % size;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    return true;
  }
};

void check_length(const Word& u, std::size_t k) {
  if (u.size() != k) throw Error("word of length " + std::to_string(u.size()) + ", expected " + std::to_string(k));
}

}  // namespace

bool is_stable(const Alphabet& alphabet, std::size_t k, const std::vector<std::size_t>& block) {
  const std::size_t n = alphabet.size();
  const std::size_t size = power(n, k);
  if (block.size() != size) return false;
  // u ≡ v ⇒ ua ≡ va: compare each word with its block's first word.
  std::map<std::size_t, std::size_t> first;
  for (std::size_t i = 0; i < size; ++i) {
    auto [it, fresh] = first.emplace(block[i], i);
    if (fresh) continue;
    for (std::size_t a = 0; a < n; ++a) {
      auto l = static_cast<Letter>(a);
      if (block[act_index(i, l, n, size)] != block[act_index(it->second, l, n, size)]) return false;
    }
  }
  return true;
}

RightCongruenceK::RightCongruenceK(Alphabet alphabet, std::size_t k, std::vector<std::size_t> block)
    : alphabet_(std::move(alphabet)), k_(k), block_(renumber(block)) {
  if (k_ == 0) throw Error("right congruences need k >= 1");
  if (block_.size() != power(alphabet_.size(), k_)) throw Error("partition does not cover A^k");
  if (!is_stable(alphabet_, k_, block_)) throw Error("partition is not a right congruence");
  count_ = block_.empty() ? 0 : *std::max_element(block_.begin(), block_.end()) + 1;
}

RightCongruenceK RightCongruenceK::from_blocks(Alphabet alphabet, std::size_t k,
                                               const std::vector<std::vector<Word>>& blocks) {
  const std::size_t size = power(alphabet.size(), k);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block(size, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& u : blocks[b]) {
      check_length(u, k);
      auto& slot = block[word_index(u, alphabet.size())];
      if (slot != unset) throw Error("word " + alphabet.format(u) + " appears in two blocks");
      slot = b;
    }
  }
  for (std::size_t i = 0; i < size; ++i)
    if (block[i] == unset) throw Error("word " + alphabet.format(word_at_index(i, k, alphabet.size())) + " is in no block");
  return RightCongruenceK(std::move(alphabet), k, std::move(block));
}

RightCongruenceK RightCongruenceK::identity(Alphabet alphabet, std::size_t k) {
  std::vector<std::size_t> block(power(alphabet.size(), k));
  std::iota(block.begin(), block.end(), 0);
  return RightCongruenceK(std::move(alphabet), k, std::move(block));
}

RightCongruenceK RightCongruenceK::one_block(Alphabet alphabet, std::size_t k) {
  std::vector<std::size_t> block(power(alphabet.size(), k), 0);
  return RightCongruenceK(std::move(alphabet), k, std::move(block));
}

std::size_t RightCongruenceK::block_of(const Word& u) const {
  check_length(u, k_);
  return block_.at(word_index(u, alphabet_.size()));
}

std::vector<std::vector<Word>> RightCongruenceK::blocks() const {
  std::vector<std::vector<Word>> out(count_);
  for (std::size_t i = 0; i < block_.size(); ++i) out[block_[i]].push_back(word_at_index(i, k_, alphabet_.size()));
  return out;
}

Word RightCongruenceK::act(const Word& u, Letter a) const {
  check_length(u, k_);
  Word w(u.begin() + 1, u.end());
  w.push_back(a);
  return w;
}

RightCongruenceK rc_closure(const Alphabet& alphabet, std::size_t k, const WordPairs& pairs) {
  const std::size_t n = alphabet.size();
  const std::size_t size = power(n, k);
  UnionFind uf(size);
  std::queue<std::pair<std::size_t, std::size_t>> work;
  auto merge = [&](std::size_t i, std::size_t j) {
    if (uf.unite(i, j)) work.emplace(i, j);
  };
  for (const auto& [u, v] : pairs) {
    check_length(u, k);
    check_length(v, k);
    merge(word_index(u, n), word_index(v, n));
  }
  while (!work.empty()) {
    auto [i, j] = work.front();
    work.pop();
    for (std::size_t a = 0; a < n; ++a) {
      auto l = static_cast<Letter>(a);
      merge(act_index(i, l, n, size), act_index(j, l, n, size));
    }
  }
  std::vector<std::size_t> block(size);
  for (std::size_t i = 0; i < size; ++i) block[i] = uf.find(i);
  return RightCongruenceK(alphabet, k, std::move(block));
}

const Alphabet& repr_alphabet(const CongruenceRepr& repr) {
  if (auto* h = std::get_if<HatLift>(&repr)) return h->sigma.alphabet();
  if (auto* s = std::get_if<SpecialFromIdeal>(&repr)) return s->ideal.alphabet();
  return std::get<RuleFixture>(repr).alphabet;
}

std::string repr_kind(const CongruenceRepr& repr) {
  if (std::holds_alternative<HatLift>(repr)) return "hat-lift";
  if (std::holds_alternative<SpecialFromIdeal>(repr)) return "special";
  return "fixture:" + std::get<RuleFixture>(repr).name;
}

namespace {

const Ideal& special_ideal(const SpecialFromIdeal& s) {
  if (s.ideal.side() != Side::two_sided) throw Error("tau_I needs a two-sided ideal");
  return s.ideal;
}

}  // namespace

Truth tau_membership(const CongruenceRepr& repr, const LeftInfiniteWord& x, const LeftInfiniteWord& y,
                     std::size_t depth) {
  if (auto* h = std::get_if<HatLift>(&repr)) {
    const std::size_t k = h->sigma.k();
    if (k > x.depth_bound() || k > y.depth_bound()) throw Error("depth exceeded");
    return h->sigma.related(x.xi(k), y.xi(k)) ? Truth::yes : Truth::no;
  }
  if (auto* s = std::get_if<SpecialFromIdeal>(&repr)) {
    const Ideal& ideal = special_ideal(*s);
    if (x.is_periodic() && y.is_periodic() && x == y) return Truth::yes;
    depth = std::min({depth, x.depth_bound(), y.depth_bound()});
    // I is a left ideal, so a common suffix in I exists iff the longest one is in I.
    if (auto l = lcs_length(x, y, depth)) return ideal.contains(x.xi(*l)) ? Truth::yes : Truth::no;
    return ideal.contains(x.xi(depth)) ? Truth::yes : Truth::undetermined;
  }
  return std::get<RuleFixture>(repr).membership(x, y, depth);
}

WordPairs rho_k(const CongruenceRepr& repr, std::size_t k, std::size_t depth) {
  if (k == 0) throw Error("rho_k needs k >= 1");
  const Alphabet& alphabet = repr_alphabet(repr);
  const std::size_t n = alphabet.size();
  WordPairs out;
  if (auto* h = std::get_if<HatLift>(&repr)) {
    const auto& sigma = h->sigma;
    const std::size_t m = sigma.k();
    if (k >= m) {
      for_each_word(n, k, [&](const Word& u) {
        for_each_word(n, k, [&](const Word& v) {
          if (sigma.related(suffix(u, m), suffix(v, m))) out.emplace(u, v);
        });
      });
    } else {
      // u ρ^(k) v iff su σ tv for some s, t of length m - k.
      for (const auto& block : sigma.blocks()) {
        WordSet tails;
        for (const auto& w : block) tails.insert(suffix(w, k));
        for (const auto& u : tails)
          for (const auto& v : tails) out.emplace(u, v);
      }
    }
    return out;
  }
  if (auto* s = std::get_if<SpecialFromIdeal>(&repr)) {
    const Ideal& ideal = special_ideal(*s);
    // For u ≠ v of equal length every common suffix of xu and yv is a suffix of lcs(u, v).
    for_each_word(n, k, [&](const Word& u) {
      for_each_word(n, k, [&](const Word& v) {
        if (u == v || ideal.contains(lcs(u, v))) out.emplace(u, v);
      });
    });
    return out;
  }
  const auto& f = std::get<RuleFixture>(repr);
  if (!f.trace) throw Error("fixture " + f.name + " has no generator schema");
  return f.trace(k, depth);
}

RightCongruenceK rho_bracket_k(const CongruenceRepr& repr, std::size_t k, std::size_t depth) {
  return rc_closure(repr_alphabet(repr), k, rho_k(repr, k, depth));
}

bool is_transitive(const WordPairs& rel) {
  std::map<Word, std::vector<Word>> succ;
  for (const auto& [u, v] : rel) succ[u].push_back(v);
  for (const auto& [u, v] : rel) {
    auto it = succ.find(v);
    if (it == succ.end()) continue;
    for (const auto& w : it->second)
      if (!rel.count({u, w})) return false;
  }
  return true;
}

namespace {

WordSet complement_of(const Ideal& ideal) {
  if (ideal.is_cofinite_repr()) return ideal.excluded();
  auto c = ideal.finite_complement();
  if (!c) throw Error("infinite index: the ideal is not cofinite");
  return *c;
}

// The semaphore code of a cofinite τ_I: words of I whose proper suffixes lie outside I.
std::vector<Word> special_code(const Ideal& ideal, const WordSet& complement) {
  std::vector<Word> out;
  if (!complement.count(Word{})) return {Word{}};
  for (const auto& e : complement)
    for (std::size_t a = 0; a < ideal.alphabet().size(); ++a) {
      Word s{static_cast<Letter>(a)};
      s.insert(s.end(), e.begin(), e.end());
      if (!complement.count(s)) out.push_back(std::move(s));
    }
  std::sort(out.begin(), out.end(), ShortLex{});
  return out;
}

Word shortest_suffix_in(const Ideal& ideal, const Word& w) {
  for (std::size_t len = 0; len <= w.size(); ++len) {
    Word s = suffix(w, len);
    if (ideal.contains(s)) return s;
  }
  throw Error("no suffix in the ideal");
}

std::size_t code_vertex(const std::vector<Word>& code, const Word& s) {
  auto it = std::lower_bound(code.begin(), code.end(), s, ShortLex{});
  if (it == code.end() || *it != s) throw Error("internal: not a code word");
  return static_cast<std::size_t>(it - code.begin());
}

}  // namespace

AGraph cayley_graph(const CongruenceRepr& repr) {
  if (auto* h = std::get_if<HatLift>(&repr)) {
    const auto& sigma = h->sigma;
    const auto blocks = sigma.blocks();
    std::set<Edge> edges;
    std::vector<std::string> names;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      names.push_back(sigma.alphabet().format(blocks[b].front()));
      for (const auto& u : blocks[b])
        for (std::size_t a = 0; a < sigma.alphabet().size(); ++a) {
          auto l = static_cast<Letter>(a);
          edges.insert({b, l, sigma.block_of(sigma.act(u, l))});
        }
    }
    return AGraph(sigma.alphabet(), blocks.size(), {edges.begin(), edges.end()}, names);
  }
  if (auto* s = std::get_if<SpecialFromIdeal>(&repr)) {
    const Ideal& ideal = special_ideal(*s);
    const auto code = special_code(ideal, complement_of(ideal));
    std::vector<Edge> edges;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < code.size(); ++v) {
      names.push_back(ideal.alphabet().format(code[v]));
      for (std::size_t a = 0; a < ideal.alphabet().size(); ++a) {
        Word w = code[v];
        w.push_back(static_cast<Letter>(a));
        edges.push_back({v, static_cast<Letter>(a), code_vertex(code, shortest_suffix_in(ideal, w))});
      }
    }
    return AGraph(ideal.alphabet(), code.size(), edges, names);
  }
  throw Error("infinite index: fixture " + std::get<RuleFixture>(repr).name + " has no finite Cayley graph");
}

Vertex cayley_vertex(const CongruenceRepr& repr, const LeftInfiniteWord& x) {
  if (auto* h = std::get_if<HatLift>(&repr)) return h->sigma.block_of(x.xi(h->sigma.k()));
  if (auto* s = std::get_if<SpecialFromIdeal>(&repr)) {
    const Ideal& ideal = special_ideal(*s);
    const auto complement = complement_of(ideal);
    const auto code = special_code(ideal, complement);
    std::size_t longest = 0;
    for (const auto& w : code) longest = std::max(longest, w.size());
    return code_vertex(code, shortest_suffix_in(ideal, x.xi(longest)));
  }
  throw Error("infinite index");
}

namespace {

using PairSet = std::set<std::pair<Vertex, Vertex>>;

// {(p·a, p'·b) : p, p' ∈ Q, a ≠ b}
PairSet split_pairs(const AGraph& g) {
  PairSet out;
  const std::size_t n = g.alphabet().size();
  for (Vertex p = 0; p < g.vertex_count(); ++p)
    for (Vertex q = 0; q < g.vertex_count(); ++q)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (a != b) out.emplace(g.next(p, static_cast<Letter>(a)), g.next(q, static_cast<Letter>(b)));
  return out;
}

PairSet advance(const AGraph& g, const PairSet& s, Letter c) {
  PairSet out;
  for (auto [p, q] : s) out.emplace(g.next(p, c), g.next(q, c));
  return out;
}

bool has_diagonal(const PairSet& s) {
  return std::any_of(s.begin(), s.end(), [](const auto& pq) { return pq.first == pq.second; });
}

// lcs of the words labelling left-infinite paths into q, if at most cap long.
std::optional<Word> class_lcs(const AGraph& g, Vertex q, std::size_t cap) {
  std::set<Vertex> at{q};
  Word rev;
  const std::size_t n = g.alphabet().size();
  while (true) {
    std::set<Letter> letters;
    std::set<Vertex> before;
    for (Vertex p = 0; p < g.vertex_count(); ++p)
      for (std::size_t a = 0; a < n; ++a)
        if (at.count(g.next(p, static_cast<Letter>(a)))) {
          letters.insert(static_cast<Letter>(a));
          before.insert(p);
        }
    if (letters.size() != 1) break;
    if (rev.size() == cap) return std::nullopt;
    rev.push_back(*letters.begin());
    std::set<Vertex> next;
    for (Vertex p : before)
      if (at.count(g.next(p, rev.back()))) next.insert(p);
    at = std::move(next);
  }
  return reversed(rev);
}

}  // namespace

LambdaSets lambda_sets(const CongruenceRepr& repr, std::size_t cap) {
  const AGraph g = cayley_graph(repr);
  LambdaSets out;
  out.cap = cap;
  // With one letter A^{-ω} is a single point and every class is singular.
  if (g.alphabet().size() < 2) return out;
  for (Vertex q = 0; q < g.vertex_count(); ++q) {
    if (auto w = class_lcs(g, q, cap))
      out.lambda.insert(*w);
    else
      out.lcs_over_cap.push_back(q);
  }
  std::vector<std::pair<Word, PairSet>> level{{Word{}, split_pairs(g)}};
  for (std::size_t len = 0; len <= cap; ++len) {
    std::vector<std::pair<Word, PairSet>> next;
    for (auto& [w, s] : level) {
      if (has_diagonal(s)) out.lambda_prime.insert(w);
      if (len == cap) continue;
      for (std::size_t c = 0; c < g.alphabet().size(); ++c) {
        Word wc = w;
        wc.push_back(static_cast<Letter>(c));
        next.emplace_back(std::move(wc), advance(g, s, static_cast<Letter>(c)));
      }
    }
    level = std::move(next);
  }
  return out;
}

WordSet res_set(const CongruenceRepr& repr, std::size_t cap) {
  if (auto* s = std::get_if<SpecialFromIdeal>(&repr)) {
    const Ideal& ideal = special_ideal(*s);
    if (!ideal.is_cofinite_repr() && !ideal.finite_complement()) return members_upto(ideal, cap);
  }
  return reset_words_upto(cayley_graph(repr), cap);
}

namespace {

// Decides the path condition exactly by exploring (pairs, image) states.
bool paths_condition(const AGraph& g) {
  using State = std::pair<PairSet, std::set<Vertex>>;
  std::set<Vertex> all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) all.insert(v);
  std::set<State> seen;
  std::queue<State> work;
  State start{split_pairs(g), all};
  seen.insert(start);
  work.push(start);
  while (!work.empty()) {
    State st = work.front();
    work.pop();
    if (has_diagonal(st.first) && st.second.size() > 1) return false;
    for (std::size_t c = 0; c < g.alphabet().size(); ++c) {
      auto l = static_cast<Letter>(c);
      std::set<Vertex> img;
      for (Vertex v : st.second) img.insert(g.next(v, l));
      State nx{advance(g, st.first, l), std::move(img)};
      if (seen.insert(nx).second) work.push(std::move(nx));
    }
  }
  return true;
}

}  // namespace

Classification classify(const CongruenceRepr& repr, std::size_t cap, std::size_t max_k) {
  const AGraph g = cayley_graph(repr);
  Classification out;
  out.open = true;

  const auto lam = lambda_sets(repr, cap);
  out.special_lambda = Truth::yes;
  for (const auto& w : lam.lambda)
    if (!is_reset_word(g, w)) out.special_lambda = Truth::no;
  if (out.special_lambda == Truth::yes && !lam.lcs_over_cap.empty()) out.special_lambda = Truth::undetermined;

  out.special_paths = paths_condition(g) ? Truth::yes : Truth::no;
  if (out.special_lambda != Truth::undetermined && out.special_lambda != out.special_paths)
    throw Error("internal: special-congruence checks disagree");
  out.special = out.special_paths;

  std::vector<std::size_t> meet(g.vertex_count(), 0);
  for (std::size_t k = 1; k <= max_k; ++k) {
    const Partition part = mu_closure(g, k);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
    for (Vertex v = 0; v < g.vertex_count(); ++v) meet[v] = ids.emplace(std::make_pair(meet[v], part[v]), ids.size()).first->second;
    out.k_checked = k;
    if (ids.size() == g.vertex_count()) {
      out.profinite_to_k = true;
      break;
    }
  }
  return out;
}

std::pair<Ideal, Ideal> underline_overline(const CongruenceRepr& repr, std::size_t cap) {
  const Alphabet& alphabet = repr_alphabet(repr);
  const WordSet res = res_set(repr, cap);
  bool covers = true;
  for_each_word(alphabet.size(), cap, [&](const Word& w) { covers = covers && res.count(w); });
  if (!covers) throw Error("cap too small: Res(rho) is not generated within length " + std::to_string(cap));
  const auto lam = lambda_sets(repr, cap);
  if (!lam.lcs_over_cap.empty()) throw Error("cap too small: lcs longer than cap");
  Ideal lower = Ideal::generated(alphabet, Side::two_sided, {res.begin(), res.end()});
  Ideal upper = Ideal::generated(alphabet, Side::two_sided, {lam.lambda.begin(), lam.lambda.end()});
  return {std::move(lower), std::move(upper)};
}

RightCongruenceK read_partition(std::istream& in, const Alphabet& default_alphabet) {
  std::optional<std::size_t> k;
  std::optional<Alphabet> alphabet;
  std::vector<std::vector<std::string>> raw;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) { return Error("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    auto [key, value] = detail::split_key(text);
    if (key == "k") {
      if (k) throw fail("duplicate k");
      try {
        k = std::stoul(value);
      } catch (const std::exception&) {
        throw fail("k must be a number");
      }
    } else if (key == "alphabet") {
      if (alphabet) throw fail("duplicate alphabet");
      if (!raw.empty()) throw fail("alphabet must precede blocks");
      alphabet = Alphabet(detail::split_ws(value));
    } else if (key == "block") {
      raw.push_back(detail::split_ws(value));
    } else {
      throw fail(key.empty() ? "expected 'key: value'" : "unknown key '" + key + "'");
    }
  }
  if (!k) throw Error("partition file needs 'k:'");
  const Alphabet a = alphabet ? *alphabet : default_alphabet;
  std::vector<std::vector<Word>> blocks;
  for (const auto& fields : raw) {
    blocks.emplace_back();
    for (const auto& f : fields) blocks.back().push_back(a.parse(f));
  }
  return RightCongruenceK::from_blocks(a, *k, blocks);
}

void write_partition(std::ostream& out, const RightCongruenceK& sigma) {
  out << "k: " << sigma.k() << "\nalphabet:";
  for (const auto& n : sigma.alphabet().names()) out << ' ' << n;
  out << '\n';
  for (const auto& block : sigma.blocks()) {
    out << "block:";
    for (const auto& w : block) out << ' ' << sigma.alphabet().format(w);
    out << '\n';
  }
}

}  // namespace semacode
