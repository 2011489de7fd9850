#include "semacode/ideal.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "text_util.hpp"

namespace semacode {

std::string to_string(Side side) {
  switch (side) {
    case Side::two_sided: return "two-sided";
    case Side::left: return "left";
    case Side::right: return "right";
  }
  return "?";
}

Side side_from_string(std::string_view text) {
  if (text == "two-sided") return Side::two_sided;
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw Error("unknown ideal side '" + std::string(text) + "'");
}

namespace {

bool divides(Side side, const Word& g, const Word& w) {
  switch (side) {
    case Side::two_sided: return is_factor(g, w);
    case Side::left: return suffix_leq(g, w);
    case Side::right: return prefix_leq(g, w);
  }
  return false;
}

void check_letters(const Alphabet& alphabet, const Word& w) {
  for (Letter x : w)
    if (x >= alphabet.size()) throw Error("word uses a letter outside the alphabet");
}

}  // namespace

void Ideal::normalize_generators(const std::vector<Word>& gens) {
  WordSet unique(gens.begin(), gens.end());
  for (const auto& g : unique) {
    check_letters(alphabet_, g);
    bool redundant = false;
    for (const auto& h : unique) {
      if (h.size() < g.size() && divides(side_, h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) generators_.insert(g);
  }
}

Ideal Ideal::generated(Alphabet alphabet, Side side, const std::vector<Word>& generators) {
  Ideal ideal(std::move(alphabet), side);
  ideal.normalize_generators(generators);
  return ideal;
}

Ideal Ideal::cofinite(Alphabet alphabet, Side side, WordSet excluded) {
  Ideal ideal(std::move(alphabet), side);
  for (const auto& w : excluded) {
    check_letters(ideal.alphabet_, w);
    if (w.empty()) continue;
    Word tail(w.begin() + 1, w.end());
    Word head(w.begin(), w.end() - 1);
    bool closed = true;
    if (side != Side::right && !excluded.count(tail)) closed = false;
    if (side != Side::left && !excluded.count(head)) closed = false;
    if (!closed) throw Error("complement of a " + to_string(side) + " ideal must be closed under the matching factors");
  }
  ideal.cofinite_ = true;
  ideal.excluded_ = std::move(excluded);
  ideal.compute_generators_from_complement();
  return ideal;
}

Ideal Ideal::all_of_length_at_least(Alphabet alphabet, std::size_t k) {
  WordSet excluded;
  for (auto& w : words_upto(alphabet.size(), k == 0 ? 0 : k - 1))
    if (w.size() < k) excluded.insert(std::move(w));
  if (k == 0) excluded.clear();
  return cofinite(std::move(alphabet), Side::two_sided, std::move(excluded));
}

void Ideal::compute_generators_from_complement() {
  generators_.clear();
  if (!excluded_.count(Word{})) {
    generators_.insert(Word{});
    return;
  }
  const auto n = alphabet_.size();
  for (const auto& z : excluded_) {
    for (std::size_t a = 0; a < n; ++a) {
      Word w;
      if (side_ == Side::right) {
        w = z;
        w.push_back(static_cast<Letter>(a));
      } else {
        w.push_back(static_cast<Letter>(a));
        w.insert(w.end(), z.begin(), z.end());
      }
      if (excluded_.count(w)) continue;
      if (side_ == Side::two_sided && !excluded_.count(Word(w.begin(), w.end() - 1))) continue;
      generators_.insert(w);
    }
  }
}

const WordSet& Ideal::generators() const {
  if (is_meet_repr()) throw Error("an intersection of ideals has no finite generator list");
  return generators_;
}

std::size_t Ideal::max_generator_length() const {
  std::size_t m = 0;
  if (is_meet_repr()) {
    for (const auto& p : parts_) m = std::max(m, p.max_generator_length());
    return m;
  }
  for (const auto& g : generators_) m = std::max(m, g.size());
  return m;
}

bool Ideal::contains(const Word& w) const {
  if (is_meet_repr())
    return std::all_of(parts_.begin(), parts_.end(), [&](const Ideal& p) { return p.contains(w); });
  if (cofinite_) return !excluded_.count(w);
  for (const auto& g : generators_)
    if (divides(side_, g, w)) return true;
  return false;
}

bool Ideal::empty() const {
  if (is_meet_repr())
    return std::any_of(parts_.begin(), parts_.end(), [](const Ideal& p) { return p.empty(); });
  return !cofinite_ && generators_.empty();
}

namespace {

void atoms_of(const Ideal& i, std::vector<const Ideal*>& out) {
  if (i.is_meet_repr()) {
    for (const auto& p : i.parts()) atoms_of(p, out);
  } else {
    out.push_back(&i);
  }
}

// Membership of every atom is a function of the last `window` letters, the
// length up to window + 1 and one sticky bit per atom, so inclusion reduces
// to reachability over these states.
bool included(const Ideal& x, const Ideal& y) {
  std::vector<const Ideal*> atoms;
  atoms_of(x, atoms);
  const std::size_t nx = atoms.size();
  atoms_of(y, atoms);
  std::size_t window = 1;
  for (const Ideal* a : atoms) {
    window = std::max(window, a->max_generator_length());
    if (a->is_cofinite_repr())
      for (const auto& z : a->excluded()) window = std::max(window, z.size() + 1);
  }
  struct State {
    Word tail;
    std::size_t len;
    std::vector<bool> in;
    auto operator<=>(const State&) const = default;
  };
  auto step = [&](const Ideal& a, const Word& tail, std::size_t len, bool prev) {
    if (len <= window) return a.contains(tail);
    if (a.is_cofinite_repr()) return true;
    switch (a.side()) {
      case Side::two_sided: return prev || a.contains(tail);
      case Side::left: return a.contains(tail);
      case Side::right: return prev;
    }
    return prev;
  };
  auto bad = [&](const State& s) {
    bool in_x = true, in_y = true;
    for (std::size_t i = 0; i < nx; ++i) in_x = in_x && s.in[i];
    for (std::size_t i = nx; i < atoms.size(); ++i) in_y = in_y && s.in[i];
    return in_x && !in_y;
  };
  State start{Word{}, 0, std::vector<bool>(atoms.size())};
  for (std::size_t i = 0; i < atoms.size(); ++i) start.in[i] = atoms[i]->contains(Word{});
  std::set<State> seen{start};
  std::vector<State> todo{start};
  const auto n = x.alphabet().size();
  while (!todo.empty()) {
    State s = std::move(todo.back());
    todo.pop_back();
    if (bad(s)) return false;
    for (std::size_t a = 0; a < n; ++a) {
      State t{s.tail, std::min(s.len + 1, window + 1), s.in};
      t.tail.push_back(static_cast<Letter>(a));
      if (t.tail.size() > window) t.tail.erase(t.tail.begin());
      for (std::size_t i = 0; i < atoms.size(); ++i) t.in[i] = step(*atoms[i], t.tail, t.len, s.in[i]);
      if (seen.insert(t).second) todo.push_back(std::move(t));
    }
  }
  return true;
}

}  // namespace

bool Ideal::subset_of(const Ideal& other) const {
  if (!(alphabet_ == other.alphabet_)) throw Error("ideals over different alphabets");
  if (!is_meet_repr() && !other.is_meet_repr() && other.side_ == side_ && !cofinite_)
    return std::all_of(generators_.begin(), generators_.end(), [&](const Word& g) { return other.contains(g); });
  return included(*this, other);
}

bool Ideal::operator==(const Ideal& other) const {
  if (!(alphabet_ == other.alphabet_)) return false;
  if (side_ == other.side_ && !is_meet_repr() && !other.is_meet_repr()) return generators_ == other.generators_;
  return subset_of(other) && other.subset_of(*this);
}

std::optional<WordSet> Ideal::finite_complement() const {
  if (cofinite_) return excluded_;
  if (is_meet_repr()) {
    WordSet out;
    for (const auto& p : parts_) {
      auto c = p.finite_complement();
      if (!c) return std::nullopt;
      out.insert(c->begin(), c->end());
    }
    return out;
  }
  const auto n = alphabet_.size();
  if (generators_.empty()) return std::nullopt;
  const std::size_t m = max_generator_length();
  if (side_ == Side::two_sided && m > 0) {
    // cycle detection among non-member words of length m - 1
    std::vector<Word> states;
    for_each_word(n, m - 1, [&](const Word& w) {
      if (!contains(w)) states.push_back(w);
    });
    std::map<Word, int> color;  // 0 white, 1 grey, 2 black
    std::function<bool(const Word&)> has_cycle = [&](const Word& s) {
      color[s] = 1;
      for (std::size_t a = 0; a < n; ++a) {
        Word sa = s;
        sa.push_back(static_cast<Letter>(a));
        if (contains(sa)) continue;
        Word t = suffix(sa, m - 1);
        int c = color[t];
        if (c == 1) return true;
        if (c == 0 && has_cycle(t)) return true;
      }
      color[s] = 2;
      return false;
    };
    for (const auto& s : states)
      if (color[s] == 0 && has_cycle(s)) return std::nullopt;
  }
  // breadth-first extension of non-members; prefix extension for two-sided
  // and right ideals, suffix extension for left ideals
  WordSet complement;
  std::vector<Word> level;
  if (!contains(Word{})) level.push_back(Word{});
  std::size_t len = 0;
  while (!level.empty()) {
    if (side_ != Side::two_sided && len > m) return std::nullopt;
    std::vector<Word> next;
    for (const auto& z : level) {
      complement.insert(z);
      for (std::size_t a = 0; a < n; ++a) {
        Word w;
        if (side_ == Side::left) {
          w.push_back(static_cast<Letter>(a));
          w.insert(w.end(), z.begin(), z.end());
        } else {
          w = z;
          w.push_back(static_cast<Letter>(a));
        }
        if (!contains(w)) next.push_back(std::move(w));
      }
    }
    level = std::move(next);
    ++len;
  }
  return complement;
}

CodeSet minimal_elements(const Ideal& ideal, std::size_t cap, Order order) {
  if (order == Order::suffix && ideal.side() == Side::right)
    throw Error("suffix-minimal elements need a two-sided or left ideal");
  if (order == Order::prefix && ideal.side() == Side::left)
    throw Error("prefix-minimal elements need a two-sided or right ideal");
  if (!ideal.is_meet_repr() && cap < ideal.max_generator_length()) throw Error("cap too small");
  CodeSet out;
  if (ideal.contains(Word{})) {
    out.insert(Word{});
    return out;
  }
  const auto n = ideal.alphabet().size();
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= cap && !level.empty(); ++len) {
    std::vector<Word> next;
    for (const auto& z : level) {
      for (std::size_t a = 0; a < n; ++a) {
        Word w;
        if (order == Order::suffix) {
          w.reserve(z.size() + 1);
          w.push_back(static_cast<Letter>(a));
          w.insert(w.end(), z.begin(), z.end());
        } else {
          w = z;
          w.push_back(static_cast<Letter>(a));
        }
        if (ideal.contains(w))
          out.insert(std::move(w));
        else
          next.push_back(std::move(w));
      }
    }
    level = std::move(next);
  }
  return out;
}

namespace {

// All words covered exactly by an occurrence of g and an occurrence of h.
void merges(const Word& g, const Word& h, std::vector<Word>& out) {
  const auto lg = static_cast<std::ptrdiff_t>(g.size());
  const auto lh = static_cast<std::ptrdiff_t>(h.size());
  for (std::ptrdiff_t d = -lh; d <= lg; ++d) {
    const std::ptrdiff_t lo = std::min<std::ptrdiff_t>(0, d);
    const std::ptrdiff_t hi = std::max(lg, d + lh);
    Word w(static_cast<std::size_t>(hi - lo));
    bool ok = true;
    for (std::ptrdiff_t i = 0; i < lg; ++i) w[static_cast<std::size_t>(i - lo)] = g[static_cast<std::size_t>(i)];
    for (std::ptrdiff_t i = 0; i < lh && ok; ++i) {
      const std::ptrdiff_t pos = d + i;
      if (pos >= 0 && pos < lg && g[static_cast<std::size_t>(pos)] != h[static_cast<std::size_t>(i)]) ok = false;
      w[static_cast<std::size_t>(pos - lo)] = h[static_cast<std::size_t>(i)];
    }
    if (ok) out.push_back(std::move(w));
  }
}

void check_compatible(const Ideal& i, const Ideal& j) {
  if (!(i.alphabet() == j.alphabet())) throw Error("ideals over different alphabets");
  if (i.side() != j.side()) throw Error("side mismatch");
}

}  // namespace

namespace {

// Exact meet of two ideals that are not intersections, or nullopt when the
// result is not finitely generated.
std::optional<Ideal> atomic_meet(const Ideal& i, const Ideal& j) {
  if (i.is_cofinite_repr() && j.is_cofinite_repr()) {
    WordSet excluded = i.excluded();
    excluded.insert(j.excluded().begin(), j.excluded().end());
    return Ideal::cofinite(i.alphabet(), i.side(), std::move(excluded));
  }
  std::vector<Word> gens;
  for (const auto& g : i.generators()) {
    for (const auto& h : j.generators()) {
      switch (i.side()) {
        case Side::two_sided: break;
        case Side::left:
          if (suffix_leq(g, h)) gens.push_back(h);
          else if (suffix_leq(h, g)) gens.push_back(g);
          break;
        case Side::right:
          if (prefix_leq(g, h)) gens.push_back(h);
          else if (prefix_leq(h, g)) gens.push_back(g);
          break;
      }
    }
  }
  if (i.side() != Side::two_sided) return Ideal::generated(i.alphabet(), i.side(), gens);
  const auto ci = i.finite_complement();
  const auto cj = j.finite_complement();
  if (ci && cj) {
    WordSet excluded = *ci;
    excluded.insert(cj->begin(), cj->end());
    return Ideal::cofinite(i.alphabet(), i.side(), std::move(excluded));
  }
  return std::nullopt;
}

}  // namespace

Ideal ideal_meet(const Ideal& i, const Ideal& j) {
  check_compatible(i, j);
  std::vector<const Ideal*> atoms;
  atoms_of(i, atoms);
  atoms_of(j, atoms);
  std::vector<Ideal> parts;
  for (const Ideal* a : atoms) {
    Ideal cur = *a;
    for (auto it = parts.begin(); it != parts.end();) {
      if (auto m = atomic_meet(*it, cur)) {
        cur = std::move(*m);
        it = parts.erase(it);
      } else {
        ++it;
      }
    }
    parts.push_back(std::move(cur));
  }
  if (parts.size() == 1) return std::move(parts.front());
  // a finitely generated meet is generated by the overlaps of its parts
  Ideal merged = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::vector<Word> gens;
    for (const auto& g : merged.generators())
      for (const auto& h : parts[k].generators()) merges(g, h, gens);
    merged = Ideal::generated(i.alphabet(), i.side(), gens);
  }
  Ideal out(i.alphabet(), i.side());
  out.parts_ = std::move(parts);
  if (out.subset_of(merged)) return merged;
  return out;
}

Ideal ideal_join(const Ideal& i, const Ideal& j) {
  check_compatible(i, j);
  if (i.is_meet_repr() || j.is_meet_repr()) {
    // (∩ P) ∪ (∩ Q) = ∩ (P ∪ Q)
    std::vector<const Ideal*> pi, pj;
    atoms_of(i, pi);
    atoms_of(j, pj);
    std::optional<Ideal> out;
    for (const Ideal* p : pi)
      for (const Ideal* q : pj) {
        Ideal u = ideal_join(*p, *q);
        out = out ? ideal_meet(*out, u) : u;
      }
    return *out;
  }
  if (i.is_cofinite_repr() || j.is_cofinite_repr()) {
    const Ideal& c = i.is_cofinite_repr() ? i : j;
    const Ideal& other = i.is_cofinite_repr() ? j : i;
    WordSet excluded;
    for (const auto& z : c.excluded())
      if (!other.contains(z)) excluded.insert(z);
    return Ideal::cofinite(i.alphabet(), i.side(), std::move(excluded));
  }
  std::vector<Word> gens(i.generators().begin(), i.generators().end());
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return Ideal::generated(i.alphabet(), i.side(), gens);
}

WordSet members_upto(const Ideal& ideal, std::size_t cap) {
  WordSet out;
  for (auto& w : words_upto(ideal.alphabet().size(), cap))
    if (ideal.contains(w)) out.insert(std::move(w));
  return out;
}

Ideal read_ideal(std::istream& in, const Alphabet& default_alphabet) {
  std::optional<Side> side;
  Alphabet alphabet = default_alphabet;
  bool complement = false;
  std::vector<std::pair<std::size_t, std::string>> words;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (!side) {
      auto [key, value] = detail::split_key(text);
      if (key != "side") throw Error(where() + "expected 'side:' header");
      side = side_from_string(detail::trim(value));
      continue;
    }
    if (text.rfind("alphabet:", 0) == 0) {
      if (!words.empty() || complement) throw Error(where() + "alphabet must precede the words");
      alphabet = Alphabet(detail::split_ws(text.substr(9)));
      continue;
    }
    if (text == "complement:") {
      if (!words.empty()) throw Error(where() + "complement must precede the words");
      complement = true;
      continue;
    }
    words.emplace_back(lineno, std::string(text));
  }
  if (!side) throw Error("missing 'side:' header");
  std::vector<Word> parsed;
  for (const auto& [no, text] : words) {
    try {
      parsed.push_back(alphabet.parse(text));
    } catch (const Error& e) {
      throw Error("line " + std::to_string(no) + ": " + e.what());
    }
  }
  if (complement) return Ideal::cofinite(alphabet, *side, WordSet(parsed.begin(), parsed.end()));
  return Ideal::generated(alphabet, *side, parsed);
}

void write_ideal(std::ostream& out, const Ideal& ideal) {
  if (ideal.is_meet_repr()) throw Error("an intersection of ideals cannot be written as an ideal file");
  out << "side: " << to_string(ideal.side()) << '\n';
  out << "alphabet:";
  for (const auto& n : ideal.alphabet().names()) out << ' ' << n;
  out << '\n';
  if (ideal.is_cofinite_repr()) {
    out << "complement:\n";
    write_words(out, ideal.alphabet(), ideal.excluded());
  } else {
    write_words(out, ideal.alphabet(), ideal.generators());
  }
}

void write_words(std::ostream& out, const Alphabet& alphabet, const WordSet& words) {
  for (const auto& w : words) out << alphabet.format(w) << '\n';
}

WordSet read_words(std::istream& in, const Alphabet& alphabet) {
  WordSet out;
  std::string line;
  while (std::getline(in, line)) {
    auto text = detail::trim(line);
    if (text.empty()) continue;
    out.insert(alphabet.parse(text));
  }
  return out;
}

}  // namespace semacode
