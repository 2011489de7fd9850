#include "semacode/projective.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "text_util.hpp"

namespace semacode {

IdealSequence::IdealSequence(Alphabet alphabet, std::vector<Ideal> ideals)
    : alphabet_(std::move(alphabet)), ideals_(std::move(ideals)) {
  if (ideals_.empty()) throw Error("ideal sequence is empty");
  for (const auto& i : ideals_) {
    if (!(i.alphabet() == alphabet_)) throw Error("ideal sequence mixes alphabets");
    if (i.side() != Side::two_sided) throw Error("ideal sequence needs two-sided ideals");
  }
  meets_.push_back(ideals_.front());
  for (std::size_t k = 1; k < ideals_.size(); ++k) meets_.push_back(ideal_meet(meets_.back(), ideals_[k]));
  for (std::size_t k = 0; k < meets_.size(); ++k)
    if (meets_[k].empty()) throw Error("J_" + std::to_string(k + 1) + " is empty");
}

const Ideal& IdealSequence::ideal(std::size_t k) const {
  if (k == 0 || k > ideals_.size()) throw Error("level " + std::to_string(k) + " out of range");
  return ideals_[k - 1];
}

const Ideal& IdealSequence::meet(std::size_t k) const {
  if (k == 0 || k > meets_.size()) throw Error("level " + std::to_string(k) + " out of range");
  return meets_[k - 1];
}

CodeSet code_at(const IdealSequence& seq, std::size_t k, std::size_t cap) {
  return minimal_elements(seq.meet(k), cap, Order::suffix);
}

namespace {

Word shortest_suffix_in(const Ideal& ideal, const Word& w) {
  for (std::size_t len = 0; len <= w.size(); ++len) {
    Word s = suffix(w, len);
    if (ideal.contains(s)) return s;
  }
  throw Error("word has no suffix in the ideal");
}

bool in_code(const Ideal& ideal, const Word& u) {
  return ideal.contains(u) && (u.empty() || !ideal.contains(Word(u.begin() + 1, u.end())));
}

// Longest code word when the code is finite.
std::optional<std::size_t> code_bound(const Ideal& ideal) {
  auto c = ideal.is_cofinite_repr() ? std::optional<WordSet>(ideal.excluded()) : ideal.finite_complement();
  if (!c) return std::nullopt;
  std::size_t m = 0;
  for (const auto& w : *c) m = std::max(m, w.size() + 1);
  return m;
}

}  // namespace

Word phi(const IdealSequence& seq, std::size_t k, std::size_t m, const Word& u, std::size_t cap) {
  if (k < m) throw Error("phi needs k >= m");
  if (!in_code(seq.meet(k), u)) throw Error(seq.alphabet().format(u) + " is not in the code of level " + std::to_string(k));
  const CodeSet target = code_at(seq, m, cap);
  std::vector<Word> found;
  for (std::size_t len = 0; len <= u.size(); ++len) {
    Word s = suffix(u, len);
    if (target.count(s)) found.push_back(std::move(s));
  }
  if (found.empty()) throw Error("no suffix of " + seq.alphabet().format(u) + " in the level " + std::to_string(m) + " code within cap");
  if (found.size() > 1) throw Error("internal: code of level " + std::to_string(m) + " is not a suffix code");
  return found.front();
}

ProjectiveReport verify_projective_system(const IdealSequence& seq, std::size_t cap) {
  ProjectiveReport report;
  report.cap = cap;
  const auto& alphabet = seq.alphabet();
  const std::size_t levels = seq.size();
  std::vector<std::optional<CodeSet>> codes(levels + 1);
  for (std::size_t k = 1; k <= levels; ++k) {
    try {
      codes[k] = code_at(seq, k, cap);
    } catch (const Error& e) {
      report.unverified.push_back("level " + std::to_string(k) + ": " + e.what());
    }
  }
  auto map = [&](std::size_t m, const Word& u) { return shortest_suffix_in(seq.meet(m), u); };
  auto where = [&](std::size_t k, std::size_t m, const Word& u) {
    return "phi_" + std::to_string(k) + "," + std::to_string(m) + "(" + alphabet.format(u) + ")";
  };
  for (std::size_t k = 1; k <= levels; ++k) {
    if (!codes[k]) continue;
    for (std::size_t m = 1; m <= k; ++m) {
      if (!codes[m]) continue;
      ++report.maps_checked;
      std::set<Word> hit;
      for (const auto& u : *codes[k]) {
        const Word image = map(m, u);
        if (!codes[m]->count(image) && image.size() <= cap)
          report.violations.push_back(where(k, m, u) + " = " + alphabet.format(image) + " is not a code word");
        hit.insert(image);
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
          Word ua = u;
          ua.push_back(static_cast<Letter>(a));
          Word va = image;
          va.push_back(static_cast<Letter>(a));
          const Word left = map(m, shortest_suffix_in(seq.meet(k), ua));
          const Word right = shortest_suffix_in(seq.meet(m), va);
          if (left != right)
            report.violations.push_back(where(k, m, u) + " does not commute with the action of " +
                                        alphabet.name(static_cast<Letter>(a)));
        }
        for (std::size_t l = m; l <= k; ++l)
          if (map(m, map(l, u)) != image)
            report.violations.push_back(where(k, m, u) + " differs from the composite through level " +
                                        std::to_string(l));
      }
      const auto bound = code_bound(seq.meet(k));
      const bool complete = bound && *bound <= cap;
      for (const auto& s : *codes[m]) {
        if (hit.count(s)) continue;
        if (complete)
          report.violations.push_back("phi_" + std::to_string(k) + "," + std::to_string(m) + " misses " + alphabet.format(s));
        else
          report.unverified.push_back("phi_" + std::to_string(k) + "," + std::to_string(m) + ": " + alphabet.format(s) +
                                      " unverified at cap");
      }
    }
  }
  return report;
}

IdealSequence turing_sequence(const TuringMachine& t, std::size_t levels, const ResetDecider& decide) {
  std::vector<Ideal> ideals;
  for (std::size_t k = 1; k <= levels; ++k) ideals.push_back(reset_ideal_ell(t, ResetSide::right, k, decide));
  return IdealSequence(t.omega(), std::move(ideals));
}

IdealSequence read_sequence(std::istream& in, const Alphabet& default_alphabet) {
  // blank lines keep line numbers absolute inside each block
  std::vector<std::string> chunks(1);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line) == "---") {
      chunks.emplace_back(lineno, '\n');
      continue;
    }
    chunks.back() += line;
    chunks.back() += '\n';
  }
  std::vector<Ideal> ideals;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    std::istringstream part(chunks[i]);
    try {
      ideals.push_back(read_ideal(part, default_alphabet));
    } catch (const Error& e) {
      throw Error("level " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  Alphabet alphabet = ideals.front().alphabet();
  return IdealSequence(std::move(alphabet), std::move(ideals));
}

void write_sequence(std::ostream& out, const IdealSequence& seq) {
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    if (k > 1) out << "---\n";
    write_ideal(out, seq.ideal(k));
  }
}

}  // namespace semacode
