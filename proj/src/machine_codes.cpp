#include "semacode/machine_codes.hpp"

namespace semacode {

ResetDecider decider_from_oracle(const ClosedFormOracle& oracle, ResetSide side) {
  return [oracle, side](const Word& w) -> std::optional<bool> { return !oracle.nonreset(side, w); };
}

ResetDecider decider_from_search(const TuringMachine& t, ResetSide side, const SearchBounds& bounds,
                                 const ClosedFormOracle* oracle) {
  std::optional<ClosedFormOracle> copy;
  if (oracle) copy = *oracle;
  return [t, side, bounds, copy](const Word& w) -> std::optional<bool> {
    auto v = is_reset_bounded(side, t, w, bounds, copy ? &*copy : nullptr);
    if (v.kind == ResetVerdict::Kind::non_reset) return false;
    if (v.kind == ResetVerdict::Kind::reset) return true;
    return std::nullopt;
  };
}

namespace {

bool settle(const ResetDecider& decide, const Word& w, const Alphabet& omega) {
  auto d = decide(w);
  if (!d) throw Error("oracle insufficient: cannot decide " + omega.format(w));
  return *d;
}

Word drop_first(const Word& w) { return Word(w.begin() + 1, w.end()); }
Word drop_last(const Word& w) { return Word(w.begin(), w.end() - 1); }

bool all_plain_blank(const TuringMachine& t, const Word& w) {
  for (Letter s : w)
    if (s != t.blank()) return false;
  return true;
}

CodeSet code_ell(const TuringMachine& t, std::size_t ell, const ResetDecider& decide, bool right) {
  const auto& omega = t.omega();
  CodeSet out;
  if (ell == 0 || settle(decide, Word{}, omega)) {
    out.insert(Word{});
    return out;
  }
  const auto n = t.omega_size();
  for (std::size_t len = 1; len < ell; ++len) {
    for_each_word(n, len, [&](const Word& w) {
      const Word rest = right ? drop_first(w) : drop_last(w);
      if (settle(decide, w, omega) && !settle(decide, rest, omega)) out.insert(w);
    });
  }
  for_each_word(n, ell - 1, [&](const Word& z) {
    if (settle(decide, z, omega)) return;
    for (std::size_t a = 0; a < n; ++a) {
      Word w;
      if (right) {
        w.push_back(static_cast<Letter>(a));
        w.insert(w.end(), z.begin(), z.end());
      } else {
        w = z;
        w.push_back(static_cast<Letter>(a));
      }
      out.insert(std::move(w));
    }
  });
  return out;
}

}  // namespace

bool rres_ell_membership(const Word& w, std::size_t ell, const ResetDecider& decide) {
  if (w.size() >= ell) return true;
  auto d = decide(w);
  if (!d) throw Error("oracle insufficient");
  return *d;
}

Ideal reset_ideal_ell(const TuringMachine& t, ResetSide, std::size_t ell, const ResetDecider& decide) {
  WordSet excluded;
  if (ell > 0) {
    for (auto& w : words_upto(t.omega_size(), ell - 1))
      if (!settle(decide, w, t.omega())) excluded.insert(std::move(w));
  }
  return Ideal::cofinite(t.omega(), Side::two_sided, std::move(excluded));
}

CodeSet rsc_ell(const TuringMachine& t, std::size_t ell, const ResetDecider& decide) {
  return code_ell(t, ell, decide, true);
}

CodeSet lsc_ell(const TuringMachine& t, std::size_t ell, const ResetDecider& decide) {
  return code_ell(t, ell, decide, false);
}

Word right_code_suffix(const TuringMachine& t, const Word& u, const ResetDecider& right) {
  if (all_plain_blank(t, u)) return Word{};
  Word bu{t.blank()};
  bu.insert(bu.end(), u.begin(), u.end());
  for (std::size_t k = 0; k <= bu.size(); ++k) {
    Word s = suffix(bu, k);
    if (settle(right, s, t.omega())) return s;
  }
  throw Error("no right reset suffix of " + t.omega().format(bu));
}

Word left_code_prefix(const TuringMachine& t, const Word& v, const ResetDecider& left) {
  if (all_plain_blank(t, v)) return Word{};
  Word vb = v;
  vb.push_back(t.blank());
  for (std::size_t k = 0; k <= vb.size(); ++k) {
    Word p(vb.begin(), vb.begin() + static_cast<std::ptrdiff_t>(k));
    if (settle(left, p, t.omega())) return p;
  }
  throw Error("no left reset prefix of " + t.omega().format(vb));
}

std::optional<Letter> output_function(const TuringMachine& t, const Word& r, Letter x, const Word& rp,
                                      std::size_t max_steps, const ResetDecider& right, const ResetDecider& left) {
  const auto& omega = t.omega();
  if (!r.empty() && !(settle(right, r, omega) && !settle(right, drop_first(r), omega)))
    throw Error(omega.format(r) + " is not in RSC(T)");
  if (!rp.empty() && !(settle(left, rp, omega) && !settle(left, drop_last(rp), omega)))
    throw Error(omega.format(rp) + " is not in LSC(T)");
  return beta_omega_tracked(t, r, x, rp, max_steps);
}

std::optional<Letter> beta_omega_via_output(const TuringMachine& t, const Word& u, Letter x, const Word& v,
                                            std::size_t max_steps, const ResetDecider& right,
                                            const ResetDecider& left) {
  Word w = u;
  w.push_back(x);
  w.insert(w.end(), v.begin(), v.end());
  if (!is_legal(t, w)) return std::nullopt;
  const Word r = right_code_suffix(t, u, right);
  const Word rp = left_code_prefix(t, v, left);
  return output_function(t, r, x, rp, max_steps, right, left);
}

}  // namespace semacode
