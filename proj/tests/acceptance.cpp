#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <mutex>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "semacode/anbn.hpp"
#include "semacode/congruence.hpp"
#include "semacode/machine_codes.hpp"
#include "semacode/projective.hpp"

using namespace semacode;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const TuringMachine& machine() {
  static const TuringMachine t = example_machine();
  return t;
}

Word omega_word(const std::string& s) { return machine().omega().parse(s); }

std::string repeat(const std::string& letter, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += letter + " ";
  return out;
}

// Words over {b, Y} with exactly `bs` b's and at most `ys` Y's.
std::vector<std::string> b_y_words(std::size_t bs, std::size_t ys) {
  std::vector<std::string> out;
  for (std::size_t y = 0; y <= ys; ++y) {
    const std::size_t len = bs + y;
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != bs) continue;
      std::string w;
      for (std::size_t i = 0; i < len; ++i) w += (mask >> i & 1) ? "b " : "Y ";
      out.push_back(w);
    }
  }
  return out;
}

// ---- 1: the machine accepts a^n b^n ----

void accepts_anbn() {
  const auto& t = machine();
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t inputs = 0, wrong = 0, accepted = 0;
  for (std::size_t len = 0; len <= 10; ++len)
    for_each_word(2, len, [&](const Word& input) {
      ++inputs;
      std::string s;
      for (Letter x : input) s += x == 0 ? 'a' : 'b';
      const std::size_t n = s.size() / 2;
      const bool in_l = n >= 1 && s == std::string(n, 'a') + std::string(n, 'b');
      Tape tape(t, initial_configuration(t, input));
      tape.run(1000000);
      const bool final = tape.halted() && tape.has_head() && t.is_final(tape.state());
      if (final) ++accepted;
      if (final != in_l) ++wrong;
    });
  const double dt = seconds_since(t0);
  std::ostringstream msg;
  msg << "a^n b^n acceptance over " << inputs << " inputs of length <= 10: " << accepted << " accepted, " << wrong
      << " wrong, " << dt << " s";
  report(1, wrong == 0 && accepted == 5 && dt < 5.0, msg.str());
}

}  // namespace

namespace {

// ---- 2: witness families for the non-resets ----

struct FamilyTally {
  std::size_t instances = 0;
  std::size_t exact = 0;      // left value exactly Y, right value exactly b
  std::size_t decorated = 0;  // left value Y carrying the halted head
  std::size_t broken = 0;
};

// β^(ω)(left·word, b, 1) against β^(ω)(word, b, 1).
void witness_instance(FamilyTally& tally, const std::string& left, const std::string& word) {
  const auto& t = machine();
  const auto& om = t.omega();
  const Letter b = om.index("b");
  const Letter y = om.index("Y");
  ++tally.instances;
  const auto lhs = beta_omega_tracked(t, concat(omega_word(left), omega_word(word)), b, Word{}, 1000000);
  const auto rhs = beta_omega_tracked(t, omega_word(word), b, Word{}, 1000000);
  if (!lhs || !rhs || *rhs != b || t.tape_of(*lhs) != y) {
    ++tally.broken;
    std::cout << "  witness broken: [" << left << "] . [" << word << "] -> " << (lhs ? om.name(*lhs) : "illegal")
              << " | " << (rhs ? om.name(*rhs) : "illegal") << "\n";
  } else if (*lhs == y) {
    ++tally.exact;
  } else {
    ++tally.decorated;
  }
}

void witness_families() {
  std::vector<FamilyTally> tallies(4);
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n) {
      for (const auto& u : b_y_words(n, 1))
        witness_instance(tallies[0], "a@q0 " + repeat("a", n), repeat("a", m) + u);
      for (std::size_t k = 0; k <= 2; ++k)
        for (const auto& u : b_y_words(k, 1)) {
          for (const char* q : {"q1", "q3", "q4"})
            witness_instance(tallies[1], "X " + repeat("a", k + 1),
                             repeat("a", m) + "a@" + q + " " + repeat("a", n) + u + "b");
          for (const char* q : {"q1", "q2"})
            witness_instance(tallies[2], "X " + repeat("a", k + 1),
                             repeat("a", m) + repeat("Y", n) + "b@" + q + " " + u);
          for (const char* q : {"q1", "q2", "q3"})
            witness_instance(tallies[3], "X " + repeat("a", k + 2), repeat("a", m) + repeat("Y", n) + "Y@" + q + " " + u + "b");
        }
    }
  bool ok = true;
  std::ostringstream msg;
  msg << "witness families (instances/exact Y/Y under the final head)";
  for (std::size_t f = 0; f < 4; ++f) {
    const auto& t = tallies[f];
    ok = ok && t.broken == 0 && t.exact >= 3;
    msg << (f ? "; " : " ") << "family " << f + 1 << " " << t.instances << "/" << t.exact << "/" << t.decorated;
  }
  report(2, ok, msg.str());
}

}  // namespace

namespace {

// ---- 3: bounded search against the closed form ----

void search_vs_closed_form() {
  const auto& t = machine();
  const SearchBounds bounds{4, 200};
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream msg;
  for (ResetSide side : {ResetSide::right, ResetSide::left}) {
    std::size_t words = 0, oracle_true = 0, found = 0, false_witness = 0, bad_replay = 0;
    for (std::size_t len = 0; len <= 3; ++len)
      for_each_word(t.omega_size(), len, [&](const Word& w) {
        ++words;
        const bool nonreset = example_nonreset_oracle(t, w);
        const bool legal = is_legal(t, w);
        if (nonreset && legal) ++oracle_true;
        const auto verdict = is_reset_bounded(side, t, w, bounds);
        if (verdict.kind != ResetVerdict::Kind::non_reset) {
          if (nonreset && legal)
            std::cout << "  unknown (" << (side == ResetSide::right ? "right" : "left") << ", ctx 4, n_max 200): "
                      << t.omega().format(w) << "\n";
          return;
        }
        if (!nonreset) ++false_witness;
        if (!verdict.witness || !replay_witness(t, w, *verdict.witness)) ++bad_replay;
        if (nonreset && legal) ++found;
      });
    const double coverage = oracle_true ? static_cast<double>(found) / static_cast<double>(oracle_true) : 1.0;
    ok = ok && false_witness == 0 && bad_replay == 0 && coverage >= 0.9;
    msg << (side == ResetSide::right ? "right" : "; left") << ": " << words << " words, " << found << "/" << oracle_true
        << " non-resets found, " << false_witness << " disagreements, " << bad_replay << " bad replays";
  }
  msg << ", " << seconds_since(t0) << " s";
  report(3, ok, msg.str());
}

}  // namespace

namespace {

// ---- 4: RSC_ℓ and LSC_ℓ ----

void semaphore_identities() {
  const auto& t = machine();
  const auto oracle = example_oracle(t);
  const SearchBounds bounds{4, 200};
  const auto right = decider_from_search(t, ResetSide::right, bounds, &oracle);
  const auto left = decider_from_search(t, ResetSide::left, bounds, &oracle);
  bool ok = true;
  std::ostringstream msg;
  msg << "code sizes";
  for (std::size_t ell = 1; ell <= 3; ++ell) {
    const Ideal rres = reset_ideal_ell(t, ResetSide::right, ell, right);
    const Ideal lres = reset_ideal_ell(t, ResetSide::left, ell, left);
    const CodeSet rsc = rsc_ell(t, ell, right);
    const CodeSet lsc = lsc_ell(t, ell, left);
    const bool semaphore = is_semaphore_code(rsc, t.omega());
    const bool r_min = rsc == minimal_elements(rres, ell, Order::suffix);
    const bool l_min = lsc == minimal_elements(lres, ell, Order::prefix);
    const bool sides = rres == lres;
    if (!semaphore || !r_min || !l_min || !sides)
      std::cout << "  ell " << ell << ": semaphore " << semaphore << ", rsc minimal " << r_min << ", lsc minimal "
                << l_min << ", LRes == RRes " << sides << "\n";
    ok = ok && semaphore && r_min && l_min && sides;
    msg << " l=" << ell << ":" << rsc.size() << "/" << lsc.size();
  }
  report(4, ok, "RSC_l semaphore, RSC_l/LSC_l minimal in RRes_l/LRes_l, LRes_l == RRes_l for l <= 3; " + msg.str());
}

}  // namespace

namespace {

// ---- 5: β^(ω) through the output function ----

// Legal words of length n: blank border runs around a nonblank block, and at
// most one head inside the block or on a blank next to it (anywhere when the
// word is all blank).
void for_each_legal_word(std::size_t n, const std::function<void(const Word&)>& fn, std::size_t only_start = SIZE_MAX) {
  const auto& t = machine();
  std::vector<Letter> nonblank;
  for (Letter x = 0; x < t.gamma_size(); ++x)
    if (x != t.blank()) nonblank.push_back(x);
  for (std::size_t s = 0; s <= n; ++s)
    for (std::size_t e = s; e <= n; ++e) {
      if (s == e && s > 0) continue;
      if (only_start != SIZE_MAX && s != only_start) continue;
      const std::size_t len = e - s;
      std::vector<std::ptrdiff_t> heads{-1};
      for (std::size_t h = 0; h < n; ++h)
        if (len == 0 || (h >= s && h < e) || h + 1 == s || h == e) heads.push_back(static_cast<std::ptrdiff_t>(h));
      std::size_t combos = 1;
      for (std::size_t i = 0; i < len; ++i) combos *= nonblank.size();
      for (std::size_t c = 0; c < combos; ++c) {
        Word base(n, t.blank());
        for (std::size_t i = s, cc = c; i < e; ++i, cc /= nonblank.size()) base[i] = nonblank[cc % nonblank.size()];
        for (auto h : heads) {
          if (h < 0) {
            fn(base);
            continue;
          }
          for (State q = 0; q < t.states().size(); ++q) {
            Word w = base;
            w[static_cast<std::size_t>(h)] = t.with_head(w[static_cast<std::size_t>(h)], q);
            fn(w);
          }
        }
      }
    }
}

// The enumeration above against a filter of all Ω-words, for short lengths.
bool legal_enumeration_complete(std::size_t max_n) {
  const auto& t = machine();
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::set<Word> listed, filtered;
    for_each_legal_word(n, [&](const Word& w) { listed.insert(w); });
    for_each_word(t.omega_size(), n, [&](const Word& w) {
      if (is_legal(t, w)) filtered.insert(w);
    });
    if (listed != filtered) return false;
  }
  return true;
}

void output_function_cross_check() {
  const auto& t = machine();
  const std::size_t side = 4;
  const auto oracle = example_oracle(t);
  const auto right = decider_from_oracle(oracle, ResetSide::right);
  const auto left = decider_from_oracle(oracle, ResetSide::left);
  const auto t0 = std::chrono::steady_clock::now();
  const bool complete = legal_enumeration_complete(3);
  std::atomic<std::size_t> triples = 0, mismatches = 0, running = 0;
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t n = 1; n <= 2 * side + 1; ++n)
    for (std::size_t s = 0; s <= n; ++s) jobs.emplace_back(n, s);
  std::atomic<std::size_t> next = 0;
  std::mutex out;
  auto work = [&] {
    for (std::size_t j; (j = next++) < jobs.size();) {
      const auto [n, s] = jobs[j];
      std::size_t local = 0;
      for_each_legal_word(
          n,
          [&](const Word& w) {
            Tape tape(t, w);
            tape.run(1000000);
            if (!tape.halted()) ++running;
            for (std::size_t p = 0; p < n; ++p) {
              if (p > side || n - 1 - p > side) continue;
              ++local;
              const Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
              const Word v(w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end());
              const auto via = beta_omega_via_output(t, u, w[p], v, 1000000, right, left);
              if (!via || *via != tape.symbol_at(static_cast<std::ptrdiff_t>(p))) {
                std::lock_guard<std::mutex> lock(out);
                if (mismatches++ < 5) std::cout << "  mismatch at " << t.omega().format(w) << " position " << p << "\n";
              }
            }
          },
          s);
      triples += local;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < std::max(1u, std::thread::hardware_concurrency()); ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  std::ostringstream msg;
  msg << "beta_omega_via_output equals direct beta^omega on " << triples << " legal triples with |u|,|v| <= " << side
      << ": " << mismatches << " mismatches, enumeration complete " << (complete ? "yes" : "no") << ", "
      << seconds_since(t0) << " s";
  report(5, complete && mismatches == 0 && running == 0, msg.str());
}

}  // namespace

namespace {

const Alphabet kAb = Alphabet::binary();

Word ab(const std::string& s) { return kAb.parse(s); }

// ---- 6: the two worked hat-lifts ----

void worked_hat_lifts() {
  const auto fixtures = examples_fixtures();
  const auto& notsp = fixtures.at("newnotsp");
  const auto c = classify(notsp, 6, 6);
  const auto lambda = lambda_sets(notsp, 6).lambda;
  const bool notsp_ok = c.special == Truth::no && lambda.count(ab("a")) && lambda.count(ab("bba")) &&
                        !is_suffix_code(WordSet{ab("a"), ab("bba")});

  const auto& cer = fixtures.at("newcer");
  const WordSet res2 = res_set(cer, 2);
  const auto [under, over] = underline_overline(cer, 6);
  WordSet over_expect;
  for (std::size_t len = 0; len <= 2; ++len)
    for_each_word(2, len, [&](const Word& w) { over_expect.insert(w); });
  for (const char* w : {"", "b", "bb"}) over_expect.erase(ab(w));
  const Ideal mid = ideal_join(Ideal::all_of_length_at_least(kAb, 3),
                               Ideal::generated(kAb, Side::two_sided, {ab("aa"), ab("ab"), ab("ba")}));
  const bool chain = under.subset_of(mid) && !mid.subset_of(under) && mid.subset_of(over) && !over.subset_of(mid);
  const bool cer_ok = res2 == WordSet{ab("aa"), ab("ab")} && members_upto(over, 2) == over_expect && chain;

  std::ostringstream msg;
  msg << "newnotsp special " << to_string(c.special) << " with a, bba in Lambda; newcer Res<=2 = {aa, ab}, "
      << "overline<=2 = A<=2 minus {e, b, bb}, strict chain " << (chain ? "holds" : "fails");
  report(6, notsp_ok && cer_ok, msg.str());
}

// ---- 7: notr and cnp ----

void rule_fixtures() {
  const auto fixtures = examples_fixtures();
  const auto rel = rho_k(fixtures.at("notr"), 2, 64);
  const bool notr_ok = rel.count({ab("aa"), ab("ba")}) && rel.count({ab("ba"), ab("bb")}) &&
                       !rel.count({ab("aa"), ab("bb")}) && !is_transitive(rel);
  bool cnp_ok = true;
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto chain = colex_chain(k, kAb);
    const auto trace = rho_k(fixtures.at("cnp"), k, 64);
    for (std::size_t i = 1; i < chain.size(); ++i) cnp_ok = cnp_ok && trace.count({chain[i - 1], chain[i]});
    const auto bracket = rho_bracket_k(fixtures.at("cnp"), k, 64);
    cnp_ok = cnp_ok && bracket.related(Word(k, 0), Word(k, 1));
  }
  report(7, notr_ok && cnp_ok,
         "notr rho^(2) holds (aa,ba), (ba,bb) but not (aa,bb); cnp (a^k,b^k) in rho^[k] along the colex chain, k <= 3");
}

// ---- 8 and 9 ----

void property_suites() {
  // The randomized suites live in test_properties (seeded, 120
  // cases each); here a small seeded sample of the round trip runs again.
  std::mt19937 rng(2024);
  std::size_t cases = 0, bad = 0;
  for (; cases < 100; ++cases) {
    std::vector<Word> gens;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count; ++i) {
      Word w(1 + rng() % 3);
      for (auto& x : w) x = static_cast<Letter>(rng() % 2);
      gens.push_back(w);
    }
    const Ideal ideal = Ideal::generated(kAb, Side::two_sided, gens);
    const std::size_t cap = ideal.max_generator_length() + 3;
    const CodeSet code = minimal_elements(ideal, cap);
    const Ideal back = Ideal::generated(kAb, Side::left, std::vector<Word>(code.begin(), code.end()));
    if (!is_suffix_code(code) || members_upto(back, cap) != members_upto(ideal, cap)) ++bad;
  }
  report(8, bad == 0,
         "seeded semaphore-code round trip on " + std::to_string(cases) + " ideals (" + std::to_string(bad) +
             " violations); full property suites run as test_properties");
}

void desk_scale_note() {
  std::cout << "NOTE criterion 9: closedness of the cnp congruence, non-profiniteness and the free pro-D universal "
               "property are not reproducible at desk scale; covered by the finite-shadow checks of criteria 7 and 8"
            << std::endl;
}

}  // namespace

int main() {
  try {
    accepts_anbn();
    witness_families();
    search_vs_closed_form();
    semaphore_identities();
    output_function_cross_check();
    worked_hat_lifts();
    rule_fixtures();
    property_suites();
    desk_scale_note();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
