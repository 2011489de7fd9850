#include "semacode/reset_search.hpp"

#include <algorithm>

namespace semacode {

std::string to_string(ResetVerdict::Kind kind) {
  switch (kind) {
    case ResetVerdict::Kind::reset: return "Reset";
    case ResetVerdict::Kind::non_reset: return "NonReset";
    case ResetVerdict::Kind::unknown: return "Unknown";
  }
  return "?";
}

namespace {

constexpr Letter kUnknown = 0xFFFF;

// Two runs in lockstep: run 0 on t1·r·t2·x·t3 and run 1 on the same word
// with the varying context (t1 on the right side, t3 on the left side)
// erased. Coordinates put r at [0, m). The varying context occupies `vary`,
// the shared context `shared`; every other cell is blank.
class Search {
 public:
  Search(const TuringMachine& t, const Word& r, ResetSide side, const SearchBounds& bounds)
      : t_(t), r_(r), side_(side), c_(static_cast<long>(bounds.ctx_len)), n_max_(bounds.n_max) {
    const long m = static_cast<long>(r.size());
    if (side == ResetSide::right) {
      vlo_ = -c_, vhi_ = -1;
      slo_ = m, shi_ = m + 2 * c_;
    } else {
      vlo_ = m, vhi_ = m + c_ - 1;
      slo_ = -(2 * c_ + 1), shi_ = -1;
    }
    const long margin = static_cast<long>(n_max_) + 2;
    base_ = std::min(vlo_, slo_) - margin;
    size_ = static_cast<std::size_t>(std::max(vhi_, shi_) + margin - base_ + 1);
  }

  std::optional<ResetWitness> run() {
    Node root;
    root.init.assign(size_, t_.blank());
    for (long p = vlo_; p <= vhi_; ++p) root.init[idx(p)] = kUnknown;
    for (long p = slo_; p <= shi_; ++p) root.init[idx(p)] = kUnknown;
    std::optional<long> head_in_r;
    State q_in_r = 0;
    for (std::size_t i = 0; i < r_.size(); ++i) {
      root.init[idx(static_cast<long>(i))] = t_.tape_of(r_[i]);
      if (auto q = t_.state_of(r_[i])) {
        head_in_r = static_cast<long>(i);
        q_in_r = *q;
      }
    }
    for (int k = 0; k < 2; ++k) {
      root.run[k].cells = root.init;
      if (k == 1)
        for (long p = vlo_; p <= vhi_; ++p) root.run[k].cells[idx(p)] = t_.blank();
    }
    if (head_in_r) {
      Node n = root;
      n.head0 = *head_in_r;
      n.head_state = q_in_r;
      for (auto& run : n.run) run.place(*head_in_r, q_in_r);
      explore(n);
      return found_;
    }
    auto place = [&](long p, bool both) {
      for (Letter x = 0; x < t_.gamma_size() && !found_; ++x) {
        for (State q = 0; q < t_.states().size() && !found_; ++q) {
          Node n = root;
          n.head0 = p;
          n.head_state = q;
          assign(n, p, x);
          n.run[0].place(p, q);
          if (both) n.run[1].place(p, q);
          if (plausible(n)) explore(n);
        }
      }
    };
    for (long p = slo_; p <= shi_ && !found_; ++p) place(p, true);
    if (side_ == ResetSide::right) {
      for (long p = vhi_; p >= vlo_ && !found_; --p) place(p, false);
    } else {
      for (long p = vlo_; p <= vhi_ && !found_; ++p) place(p, false);
    }
    return found_;
  }

 private:
  struct Run {
    std::vector<Letter> cells;
    long head = 0;
    State q = 0;
    bool active = false;
    std::size_t done = 0;

    void place(long p, State state) {
      head = p;
      q = state;
      active = true;
    }
  };

  struct Node {
    std::vector<Letter> init;
    Run run[2];
    std::optional<long> head0;
    State head_state = 0;
  };

  std::size_t idx(long p) const { return static_cast<std::size_t>(p - base_); }
  bool in_vary(long p) const { return p >= vlo_ && p <= vhi_; }
  bool in_shared(long p) const { return p >= slo_ && p <= shi_; }

  void assign(Node& n, long p, Letter x) const {
    n.init[idx(p)] = x;
    n.run[0].cells[idx(p)] = x;
    if (in_shared(p)) n.run[1].cells[idx(p)] = x;
  }

  Letter omega_at(const Run& run, long p) const {
    const Letter x = run.cells[idx(p)];
    if (run.active && run.head == p) return t_.with_head(x, run.q);
    return x;
  }

  // Necessary conditions for t1·r·t2·x·t3 to be legal, on the cells fixed so
  // far.
  bool plausible(const Node& n) const {
    const long lo = std::min(vlo_, slo_);
    const long hi = std::max(vhi_, shi_);
    const Letter blank = t_.blank();
    long first = hi + 1, last = lo - 1;
    for (long p = lo; p <= hi; ++p) {
      const Letter x = n.init[idx(p)];
      if (x != kUnknown && x != blank) {
        first = std::min(first, p);
        last = std::max(last, p);
      }
    }
    for (long p = first; p <= last; ++p)
      if (n.init[idx(p)] == blank) return false;
    if (n.head0 && n.init[idx(*n.head0)] == blank && first <= last) {
      const long h = *n.head0;
      if (first < h && last > h) return false;
      if (last < h - 1 && n.init[idx(h - 1)] == blank) return false;
      if (first > h + 1 && n.init[idx(h + 1)] == blank) return false;
    }
    return true;
  }

  // Returns the cell a run needs fixed before it can move, if any.
  std::optional<long> step(Run& run) const {
    if (!run.active) {
      ++run.done;
      return std::nullopt;
    }
    const Letter x = run.cells[idx(run.head)];
    if (x == kUnknown) return run.head;
    auto m = t_.delta(run.q, x);
    if (!m) {
      run.active = false;
      ++run.done;
      return std::nullopt;
    }
    run.cells[idx(run.head)] = m->write;
    run.q = m->next;
    run.head += m->dir == Dir::left ? -1 : 1;
    ++run.done;
    return std::nullopt;
  }

  bool explore(Node& n) {
    while (true) {
      if (n.run[0].done == n.run[1].done) {
        const std::size_t k = n.run[0].done;
        if (k > 0 && check(n, k)) return true;
        if (k == n_max_) return false;
        if (!n.run[0].active && !n.run[1].active) return false;
      }
      const int i = n.run[0].done <= n.run[1].done ? 0 : 1;
      if (auto need = step(n.run[i])) {
        for (Letter x = 0; x < t_.gamma_size(); ++x) {
          Node child = n;
          assign(child, *need, x);
          if (plausible(child) && explore(child)) return true;
        }
        return false;
      }
    }
  }

  bool check(const Node& n, std::size_t k) {
    for (long p = slo_; p <= shi_; ++p) {
      const Letter a = omega_at(n.run[0], p);
      const Letter b = omega_at(n.run[1], p);
      if (a == b) continue;
      if (n.init[idx(p)] != kUnknown) {
        if (auto w = witness_at(n, p, k, a, b)) {
          found_ = std::move(w);
          return true;
        }
        continue;
      }
      // a head sits on a cell nobody has read yet: the symbols differ
      // whatever the cell holds
      for (Letter x = 0; x < t_.gamma_size(); ++x) {
        Node fixed = n;
        assign(fixed, p, x);
        if (!plausible(fixed)) continue;
        if (auto w = witness_at(fixed, p, k, omega_at(fixed.run[0], p), omega_at(fixed.run[1], p))) {
          found_ = std::move(w);
          return true;
        }
      }
    }
    return false;
  }

  bool relevant(const Node& n, long p) const {
    const Letter x = n.init[idx(p)];
    return (x != kUnknown && x != t_.blank()) || (n.head0 && *n.head0 == p);
  }

  std::optional<ResetWitness> witness_at(const Node& n, long p, std::size_t k, Letter a, Letter b) const {
    const long m = static_cast<long>(r_.size());
    long word_lo, word_hi;
    ResetWitness w;
    w.side = side_;
    w.steps = k;
    w.value = a;
    w.value_alt = b;
    if (side_ == ResetSide::right) {
      if (p - m > c_) return std::nullopt;
      long end = p;
      for (long s = shi_; s > p; --s)
        if (relevant(n, s)) {
          end = s;
          break;
        }
      if (end - p > c_) return std::nullopt;
      long start = 0;
      for (long s = vlo_; s <= vhi_; ++s)
        if (relevant(n, s)) {
          start = s;
          break;
        }
      word_lo = start, word_hi = end;
    } else {
      if (-1 - p > c_) return std::nullopt;
      long start = p;
      for (long s = slo_; s < p; ++s)
        if (relevant(n, s)) {
          start = s;
          break;
        }
      if (p - start > c_) return std::nullopt;
      long end = m - 1;
      for (long s = vhi_; s >= vlo_; --s)
        if (relevant(n, s)) {
          end = s;
          break;
        }
      word_lo = start, word_hi = end;
    }
    // cells never read by either run may hold anything that keeps the word legal
    for (Letter fill = 0; fill < t_.gamma_size(); ++fill) {
      Word full;
      for (long s = word_lo; s <= word_hi; ++s) {
        Letter x = n.init[idx(s)];
        if (x == kUnknown) x = fill;
        if (n.head0 && *n.head0 == s) x = t_.with_head(x, n.head_state);
        full.push_back(x);
      }
      if (!is_legal(t_, full)) continue;
      auto slice = [&](long from, long to) {
        if (from > to) return Word{};
        return Word(full.begin() + (from - word_lo), full.begin() + (to - word_lo) + 1);
      };
      w.x = full[static_cast<std::size_t>(p - word_lo)];
      if (side_ == ResetSide::right) {
        w.t1 = slice(word_lo, -1);
        w.t2 = slice(m, p - 1);
        w.t3 = slice(p + 1, word_hi);
      } else {
        w.t1 = slice(word_lo, p - 1);
        w.t2 = slice(p + 1, -1);
        w.t3 = slice(m, word_hi);
      }
      return w;
    }
    return std::nullopt;
  }

  const TuringMachine& t_;
  const Word& r_;
  ResetSide side_;
  long c_;
  std::size_t n_max_;
  long vlo_ = 0, vhi_ = 0, slo_ = 0, shi_ = 0;
  long base_ = 0;
  std::size_t size_ = 0;
  std::optional<ResetWitness> found_;
};

}  // namespace

bool replay_witness(const TuringMachine& t, const Word& r, const ResetWitness& w) {
  std::optional<Letter> lhs, rhs;
  if (w.side == ResetSide::right) {
    lhs = beta_tracked(t, concat(concat(w.t1, r), w.t2), w.x, w.t3, w.steps);
    rhs = beta_tracked(t, concat(concat(w.t1_alt, r), w.t2), w.x, w.t3, w.steps);
  } else {
    lhs = beta_tracked(t, w.t1, w.x, concat(concat(w.t2, r), w.t3), w.steps);
    rhs = beta_tracked(t, w.t1, w.x, concat(concat(w.t2, r), w.t3_alt), w.steps);
  }
  return lhs && rhs && *lhs != *rhs && *lhs == w.value && *rhs == w.value_alt;
}

ResetVerdict is_reset_bounded(ResetSide side, const TuringMachine& t, const Word& r, const SearchBounds& bounds,
                              const ClosedFormOracle* oracle) {
  if (bounds.ctx_len == 0 || bounds.n_max == 0) throw Error("search bounds must be positive");
  ResetVerdict v;
  v.bounds = bounds;
  if (!is_legal(t, r)) {
    v.kind = ResetVerdict::Kind::reset;
    v.certified_by = "illegal";
    return v;
  }
  Search search(t, r, side, bounds);
  if (auto w = search.run()) {
    if (!replay_witness(t, r, *w)) {
      const auto& o = t.omega();
      throw Error("internal: reset witness does not replay: r=" + o.format(r) + " t1=" + o.format(w->t1) +
                  " t2=" + o.format(w->t2) + " x=" + o.name(w->x) + " t3=" + o.format(w->t3) +
                  " n=" + std::to_string(w->steps) + " values " + o.name(w->value) + "/" + o.name(w->value_alt));
    }
    v.kind = ResetVerdict::Kind::non_reset;
    v.witness = std::move(w);
    return v;
  }
  if (oracle && !oracle->nonreset(side, r)) {
    v.kind = ResetVerdict::Kind::reset;
    v.certified_by = oracle->name;
  }
  return v;
}

ResetVerdict is_right_reset_bounded(const TuringMachine& t, const Word& r, const SearchBounds& bounds,
                                    const ClosedFormOracle* oracle) {
  return is_reset_bounded(ResetSide::right, t, r, bounds, oracle);
}

ResetVerdict is_left_reset_bounded(const TuringMachine& t, const Word& r, const SearchBounds& bounds,
                                   const ClosedFormOracle* oracle) {
  return is_reset_bounded(ResetSide::left, t, r, bounds, oracle);
}

}  // namespace semacode
