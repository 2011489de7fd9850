#pragma once

#include <map>
#include <string>

#include "semacode/turing.hpp"

namespace oracle {

using semacode::Dir;
using semacode::TuringMachine;
using semacode::Word;

// Straightforward simulator over named symbols, driven by the rule text.
struct NaiveRun {
  std::map<long, std::string> cells;
  long head = 0;
  std::string state;
  bool has_head = false;

  NaiveRun(const TuringMachine& t, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::string name = t.omega().name(w[i]);
      const auto at = name.find('@');
      cells[static_cast<long>(i)] = name.substr(0, at);
      if (at != std::string::npos) {
        head = static_cast<long>(i);
        state = name.substr(at + 1);
        has_head = true;
      }
    }
  }

  std::string at(long i) const {
    auto it = cells.find(i);
    return it == cells.end() ? "_" : it->second;
  }

  bool step(const TuringMachine& t) {
    if (!has_head) return false;
    for (const auto& r : t.rules()) {
      if (r.state != state || r.read != at(head)) continue;
      cells[head] = r.write;
      state = r.next;
      head += r.dir == Dir::left ? -1 : 1;
      return true;
    }
    return false;
  }

  std::string symbol(long i) const { return has_head && i == head ? at(i) + "@" + state : at(i); }
};

// Symbol at position p of u·x·v after n moves.
inline std::string naive_tracked(const TuringMachine& t, const Word& w, long p, std::size_t n) {
  NaiveRun run(t, w);
  for (std::size_t i = 0; i < n && run.step(t); ++i) {
  }
  return run.symbol(p);
}

}  // namespace oracle
