#pragma once

#include "semacode/reset_search.hpp"

namespace semacode {

/// The seven-state machine accepting {a^n b^n : n >= 1}. Tape letters
/// a b X Y Z _, initial q0, final q6.
TuringMachine example_machine();

/// True iff w lies outside RRes(T) for the example machine, by its closed
/// form: a*{b,Y}* plus the words with one head a^{q1,q3,q4} inside the a
/// block, or b^{q1,q2} / Y^{q1,q2,q3} right after a*Y*.
bool example_nonreset_oracle(const TuringMachine& t, const Word& w);

/// The closed form registered for both sides (left and right resets
/// coincide for this machine).
ClosedFormOracle example_oracle(const TuringMachine& t);

}  // namespace semacode
