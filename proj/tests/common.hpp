#pragma once

#include "hg/pair.hpp"

namespace hgtest {

using hg::ParamPair;
using hg::Rat;

inline ParamPair quintic() {
    return ParamPair({Rat(1, 5), Rat(2, 5), Rat(3, 5), Rat(4, 5)}, {Rat(1), Rat(1), Rat(1), Rat(1)});
}

inline ParamPair sixth() {
    return ParamPair({Rat(1, 6), Rat(1, 2), Rat(2, 3)}, {Rat(1, 3), Rat(1), Rat(1)});
}

inline ParamPair counterexample() {
    return ParamPair({Rat(1, 7), Rat(1, 4), Rat(3, 7), Rat(6, 7)}, {Rat(1), Rat(1), Rat(1), Rat(1)});
}

inline ParamPair quartic42() {
    return ParamPair({Rat(1, 4), Rat(3, 4), Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(1), Rat(1), Rat(1)});
}

inline ParamPair half() { return ParamPair({Rat(1, 2)}, {Rat(1)}); }

inline ParamPair sixtwo() { return ParamPair({Rat(1, 6), Rat(5, 6)}, {Rat(1), Rat(1)}); }

// Rejected at p = 2 by the numerator condition.
inline ParamPair rejected2() {
    return ParamPair({Rat(1, 5), Rat(1, 3), Rat(3, 5)}, {Rat(1, 2), Rat(1), Rat(1)});
}

// Rejected at p = 3 by the numerator condition.
inline ParamPair rejected3() {
    return ParamPair({Rat(1, 7), Rat(2, 7), Rat(4, 7), Rat(5, 7)}, {Rat(3, 4), Rat(1), Rat(1), Rat(1)});
}

// Cancelled pair of the non-integral ratio (3n)! n! / ((2n)!)^2.
inline ParamPair thirds() {
    return ParamPair({Rat(1, 3), Rat(2, 3)}, {Rat(1, 2), Rat(1, 2)});
}

}  // namespace hgtest
