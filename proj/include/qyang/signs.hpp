#pragma once

namespace qyang {

// Sign-site tables for the four structural formulas of the library. Every
// site is +1 in production; tests flip individual sites to confirm that the
// verification suites notice (no vacuous passes).

/// Term signs of the generator superbracket.
struct BracketSigns {
    int t1 = +1, t2 = +1, t3 = +1, t4 = +1;
    bool is_default() const { return t1 == 1 && t2 == 1 && t3 == 1 && t4 == 1; }
};

/// Term signs of the bracket of a generator with a degree-n family element.
struct FnrSigns {
    int t1 = +1, t2 = +1, t3 = +1, t4 = +1;
};

/// Sign sites of the truncated defining relation (boundary terms, the
/// alternating prefactor, the two r-sum groups, their internal minus signs,
/// and the alternating factor inside the second sum).
struct DefrelSigns {
    int b1 = +1, b2 = +1, b3 = +1, b4 = +1;
    int pm = +1;  // flips (-1)^(m-1)
    int g1 = +1, g2 = +1;
    int w1 = +1, w2 = +1;
    int pr = +1;  // flips (-1)^(m+r)
};

/// Sign sites of the T-generator relation obtained from the defining
/// relation under the anti-isomorphism.
struct YangSigns {
    int c = +1;   // supercommutator term
    int g1 = +1, g2 = +1;
    int w1 = +1, w2 = +1;
    int pr = +1;  // flips (-1)^(m+r)
};

}  // namespace qyang
