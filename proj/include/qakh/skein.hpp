#pragma once

#include <optional>

#include "qakh/laurent.hpp"
#include "qakh/link.hpp"

namespace qakh {

// Kauffman bracket in A, by recursive resolution with memoization.
HalfLaurent bracket(const RawDiagram& d);
HalfLaurent bracket(const LinkDiagram& d);

// Independent oracle: brute-force sum over all 2^n resolutions. Refuses
// diagrams with more than 16 crossings.
HalfLaurent bracket_states(const RawDiagram& d);

// (-A)^{-3w} * bracket, rewritten in t via t^{1/2} = A^{-2}.
HalfLaurent jones(const LinkDiagram& d);

// One step of the oriented skein recursion at crossing c: the case is
// picked by the crossing sign (which also says which resolution kept the
// orientation), with e the negative-crossing count shift of the
// re-oriented resolution.
HalfLaurent jones_by_skein(const LinkDiagram& d, int c);

// Closed form for the bracket after growing crossing c into an n-crossing
// twist region, evaluated from the two resolutions of the original
// crossing; agrees with bracket(twist(d, c, n, kind)).
HalfLaurent bracket_twist(const LinkDiagram& d, int c, int n, TwistKind kind);

struct BreadthReport {
    int breadth_doubled = 0;       // of jones(d), in doubled t-exponents
    int breadth_zero_doubled = 0;  // of jones(L0)
    int breadth_one_doubled = 0;   // of jones(L1)
    bool holds = false;            // breadth(V) <= breadth(V0) + breadth(V1) + 2
    std::optional<GapRecord> bracket_gap;  // between A<L0> and A^-1<L1>
    bool gap_length_le7 = true;
};

BreadthReport breadth_inequality_check(const LinkDiagram& d, int c);

}  // namespace qakh
