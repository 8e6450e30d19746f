#pragma once

#include <qakh/laurent.hpp>
#include <qakh/link.hpp>

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

namespace qakh {

// Bigraded dimensions of rational Khovanov homology: (i, j) -> dim H^{i,j}.
struct BigradedDims {
    std::map<std::pair<int, int>, long> dim;

    long at(int i, int j) const;
    long total() const;
    bool empty() const { return dim.empty(); }
    int i_min() const;
    int i_max() const;
    int j_min() const;
    int j_max() const;

    // dims of one homological column, j -> dim
    std::map<int, long> column(int i) const;

    nlohmann::json to_json() const;
};

// Unreduced Khovanov homology over Q via the cube of resolutions.
// Throws if the crossing count exceeds kh_crossing_limit().
BigradedDims khovanov(const LinkDiagram& d);

// Crossing limit for the cube (default 14, override via QAKH_KH_LIMIT).
int kh_crossing_limit();

// Kh(t,q) = sum t^i q^j dim H^{i,j} rendered as a formal sum.
std::string kh_polynomial(const BigradedDims& h);

// Graded Euler characteristic Kh(-1,q) as a Laurent polynomial in q.
HalfLaurent kh_euler(const BigradedDims& h);

// Residual of the Euler identity: Kh(-1,q) - (q^{-1}+q) * V|_{t^{1/2} = -q}.
// Zero iff the identity holds for the given Jones polynomial.
HalfLaurent euler_residual(const BigradedDims& h, const HalfLaurent& jones_v);

// Verifies d^2 = 0 on every edge-pair of the cube (test hook).
bool kh_differential_squares_to_zero(const LinkDiagram& d);

}  // namespace qakh
