#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qakh/khovanov.hpp"
#include "qakh/laurent.hpp"
#include "qakh/link.hpp"

namespace qakh {

// Signature from a Goeritz matrix of a checkerboard coloring with the
// Gordon-Litherland correction term. Additive over split pieces.
int signature(const LinkDiagram& d);

struct ThinnessReport {
    bool thin = true;
    // cells off the diagonals j - 2i = -sigma -+ 1
    std::vector<std::pair<int, int>> offenders;
};
ThinnessReport thinness(const BigradedDims& h, int sigma);

// Maximal runs of zero columns i strictly inside the support; step_key 1.
std::vector<GapRecord> differential_gaps(const BigradedDims& h);

// Maximal runs of zero rows j (stepping by 2) strictly inside the support.
std::vector<GapRecord> quantum_gaps(const BigradedDims& h);

struct BreadthPair {
    int breadth_i = 0;
    int breadth_j = 0;
    bool relation_holds = false;  // breadth_j == 2*breadth_i + 2
};
BreadthPair breadths(const BigradedDims& h);

// Lee homology column dimensions: 2 at i = 2*sum lk(l,m) over l in E,
// m not in E, for every subset E of components {2..n}.
struct LeeDims {
    std::map<int, long> dim;  // i -> dim
    long total() const;
    nlohmann::json to_json() const;
};
LeeDims lee_dims(int components, const std::vector<std::vector<int>>& lk);

// Lee occupancy as a bigraded table: column i splits evenly between rows
// 2i - sigma - 1 and 2i - sigma + 1.
BigradedDims lee_table(const LeeDims& lee, int sigma);

// q^{-sigma}(q^{-1}+q) * sum over subsets, as a polynomial; same cells as
// lee_table but collapsed to t^i q^j coefficients.
BigradedDims lee_polynomial(int sigma, int components, const std::vector<std::vector<int>>& lk);

struct KnightMoveResult {
    bool ok = false;
    std::string reason;
    HalfLaurent pawn;                       // q-polynomial of the Lee part
    std::vector<std::array<long, 3>> pairs; // (i, j, multiplicity), lower cell
    std::map<int, long> khprime;            // exponent of (tq^2) -> coefficient
};
KnightMoveResult knight_move_decompose(const BigradedDims& h, const LeeDims& lee, int sigma);

// a_1 .. a_{i_max - i_min + 1}: lower-diagonal entries after removing the
// Lee part; throws on a negative entry.
std::vector<long> lower_diagonal_a(const BigradedDims& h, const LeeDims& lee);

struct DiagonalProfile {
    int sigma = 0;
    int i_min = 0, i_max = 0, j_min = 0, j_max = 0;
    std::vector<long> a;                          // a_1 .. a_{i_max-i_min+1}
    std::vector<std::pair<int, long>> lower;      // (i, dim) on j-2i = -sigma-1
    std::vector<std::pair<int, long>> upper;      // (i, dim) on j-2i = -sigma+1
    nlohmann::json to_json() const;
};
DiagonalProfile diagonal_profile(const BigradedDims& h, const LeeDims& lee, int sigma);

// Coefficients b_j of the reconstructed Jones bracket, j_min+1 <= j <=
// j_max-1 stepping by 2.
std::map<int, long> coefficients_b(const DiagonalProfile& p, const LeeDims& lee);

// Jones polynomial in t rebuilt from the diagonal profile alone, via the
// substitution q = -sqrt(t).
HalfLaurent reconstruct_jones(const DiagonalProfile& p, const LeeDims& lee);

}  // namespace qakh
