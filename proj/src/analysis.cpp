#include "qakh/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

namespace qakh {

namespace {

// Signature of a symmetric rational matrix by congruence pivoting.
int sym_signature(std::vector<std::vector<mpq_class>>& a) {
    int n = (int)a.size();
    std::vector<int> act(n);
    std::iota(act.begin(), act.end(), 0);
    int sig = 0;
    while (!act.empty()) {
        int p = -1;
        for (int i : act)
            if (a[i][i] != 0) {
                p = i;
                break;
            }
        if (p >= 0) {
            sig += sgn(a[p][p]);
            std::vector<int> rest;
            for (int i : act)
                if (i != p) rest.push_back(i);
            for (int r : rest)
                for (int s : rest) a[r][s] -= a[r][p] * a[p][s] / a[p][p];
            act = std::move(rest);
            continue;
        }
        int pi = -1, pj = -1;
        for (int i : act) {
            for (int j : act)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
            if (pi >= 0) break;
        }
        if (pi < 0) break;  // zero block
        // hyperbolic pair, contributes +1 -1
        mpq_class b = a[pi][pj];
        std::vector<int> rest;
        for (int i : act)
            if (i != pi && i != pj) rest.push_back(i);
        for (int r : rest)
            for (int s : rest)
                a[r][s] -= (a[r][pi] * a[pj][s] + a[r][pj] * a[pi][s]) / b;
        act = std::move(rest);
    }
    return sig;
}

}  // namespace

// Checkerboard Goeritz matrix plus correction term, one summand per
// connected piece. The flip constants pick the sign conventions; they are
// pinned by the calibration suite in the tests (left trefoil +2, positive
// Hopf -1, figure-eight 0).
int signature_conv(const LinkDiagram& d, int eta_sign, int type_flip, int mu_sign) {
    if (d.crossing_count() == 0) return 0;
    auto fs = d.faces();
    std::map<std::pair<int, int>, int> face_of;  // (ci, slot) -> face index
    for (int f = 0; f < (int)fs.size(); f++)
        for (const auto& c : fs[f].corners) face_of[{c.ci, c.slot}] = f;

    int npieces = 0;
    for (const auto& f : fs) npieces = std::max(npieces, f.piece + 1);

    int total = 0;
    for (int piece = 0; piece < npieces; piece++) {
        std::vector<int> xs;
        for (int ci = 0; ci < d.crossing_count(); ci++)
            if (d.piece_of_crossing(ci) == piece) xs.push_back(ci);
        if (xs.empty()) continue;

        // 2-color the faces of this piece
        std::map<int, int> color;
        std::vector<int> queue;
        int seed = face_of[{xs[0], 0}];
        color[seed] = 0;
        queue.push_back(seed);
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            for (const auto& corner : fs[f].corners)
                for (int ds : {1, 3}) {
                    int g = face_of[{corner.ci, (corner.slot + ds) % 4}];
                    if (!color.count(g)) {
                        color[g] = 1 - color[f];
                        queue.push_back(g);
                    } else if (color[g] == color[f]) {
                        throw std::invalid_argument("diagram is not checkerboard colorable");
                    }
                }
        }

        // white = color 0 faces carry the Goeritz matrix
        std::map<int, int> widx;
        for (auto& [f, col] : color)
            if (col == 0) {
                int k = (int)widx.size();
                widx[f] = k;
            }
        int nw = (int)widx.size();
        std::vector<std::vector<mpq_class>> g(nw, std::vector<mpq_class>(nw, 0));
        int mu = 0;
        for (int ci : xs) {
            bool white02 = color[face_of[{ci, 0}]] == 0;
            int s0 = white02 ? 0 : 1;
            int u = widx[face_of[{ci, s0}]];
            int v = widx[face_of[{ci, (s0 + 2) % 4}]];
            int eta = eta_sign * (white02 ? 1 : -1);
            if (u != v) {
                g[u][v] -= eta;
                g[v][u] -= eta;
                g[u][u] += eta;
                g[v][v] += eta;
            }
            // type II: the oriented smoothing merges the white corners
            bool merges_white = (d.crossing_sign(ci) > 0) != white02;
            if (merges_white != (type_flip != 0)) mu += eta;
        }
        // delete the row and column of the last white face
        std::vector<std::vector<mpq_class>> gg(nw - 1, std::vector<mpq_class>(nw - 1));
        for (int i = 0; i + 1 < nw; i++)
            for (int j = 0; j + 1 < nw; j++) gg[i][j] = g[i][j];
        total += sym_signature(gg) - mu_sign * mu;
    }
    return total;
}

int signature_conv(const LinkDiagram&, int, int, int);

int signature(const LinkDiagram& d) { return signature_conv(d, 1, 1, 1); }

ThinnessReport thinness(const BigradedDims& h, int sigma) {
    ThinnessReport r;
    for (const auto& [ij, dim] : h.dim) {
        if (dim == 0) continue;
        int off = ij.second - 2 * ij.first + sigma;
        if (off != -1 && off != 1) {
            r.thin = false;
            r.offenders.push_back(ij);
        }
    }
    return r;
}

static std::vector<GapRecord> runs_of_zero(const std::map<int, long>& totals, int lo, int hi,
                                           int step) {
    std::vector<GapRecord> gaps;
    int i = lo;
    while (i <= hi) {
        if (totals.count(i) && totals.at(i) > 0) {
            i += step;
            continue;
        }
        int start = i, len = 0;
        while (i <= hi && (!totals.count(i) || totals.at(i) == 0)) {
            len++;
            i += step;
        }
        gaps.push_back({start, len, step});
    }
    return gaps;
}

std::vector<GapRecord> differential_gaps(const BigradedDims& h) {
    if (h.empty()) throw std::invalid_argument("empty homology");
    std::map<int, long> cols;
    for (const auto& [ij, dim] : h.dim) cols[ij.first] += dim;
    return runs_of_zero(cols, h.i_min() + 1, h.i_max() - 1, 1);
}

std::vector<GapRecord> quantum_gaps(const BigradedDims& h) {
    if (h.empty()) throw std::invalid_argument("empty homology");
    std::map<int, long> rows;
    for (const auto& [ij, dim] : h.dim) rows[ij.second] += dim;
    return runs_of_zero(rows, h.j_min() + 2, h.j_max() - 2, 2);
}

BreadthPair breadths(const BigradedDims& h) {
    BreadthPair b;
    b.breadth_i = h.i_max() - h.i_min();
    b.breadth_j = h.j_max() - h.j_min();
    b.relation_holds = b.breadth_j == 2 * b.breadth_i + 2;
    return b;
}

long LeeDims::total() const {
    long t = 0;
    for (auto& [i, d] : dim) t += d;
    return t;
}

nlohmann::json LeeDims::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (auto& [i, d] : dim) j[std::to_string(i)] = d;
    return j;
}

LeeDims lee_dims(int components, const std::vector<std::vector<int>>& lk) {
    if (components < 1) throw std::invalid_argument("need at least one component");
    LeeDims out;
    int free_bits = components - 1;
    for (long mask = 0; mask < (1L << free_bits); mask++) {
        long s = 0;
        for (int l = 0; l < components; l++) {
            bool in_e = l > 0 && (mask >> (l - 1)) & 1;
            if (!in_e) continue;
            for (int m = 0; m < components; m++) {
                bool m_in = m > 0 && (mask >> (m - 1)) & 1;
                if (!m_in) s += lk[l][m];
            }
        }
        out.dim[(int)(2 * s)] += 2;
    }
    return out;
}

BigradedDims lee_table(const LeeDims& lee, int sigma) {
    BigradedDims t;
    for (auto& [i, d] : lee.dim) {
        t.dim[{i, 2 * i - sigma - 1}] += d / 2;
        t.dim[{i, 2 * i - sigma + 1}] += d / 2;
    }
    return t;
}

BigradedDims lee_polynomial(int sigma, int components, const std::vector<std::vector<int>>& lk) {
    return lee_table(lee_dims(components, lk), sigma);
}

KnightMoveResult knight_move_decompose(const BigradedDims& h, const LeeDims& lee, int sigma) {
    KnightMoveResult out;
    auto pawn = lee_table(lee, sigma);
    std::map<std::pair<int, int>, long> rem = h.dim;
    for (const auto& [ij, d] : pawn.dim) {
        rem[ij] -= d;
        if (rem[ij] < 0) {
            out.reason = "Lee part exceeds homology at (" + std::to_string(ij.first) + "," +
                         std::to_string(ij.second) + ")";
            return out;
        }
        out.pawn += HalfLaurent::monomial(d, ij.second);
    }
    for (auto& [ij, d] : rem) {
        if (d <= 0) continue;
        auto partner = std::make_pair(ij.first + 1, ij.second + 4);
        auto it = rem.find(partner);
        if (it == rem.end() || it->second < d) {
            out.reason = "unpairable cell at (" + std::to_string(ij.first) + "," +
                         std::to_string(ij.second) + ")";
            return out;
        }
        it->second -= d;
        out.pairs.push_back({ij.first, ij.second, d});
        out.khprime[ij.first] += d;
        d = 0;
    }
    out.ok = true;
    return out;
}

std::vector<long> lower_diagonal_a(const BigradedDims& h, const LeeDims& lee) {
    std::map<int, long> cols;
    for (const auto& [ij, d] : h.dim) cols[ij.first] += d;
    auto col = [&](int i) { return cols.count(i) ? cols[i] : 0; };
    auto leec = [&](int i) { return lee.dim.count(i) ? lee.dim.at(i) : 0; };
    int lo = h.i_min(), hi = h.i_max();
    int n = hi - lo;
    std::vector<long> a(n + 1);
    a[0] = col(lo) - leec(lo);
    // the closing column obeys the same recursion: its upper-diagonal cell
    // is the knight partner of the previous lower-diagonal entry
    for (int l = 2; l <= n + 1; l++) a[l - 1] = col(lo + l - 1) - leec(lo + l - 1) - a[l - 2];
    for (long v : a)
        if (v < 0) throw std::invalid_argument("negative lower-diagonal entry");
    return a;
}

DiagonalProfile diagonal_profile(const BigradedDims& h, const LeeDims& lee, int sigma) {
    auto thin = thinness(h, sigma);
    if (!thin.thin) throw std::invalid_argument("homology is not thin");
    DiagonalProfile p;
    p.sigma = sigma;
    p.i_min = h.i_min();
    p.i_max = h.i_max();
    p.j_min = h.j_min();
    p.j_max = h.j_max();
    p.a = lower_diagonal_a(h, lee);
    for (const auto& [ij, d] : h.dim) {
        if (d == 0) continue;
        if (ij.second - 2 * ij.first + sigma == -1)
            p.lower.push_back({ij.first, d});
        else
            p.upper.push_back({ij.first, d});
    }
    return p;
}

nlohmann::json DiagonalProfile::to_json() const {
    nlohmann::json j;
    j["sigma"] = sigma;
    j["i_min"] = i_min;
    j["i_max"] = i_max;
    j["j_min"] = j_min;
    j["j_max"] = j_max;
    j["a"] = a;
    auto dump = [](const std::vector<std::pair<int, long>>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& [i, d] : v) arr.push_back({{"i", i}, {"dim", d}});
        return arr;
    };
    j["lower"] = dump(lower);
    j["upper"] = dump(upper);
    return j;
}

std::map<int, long> coefficients_b(const DiagonalProfile& p, const LeeDims& lee) {
    auto leec = [&](int i) { return lee.dim.count(i) ? lee.dim.at(i) : 0; };
    auto al = [&](int l) -> long {
        return (l >= 1 && l <= (int)p.a.size()) ? p.a[l - 1] : 0;
    };
    int n = p.i_max - p.i_min;
    auto sign_pow = [&](int e) { return ((e % 2 + 2) % 2) ? -1L : 1L; };
    std::map<int, long> b;
    for (int j = p.j_min + 1; j <= p.j_max - 1; j += 2) {
        if (j == p.j_min + 1)
            b[j] = sign_pow(p.i_min) * al(1) + leec(p.i_min) / 2;
        else if (j == p.j_max - 1)
            b[j] = sign_pow(p.i_max) * al(n) + leec(p.i_max) / 2;
        else {
            int l = (j - p.j_min - 1) / 2;
            b[j] = sign_pow(l + p.i_min) * (al(l) + al(l + 1)) + leec(p.i_min + l) / 2;
        }
    }
    return b;
}

HalfLaurent reconstruct_jones(const DiagonalProfile& p, const LeeDims& lee) {
    auto al = [&](int l) -> long {
        return (l >= 1 && l <= (int)p.a.size()) ? p.a[l - 1] : 0;
    };
    auto sign_pow = [](int e) { return ((e % 2 + 2) % 2) ? -1L : 1L; };
    int n = p.i_max - p.i_min;
    // bracketed polynomial in q, keys are plain q-exponents
    HalfLaurent q;
    q += HalfLaurent::monomial(sign_pow(p.i_min) * al(1), p.j_min + 1);
    if (n > 0) q += HalfLaurent::monomial(sign_pow(p.i_max) * al(n), p.j_max - 1);
    for (const auto& [i, d] : lee.dim)
        q += HalfLaurent::monomial(d / 2, 2 * i - p.sigma);
    for (int l = 1; l <= (p.j_max - p.j_min - 4) / 2; l++)
        q += HalfLaurent::monomial(sign_pow(l + p.i_min) * (al(l) + al(l + 1)),
                                   p.j_min + 2 * l + 1);
    // q = -sqrt(t): q^j -> (-1)^j t^{j/2}
    return q.mapped_halfunit(-1, 1);
}

}  // namespace qakh
