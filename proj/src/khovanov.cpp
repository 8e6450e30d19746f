#include <qakh/khovanov.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace qakh {

long BigradedDims::at(int i, int j) const {
    auto it = dim.find({i, j});
    return it == dim.end() ? 0 : it->second;
}

long BigradedDims::total() const {
    long t = 0;
    for (auto& [ij, d] : dim) t += d;
    return t;
}

int BigradedDims::i_min() const {
    if (dim.empty()) throw std::logic_error("empty homology has no support");
    int m = dim.begin()->first.first;
    for (auto& [ij, d] : dim) m = std::min(m, ij.first);
    return m;
}

int BigradedDims::i_max() const {
    if (dim.empty()) throw std::logic_error("empty homology has no support");
    int m = dim.begin()->first.first;
    for (auto& [ij, d] : dim) m = std::max(m, ij.first);
    return m;
}

int BigradedDims::j_min() const {
    if (dim.empty()) throw std::logic_error("empty homology has no support");
    int m = dim.begin()->first.second;
    for (auto& [ij, d] : dim) m = std::min(m, ij.second);
    return m;
}

int BigradedDims::j_max() const {
    if (dim.empty()) throw std::logic_error("empty homology has no support");
    int m = dim.begin()->first.second;
    for (auto& [ij, d] : dim) m = std::max(m, ij.second);
    return m;
}

std::map<int, long> BigradedDims::column(int i) const {
    std::map<int, long> out;
    for (auto& [ij, d] : dim)
        if (ij.first == i) out[ij.second] = d;
    return out;
}

nlohmann::json BigradedDims::to_json() const {
    auto arr = nlohmann::json::array();
    for (auto& [ij, d] : dim)
        arr.push_back({{"i", ij.first}, {"j", ij.second}, {"dim", d}});
    return arr;
}

int kh_crossing_limit() {
    if (const char* s = std::getenv("QAKH_KH_LIMIT")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 14;
}

namespace {

// rank of an integer matrix by fraction-free (Bareiss) elimination
long mat_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    mpz_class prev = 1;
    for (size_t col = 0; col < cols && rank < rows; col++) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) piv++;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (size_t r = rank + 1; r < rows; r++) {
            for (size_t c = col + 1; c < cols; c++) {
                m[r][c] = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                if (prev != 1) mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(),
                                            prev.get_mpz_t());
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank++;
    }
    return (long)rank;
}

struct Gen {
    int vertex;
    int mask;  // bit set = circle carries the degree -1 generator
};

struct Cube {
    int n = 0;
    int nedges = 0;
    int free_loops = 0;
    std::vector<std::array<int, 4>> xidx;   // crossing -> edge indices per slot
    std::vector<std::vector<int>> circ;     // [vertex][edge index] -> circle id
    std::vector<int> ncirc;                 // circles per vertex
    std::vector<std::vector<int>> rep;      // [vertex][circle id] -> an edge index

    explicit Cube(const LinkDiagram& d) {
        n = d.crossing_count();
        free_loops = d.free_loops();
        auto edges = d.edges();
        std::unordered_map<int, int> eidx;
        for (int e : edges) {
            int k = (int)eidx.size();
            eidx[e] = k;
        }
        nedges = (int)eidx.size();
        for (auto& c : d.crossings()) {
            std::array<int, 4> a{};
            for (int s = 0; s < 4; s++) a[s] = eidx.at(c.e[s]);
            xidx.push_back(a);
        }
        int nv = 1 << n;
        circ.resize(nv);
        ncirc.resize(nv);
        rep.resize(nv);
        std::vector<int> uf(nedges);
        for (int v = 0; v < nv; v++) {
            for (int k = 0; k < nedges; k++) uf[k] = k;
            auto find = [&](int a) {
                while (uf[a] != a) a = uf[a] = uf[uf[a]];
                return a;
            };
            for (int ci = 0; ci < n; ci++) {
                auto& a = xidx[ci];
                if (v >> ci & 1) {
                    uf[find(a[0])] = find(a[3]);
                    uf[find(a[1])] = find(a[2]);
                } else {
                    uf[find(a[0])] = find(a[1]);
                    uf[find(a[2])] = find(a[3]);
                }
            }
            circ[v].resize(nedges);
            std::unordered_map<int, int> id;
            for (int k = 0; k < nedges; k++) {
                int root = find(k);
                auto it = id.find(root);
                if (it == id.end()) {
                    it = id.emplace(root, (int)id.size()).first;
                    rep[v].push_back(k);
                }
                circ[v][k] = it->second;
            }
            ncirc[v] = (int)id.size();
        }
        if (nedges == 0) {
            // no crossings: one vertex, one abstract empty state
            ncirc.assign(1, 0);
        }
    }
};

int popcount_below(int v, int c) {
    return __builtin_popcount(v & ((1 << c) - 1));
}

// targets of one cube-edge map applied to gen g at crossing c (bit 0 -> 1);
// appends (target gen, coefficient) pairs; coefficient is the edge sign
void edge_map(const Cube& cube, const Gen& g, int c,
              std::vector<std::pair<Gen, int>>& out) {
    int v = g.vertex, v2 = v | (1 << c);
    int sign = popcount_below(v, c) % 2 ? -1 : 1;
    auto& a = cube.xidx[c];
    // circles of v and v2 meeting crossing c
    int s1[2], ns1 = 0, s2[2], ns2 = 0;
    for (int sl = 0; sl < 4; sl++) {
        int k = cube.circ[v][a[sl]];
        bool seen = false;
        for (int t = 0; t < ns1; t++) seen |= s1[t] == k;
        if (!seen) s1[ns1++] = k;
        int k2 = cube.circ[v2][a[sl]];
        seen = false;
        for (int t = 0; t < ns2; t++) seen |= s2[t] == k2;
        if (!seen) s2[ns2++] = k2;
    }
    // copy labels on untouched circles via a representative edge
    int base = 0;
    for (int k = 0; k < cube.ncirc[v]; k++) {
        if (k == s1[0] || (ns1 == 2 && k == s1[1])) continue;
        if (g.mask >> k & 1) base |= 1 << cube.circ[v2][cube.rep[v][k]];
    }
    if (ns1 == 2) {
        // merge; multiplication: (1,1)->1, (1,x)->x, (x,x)->0
        bool x1 = g.mask >> s1[0] & 1, x2 = g.mask >> s1[1] & 1;
        if (x1 && x2) return;
        int m = base;
        if (x1 || x2) m |= 1 << s2[0];
        out.push_back({{v2, m}, sign});
    } else {
        // split; comultiplication: 1 -> 1 x + x 1, x -> x x
        if (g.mask >> s1[0] & 1) {
            out.push_back({{v2, base | 1 << s2[0] | 1 << s2[1]}, sign});
        } else {
            out.push_back({{v2, base | 1 << s2[0]}, sign});
            out.push_back({{v2, base | 1 << s2[1]}, sign});
        }
    }
}

// unnormalized quantum grading
int jbar(const Cube& cube, const Gen& g) {
    int r = __builtin_popcount(g.vertex);
    int c = cube.ncirc[g.vertex];
    return r + c - 2 * __builtin_popcount(g.mask);
}

struct Complex {
    // per quantum grading jbar, per homological grading r: generator lists
    std::map<int, std::vector<std::vector<Gen>>> gens;  // gens[j][r]
    int n = 0;

    explicit Complex(const Cube& cube) {
        n = cube.n;
        for (int v = 0; v < (1 << cube.n); v++) {
            int r = __builtin_popcount(v);
            for (int m = 0; m < (1 << cube.ncirc[v]); m++) {
                Gen g{v, m};
                auto& col = gens[jbar(cube, g)];
                if (col.empty()) col.resize(cube.n + 1);
                col[r].push_back(g);
            }
        }
    }
};

uint64_t genkey(const Gen& g) { return (uint64_t)g.vertex << 32 | (uint32_t)g.mask; }

std::vector<std::vector<mpz_class>> build_matrix(const Cube& cube,
                                                 const std::vector<Gen>& from,
                                                 const std::vector<Gen>& to) {
    std::unordered_map<uint64_t, int> row;
    for (size_t k = 0; k < to.size(); k++) row[genkey(to[k])] = (int)k;
    std::vector<std::vector<mpz_class>> m(to.size(),
                                          std::vector<mpz_class>(from.size(), 0));
    std::vector<std::pair<Gen, int>> out;
    for (size_t col = 0; col < from.size(); col++) {
        out.clear();
        for (int c = 0; c < cube.n; c++) {
            if (from[col].vertex >> c & 1) continue;
            edge_map(cube, from[col], c, out);
        }
        for (auto& [g, coeff] : out) m.at(row.at(genkey(g)))[col] += coeff;
    }
    return m;
}

}  // namespace

BigradedDims khovanov(const LinkDiagram& d) {
    if (d.crossing_count() > kh_crossing_limit())
        throw std::invalid_argument("crossing count exceeds the homology limit");
    Cube cube(d);
    Complex cx(cube);
    int x = d.negative_count(), y = d.positive_count();

    BigradedDims out;
    for (auto& [j, cols] : cx.gens) {
        std::vector<long> rank(cube.n + 2, 0);
        for (int r = 0; r < cube.n; r++) {
            if (cols[r].empty() || cols[r + 1].empty()) continue;
            rank[r + 1] = mat_rank(build_matrix(cube, cols[r], cols[r + 1]));
        }
        for (int r = 0; r <= cube.n; r++) {
            long h = (long)cols[r].size() - rank[r] - rank[r + 1];
            if (h < 0) throw std::logic_error("rank bookkeeping mismatch");
            if (h > 0) out.dim[{r - x, j - 2 * x + y}] += h;
        }
    }
    // each 0-crossing loop contributes a (q + q^{-1}) factor
    for (int l = 0; l < d.free_loops(); l++) {
        BigradedDims folded;
        for (auto& [ij, h] : out.dim) {
            folded.dim[{ij.first, ij.second - 1}] += h;
            folded.dim[{ij.first, ij.second + 1}] += h;
        }
        out = std::move(folded);
    }
    return out;
}

std::string kh_polynomial(const BigradedDims& h) {
    if (h.dim.empty()) return "0";
    // sort by i descending, then j descending, matching table layout
    std::vector<std::pair<std::pair<int, int>, long>> terms(h.dim.begin(), h.dim.end());
    std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second > b.first.second;
    });
    std::string s;
    for (auto& [ij, d] : terms) {
        if (d == 0) continue;
        if (!s.empty()) s += " + ";
        std::string term;
        if (d != 1) term = std::to_string(d) + "*";
        if (ij.first != 0) {
            term += "t";
            if (ij.first != 1) term += "^" + std::to_string(ij.first);
            term += " ";
        }
        term += "q";
        if (ij.second != 1) term += "^" + std::to_string(ij.second);
        s += term;
    }
    return s.empty() ? "0" : s;
}

HalfLaurent kh_euler(const BigradedDims& h) {
    HalfLaurent p;
    for (auto& [ij, d] : h.dim) {
        long long c = ij.first % 2 ? -d : d;
        p += HalfLaurent::monomial(c, 2 * ij.second);
    }
    return p;
}

HalfLaurent euler_residual(const BigradedDims& h, const HalfLaurent& jones_v) {
    auto rhs = jones_v.mapped_halfunit(-1, 2);  // t^{1/2} -> -q
    rhs = rhs * (HalfLaurent::monomial(1, -2) + HalfLaurent::monomial(1, 2));
    return kh_euler(h) - rhs;
}

bool kh_differential_squares_to_zero(const LinkDiagram& d) {
    if (d.crossing_count() > kh_crossing_limit())
        throw std::invalid_argument("crossing count exceeds the homology limit");
    Cube cube(d);
    Complex cx(cube);
    for (auto& [j, cols] : cx.gens) {
        for (int r = 0; r + 2 <= cube.n; r++) {
            if (cols[r].empty() || cols[r + 1].empty() || cols[r + 2].empty()) continue;
            auto m1 = build_matrix(cube, cols[r], cols[r + 1]);
            auto m2 = build_matrix(cube, cols[r + 1], cols[r + 2]);
            for (size_t a = 0; a < m2.size(); a++)
                for (size_t c = 0; c < m1[0].size(); c++) {
                    mpz_class acc = 0;
                    for (size_t b = 0; b < m1.size(); b++) acc += m2[a][b] * m1[b][c];
                    if (acc != 0) return false;
                }
        }
    }
    return true;
}

}  // namespace qakh
