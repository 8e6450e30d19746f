#include "qakh/skein.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace qakh {

namespace {

HalfLaurent delta() { return HalfLaurent::monomial(-1, -4) + HalfLaurent::monomial(-1, 4); }

HalfLaurent delta_pow(int k) {
    HalfLaurent r = HalfLaurent::one();
    HalfLaurent d = delta();
    for (int i = 0; i < k; i++) r = r * d;
    return r;
}

// bracket of the crossing part alone, normalized so that the value for a
// diagram with extra circles is f(x) * delta^circles; f(empty) = 1
HalfLaurent bracket_core(const RawDiagram& d, std::map<std::string, HalfLaurent>& memo) {
    if (d.x.empty()) return HalfLaurent::one();
    RawDiagram flat{d.x, 0};
    std::string key = canonical_raw(flat);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    HalfLaurent total;
    for (int w : {0, 1}) {
        RawDiagram r = resolve_raw(flat, 0, w);
        int loops = r.loops;
        HalfLaurent part;
        if (r.x.empty())
            part = delta_pow(loops - 1);
        else
            part = bracket_core(r, memo) * delta_pow(loops);
        total += part.shifted(1, w == 0 ? 2 : -2);
    }
    memo[key] = total;
    return total;
}

}  // namespace

HalfLaurent bracket(const RawDiagram& d) {
    if (d.x.empty()) {
        if (d.loops < 1) throw std::invalid_argument("bracket of the empty diagram");
        return delta_pow(d.loops - 1);
    }
    std::map<std::string, HalfLaurent> memo;
    return bracket_core(d, memo) * delta_pow(d.loops);
}

HalfLaurent bracket(const LinkDiagram& d) { return bracket(d.raw()); }

HalfLaurent bracket_states(const RawDiagram& d) {
    int n = (int)d.x.size();
    if (n > 16) throw std::invalid_argument("state sum limited to 16 crossings");
    if (n == 0) return bracket(d);
    HalfLaurent total;
    for (unsigned long st = 0; st < (1ul << n); st++) {
        // count circles of this full resolution with a tiny union-find
        std::map<int, int> parent;
        std::function<int(int)> find = [&](int a) {
            if (!parent.count(a)) parent[a] = a;
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        int weight = 0;
        for (int ci = 0; ci < n; ci++) {
            auto& t = d.x[ci];
            bool b = (st >> ci) & 1;
            weight += b ? -1 : 1;
            int p1 = find(t[0]), q1 = find(t[b ? 3 : 1]);
            parent[p1] = q1;
            int p2 = find(t[b ? 1 : 2]), q2 = find(t[b ? 2 : 3]);
            parent[p2] = q2;
        }
        std::map<int, bool> roots;
        for (auto& [e, p] : parent) roots[find(e)] = true;
        int circles = (int)roots.size() + d.loops;
        total += delta_pow(circles - 1).shifted(1, 2 * weight);
    }
    return total;
}

namespace {

// rewrite an A-polynomial in t via t^{1/2} = A^{-2}: A-key a -> t-key -a/4
HalfLaurent a_to_t(const HalfLaurent& p) {
    HalfLaurent r;
    for (auto [a, c] : p.terms()) {
        if (a % 4 != 0) throw std::domain_error("bracket does not lie on the t lattice");
        r += HalfLaurent::monomial(c, -a / 4);
    }
    return r;
}

HalfLaurent normalize_bracket(const HalfLaurent& br, int writhe) {
    // multiply by (-A)^{-3w}
    return a_to_t(br.shifted((writhe % 2) ? -1 : 1, -6 * writhe));
}

}  // namespace

HalfLaurent jones(const LinkDiagram& d) { return normalize_bracket(bracket(d), d.writhe()); }

HalfLaurent jones_by_skein(const LinkDiagram& d, int c) {
    SmoothingResult sr = smooth(d, c);
    HalfLaurent v0 = jones(sr.zero);
    HalfLaurent v1 = jones(sr.one);
    if (sr.sign > 0) {
        // V = -t^{1/2} V0 - t^{3e/2+1} V1, e = x(L1) - x(L)
        return v0.shifted(-1, 1) + v1.shifted(-1, 3 * sr.e + 2);
    }
    // V = -t^{3e'/2-1} V0 - t^{-1/2} V1, e' = x(L0) - x(L) + 1
    int ep = sr.e_zero + 1;
    return v0.shifted(-1, 3 * ep - 2) + v1.shifted(-1, -1);
}

HalfLaurent bracket_twist(const LinkDiagram& d, int c, int n, TwistKind kind) {
    if (n < 1) throw std::invalid_argument("twist requires n >= 1");
    RawDiagram raw = d.raw();
    HalfLaurent b0 = bracket(resolve_raw(raw, c, 0));
    HalfLaurent b1 = bracket(resolve_raw(raw, c, 1));
    HalfLaurent skein = b0.shifted(1, 2) + b1.shifted(1, -2);
    if (kind == TwistKind::vertical) {
        HalfLaurent out = skein.shifted(1, 2 * (n - 1));
        for (int i = 1; i <= n - 1; i++)
            out += b1.shifted((i % 2) ? -1 : 1, 2 * (n - 4 * i - 2));
        return out;
    }
    HalfLaurent out = skein.shifted(1, -2 * (n - 1));
    for (int i = 1; i <= n - 1; i++)
        out += b0.shifted((i % 2) ? -1 : 1, 2 * (-n + 4 * i + 2));
    return out;
}

BreadthReport breadth_inequality_check(const LinkDiagram& d, int c) {
    BreadthReport r;
    SmoothingResult sr = smooth(d, c);
    r.breadth_doubled = jones(d).breadth_doubled();
    r.breadth_zero_doubled = jones(sr.zero).breadth_doubled();
    r.breadth_one_doubled = jones(sr.one).breadth_doubled();
    // breadth(V) <= breadth(V0) + breadth(V1) + 2, in t units (doubled: 4)
    r.holds = r.breadth_doubled <= r.breadth_zero_doubled + r.breadth_one_doubled + 4;
    RawDiagram raw = d.raw();
    HalfLaurent t0 = bracket(resolve_raw(raw, c, 0)).shifted(1, 2);
    HalfLaurent t1 = bracket(resolve_raw(raw, c, 1)).shifted(1, -2);
    r.bracket_gap = gap_between(t0, t1, 8);  // lattice of A^4
    r.gap_length_le7 = !r.bracket_gap || r.bracket_gap->length <= 7;
    return r;
}

}  // namespace qakh
