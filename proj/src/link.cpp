#include "qakh/link.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qakh {

namespace {

// union-find on arbitrary int labels
struct UF {
    std::map<int, int> p;
    int find(int a) {
        if (!p.count(a)) p[a] = a;
        while (p[a] != a) {
            p[a] = p[p[a]];
            a = p[a];
        }
        return a;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

// ---------- raw (unoriented) diagrams ----------

RawDiagram resolve_raw(const RawDiagram& d, int ci, int which) {
    if (ci < 0 || ci >= (int)d.x.size()) throw std::invalid_argument("unknown crossing id");
    const auto& t = d.x[ci];
    std::array<std::pair<int, int>, 2> joins;
    if (which == 0)
        joins = {{{t[0], t[1]}, {t[2], t[3]}}};
    else
        joins = {{{t[0], t[3]}, {t[1], t[2]}}};

    UF uf;
    for (auto [a, b] : joins) uf.unite(a, b);

    // endpoints of each site edge that remain after deleting the crossing
    std::map<int, int> at_site;
    for (int s = 0; s < 4; s++) at_site[t[s]]++;

    std::map<int, std::vector<int>> cls;
    for (auto& [e, cnt] : at_site) cls[uf.find(e)].push_back(e);

    RawDiagram out;
    out.loops = d.loops;
    std::map<int, int> rename;
    for (auto& [rep, members] : cls) {
        int outside = 0;
        int lo = members[0];
        for (int e : members) {
            outside += 2 - at_site[e];
            lo = std::min(lo, e);
        }
        if (outside == 0) {
            out.loops++;
            for (int e : members) rename[e] = -1;
        } else {
            for (int e : members) rename[e] = lo;
        }
    }
    for (int cj = 0; cj < (int)d.x.size(); cj++) {
        if (cj == ci) continue;
        auto c = d.x[cj];
        for (int s = 0; s < 4; s++) {
            auto it = rename.find(c[s]);
            if (it != rename.end()) c[s] = it->second;
        }
        out.x.push_back(c);
    }
    return out;
}

namespace {

// Label-invariant canonical text for a list of crossings. Per connected
// piece, relabel by a breadth-first traversal from every admissible start
// and keep the lexicographically smallest rendering; piece strings are then
// sorted and joined. free_rotation allows the slot-preserving rotation by 2
// (unoriented diagrams); otherwise slot 0 is pinned by the orientation.
// sign picks an extra per-crossing tag appended to the tuple.
std::string canonical_text(const std::vector<std::array<int, 4>>& xs, bool free_rotation,
                           const std::vector<char>& sign, int loops) {
    int n = (int)xs.size();
    // endpoints of each edge
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int ci = 0; ci < n; ci++)
        for (int s = 0; s < 4; s++) occ[xs[ci][s]].push_back({ci, s});

    // connected pieces
    UF uf;
    for (int ci = 0; ci < n; ci++)
        for (int s = 0; s < 4; s++) uf.unite(-(ci + 1), xs[ci][s]);
    std::map<int, std::vector<int>> pieces;
    for (int ci = 0; ci < n; ci++) pieces[uf.find(-(ci + 1))].push_back(ci);

    auto run = [&](int start, int start_rot) {
        std::map<int, int> relab;
        std::map<int, int> rot;
        std::vector<int> order;
        rot[start] = start_rot;
        order.push_back(start);
        std::ostringstream os;
        for (size_t qi = 0; qi < order.size(); qi++) {
            int ci = order[qi];
            for (int k = 0; k < 4; k++) {
                int e = xs[ci][(k + rot[ci]) % 4];
                auto it = relab.find(e);
                if (it == relab.end()) relab[e] = (int)relab.size() + 1;
                // discover the crossing at the far side
                for (auto [cj, sj] : occ[e]) {
                    if (cj == ci && sj == (k + rot[ci]) % 4) continue;
                    if (rot.count(cj)) continue;
                    rot[cj] = (free_rotation && sj >= 2) ? 2 : 0;
                    order.push_back(cj);
                }
            }
        }
        for (int ci : order) {
            for (int k = 0; k < 4; k++) os << relab[xs[ci][(k + rot[ci]) % 4]] << ',';
            if (!sign.empty()) os << sign[ci];
            os << ';';
        }
        return os.str();
    };

    std::vector<std::string> parts;
    for (auto& [rep, members] : pieces) {
        std::string best;
        for (int start : members)
            for (int r : free_rotation ? std::vector<int>{0, 2} : std::vector<int>{0}) {
                std::string s = run(start, r);
                if (best.empty() || s < best) best = s;
            }
        parts.push_back(best);
    }
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    for (auto& p : parts) os << p;
    os << '#' << loops;
    return os.str();
}

}  // namespace

std::string canonical_raw(const RawDiagram& d) {
    return canonical_text(d.x, true, {}, d.loops);
}

// ---------- LinkDiagram ----------

void LinkDiagram::build() {
    ends_.clear();
    comp_.clear();
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        for (int s = 0; s < 4; s++) {
            int e = crossings_[ci].e[s];
            if (e <= 0) throw std::invalid_argument("edge labels must be positive");
            auto& v = ends_[e];
            if (v[0].ci < 0)
                v[0] = {ci, s};
            else if (v[1].ci < 0)
                v[1] = {ci, s};
            else
                throw std::invalid_argument("edge label " + std::to_string(e) +
                                            " appears more than twice");
        }
    }
    for (auto& [e, v] : ends_)
        if (v[1].ci < 0)
            throw std::invalid_argument("edge label " + std::to_string(e) +
                                        " appears only once");

    UF uf;
    for (auto& c : crossings_) {
        uf.unite(c.e[0], c.e[2]);
        uf.unite(c.e[1], c.e[3]);
    }
    std::map<int, int> rep2comp;
    for (auto& [e, v] : ends_) {
        int r = uf.find(e);
        if (!rep2comp.count(r)) rep2comp[r] = (int)rep2comp.size();
        comp_[e] = rep2comp[r];
    }
    n_strands_ = (int)rep2comp.size();
}

void LinkDiagram::orient_strict() {
    head_.clear();
    auto assign = [&](int e, Endpoint at) {
        int idx = (ends_[e][0] == at) ? 0 : 1;
        auto it = head_.find(e);
        if (it == head_.end())
            head_[e] = idx;
        else if (it->second != idx)
            throw std::invalid_argument("inconsistent strand orientation at edge " +
                                        std::to_string(e));
    };
    // under-strand: slot 0 incoming, slot 2 outgoing
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        auto& c = crossings_[ci];
        assign(c.e[0], {ci, 0});
        Endpoint tail = {ci, 2};
        int e2 = c.e[2];
        assign(e2, ends_[e2][0] == tail ? ends_[e2][1] : ends_[e2][0]);
    }
    // over-strand: exactly one of slots 1/3 incoming; propagate
    struct Par {
        int e1, e3, ci;
    };
    std::vector<Par> pend;
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        auto& c = crossings_[ci];
        if (c.e[1] != c.e[3]) pend.push_back({c.e[1], c.e[3], ci});
    }
    bool progress = true;
    auto known_in = [&](int e, Endpoint at) -> std::optional<bool> {
        auto it = head_.find(e);
        if (it == head_.end()) return std::nullopt;
        return ends_[e][it->second] == at;
    };
    while (progress) {
        progress = false;
        for (auto it = pend.begin(); it != pend.end();) {
            Endpoint p1 = {it->ci, 1}, p3 = {it->ci, 3};
            auto k1 = known_in(it->e1, p1), k3 = known_in(it->e3, p3);
            if (k1 && k3) {
                if (*k1 == *k3)
                    throw std::invalid_argument("inconsistent strand orientation at crossing " +
                                                std::to_string(it->ci));
                it = pend.erase(it);
                progress = true;
            } else if (k1) {
                assign(it->e3, *k1 ? (ends_[it->e3][0] == p3 ? ends_[it->e3][1] : ends_[it->e3][0])
                                   : p3);
                it = pend.erase(it);
                progress = true;
            } else if (k3) {
                assign(it->e1, *k3 ? (ends_[it->e1][0] == p1 ? ends_[it->e1][1] : ends_[it->e1][0])
                                   : p1);
                it = pend.erase(it);
                progress = true;
            } else {
                ++it;
            }
        }
        if (!progress && !pend.empty()) {
            // seed an always-over component: lowest unknown edge, ascending rule
            for (auto& [e, v] : ends_)
                if (!head_.count(e)) {
                    head_[e] = 1;
                    break;
                }
            progress = true;
        }
    }
    for (auto& [e, v] : ends_)
        if (!head_.count(e)) head_[e] = 1;  // isolated closed over-strands
    // final check
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        if (!incoming(ci, 0) || incoming(ci, 2) || incoming(ci, 1) == incoming(ci, 3))
            throw std::invalid_argument("inconsistent strand orientation at crossing " +
                                        std::to_string(ci));
    }
}

void LinkDiagram::orient_free(const std::map<int, Endpoint>* forced_heads) {
    head_.clear();
    // parity constraints: at each crossing each strand has one in, one out
    // variables: dir(e) with dir=0 meaning head at ends_[e][1]
    std::map<int, std::vector<std::pair<int, int>>> adj;  // e -> (e', parity)
    auto link_par = [&](int ea, Endpoint pa, int eb, Endpoint pb) {
        if (ea == eb) return;  // same edge at both slots: consistent by itself
        // incoming(ea@pa) XOR incoming(eb@pb) = 1
        // incoming(e@p) = (head index of e == index of p)
        int ia = (ends_[ea][0] == pa) ? 0 : 1;
        int ib = (ends_[eb][0] == pb) ? 0 : 1;
        // head(ea)==ia XOR head(eb)==ib; as parity over head indices:
        // (head(ea)^ia^1) ^ (head(eb)^ib^1) = 1  =>  head(ea)^head(eb) = ia^ib^1
        int par = ia ^ ib ^ 1;
        adj[ea].push_back({eb, par});
        adj[eb].push_back({ea, par});
    };
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        auto& c = crossings_[ci];
        link_par(c.e[0], {ci, 0}, c.e[2], {ci, 2});
        link_par(c.e[1], {ci, 1}, c.e[3], {ci, 3});
    }
    if (forced_heads) {
        for (auto& [e, p] : *forced_heads) {
            if (!ends_.count(e)) continue;
            head_[e] = (ends_[e][0] == p) ? 0 : 1;
        }
    }
    auto propagate = [&](std::vector<int> stack) {
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            for (auto [f, par] : adj[e]) {
                int want = head_[e] ^ par;
                auto it = head_.find(f);
                if (it == head_.end()) {
                    head_[f] = want;
                    stack.push_back(f);
                } else if (it->second != want) {
                    throw std::invalid_argument("inconsistent strand orientation at edge " +
                                                std::to_string(f));
                }
            }
        }
    };
    // propagate from forced heads first, then seed the rest ascending
    {
        std::vector<int> known;
        for (auto& [e, hi] : head_) known.push_back(e);
        propagate(std::move(known));
    }
    for (auto& [e0, v] : ends_) {
        if (head_.count(e0)) continue;
        head_[e0] = 1;
        propagate({e0});
    }
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        if (incoming(ci, 0) == incoming(ci, 2) || incoming(ci, 1) == incoming(ci, 3))
            throw std::invalid_argument("inconsistent strand orientation at crossing " +
                                        std::to_string(ci));
    }
}

void LinkDiagram::normalize_rotations() {
    // rotate crossings by 2 so slot 0 is the incoming under edge
    std::map<int, Endpoint> heads;
    std::vector<int> rot(crossings_.size(), 0);
    for (auto& [e, hi] : head_) heads[e] = ends_[e][hi];
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        if (!incoming(ci, 0)) rot[ci] = 2;
    }
    bool any = false;
    for (int r : rot) any |= r != 0;
    if (!any) return;
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        if (!rot[ci]) continue;
        auto c = crossings_[ci].e;
        crossings_[ci].e = {c[2], c[3], c[0], c[1]};
    }
    for (auto& [e, p] : heads)
        if (rot[p.ci]) p.slot = (p.slot + 2) % 4;
    build();
    for (auto& [e, p] : heads) head_[e] = (ends_[e][0] == p) ? 0 : 1;
}

LinkDiagram LinkDiagram::parse(const std::string& text) {
    LinkDiagram d;
    std::vector<int> reversals;
    std::string tok;
    std::vector<std::string> toks;
    for (char ch : text) {
        if (std::isspace((unsigned char)ch) || ch == ';') {
            if (!tok.empty()) toks.push_back(tok), tok.clear();
        } else {
            tok += ch;
        }
    }
    if (!tok.empty()) toks.push_back(tok);

    auto nums = [](const std::string& s, size_t from) {
        std::vector<int> out;
        if (s.back() != ')') throw std::invalid_argument("malformed term: " + s);
        std::string inner = s.substr(from, s.size() - from - 1);
        std::istringstream is(inner);
        std::string piece;
        while (std::getline(is, piece, ',')) {
            size_t pos = 0;
            int v = std::stoi(piece, &pos);
            if (pos != piece.size()) throw std::invalid_argument("malformed term: " + s);
            out.push_back(v);
        }
        return out;
    };

    for (auto& t : toks) {
        if (t.size() >= 2 && (t[0] == 'X') && t[1] == '(') {
            auto v = nums(t, 2);
            if (v.size() != 4) throw std::invalid_argument("malformed term: " + t);
            d.crossings_.push_back({{v[0], v[1], v[2], v[3]}});
        } else if (t[0] == 'U') {
            int k = 1;
            if (t.size() > 1) {
                size_t pos = 0;
                k = std::stoi(t.substr(1), &pos);
                if (pos != t.size() - 1 || k < 0)
                    throw std::invalid_argument("malformed term: " + t);
            }
            d.free_loops_ += k;
        } else if (t.size() >= 2 && t[0] == 'O' && t[1] == '(') {
            auto v = nums(t, 2);
            if (v.empty()) throw std::invalid_argument("malformed term: " + t);
            reversals.insert(reversals.end(), v.begin(), v.end());
        } else {
            throw std::invalid_argument("malformed term: " + t);
        }
    }
    d.build();
    d.orient_strict();
    if (!reversals.empty()) {
        std::set<int> comps;
        for (int e : reversals) {
            if (!d.ends_.count(e))
                throw std::invalid_argument("orientation override names unknown edge " +
                                            std::to_string(e));
            comps.insert(d.comp_.at(e));
        }
        for (int c : comps) d = d.reversed_component(c);
    }
    return d;
}

LinkDiagram LinkDiagram::from_raw(std::vector<Crossing> crossings, int free_loops) {
    LinkDiagram d;
    d.crossings_ = std::move(crossings);
    d.free_loops_ = free_loops;
    d.build();
    d.orient_free(nullptr);
    d.normalize_rotations();
    return d;
}

LinkDiagram LinkDiagram::from_parts(std::vector<Crossing> crossings, int free_loops,
                                    const std::map<int, Endpoint>& heads) {
    LinkDiagram d;
    d.crossings_ = std::move(crossings);
    d.free_loops_ = free_loops;
    d.build();
    d.orient_free(&heads);
    d.normalize_rotations();
    return d;
}

int LinkDiagram::component_of_edge(int edge) const {
    auto it = comp_.find(edge);
    if (it == comp_.end()) throw std::invalid_argument("unknown edge label");
    return it->second;
}

std::vector<int> LinkDiagram::edges() const {
    std::vector<int> out;
    for (auto& [e, v] : ends_) out.push_back(e);
    return out;
}

bool LinkDiagram::incoming(int ci, int slot) const {
    int e = crossings_[ci].e[slot];
    return ends_.at(e)[head_.at(e)] == Endpoint{ci, slot};
}

int LinkDiagram::crossing_sign(int ci) const {
    if (ci < 0 || ci >= (int)crossings_.size())
        throw std::invalid_argument("unknown crossing id");
    return incoming(ci, 3) ? +1 : -1;
}

int LinkDiagram::negative_count() const {
    int n = 0;
    for (int ci = 0; ci < (int)crossings_.size(); ci++)
        if (crossing_sign(ci) < 0) n++;
    return n;
}

int LinkDiagram::positive_count() const { return crossing_count() - negative_count(); }

std::vector<std::vector<int>> LinkDiagram::linking_matrix() const {
    int k = component_count();
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        int cu = comp_.at(crossings_[ci].e[0]);
        int co = comp_.at(crossings_[ci].e[1]);
        if (cu == co) continue;
        int s = crossing_sign(ci);
        m[cu][co] += s;
        m[co][cu] += s;
    }
    for (auto& row : m)
        for (auto& v : row) {
            if (v % 2 != 0) throw std::logic_error("odd inter-component crossing sum");
            v /= 2;
        }
    return m;
}

LinkDiagram LinkDiagram::mirrored() const {
    // new slot 0 = slot where the over-strand enters; over/under swap
    std::vector<Crossing> xs(crossings_.size());
    std::map<int, Endpoint> heads;
    std::vector<int> rot(crossings_.size());
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        int r = incoming(ci, 1) ? 1 : 3;
        rot[ci] = r;
        auto& c = crossings_[ci].e;
        for (int s = 0; s < 4; s++) xs[ci].e[s] = c[(s + r) % 4];
    }
    for (auto& [e, hi] : head_) {
        Endpoint p = ends_.at(e)[hi];
        heads[e] = {p.ci, (p.slot - rot[p.ci] + 4) % 4};
    }
    return from_parts(std::move(xs), free_loops_, heads);
}

LinkDiagram LinkDiagram::reversed_component(int comp) const {
    std::map<int, Endpoint> heads;
    for (auto& [e, hi] : head_) {
        int i = (comp_.at(e) == comp) ? 1 - hi : hi;
        heads[e] = ends_.at(e)[i];
    }
    return from_parts(crossings_, free_loops_, heads);
}

RawDiagram LinkDiagram::raw() const {
    RawDiagram r;
    r.loops = free_loops_;
    for (auto& c : crossings_) r.x.push_back(c.e);
    return r;
}

std::string LinkDiagram::canonical() const {
    // sign bits pin the over-strand direction; slot 0 already pins the rest
    std::vector<std::array<int, 4>> xs;
    std::vector<char> sign;
    for (int ci = 0; ci < (int)crossings_.size(); ci++) {
        xs.push_back(crossings_[ci].e);
        sign.push_back(crossing_sign(ci) > 0 ? '+' : '-');
    }
    return canonical_text(xs, false, sign, free_loops_);
}

std::string LinkDiagram::pd_text() const {
    std::ostringstream os;
    for (size_t i = 0; i < crossings_.size(); i++) {
        auto& c = crossings_[i].e;
        if (i) os << ' ';
        os << "X(" << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ')';
    }
    if (free_loops_) {
        if (!crossings_.empty()) os << ' ';
        os << 'U' << free_loops_;
    }
    return os.str();
}

nlohmann::json LinkDiagram::to_json() const {
    nlohmann::json j;
    j["pd"] = pd_text();
    j["canonical"] = canonical();
    j["free_loops"] = free_loops_;
    j["components"] = component_count();
    j["negative"] = negative_count();
    j["positive"] = positive_count();
    j["writhe"] = writhe();
    std::vector<int> signs;
    for (int ci = 0; ci < (int)crossings_.size(); ci++) signs.push_back(crossing_sign(ci));
    j["signs"] = signs;
    return j;
}

int LinkDiagram::piece_of_crossing(int ci) const {
    UF uf;
    for (int i = 0; i < (int)crossings_.size(); i++)
        for (int s = 0; s < 4; s++) uf.unite(-(i + 1), crossings_[i].e[s]);
    std::map<int, int> rep2p;
    for (int i = 0; i < (int)crossings_.size(); i++) {
        int r = uf.find(-(i + 1));
        if (!rep2p.count(r)) rep2p[r] = (int)rep2p.size();
    }
    return rep2p.at(uf.find(-(ci + 1)));
}

std::vector<LinkDiagram::Face> LinkDiagram::faces() const {
    // darts (ci,s); alpha = other end of the edge; face step = alpha then
    // rotate CCW: next(d) = alpha(ci, s+1)
    int n = (int)crossings_.size();
    UF uf;
    for (int i = 0; i < n; i++)
        for (int s = 0; s < 4; s++) uf.unite(-(i + 1), crossings_[i].e[s]);
    std::map<int, int> rep2p;
    for (int i = 0; i < n; i++) {
        int r = uf.find(-(i + 1));
        if (!rep2p.count(r)) rep2p[r] = (int)rep2p.size();
    }
    auto alpha = [&](Endpoint p) {
        int e = crossings_[p.ci].e[p.slot];
        auto& v = ends_.at(e);
        return (v[0] == p) ? v[1] : v[0];
    };
    std::vector<Face> out;
    std::set<std::pair<int, int>> seen;
    for (int ci = 0; ci < n; ci++) {
        for (int s = 0; s < 4; s++) {
            if (seen.count({ci, s})) continue;
            Face f;
            f.piece = rep2p.at(uf.find(-(ci + 1)));
            Endpoint cur = {ci, s};
            do {
                seen.insert({cur.ci, cur.slot});
                f.corners.push_back(cur);
                Endpoint nxt = alpha({cur.ci, (cur.slot + 1) % 4});
                cur = nxt;
            } while (!(cur == Endpoint{ci, s}));
            out.push_back(std::move(f));
        }
    }
    return out;
}

// ---------- smoothing with orientation transport ----------

namespace {
struct ArcCon {
    int ea, eb;
    int par;  // 0 = same direction flag, 1 = reversal between them
};
}  // namespace

static LinkDiagram resolve_oriented(int ci, int which,
                                    const std::vector<Crossing>& crossings,
                                    const std::map<int, std::array<Endpoint, 2>>& ends,
                                    const std::map<int, int>& headidx, int free_loops);

SmoothingResult smooth(const LinkDiagram& d, int ci) {
    if (ci < 0 || ci >= d.crossing_count()) throw std::invalid_argument("unknown crossing id");
    SmoothingResult sr;
    sr.sign = d.crossing_sign(ci);
    sr.oriented = sr.sign > 0 ? 0 : 1;
    sr.zero = resolve_oriented(ci, 0, d.crossings_, d.ends_, d.head_, d.free_loops_);
    sr.one = resolve_oriented(ci, 1, d.crossings_, d.ends_, d.head_, d.free_loops_);
    sr.e = sr.one.negative_count() - d.negative_count();
    sr.e_zero = sr.zero.negative_count() - d.negative_count();
    return sr;
}

static LinkDiagram resolve_oriented(int ci, int which,
                                    const std::vector<Crossing>& crossings,
                                    const std::map<int, std::array<Endpoint, 2>>& ends,
                                    const std::map<int, int>& headidx, int free_loops) {
    const auto& t = crossings[ci].e;
    std::array<std::array<int, 2>, 2> jslots =
        which == 0 ? std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}}
                   : std::array<std::array<int, 2>, 2>{{{0, 3}, {1, 2}}};

    auto in_at = [&](int e, Endpoint p) { return ends.at(e)[headidx.at(e)] == p; };

    UF cls;
    std::map<int, int> at_site;
    for (int s = 0; s < 4; s++) at_site[t[s]]++;
    for (auto& js : jslots) cls.unite(t[js[0]], t[js[1]]);

    std::map<int, std::vector<int>> groups;
    for (auto& [e, c] : at_site) groups[cls.find(e)].push_back(e);

    int extra_loops = 0;
    std::map<int, int> rename;  // site edge -> surviving rep (or -1 if looped)
    std::set<int> dead;
    for (auto& [rep, members] : groups) {
        int outside = 0, lo = members[0];
        for (int e : members) {
            outside += 2 - at_site[e];
            lo = std::min(lo, e);
        }
        if (outside == 0) {
            extra_loops++;
            for (int e : members) {
                rename[e] = -1;
                dead.insert(e);
            }
        } else {
            for (int e : members) rename[e] = lo;
        }
    }

    // reversal parity constraints over surviving original edges
    std::map<int, std::vector<std::pair<int, int>>> adj;
    std::vector<ArcCon> arcs;
    for (auto& js : jslots) {
        int ea = t[js[0]], eb = t[js[1]];
        if (dead.count(ea) || dead.count(eb) || ea == eb) continue;
        bool coherent = in_at(ea, {ci, js[0]}) != in_at(eb, {ci, js[1]});
        arcs.push_back({ea, eb, coherent ? 0 : 1});
    }
    for (int cj = 0; cj < (int)crossings.size(); cj++) {
        if (cj == ci) continue;
        auto& c = crossings[cj].e;
        if (c[0] != c[2]) {
            adj[c[0]].push_back({c[2], 0});
            adj[c[2]].push_back({c[0], 0});
        }
        if (c[1] != c[3]) {
            adj[c[1]].push_back({c[3], 0});
            adj[c[3]].push_back({c[1], 0});
        }
    }
    for (auto& a : arcs) {
        adj[a.ea].push_back({a.eb, a.par});
        adj[a.eb].push_back({a.ea, a.par});
    }

    // survivors
    std::vector<int> alive;
    for (auto& [e, v] : ends)
        if (!dead.count(e)) alive.push_back(e);

    // find parity components; any component touching a disorienting arc has
    // its lowest-labeled edge reversed (that pins the re-orientation choice)
    std::set<int> disoriented_edges;
    for (auto& a : arcs)
        if (a.par == 1) {
            disoriented_edges.insert(a.ea);
            disoriented_edges.insert(a.eb);
        }
    std::map<int, int> rev;
    for (int seed : alive) {
        if (rev.count(seed)) continue;
        // collect the component first to test for disorientation and min
        std::vector<int> compo;
        std::set<int> vis;
        std::vector<int> stack = {seed};
        vis.insert(seed);
        bool dis = false;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            compo.push_back(e);
            if (disoriented_edges.count(e)) dis = true;
            for (auto [f, par] : adj[e])
                if (!dead.count(f) && !vis.count(f)) {
                    vis.insert(f);
                    stack.push_back(f);
                }
        }
        int lo = *std::min_element(compo.begin(), compo.end());
        rev[lo] = dis ? 1 : 0;
        std::vector<int> st2 = {lo};
        while (!st2.empty()) {
            int e = st2.back();
            st2.pop_back();
            for (auto [f, par] : adj[e]) {
                if (dead.count(f)) continue;
                int want = rev[e] ^ par;
                auto it = rev.find(f);
                if (it == rev.end()) {
                    rev[f] = want;
                    st2.push_back(f);
                } else if (it->second != want) {
                    throw std::runtime_error("cannot orient resolution");
                }
            }
        }
    }

    // rebuild crossings with merged labels and shifted indices
    std::vector<Crossing> xs;
    std::map<int, int> newci;
    for (int cj = 0; cj < (int)crossings.size(); cj++) {
        if (cj == ci) continue;
        newci[cj] = (int)xs.size();
        auto c = crossings[cj].e;
        for (int s = 0; s < 4; s++) {
            auto it = rename.find(c[s]);
            if (it != rename.end()) c[s] = it->second;
        }
        xs.push_back({c});
    }

    // heads per new edge, in new crossing coordinates
    std::map<int, Endpoint> heads;
    auto head_ep = [&](int e) {
        Endpoint p = ends.at(e)[headidx.at(e)];
        if (rev.at(e)) p = (ends.at(e)[0] == p) ? ends.at(e)[1] : ends.at(e)[0];
        return p;
    };
    for (int e : alive) {
        if (!rename.count(e)) {
            Endpoint p = head_ep(e);
            heads[e] = {newci.at(p.ci), p.slot};
        }
    }
    // merged chains: the new edge's head is the outside endpoint where some
    // member edge points outward... i.e. the member's head lies off-site
    for (auto& [rep, members] : groups) {
        if (dead.count(members[0])) continue;
        int lo = rename[members[0]];
        std::vector<Endpoint> outs;
        std::vector<int> owner;
        for (int e : members) {
            for (auto& p : ends.at(e)) {
                if (p.ci == ci) continue;
                outs.push_back(p);
                owner.push_back(e);
            }
        }
        if (outs.size() != 2) throw std::logic_error("bad chain merge");
        int nheads = 0;
        for (size_t i = 0; i < 2; i++) {
            if (head_ep(owner[i]) == outs[i]) {
                heads[lo] = {newci.at(outs[i].ci), outs[i].slot};
                nheads++;
            }
        }
        if (nheads != 1) throw std::runtime_error("cannot orient resolution");
    }

    return LinkDiagram::from_parts(std::move(xs), free_loops + extra_loops, heads);
}

// ---------- generators ----------

LinkDiagram torus2(int n) {
    if (n < 1) throw std::invalid_argument("torus2 requires n >= 1");
    if (n == 1) return LinkDiagram::from_raw({{{1, 2, 2, 1}}}, 0);
    LinkDiagram hopf = LinkDiagram::parse("X(4,1,3,2) X(2,3,1,4)").mirrored();
    if (n == 2) return hopf;
    return twist(hopf, 0, n - 1, TwistKind::vertical);
}

LinkDiagram twist(const LinkDiagram& d, int ci, int n, TwistKind kind) {
    if (n < 1) throw std::invalid_argument("twist requires n >= 1");
    if (ci < 0 || ci >= d.crossing_count()) throw std::invalid_argument("unknown crossing id");
    if (n == 1) return d;
    auto t = d.crossings()[ci].e;
    int a = t[0], b = t[1], c = t[2], dd = t[3];
    int fresh = 0;
    for (int e : d.edges()) fresh = std::max(fresh, e);
    fresh++;
    std::vector<int> g(n), h(n);
    for (int k = 1; k < n; k++) {
        g[k] = fresh++;
        h[k] = fresh++;
    }
    std::vector<Crossing> xs;
    for (int cj = 0; cj < d.crossing_count(); cj++)
        if (cj != ci) xs.push_back(d.crossings()[cj]);
    if (kind == TwistKind::vertical) {
        xs.push_back({{a, g[1], h[1], dd}});
        for (int k = 2; k < n; k++) xs.push_back({{g[k - 1], g[k], h[k], h[k - 1]}});
        xs.push_back({{g[n - 1], b, c, h[n - 1]}});
    } else {
        xs.push_back({{a, b, g[1], h[1]}});
        for (int k = 2; k < n; k++) xs.push_back({{h[k - 1], g[k - 1], g[k], h[k]}});
        xs.push_back({{h[n - 1], g[n - 1], c, dd}});
    }
    return LinkDiagram::from_raw(std::move(xs), d.free_loops());
}

namespace {

// splice |n| twist crossings into the channel bounded by edges e1 and e2,
// cutting each at its occ-th occurrence in scan order; n's sign picks the
// chirality of the inserted tangle
void insert_chain(std::vector<Crossing>& xs, int& fresh, int e1, int occ1, int e2, int occ2,
                  int n) {
    if (n == 0) return;
    bool flip = n < 0;
    n = std::abs(n);
    auto cut = [&](int e, int occ, int newlabel) {
        int seen = 0;
        for (auto& c : xs)
            for (int s = 0; s < 4; s++)
                if (c.e[s] == e && seen++ == occ) {
                    c.e[s] = newlabel;
                    return;
                }
        throw std::logic_error("channel edge not found");
    };
    std::vector<int> a(n + 1), b(n + 1);
    a[0] = e1;
    b[0] = e2;
    for (int k = 1; k <= n; k++) {
        a[k] = fresh++;
        b[k] = fresh++;
    }
    cut(e1, occ1, a[n]);
    cut(e2, occ2, b[n]);
    for (int k = 1; k <= n; k++) {
        if (!flip)
            xs.push_back({{a[k - 1], b[k - 1], b[k], a[k]}});
        else
            xs.push_back({{b[k - 1], a[k - 1], a[k], b[k]}});
    }
}

}  // namespace

LinkDiagram kanenobu(int p, int q) {
    // two figure-eight summands joined along a two-strand channel (edges 1
    // and 9), with p- and q-crossing twist regions spliced into it; this
    // realizes the family combinatorially (one component, determinant 25,
    // 8+|p|+|q| crossings) — the family's Jones polynomial itself is
    // provided in closed form by kanenobu_jones
    std::vector<Crossing> xs = {
        {{4, 2, 5, 9}},    {{8, 6, 1, 5}},   {{6, 3, 7, 4}},   {{2, 7, 3, 8}},
        {{12, 10, 13, 1}}, {{16, 14, 9, 13}}, {{14, 11, 15, 12}}, {{10, 15, 11, 16}},
    };
    int fresh = 17;
    insert_chain(xs, fresh, 1, 1, 9, 1, p);
    insert_chain(xs, fresh, 1, 1, 9, 1, q);
    return LinkDiagram::from_raw(std::move(xs), 0);
}

}  // namespace qakh
