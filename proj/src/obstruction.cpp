#include "qakh/obstruction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "qakh/khovanov.hpp"
#include "qakh/skein.hpp"

namespace qakh {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::satisfied: return "satisfied";
        case CheckStatus::violated: return "violated";
        default: return "inapplicable";
    }
}

bool ObstructionReport::violated() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::violated) return true;
    return false;
}

std::string ObstructionReport::verdict() const {
    return violated() ? "not_quasi_alternating" : "no_obstruction_found";
}

nlohmann::json ObstructionReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
        arr.push_back({{"check", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
    return {{"checks", arr}, {"verdict", verdict()}};
}

namespace {

std::string gap_witness(const GapRecord& g) {
    return "gap of length " + std::to_string(g.length) + " starting at key " +
           std::to_string(g.start_key);
}

CheckRecord gap_check(const std::string& name, const std::vector<GapRecord>& gaps) {
    CheckRecord r{name, CheckStatus::satisfied, ""};
    for (const auto& g : gaps)
        if (g.length > 1) {
            r.status = CheckStatus::violated;
            r.witness = gap_witness(g);
            break;
        }
    return r;
}

}  // namespace

DetBound det_bound_check(const HalfLaurent& jones_v) {
    if (jones_v.is_zero()) throw std::invalid_argument("zero Jones polynomial");
    DetBound b;
    int breadth = jones_v.breadth_doubled() / 2;  // in whole powers of t
    b.lhs = (breadth + 1) / 2 + 1;
    b.det = determinant_eval(jones_v);
    b.holds = b.lhs <= b.det;
    return b;
}

ObstructionReport obstruction_report(const LinkDiagram& d) {
    ObstructionReport rep;
    auto v = jones(d);
    rep.checks.push_back(gap_check("jones_gap_lengths", v.is_zero() ? std::vector<GapRecord>{}
                                                                    : gaps_of(v, 2)));

    bool small = d.crossing_count() <= kh_crossing_limit();
    if (small) {
        auto h = khovanov(d);
        int sigma = signature(d);
        auto lee = lee_dims(d.component_count(), d.linking_matrix());

        rep.checks.push_back(gap_check("differential_gap_lengths", differential_gaps(h)));
        rep.checks.push_back(gap_check("quantum_gap_lengths", quantum_gaps(h)));

        auto thin = thinness(h, sigma);
        CheckRecord t{"thinness", CheckStatus::satisfied, ""};
        if (!thin.thin) {
            t.status = CheckStatus::violated;
            t.witness = "cell off both diagonals at (" +
                        std::to_string(thin.offenders[0].first) + "," +
                        std::to_string(thin.offenders[0].second) + ")";
        }
        rep.checks.push_back(t);

        auto km = knight_move_decompose(h, lee, sigma);
        CheckRecord k{"knight_move", CheckStatus::satisfied, ""};
        if (!km.ok) {
            k.status = CheckStatus::violated;
            k.witness = km.reason;
        }
        rep.checks.push_back(k);

        auto b = breadths(h);
        CheckRecord br{"breadth_identity", CheckStatus::satisfied, ""};
        if (!b.relation_holds) {
            br.status = CheckStatus::violated;
            br.witness = "breadth_j " + std::to_string(b.breadth_j) + " != 2*" +
                         std::to_string(b.breadth_i) + " + 2";
        }
        rep.checks.push_back(br);
    } else {
        for (const char* name : {"differential_gap_lengths", "quantum_gap_lengths", "thinness",
                                 "knight_move", "breadth_identity"})
            rep.checks.push_back({name, CheckStatus::inapplicable, ""});
    }

    auto db = det_bound_check(v);
    CheckRecord dc{"determinant_bound", CheckStatus::satisfied, ""};
    if (!db.holds) {
        dc.status = CheckStatus::violated;
        dc.witness = "ceil(breadth/2)+1 = " + std::to_string(db.lhs) + " > det = " +
                     std::to_string(db.det);
    }
    rep.checks.push_back(dc);
    return rep;
}

HalfLaurent kanenobu_jones(int p, int q) {
    auto v8 = HalfLaurent::monomial(1, -4) + HalfLaurent::monomial(-1, -2) + HalfLaurent::one() +
              HalfLaurent::monomial(-1, 2) + HalfLaurent::monomial(1, 4);
    int s = p + q;
    auto factor = HalfLaurent::one().shifted((s % 2) ? -1 : 1, 2 * s);
    return factor * (v8 * v8 - HalfLaurent::one()) + HalfLaurent::one();
}

ObstructionReport kanenobu_verdict(int p, int q) {
    ObstructionReport rep;
    rep.checks.push_back(gap_check("jones_gap_lengths", gaps_of(kanenobu_jones(p, q), 2)));
    return rep;
}

// ---- greedy Reidemeister I/II reduction ----------------------------------

namespace {

struct RawLink {
    std::vector<Crossing> xs;
    int loops = 0;
};

int occurrences(const std::vector<Crossing>& xs, int label) {
    int n = 0;
    for (const auto& c : xs)
        for (int s = 0; s < 4; s++)
            if (c.e[s] == label) n++;
    return n;
}

void subst(std::vector<Crossing>& xs, int from, int to) {
    for (auto& c : xs)
        for (int s = 0; s < 4; s++)
            if (c.e[s] == from) c.e[s] = to;
}

// merge edge labels a and b into one strand; a closed circle becomes a loop
void merge_edges(RawLink& r, int a, int b) {
    if (a == b) {
        r.loops++;
        return;
    }
    subst(r.xs, b, a);
    if (occurrences(r.xs, a) == 0) r.loops++;
}

bool reduce_r1(RawLink& r) {
    for (size_t i = 0; i < r.xs.size(); i++) {
        const auto& c = r.xs[i];
        for (int s = 0; s < 4; s++) {
            if (c.e[s] != c.e[(s + 1) % 4]) continue;
            int a = c.e[(s + 2) % 4], b = c.e[(s + 3) % 4];
            r.xs.erase(r.xs.begin() + i);
            merge_edges(r, a, b);
            return true;
        }
    }
    return false;
}

bool reduce_r2(const LinkDiagram& d, RawLink& r) {
    auto fs = d.faces();
    for (const auto& f : fs) {
        if (f.corners.size() != 2) continue;
        auto [ci, si] = f.corners[0];
        auto [cj, sj] = f.corners[1];
        if (ci == cj) continue;
        const auto& a = d.crossings()[ci].e;
        const auto& b = d.crossings()[cj].e;
        int x = a[si], y = a[(si + 1) % 4];
        if (!((b[sj] == y && b[(sj + 1) % 4] == x) || (b[sj] == x && b[(sj + 1) % 4] == y)))
            continue;
        int xi = si, xj = b[sj] == x ? sj : (sj + 1) % 4;
        int yi = (si + 1) % 4, yj = b[sj] == y ? sj : (sj + 1) % 4;
        // over at both crossings / under at both: slots 0,2 are under
        if (xi % 2 != xj % 2) continue;
        if (yi % 2 != yj % 2) continue;
        int px = a[(xi + 2) % 4], qx = b[(xj + 2) % 4];
        int py = a[(yi + 2) % 4], qy = b[(yj + 2) % 4];
        // skip tangled self-incidences; another site or pass will fire
        for (int z : {px, qx, py, qy})
            if (z == x || z == y) goto next_face;
        {
            RawLink out;
            out.loops = r.loops;
            for (int k = 0; k < (int)r.xs.size(); k++)
                if (k != ci && k != cj) out.xs.push_back(r.xs[k]);
            // track label renames across the two merges
            merge_edges(out, px, qx);
            int py2 = py == qx ? px : py, qy2 = qy == qx ? px : qy;
            merge_edges(out, py2, qy2);
            r = std::move(out);
            return true;
        }
    next_face:;
    }
    return false;
}

}  // namespace

LinkDiagram simplified(const LinkDiagram& d) {
    RawLink r{d.crossings(), d.free_loops()};
    bool changed = true;
    while (changed) {
        changed = false;
        while (reduce_r1(r)) changed = true;
        if (r.xs.empty()) break;
        auto cur = LinkDiagram::from_raw(r.xs, r.loops);
        if (reduce_r2(cur, r)) changed = true;
    }
    return LinkDiagram::from_raw(r.xs, r.loops);
}

// ---- certifier ------------------------------------------------------------

namespace {

struct SearchCtx {
    long budget = 0;
    std::map<std::string, QANode> certified;
};

bool search(const LinkDiagram& d, SearchCtx& ctx, QANode& node, long& used) {
    if (ctx.budget <= 0) return false;
    ctx.budget--;
    used++;
    node = QANode{};
    node.diagram = simplified(d);
    node.det = determinant_eval(jones(node.diagram));
    if (node.diagram.crossing_count() == 0)
        return node.diagram.component_count() == 1;  // unknot leaf

    auto key = node.diagram.canonical();
    auto hit = ctx.certified.find(key);
    if (hit != ctx.certified.end()) {
        node = hit->second;
        return true;
    }

    for (int c = 0; c < node.diagram.crossing_count(); c++) {
        auto sm = smooth(node.diagram, c);
        long long d0 = determinant_eval(jones(sm.zero));
        long long d1 = determinant_eval(jones(sm.one));
        if (d0 < 1 || d1 < 1 || d0 + d1 != node.det) continue;
        QANode n0, n1;
        if (!search(sm.zero, ctx, n0, used)) continue;
        if (!search(sm.one, ctx, n1, used)) continue;
        node.crossing = c;
        node.children = {std::move(n0), std::move(n1)};
        ctx.certified[key] = node;
        return true;
    }
    return false;
}

}  // namespace

QACertificate qa_certify(const LinkDiagram& d, long budget) {
    if (budget < 1) throw std::invalid_argument("budget must be positive");
    QACertificate cert;
    SearchCtx ctx;
    ctx.budget = budget;
    cert.certified = search(d, ctx, cert.root, cert.nodes_used);
    return cert;
}

bool validate_certificate(const QANode& n) {
    if (n.det != determinant_eval(jones(n.diagram))) return false;
    if (n.children.empty())
        return n.diagram.crossing_count() == 0 && n.diagram.component_count() == 1 && n.det == 1;
    if (n.children.size() != 2) return false;
    if (n.crossing < 0 || n.crossing >= n.diagram.crossing_count()) return false;
    const auto& a = n.children[0];
    const auto& b = n.children[1];
    if (a.det < 1 || b.det < 1 || a.det + b.det != n.det) return false;
    if (a.det >= n.det || b.det >= n.det) return false;
    // children must be the simplified resolutions of the chosen crossing
    auto sm = smooth(n.diagram, n.crossing);
    if (simplified(sm.zero).canonical() != a.diagram.canonical()) return false;
    if (simplified(sm.one).canonical() != b.diagram.canonical()) return false;
    return validate_certificate(a) && validate_certificate(b);
}

nlohmann::json QACertificate::to_json() const {
    std::function<nlohmann::json(const QANode&)> dump = [&](const QANode& n) {
        nlohmann::json j;
        j["pd"] = n.diagram.pd_text();
        j["det"] = n.det;
        if (!n.children.empty()) {
            j["crossing"] = n.crossing;
            j["zero"] = dump(n.children[0]);
            j["one"] = dump(n.children[1]);
        }
        return j;
    };
    nlohmann::json j;
    j["certified"] = certified;
    j["nodes_used"] = nodes_used;
    if (certified) j["tree"] = dump(root);
    return j;
}

}  // namespace qakh
