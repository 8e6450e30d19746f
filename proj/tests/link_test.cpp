#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "qakh/link.hpp"

using qakh::Crossing;
using qakh::LinkDiagram;
using qakh::RawDiagram;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kHopfNeg = "X(4,1,3,2) X(2,3,1,4)";
const char* kFig8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

// independent strand count: walk (crossing, slot) pairs through the diagram
int traced_strands(const LinkDiagram& d) {
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int ci = 0; ci < d.crossing_count(); ci++)
        for (int s = 0; s < 4; s++) occ[d.crossings()[ci].e[s]].push_back({ci, s});
    std::set<int> unvisited;
    for (auto& [e, v] : occ) unvisited.insert(e);
    int cycles = 0;
    while (!unvisited.empty()) {
        int start = *unvisited.begin();
        int e = start;
        auto at = occ[e][0];
        do {
            unvisited.erase(e);
            // continue through the crossing: opposite slot carries the strand
            int ci = at.first, s = (at.second + 2) % 4;
            e = d.crossings()[ci].e[s];
            // far endpoint of e
            auto& both = occ[e];
            at = (both[0] == std::make_pair(ci, s)) ? both[1] : both[0];
        } while (e != start);
        cycles++;
    }
    return cycles;
}

}  // namespace

TEST_CASE("parsing and validation") {
    LinkDiagram t = LinkDiagram::parse(kTrefoil);
    CHECK(t.crossing_count() == 3);
    CHECK(t.component_count() == 1);
    CHECK(traced_strands(t) == 1);

    LinkDiagram u = LinkDiagram::parse("U1");
    CHECK(u.crossing_count() == 0);
    CHECK(u.component_count() == 1);
    CHECK(u.free_loops() == 1);

    LinkDiagram mix = LinkDiagram::parse(std::string(kTrefoil) + " U1");
    CHECK(mix.component_count() == 2);

    LinkDiagram h = LinkDiagram::parse(kHopfNeg);
    CHECK(h.component_count() == 2);
    CHECK(traced_strands(h) == 2);

    CHECK_THROWS(LinkDiagram::parse("X(1,2,3)"));
    CHECK_THROWS(LinkDiagram::parse("X(1,2,3,4,5)"));
    CHECK_THROWS(LinkDiagram::parse("Y(1,2,3,4)"));
    CHECK_THROWS(LinkDiagram::parse("X(1,2,3,4)"));              // labels used once
    CHECK_THROWS(LinkDiagram::parse("X(1,1,1,2) X(2,3,3,4)"));   // label thrice
    CHECK_THROWS(LinkDiagram::parse("X(1,2,3,4) X(1,4,3,2)"));   // head demanded twice
    CHECK(LinkDiagram::parse("X(1,4,2,5); X(3,6,4,1);X(5,2,6,3)").crossing_count() == 3);
}

TEST_CASE("crossing signs and writhe") {
    LinkDiagram t = LinkDiagram::parse(kTrefoil);
    CHECK(t.negative_count() == 3);
    CHECK(t.positive_count() == 0);
    CHECK(t.writhe() == -3);

    LinkDiagram m = t.mirrored();
    CHECK(m.negative_count() == 0);
    CHECK(m.writhe() == 3);

    LinkDiagram u = LinkDiagram::parse("U1");
    CHECK(u.writhe() == 0);

    LinkDiagram h = LinkDiagram::parse(kHopfNeg);
    CHECK(h.writhe() == -2);

    LinkDiagram f8 = LinkDiagram::parse(kFig8);
    CHECK(f8.writhe() == 0);
    CHECK(f8.negative_count() == 2);

    for (const LinkDiagram& d : {t, m, h, f8})
        CHECK(d.negative_count() + d.positive_count() == d.crossing_count());
}

TEST_CASE("linking matrix") {
    LinkDiagram h = LinkDiagram::parse(kHopfNeg);
    auto lm = h.linking_matrix();
    REQUIRE(lm.size() == 2);
    CHECK(lm[0][0] == 0);
    CHECK(lm[1][1] == 0);
    CHECK(lm[0][1] == -1);
    CHECK(lm[1][0] == -1);

    auto lp = h.mirrored().linking_matrix();
    CHECK(lp[0][1] == 1);

    auto lu = LinkDiagram::parse("U2").linking_matrix();
    REQUIRE(lu.size() == 2);
    CHECK(lu[0][1] == 0);

    CHECK(LinkDiagram::parse(kTrefoil).linking_matrix().size() == 1);
}

TEST_CASE("component reversal and orientation override") {
    LinkDiagram h = LinkDiagram::parse(kHopfNeg);
    LinkDiagram r = h.reversed_component(1);
    CHECK(r.writhe() == 2);  // reversing one strand of a clasp flips both signs
    CHECK(r.reversed_component(1).canonical() == h.canonical());

    // reversing the single strand of a knot preserves every sign
    LinkDiagram t = LinkDiagram::parse(kTrefoil);
    CHECK(t.reversed_component(0).writhe() == -3);

    // O(edge) reverses the component containing that edge
    LinkDiagram ho = LinkDiagram::parse(std::string(kHopfNeg) + " O(1)");
    CHECK(ho.canonical() == h.reversed_component(h.component_of_edge(1)).canonical());
    CHECK(ho.writhe() == 2);
    CHECK_THROWS(LinkDiagram::parse("U1 O(3)"));
}

TEST_CASE("mirror is an involution and swaps strands") {
    for (const char* pd : {kTrefoil, kHopfNeg, kFig8}) {
        LinkDiagram d = LinkDiagram::parse(pd);
        LinkDiagram mm = d.mirrored().mirrored();
        CHECK(mm.canonical() == d.canonical());
        CHECK(d.mirrored().writhe() == -d.writhe());
        CHECK(d.mirrored().component_count() == d.component_count());
    }
    LinkDiagram u = LinkDiagram::parse("U1");
    CHECK(u.mirrored().canonical() == u.canonical());
}

TEST_CASE("canonical form is label-invariant") {
    LinkDiagram t = LinkDiagram::parse(kTrefoil);
    LinkDiagram t2 = LinkDiagram::parse("X(11,14,12,15) X(13,16,14,11) X(15,12,16,13)");
    CHECK(t.canonical() == t2.canonical());
    CHECK(t.canonical() != t.mirrored().canonical());
    // pd_text parses back to the same diagram
    for (const char* pd : {kTrefoil, kHopfNeg, kFig8}) {
        LinkDiagram d = LinkDiagram::parse(pd);
        CHECK(LinkDiagram::parse(d.pd_text()).canonical() == d.canonical());
    }
}

TEST_CASE("smoothing the trefoil") {
    LinkDiagram t = LinkDiagram::parse(kTrefoil);
    for (int ci = 0; ci < 3; ci++) {
        auto sr = smooth(t, ci);
        CHECK(sr.sign == -1);
        CHECK(sr.oriented == 1);
        CHECK(sr.zero.crossing_count() == 2);
        CHECK(sr.one.crossing_count() == 2);
        // resolving a self-crossing against the orientation keeps one
        // strand; resolving with it splits, so the 1-resolution here is the
        // 2-component clasp and the 0-resolution the kinked unknot
        CHECK(sr.zero.component_count() == 1);
        CHECK(sr.one.component_count() == 2);
        // the oriented resolution keeps every remaining crossing's sign
        CHECK(sr.one.negative_count() == 2);
        CHECK(sr.e == sr.one.negative_count() - t.negative_count());
        CHECK(sr.e_zero == sr.zero.negative_count() - t.negative_count());
    }
    CHECK_THROWS(smooth(t, 3));
    CHECK_THROWS(smooth(t, -1));
}

TEST_CASE("smoothing a Hopf link and a kink") {
    LinkDiagram hp = qakh::torus2(2);  // positive Hopf
    for (int ci = 0; ci < 2; ci++) {
        auto sr = smooth(hp, ci);
        CHECK(sr.sign == 1);
        CHECK(sr.oriented == 0);
        CHECK(sr.zero.crossing_count() == 1);
        CHECK(sr.one.crossing_count() == 1);
        // either resolution of an inter-component crossing merges the two
        // strands into one
        CHECK(sr.zero.component_count() == 1);
        CHECK(sr.one.component_count() == 1);
        CHECK(sr.zero.negative_count() == 0);  // oriented resolution keeps signs
    }

    LinkDiagram k = LinkDiagram::parse("X(1,2,2,1)");
    CHECK(k.component_count() == 1);
    auto sr = smooth(k, 0);
    CHECK(sr.zero.crossing_count() == 0);
    CHECK(sr.one.crossing_count() == 0);
    CHECK(sr.zero.component_count() + sr.one.component_count() == 3);  // one splits
}

TEST_CASE("raw resolutions") {
    RawDiagram t = LinkDiagram::parse(kTrefoil).raw();
    for (int ci = 0; ci < 3; ci++)
        for (int w : {0, 1}) CHECK(resolve_raw(t, ci, w).x.size() == 2);
    RawDiagram k = LinkDiagram::parse("X(1,2,2,1)").raw();
    CHECK(resolve_raw(k, 0, 0).loops + resolve_raw(k, 0, 1).loops == 3);
    // the unoriented canonical form does not identify mirror images
    CHECK(canonical_raw(t) != canonical_raw(LinkDiagram::parse(kTrefoil).mirrored().raw()));
}

TEST_CASE("torus2 family") {
    CHECK_THROWS(qakh::torus2(0));
    LinkDiagram k1 = qakh::torus2(1);
    CHECK(k1.crossing_count() == 1);
    CHECK(k1.component_count() == 1);

    LinkDiagram h = qakh::torus2(2);
    CHECK(h.crossing_count() == 2);
    CHECK(h.component_count() == 2);
    CHECK(h.linking_matrix()[0][1] == 1);  // positive Hopf

    for (int n = 3; n <= 7; n++) {
        LinkDiagram d = qakh::torus2(n);
        CHECK(d.crossing_count() == n);
        CHECK(d.component_count() == (n % 2 == 0 ? 2 : 1));
        CHECK(traced_strands(d) == d.component_count());
        // all crossings share a sign in a (2,n) torus diagram
        CHECK((d.negative_count() == 0 || d.positive_count() == 0));
    }

    // torus2(3) is a trefoil diagram: structurally the mirror image of the
    // bundled left-handed trefoil PD
    LinkDiagram t = LinkDiagram::parse(kTrefoil);
    std::string c3 = canonical_raw(qakh::torus2(3).raw());
    CHECK(c3 == canonical_raw(t.mirrored().raw()));
    CHECK(c3 != canonical_raw(t.raw()));
}

TEST_CASE("twist insertion") {
    LinkDiagram t = LinkDiagram::parse(kTrefoil);
    CHECK_THROWS(qakh::twist(t, 0, 0, qakh::TwistKind::vertical));
    CHECK(qakh::twist(t, 1, 1, qakh::TwistKind::vertical).canonical() == t.canonical());

    // growing a trefoil crossing into a 3-twist region gives a (2,5) torus;
    // in this PD the ladder runs along the horizontal axis of the crossing
    LinkDiagram t5 = qakh::twist(t, 0, 3, qakh::TwistKind::horizontal);
    CHECK(t5.crossing_count() == 5);
    CHECK(t5.component_count() == 1);
    CHECK(canonical_raw(t5.raw()) == canonical_raw(qakh::torus2(5).mirrored().raw()));

    // and a 2-twist region gives a (2,4) torus
    LinkDiagram t4 = qakh::twist(t, 2, 2, qakh::TwistKind::horizontal);
    CHECK(canonical_raw(t4.raw()) == canonical_raw(qakh::torus2(4).mirrored().raw()));

    // the other axis also stays a valid diagram (a clasp gets added)
    LinkDiagram h2 = qakh::twist(qakh::torus2(2), 0, 2, qakh::TwistKind::horizontal);
    CHECK(h2.crossing_count() == 3);
    CHECK(traced_strands(h2) == h2.component_count());
}

TEST_CASE("kanenobu template wiring") {
    LinkDiagram f8 = LinkDiagram::parse(kFig8);
    CHECK(f8.component_count() == 1);

    LinkDiagram k00 = qakh::kanenobu(0, 0);
    CHECK(k00.crossing_count() == 8);
    CHECK(k00.component_count() == 1);

    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {-2, 3}, {2, -2}}) {
        LinkDiagram k = qakh::kanenobu(p, q);
        CHECK(k.crossing_count() == 8 + std::abs(p) + std::abs(q));
        CHECK(k.component_count() == 1);
        CHECK(traced_strands(k) == 1);
    }
}

TEST_CASE("faces satisfy Euler's formula") {
    for (const char* pd : {kTrefoil, kHopfNeg, kFig8, "X(1,2,2,1)"}) {
        LinkDiagram d = LinkDiagram::parse(pd);
        auto fs = d.faces();
        CHECK((int)fs.size() == d.crossing_count() + 2);  // connected diagrams
        int corners = 0;
        for (auto& f : fs) corners += (int)f.corners.size();
        CHECK(corners == 4 * d.crossing_count());
    }
    // two disjoint pieces: n+2 faces per piece
    LinkDiagram two = LinkDiagram::parse("X(1,2,2,1) X(3,4,4,3)");
    CHECK(two.faces().size() == 6);
    CHECK(two.piece_of_crossing(0) != two.piece_of_crossing(1));
}

TEST_CASE("json serialization") {
    LinkDiagram t = LinkDiagram::parse(kTrefoil);
    auto j = t.to_json();
    CHECK(j["components"] == 1);
    CHECK(j["writhe"] == -3);
    CHECK(j["signs"].size() == 3);
}
