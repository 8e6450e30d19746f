#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qakh/obstruction.hpp"
#include "qakh/skein.hpp"

using qakh::CheckStatus;
using qakh::HalfLaurent;
using qakh::LinkDiagram;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kHopfNeg = "X(4,1,3,2) X(2,3,1,4)";
const char* kFig8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

std::vector<LinkDiagram> corpus() {
    std::vector<LinkDiagram> out = {
        LinkDiagram::parse("U1"),
        LinkDiagram::parse(kTrefoil),
        LinkDiagram::parse(kTrefoil).mirrored(),
        LinkDiagram::parse(kHopfNeg),
        LinkDiagram::parse(kHopfNeg).mirrored(),
        LinkDiagram::parse(kFig8),
    };
    for (int n = 2; n <= 6; n++) out.push_back(qakh::torus2(n));
    return out;
}

}  // namespace

TEST_CASE("obstruction report on alternating fixtures") {
    auto rep = qakh::obstruction_report(LinkDiagram::parse(kTrefoil));
    CHECK(rep.checks.size() == 7);
    for (const auto& c : rep.checks) CHECK(c.status == CheckStatus::satisfied);
    CHECK(rep.verdict() == "no_obstruction_found");
    for (const auto& d : corpus()) CHECK(!qakh::obstruction_report(d).violated());
}

TEST_CASE("kanenobu closed-form jones") {
    // K(0,0) is the connected sum of two figure-eights
    auto v8 = qakh::jones(LinkDiagram::parse(kFig8));
    CHECK(qakh::kanenobu_jones(0, 0) == v8 * v8);
    // determinant 25 across the family
    for (int s = -8; s <= 8; s++) CHECK(qakh::determinant_eval(qakh::kanenobu_jones(s, 0)) == 25);
    // depends only on p + q
    CHECK(qakh::kanenobu_jones(3, 1) == qakh::kanenobu_jones(0, 4));
}

TEST_CASE("kanenobu verdict by gap scan") {
    auto r44 = qakh::kanenobu_verdict(4, 4);
    CHECK(r44.verdict() == "not_quasi_alternating");
    CHECK(!r44.checks[0].witness.empty());
    CHECK(qakh::kanenobu_verdict(3, 3).verdict() == "no_obstruction_found");
    CHECK(qakh::kanenobu_verdict(0, 0).verdict() == "no_obstruction_found");
    for (int s = -12; s <= 12; s++) {
        bool expect = std::abs(s) > 6;
        CHECK(qakh::kanenobu_verdict(s, 0).violated() == expect);
    }
}

TEST_CASE("determinant bound") {
    auto tre = qakh::det_bound_check(qakh::jones(LinkDiagram::parse(kTrefoil)));
    CHECK(tre.lhs == 3);
    CHECK(tre.det == 3);
    CHECK(tre.holds);
    auto u = qakh::det_bound_check(qakh::jones(LinkDiagram::parse("U1")));
    CHECK(u.lhs == 1);
    CHECK(u.det == 1);
    CHECK(u.holds);
    auto k44 = qakh::det_bound_check(qakh::kanenobu_jones(4, 4));
    CHECK(k44.det == 25);
    CHECK(k44.lhs == 7);
    CHECK(k44.holds);
}

TEST_CASE("greedy simplification") {
    auto kink = LinkDiagram::parse("X(1,2,2,1)");
    auto s = qakh::simplified(kink);
    CHECK(s.crossing_count() == 0);
    CHECK(s.component_count() == 1);

    auto kinked_trefoil =
        LinkDiagram::parse("X(7,4,2,5) X(3,6,4,1) X(5,2,6,3) X(1,8,8,7)");
    CHECK(qakh::simplified(kinked_trefoil).crossing_count() == 3);

    // simplification preserves the determinant everywhere and the Jones
    // polynomial on knots (orientations are re-derived, so multi-component
    // Jones is only pinned up to a unit)
    for (const auto& d : corpus()) {
        auto s = qakh::simplified(d);
        CHECK(s.component_count() == d.component_count());
        CHECK(qakh::determinant_eval(qakh::jones(s)) ==
              qakh::determinant_eval(qakh::jones(d)));
        if (d.component_count() == 1) CHECK(qakh::jones(s) == qakh::jones(d));
    }
}

TEST_CASE("certifier on small fixtures") {
    auto u = qakh::qa_certify(LinkDiagram::parse("U1"), 100);
    REQUIRE(u.certified);
    CHECK(u.root.children.empty());
    CHECK(u.root.det == 1);
    CHECK(qakh::validate_certificate(u.root));

    auto hopf = qakh::qa_certify(qakh::torus2(2), 1000);
    REQUIRE(hopf.certified);
    CHECK(hopf.root.det == 2);
    REQUIRE(hopf.root.children.size() == 2);
    CHECK(hopf.root.children[0].det == 1);
    CHECK(hopf.root.children[1].det == 1);
    CHECK(qakh::validate_certificate(hopf.root));

    auto tre = qakh::qa_certify(LinkDiagram::parse(kTrefoil), 10000);
    REQUIRE(tre.certified);
    CHECK(tre.root.det == 3);
    REQUIRE(tre.root.children.size() == 2);
    CHECK(tre.root.children[0].det + tre.root.children[1].det == 3);
    CHECK(qakh::validate_certificate(tre.root));
}

TEST_CASE("certifier covers torus links and the figure-eight") {
    for (int n = 2; n <= 7; n++) {
        auto c = qakh::qa_certify(qakh::torus2(n), 10000);
        REQUIRE(c.certified);
        CHECK(c.root.det == n);
        CHECK(qakh::validate_certificate(c.root));
    }
    auto f8 = qakh::qa_certify(LinkDiagram::parse(kFig8), 10000);
    REQUIRE(f8.certified);
    CHECK(f8.root.det == 5);
    CHECK(qakh::validate_certificate(f8.root));
}

TEST_CASE("certifier budget and validation edge cases") {
    CHECK_THROWS_AS(qakh::qa_certify(LinkDiagram::parse(kTrefoil), 0), std::invalid_argument);
    auto starved = qakh::qa_certify(LinkDiagram::parse(kTrefoil), 1);
    CHECK(!starved.certified);

    auto good = qakh::qa_certify(LinkDiagram::parse(kTrefoil), 10000);
    REQUIRE(good.certified);
    auto tampered = good.root;
    tampered.det += 1;
    CHECK(!qakh::validate_certificate(tampered));
    auto tampered2 = good.root;
    tampered2.children.pop_back();
    CHECK(!qakh::validate_certificate(tampered2));
}

TEST_CASE("certified diagrams never trip an obstruction") {
    for (const auto& d : corpus()) {
        auto c = qakh::qa_certify(d, 10000);
        if (!c.certified) continue;
        CHECK(!qakh::obstruction_report(d).violated());
    }
}
