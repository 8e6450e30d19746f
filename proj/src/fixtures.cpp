#include "qakh/fixtures.hpp"

namespace qakh {

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = [] {
        std::vector<Fixture> v;
        v.push_back({"unknot", LinkDiagram::parse("U1")});
        v.push_back({"hopf_negative", LinkDiagram::parse("X(4,1,3,2) X(2,3,1,4)")});
        v.push_back({"hopf_positive", LinkDiagram::parse("X(4,1,3,2) X(2,3,1,4)").mirrored()});
        v.push_back({"trefoil", LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")});
        auto fig8 = LinkDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
        v.push_back({"figure_eight", fig8});
        for (int n = 2; n <= 7; n++)
            v.push_back({"torus2_" + std::to_string(n), torus2(n)});
        // 8-crossing alternating knot: grow one figure-eight crossing into
        // a five-crossing twist region
        v.push_back({"alternating_8", twist(fig8, 0, 5, TwistKind::vertical)});
        return v;
    }();
    return all;
}

const LinkDiagram* fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return &f.diagram;
    return nullptr;
}

}  // namespace qakh
