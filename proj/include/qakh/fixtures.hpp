#pragma once

#include <string>
#include <vector>

#include "qakh/link.hpp"

namespace qakh {

struct Fixture {
    std::string name;
    LinkDiagram diagram;
};

// Bundled corpus: unknot, both Hopf links, trefoil, figure-eight,
// torus2(n) for n <= 7, and one 8-crossing alternating knot.
const std::vector<Fixture>& fixtures();

// nullptr when no fixture has that name
const LinkDiagram* fixture(const std::string& name);

}  // namespace qakh
