#pragma once

#include <string>
#include <vector>

#include "qakh/analysis.hpp"
#include "qakh/laurent.hpp"
#include "qakh/link.hpp"

namespace qakh {

enum class CheckStatus { satisfied, violated, inapplicable };

std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::inapplicable;
    std::string witness;  // empty unless violated
};

struct ObstructionReport {
    std::vector<CheckRecord> checks;
    bool violated() const;
    std::string verdict() const;  // "not_quasi_alternating" | "no_obstruction_found"
    nlohmann::json to_json() const;
};

// Runs the seven obstruction checks. Homology-based checks report
// inapplicable when the diagram exceeds the homology crossing limit.
ObstructionReport obstruction_report(const LinkDiagram& d);

// Closed-form Jones polynomial of the Kanenobu family, depending only on
// p + q.
HalfLaurent kanenobu_jones(int p, int q);

// Gap scan of the closed-form Jones; not_quasi_alternating when some gap
// has length > 1 (guaranteed for |p+q| > 6).
ObstructionReport kanenobu_verdict(int p, int q);

struct DetBound {
    long long lhs = 0;  // ceil(breadth/2) + 1
    long long det = 0;
    bool holds = false;
};
DetBound det_bound_check(const HalfLaurent& jones_v);

// Greedy Reidemeister I/II reduction. Preserves the unoriented link (and
// so the determinant); component orientations are re-derived, so the Jones
// polynomial of a multi-component link may pick up a unit shift.
LinkDiagram simplified(const LinkDiagram& d);

struct QANode {
    LinkDiagram diagram;  // simplified
    long long det = 0;
    int crossing = -1;  // branching crossing; -1 at leaves
    std::vector<QANode> children;  // zero- and one-resolution, in order
};

struct QACertificate {
    bool certified = false;
    QANode root;
    long nodes_used = 0;
    nlohmann::json to_json() const;
};

// Depth-first search for a quasi-alternating certificate; sound for YES
// answers only. Budget counts visited nodes; exhaustion means
// indeterminate, never a refutation.
QACertificate qa_certify(const LinkDiagram& d, long budget);

// Independent validator: det additivity with both parts >= 1 at every
// internal node, strictly decreasing determinants, unknot leaves.
bool validate_certificate(const QANode& n);

}  // namespace qakh
