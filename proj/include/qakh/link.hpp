#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qakh {

// One PD crossing: edge labels counterclockwise starting from the incoming
// under-strand, so slots 0 and 2 carry the under-strand and 1 and 3 the
// over-strand.
struct Crossing {
    std::array<int, 4> e;
};

struct Endpoint {
    int ci = -1;
    int slot = -1;
    bool operator==(const Endpoint& o) const { return ci == o.ci && slot == o.slot; }
};

// Unoriented skeleton used by the bracket recursion and the cube of
// resolutions: crossings plus a count of crossingless circles.
struct RawDiagram {
    std::vector<std::array<int, 4>> x;
    int loops = 0;
};

// Resolve crossing ci of a raw diagram. which==0 joins slots (0,1) and
// (2,3); which==1 joins slots (0,3) and (1,2).
RawDiagram resolve_raw(const RawDiagram& d, int ci, int which);

std::string canonical_raw(const RawDiagram& d);

struct SmoothingResult;

class LinkDiagram {
public:
    LinkDiagram() = default;

    // Strict PD text: "X(a,b,c,d) ..." with optional "U<k>" free-loop and
    // "O(e,...)" component-reversal terms. Slot 0 must be the incoming
    // under-strand; orientation is propagated and checked.
    static LinkDiagram parse(const std::string& text);

    // Structural terms (slots 0/2 under, 1/3 over) with orientation chosen
    // by the ascending-label rule; crossings are rotated so slot 0 is the
    // incoming under edge.
    static LinkDiagram from_raw(std::vector<Crossing> crossings, int free_loops);

    // Structural terms plus an explicit head endpoint per edge.
    static LinkDiagram from_parts(std::vector<Crossing> crossings, int free_loops,
                                  const std::map<int, Endpoint>& heads);

    int crossing_count() const { return (int)crossings_.size(); }
    int free_loops() const { return free_loops_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    bool empty() const { return crossings_.empty() && free_loops_ == 0; }

    // strand components come first, then one component per free loop
    int component_count() const { return n_strands_ + free_loops_; }
    int component_of_edge(int edge) const;
    std::vector<int> edges() const;

    int crossing_sign(int ci) const;  // +1 or -1
    int negative_count() const;
    int positive_count() const;
    int writhe() const { return positive_count() - negative_count(); }

    // true if the edge at (ci, slot) points into the crossing
    bool incoming(int ci, int slot) const;

    // lk(l,m) as a symmetric integer matrix over all components
    std::vector<std::vector<int>> linking_matrix() const;

    LinkDiagram mirrored() const;
    LinkDiagram reversed_component(int comp) const;

    RawDiagram raw() const;
    std::string canonical() const;
    std::string pd_text() const;
    nlohmann::json to_json() const;

    // Faces of the planar embedding, one list of corners per face; corner
    // (ci, s) is the region between slots s and s+1 of crossing ci. Faces
    // are grouped per connected piece of the underlying 4-valent graph.
    struct Face {
        int piece = 0;
        std::vector<Endpoint> corners;
    };
    std::vector<Face> faces() const;
    int piece_of_crossing(int ci) const;

private:
    friend SmoothingResult smooth(const LinkDiagram& d, int ci);

    void build();  // endpoints, strand components
    void orient_strict();
    void orient_free(const std::map<int, Endpoint>* forced_heads);
    void normalize_rotations();

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;

    // derived
    std::map<int, std::array<Endpoint, 2>> ends_;  // edge -> its two endpoints
    std::map<int, int> head_;                      // edge -> index into ends_ (0/1)
    std::map<int, int> comp_;                      // edge -> strand component
    int n_strands_ = 0;
};

struct SmoothingResult {
    LinkDiagram zero;
    LinkDiagram one;
    int e = 0;        // x(L1) - x(L) for the chosen orientation of L1
    int e_zero = 0;   // x(L0) - x(L)
    int sign = 0;     // sign of the smoothed crossing
    int oriented = 0; // which resolution inherited the orientation (0 or 1)
};

SmoothingResult smooth(const LinkDiagram& d, int ci);

enum class TwistKind { vertical, horizontal };

// Diagram generators.
LinkDiagram torus2(int n);
LinkDiagram twist(const LinkDiagram& d, int ci, int n, TwistKind kind);
LinkDiagram kanenobu(int p, int q);

}  // namespace qakh
