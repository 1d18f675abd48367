#pragma once

#include "dh/extensions.hpp"
#include "dh/magma.hpp"
#include "dh/matrix.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dh {

struct PdParseError : std::runtime_error {
    int line, col;
    PdParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) +
                             ", column " + std::to_string(col_)),
          line(line_),
          col(col_) {}
};

// PD quadruple (a,b,c,d): semi-arcs counterclockwise from the incoming
// under-strand, so a = under-in and c = under-out.
struct PdCrossing {
    int a, b, c, d;
    bool operator==(const PdCrossing&) const = default;
};

struct LinkDiagram {
    std::vector<PdCrossing> crossings;
    int unknots = 0;  // extra 0-crossing components

    std::vector<bool> over_dir;  // true: over-strand runs b -> d
    std::vector<int> signs;      // +1 iff over runs b -> d
    std::vector<int> semi_arcs;  // sorted distinct labels
    std::vector<int> arcs;       // canonical representative per arc, sorted
    int components = 0;          // includes unknot components

    int arc(int label) const;        // canonical representative of a semi-arc
    int arc_index(int label) const;  // index of arc(label) in arcs
    int semi_arc_count() const { return (int)semi_arcs.size(); }

    std::vector<int> arc_rep_;  // arc representative per semi_arcs entry
};

// Grammar: whitespace-separated tokens `X[i,j,k,l]` (positive labels) and
// `unknot`; `#` starts a comment to end of line. Empty input is rejected;
// a 0-crossing unknot must be spelled out.
LinkDiagram parse_pd(const std::string& text);

// Validates and orients raw crossing data (the non-textual entry point).
LinkDiagram make_diagram(const std::vector<PdCrossing>& crossings,
                         int unknots = 0);

// Braid word to PD quadruples: +i is sigma_i (strand i passes over i+1),
// strands run downward, then the braid is closed off.
std::vector<PdCrossing> braid_pd(const std::vector<int>& word, int strands);

// A coloring assigns a carrier element to each arc, in diagram.arcs order.
using Coloring = std::vector<int>;

bool coloring_valid(const LinkDiagram& d, const FiniteMagma& q,
                    const Coloring& col);

// Number of arc colorings satisfying the crossing relation everywhere,
// including a factor |X| per 0-crossing unknot component.
long long color_count(const LinkDiagram& d, const FiniteMagma& q);

// The satisfying colorings of the crossing arcs (unknot components omitted).
std::vector<Coloring> enumerate_colorings(const LinkDiagram& d,
                                          const FiniteMagma& q);

struct ComposeResult {
    Coloring coloring;
    bool valid;
};

// (f *2 g)(arc) = f(arc) *2 g(arc); valid iff the result still colors d
// over op1. Guaranteed when {op1, op2} is an entropic pair.
ComposeResult entropic_compose(const LinkDiagram& d, const FiniteMagma& op1,
                               const Coloring& f, const Coloring& g,
                               const FiniteMagma& op2);

// Element of the group ring Z[A]: fiber element -> multiplicity.
using GroupRing = std::map<std::vector<int>, long long>;

// Cocycle invariant: sum over colorings of the signed cocycle weights.
// Requires f to be an untwisted (t = 1) rack 2-cocycle on q with zero
// diagonal; refuses otherwise.
GroupRing cocycle_state_sum(const LinkDiagram& d, const FiniteMagma& q,
                            const TwoCocycle& f);

// Boltzmann weights R^{a,b}_{c,d}: (a,b) incoming (under, over), (c,d)
// outgoing (over, under); Rbar used at negative crossings.
struct StateSumWeights {
    int n = 0;
    std::vector<Int> r, rbar;  // flattened [((a n + b) n + c) n + d]

    Int& R(int a, int b, int c, int d);
    Int& Rbar(int a, int b, int c, int d);
    const Int& R(int a, int b, int c, int d) const;
    const Int& Rbar(int a, int b, int c, int d) const;
};

StateSumWeights zero_weights(int n);
StateSumWeights ones_weights(int n);
// Delta weights of a rack: R[a][b][b][a*b] = 1, Rbar inverts the relation.
StateSumWeights delta_weights(const FiniteMagma& q);

// Exact sum over all semi-arc colorings of the product of crossing weights.
Int boltzmann_state_sum(const LinkDiagram& d, const StateSumWeights& w);

std::string format_group_ring(const GroupRing& g);

}  // namespace dh
