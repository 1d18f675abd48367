#pragma once

#include "dh/chain.hpp"
#include "dh/magma.hpp"

namespace dh {

// Tuple <-> index helpers shared by the complex builders. Tuples are ranked
// lexicographically with the first coordinate most significant.
long long tuple_rank(const std::vector<int>& t, int n);
std::vector<int> tuple_unrank(long long r, int len, int n);
std::string tuple_label(const std::vector<int>& t);

// One-term distributive complex (C_n = Z X^{n+1}), degrees 0..max_degree+1 so
// homology through max_degree uses the true incoming boundary.
// d_i(x0..xn) = (x0*xi, ..., x_{i-1}*xi, x_{i+1}, ..., xn); d_0 = deletion.
ChainComplex one_term_complex(const FiniteMagma& shelf, int max_degree);

FaceSystem one_term_face_system(const FiniteMagma& shelf, int max_degree,
                                bool with_degeneracies);

// boundary = sum_j coeffs[j] * d^{(*_j)} on basis X^{n+1}.
ChainComplex multi_term_complex(const MagmaSet& ops,
                                const std::vector<long long>& coeffs,
                                int max_degree);

// Rack grading: C^R_n = Z X^n, boundary d^{(*)} - d^{(*0)} one degree down.
// Degenerate = subcomplex of adjacent-repeat tuples; quandle = the quotient.
struct RackComplexes {
    ChainComplex rack;
    ChainComplex degenerate;
    ChainComplex quandle;
};
RackComplexes rack_quandle_complexes(const FiniteMagma& q, int max_degree);

// Shelf-set complex: basis Y x X^{n+1},
// d_i(y,x0..xn) = (y*xi, x0*xi, ..., x_{i-1}*xi, x_{i+1}, ..., xn).
ChainComplex shelf_set_complex(const FiniteMagma& shelf,
                               const std::vector<std::vector<int>>& xset,
                               int max_degree);
bool xset_axiom_holds(const FiniteMagma& shelf,
                      const std::vector<std::vector<int>>& xset,
                      std::string* witness = nullptr);

struct StructuralReport {
    bool degeneracy_identity = false;  // ds0 + s0d = s0d0
    bool projection_identity = false;  // pd + dp = pd0, p = delete first coordinate
    bool tmaps = false;         // t_i relations (d_i t_j table, t_i t_j = t_j t_i)
    bool duality = false;       // dual system has the same axiom class
    bool filtrations = false;   // left and right degenerate filtrations coherent
    bool uhat = false;          // integration-map identities (1), (2), (2')
    bool split_map = false;     // difference/partial-sum normalization maps
    bool split_map_applicable = false;  // only for affine (Alexander-type) tables
    std::vector<std::string> failures;

    bool all_pass() const {
        return degeneracy_identity && projection_identity && tmaps &&
               duality && filtrations && uhat &&
               (split_map || !split_map_applicable);
    }
};

StructuralReport structural_maps_report(const FiniteMagma& q, int max_degree);

// Invariant-factor statement of the splitting: rack = quandle (+) degenerate.
bool splitting_holds(const RackComplexes& rc, int degree);

}  // namespace dh
