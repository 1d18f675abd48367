#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dh/matrix.hpp"

namespace dh {

struct HomologyGroup {
    long long free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility order
    bool operator==(const HomologyGroup&) const = default;
};

// Graded integer chain complex over a contiguous degree range [lo..hi].
// boundary[n] maps degree n to degree n-1; present for lo < n <= hi.
struct ChainComplex {
    int lo = 0;
    int hi = -1;
    std::map<int, std::vector<std::string>> basis;
    std::map<int, IntMatrix> boundary;

    long long dim(int n) const {
        auto it = basis.find(n);
        return it == basis.end() ? 0 : (long long)it->second.size();
    }
    // Checks boundary[n-1] * boundary[n] == 0 for interior degrees; returns a
    // witness description on failure.
    std::optional<std::string> check_dd_zero() const;
};

// H_n = ker d_n / im d_{n+1}. Missing boundary matrices are treated as zero
// maps; n must lie in [lo..hi].
HomologyGroup homology(const ChainComplex& c, int n);

// A formal integer combination of degree-(n-1) generators.
using Chain = std::vector<std::pair<int, long long>>;

// Symbolic face (and optional degeneracy) maps; generators are indices into
// per-degree bases. Faces d_0..d_{num_faces(n)-1} send degree n to n-1;
// degeneracies s_0..s_{num_degeneracies(n)-1} send degree n to n+1 and always
// map basis elements to basis elements here.
struct FaceSystem {
    int lo = 0;
    int hi = -1;
    std::map<int, std::vector<std::string>> basis;
    std::function<int(int)> num_faces;
    std::function<Chain(int deg, int i, int gen)> face;
    std::function<int(int)> num_degeneracies;  // null if no degeneracies
    std::function<int(int deg, int i, int gen)> degeneracy;

    long long dim(int n) const {
        auto it = basis.find(n);
        return it == basis.end() ? 0 : (long long)it->second.size();
    }
};

struct SimplicialReport {
    // Simplicial axiom families; each holds iff verified exhaustively.
    bool presimplicial = false;   // (1) d_i d_j = d_{j-1} d_i, i < j
    bool degen_commute = false;   // (2) s_i s_j = s_{j+1} s_i, i <= j
    bool mixed = false;           // (3) d_i s_j = s_{j-1} d_i (i<j), = s_j d_{i-1} (i>j+1)
    bool weak_unit = false;       // (4') d_i s_i = d_{i+1} s_i
    bool unit = false;            // (4) d_i s_i = d_{i+1} s_i = Id
    std::vector<std::string> failures;

    bool very_weak() const { return presimplicial && degen_commute && mixed; }
    bool weak() const { return very_weak() && weak_unit; }
    bool full() const { return weak() && unit; }
};

SimplicialReport verify_simplicial_axioms(const FaceSystem& f);

// Materializes boundary = sum (-1)^i d_i; verifies the presimplicial identity
// unless skip_presimplicial_check, and always verifies dd = 0.
ChainComplex assemble(const FaceSystem& f, bool skip_presimplicial_check = false);

Chain apply_boundary(const FaceSystem& f, int deg, int gen);

// Adds a degree -1 = Z with the augmentation (all-ones row) as boundary from
// degree 0. Reduced homology H~_n is then homology of the result at n >= 0.
ChainComplex augmented(const ChainComplex& c);

}  // namespace dh
