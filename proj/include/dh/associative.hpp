#pragma once

#include "dh/chain.hpp"
#include "dh/magma.hpp"

#include <optional>

namespace dh {

// A magma with verified associativity; identity recorded when one exists.
struct SemigroupData {
    FiniteMagma magma;
    std::optional<int> identity;

    bool is_monoid() const { return identity.has_value(); }
};

// Throws with a witness triple if the table is not associative.
SemigroupData semigroup(const FiniteMagma& m);

enum class WallSide { left, right, bi };

// An X-set wall. Right walls carry e*a with (e*a)*b = e*(a*b); left walls
// carry a*e with (a*b)*e = a*(b*e); bisets carry both plus (a*e)*b = a*(e*b).
struct WallAction {
    WallSide side = WallSide::right;
    int carrier = 1;
    std::vector<std::vector<int>> right_table;  // [e][a] -> e*a
    std::vector<std::vector<int>> left_table;   // [a][e] -> a*e
};

WallAction point_wall(WallSide side);
WallAction multiplication_wall(const SemigroupData& s, WallSide side);

// Empty on success; otherwise a witness of the violated action identity.
std::optional<std::string> validate_wall(const WallAction& w,
                                         const SemigroupData& s);

// Bar-type complex on E0 x X^n x Ew; absent walls default to a point.
// d_0 multiplies x1 into the right wall e0, d_n multiplies xn into the left
// wall ew, interior faces multiply adjacent pairs. Basis is lexicographic in
// (e0, tuple, ew).
ChainComplex bar_complex(const SemigroupData& s,
                         const std::optional<WallAction>& e0,
                         const std::optional<WallAction>& ew, int max_degree);

// The same data as a face system; monoids also get degeneracies inserting the
// identity (s_i puts 1 after x_i, s_0 in front, s_n at the back).
FaceSystem bar_face_system(const SemigroupData& s,
                           const std::optional<WallAction>& e0,
                           const std::optional<WallAction>& ew, int max_degree,
                           bool with_degeneracies);

// Hochschild complex on E x X^n for a biset E:
// d_0 = (e*x1, x2, ...), d_n = (xn*e, x1, ..., x_{n-1}).
ChainComplex hochschild_complex(const SemigroupData& s, const WallAction& e,
                                int max_degree);

// Span of the identity-containing tuples inside the no-wall monoid bar
// complex (the degenerate part; acyclic by Eilenberg-Mac Lane).
ChainComplex bar_degenerate_subcomplex(const SemigroupData& s, int max_degree);

struct TruncatedReport {
    ChainComplex complex;
    std::vector<HomologyGroup> homology;  // degrees 0..max_degree
    bool monoid = false;
    bool acyclic = false;  // all computed degrees vanish; expected for monoids
};

// Drops d_0 (side=left -> boundary sum starts at i=1) or d_n (side=right).
TruncatedReport truncated_acyclicity(const SemigroupData& s, WallSide side,
                                     int max_degree);

}  // namespace dh
