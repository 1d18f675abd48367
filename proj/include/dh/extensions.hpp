#pragma once

#include "dh/magma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dh {

// Finite abelian group Z_{m1} x ... x Z_{mr}; elements are component vectors
// reduced mod the moduli, or flat indices in mixed-radix order.
struct Fiber {
    std::vector<int> moduli;

    int order() const;
    int rank() const { return (int)moduli.size(); }
    std::vector<int> reduce(const std::vector<long long>& v) const;
    std::vector<int> add(const std::vector<int>& a,
                         const std::vector<int>& b) const;
    std::vector<int> sub(const std::vector<int>& a,
                         const std::vector<int>& b) const;
    std::vector<int> zero() const { return std::vector<int>(moduli.size(), 0); }
    // v -> M v componentwise mod the moduli (M acts on the cyclic factors)
    std::vector<int> apply(const std::vector<std::vector<long long>>& m,
                           const std::vector<int>& v) const;
    int index(const std::vector<int>& v) const;
    std::vector<int> element(int idx) const;
    // the induced map of an integer matrix is a bijection of the group
    bool invertible(const std::vector<std::vector<long long>>& m) const;
};

// A magma structure on A x X lying over the projection to X, stored as the
// full table phi: A^2 x X^2 -> A.
struct DynamicalCocycle {
    FiniteMagma base;  // X
    int fiber_size = 0;

    // phi[((a1*A + a2)*n + x1)*n + x2]
    std::vector<int> phi;

    int phi_at(int a1, int a2, int x1, int x2) const;
    void validate() const;
};

enum class ExtendKind { associative, distributive, entropic };

struct ExtendResult {
    FiniteMagma product;       // magma on A x X, element index a*|X| + x
    bool cocycle_identity;     // the dynamical-cocycle identity, exhaustive
    bool magma_axiom;          // the matching axiom of the built magma
    std::string witness;       // first failing tuple of the identity, if any

    bool agree() const { return cocycle_identity == magma_axiom; }
};

ExtendResult extend(const DynamicalCocycle& c, ExtendKind kind);

// f: X^2 -> A with a twisting automorphism t of the fiber.
struct TwoCocycle {
    FiniteMagma base;
    Fiber fiber;
    std::vector<std::vector<long long>> t;       // r x r integer matrix
    std::vector<std::vector<std::vector<int>>> f;  // f[x1][x2] = fiber vector

    void validate() const;  // shapes, reduced values, t invertible
};

enum class CocycleKind { group, twisted_rack, entropic };

struct CocycleCheck {
    bool ok = false;
    std::string witness;
};

// group: f(x2,x3) - f(x1 x2, x3) + f(x1, x2 x3) - f(x1,x2) = 0 over a
//   semigroup base (trivial action of X on the fiber);
// twisted_rack: t(f(x2,x3) - f(x1,x3) + f(x1,x2)) - f(x2,x3)
//   + f(x1*x2, x3) - f(x1*x3, x2*x3) = 0 over a shelf base;
// entropic: t f(x1,x2) - t f(x1,x3) + s f(x3,x4) - s f(x2,x4)
//   + f(x1*x2, x3*x4) - f(x1*x3, x2*x4) = 0 over an entropic base
//   (s required for the entropic kind and ignored otherwise).
// Refuses (throws) when the base lacks the required structure.
CocycleCheck check_two_cocycle(
    const TwoCocycle& c, CocycleKind kind,
    const std::vector<std::vector<long long>>& s = {});

// dc(x1,x2) = t c(x1) + (1-t) c(x2) - c(x1*x2) packaged as a TwoCocycle
TwoCocycle coboundary(const FiniteMagma& base, const Fiber& fiber,
                      const std::vector<std::vector<long long>>& t,
                      const std::vector<std::vector<int>>& c);

struct CoboundaryWitness {
    std::vector<std::vector<int>> c;  // c[x] = fiber vector
    std::string method;               // "exhaustive" or "linear"
};

// f1 - f2 = dc for some c: X -> A?  Exhaustive over A^X when that space is
// small, otherwise an integer linear solve via Smith normal form.
std::optional<CoboundaryWitness> is_coboundary(const TwoCocycle& f1,
                                               const TwoCocycle& f2);

// phi(a1,a2,x1,x2) = t a1 + (1-t) a2 + f(x1,x2), the Alexander extension
DynamicalCocycle alexander_cocycle(const TwoCocycle& c);

// phi(a1,a2,x1,x2) = t a1 + s a2 + a0 + f(x1,x2), the entropic extension
DynamicalCocycle entropic_cocycle(const TwoCocycle& c,
                                  const std::vector<std::vector<long long>>& s,
                                  const std::vector<int>& a0);

// Shelf on A x X from an X-indexed family of operations on A:
// untwisted (a1,x1)*(a2,x2) = (a1 *_{x2} a2, x1) needs
//   (a *_x b) *_y c = (a *_y c) *_x (b *_y c);
// twisted   (a1,x1)*(a2,x2) = (a1 *_{x2} a2, x1*x2) needs
//   (a *_x b) *_y c = (a *_y c) *_{x*y} (b *_y c).
// Throws with a witness (a,b,c,x,y) when the required identity fails.
FiniteMagma hull(const std::vector<FiniteMagma>& a_ops,
                 const FiniteMagma& base, bool twisted);

}  // namespace dh
