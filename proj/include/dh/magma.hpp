#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dh {

// A finite magma: carrier {0..n-1}, table[a][b] = a*b.
struct FiniteMagma {
    int size = 0;
    std::vector<std::vector<int>> table;

    FiniteMagma() = default;
    FiniteMagma(int n, std::vector<std::vector<int>> t);

    int op(int a, int b) const { return table[a][b]; }
    bool operator==(const FiniteMagma&) const = default;

    void validate() const;  // throws std::invalid_argument on bad entries
};

struct AxiomReport {
    bool shelf = false;             // right self-distributive
    bool left_distributive = false;
    bool spindle = false;
    bool rack = false;
    bool quandle = false;
    bool kei = false;
    bool entropic = false;
};

struct MagmaSet {
    int carrier_size = 0;
    std::vector<FiniteMagma> ops;
};

FiniteMagma trivial_op(int n);  // a *0 b = a, the identity of Bin(X)

// Bin(X) composition: a *1*2 b = (a *1 b) *2 b.
FiniteMagma compose(const FiniteMagma& op1, const FiniteMagma& op2);

AxiomReport check_axioms(const FiniteMagma& m);

bool is_distributive_set(const MagmaSet& s);
bool is_entropic_set(const MagmaSet& s);
bool is_weakly_distributive_pair(const FiniteMagma& op1, const FiniteMagma& op2);

// A witness (a,b,c) for a failed right self-distributivity, if any.
std::optional<std::array<int, 3>> shelf_witness(const FiniteMagma& m);

// Named constructions.
FiniteMagma takasaki(int n);                 // (2b - a) mod n
FiniteMagma alexander(int n, int t);         // (t a + (1-t) b) mod n
FiniteMagma conjugation(const FiniteMagma& group);        // b^-1 a b
FiniteMagma core(const FiniteMagma& group);               // b a^-1 b
FiniteMagma joyce1(const FiniteMagma& group, const std::vector<int>& t);  // t(a b^-1) b
FiniteMagma joyce2(const FiniteMagma& group, const std::vector<int>& t);  // t(b^-1 a) b
FiniteMagma half_conjugacy(const FiniteMagma& group, int g);  // a b^-1 g b

// Validates associativity/identity/inverses of a raw multiplication table.
void validate_group(const FiniteMagma& g);
int group_identity(const FiniteMagma& g);
std::vector<int> group_inverses(const FiniteMagma& g);
bool is_endomorphism(const FiniteMagma& g, const std::vector<int>& t);

// Requires a rack; returns \bar* with compose(m, invert(m)) = *0.
FiniteMagma invert(const FiniteMagma& m);

// Multiplication table of the symmetric group S3, elements enumerated 0..5.
FiniteMagma s3_group();

}  // namespace dh
