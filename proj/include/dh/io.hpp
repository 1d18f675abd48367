#pragma once

#include "dh/chain.hpp"
#include "dh/extensions.hpp"
#include "dh/knots.hpp"
#include "dh/leibniz.hpp"
#include "dh/magma.hpp"
#include "dh/yb.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace dh {

// Line-oriented text formats; `#` starts a comment, blank lines are skipped.
struct FormatError : std::runtime_error {
    int line;
    FormatError(const std::string& msg, int line_)
        : std::runtime_error(msg + " at line " + std::to_string(line_)),
          line(line_) {}
};

// `magma <n>` then n rows of n space-separated integers (row a = a*0..a*(n-1))
FiniteMagma read_magma(std::istream& in);
std::string format_magma(const FiniteMagma& m);

// `leibniz <dim>` then lines `i j : c0 .. c_{dim-1}` for the nonzero brackets
LeibnizAlgebraData read_leibniz(std::istream& in);

// `cocycle <n> <fiber>` (fiber like Z3 or Z3xZ2) then n^2 lines
// `x1 x2 : a-vector`, plus optional sections: a line `t` followed by r rows
// of r integers, and a line `base` followed by n rows of n integers.
struct CocycleFile {
    int n = 0;
    Fiber fiber;
    std::vector<std::vector<std::vector<int>>> f;
    std::optional<std::vector<std::vector<long long>>> t;
    std::optional<FiniteMagma> base;

    // requires the base section; a missing t defaults to the identity
    TwoCocycle two_cocycle() const;
};
CocycleFile read_cocycle(std::istream& in);

// `ybop <n>` then n^2 lines `x y : r1 r2`
SetYBOperator read_ybop(std::istream& in);

// `weights <n>` then lines `R a b c d : w` or `Rbar a b c d : w` for the
// nonzero Boltzmann entries ((a,b) incoming, (c,d) outgoing)
StateSumWeights read_weights(std::istream& in);

// Per degree `deg <n> dim <k>`, then the boundary matrix (degree n -> n-1)
// in row-major integers, one row per line.
std::string dump_complex(const ChainComplex& c);

FiniteMagma load_magma(const std::string& path);
LeibnizAlgebraData load_leibniz(const std::string& path);
CocycleFile load_cocycle(const std::string& path);
SetYBOperator load_ybop(const std::string& path);
StateSumWeights load_weights(const std::string& path);
std::string load_text(const std::string& path);  // e.g. PD files

}  // namespace dh
