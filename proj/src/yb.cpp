#include "dh/yb.hpp"
#include "dh/distributive.hpp"

#include <stdexcept>

namespace dh {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::string triple(int x, int y, int z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
           std::to_string(z) + ")";
}

// thread x_i (1-based) leftward: the carried value passes through each
// coordinate to its left, replacing it with R2 and carrying R1 onward
std::vector<int> face_left(const SetYBOperator& r, const std::vector<int>& xs,
                           int i) {
    const int n = (int)xs.size();
    std::vector<int> res(xs);
    int c = xs[i - 1];
    for (int j = i - 1; j >= 1; --j) {
        auto [r1, r2] = r.at(xs[j - 1], c);
        res[j - 1] = r2;
        c = r1;
    }
    res.erase(res.begin() + (i - 1));
    (void)n;
    return res;
}

std::vector<int> face_right(const SetYBOperator& r, const std::vector<int>& xs,
                            int i) {
    const int n = (int)xs.size();
    std::vector<int> res(xs);
    int c = xs[i - 1];
    for (int j = i + 1; j <= n; ++j) {
        auto [r1, r2] = r.at(c, xs[j - 1]);
        res[j - 1] = r1;
        c = r2;
    }
    res.erase(res.begin() + (i - 1));
    return res;
}

}  // namespace

void SetYBOperator::validate() const {
    if (size < 1) throw std::invalid_argument("yb operator: empty carrier");
    if ((int)map.size() != size)
        throw std::invalid_argument("yb operator: table shape");
    for (const auto& row : map) {
        if ((int)row.size() != size)
            throw std::invalid_argument("yb operator: table shape");
        for (auto [a, b] : row)
            if (a < 0 || a >= size || b < 0 || b >= size)
                throw std::invalid_argument("yb operator: value out of range");
    }
}

bool SetYBOperator::invertible() const {
    validate();
    std::vector<char> hit((size_t)size * size, 0);
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
            auto [a, b] = map[x][y];
            char& c = hit[(size_t)a * size + b];
            if (c) return false;
            c = 1;
        }
    return true;
}

YbeCheck check_ybe(const SetYBOperator& r) {
    r.validate();
    for (int x = 0; x < r.size; ++x)
        for (int y = 0; y < r.size; ++y)
            for (int z = 0; z < r.size; ++z) {
                // (R x Id)(Id x R)(R x Id)
                auto [a, b] = r.at(x, y);
                auto [b2, c2] = r.at(b, z);
                auto [a2, b3] = r.at(a, b2);
                // (Id x R)(R x Id)(Id x R)
                auto [b_, c_] = r.at(y, z);
                auto [a_, b2_] = r.at(x, b_);
                auto [b3_, c2_] = r.at(b2_, c_);
                if (a2 != a_ || b3 != b3_ || c2 != c2_)
                    return {false, triple(x, y, z)};
            }
    return {true, ""};
}

YbeCheck check_ybe(const LinearYBOperator& r) {
    const int n = r.dim;
    if (r.matrix.rows != n * n || r.matrix.cols != n * n)
        throw std::invalid_argument("linear yb operator: matrix shape");
    const int N = n * n * n;
    IntMatrix rid(N, N), idr(N, N);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int a2 = 0; a2 < n; ++a2)
                    for (int b2 = 0; b2 < n; ++b2) {
                        const Int& v = r.matrix.at(a2 * n + b2, a * n + b);
                        if (v == 0) continue;
                        // (R x Id): acts on the first two factors
                        rid.at((a2 * n + b2) * n + c, (a * n + b) * n + c) = v;
                        // (Id x R): acts on the last two factors
                        idr.at((c * n * n) + a2 * n + b2,
                               (c * n * n) + a * n + b) = v;
                    }
    IntMatrix lhs = rid.mul(idr).mul(rid);
    IntMatrix rhs = idr.mul(rid).mul(idr);
    if (lhs == rhs) return {true, ""};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (lhs.at(i, j) != rhs.at(i, j))
                return {false, "entry (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")"};
    return {false, "?"};
}

SetYBOperator from_shelf(const FiniteMagma& m) {
    m.validate();
    SetYBOperator r;
    r.size = m.size;
    r.map.assign(m.size, std::vector<std::pair<int, int>>(m.size));
    for (int a = 0; a < m.size; ++a)
        for (int b = 0; b < m.size; ++b) r.map[a][b] = {b, m.op(a, b)};
    return r;
}

LinearYBOperator linearize(const SetYBOperator& r) {
    r.validate();
    const int n = r.size;
    LinearYBOperator out;
    out.dim = n;
    out.matrix = IntMatrix(n * n, n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [a, b] = r.at(x, y);
            out.matrix.at(a * n + b, x * n + y) = 1;
        }
    return out;
}

YbBoundaryParts yb_boundary_parts(const SetYBOperator& r, int degree) {
    r.validate();
    if (degree < 1) throw std::invalid_argument("yb boundary: degree >= 1");
    const int n = r.size;
    const long long rows = ipow(n, degree - 1), cols = ipow(n, degree);
    YbBoundaryParts p{IntMatrix((int)rows, (int)cols),
                      IntMatrix((int)rows, (int)cols)};
    for (long long g = 0; g < cols; ++g) {
        std::vector<int> xs = tuple_unrank(g, degree, n);
        for (int i = 1; i <= degree; ++i) {
            long long sign = (i % 2 == 1) ? 1 : -1;
            p.left.at((int)tuple_rank(face_left(r, xs, i), n), (int)g) += sign;
            p.right.at((int)tuple_rank(face_right(r, xs, i), n), (int)g) +=
                sign;
        }
    }
    return p;
}

ChainComplex yb_complex(const SetYBOperator& r, int max_degree) {
    YbeCheck c = check_ybe(r);
    if (!c.ok)
        throw std::invalid_argument(
            "yb_complex: operator fails the Yang-Baxter equation at " +
            c.witness);
    ChainComplex out;
    out.lo = 0;
    out.hi = max_degree + 1;
    for (int deg = 0; deg <= out.hi; ++deg) {
        std::vector<std::string> labels;
        for (long long g = 0; g < ipow(r.size, deg); ++g)
            labels.push_back(tuple_label(tuple_unrank(g, deg, r.size)));
        out.basis[deg] = std::move(labels);
    }
    for (int deg = 1; deg <= out.hi; ++deg) {
        YbBoundaryParts p = yb_boundary_parts(r, deg);
        IntMatrix m = p.left;
        for (size_t k = 0; k < m.a.size(); ++k) m.a[k] -= p.right.a[k];
        out.boundary[deg] = std::move(m);
    }
    if (auto bad = out.check_dd_zero())
        throw std::logic_error("yb_complex: dd != 0: " + *bad);
    return out;
}

}  // namespace dh
