#include "dh/io.hpp"

#include <fstream>
#include <sstream>

namespace dh {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto pos = raw.find('#'); pos != std::string::npos)
            raw.resize(pos);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

long long to_int(const std::string& tok, int line) {
    size_t used = 0;
    long long v;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw FormatError("expected an integer, got '" + tok + "'", line);
    }
    if (used != tok.size())
        throw FormatError("expected an integer, got '" + tok + "'", line);
    return v;
}

// cursor over content lines
struct Reader {
    std::vector<Line> lines;
    size_t pos = 0;

    bool done() const { return pos >= lines.size(); }
    const Line& peek() const {
        if (done())
            throw FormatError("unexpected end of input",
                              lines.empty() ? 1 : lines.back().number);
        return lines[pos];
    }
    Line next() {
        peek();
        return lines[pos++];
    }
};

Line expect_header(Reader& r, const std::string& keyword) {
    const Line& h = r.peek();
    if (h.tokens[0] != keyword)
        throw FormatError("expected '" + keyword + "' header, got '" +
                              h.tokens[0] + "'",
                          h.number);
    return r.next();
}

// n rows of exactly `width` integers
std::vector<std::vector<long long>> read_rows(Reader& r, int n, int width) {
    std::vector<std::vector<long long>> rows;
    for (int i = 0; i < n; ++i) {
        Line line = r.next();
        if ((int)line.tokens.size() != width)
            throw FormatError("expected " + std::to_string(width) +
                                  " integers",
                              line.number);
        std::vector<long long> row;
        for (const auto& t : line.tokens) row.push_back(to_int(t, line.number));
        rows.push_back(std::move(row));
    }
    return rows;
}

Fiber parse_fiber(const std::string& spec, int line) {
    Fiber fiber;
    size_t i = 0;
    while (i < spec.size()) {
        if (spec[i] == 'Z' || spec[i] == 'z') ++i;
        size_t j = i;
        while (j < spec.size() && isdigit((unsigned char)spec[j])) ++j;
        if (j == i)
            throw FormatError("bad fiber spec '" + spec + "'", line);
        fiber.moduli.push_back((int)to_int(spec.substr(i, j - i), line));
        if (fiber.moduli.back() < 1)
            throw FormatError("bad fiber modulus in '" + spec + "'", line);
        i = j;
        if (i < spec.size()) {
            if (spec[i] != 'x')
                throw FormatError("bad fiber spec '" + spec + "'", line);
            ++i;
        }
    }
    if (fiber.moduli.empty())
        throw FormatError("bad fiber spec '" + spec + "'", line);
    return fiber;
}

}  // namespace

FiniteMagma read_magma(std::istream& in) {
    Reader r{tokenize(in)};
    Line h = expect_header(r, "magma");
    if (h.tokens.size() != 2)
        throw FormatError("expected 'magma <n>'", h.number);
    int n = (int)to_int(h.tokens[1], h.number);
    if (n < 1) throw FormatError("magma size must be positive", h.number);
    FiniteMagma m;
    m.size = n;
    for (const auto& row : read_rows(r, n, n))
        m.table.emplace_back(row.begin(), row.end());
    if (!r.done())
        throw FormatError("trailing content after the table", r.peek().number);
    m.validate();
    return m;
}

std::string format_magma(const FiniteMagma& m) {
    std::ostringstream out;
    out << "magma " << m.size << "\n";
    for (int a = 0; a < m.size; ++a) {
        for (int b = 0; b < m.size; ++b)
            out << (b ? " " : "") << m.table[a][b];
        out << "\n";
    }
    return out.str();
}

LeibnizAlgebraData read_leibniz(std::istream& in) {
    Reader r{tokenize(in)};
    Line h = expect_header(r, "leibniz");
    if (h.tokens.size() != 2)
        throw FormatError("expected 'leibniz <dim>'", h.number);
    int dim = (int)to_int(h.tokens[1], h.number);
    if (dim < 1) throw FormatError("dimension must be positive", h.number);
    LeibnizAlgebraData l;
    l.dim = dim;
    l.bracket.assign(
        dim, std::vector<std::vector<long long>>(
                 dim, std::vector<long long>(dim, 0)));
    while (!r.done()) {
        Line line = r.next();
        if ((int)line.tokens.size() != dim + 3 || line.tokens[2] != ":")
            throw FormatError("expected 'i j : c0 .. c" +
                                  std::to_string(dim - 1) + "'",
                              line.number);
        int i = (int)to_int(line.tokens[0], line.number);
        int j = (int)to_int(line.tokens[1], line.number);
        if (i < 0 || i >= dim || j < 0 || j >= dim)
            throw FormatError("basis index out of range", line.number);
        for (int k = 0; k < dim; ++k)
            l.bracket[i][j][k] = to_int(line.tokens[3 + k], line.number);
    }
    return l;
}

TwoCocycle CocycleFile::two_cocycle() const {
    if (!base)
        throw std::invalid_argument(
            "cocycle file: no base section, so the cocycle cannot be checked "
            "against a base operation");
    TwoCocycle c;
    c.base = *base;
    c.fiber = fiber;
    if (t) {
        c.t = *t;
    } else {
        int rank = fiber.rank();
        c.t.assign(rank, std::vector<long long>(rank, 0));
        for (int i = 0; i < rank; ++i) c.t[i][i] = 1;
    }
    c.f = f;
    c.validate();
    return c;
}

CocycleFile read_cocycle(std::istream& in) {
    Reader r{tokenize(in)};
    Line h = expect_header(r, "cocycle");
    if (h.tokens.size() != 3)
        throw FormatError("expected 'cocycle <n> <fiber>'", h.number);
    CocycleFile out;
    out.n = (int)to_int(h.tokens[1], h.number);
    if (out.n < 1) throw FormatError("carrier size must be positive", h.number);
    out.fiber = parse_fiber(h.tokens[2], h.number);
    const int rank = out.fiber.rank();
    out.f.assign(out.n, std::vector<std::vector<int>>(
                            out.n, std::vector<int>(rank, 0)));
    std::vector<std::vector<bool>> seen(out.n, std::vector<bool>(out.n, false));
    for (int k = 0; k < out.n * out.n; ++k) {
        Line line = r.next();
        if ((int)line.tokens.size() != rank + 3 || line.tokens[2] != ":")
            throw FormatError("expected 'x1 x2 : a-vector'", line.number);
        int x1 = (int)to_int(line.tokens[0], line.number);
        int x2 = (int)to_int(line.tokens[1], line.number);
        if (x1 < 0 || x1 >= out.n || x2 < 0 || x2 >= out.n)
            throw FormatError("carrier element out of range", line.number);
        if (seen[x1][x2])
            throw FormatError("duplicate entry for (" + std::to_string(x1) +
                                  "," + std::to_string(x2) + ")",
                              line.number);
        seen[x1][x2] = true;
        std::vector<long long> v;
        for (int i = 0; i < rank; ++i)
            v.push_back(to_int(line.tokens[3 + i], line.number));
        out.f[x1][x2] = out.fiber.reduce(v);
    }
    while (!r.done()) {
        Line sec = r.next();
        if (sec.tokens.size() != 1)
            throw FormatError("expected a 't' or 'base' section", sec.number);
        if (sec.tokens[0] == "t") {
            out.t = read_rows(r, rank, rank);
        } else if (sec.tokens[0] == "base") {
            FiniteMagma m;
            m.size = out.n;
            for (const auto& row : read_rows(r, out.n, out.n))
                m.table.emplace_back(row.begin(), row.end());
            m.validate();
            out.base = std::move(m);
        } else {
            throw FormatError("unknown section '" + sec.tokens[0] + "'",
                              sec.number);
        }
    }
    return out;
}

SetYBOperator read_ybop(std::istream& in) {
    Reader r{tokenize(in)};
    Line h = expect_header(r, "ybop");
    if (h.tokens.size() != 2)
        throw FormatError("expected 'ybop <n>'", h.number);
    int n = (int)to_int(h.tokens[1], h.number);
    if (n < 1) throw FormatError("carrier size must be positive", h.number);
    SetYBOperator op;
    op.size = n;
    op.map.assign(n, std::vector<std::pair<int, int>>(n, {-1, -1}));
    for (int k = 0; k < n * n; ++k) {
        Line line = r.next();
        if (line.tokens.size() != 5 || line.tokens[2] != ":")
            throw FormatError("expected 'x y : r1 r2'", line.number);
        int x = (int)to_int(line.tokens[0], line.number);
        int y = (int)to_int(line.tokens[1], line.number);
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw FormatError("carrier element out of range", line.number);
        if (op.map[x][y].first != -1)
            throw FormatError("duplicate entry for (" + std::to_string(x) +
                                  "," + std::to_string(y) + ")",
                              line.number);
        op.map[x][y] = {(int)to_int(line.tokens[3], line.number),
                        (int)to_int(line.tokens[4], line.number)};
    }
    if (!r.done())
        throw FormatError("trailing content after the table", r.peek().number);
    op.validate();
    return op;
}

StateSumWeights read_weights(std::istream& in) {
    Reader r{tokenize(in)};
    Line h = expect_header(r, "weights");
    if (h.tokens.size() != 2)
        throw FormatError("expected 'weights <n>'", h.number);
    int n = (int)to_int(h.tokens[1], h.number);
    if (n < 1) throw FormatError("carrier size must be positive", h.number);
    StateSumWeights w = zero_weights(n);
    while (!r.done()) {
        Line line = r.next();
        if (line.tokens.size() != 7 || line.tokens[5] != ":" ||
            (line.tokens[0] != "R" && line.tokens[0] != "Rbar"))
            throw FormatError("expected 'R a b c d : w' or 'Rbar a b c d : w'",
                              line.number);
        int idx[4];
        for (int i = 0; i < 4; ++i) {
            idx[i] = (int)to_int(line.tokens[1 + i], line.number);
            if (idx[i] < 0 || idx[i] >= n)
                throw FormatError("carrier element out of range", line.number);
        }
        Int v(to_int(line.tokens[6], line.number));
        if (line.tokens[0] == "R")
            w.R(idx[0], idx[1], idx[2], idx[3]) = v;
        else
            w.Rbar(idx[0], idx[1], idx[2], idx[3]) = v;
    }
    return w;
}

std::string dump_complex(const ChainComplex& c) {
    std::ostringstream out;
    for (int n = c.lo; n <= c.hi; ++n) {
        out << "deg " << n << " dim " << c.dim(n) << "\n";
        auto it = c.boundary.find(n);
        if (it == c.boundary.end()) continue;
        const IntMatrix& m = it->second;
        for (int i = 0; i < m.rows; ++i) {
            for (int j = 0; j < m.cols; ++j)
                out << (j ? " " : "") << m.at(i, j);
            out << "\n";
        }
    }
    return out.str();
}

namespace {

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

}  // namespace

FiniteMagma load_magma(const std::string& path) {
    auto in = open_file(path);
    return read_magma(in);
}

LeibnizAlgebraData load_leibniz(const std::string& path) {
    auto in = open_file(path);
    return read_leibniz(in);
}

CocycleFile load_cocycle(const std::string& path) {
    auto in = open_file(path);
    return read_cocycle(in);
}

SetYBOperator load_ybop(const std::string& path) {
    auto in = open_file(path);
    return read_ybop(in);
}

StateSumWeights load_weights(const std::string& path) {
    auto in = open_file(path);
    return read_weights(in);
}

std::string load_text(const std::string& path) {
    auto in = open_file(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace dh
