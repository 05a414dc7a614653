#include "mgc/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace mgc {

namespace {

// Reads the next non-blank line; returns false at end of input.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

long long parse_int(std::istringstream& iss, int line_no, const char* what) {
    long long value = 0;
    if (!(iss >> value)) throw GraphFormatError(line_no, std::string("expected ") + what);
    return value;
}

void expect_end(std::istringstream& iss, int line_no) {
    std::string rest;
    if (iss >> rest) throw GraphFormatError(line_no, "unexpected trailing token '" + rest + "'");
}

}  // namespace

Multigraph parse_edge_list(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!next_line(in, line, line_no)) throw GraphFormatError(line_no, "missing header 'n m'");
    std::istringstream header(line);
    long long n = parse_int(header, line_no, "vertex count");
    long long m = parse_int(header, line_no, "edge count");
    expect_end(header, line_no);
    if (n < 0 || m < 0) throw GraphFormatError(line_no, "counts must be nonnegative");
    if (n > 2'000'000 || m > 2'000'000)
        throw GraphFormatError(line_no, "counts unreasonably large");

    Multigraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line, line_no))
            throw GraphFormatError(line_no, "expected " + std::to_string(m) + " edges, got " +
                                                std::to_string(i));
        std::istringstream edge(line);
        long long u = parse_int(edge, line_no, "vertex id");
        long long v = parse_int(edge, line_no, "vertex id");
        expect_end(edge, line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphFormatError(line_no, "vertex id out of range");
        if (u == v) throw GraphFormatError(line_no, "loops are not allowed");
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (next_line(in, line, line_no)) throw GraphFormatError(line_no, "unexpected extra line");
    return g;
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        out << u << ' ' << v << '\n';
    }
}

WeightVector parse_weights(std::istream& in) {
    WeightVector w;
    int line_no = 0;
    std::string line;
    while (next_line(in, line, line_no)) {
        std::istringstream iss(line);
        long long value = parse_int(iss, line_no, "weight");
        expect_end(iss, line_no);
        if (value < 0) throw GraphFormatError(line_no, "weights must be nonnegative");
        if (value > 1'000'000) throw GraphFormatError(line_no, "weight unreasonably large");
        w.push_back(static_cast<int>(value));
    }
    return w;
}

void write_weights(std::ostream& out, const WeightVector& w) {
    for (int value : w) out << value << '\n';
}

}  // namespace mgc
