#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mgc/multigraph.hpp"

namespace mgc {

class GraphFormatError : public std::runtime_error {
public:
    GraphFormatError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Edge-list text format: header `n m`, then m lines `u v` (0-based vertex ids).
// Parallel edges repeat lines. Writing is canonical (single spaces, trailing
// newline), so write(parse(x)) == x for tool-produced files.
Multigraph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Multigraph& g);

// Weight files: one nonnegative integer per line, indexed by vertex or edge id.
WeightVector parse_weights(std::istream& in);
void write_weights(std::ostream& out, const WeightVector& w);

}  // namespace mgc
