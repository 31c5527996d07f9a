#pragma once

#include <iosfwd>
#include <cstdint>
#include <string>
#include <vector>

#include "xtr/bitstring.hpp"
#include "xtr/design.hpp"
#include "xtr/dist.hpp"
#include "xtr/graph.hpp"

namespace xtr {

// Text formats. Lines starting with '#' and blank lines are skipped on
// input; malformed content throws ParseError carrying the 1-based line.

/// `N M D`, then one line of D right indices per left vertex.
void write_graph(std::ostream& out, const BipartiteGraph& G);
BipartiteGraph read_graph(std::istream& in);

/// `d l m`, then one line of l sorted indices per set.
void write_design(std::ostream& out, const DesignFamily& f);
DesignFamily read_design(std::istream& in);

/// One left vertex per line, in enumeration order, no repeats.
void write_set(std::ostream& out, const std::vector<std::uint32_t>& order);
std::vector<std::uint32_t> read_set(std::istream& in);

/// One `<length>:<hex>` string per line.
void write_bits(std::ostream& out, const std::vector<BitString>& items);
std::vector<BitString> read_bits(std::istream& in);

/// `n`, then one `<length>:<hex> weight` line per string in increasing
/// order, weights with 17 significant digits. On input, strings may come in
/// any order and missing ones weigh zero.
void write_dist(std::ostream& out, const Dist& X);
Dist read_dist(std::istream& in);

/// Whole-file helpers; a missing file is a ParseError at line 0.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace xtr
