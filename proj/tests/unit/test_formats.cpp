#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "xtr/error.hpp"
#include "xtr/formats.hpp"
#include "xtr/randgraph.hpp"

using namespace xtr;

namespace {

template <class Write, class Read, class T>
std::pair<T, std::string> round_trip(const T& value, Write write, Read read) {
  std::ostringstream out;
  write(out, value);
  std::istringstream in(out.str());
  T back = read(in);
  std::ostringstream again;
  write(again, back);
  CHECK(again.str() == out.str());
  return {back, out.str()};
}

std::size_t parse_line(const std::string& text, auto read) {
  std::istringstream in(text);
  try {
    read(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("no parse error for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("graph round trip") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto G = sample_graph(10 + static_cast<std::uint32_t>(s), 7, 3, s);
    CHECK(round_trip(G, write_graph, read_graph).first == G);
  }
  const BipartiteGraph empty(0, 1, 1, {});
  CHECK(round_trip(empty, write_graph, read_graph).first == empty);
}

TEST_CASE("graph comments and blank lines") {
  std::istringstream in("# header\n2 3 2\n\n0 2\n# row two\n1 1\n");
  const auto G = read_graph(in);
  CHECK(G.edge(0, 1) == 2);
  CHECK(G.edge(1, 0) == 1);
}

TEST_CASE("graph parse errors name the line") {
  CHECK(parse_line("2 3 2\n0 2\n1 3\n", read_graph) == 3);
  CHECK(parse_line("2 3 2\n0 2\n", read_graph) == 3);
  CHECK(parse_line("2 3 2\n0 2 1\n1 1\n", read_graph) == 2);
  CHECK(parse_line("2 3\n", read_graph) == 1);
  CHECK(parse_line("2 3 2\n0 x\n1 1\n", read_graph) == 2);
  CHECK(parse_line("1 3 1\n0\n0\n", read_graph) == 3);
}

TEST_CASE("design round trip and gen output verification") {
  for (int l = 1; l <= 5; ++l) {
    const auto f = greedy_weak_design(l, 12);
    const auto back = round_trip(f, write_design, read_design).first;
    CHECK(back == f);
    CHECK(verify_design(back, DesignKind::weak, Rational(1)).pass);
  }
  CHECK(parse_line("4 2 1\n2 1\n", read_design) == 2);
  CHECK(parse_line("4 2 1\n0 4\n", read_design) == 2);
}

TEST_CASE("set round trip") {
  const std::vector<std::uint32_t> order{7, 2, 9, 0};
  CHECK(round_trip(order, write_set, read_set).first == order);
  CHECK(parse_line("1\n2\n1\n", read_set) == 3);
  CHECK(parse_line("1\n2 3\n", read_set) == 2);
}

TEST_CASE("bits round trip") {
  std::vector<BitString> v{BitString(0), BitString::from_binary("1"), BitString::from_binary("10110"),
                           BitString::from_binary(std::string(70, '1'))};
  CHECK(round_trip(v, write_bits, read_bits).first == v);
  CHECK(parse_line("3:a\n3:f\n", read_bits) == 2);
  CHECK(parse_line("4:a\n4:zz\n", read_bits) == 2);
}

TEST_CASE("dist round trip and relaxed input") {
  const Dist X(3, {0.5, 0, 0.125, 0.125, 0, 0, 0.25, 0});
  const auto [back, text] = round_trip(X, write_dist, read_dist);
  for (std::size_t a = 0; a < 8; ++a) CHECK(back[a] == X[a]);
  CHECK(std::count(text.begin(), text.end(), '\n') == 9);

  std::istringstream sparse("2\n2:c 0.5\n2:0 0.5\n");
  const auto Y = read_dist(sparse);
  CHECK(Y[3] == 0.5);
  CHECK(Y[1] == 0);
  CHECK(parse_line("2\n2:0 0.5\n2:0 0.5\n", read_dist) == 3);
  CHECK(parse_line("2\n3:0 1\n", read_dist) == 2);
  CHECK_THROWS_AS([] {
    std::istringstream in("1\n1:0 0.5\n");
    return read_dist(in);
  }(), ParseError);
}

TEST_CASE("file helpers") {
  const auto path = (std::filesystem::temp_directory_path() / "xtr_formats_test.txt").string();
  write_file(path, "1:8\n");
  CHECK(read_file(path) == "1:8\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path), ParseError);
}
