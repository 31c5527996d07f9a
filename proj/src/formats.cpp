#include "xtr/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "xtr/error.hpp"

namespace xtr {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next content line split on whitespace; false at end of input.
  bool next(std::vector<std::string>& fields) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      const auto first = text.find_first_not_of(" \t");
      if (first == std::string::npos || text[first] == '#') continue;
      fields.clear();
      std::istringstream ss(text);
      for (std::string f; ss >> f;) fields.push_back(f);
      return true;
    }
    return false;
  }

  std::vector<std::string> expect(std::size_t count, const char* what) {
    std::vector<std::string> f;
    if (!next(f)) throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + what);
    if (count && f.size() != count)
      throw ParseError(line_, std::string(what) + ": expected " + std::to_string(count) + " fields, got " +
                                  std::to_string(f.size()));
    return f;
  }

  void expect_end() {
    std::vector<std::string> f;
    if (next(f)) throw ParseError(line_, "unexpected trailing content");
  }

  std::uint64_t number(const std::string& s) const {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(line_, "not a nonnegative integer: '" + s + "'");
    return v;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

template <class F>
auto at_line(const LineReader& r, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line()) throw;
    throw ParseError(r.line(), e.what());
  } catch (const std::exception& e) {
    throw ParseError(r.line(), e.what());
  }
}

}  // namespace

void write_graph(std::ostream& out, const BipartiteGraph& G) {
  out << G.left_size() << ' ' << G.right_size() << ' ' << G.degree() << '\n';
  for (std::uint32_t a = 0; a < G.left_size(); ++a) {
    const auto nb = G.neighbors(a);
    for (std::size_t y = 0; y < nb.size(); ++y) out << (y ? " " : "") << nb[y];
    out << '\n';
  }
}

BipartiteGraph read_graph(std::istream& in) {
  LineReader r(in);
  const auto h = r.expect(3, "graph header `N M D`");
  const auto N = r.number(h[0]), M = r.number(h[1]), D = r.number(h[2]);
  if (N > (1u << 30) || M > (1u << 30) || D > (1u << 30)) throw ParseError(r.line(), "graph sizes above 2^30");
  if (D == 0 && N > 0) throw ParseError(r.line(), "degree must be positive");
  std::vector<std::uint32_t> adj;
  adj.reserve(N * D);
  for (std::uint64_t a = 0; a < N; ++a) {
    const auto f = r.expect(D, "adjacency row");
    for (const auto& s : f) {
      const auto z = r.number(s);
      if (z >= M)
        throw ParseError(r.line(), "right index " + std::to_string(z) + " outside [0, " + std::to_string(M) + ")");
      adj.push_back(static_cast<std::uint32_t>(z));
    }
  }
  r.expect_end();
  return at_line(r, [&] {
    return BipartiteGraph(static_cast<std::uint32_t>(N), static_cast<std::uint32_t>(M), static_cast<std::uint32_t>(D),
                          std::move(adj));
  });
}

void write_design(std::ostream& out, const DesignFamily& f) {
  out << f.universe() << ' ' << f.set_size() << ' ' << f.count() << '\n';
  for (const auto& s : f.sets()) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

DesignFamily read_design(std::istream& in) {
  LineReader r(in);
  const auto h = r.expect(3, "design header `d l m`");
  const auto d = r.number(h[0]), l = r.number(h[1]), m = r.number(h[2]);
  if (d > (1u << 24) || l > d || m > (1u << 24)) throw ParseError(r.line(), "design sizes out of range");
  std::vector<std::vector<std::uint32_t>> sets;
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto f = r.expect(l, "design row");
    std::vector<std::uint32_t> s;
    for (const auto& x : f) {
      const auto e = r.number(x);
      if (e >= d) throw ParseError(r.line(), "element " + std::to_string(e) + " outside [0, " + std::to_string(d) + ")");
      if (!s.empty() && e <= s.back()) throw ParseError(r.line(), "design row must be strictly increasing");
      s.push_back(static_cast<std::uint32_t>(e));
    }
    sets.push_back(std::move(s));
  }
  r.expect_end();
  return at_line(r, [&] { return DesignFamily(static_cast<int>(d), static_cast<int>(l), std::move(sets)); });
}

void write_set(std::ostream& out, const std::vector<std::uint32_t>& order) {
  for (auto a : order) out << a << '\n';
}

std::vector<std::uint32_t> read_set(std::istream& in) {
  LineReader r(in);
  std::vector<std::uint32_t> out;
  std::vector<std::string> f;
  std::vector<std::uint32_t> sorted;
  while (r.next(f)) {
    if (f.size() != 1) throw ParseError(r.line(), "expected one left vertex per line");
    const auto a = r.number(f[0]);
    if (a >= (std::uint64_t{1} << 32)) throw ParseError(r.line(), "left vertex above 2^32");
    const auto v = static_cast<std::uint32_t>(a);
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it != sorted.end() && *it == v) throw ParseError(r.line(), "vertex " + f[0] + " listed twice");
    sorted.insert(it, v);
    out.push_back(v);
  }
  return out;
}

void write_bits(std::ostream& out, const std::vector<BitString>& items) {
  for (const auto& b : items) out << b.text() << '\n';
}

std::vector<BitString> read_bits(std::istream& in) {
  LineReader r(in);
  std::vector<BitString> out;
  std::vector<std::string> f;
  while (r.next(f)) {
    if (f.size() != 1) throw ParseError(r.line(), "expected one bit string per line");
    out.push_back(at_line(r, [&] { return BitString::parse(f[0]); }));
  }
  return out;
}

void write_dist(std::ostream& out, const Dist& X) {
  out << X.bits() << '\n';
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (std::uint64_t a = 0; a < X.size(); ++a)
    out << BitString::from_uint(a, static_cast<std::size_t>(X.bits())).text() << ' ' << X[a] << '\n';
  out.flags(flags);
  out.precision(precision);
}

Dist read_dist(std::istream& in) {
  LineReader r(in);
  const auto h = r.expect(1, "distribution header `n`");
  const auto n = r.number(h[0]);
  if (n > static_cast<std::uint64_t>(kMaxDistBits)) throw ParseError(r.line(), "distribution above the dense limit");
  std::vector<double> p(std::size_t{1} << n, 0.0);
  std::vector<char> seen(p.size(), 0);
  std::vector<std::string> f;
  while (r.next(f)) {
    if (f.size() != 2) throw ParseError(r.line(), "expected `<bits> <weight>`");
    const auto b = at_line(r, [&] { return BitString::parse(f[0]); });
    if (b.size() != n) throw ParseError(r.line(), "string length differs from header");
    const auto a = b.to_uint();
    if (seen[a]) throw ParseError(r.line(), "string listed twice");
    seen[a] = 1;
    std::istringstream ws(f[1]);
    ws.imbue(std::locale::classic());
    double w = 0;
    if (!(ws >> w) || !ws.eof()) throw ParseError(r.line(), "bad weight '" + f[1] + "'");
    p[a] = w;
  }
  return at_line(r, [&] { return Dist(static_cast<int>(n), std::move(p)); });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace xtr
