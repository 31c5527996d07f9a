#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "xtr/compose.hpp"
#include "xtr/design.hpp"
#include "xtr/ecc.hpp"
#include "xtr/error.hpp"
#include "xtr/formats.hpp"
#include "xtr/hashext.hpp"
#include "xtr/muchnik.hpp"
#include "xtr/parallel.hpp"
#include "xtr/randgraph.hpp"
#include "xtr/trevisan.hpp"
#include "xtr/verify.hpp"

using namespace xtr;

namespace {

// Exit statuses.
constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsage = 2;

struct Common {
  std::string out;
  int threads = 0;
  std::uint64_t max_subsets = std::uint64_t{1} << 20;

  Budget budget() const { return {max_subsets}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Write the report to this file instead of stdout");
  cmd->add_option("--threads", c.threads, "Worker threads for parallel kernels (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-subsets", c.max_subsets, "Enumeration budget; exceeding it is an error")
      ->check(CLI::PositiveNumber);
}

void prepare(const Common& c) {
  if (c.threads > 0) set_threads(c.threads);
}

/// Collects the report and writes it once the command has finished.
class Report {
 public:
  Report(const std::string& command, const Common& c) : common_(c) {
    body_ << "# xtr " << command;
    if (c.max_subsets != (std::uint64_t{1} << 20)) body_ << " max_subsets=" << c.max_subsets;
  }

  template <class T>
  Report& param(const std::string& key, const T& value) {
    body_ << ' ' << key << '=' << value;
    return *this;
  }
  Report& end_header() {
    body_ << '\n';
    return *this;
  }
  std::ostream& out() { return body_; }

  void flush() const {
    if (common_.out.empty())
      std::cout << body_.str();
    else
      write_file(common_.out, body_.str());
  }

 private:
  const Common& common_;
  std::ostringstream body_;
};

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

template <class T, class Read>
T load(const std::string& path, Read read) {
  std::istringstream in(read_file(path));
  return read(in);
}

Rational parse_fraction(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw std::invalid_argument(std::string(what) + " must be a fraction p/q, got '" + text + "'");
  }
}

BitString random_bits(std::size_t n, std::mt19937_64& rng) {
  BitString b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1);
  return b;
}

// ---------------------------------------------------------------- extract

struct ExtractArgs {
  Common common;
  std::string method, source_file, seed_file, eps = "1/2";
  int l = 0, k = 0, m = 0, t = 0;
  bool strong = false;
};

int run_extract(const ExtractArgs& a) {
  const auto sources = load<std::vector<BitString>>(a.source_file, read_bits);
  const auto seeds = load<std::vector<BitString>>(a.seed_file, read_bits);
  if (sources.empty()) throw std::invalid_argument("source file holds no strings");
  if (seeds.size() != 1 && seeds.size() != sources.size())
    throw std::invalid_argument("seed file needs one seed or one per source");
  const int n = static_cast<int>(sources[0].size());
  for (const auto& x : sources)
    if (static_cast<int>(x.size()) != n) throw DimensionError("all sources must have the same length");
  auto seed_for = [&](std::size_t i) -> const BitString& { return seeds[seeds.size() == 1 ? 0 : i]; };

  Report rep("extract", a.common);
  rep.param("method", a.method).param("n", n);
  std::vector<BitString> outputs;
  if (a.method == "hash") {
    if (a.l < 1) throw std::invalid_argument("--l must be positive");
    const ToeplitzFamily T(n, a.l);
    rep.param("l", a.l).param("d", T.description_bits()).end_header();
    for (std::size_t i = 0; i < sources.size(); ++i) outputs.push_back(hash_extractor_eval(T, sources[i], seed_for(i)));
  } else {
    const auto eps = parse_fraction(a.eps, "--eps");
    const auto p = a.t > 0 ? trevisan_toy(n, a.t, a.m, eps, a.strong) : trevisan_build(n, a.k, a.m, eps, a.strong);
    rep.param("k", p.k).param("m", p.m).param("eps", eps.str()).param("d", p.seed_bits());
    rep.param("nbar", p.code.length()).param("t", p.code.field_exponent()).param("rho", p.rho_budget.str());
    rep.param("strong", a.strong ? 1 : 0).end_header();
    for (std::size_t i = 0; i < sources.size(); ++i) outputs.push_back(trevisan_eval(p, sources[i], seed_for(i)));
  }
  write_bits(rep.out(), outputs);
  rep.flush();
  return kOk;
}

// ---------------------------------------------------------------- verify-graph

struct VerifyArgs {
  Common common;
  std::string graph, kind = "extractor", eps;
  std::uint64_t K = 0;
  int k = -1;
};

int run_verify(const VerifyArgs& a) {
  const auto G = load<BipartiteGraph>(a.graph, read_graph);
  const auto eps = parse_fraction(a.eps, "--eps");
  const auto kind = parse_property_kind(a.kind);
  Report rep("verify-graph", a.common);
  rep.param("graph", a.graph).param("kind", a.kind).param("N", G.left_size()).param("M", G.right_size());
  rep.param("D", G.degree()).param("eps", eps.str());
  bool pass = false;
  std::string witness;
  if (kind == PropertyKind::prefix) {
    if (a.k < 0) throw std::invalid_argument("prefix kind needs --k");
    rep.param("k", a.k).end_header();
    const auto v = verify_prefix_extractor(G, a.k, eps, a.common.budget());
    pass = v.pass;
    if (!pass) witness = "level=" + std::to_string(v.level) + " B=" + join(v.detail.B) + " A=" + join(v.detail.A) +
                         " edges=" + std::to_string(v.detail.edges);
  } else {
    if (a.K == 0) throw std::invalid_argument("--K is required and must be positive");
    rep.param("K", a.K).end_header();
    if (kind == PropertyKind::extractor) {
      const auto v = verify_extractor(G, a.K, eps, a.common.budget());
      pass = v.pass;
      if (!pass) witness = "B=" + join(v.B) + " A=" + join(v.A) + " edges=" + std::to_string(v.edges);
    } else {
      const auto v = verify_disperser(G, a.K, eps, a.common.budget());
      pass = v.pass;
      if (!pass) witness = "A=" + join(v.A) + " Y=" + join(v.Y);
    }
  }
  rep.out() << "verdict " << (pass ? "pass" : "fail") << '\n';
  if (!pass) rep.out() << "witness " << witness << '\n';
  rep.flush();
  return pass ? kOk : kPropertyFailed;
}

// ---------------------------------------------------------------- gen-design

struct DesignArgs {
  Common common;
  int l = 0, m = 0;
  std::string rho = "1";
};

int run_gen_design(const DesignArgs& a) {
  const auto rho = parse_fraction(a.rho, "--rho");
  const auto f = greedy_weak_design(a.l, a.m, rho);
  const auto check = verify_design(f, DesignKind::weak, rho);
  Report rep("gen-design", a.common);
  rep.param("l", a.l).param("m", a.m).param("rho", rho.str()).param("d", f.universe()).end_header();
  rep.out() << "# weak design check: " << (check.pass ? "pass" : "fail") << '\n';
  write_design(rep.out(), f);
  rep.flush();
  return check.pass ? kOk : kPropertyFailed;
}

// ---------------------------------------------------------------- encode-code

struct EncodeArgs {
  Common common;
  std::string message_file, delta = "1/4";
  int t = 0;
};

int run_encode(const EncodeArgs& a) {
  const auto messages = load<std::vector<BitString>>(a.message_file, read_bits);
  if (messages.empty()) throw std::invalid_argument("message file holds no strings");
  const int n = static_cast<int>(messages[0].size());
  const auto delta = parse_fraction(a.delta, "--delta");
  const Code code = a.t > 0 ? Code(n, a.t, delta) : build_code(n, delta);
  Report rep("encode-code", a.common);
  rep.param("n", n).param("delta", delta.str()).param("t", code.field_exponent());
  rep.param("polynomial", "0x" + [&] {
    std::ostringstream h;
    h << std::hex << field_polynomial(code.field_exponent());
    return h.str();
  }());
  rep.param("length", code.length()).end_header();
  std::vector<BitString> words;
  for (const auto& x : messages) {
    if (static_cast<int>(x.size()) != n) throw DimensionError("all messages must have the same length");
    words.push_back(code.encode(x));
  }
  write_bits(rep.out(), words);
  rep.flush();
  return kOk;
}

// ---------------------------------------------------------------- sample-graph

struct SampleArgs {
  Common common;
  std::uint32_t N = 0, M = 0, D = 0;
  std::uint64_t seed = 0;
};

int run_sample(const SampleArgs& a) {
  const auto G = sample_graph(a.N, a.M, a.D, a.seed);
  Report rep("sample-graph", a.common);
  rep.param("N", a.N).param("M", a.M).param("D", a.D).param("seed", a.seed).end_header();
  write_graph(rep.out(), G);
  rep.flush();
  return kOk;
}

// ---------------------------------------------------------------- existence-trial

struct TrialArgs {
  Common common;
  std::uint64_t N = 0, M = 0, K = 0, trials = 10, seed = 0, D = 0;
  std::string eps, kind = "extractor";
};

int run_trial(const TrialArgs& a) {
  const ExistenceParams p{a.N, a.M, a.K, parse_fraction(a.eps, "--eps"), parse_property_kind(a.kind)};
  const auto r = existence_trial(p, a.trials, a.seed, a.common.budget(),
                                 a.D ? std::optional<std::uint64_t>(a.D) : std::nullopt);
  Report rep("existence-trial", a.common);
  rep.param("kind", a.kind).param("N", a.N).param("M", a.M).param("K", a.K).param("eps", p.eps.str());
  rep.param("D", r.D).param("trials", a.trials).param("seed", a.seed).end_header();
  for (const auto& t : r.trials) {
    rep.out() << t.index << ' ' << t.seed << ' ' << (t.pass ? "pass" : "fail");
    if (!t.pass) rep.out() << ' ' << t.witness;
    rep.out() << '\n';
  }
  rep.out() << "pass_fraction=" << r.pass_fraction << '\n';
  rep.flush();
  return r.pass_fraction > 0 ? kOk : kPropertyFailed;
}

// ---------------------------------------------------------------- compose-demo

struct ComposeArgs {
  Common common;
  int n = 3, d1 = 2, d2 = 3, m = 2, mu = 1;
  std::uint64_t seed = 1;
  std::string x, r1, r2;
};

int run_compose(const ComposeArgs& a) {
  if (a.n < 1 || a.d1 < 0 || a.d2 < 0 || a.m < 1 || a.mu < 0) throw std::invalid_argument("lengths must be positive");
  if (a.n + std::max(a.d1, a.d2) > 20 || a.n * a.m + a.mu > 24)
    throw BudgetExceeded("compose-demo: random tables above 2^20 entries");
  const auto E1 = random_table_map(a.n, a.d1, a.d2, trial_seed(a.seed, 1));
  const auto E2 = random_table_map(a.n, a.d2, a.m, trial_seed(a.seed, 2));
  const auto M = random_merger(a.m, a.n, a.mu, a.m, trial_seed(a.seed, 3));
  std::mt19937_64 rng(trial_seed(a.seed, 4));
  auto pick = [&](const std::string& text, int len) {
    auto b = text.empty() ? random_bits(static_cast<std::size_t>(len), rng) : BitString::parse(text);
    if (static_cast<int>(b.size()) != len) throw DimensionError("expected " + std::to_string(len) + " bits in " + text);
    return b;
  };
  const auto x = pick(a.x, a.n);
  const auto r1 = pick(a.r1, a.d1);
  const auto r2 = pick(a.r2, a.mu);

  ComposeTrace trace;
  const auto direct = merger_compose(E1, E2, M, x, r1, r2, &trace);
  const SeededMap Es[2] = {E1, E2};
  const Merger Ms[1] = {M};
  const BitString ys[1] = {r2};
  DpTrace dp;
  const auto via_dp = iterated_compose_dp(Es, Ms, x, r1, ys, &dp);

  Report rep("compose-demo", a.common);
  rep.param("n", a.n).param("d1", a.d1).param("d2", a.d2).param("m", a.m).param("mu", a.mu).param("seed", a.seed);
  rep.param("x", x.text()).param("r1", r1.text()).param("r2", r2.text()).end_header();
  for (std::size_t i = 0; i < trace.q.size(); ++i)
    rep.out() << "block " << i + 1 << " q=" << trace.q[i].text() << " z=" << trace.z[i].text() << '\n';
  rep.out() << "output " << direct.text() << '\n';
  for (std::size_t j = 0; j < dp.rows.size(); ++j) {
    rep.out() << "dp row " << j + 1;
    for (const auto& cell : dp.rows[j]) rep.out() << ' ' << cell.text();
    rep.out() << '\n';
  }
  const bool agree = direct == via_dp;
  rep.out() << "dp output " << via_dp.text() << (agree ? " agrees" : " DIFFERS") << '\n';
  rep.flush();
  return agree ? kOk : kPropertyFailed;
}

// ---------------------------------------------------------------- muchnik-demo

struct MuchnikArgs {
  Common common;
  std::string graph, set, multi, eps, rule = "all";
  int k = -1, k2 = -1, chain_n = 2;
};

int run_muchnik(const MuchnikArgs& a) {
  const auto G = load<BipartiteGraph>(a.graph, read_graph);
  const auto order = load<std::vector<std::uint32_t>>(a.set, read_set);
  const auto eps = parse_fraction(a.eps, "--eps");
  if (a.k < 0 || a.k > 62) throw std::invalid_argument("--k must be in [0, 62]");
  const std::uint64_t K = std::uint64_t{1} << a.k;
  if (a.rule != "all" && a.rule != "majority") throw std::invalid_argument("--rule is all or majority");
  const auto rule = a.rule == "all" ? BadRule::all : BadRule::majority;
  const EnumerableSet S(order, K);
  bool ok = true;

  Report rep("muchnik-demo", a.common);
  rep.param("graph", a.graph).param("set", a.set).param("N", G.left_size()).param("M", G.right_size());
  rep.param("D", G.degree()).param("k", a.k).param("K", K).param("eps", eps.str()).param("rule", a.rule);
  if (!a.multi.empty()) rep.param("multi", a.multi).param("k2", a.k2);
  rep.param("chain_n", a.chain_n).end_header();

  const auto hyp = verify_extractor(G, K, eps, a.common.budget());
  rep.out() << "hypothesis (" << K << ", " << eps.str() << ")-extractor: " << (hyp.pass ? "verified" : "FAILS");
  if (!hyp.pass) rep.out() << " witness B=" << join(hyp.B) << " A=" << join(hyp.A);
  rep.out() << '\n';
  ok = ok && hyp.pass;

  const auto all = compute_bad(G, S, K, BadRule::all);
  const auto maj = compute_bad(G, S, K, BadRule::majority);
  // 2 eps K and 4 eps K compared exactly.
  const auto p = static_cast<unsigned __int128>(eps.num), q = static_cast<unsigned __int128>(eps.den);
  const bool all_ok = all.bad_left.size() * q <= 2 * p * K;
  const bool maj_ok = maj.bad_left.size() * q <= 4 * p * K;
  rep.out() << "|S|=" << S.size() << " bad_right=" << all.bad_right.size() << '\n';
  rep.out() << "bad_left all=" << all.bad_left.size() << " bound 2epsK=" << (Rational(2) * eps * Rational(static_cast<std::int64_t>(K))).str()
            << (all_ok ? " ok" : " VIOLATED") << '\n';
  rep.out() << "bad_left majority=" << maj.bad_left.size()
            << " bound 4epsK=" << (Rational(4) * eps * Rational(static_cast<std::int64_t>(K))).str()
            << (maj_ok ? " ok" : " VIOLATED") << '\n';
  if (hyp.pass && !(all_ok && maj_ok)) ok = false;

  const auto& bad = rule == BadRule::all ? all : maj;
  rep.out() << "# A X edge index decoded\n";
  for (auto A : S.order()) {
    if (bad.is_bad_left(A)) {
      rep.out() << A << " bad\n";
      continue;
    }
    const auto e = encode(G, S, bad, A);
    const auto back = decode(G, S, e.X, e.index);
    const bool round = back == A && std::uint64_t{e.index} * G.right_size() < 2 * G.degree() * K;
    ok = ok && round;
    rep.out() << A << ' ' << e.X << ' ' << e.edge << ' ' << e.index << ' ' << back << (round ? "" : " MISMATCH") << '\n';
  }

  const bool power = G.right_size() && (G.right_size() & (G.right_size() - 1)) == 0;
  const int m = power ? std::countr_zero(G.right_size()) : -1;
  if (!a.multi.empty()) {
    if (!power || a.k > m || a.k2 < 0 || a.k2 > a.k)
      throw std::invalid_argument("--multi needs M = 2^m, k <= m and 0 <= k2 <= k");
    const EnumerableSet S2(load<std::vector<std::uint32_t>>(a.multi, read_set), std::uint64_t{1} << a.k2);
    const Condition conds[2] = {{S, a.k}, {S2, a.k2}};
    rep.out() << "# multi A X prefixes indices\n";
    for (auto A : S2.order()) {
      if (!S.contains(A)) continue;
      try {
        const auto e = encode_multi(G, conds, A);
        bool round = true;
        for (std::size_t i = 0; i < 2; ++i)
          round = round && decode(level_graph(G, conds[i].k), conds[i].S, e.prefixes[i], e.indices[i]) == A;
        ok = ok && round;
        rep.out() << "multi " << A << ' ' << e.X << ' ' << e.prefixes[0] << ',' << e.prefixes[1] << ' '
                  << e.indices[0] << ',' << e.indices[1] << (round ? "" : " MISMATCH") << '\n';
      } catch (const NoGoodNeighbor&) {
        rep.out() << "multi " << A << " bad\n";
      } catch (const Counterexample& ex) {
        ok = false;
        rep.out() << "multi " << A << " COUNTEREXAMPLE " << ex.what() << '\n';
      }
    }
  }

  if (power && a.k <= m && a.chain_n >= 2) {
    const auto schedule = chain_schedule(a.chain_n, a.k);
    std::vector<ChainLevel> levels;
    for (int ki : schedule) levels.push_back({G.truncated(m - ki), std::uint64_t{1} << ki});
    const auto r = iterative_chain(levels, S);
    for (std::size_t i = 0; i < r.sizes.size(); ++i) {
      std::size_t assigned = 0;
      for (const auto& x : r.assigned) assigned += x.level == static_cast<int>(i);
      rep.out() << "chain level " << i << " k=" << schedule[i] << " |S|=" << r.sizes[i] << " assigned=" << assigned
                << '\n';
    }
    rep.out() << "chain unassigned=" << r.unassigned.size() << (r.size_bound_broken ? " size bound broken" : "")
              << '\n';
  } else {
    rep.out() << "chain skipped (needs M = 2^m and k <= m)\n";
  }
  rep.flush();
  return ok ? kOk : kPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomness extractors, exact verifiers and coding harnesses"};
  app.require_subcommand(1);
  int status = kOk;

  ExtractArgs ex;
  auto* c_ex = app.add_subcommand("extract", "Apply a seeded extractor to source strings");
  c_ex->add_option("--method", ex.method, "hash or trevisan")->required()->check(CLI::IsMember({"hash", "trevisan"}));
  c_ex->add_option("--source-file", ex.source_file, "Bit strings, one source per line")->required();
  c_ex->add_option("--seed-file", ex.seed_file, "One seed, or one per source")->required();
  c_ex->add_option("--l", ex.l, "Hash output bits");
  c_ex->add_option("--k", ex.k, "Min-entropy of the source (trevisan)");
  c_ex->add_option("--m", ex.m, "Output bits (trevisan)");
  c_ex->add_option("--eps", ex.eps, "Error p/q (trevisan)");
  c_ex->add_option("--t", ex.t, "Field exponent; skips the feasibility check (trevisan)");
  c_ex->add_flag("--strong", ex.strong, "Prepend the seed to the output (trevisan)");
  add_common(c_ex, ex.common);
  c_ex->callback([&] {
    prepare(ex.common);
    status = run_extract(ex);
  });

  VerifyArgs vg;
  auto* c_vg = app.add_subcommand("verify-graph", "Exact extractor, disperser or prefix check");
  c_vg->add_option("--graph", vg.graph, "Graph file")->required();
  c_vg->add_option("--kind", vg.kind, "extractor, disperser or prefix")
      ->check(CLI::IsMember({"extractor", "disperser", "prefix"}));
  c_vg->add_option("--K", vg.K, "Flat source size");
  c_vg->add_option("--k", vg.k, "Min-entropy bits (prefix)");
  c_vg->add_option("--eps", vg.eps, "Error p/q")->required();
  add_common(c_vg, vg.common);
  c_vg->callback([&] {
    prepare(vg.common);
    status = run_verify(vg);
  });

  DesignArgs gd;
  auto* c_gd = app.add_subcommand("gen-design", "Greedy weak design");
  c_gd->add_option("--l", gd.l, "Set size")->required();
  c_gd->add_option("--m", gd.m, "Number of sets")->required();
  c_gd->add_option("--rho", gd.rho, "Overlap budget p/q, at least 1");
  add_common(c_gd, gd.common);
  c_gd->callback([&] {
    prepare(gd.common);
    status = run_gen_design(gd);
  });

  EncodeArgs ec;
  auto* c_ec = app.add_subcommand("encode-code", "Reed-Solomon + Hadamard codewords");
  c_ec->add_option("--message-file", ec.message_file, "Bit strings, one message per line")->required();
  c_ec->add_option("--delta", ec.delta, "List-decoding parameter p/q selecting t");
  c_ec->add_option("--t", ec.t, "Explicit field exponent");
  add_common(c_ec, ec.common);
  c_ec->callback([&] {
    prepare(ec.common);
    status = run_encode(ec);
  });

  SampleArgs sg;
  auto* c_sg = app.add_subcommand("sample-graph", "Uniformly random left-regular bipartite graph");
  c_sg->add_option("--N", sg.N, "Left vertices")->required();
  c_sg->add_option("--M", sg.M, "Right vertices")->required();
  c_sg->add_option("--D", sg.D, "Left degree")->required();
  c_sg->add_option("--seed", sg.seed, "64-bit seed");
  add_common(c_sg, sg.common);
  c_sg->callback([&] {
    prepare(sg.common);
    status = run_sample(sg);
  });

  TrialArgs et;
  auto* c_et = app.add_subcommand("existence-trial", "Sample graphs at the existence degree and verify them");
  c_et->add_option("--N", et.N, "Left vertices")->required();
  c_et->add_option("--M", et.M, "Right vertices")->required();
  c_et->add_option("--K", et.K, "Flat source size")->required();
  c_et->add_option("--eps", et.eps, "Error p/q")->required();
  c_et->add_option("--kind", et.kind, "extractor, disperser or prefix")
      ->check(CLI::IsMember({"extractor", "disperser", "prefix"}));
  c_et->add_option("--trials", et.trials, "Number of sampled graphs");
  c_et->add_option("--seed", et.seed, "64-bit seed");
  c_et->add_option("--D", et.D, "Override the degree formula");
  add_common(c_et, et.common);
  c_et->callback([&] {
    prepare(et.common);
    status = run_trial(et);
  });

  ComposeArgs cd;
  auto* c_cd = app.add_subcommand("compose-demo", "Trace of the merger composition and its DP evaluation");
  c_cd->add_option("--n", cd.n, "Source bits (= merger blocks)");
  c_cd->add_option("--d1", cd.d1, "Seed bits of the first extractor");
  c_cd->add_option("--d2", cd.d2, "Output of the first extractor = seed of the second");
  c_cd->add_option("--m", cd.m, "Output bits");
  c_cd->add_option("--mu", cd.mu, "Merger seed bits");
  c_cd->add_option("--seed", cd.seed, "Seed for the random tables");
  c_cd->add_option("--x", cd.x, "Source as <len>:<hex>");
  c_cd->add_option("--r1", cd.r1, "First seed as <len>:<hex>");
  c_cd->add_option("--r2", cd.r2, "Merger seed as <len>:<hex>");
  add_common(c_cd, cd.common);
  c_cd->callback([&] {
    prepare(cd.common);
    status = run_compose(cd);
  });

  MuchnikArgs md;
  auto* c_md = app.add_subcommand("muchnik-demo", "Bad sets, encode/decode table and chain on a graph");
  c_md->add_option("--graph", md.graph, "Graph file")->required();
  c_md->add_option("--set", md.set, "Set file in enumeration order")->required();
  c_md->add_option("--k", md.k, "K = 2^k")->required();
  c_md->add_option("--eps", md.eps, "Error p/q")->required();
  c_md->add_option("--rule", md.rule, "all or majority")->check(CLI::IsMember({"all", "majority"}));
  c_md->add_option("--multi", md.multi, "Second condition set");
  c_md->add_option("--k2", md.k2, "Length of the second condition");
  c_md->add_option("--chain-n", md.chain_n, "Shrink parameter n of the chain schedule");
  add_common(c_md, md.common);
  c_md->callback([&] {
    prepare(md.common);
    status = run_muchnik(md);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
