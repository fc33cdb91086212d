#include "cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "braidcx/braid.hpp"
#include "braidcx/io.hpp"
#include "braidcx/poset.hpp"
#include "braidcx/subword.hpp"
#include "sampling.hpp"

namespace braidcx::tool {

namespace {

struct Common {
  std::string group;
  std::string pi = "w0";
  std::size_t cap = kDefaultReducedWordCap;
  double tolerance = 1e-6;
  std::string json_path;
};

void add_common(CLI::App* cmd, Common& c, bool with_pi = true) {
  cmd->add_option("--group,-g", c.group, "group name (A3, B3, D4, H3, I2:5, ...) or JSON file")->required();
  if (with_pi) cmd->add_option("--pi", c.pi, "target element as a word, or w0")->capture_default_str();
  cmd->add_option("--cap", c.cap, "limit on enumerated reduced words")->capture_default_str();
  cmd->add_option("--tolerance", c.tolerance, "root negativity tolerance")->capture_default_str();
  cmd->add_option("--json", c.json_path, "write a JSON report here (- for stdout)");
}

CoxeterSystem make_system(const Common& c) {
  SystemOptions opts;
  opts.negativity_tolerance = c.tolerance;
  return CoxeterSystem(parse_group(c.group), opts);
}

template <typename T>
std::string tuple(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string gamma_text(const LabeledComplex& x, bool spherical) {
  if (!spherical || x.is_void()) return "-";
  return tuple(gamma(x).coefficients());
}

void write_json(const std::string& path, const nlohmann::json& j, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << j.dump(2) << "\n";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void print_complex(std::ostream& out, const std::string& name, const LabeledComplex& x, bool spherical) {
  out << name << ": ";
  if (x.is_void()) {
    out << "void\n";
    return;
  }
  out << "f " << tuple(f_vector(x)) << "  h " << tuple(h_vector(x)) << "  gamma " << gamma_text(x, spherical)
      << "  spherical " << yes(spherical) << "  flag " << yes(is_flag(x)) << "\n";
}

void print_report(std::ostream& out, const CaseReport& r) {
  out << "case " << static_cast<int>(r.kind) << " (" << to_string(r.kind) << ")  m " << r.m << "\n";
  out << "A2 " << yes(r.A2) << "  B2 " << yes(r.B2);
  if (r.A3) out << "  A3 " << yes(*r.A3) << "  B3 " << yes(*r.B3);
  out << "\n";
  print_complex(out, "left ", r.left, r.left_spherical);
  print_complex(out, "right", r.right, r.right_spherical);
  if (r.common) print_complex(out, "common", *r.common, r.left_spherical && r.right_spherical);
  out << "witness: " << r.witness << "  verified " << yes(r.witness_verified) << "  literal " << yes(r.literal)
      << "\n";
  out << "decomposition " << (r.decomposition.ok ? "ok" : "FAILED") << "\n";
  for (const auto& f : r.decomposition.failures) out << "  " << f << "\n";
  if (r.delta) {
    out << "deltaH " << r.delta->h_lhs.str() << "  formula " << r.delta->h_rhs.str() << "  "
        << (r.delta->h_identity ? "equal" : "DIFFERENT") << "\n";
    if (r.delta->gamma_lhs)
      out << "deltaGamma " << r.delta->gamma_lhs->str() << "  formula " << r.delta->gamma_rhs->str() << "  "
          << (r.delta->gamma_identity ? "equal" : "DIFFERENT") << "\n";
  }
}

bool report_ok(const CaseReport& r) {
  return r.kind == BraidCase::Unsupported ? r.decomposition.ok : r.verified();
}

std::vector<std::size_t> parse_positions(const std::string& text) {
  std::vector<std::size_t> out;
  for (int x : Word::parse(text)) out.push_back(static_cast<std::size_t>(x));
  return out;
}

int cmd_complex(const Common& c, const std::string& word_text, std::ostream& out) {
  const CoxeterSystem sys = make_system(c);
  const Word q = Word::parse(word_text);
  sys.check_word(q);
  const GroupElement pi = parse_element(sys, c.pi);
  const auto d = SubwordDescriptor::plain(sys, q, pi);
  const LabeledComplex x = build(d);
  const bool spherical = is_spherical(d);
  out << "group " << sys.coxeter_matrix().type_name() << "  word " << q.str() << "  pi " << reduced_word(sys, pi).str()
      << " (length " << length(sys, pi) << ")\n";
  print_complex(out, "complex", x, spherical);
  if (!x.is_void()) {
    out << "vertices";
    for (const auto& v : x.vertices()) out << " " << v.str();
    out << "\nfacets";
    for (const auto& f : x.facets()) out << " " << to_string(f);
    out << "\n";
    if (!spherical && !h_polynomial(x).is_palindromic()) out << "h-vector is not palindromic\n";
  }
  write_json(c.json_path, complex_json(x, spherical), out);
  return kExitOk;
}

int cmd_classify(const Common& c, const std::string& q, const std::string& qp, int i, int j, std::ostream& out) {
  const CoxeterSystem sys = make_system(c);
  const auto ctx = BraidContext::make(sys, Word::parse(q), Word::parse(qp), i, j, parse_element(sys, c.pi));
  const CaseReport r = classify(ctx);
  out << "Q " << ctx.prefix.str() << "  window " << ctx.assembled(Side::Left, 0).slice(ctx.prefix.size(), static_cast<std::size_t>(ctx.m())).str()
      << " -> " << ctx.assembled(Side::Right, 0).slice(ctx.prefix.size(), static_cast<std::size_t>(ctx.m())).str()
      << "  Q' " << ctx.suffix.str() << "\n";
  print_report(out, r);
  write_json(c.json_path, to_json(r), out);
  return report_ok(r) ? kExitOk : kExitMismatch;
}

int print_sequence(const std::vector<SequenceStep>& steps, const CoxeterSystem& sys, const GroupElement& pi,
                   const Common& c, std::ostream& out) {
  bool ok = true;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : steps) {
    const auto& r = s.report;
    out << s.before.str() << " -> " << s.after.str() << " at " << s.pos << ": case " << static_cast<int>(r.kind)
        << (report_ok(r) ? "" : " MISMATCH") << "\n";
    ok = ok && report_ok(r);
    j.push_back(to_json(s));
  }
  out << "words:\n";
  std::vector<Word> words;
  if (!steps.empty()) words.push_back(steps.front().before);
  for (const auto& s : steps) words.push_back(s.after);
  for (const auto& w : words) {
    const auto d = SubwordDescriptor::plain(sys, w, pi);
    const auto x = build(d);
    out << "  " << w.str() << "  f " << tuple(f_vector(x)) << "  gamma " << gamma_text(x, is_spherical(d)) << "\n";
  }
  write_json(c.json_path, j, out);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_chain(const Common& c, const std::string& word, const std::string& moves, std::ostream& out) {
  const CoxeterSystem sys = make_system(c);
  const GroupElement pi = parse_element(sys, c.pi);
  const Word start = Word::parse(word);
  sys.check_word(start);
  return print_sequence(apply_sequence(sys, start, pi, parse_positions(moves)), sys, pi, c, out);
}

int cmd_poset(const Common& c, const std::string& q, const std::string& qp, const std::string& dot, unsigned jobs,
              std::size_t global_limit, std::ostream& out) {
  const CoxeterSystem sys = make_system(c);
  const GroupElement pi = parse_element(sys, c.pi);
  RhoOptions opts;
  opts.cap = c.cap;
  opts.jobs = jobs;
  opts.global_check_limit = global_limit;
  const RhoPoset p = build_rho(sys, Word::parse(q), Word::parse(qp), pi, opts);
  const FinitePoset quotient = p.quotient();

  std::map<int, int> counts;
  for (const auto& m : p.moves) ++counts[static_cast<int>(m.forward)];
  out << "words " << p.words.size() << "  moves " << p.moves.size() << "  edges " << p.edges.size() << "  classes "
      << p.classes.size() << "\n";
  out << "move cases";
  for (const auto& [k, n] : counts) out << "  " << k << ":" << n;
  out << "\n";
  std::size_t mirror_failures = 0;
  for (const auto& m : p.moves) mirror_failures += m.mirror_consistent ? 0 : 1;
  out << "unverified moves " << p.unverified_moves() << "  mirror failures " << mirror_failures << "\n";
  out << "antisymmetric " << yes(p.antisymmetric) << "  strict edges inside a class " << p.antisymmetry_violations.size()
      << "\n";
  for (std::size_t k = 0; k < p.classes.size(); ++k)
    if (p.classes[k].size() > 1) out << "  class " << quotient.names[k] << "\n";
  if (p.global_check) {
    out << "relations outside the generated order " << p.gaps.size() << "\n";
    for (const auto& g : p.gaps) out << "  " << p.words[g.a].str() << " / " << p.words[g.b].str() << ": " << g.relation << "\n";
  }
  std::optional<SemilatticeReport> lattice;
  if (quotient.is_antisymmetric()) {
    lattice = semilattice_check(quotient);
    const auto show = [&](const char* what, bool holds, const std::optional<BoundCertificate>& cert) {
      out << what << "-semilattice " << yes(holds);
      if (cert) {
        out << "  pair [" << quotient.names[cert->a] << "] [" << quotient.names[cert->b] << "] has "
            << (cert->extremal_bounds.empty() ? "no bound" : std::to_string(cert->extremal_bounds.size()) + " extremal bounds");
        for (std::size_t b : cert->extremal_bounds) out << " [" << quotient.names[b] << "]";
      }
      out << "\n";
    };
    show("meet", lattice->meet, lattice->meet_failure);
    show("join", lattice->join, lattice->join_failure);
  } else {
    out << "quotient is not antisymmetric; semilattice check skipped\n";
  }
  if (!dot.empty()) write_text(dot, export_dot(p));
  write_json(c.json_path, to_json(p, lattice), out);
  const bool ok = p.unverified_moves() == 0 && mirror_failures == 0 && p.antisymmetry_violations.empty();
  return ok ? kExitOk : kExitMismatch;
}

int demo_i2(int m, const Common& c, std::ostream& out) {
  const CoxeterSystem sys(CoxeterMatrix::named("I2", m));
  const auto ctx = BraidContext::make(sys, Word{1, 2}, Word{}, 1, 2, longest_element(sys));
  const CaseReport r = classify(ctx);
  out << "I2(" << m << "), Q = 1,2, Q' = e, pi = w0\n";
  out << "left word " << ctx.assembled(Side::Left, 0).str() << "  right word " << ctx.assembled(Side::Right, 0).str()
      << "\n";
  print_report(out, r);
  write_json(c.json_path, to_json(r), out);
  bool ok = r.verified() && r.kind == BraidCase::LeftIsSubdivisionOfRight;
  if (ok && m >= 2) {
    const auto g1 = gamma(r.left), g2 = gamma(r.right);
    out << "gamma1 difference " << g1[1] - g2[1] << "\n";
    ok = g1[1] - g2[1] == m - 2;
  }
  return ok ? kExitOk : kExitMismatch;
}

int demo_a3_chain(const Common& c, std::ostream& out) {
  const CoxeterSystem sys(CoxeterMatrix::named("A", 3));
  const GroupElement w0 = longest_element(sys);
  const std::vector<Word> rows = {
      {1, 2, 3, 3, 2, 1, 3, 2, 3}, {1, 2, 3, 3, 2, 3, 1, 2, 3}, {1, 2, 3, 2, 3, 2, 1, 2, 3},
      {1, 2, 3, 2, 3, 1, 2, 1, 3}, {1, 2, 3, 2, 1, 3, 2, 3, 1}, {1, 2, 3, 2, 1, 2, 3, 2, 1},
      {1, 2, 3, 1, 2, 1, 3, 2, 1}, {1, 2, 3, 1, 2, 3, 1, 2, 1},
  };
  const std::vector<std::size_t> moves = {6, 4, 6, 5, 8, 6, 4, 6};
  const auto steps = apply_sequence(sys, rows.front(), w0, moves);
  bool ok = true;
  out << "A3, pi = w0\n";
  for (const auto& s : steps) {
    out << s.before.str() << " -> " << s.after.str() << " at " << s.pos << ": case " << static_cast<int>(s.report.kind)
        << "\n";
    ok = ok && report_ok(s.report);
  }
  out << "row  word               f            gamma\n";
  std::size_t row = 0;
  std::vector<std::int64_t> trajectory;
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t k = 0; k <= steps.size(); ++k) {
    const Word w = k == 0 ? steps.front().before : steps[k - 1].after;
    if (row < rows.size() && w == rows[row]) {
      const auto d = SubwordDescriptor::plain(sys, w, w0);
      const auto x = build(d);
      const auto g = gamma(x);
      out << row + 1 << "    " << w.str() << "  " << tuple(f_vector(x)) << "  " << tuple(g.coefficients()) << "\n";
      trajectory.push_back(g[1]);
      j.push_back({{"word", w.str()}, {"complex", complex_json(x, is_spherical(d))}});
      ++row;
    }
  }
  ok = ok && row == rows.size();
  out << "gamma1 trajectory " << tuple(trajectory) << "\n";
  write_json(c.json_path, j, out);
  return ok ? kExitOk : kExitMismatch;
}

struct VerifyTally {
  std::size_t failures = 0;
  std::map<int, std::size_t> cases;
  std::vector<std::string> messages;
};

int cmd_verify(const Common& c, std::size_t count, std::uint64_t seed, std::size_t max_outer, unsigned jobs,
               std::ostream& out) {
  const CoxeterSystem sys = make_system(c);
  std::mt19937_64 rng(seed);
  std::vector<BraidContext> contexts;
  for (std::size_t k = 0; k < count; ++k) contexts.push_back(random_context(sys, rng, max_outer));

  std::vector<std::string> problems(count);
  std::vector<int> kinds(count);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      const auto& ctx = contexts[k];
      const CaseReport r = classify(ctx);
      kinds[k] = static_cast<int>(r.kind);
      std::string p;
      if (!report_ok(r)) p += " report";
      const bool F_in_left = r.left.contains(ctx.end_edge(Side::Left));
      const bool G_in_right = r.right.contains(ctx.end_edge(Side::Right));
      if (r.B2 == F_in_left || r.A2 == G_in_right) p += " A2B2";
      for (int a = 0; a < ctx.m(); ++a)
        for (int b = a + 1; b <= ctx.m(); ++b)
          for (Side s : {Side::Left, Side::Right})
            if (condition(ctx, s, a) && !(condition(ctx, Side::Left, b) && condition(ctx, Side::Right, b)))
              p += " monotone";
      if (!p.empty())
        problems[k] = ctx.prefix.str() + " | " + std::to_string(ctx.i) + "," + std::to_string(ctx.j) + " | " +
                      ctx.suffix.str() + " | pi " + reduced_word(sys, ctx.pi).str() + ":" + p;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::max(1u, jobs); ++t) pool.emplace_back(work);
  }
  VerifyTally tally;
  for (std::size_t k = 0; k < count; ++k) {
    ++tally.cases[kinds[k]];
    if (!problems[k].empty()) {
      ++tally.failures;
      out << "FAIL " << problems[k] << "\n";
    }
  }
  out << count << " contexts in " << sys.coxeter_matrix().type_name() << " (seed " << seed << "), cases";
  for (const auto& [k, n] : tally.cases) out << "  " << k << ":" << n;
  out << ", failures " << tally.failures << "\n";
  return tally.failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subword complexes and braid moves"};
  app.require_subcommand(1);

  Common common;
  std::string word, q, qp, moves, dot, demo_name;
  int i = 0, j = 0, m = 5;
  unsigned jobs = 1;
  std::size_t count = 100, max_outer = 4, global_limit = 24;
  std::uint64_t seed = 1;

  auto* complex = app.add_subcommand("complex", "build the subword complex of a word");
  add_common(complex, common);
  complex->add_option("--word,-w", word, "the word Q")->required();

  auto* cls = app.add_subcommand("classify", "classify the braid move between Q w_ij Q' and Q w_ji Q'");
  add_common(cls, common);
  cls->add_option("--Q", q, "prefix word");
  cls->add_option("--Qprime", qp, "suffix word");
  cls->add_option("--i", i, "first window letter")->required();
  cls->add_option("--j", j, "second window letter")->required();

  auto* chain = app.add_subcommand("chain", "apply braid moves in sequence and classify each one");
  add_common(chain, common);
  chain->add_option("--word,-w", word, "starting word")->required();
  chain->add_option("--moves", moves, "1-based window positions, e.g. 6,4,6")->required();

  auto* poset = app.add_subcommand("poset", "build the subdivision order on reduced words of pi");
  add_common(poset, common);
  poset->add_option("--Q", q, "prefix word");
  poset->add_option("--Qprime", qp, "suffix word");
  poset->add_option("--dot", dot, "write the Hasse diagram here");
  poset->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  poset->add_option("--global-limit", global_limit, "pairwise search up to this many words")->capture_default_str();
  poset->add_option("--seed", seed, "accepted for uniformity; the build is deterministic");

  auto* demo = app.add_subcommand("demo", "replay a worked example (i2, a3-chain)");
  demo->add_option("name", demo_name, "i2 or a3-chain")->required()->check(CLI::IsMember({"i2", "a3-chain"}));
  demo->add_option("--m", m, "dihedral parameter for i2")->capture_default_str();
  demo->add_option("--json", common.json_path, "write a JSON report here (- for stdout)");

  auto* verify = app.add_subcommand("verify", "check the structural identities on random braid contexts");
  add_common(verify, common, false);
  verify->add_option("--count", count, "number of contexts")->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--max-outer", max_outer, "bound on |Q| + |Q'|")->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*complex) return cmd_complex(common, word, out);
    if (*cls) return cmd_classify(common, q, qp, i, j, out);
    if (*chain) return cmd_chain(common, word, moves, out);
    if (*poset) return cmd_poset(common, q, qp, dot, jobs, global_limit, out);
    if (*demo) {
      if (demo_name == "i2") {
        if (m < 2) throw InputError("--m must be at least 2");
        return demo_i2(m, common, out);
      }
      return demo_a3_chain(common, out);
    }
    if (*verify) return cmd_verify(common, count, seed, max_outer, jobs, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"braidcx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace braidcx::tool
