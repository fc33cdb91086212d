#include "braidcx/poset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "braidcx/subword.hpp"

namespace braidcx {

bool FinitePoset::is_reflexive() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (!leq[a][a]) return false;
  return true;
}

bool FinitePoset::is_transitive() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (leq[a][b])
        for (std::size_t c = 0; c < size(); ++c)
          if (leq[b][c] && !leq[a][c]) return false;
  return true;
}

bool FinitePoset::is_antisymmetric() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (leq[a][b] && leq[b][a]) return false;
  return true;
}

std::vector<std::vector<bool>> transitive_closure(std::size_t n,
                                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) r[a][a] = true;
  for (const auto& [a, b] : edges) r[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (r[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (r[k][b]) r[a][b] = true;
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FinitePoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !p.leq[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && p.leq[a][c] && p.leq[c][b]) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

namespace {

// Minimal elements of `candidates` under leq (or maximal when `flip`).
std::vector<std::size_t> extremal(const FinitePoset& p, const std::vector<std::size_t>& candidates, bool flip) {
  std::vector<std::size_t> out;
  for (std::size_t u : candidates) {
    bool extreme = true;
    for (std::size_t v : candidates)
      if (v != u && (flip ? p.leq[u][v] : p.leq[v][u])) extreme = false;
    if (extreme) out.push_back(u);
  }
  return out;
}

}  // namespace

SemilatticeReport semilattice_check(const FinitePoset& p) {
  if (!p.is_reflexive() || !p.is_transitive() || !p.is_antisymmetric())
    throw PreconditionError("semilattice check needs a partial order");
  SemilatticeReport report;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<std::size_t> upper, lower;
      for (std::size_t c = 0; c < n; ++c) {
        if (p.leq[a][c] && p.leq[b][c]) upper.push_back(c);
        if (p.leq[c][a] && p.leq[c][b]) lower.push_back(c);
      }
      auto minimal_upper = extremal(p, upper, false);
      auto maximal_lower = extremal(p, lower, true);
      if (minimal_upper.size() != 1 && report.join) {
        report.join = false;
        report.join_failure = BoundCertificate{a, b, std::move(minimal_upper)};
      }
      if (maximal_lower.size() != 1 && report.meet) {
        report.meet = false;
        report.meet_failure = BoundCertificate{a, b, std::move(maximal_lower)};
      }
    }
  return report;
}

FinitePoset RhoPoset::quotient() const {
  FinitePoset out;
  const std::size_t n = classes.size();
  out.leq.assign(n, std::vector<bool>(n, false));
  for (const auto& cls : classes) {
    std::string name;
    for (std::size_t w : cls) name += (name.empty() ? "" : " ~ ") + words[w].str();
    out.names.push_back(std::move(name));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.leq[a][b] = relation[classes[a].front()][classes[b].front()];
  return out;
}

std::size_t RhoPoset::unverified_moves() const {
  return static_cast<std::size_t>(std::count_if(moves.begin(), moves.end(), [](const RhoMove& m) { return !m.verified; }));
}

namespace {

bool mirrors(BraidCase forward, BraidCase backward) {
  switch (forward) {
    case BraidCase::LeftIsSubdivisionOfRight: return backward == BraidCase::RightIsSubdivisionOfLeft;
    case BraidCase::RightIsSubdivisionOfLeft: return backward == BraidCase::LeftIsSubdivisionOfRight;
    default: return backward == forward;
  }
}

void run_parallel(std::size_t count, unsigned jobs, const auto& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) work(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) work(k);
    });
}

bool single_subdivision(const LabeledComplex& coarse, const LabeledComplex& fine) {
  if (fine.vertices().size() != coarse.vertices().size() + 1) return false;
  const auto target_f = f_vector(fine);
  const VertexLabel r = VertexLabel::fresh("r");
  for (FaceMask m : coarse.all_face_masks()) {
    if (std::popcount(m) != 2) continue;
    const LabelSet e = coarse.labels_of(m);
    const LabeledComplex y = edge_subdivide(coarse, e[0], e[1], r);
    if (f_vector(y) == target_f && find_isomorphism(y, fine)) return true;
  }
  return false;
}

}  // namespace

RhoPoset build_rho(const CoxeterSystem& sys, const Word& prefix, const Word& suffix, const GroupElement& pi,
                   const RhoOptions& options) {
  sys.check_word(prefix);
  sys.check_word(suffix);
  RhoPoset p;
  p.prefix = prefix;
  p.suffix = suffix;
  const auto all = reduced_words(sys, pi, options.cap);
  p.words.assign(all.begin(), all.end());
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < p.words.size(); ++k) index.emplace(p.words[k], k);

  for (std::size_t a = 0; a < p.words.size(); ++a)
    for (const auto& site : braid_sites(sys, p.words[a])) {
      const std::size_t b = index.at(apply_braid_move(sys, p.words[a], site.pos, site.i, site.j));
      if (a < b) p.moves.push_back(RhoMove{a, b, site.pos, {}, {}, false, false, {}});
    }

  run_parallel(p.moves.size(), options.jobs, [&](std::size_t k) {
    RhoMove& mv = p.moves[k];
    const std::size_t at = prefix.size() + mv.pos;
    const CaseReport fwd = classify(BraidContext::at(sys, prefix + p.words[mv.a] + suffix, at, pi));
    const CaseReport bwd = classify(BraidContext::at(sys, prefix + p.words[mv.b] + suffix, at, pi));
    mv.forward = fwd.kind;
    mv.backward = bwd.kind;
    mv.mirror_consistent = mirrors(fwd.kind, bwd.kind);
    const bool supported = fwd.kind != BraidCase::Unsupported && bwd.kind != BraidCase::Unsupported;
    mv.verified = !supported || (fwd.verified() && bwd.verified());
    mv.witness = fwd.witness;
  });

  std::vector<std::pair<std::size_t, std::size_t>> graph;
  for (std::size_t k = 0; k < p.moves.size(); ++k) {
    const RhoMove& mv = p.moves[k];
    if (!mv.verified || !mv.mirror_consistent) continue;
    switch (mv.forward) {
      case BraidCase::Isomorphic:
        p.edges.push_back({mv.a, mv.b, k, mv.forward});
        p.edges.push_back({mv.b, mv.a, k, mv.forward});
        break;
      case BraidCase::LeftIsSubdivisionOfRight: p.edges.push_back({mv.b, mv.a, k, mv.forward}); break;
      case BraidCase::RightIsSubdivisionOfLeft: p.edges.push_back({mv.a, mv.b, k, mv.forward}); break;
      default: break;
    }
  }
  for (const auto& e : p.edges) graph.emplace_back(e.coarser, e.finer);
  const std::size_t n = p.words.size();
  p.relation = transitive_closure(n, graph);

  p.class_of.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (p.class_of[a] != n) continue;
    std::vector<std::size_t> cls;
    for (std::size_t b = a; b < n; ++b)
      if (p.relation[a][b] && p.relation[b][a]) {
        p.class_of[b] = p.classes.size();
        cls.push_back(b);
      }
    p.classes.push_back(std::move(cls));
  }
  p.antisymmetric = p.classes.size() == n;
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    const auto& e = p.edges[k];
    if (e.kind != BraidCase::Isomorphic && p.class_of[e.coarser] == p.class_of[e.finer])
      p.antisymmetry_violations.push_back(k);
  }

  if (n <= options.global_check_limit) {
    p.global_check = true;
    std::vector<LabeledComplex> complexes(n);
    run_parallel(n, options.jobs, [&](std::size_t k) {
      complexes[k] = build(SubwordDescriptor::plain(sys, prefix + p.words[k] + suffix, pi));
    });
    const std::size_t c = p.classes.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < c; ++x)
      for (std::size_t y = 0; y < c; ++y)
        if (x != y) pairs.emplace_back(x, y);
    std::vector<std::optional<RhoGap>> found(pairs.size());
    run_parallel(pairs.size(), options.jobs, [&](std::size_t k) {
      const std::size_t a = p.classes[pairs[k].first].front();
      const std::size_t b = p.classes[pairs[k].second].front();
      if (p.relation[a][b]) return;
      if (a < b && !p.relation[b][a] && f_vector(complexes[a]) == f_vector(complexes[b]) &&
          find_isomorphism(complexes[a], complexes[b]))
        found[k] = RhoGap{a, b, "isomorphic"};
      else if (single_subdivision(complexes[a], complexes[b]))
        found[k] = RhoGap{a, b, "edge-subdivision"};
    });
    for (auto& g : found)
      if (g) p.gaps.push_back(std::move(*g));
  }
  return p;
}

std::string export_dot(const RhoPoset& p) {
  const FinitePoset q = p.quotient();
  std::map<std::pair<std::size_t, std::size_t>, std::set<int>> labels;
  for (const auto& e : p.edges) {
    const std::size_t a = p.class_of[e.coarser], b = p.class_of[e.finer];
    if (a != b) labels[{a, b}].insert(static_cast<int>(e.kind));
  }
  std::ostringstream out;
  out << "digraph rho {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < q.size(); ++k) {
    std::string label;
    for (std::size_t w : p.classes[k]) label += (label.empty() ? "" : "\\n") + p.words[w].str();
    out << "  n" << k << " [label=\"" << label << "\"];\n";
  }
  if (q.is_antisymmetric()) {
    for (const auto& [a, b] : hasse_edges(q)) {
      std::string cases;
      for (int c : labels[{a, b}]) cases += (cases.empty() ? "" : ",") + std::to_string(c);
      out << "  n" << a << " -> n" << b << " [label=\"" << cases << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace braidcx
