#include "braidcx/braid.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidcx {

Word window_word(int i, int j, int m, int k) {
  if (k < 0 || k > m) throw InputError("window exponent " + std::to_string(k) + " outside [0, " + std::to_string(m) + "]");
  return alternating_word(i, j, static_cast<std::size_t>(m - k));
}

BraidContext BraidContext::make(const CoxeterSystem& sys, Word prefix, Word suffix, int i, int j, GroupElement pi) {
  if (i < 1 || j < 1 || i > sys.rank() || j > sys.rank())
    throw InputError("generator index out of range");
  if (i == j) throw InputError("braid move needs i != j");
  sys.check_word(prefix);
  sys.check_word(suffix);
  BraidContext ctx;
  ctx.system = &sys;
  ctx.prefix = std::move(prefix);
  ctx.suffix = std::move(suffix);
  ctx.i = i;
  ctx.j = j;
  ctx.pi = std::move(pi);
  return ctx;
}

BraidContext BraidContext::at(const CoxeterSystem& sys, const Word& word, std::size_t pos, GroupElement pi) {
  if (pos < 1 || pos >= word.size())
    throw InputError("no braid window at position " + std::to_string(pos) + " of " + word.str());
  const int i = word[pos - 1];
  const int j = word[pos];
  if (i == j) throw InputError("no braid window at position " + std::to_string(pos) + " of " + word.str());
  const auto m = static_cast<std::size_t>(sys.m(i, j));
  if (pos - 1 + m > word.size() || word.slice(pos - 1, m) != alternating_word(i, j, m))
    throw InputError("no braid window at position " + std::to_string(pos) + " of " + word.str());
  return make(sys, word.slice(0, pos - 1), word.slice(pos - 1 + m, word.size() - (pos - 1 + m)), i, j,
              std::move(pi));
}

Word BraidContext::assembled(Side side, int k) const {
  const Word w = side == Side::Left ? window_word(i, j, m(), k) : window_word(j, i, m(), k);
  return prefix + w + suffix;
}

VertexLabel BraidContext::window_label(Side side, int l) const {
  return side == Side::Left ? VertexLabel::f(l) : VertexLabel::g(l, m());
}

LabelSet BraidContext::internal_labels(Side side) const {
  std::vector<VertexLabel> out;
  for (int l = 2; l < m(); ++l) out.push_back(window_label(side, l));
  return make_label_set(std::move(out));
}

LabelSet BraidContext::end_edge(Side) const { return make_label_set({VertexLabel::f(1), VertexLabel::f(m())}); }

std::vector<VertexLabel> BraidContext::universe() const {
  std::vector<VertexLabel> out;
  for (std::size_t p = 1; p <= prefix.size(); ++p) out.push_back(VertexLabel::q(static_cast<int>(p)));
  for (int l = 1; l <= m(); ++l) out.push_back(VertexLabel::f(l));
  for (int l = 2; l < m(); ++l) out.push_back(VertexLabel::g(l, m()));
  for (std::size_t p = 1; p <= suffix.size(); ++p) out.push_back(VertexLabel::q_prime(static_cast<int>(p)));
  return make_label_set(std::move(out));
}

SubwordDescriptor BraidContext::descriptor(Side side) const {
  std::vector<VertexLabel> labels;
  for (std::size_t p = 1; p <= prefix.size(); ++p) labels.push_back(VertexLabel::q(static_cast<int>(p)));
  for (int l = 1; l <= m(); ++l) labels.push_back(window_label(side, l));
  for (std::size_t p = 1; p <= suffix.size(); ++p) labels.push_back(VertexLabel::q_prime(static_cast<int>(p)));
  return SubwordDescriptor::labeled(*system, assembled(side, 0), std::move(labels), pi);
}

BraidContext BraidContext::mirrored() const { return make(*system, prefix, suffix, j, i, pi); }

bool condition(const BraidContext& ctx, Side which, int k) {
  return !contains_reduced(*ctx.system, ctx.assembled(which, k), ctx.pi);
}

BraidSides build_sides(const BraidContext& ctx) {
  return {build(ctx.descriptor(Side::Left)), build(ctx.descriptor(Side::Right))};
}

namespace {

Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// Δ(Q_side^0) with the given window labels removed; the remaining word must
// be `expected`, which is how the link isomorphisms become label
// re-addressing.
LabeledComplex shortened(const BraidContext& ctx, Side side, const LabelSet& drop, const Word& expected) {
  const SubwordDescriptor d = ctx.descriptor(side).without_labels(drop);
  if (d.word != expected) throw std::logic_error("shortened window word " + d.word.str() + " != " + expected.str());
  return build(d);
}

// L(l) for l = 1..m-1: the complex of the side word with window letters l
// and l+1 removed, a copy of Δ(Q_side^2).
std::vector<LabeledComplex> pair_links(const BraidContext& ctx, Side side) {
  std::vector<LabeledComplex> out(static_cast<std::size_t>(ctx.m()));
  const Word expected = ctx.assembled(side, 2);
  for (int l = 1; l < ctx.m(); ++l)
    out[static_cast<std::size_t>(l)] = shortened(
        ctx, side, make_label_set({ctx.window_label(side, l), ctx.window_label(side, l + 1)}), expected);
  return out;
}

// Complex of the side word with both window ends removed, a copy of
// Δ(Q_other^2).
LabeledComplex end_link(const BraidContext& ctx, Side side) {
  return shortened(ctx, side, ctx.end_edge(side), ctx.assembled(other(side), 2));
}

// {ρ ∪ add : ρ ∈ base}
void insert_shifted(FaceSet& out, const LabeledComplex& base, const LabelSet& add) {
  const FaceSet lifted = FaceSet::of_complex(out.universe(), base);
  const FaceMask extra = out.mask_of(add);
  for (FaceMask m : lifted.masks()) out.insert_mask(m | extra);
}

// base * {v}
FaceSet cone(const std::vector<VertexLabel>& universe, const LabeledComplex& base, const VertexLabel& v) {
  FaceSet out = FaceSet::of_complex(universe, base);
  insert_shifted(out, base, {v});
  return out;
}

FaceSet internal_family(const BraidContext& ctx, Side side, const std::vector<LabeledComplex>& links) {
  FaceSet out(ctx.universe());
  const auto w = [&](int l) { return ctx.window_label(side, l); };
  for (int l = 2; l < ctx.m(); ++l) {
    const auto& up = links[static_cast<std::size_t>(l)];
    const auto& down = links[static_cast<std::size_t>(l - 1)];
    insert_shifted(out, up, {w(l)});
    insert_shifted(out, up, make_label_set({w(l), w(l + 1)}));
    insert_shifted(out, down, {w(l)});
    insert_shifted(out, down, make_label_set({w(l - 1), w(l)}));
  }
  return out;
}

FaceSet filter(const FaceSet& all, const auto& keep) {
  FaceSet out(all.universe());
  for (FaceMask m : all.masks())
    if (keep(m)) out.insert_mask(m);
  return out;
}

FaceSet tilde_faces(const BraidContext& ctx, const LabeledComplex& delta, Side side) {
  const auto U = ctx.universe();
  const FaceSet all = FaceSet::of_complex(U, delta);
  const FaceMask internal = all.mask_of(ctx.internal_labels(side));
  const FaceMask edge = all.mask_of(ctx.end_edge(side));
  return filter(all, [&](FaceMask m) { return (m & internal) == 0 && (m & edge) != edge; });
}

std::string case_word(Side side) { return side == Side::Left ? "Δ1" : "Δ2"; }

}  // namespace

Subfamilies subfamilies(const BraidContext& ctx) {
  const auto U = ctx.universe();
  Subfamilies out{FaceSet(U), FaceSet(U), FaceSet(U), FaceSet(U)};
  out.left_internal = internal_family(ctx, Side::Left, pair_links(ctx, Side::Left));
  out.right_internal = internal_family(ctx, Side::Right, pair_links(ctx, Side::Right));
  insert_shifted(out.left_edge, end_link(ctx, Side::Left), ctx.end_edge(Side::Left));
  insert_shifted(out.right_edge, end_link(ctx, Side::Right), ctx.end_edge(Side::Right));
  return out;
}

LabeledComplex tilde(const BraidContext& ctx, Side side) {
  const SubwordDescriptor d = ctx.descriptor(side);
  return tilde_faces(ctx, build(d), side).to_complex();
}

void CheckReport::expect(bool condition, std::string what) {
  if (condition) return;
  ok = false;
  failures.push_back(std::move(what));
}

CheckReport verify_decomposition(const BraidContext& ctx) {
  CheckReport report;
  const auto U = ctx.universe();
  const auto [d1, d2] = build_sides(ctx);
  const FaceSet D1 = FaceSet::of_complex(U, d1);
  const FaceSet D2 = FaceSet::of_complex(U, d2);
  const Subfamilies s = subfamilies(ctx);

  const FaceMask int1 = D1.mask_of(ctx.internal_labels(Side::Left));
  const FaceMask int2 = D1.mask_of(ctx.internal_labels(Side::Right));
  const FaceMask edge = D1.mask_of(ctx.end_edge(Side::Left));
  const auto meets = [](FaceMask bits) { return [bits](FaceMask m) { return (m & bits) != 0; }; };
  const auto holds = [edge](FaceMask m) { return (m & edge) == edge; };

  report.expect(s.left_internal == filter(D1, meets(int1)), "Δ1,int differs from the faces of Δ1 meeting an internal f");
  report.expect(s.left_edge == filter(D1, holds), "Δ1,F differs from the faces of Δ1 containing F");
  report.expect(s.right_internal == filter(D2, meets(int2)), "Δ2,int differs from the faces of Δ2 meeting an internal g");
  report.expect(s.right_edge == filter(D2, holds), "Δ2,G differs from the faces of Δ2 containing G");

  const FaceSet T1 = D1 - (s.left_internal | s.left_edge);
  const FaceSet T2 = D2 - (s.right_internal | s.right_edge);
  report.expect(T1 == tilde_faces(ctx, d1, Side::Left), "Δ1 minus its subfamilies is not the filtered tilde complex");
  report.expect(T2 == tilde_faces(ctx, d2, Side::Right), "Δ2 minus its subfamilies is not the filtered tilde complex");
  report.expect(T1.is_complex(), "tilde Δ1 is not a complex");
  report.expect(T1 == T2, "tilde Δ1 != tilde Δ2");

  const FaceSet added2 = s.right_internal | s.right_edge;
  report.expect((T1 & added2).empty(), "tilde Δ1 meets Δ2,int ∪ Δ2,G");
  report.expect(D2 == (T1 | added2), "Δ2 != tilde Δ1 ⊔ (Δ2,int ∪ Δ2,G)");
  report.expect((D1 | added2) == (D2 | s.left_internal | s.left_edge),
                "Δ1 ∪ Δ2,int ∪ Δ2,G != Δ2 ∪ Δ1,int ∪ Δ1,F");

  // The outer terms agree with the middle ones exactly when no face holds
  // the end edge together with an internal window vertex.
  const FaceSet via1 = (D1 - s.left_edge) | s.right_internal;
  const FaceSet via2 = (D2 - s.right_edge) | s.left_internal;
  const FaceSet middle1 = T1 | s.left_internal | s.right_internal;
  const FaceSet middle2 = T2 | s.left_internal | s.right_internal;
  const bool clean1 = (s.left_internal & s.left_edge).empty();
  const bool clean2 = (s.right_internal & s.right_edge).empty();
  report.expect(middle1 == middle2, "tilde Δ1 ∪ Δ1,int ∪ Δ2,int != tilde Δ2 ∪ Δ1,int ∪ Δ2,int");
  report.expect((via1 == middle1) == clean1, "(Δ1 \\ Δ1,F) ∪ Δ2,int vs tilde Δ1 ∪ Δ1,int ∪ Δ2,int");
  report.expect((via2 == middle2) == clean2, "(Δ2 \\ Δ2,G) ∪ Δ1,int vs tilde Δ2 ∪ Δ1,int ∪ Δ2,int");
  return report;
}

CheckReport verify_link_decomposition(const BraidContext& ctx) {
  CheckReport report;
  const auto U = ctx.universe();
  const auto [d1, d2] = build_sides(ctx);
  for (Side side : {Side::Left, Side::Right}) {
    const LabeledComplex& delta = side == Side::Left ? d1 : d2;
    const auto links = pair_links(ctx, side);
    for (int l = 2; l < ctx.m(); ++l) {
      const VertexLabel v = ctx.window_label(side, l);
      const FaceSet lhs = delta.has_vertex(v) ? FaceSet::of_complex(U, link(delta, {v})) : FaceSet(U);
      const FaceSet rhs = cone(U, links[static_cast<std::size_t>(l - 1)], ctx.window_label(side, l - 1)) |
                          cone(U, links[static_cast<std::size_t>(l)], ctx.window_label(side, l + 1));
      report.expect(lhs == rhs, "Lk(" + v.str() + ") in " + case_word(side) + " is not the union of its two cones");
    }
  }
  return report;
}

namespace {

void require_A3B3(const BraidContext& ctx) {
  if (ctx.m() <= 3 || !condition(ctx, Side::Left, 3) || !condition(ctx, Side::Right, 3))
    throw PreconditionError("needs m > 3 and conditions (A3), (B3)");
}

}  // namespace

bool check_A3B3_edges(const BraidContext& ctx) {
  require_A3B3(ctx);
  const auto [d1, d2] = build_sides(ctx);
  const int m = ctx.m();
  for (Side side : {Side::Left, Side::Right}) {
    const LabeledComplex& delta = side == Side::Left ? d1 : d2;
    for (int k = 2; k < m; ++k)
      for (int l = 1; l <= m; ++l) {
        if (l == k || l == k - 1 || l == k + 1) continue;
        if (delta.contains(make_label_set({ctx.window_label(side, k), ctx.window_label(side, l)}))) return false;
      }
  }
  return true;
}

bool check_link_unions_disjoint(const BraidContext& ctx) {
  require_A3B3(ctx);
  const auto U = ctx.universe();
  for (Side side : {Side::Left, Side::Right}) {
    const auto links = pair_links(ctx, side);
    for (int l = 2; l < ctx.m(); ++l) {
      const VertexLabel lo = ctx.window_label(side, l - 1);
      const VertexLabel hi = ctx.window_label(side, l + 1);
      const FaceSet a = cone(U, links[static_cast<std::size_t>(l - 1)], lo);
      const FaceSet b = cone(U, links[static_cast<std::size_t>(l)], hi);
      const FaceMask ends = a.mask_of(make_label_set({lo, hi}));
      const FaceSet both = a & b;
      for (FaceMask f : both.masks())
        if (f & ends) return false;
    }
  }
  return true;
}

std::string to_string(BraidCase c) {
  switch (c) {
    case BraidCase::Unsupported: return "unsupported";
    case BraidCase::Isomorphic: return "isomorphic";
    case BraidCase::LeftIsSubdivisionOfRight: return "left-subdivides-right";
    case BraidCase::RightIsSubdivisionOfLeft: return "right-subdivides-left";
    case BraidCase::CommonRefinement: return "common-refinement";
  }
  return "?";
}

PolynomialDelta polynomial_delta(const BraidContext& ctx) {
  const int m = ctx.m();
  if (m > 3 && !(condition(ctx, Side::Left, 3) && condition(ctx, Side::Right, 3)))
    throw PreconditionError("needs m <= 3 or conditions (A3), (B3)");
  const auto [d1, d2] = build_sides(ctx);
  const auto& sys = *ctx.system;
  const LabeledComplex short1 = build(SubwordDescriptor::plain(sys, ctx.assembled(Side::Left, 2), ctx.pi));
  const LabeledComplex short2 = build(SubwordDescriptor::plain(sys, ctx.assembled(Side::Right, 2), ctx.pi));

  PolynomialDelta out;
  out.h_lhs = h_polynomial(d2) - h_polynomial(d1);
  out.h_rhs = (h_polynomial(short2) - h_polynomial(short1)).times_alpha_t() * (m - 2);
  out.h_identity = out.h_lhs == out.h_rhs;

  if (is_spherical(ctx.descriptor(Side::Left)) && is_spherical(ctx.descriptor(Side::Right))) {
    out.gamma_lhs = gamma(d2) - gamma(d1);
    try {
      out.gamma_rhs = (gamma(short2) - gamma(short1)).times_tau() * (m - 2);
    } catch (const PreconditionError&) {
      out.gamma_rhs = gamma_of(out.h_rhs);
    }
    out.gamma_identity = *out.gamma_lhs == *out.gamma_rhs;
  }
  return out;
}

bool CaseReport::verified() const {
  if (kind == BraidCase::Unsupported || !witness_verified || !decomposition.ok) return false;
  if (delta && !delta->h_identity) return false;
  if (delta && delta->gamma_lhs && !delta->gamma_identity) return false;
  return true;
}

namespace {

VertexMap identity_on(const LabeledComplex& x) {
  VertexMap out;
  for (const auto& v : x.vertices()) out.emplace(v, v);
  return out;
}

// Isomorphism x -> y fixing every Q and Q' label.
std::optional<VertexMap> outer_fixed_isomorphism(const BraidContext& ctx, const LabeledComplex& x,
                                                 const LabeledComplex& y) {
  IsoConstraints c;
  for (const auto& v : ctx.universe())
    if (v.kind == VertexLabel::Kind::QPos || v.kind == VertexLabel::Kind::QPrimePos) c.fixed.emplace(v, v);
  return find_isomorphism(x, y, c);
}

// Records the witness `finer` == `target`, falling back to an isomorphism.
void settle(CaseReport& r, const BraidContext& ctx, const LabeledComplex& finer, const LabeledComplex& target) {
  if (finer == target) {
    r.literal = true;
    r.witness_verified = true;
    r.bijection = identity_on(finer);
    return;
  }
  if (auto iso = outer_fixed_isomorphism(ctx, finer, target)) {
    r.witness_verified = true;
    r.bijection = std::move(*iso);
  }
}

std::vector<VertexLabel> fresh_run(const BraidContext& ctx, Side side) {
  // Descending from m-1, so the chain s - r_1 - ... - r_k - t follows the
  // window adjacency of `side`.
  std::vector<VertexLabel> out;
  for (int l = ctx.m() - 1; l >= 2; --l) out.push_back(ctx.window_label(side, l));
  return out;
}

}  // namespace

CaseReport classify(const BraidContext& ctx) {
  CaseReport r;
  const int m = ctx.m();
  r.m = m;
  r.A2 = condition(ctx, Side::Left, 2);
  r.B2 = condition(ctx, Side::Right, 2);
  if (m >= 3) {
    r.A3 = condition(ctx, Side::Left, 3);
    r.B3 = condition(ctx, Side::Right, 3);
  }
  auto [d1, d2] = build_sides(ctx);
  r.left = std::move(d1);
  r.right = std::move(d2);
  r.left_spherical = is_spherical(ctx.descriptor(Side::Left));
  r.right_spherical = is_spherical(ctx.descriptor(Side::Right));

  r.decomposition = verify_decomposition(ctx);
  const CheckReport links = verify_link_decomposition(ctx);
  for (const auto& f : links.failures) r.decomposition.expect(false, f);

  const bool supported = m <= 3 || (*r.A3 && *r.B3);
  if (!supported) {
    r.kind = BraidCase::Unsupported;
    r.witness = "m > 3 without (A3) and (B3)";
    return r;
  }

  const VertexLabel f1 = VertexLabel::f(1);
  const VertexLabel fm = VertexLabel::f(m);
  try {
    if (m == 2 || (r.A2 && r.B2)) {
      r.kind = BraidCase::Isomorphic;
      r.witness = "Δ1 = Δ2";
      settle(r, ctx, r.left, r.right);
    } else if (!r.A2 && r.B2) {
      r.kind = BraidCase::LeftIsSubdivisionOfRight;
      r.fresh = fresh_run(ctx, Side::Left);
      r.witness = "Δ1 = Sub(Δ2, {" + fm.str() + "," + f1.str() + "}, " + std::to_string(m - 2) + ")";
      settle(r, ctx, r.left, k_subdivide(r.right, fm, f1, r.fresh));
    } else if (r.A2 && !r.B2) {
      r.kind = BraidCase::RightIsSubdivisionOfLeft;
      r.fresh = fresh_run(ctx, Side::Right);
      r.witness = "Δ2 = Sub(Δ1, {" + f1.str() + "," + fm.str() + "}, " + std::to_string(m - 2) + ")";
      settle(r, ctx, r.right, k_subdivide(r.left, f1, fm, r.fresh));
    } else {
      r.kind = BraidCase::CommonRefinement;
      r.witness = "Sub(Δ1, F, " + std::to_string(m - 2) + ") = Sub(Δ2, G, " + std::to_string(m - 2) + ")";
      r.fresh = fresh_run(ctx, Side::Right);
      r.common = k_subdivide(r.left, f1, fm, r.fresh);
      settle(r, ctx, *r.common, k_subdivide(r.right, fm, f1, fresh_run(ctx, Side::Left)));
    }
  } catch (const PreconditionError& e) {
    r.witness_verified = false;
    r.witness += std::string(" (") + e.what() + ")";
  }
  r.delta = polynomial_delta(ctx);
  return r;
}

std::vector<SequenceStep> apply_sequence(const CoxeterSystem& sys, const Word& start, const GroupElement& pi,
                                         const std::vector<std::size_t>& positions) {
  std::vector<SequenceStep> out;
  Word current = start;
  for (std::size_t pos : positions) {
    const BraidContext ctx = BraidContext::at(sys, current, pos, pi);
    SequenceStep step;
    step.before = current;
    step.after = apply_braid_move(sys, current, pos, ctx.i, ctx.j);
    step.pos = pos;
    step.report = classify(ctx);
    current = step.after;
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace braidcx
