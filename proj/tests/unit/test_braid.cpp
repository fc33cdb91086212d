#include <gtest/gtest.h>

#include <random>

#include "braidcx/braid.hpp"
#include "sampling.hpp"

using namespace braidcx;

namespace {

CoxeterSystem make(std::string_view family, int param) { return CoxeterSystem(CoxeterMatrix::named(family, param)); }

BraidContext i2_context(const CoxeterSystem& sys) {
  return BraidContext::make(sys, Word{1, 2}, Word{}, 1, 2, longest_element(sys));
}

FaceSet faces(const BraidContext& ctx, const LabeledComplex& x) { return FaceSet::of_complex(ctx.universe(), x); }

std::vector<BraidContext> random_contexts(std::string_view family, int param, int count, std::uint64_t seed) {
  static std::vector<std::unique_ptr<CoxeterSystem>> keep;
  keep.push_back(std::make_unique<CoxeterSystem>(make(family, param)));
  std::mt19937_64 rng(seed);
  std::vector<BraidContext> out;
  for (int k = 0; k < count; ++k) out.push_back(tool::random_context(*keep.back(), rng, 5));
  return out;
}

}  // namespace

TEST(Window, Words) {
  EXPECT_EQ(window_word(1, 2, 5, 0), (Word{1, 2, 1, 2, 1}));
  EXPECT_EQ(window_word(2, 1, 4, 1), (Word{2, 1, 2}));
  EXPECT_EQ(window_word(1, 2, 3, 3), Word{});
  EXPECT_THROW(window_word(1, 2, 3, 4), InputError);
}

TEST(Window, BothWindowsHaveTheSameProduct) {
  for (int m = 2; m <= 7; ++m) {
    const CoxeterSystem sys = make("I2", m);
    EXPECT_EQ(element_of(sys, window_word(1, 2, m, 0)), element_of(sys, window_word(2, 1, m, 0)));
    EXPECT_EQ(element_of(sys, window_word(1, 2, m, 0)), longest_element(sys));
  }
}

TEST(Context, AtAndMirror) {
  const CoxeterSystem a3 = make("A", 3);
  const auto ctx = BraidContext::at(a3, Word{3, 1, 2, 1, 3}, 2, longest_element(a3));
  EXPECT_EQ(ctx.prefix, Word{3});
  EXPECT_EQ(ctx.suffix, Word{3});
  EXPECT_EQ(ctx.i, 1);
  EXPECT_EQ(ctx.j, 2);
  EXPECT_EQ(ctx.assembled(Side::Right, 0), (Word{3, 2, 1, 2, 3}));
  EXPECT_EQ(ctx.assembled(Side::Left, 2), (Word{3, 1, 3}));
  const auto back = ctx.mirrored();
  EXPECT_EQ(back.i, 2);
  EXPECT_EQ(back.assembled(Side::Left, 0), ctx.assembled(Side::Right, 0));
  EXPECT_THROW(BraidContext::at(a3, Word{3, 1, 2, 1, 3}, 3, longest_element(a3)), InputError);
  EXPECT_EQ(ctx.window_label(Side::Right, 1), VertexLabel::f(3));
  EXPECT_EQ(ctx.window_label(Side::Right, 3), VertexLabel::f(1));
  EXPECT_EQ(ctx.end_edge(Side::Left), ctx.end_edge(Side::Right));
  EXPECT_EQ(ctx.universe().size(), 2u + 3u + 1u);
}

TEST(Conditions, MonotoneInK) {
  for (const auto& ctx : random_contexts("H", 3, 60, 3))
    for (Side s : {Side::Left, Side::Right})
      for (int k = 0; k < ctx.m(); ++k)
        if (condition(ctx, s, k)) EXPECT_TRUE(condition(ctx, s, k + 1));
}

TEST(Conditions, DihedralExample) {
  for (int m = 3; m <= 7; ++m) {
    const CoxeterSystem sys = make("I2", m);
    const auto ctx = i2_context(sys);
    EXPECT_FALSE(condition(ctx, Side::Left, 2)) << m;
    EXPECT_TRUE(condition(ctx, Side::Right, 2)) << m;
  }
}

TEST(Conditions, EndEdgeCharacterization) {
  auto check = [](const BraidContext& ctx) {
    const auto sides = build_sides(ctx);
    const LabelSet edge = ctx.end_edge(Side::Left);
    EXPECT_EQ(condition(ctx, Side::Right, 2), !sides.left.contains(edge));
    EXPECT_EQ(condition(ctx, Side::Left, 2), !sides.right.contains(edge));
  };
  for (const auto& ctx : random_contexts("A", 3, 80, 5)) check(ctx);
  for (const auto& ctx : random_contexts("B", 3, 80, 6)) check(ctx);
  const CoxeterSystem i25 = make("I2", 5);
  check(i2_context(i25));
}

TEST(Conditions, LiteralReadingFailsOnDihedralExample) {
  const CoxeterSystem sys = make("I2", 5);
  const auto ctx = i2_context(sys);
  const auto sides = build_sides(ctx);
  const bool F_not_in_left = !sides.left.contains(ctx.end_edge(Side::Left));
  EXPECT_NE(condition(ctx, Side::Left, 2), F_not_in_left);
}

TEST(Subfamilies, EmptyEdgeFamilyUnderB2AndCommutations) {
  const CoxeterSystem sys = make("I2", 5);
  const auto ctx = i2_context(sys);
  const auto s = subfamilies(ctx);
  EXPECT_TRUE(s.left_edge.empty());
  EXPECT_FALSE(s.right_edge.empty());
  EXPECT_FALSE(s.left_internal.empty());

  const CoxeterSystem a3 = make("A", 3);
  const auto comm = BraidContext::make(a3, Word{2}, Word{2}, 1, 3, element_of(a3, Word{2, 1, 3, 2}));
  const auto c = subfamilies(comm);
  EXPECT_TRUE(c.left_internal.empty());
  EXPECT_TRUE(c.right_internal.empty());
}

TEST(Subfamilies, TildeAvoidsWindowFaces) {
  for (const auto& ctx : random_contexts("A", 3, 40, 8))
    for (Side side : {Side::Left, Side::Right}) {
      const auto t = tilde(ctx, side);
      if (t.is_void()) continue;
      for (const auto& f : t.all_faces()) {
        EXPECT_FALSE(std::includes(f.begin(), f.end(), ctx.end_edge(side).begin(), ctx.end_edge(side).end()));
        for (const auto& l : ctx.internal_labels(side)) EXPECT_FALSE(std::binary_search(f.begin(), f.end(), l));
      }
    }
}

TEST(Decomposition, Dihedral) {
  for (int m = 3; m <= 6; ++m) {
    const CoxeterSystem sys = make("I2", m);
    const auto ctx = i2_context(sys);
    const auto r = verify_decomposition(ctx);
    EXPECT_TRUE(r.ok) << m << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_TRUE(verify_link_decomposition(ctx).ok) << m;
  }
}

TEST(Decomposition, RandomContexts) {
  for (auto [fam, p, seed] : {std::tuple{"A", 3, 11}, {"B", 3, 12}, {"H", 3, 13}, {"A", 4, 14}, {"I2", 7, 15}})
    for (const auto& ctx : random_contexts(fam, p, 40, seed)) {
      const auto r = verify_decomposition(ctx);
      EXPECT_TRUE(r.ok) << fam << p << " " << ctx.assembled(Side::Left, 0).str() << ": "
                        << (r.failures.empty() ? "" : r.failures.front());
      EXPECT_TRUE(verify_link_decomposition(ctx).ok);
    }
}

TEST(Decomposition, PrintedSecondIdentityCounterexample) {
  const CoxeterSystem a3 = make("A", 3);
  const auto ctx = BraidContext::make(a3, Word{}, Word{1}, 3, 2, a3.identity());
  const auto sides = build_sides(ctx);
  EXPECT_EQ(sides.left.facets().size(), 1u);
  const auto s = subfamilies(ctx);
  EXPECT_FALSE((s.left_internal & s.left_edge).empty());
  const FaceSet middle = faces(ctx, tilde(ctx, Side::Left)) | s.left_internal | s.right_internal;
  const FaceSet printed = (faces(ctx, sides.left) - s.left_edge) | s.right_internal;
  EXPECT_NE(printed, middle);
  EXPECT_TRUE(verify_decomposition(ctx).ok);
}

TEST(A3B3, EdgesAndDisjointUnions) {
  const CoxeterSystem sys = make("I2", 5);
  const auto ctx = BraidContext::make(sys, Word{1, 2}, Word{}, 1, 2, longest_element(sys));
  ASSERT_TRUE(condition(ctx, Side::Left, 3) && condition(ctx, Side::Right, 3));
  EXPECT_TRUE(check_A3B3_edges(ctx));
  EXPECT_TRUE(check_link_unions_disjoint(ctx));

  int checked = 0;
  for (auto [fam, p, seed] : {std::tuple{"H", 3, 21}, {"I2", 5, 22}, {"I2", 6, 23}, {"B", 3, 24}})
    for (const auto& c : random_contexts(fam, p, 80, seed)) {
      if (c.m() <= 3 || !condition(c, Side::Left, 3) || !condition(c, Side::Right, 3)) continue;
      EXPECT_TRUE(check_A3B3_edges(c));
      EXPECT_TRUE(check_link_unions_disjoint(c));
      ++checked;
    }
  EXPECT_GT(checked, 0);
}

TEST(A3B3, PreconditionEnforced) {
  const CoxeterSystem sys = make("I2", 5);
  const auto b3_fails = BraidContext::make(sys, Word{1, 2, 1}, Word{}, 1, 2, longest_element(sys));
  ASSERT_FALSE(condition(b3_fails, Side::Right, 3));
  EXPECT_THROW(check_A3B3_edges(b3_fails), PreconditionError);
  const CoxeterSystem a3 = make("A", 3);
  const auto ctx = BraidContext::make(a3, Word{}, Word{}, 1, 2, element_of(a3, Word{1, 2, 1}));
  EXPECT_THROW(check_link_unions_disjoint(ctx), PreconditionError);
}

TEST(Classify, DihedralIsLeftSubdivision) {
  for (int m = 3; m <= 7; ++m) {
    const CoxeterSystem sys = make("I2", m);
    const auto r = classify(i2_context(sys));
    EXPECT_EQ(r.kind, BraidCase::LeftIsSubdivisionOfRight) << m;
    EXPECT_TRUE(r.verified()) << m;
    EXPECT_EQ(f_vector(r.left), (std::vector<std::int64_t>{m + 2, m + 2}));
    EXPECT_EQ(f_vector(r.right), (std::vector<std::int64_t>{4, 4}));
    EXPECT_EQ(gamma(r.left)[1] - gamma(r.right)[1], m - 2);
  }
}

TEST(Classify, CommutationIsIsomorphic) {
  const CoxeterSystem a3 = make("A", 3);
  for (const auto& pi : {a3.identity(), longest_element(a3), element_of(a3, Word{1, 2})}) {
    const auto r = classify(BraidContext::make(a3, Word{3, 2}, Word{2}, 1, 3, pi));
    EXPECT_EQ(r.kind, BraidCase::Isomorphic);
    EXPECT_TRUE(r.verified());
  }
}

TEST(Classify, IdentityTargetWithTriangleWindowIsCommonRefinement) {
  const CoxeterSystem a3 = make("A", 3);
  const auto r = classify(BraidContext::make(a3, Word{3}, Word{2}, 1, 2, a3.identity()));
  EXPECT_EQ(r.kind, BraidCase::CommonRefinement);
  EXPECT_TRUE(r.verified());
  EXPECT_EQ(f_vector(r.left), f_vector(r.right));
  ASSERT_TRUE(r.common);
  EXPECT_EQ(r.common->vertices().size(), r.left.vertices().size() + 1);
}

TEST(Classify, SimplyLacedAlwaysSupported) {
  for (auto [fam, p, seed] : {std::tuple{"A", 3, 31}, {"A", 4, 32}, {"D", 4, 33}})
    for (const auto& ctx : random_contexts(fam, p, 60, seed)) {
      const auto r = classify(ctx);
      EXPECT_NE(r.kind, BraidCase::Unsupported);
      EXPECT_TRUE(r.verified()) << fam << p << " " << ctx.assembled(Side::Left, 0).str();
    }
}

TEST(Classify, FlagnessTransfersToSubdivisions) {
  for (auto [fam, p, seed] : {std::tuple{"A", 3, 41}, {"B", 3, 42}, {"H", 3, 43}})
    for (const auto& ctx : random_contexts(fam, p, 60, seed)) {
      const auto r = classify(ctx);
      if (!r.verified() || r.left.is_void() || r.right.is_void()) continue;
      switch (r.kind) {
        case BraidCase::Isomorphic:
          EXPECT_EQ(is_flag(r.left), is_flag(r.right));
          break;
        case BraidCase::LeftIsSubdivisionOfRight:
          if (is_flag(r.right)) EXPECT_TRUE(is_flag(r.left));
          break;
        case BraidCase::RightIsSubdivisionOfLeft:
          if (is_flag(r.left)) EXPECT_TRUE(is_flag(r.right));
          break;
        case BraidCase::CommonRefinement:
          if (is_flag(r.left) && is_flag(r.right)) EXPECT_TRUE(is_flag(*r.common));
          break;
        default:
          break;
      }
    }
}

TEST(Classify, DeltaMatchesSubdivisionCount) {
  for (auto [fam, p, seed] : {std::tuple{"A", 3, 51}, {"H", 3, 52}, {"I2", 5, 53}})
    for (const auto& ctx : random_contexts(fam, p, 60, seed)) {
      const auto r = classify(ctx);
      if (!r.delta) continue;
      EXPECT_TRUE(r.delta->h_identity);
      EXPECT_EQ(r.delta->h_lhs, h_polynomial(r.right) - h_polynomial(r.left));
      if (r.kind == BraidCase::LeftIsSubdivisionOfRight)
        EXPECT_EQ(f_vector(r.left)[0] - f_vector(r.right)[0], r.m - 2);
      if (r.kind == BraidCase::RightIsSubdivisionOfLeft)
        EXPECT_EQ(f_vector(r.right)[0] - f_vector(r.left)[0], r.m - 2);
      if (r.delta->gamma_lhs) EXPECT_TRUE(r.delta->gamma_identity);
    }
}

TEST(Classify, PolynomialDeltaPrecondition) {
  const CoxeterSystem sys = make("I2", 5);
  const auto ctx = BraidContext::make(sys, Word{}, Word{}, 1, 2, element_of(sys, Word{1}));
  if (!(condition(ctx, Side::Left, 3) && condition(ctx, Side::Right, 3))) {
    EXPECT_THROW(polynomial_delta(ctx), PreconditionError);
    EXPECT_EQ(classify(ctx).kind, BraidCase::Unsupported);
  }
}

TEST(Sequence, A3ChainAndReverse) {
  const CoxeterSystem a3 = make("A", 3);
  const GroupElement w0 = longest_element(a3);
  const Word start{1, 2, 3, 3, 2, 1, 3, 2, 3};
  const std::vector<std::size_t> moves{6, 4, 6, 5, 8, 6, 4, 6};
  const auto steps = apply_sequence(a3, start, w0, moves);
  ASSERT_EQ(steps.size(), 8u);
  const std::vector<BraidCase> expected{BraidCase::Isomorphic, BraidCase::RightIsSubdivisionOfLeft,
                                        BraidCase::Isomorphic, BraidCase::Isomorphic,
                                        BraidCase::Isomorphic, BraidCase::RightIsSubdivisionOfLeft,
                                        BraidCase::RightIsSubdivisionOfLeft, BraidCase::Isomorphic};
  for (std::size_t k = 0; k < steps.size(); ++k) {
    EXPECT_EQ(steps[k].report.kind, expected[k]) << k;
    EXPECT_TRUE(steps[k].report.verified()) << k;
  }
  EXPECT_EQ(steps.back().after, (Word{1, 2, 3, 1, 2, 3, 1, 2, 1}));
  EXPECT_EQ(gamma(steps.front().report.left)[1], 0);
  EXPECT_EQ(gamma(steps.back().report.right)[1], 3);

  std::vector<std::size_t> back(moves.rbegin(), moves.rend());
  const auto rev = apply_sequence(a3, steps.back().after, w0, back);
  for (std::size_t k = 0; k < rev.size(); ++k) {
    const BraidCase fwd = expected[expected.size() - 1 - k];
    const BraidCase want = fwd == BraidCase::RightIsSubdivisionOfLeft ? BraidCase::LeftIsSubdivisionOfRight : fwd;
    EXPECT_EQ(rev[k].report.kind, want) << k;
  }
  EXPECT_EQ(rev.back().after, start);
  EXPECT_THROW(apply_sequence(a3, start, w0, {1}), InputError);
}
