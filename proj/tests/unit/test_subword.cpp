#include <gtest/gtest.h>

#include <random>

#include "braidcx/subword.hpp"
#include "oracle.hpp"

using namespace braidcx;

namespace {

CoxeterSystem make(std::string_view family, int param) { return CoxeterSystem(CoxeterMatrix::named(family, param)); }

std::set<std::uint64_t> facet_position_masks(const LabeledComplex& x) {
  std::set<std::uint64_t> out;
  for (const auto& f : x.facets()) {
    std::uint64_t m = 0;
    for (const auto& l : f) m |= std::uint64_t{1} << (l.index - 1);
    out.insert(m);
  }
  return out;
}

LabelSet positions(std::initializer_list<int> ks) {
  std::vector<VertexLabel> out;
  for (int k : ks) out.push_back(VertexLabel::q(k));
  return make_label_set(out);
}

Word random_word(std::mt19937_64& rng, int rank, std::size_t len) {
  std::uniform_int_distribution<int> d(1, rank);
  std::vector<int> w(len);
  for (auto& x : w) x = d(rng);
  return Word(w);
}

}  // namespace

TEST(Build, ClusterPentagon) {
  const CoxeterSystem a2 = make("A", 2);
  const auto d = SubwordDescriptor::plain(a2, Word{1, 2, 1, 2, 1}, longest_element(a2));
  const auto x = build(d);
  EXPECT_EQ(f_vector(x), (std::vector<std::int64_t>{5, 5}));
  EXPECT_EQ(h_vector(x), (std::vector<std::int64_t>{1, 3, 1}));
  EXPECT_EQ(gamma(x).coefficients(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_TRUE(is_spherical(d));
  EXPECT_TRUE(is_flag(x));
  for (int k = 1; k <= 5; ++k) EXPECT_TRUE(is_face(d, {k}));
}

TEST(Build, DuplicatedWordSquare) {
  const CoxeterSystem a2 = make("A", 2);
  const auto d = SubwordDescriptor::plain(a2, Word{1, 1, 2, 2, 1}, longest_element(a2));
  const auto x = build(d);
  EXPECT_EQ(facet_position_masks(x), (std::set<std::uint64_t>{0b1010, 0b1001, 0b0110, 0b0101}));
  EXPECT_FALSE(x.has_vertex(VertexLabel::q(5)));
  EXPECT_FALSE(x.contains(positions({1, 2})));
  EXPECT_FALSE(x.contains(positions({3, 4})));
  EXPECT_FALSE(is_face(d, {1, 2}));
  EXPECT_TRUE(is_face(d, {}));
}

TEST(Build, IdentityGivesFullSimplexAndReducedWordGivesEmptyFace) {
  const CoxeterSystem a3 = make("A", 3);
  const auto full = build(SubwordDescriptor::plain(a3, Word{1, 2, 1, 3}, a3.identity()));
  EXPECT_EQ(full.facets().size(), 1u);
  EXPECT_EQ(full.vertices().size(), 4u);
  const auto d = SubwordDescriptor::plain(a3, Word{1, 2, 1}, element_of(a3, Word{1, 2, 1}));
  EXPECT_EQ(build(d), LabeledComplex::empty_face_only());
  EXPECT_TRUE(is_spherical(d));
}

TEST(Build, VoidWhenNoReducedExpression) {
  const CoxeterSystem a2 = make("A", 2);
  const auto d = SubwordDescriptor::plain(a2, Word{1, 2}, longest_element(a2));
  EXPECT_TRUE(build(d).is_void());
  EXPECT_FALSE(is_spherical(d));
  EXPECT_FALSE(is_face(d, {}));
}

TEST(Build, AgreesWithExhaustiveOracle) {
  std::mt19937_64 rng(31);
  struct G {
    CoxeterSystem sys;
    oracle::PermGroup perm;
  };
  std::vector<G> groups{{make("A", 3), oracle::type_A(3)}, {make("B", 3), oracle::type_B(3)}, {make("I2", 5), oracle::dihedral(5)}};
  for (auto& [sys, perm] : groups)
    for (int trial = 0; trial < 40; ++trial) {
      const Word q = random_word(rng, sys.rank(), std::uniform_int_distribution<std::size_t>(1, 10)(rng));
      const Word piw = random_word(rng, sys.rank(), std::uniform_int_distribution<std::size_t>(0, 5)(rng));
      const auto d = SubwordDescriptor::plain(sys, q, element_of(sys, piw));
      const auto x = build(d);
      const auto expected = oracle::subword_facets(perm, q.letters(), perm.product(piw.letters()));
      EXPECT_EQ(x.is_void(), expected.empty());
      if (!x.is_void()) EXPECT_EQ(facet_position_masks(x), expected) << q.str() << " / " << piw.str();
      EXPECT_EQ(is_spherical(d), oracle::demazure(perm, q.letters()) == perm.product(piw.letters()));
    }
}

TEST(Build, PureOfExpectedDimensionAndDehnSommerville) {
  std::mt19937_64 rng(37);
  const CoxeterSystem h3 = make("H", 3);
  int spherical = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Word q = random_word(rng, 3, std::uniform_int_distribution<std::size_t>(3, 11)(rng));
    const GroupElement pi = trial % 2 ? element_of(h3, random_word(rng, 3, 3)) : demazure_product(h3, q);
    const auto d = SubwordDescriptor::plain(h3, q, pi);
    const auto x = build(d);
    if (x.is_void()) continue;
    EXPECT_TRUE(x.is_pure());
    EXPECT_EQ(x.dimension(), static_cast<int>(q.size()) - length(h3, pi) - 1);
    if (is_spherical(d)) {
      ++spherical;
      EXPECT_TRUE(h_polynomial(x).is_palindromic()) << q.str();
    }
  }
  EXPECT_GT(spherical, 0);
}

TEST(LinkLemma, RandomFaces) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int trial = 0; checked < 100 && trial < 1000; ++trial) {
    const CoxeterSystem sys = trial % 2 ? make("A", 3) : make("B", 3);
    const Word q = random_word(rng, 3, std::uniform_int_distribution<std::size_t>(3, 9)(rng));
    const GroupElement pi = element_of(sys, random_word(rng, 3, 3));
    const auto d = SubwordDescriptor::plain(sys, q, pi);
    const auto x = build(d);
    if (x.is_void()) continue;
    const auto faces = x.all_face_masks();
    const LabelSet f = x.labels_of(faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)]);
    std::vector<int> pos;
    for (const auto& l : f) pos.push_back(l.index);
    EXPECT_TRUE(link_oracle_check(d, pos)) << q.str();
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(LinkLemma, PentagonVertexAndErrors) {
  const CoxeterSystem a2 = make("A", 2);
  const auto d = SubwordDescriptor::plain(a2, Word{1, 2, 1, 2, 1}, longest_element(a2));
  EXPECT_TRUE(link_oracle_check(d, {}));
  EXPECT_TRUE(link_oracle_check(d, {1}));
  EXPECT_EQ(f_vector(build(d.without_positions({1}))), (std::vector<std::int64_t>{2}));
  EXPECT_THROW(link_oracle_check(d, {1, 3}), PreconditionError);
}

TEST(Build, MultiClusterIsSpherical) {
  const CoxeterSystem a2 = make("A", 2);
  const Word c{1, 2};
  const Word q = c + c + c_sorting_word(a2, c, longest_element(a2));
  const auto d = SubwordDescriptor::plain(a2, q, longest_element(a2));
  EXPECT_TRUE(is_spherical(d));
  EXPECT_TRUE(h_polynomial(build(d)).is_palindromic());
}

TEST(Descriptor, LabelsAndValidation) {
  const CoxeterSystem a2 = make("A", 2);
  EXPECT_THROW(SubwordDescriptor::labeled(a2, Word{1, 2}, {VertexLabel::q(1), VertexLabel::q(1)}, a2.identity()),
               InputError);
  EXPECT_THROW(SubwordDescriptor::labeled(a2, Word{1, 2}, {VertexLabel::q(1)}, a2.identity()), InputError);
  const auto d = SubwordDescriptor::labeled(a2, Word{1, 2, 1}, {VertexLabel::q(1), VertexLabel::f(1), VertexLabel::q_prime(1)},
                                            a2.identity());
  const auto shorter = d.without_labels({VertexLabel::f(1)});
  EXPECT_EQ(shorter.word, (Word{1, 1}));
  EXPECT_EQ(shorter.labels, (std::vector<VertexLabel>{VertexLabel::q(1), VertexLabel::q_prime(1)}));
  EXPECT_EQ(d.positions_of({VertexLabel::q_prime(1)}), (std::vector<int>{3}));
}
