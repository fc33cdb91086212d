#include <gtest/gtest.h>

#include <random>

#include "braidcx/coxeter.hpp"
#include "oracle.hpp"

using namespace braidcx;

namespace {

CoxeterSystem make(std::string_view family, int param) { return CoxeterSystem(CoxeterMatrix::named(family, param)); }

struct Pair {
  CoxeterSystem sys;
  oracle::PermGroup perm;
};

std::vector<Pair> oracle_pairs() {
  std::vector<Pair> out;
  out.push_back({make("A", 2), oracle::type_A(2)});
  out.push_back({make("A", 3), oracle::type_A(3)});
  out.push_back({make("B", 3), oracle::type_B(3)});
  out.push_back({make("D", 4), oracle::type_D(4)});
  out.push_back({make("I2", 5), oracle::dihedral(5)});
  out.push_back({make("I2", 6), oracle::dihedral(6)});
  return out;
}

Word random_word(std::mt19937_64& rng, int rank, std::size_t len) {
  std::uniform_int_distribution<int> d(1, rank);
  std::vector<int> w(len);
  for (auto& x : w) x = d(rng);
  return Word(w);
}

}  // namespace

TEST(CoxeterMatrix, RejectsInvalidMatrices) {
  EXPECT_THROW(CoxeterMatrix({{1, 3}, {2, 1}}), InputError);
  EXPECT_THROW(CoxeterMatrix({{2, 3}, {3, 1}}), InputError);
  EXPECT_THROW(CoxeterMatrix({{1, 1}, {1, 1}}), InputError);
  // affine A2
  EXPECT_THROW(CoxeterMatrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}), InputError);
  // H5 does not exist
  EXPECT_THROW(CoxeterMatrix::named("H", 5), InputError);
}

TEST(CoxeterMatrix, ClassifiesComponents) {
  const CoxeterMatrix m({{1, 2, 2}, {2, 1, 5}, {2, 5, 1}});
  EXPECT_EQ(m.type_name(), "A1xI2(5)");
  EXPECT_EQ(m.group_order(), 20u);
  EXPECT_FALSE(m.simply_laced());
  EXPECT_TRUE(CoxeterMatrix::named("E", 6).simply_laced());
}

TEST(CoxeterMatrix, CatalogOrders) {
  const std::vector<std::tuple<std::string, int, std::uint64_t>> cases = {
      {"A", 3, 24},   {"B", 3, 48},     {"D", 4, 192},       {"E", 6, 51840}, {"E", 7, 2903040},
      {"E", 8, 696729600}, {"F", 4, 1152}, {"H", 3, 120}, {"H", 4, 14400}, {"I2", 7, 14}};
  for (const auto& [f, p, order] : cases) EXPECT_EQ(CoxeterMatrix::named(f, p).group_order(), order) << f << p;
}

TEST(CoxeterSystem, GeneratorsAreInvolutionsWithCorrectOrders) {
  for (auto [f, p] : std::vector<std::pair<std::string, int>>{{"A", 4}, {"B", 3}, {"D", 4}, {"F", 4}, {"H", 3}, {"I2", 7}}) {
    const CoxeterSystem sys = make(f, p);
    for (int i = 1; i <= sys.rank(); ++i) {
      EXPECT_EQ(element_of(sys, Word{i, i}), sys.identity());
      for (int j = i + 1; j <= sys.rank(); ++j) {
        const auto m = static_cast<std::size_t>(sys.m(i, j));
        // (s_i s_j)^k is the identity exactly for k = m among 1..m
        for (std::size_t k = 1; k <= m; ++k) {
          const bool id = element_of(sys, alternating_word(i, j, 2 * k)) == sys.identity();
          EXPECT_EQ(id, k == m) << f << p << " " << i << "," << j << " k=" << k;
        }
      }
    }
  }
}

TEST(CoxeterSystem, EnumerationMatchesCatalogOrder) {
  for (auto [f, p] : std::vector<std::pair<std::string, int>>{{"A", 3}, {"B", 3}, {"D", 4}, {"F", 4}, {"H", 3}, {"H", 4}, {"I2", 9}}) {
    const CoxeterSystem sys = make(f, p);
    EXPECT_EQ(enumerate_elements(sys).size(), sys.coxeter_matrix().group_order()) << f << p;
  }
}

TEST(CoxeterSystem, EnumerationRespectsSizeGuard) {
  EXPECT_THROW(enumerate_elements(make("E", 7)), CapExceeded);
}

TEST(Word, ParsesAndPrints) {
  EXPECT_EQ(Word::parse("1,2,1"), (Word{1, 2, 1}));
  EXPECT_EQ(Word::parse("[1 2 1]"), (Word{1, 2, 1}));
  EXPECT_EQ(Word::parse(""), Word{});
  EXPECT_EQ(Word::parse("e"), Word{});
  EXPECT_EQ((Word{3, 1}).str(), "3,1");
  EXPECT_THROW(Word::parse("1,x"), InputError);
  EXPECT_THROW(Word::parse("0"), InputError);
}

TEST(ElementOf, Basics) {
  const CoxeterSystem a2 = make("A", 2);
  EXPECT_EQ(element_of(a2, Word{}), a2.identity());
  EXPECT_EQ(element_of(a2, Word{1, 1}), a2.identity());
  EXPECT_EQ(element_of(a2, Word{1, 2, 1}), element_of(a2, Word{2, 1, 2}));
  EXPECT_THROW(element_of(a2, Word{3}), InputError);
}

TEST(Length, AgreesWithBfsOracle) {
  std::mt19937_64 rng(11);
  for (auto& [sys, perm] : oracle_pairs()) {
    for (int trial = 0; trial < 200; ++trial) {
      const Word w = random_word(rng, sys.rank(), std::uniform_int_distribution<std::size_t>(0, 12)(rng));
      const GroupElement g = element_of(sys, w);
      const auto p = perm.product(w.letters());
      EXPECT_EQ(length(sys, g), perm.length(p)) << w.str();
      EXPECT_EQ(is_reduced(sys, w), perm.reduced(w.letters())) << w.str();
      for (int s = 1; s <= sys.rank(); ++s) {
        const bool right = perm.length(perm.times(p, s)) < perm.length(p);
        EXPECT_EQ(right_descents(sys, g).contains(s), right);
        const bool left = perm.length(perm.product([&] {
                            auto v = w.letters();
                            v.insert(v.begin(), s);
                            return v;
                          }())) < perm.length(p);
        EXPECT_EQ(left_descents(sys, g).contains(s), left);
      }
    }
  }
}

TEST(Length, ExamplesAndLongestElements) {
  const CoxeterSystem a2 = make("A", 2);
  EXPECT_EQ(length(a2, a2.identity()), 0);
  EXPECT_EQ(length(a2, element_of(a2, Word{1, 2, 1})), 3);
  EXPECT_TRUE(is_reduced(a2, Word{1, 2, 1}));
  EXPECT_FALSE(is_reduced(a2, Word{1, 1}));
  EXPECT_FALSE(is_reduced(a2, Word{1, 2, 1, 2}));
  EXPECT_EQ(right_descents(a2, longest_element(a2)), (std::set<int>{1, 2}));
  EXPECT_TRUE(right_descents(a2, a2.identity()).empty());
  EXPECT_EQ(right_descents(a2, element_of(a2, Word{1})), (std::set<int>{1}));
  EXPECT_EQ(longest_element(make("A", 1)), element_of(make("A", 1), Word{1}));
  EXPECT_EQ(longest_element(a2), element_of(a2, Word{1, 2, 1}));
  // number of reflections
  const std::vector<std::tuple<std::string, int, int>> cases = {
      {"A", 3, 6}, {"A", 5, 15}, {"B", 3, 9}, {"D", 4, 12}, {"E", 6, 36}, {"E", 8, 120},
      {"F", 4, 24}, {"H", 3, 15}, {"H", 4, 60}, {"I2", 5, 5}};
  for (const auto& [f, p, n] : cases) {
    const CoxeterSystem sys = make(f, p);
    EXPECT_EQ(length(sys, longest_element(sys)), n) << f << p;
  }
}

TEST(Length, LongestElementMatchesOracle) {
  for (auto& [sys, perm] : oracle_pairs()) {
    const Word w = reduced_word(sys, longest_element(sys));
    EXPECT_EQ(perm.product(w.letters()), perm.longest());
  }
}

TEST(Length, ChangesByOneUnderGenerators) {
  std::mt19937_64 rng(5);
  const CoxeterSystem sys = make("H", 3);
  for (int trial = 0; trial < 100; ++trial) {
    const GroupElement g = element_of(sys, random_word(rng, 3, 10));
    for (int s = 1; s <= 3; ++s) EXPECT_EQ(std::abs(length(sys, sys.times_generator(g, s)) - length(sys, g)), 1);
  }
}

TEST(Demazure, MatchesOracleAndCharacterizesReducedWords) {
  std::mt19937_64 rng(3);
  for (auto& [sys, perm] : oracle_pairs()) {
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word(rng, sys.rank(), 8);
      const GroupElement d = demazure_product(sys, w);
      EXPECT_EQ(perm.length(oracle::demazure(perm, w.letters())), length(sys, d));
      EXPECT_EQ(perm.product(reduced_word(sys, d).letters()), oracle::demazure(perm, w.letters()));
      EXPECT_EQ(length(sys, d) == static_cast<int>(w.size()), is_reduced(sys, w));
      if (is_reduced(sys, w)) EXPECT_EQ(d, element_of(sys, w));
    }
  }
  const CoxeterSystem a2 = make("A", 2);
  EXPECT_EQ(demazure_product(a2, Word{1, 1}), element_of(a2, Word{1}));
  EXPECT_EQ(demazure_product(a2, Word{1, 2, 1, 2, 1}), longest_element(a2));
}

TEST(ContainsReduced, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(17);
  for (auto& [sys, perm] : oracle_pairs()) {
    for (int trial = 0; trial < 60; ++trial) {
      const Word q = random_word(rng, sys.rank(), std::uniform_int_distribution<std::size_t>(0, 12)(rng));
      const Word piw = random_word(rng, sys.rank(), std::uniform_int_distribution<std::size_t>(0, 6)(rng));
      const GroupElement pi = element_of(sys, piw);
      const auto expected = oracle::reduced_subwords(perm, q.letters(), perm.product(piw.letters()));
      EXPECT_EQ(contains_reduced(sys, q, pi), !expected.empty()) << q.str() << " / " << piw.str();
      const auto masks = reduced_subword_masks(sys, q, pi);
      EXPECT_EQ(std::set<std::uint64_t>(masks.begin(), masks.end()), expected);
      EXPECT_EQ(masks.size(), expected.size());
    }
  }
}

TEST(ContainsReduced, Examples) {
  const CoxeterSystem a2 = make("A", 2);
  const GroupElement w0 = longest_element(a2);
  EXPECT_TRUE(contains_reduced(a2, Word{2, 2}, a2.identity()));
  EXPECT_TRUE(contains_reduced(a2, Word{1, 2, 1, 2}, w0));
  EXPECT_FALSE(contains_reduced(a2, Word{1, 1, 2}, w0));
}

TEST(NilReduce, GivesReducedWordOfSameElement) {
  const CoxeterSystem a2 = make("A", 2);
  EXPECT_EQ(nil_reduce(a2, Word{1, 1}), Word{});
  const Word r = nil_reduce(a2, Word{1, 2, 1, 2});
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(element_of(a2, r), element_of(a2, Word{1, 2, 1, 2}));
  std::mt19937_64 rng(2);
  const CoxeterSystem b3 = make("B", 3);
  for (int trial = 0; trial < 50; ++trial) {
    const Word w = random_word(rng, 3, 10);
    const Word n = nil_reduce(b3, w);
    EXPECT_TRUE(is_reduced(b3, n));
    EXPECT_EQ(element_of(b3, n), element_of(b3, w));
  }
}

TEST(BraidMove, ReplacesWindow) {
  const CoxeterSystem a2 = make("A", 2);
  EXPECT_EQ(apply_braid_move(a2, Word{1, 2, 1}, 1, 1, 2), (Word{2, 1, 2}));
  const CoxeterSystem b2 = make("B", 2);
  EXPECT_EQ(apply_braid_move(b2, Word{1, 2, 1, 2}, 1, 1, 2), (Word{2, 1, 2, 1}));
  EXPECT_THROW(apply_braid_move(a2, Word{1, 2, 2}, 1, 1, 2), InputError);
  const CoxeterSystem a3 = make("A", 3);
  EXPECT_EQ(apply_braid_move(a3, Word{2, 1, 3}, 2, 1, 3), (Word{2, 3, 1}));
}

TEST(WordProperty, MovesPreserveElement) {
  std::mt19937_64 rng(23);
  for (auto [f, p] : std::vector<std::pair<std::string, int>>{{"A", 4}, {"B", 4}, {"D", 4}, {"H", 3}, {"F", 4}}) {
    const CoxeterSystem sys = make(f, p);
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = random_word(rng, sys.rank(), std::uniform_int_distribution<std::size_t>(0, 10)(rng));
      const GroupElement g = element_of(sys, w);
      for (const auto& site : braid_sites(sys, w))
        EXPECT_EQ(element_of(sys, apply_braid_move(sys, w, site.pos, site.i, site.j)), g);
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] == w[k + 1]) EXPECT_EQ(element_of(sys, w.slice(0, k) + w.slice(k + 2, w.size() - k - 2)), g);
    }
  }
}

TEST(ReducedWords, MatchExhaustiveEnumeration) {
  for (auto& [sys, perm] : oracle_pairs()) {
    if (sys.rank() > 3) continue;
    const GroupElement w0 = longest_element(sys);
    const auto words = reduced_words(sys, w0);
    const auto expected = oracle::all_reduced_words(perm, perm.longest());
    std::set<std::vector<int>> got;
    for (const auto& w : words) got.insert(w.letters());
    EXPECT_EQ(got, expected);
  }
  const CoxeterSystem a3 = make("A", 3);
  EXPECT_EQ(reduced_words(a3, longest_element(a3)).size(), 16u);
  EXPECT_EQ(reduced_words(a3, a3.identity()), (std::set<Word>{Word{}}));
  const CoxeterSystem a2 = make("A", 2);
  EXPECT_EQ(reduced_words(a2, longest_element(a2)), (std::set<Word>{{1, 2, 1}, {2, 1, 2}}));
  EXPECT_EQ(reduced_words(make("B", 3), longest_element(make("B", 3))).size(), 42u);
  EXPECT_EQ(reduced_words(make("A", 4), longest_element(make("A", 4))).size(), 768u);
}

TEST(ReducedWords, ClosedUnderBraidMovesAndCapped) {
  const CoxeterSystem h3 = make("H", 3);
  const GroupElement w0 = longest_element(h3);
  const auto words = reduced_words(h3, w0);
  for (const auto& w : words) {
    EXPECT_EQ(w.size(), 15u);
    EXPECT_EQ(element_of(h3, w), w0);
    for (const auto& site : braid_sites(h3, w))
      EXPECT_TRUE(words.contains(apply_braid_move(h3, w, site.pos, site.i, site.j)));
  }
  EXPECT_THROW(reduced_words(h3, w0, 100), CapExceeded);
}

TEST(CSorting, Examples) {
  const CoxeterSystem a2 = make("A", 2);
  EXPECT_EQ(c_sorting_word(a2, Word{1, 2}, a2.identity()), Word{});
  EXPECT_EQ(c_sorting_word(a2, Word{1, 2}, longest_element(a2)), (Word{1, 2, 1}));
  const CoxeterSystem a3 = make("A", 3);
  EXPECT_EQ(Word({1, 2, 3}) + c_sorting_word(a3, Word{1, 2, 3}, longest_element(a3)),
            (Word{1, 2, 3, 1, 2, 3, 1, 2, 1}));
  EXPECT_THROW(c_sorting_word(a3, Word{1, 2}, a3.identity()), InputError);
}

TEST(CSorting, IsReducedAndEvaluatesCorrectly) {
  const CoxeterSystem b3 = make("B", 3);
  for (const auto& [g, w] : enumerate_elements(b3)) {
    const Word c = c_sorting_word(b3, Word{2, 1, 3}, g);
    EXPECT_TRUE(is_reduced(b3, c));
    EXPECT_EQ(element_of(b3, c), g);
  }
}
