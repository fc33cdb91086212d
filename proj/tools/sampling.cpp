#include "sampling.hpp"

namespace braidcx::tool {

Word random_word(const CoxeterSystem& sys, std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> letter(1, sys.rank());
  std::vector<int> out(length);
  for (auto& x : out) x = letter(rng);
  return Word(std::move(out));
}

BraidContext random_context(const CoxeterSystem& sys, std::mt19937_64& rng, std::size_t max_outer) {
  std::uniform_int_distribution<int> letter(1, sys.rank());
  int i = letter(rng), j = letter(rng);
  while (j == i) j = letter(rng);
  const auto outer = std::uniform_int_distribution<std::size_t>(0, max_outer)(rng);
  const auto left = std::uniform_int_distribution<std::size_t>(0, outer)(rng);
  const Word prefix = random_word(sys, rng, left);
  const Word suffix = random_word(sys, rng, outer - left);

  GroupElement pi;
  if (std::uniform_int_distribution<int>(0, 4)(rng) > 0) {
    const Word full = prefix + alternating_word(i, j, static_cast<std::size_t>(sys.m(i, j))) + suffix;
    std::bernoulli_distribution keep(0.5);
    std::vector<int> sub;
    for (int x : full)
      if (keep(rng)) sub.push_back(x);
    pi = element_of(sys, Word(std::move(sub)));
  } else {
    pi = element_of(sys, random_word(sys, rng, std::uniform_int_distribution<std::size_t>(0, 4)(rng)));
  }
  return BraidContext::make(sys, prefix, suffix, i, j, pi);
}

}  // namespace braidcx::tool
