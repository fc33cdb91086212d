#pragma once

#include <random>

#include "braidcx/braid.hpp"

namespace braidcx::tool {

/// Uniform random word of the given length.
Word random_word(const CoxeterSystem& sys, std::mt19937_64& rng, std::size_t length);

/// A braid context with |Q| + |Q'| <= max_outer. Most of the time π is the
/// product of a random subword of Q₁⁰, so Δ₁ is rarely VOID; otherwise it
/// is the product of a short random word.
BraidContext random_context(const CoxeterSystem& sys, std::mt19937_64& rng, std::size_t max_outer);

}  // namespace braidcx::tool
