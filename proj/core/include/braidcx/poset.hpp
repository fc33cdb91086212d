#pragma once

// The order on reduced expressions p of π given by subdivision relations
// between the complexes Δ(Q p Q'; π).
//
// a ⪯ b when Δ(Q b Q'; π) is obtained from Δ(Q a Q'; π), up to isomorphism,
// by edge subdivisions: coarse complexes sit at the bottom. The relation is
// generated by single braid moves; isomorphic pairs make it a preorder, and
// the poset is its quotient by the induced equivalence.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidcx/braid.hpp"
#include "braidcx/coxeter.hpp"

namespace braidcx {

/// A finite relation on 0..n-1 given by its full matrix.
struct FinitePoset {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return names.size(); }
  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;
};

/// Reflexive-transitive closure of the directed graph on n nodes.
std::vector<std::vector<bool>> transitive_closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Cover pairs (a, b), a < b with nothing strictly between. Requires a
/// partial order.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FinitePoset& p);

struct BoundCertificate {
  std::size_t a = 0;
  std::size_t b = 0;
  /// Minimal upper (or maximal lower) bounds of {a, b}; empty when there
  /// is no bound at all.
  std::vector<std::size_t> extremal_bounds;
};

struct SemilatticeReport {
  bool meet = true;
  bool join = true;
  /// First pair without a meet / join, in lexicographic pair order.
  std::optional<BoundCertificate> meet_failure;
  std::optional<BoundCertificate> join_failure;
};

/// Brute-force existence of every pairwise meet and join. Throws
/// PreconditionError unless p is a partial order.
SemilatticeReport semilattice_check(const FinitePoset& p);

/// One braid move between two reduced words, classified from both ends.
struct RhoMove {
  std::size_t a = 0;  // word indices, a < b
  std::size_t b = 0;
  std::size_t pos = 0;  // 1-based position of the window inside p
  BraidCase forward = BraidCase::Unsupported;   // context read on Q a Q'
  BraidCase backward = BraidCase::Unsupported;  // context read on Q b Q'
  bool verified = false;                        // both reports verified
  bool mirror_consistent = false;               // 2 <-> 3, 1 <-> 1, 4 <-> 4
  std::string witness;
};

/// A generating edge: `finer` is obtained from `coarser` by subdivisions.
struct RhoEdge {
  std::size_t coarser = 0;
  std::size_t finer = 0;
  std::size_t move = 0;  // index into moves
  BraidCase kind = BraidCase::Unsupported;
};

struct RhoGap {
  std::size_t a = 0;
  std::size_t b = 0;
  /// "isomorphic" or "edge-subdivision": the complexes of a and b are
  /// related this way but the single-move relation does not relate them.
  std::string relation;
};

struct RhoPoset {
  Word prefix;
  Word suffix;
  std::vector<Word> words;  // sorted
  std::vector<RhoMove> moves;
  std::vector<RhoEdge> edges;
  /// Preorder on words (reflexive-transitive closure of edges).
  std::vector<std::vector<bool>> relation;
  /// Equivalence classes of the preorder, each sorted, ordered by first word.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
  /// The preorder is already antisymmetric (no isomorphic pairs).
  bool antisymmetric = false;
  /// Strict edges whose endpoints fall into one class.
  std::vector<std::size_t> antisymmetry_violations;
  /// Whether the global pairwise check ran (small instances only) and the
  /// relations it found outside the generated order.
  bool global_check = false;
  std::vector<RhoGap> gaps;

  /// The order on classes.
  FinitePoset quotient() const;
  std::size_t unverified_moves() const;
};

struct RhoOptions {
  std::size_t cap = kDefaultReducedWordCap;
  /// Run the pairwise isomorphism / single-subdivision search when there
  /// are at most this many words.
  std::size_t global_check_limit = 24;
  unsigned jobs = 1;
};

RhoPoset build_rho(const CoxeterSystem& sys, const Word& prefix, const Word& suffix, const GroupElement& pi,
                   const RhoOptions& options = {});

/// Hasse diagram of the quotient; nodes list their words, edges the braid
/// cases that generate them.
std::string export_dot(const RhoPoset& p);

}  // namespace braidcx
