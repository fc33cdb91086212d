#pragma once

// Subword complexes Δ(Q; π): faces are sets of positions of Q whose
// complement still contains a reduced expression of π.

#include <vector>

#include "braidcx/coxeter.hpp"
#include "braidcx/simplicial.hpp"

namespace braidcx {

/// A word Q with one vertex label per position, and the target element π.
struct SubwordDescriptor {
  const CoxeterSystem* system = nullptr;
  Word word;
  std::vector<VertexLabel> labels;
  GroupElement pi;

  /// Positions labeled q1, q2, ...
  static SubwordDescriptor plain(const CoxeterSystem& sys, Word word, GroupElement pi);
  static SubwordDescriptor labeled(const CoxeterSystem& sys, Word word, std::vector<VertexLabel> labels,
                                   GroupElement pi);

  /// The descriptor with the given 1-based positions deleted; surviving
  /// positions keep their labels.
  SubwordDescriptor without_positions(const std::vector<int>& positions) const;
  /// Same, addressing positions by label.
  SubwordDescriptor without_labels(const LabelSet& labels) const;

  /// 1-based positions carrying the given labels. Throws if one is absent.
  std::vector<int> positions_of(const LabelSet& labels) const;

  /// Checks letters, label count and label distinctness.
  void validate() const;
};

/// Position masks (bit k = position k+1) of every reduced expression of π
/// inside Q.
std::vector<FaceMask> reduced_expression_masks(const SubwordDescriptor& d);

/// The complex whose facets are complements of reduced expressions of π;
/// VOID when there are none. Positions in no facet are not vertices.
LabeledComplex build(const SubwordDescriptor& d);

/// Q with positions T removed still contains a reduced expression of π.
bool is_face(const SubwordDescriptor& d, const std::vector<int>& positions);

/// Demazure product of Q equals π.
bool is_spherical(const SubwordDescriptor& d);

/// Compares Lk(T) in build(d) with build(d without T). Throws
/// PreconditionError when T is not a face.
bool link_oracle_check(const SubwordDescriptor& d, const std::vector<int>& positions);

}  // namespace braidcx
