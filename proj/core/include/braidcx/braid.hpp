#pragma once

// How a single braid move Q w_{i,j} Q' -> Q w_{j,i} Q' changes the subword
// complex Δ(·; π).
//
// Vertex labels: letters of Q are q1.., letters of Q' are q'1.., the window
// of the left word Q₁ = Q w_{i,j} Q' is f1..fm and the window of the right
// word Q₂ = Q w_{j,i} Q' is g1..gm, with g1 = fm and gm = f1 identified. All
// face-set identities below are literal equalities on that common vertex
// universe.

#include <optional>
#include <string>
#include <vector>

#include "braidcx/coxeter.hpp"
#include "braidcx/polynomial.hpp"
#include "braidcx/simplicial.hpp"
#include "braidcx/subword.hpp"

namespace braidcx {

/// Left is Q₁ (window starts with i), Right is Q₂ (window starts with j).
enum class Side { Left, Right };

/// w_{i,j}^k: the alternating word i j i ... of length m - k.
Word window_word(int i, int j, int m, int k);

struct BraidContext {
  const CoxeterSystem* system = nullptr;
  Word prefix;  // Q
  Word suffix;  // Q'
  int i = 0;
  int j = 0;
  GroupElement pi;

  static BraidContext make(const CoxeterSystem& sys, Word prefix, Word suffix, int i, int j, GroupElement pi);
  /// Splits `word` around the braid window starting at 1-based `pos`; i and
  /// j are read off the word. Throws InputError when there is no window.
  static BraidContext at(const CoxeterSystem& sys, const Word& word, std::size_t pos, GroupElement pi);

  int m() const { return system->m(i, j); }
  /// Q w^k Q' on the given side.
  Word assembled(Side side, int k) const;
  /// Label of the l-th window letter on a side (f_l or canonical g_l).
  VertexLabel window_label(Side side, int l) const;
  /// Internal window labels (l = 2..m-1) of a side.
  LabelSet internal_labels(Side side) const;
  /// {f_1, f_m} on the left, {g_1, g_m} on the right (the same set).
  LabelSet end_edge(Side side) const;
  /// The common vertex universe.
  std::vector<VertexLabel> universe() const;
  /// Q₁⁰ or Q₂⁰ with window labels.
  SubwordDescriptor descriptor(Side side) const;
  /// Same word with the braid move applied; its left side is our right side.
  BraidContext mirrored() const;
};

/// (A_k) on the left side, (B_k) on the right: Q_side^k contains no reduced
/// expression of π. Throws InputError unless 0 <= k <= m.
bool condition(const BraidContext& ctx, Side which, int k);

struct BraidSides {
  LabeledComplex left;   // Δ₁
  LabeledComplex right;  // Δ₂
};

BraidSides build_sides(const BraidContext& ctx);

/// Δ_{1,int}, Δ_{1,F}, Δ_{2,int}, Δ_{2,G} as face sets over universe(),
/// assembled from subword complexes of the shortened words through the
/// label re-addressing of the link lemma.
struct Subfamilies {
  FaceSet left_internal;
  FaceSet left_edge;
  FaceSet right_internal;
  FaceSet right_edge;
};

Subfamilies subfamilies(const BraidContext& ctx);

/// Faces of Δ_side avoiding the window end edge and every internal window
/// vertex.
LabeledComplex tilde(const BraidContext& ctx, Side side);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void expect(bool condition, std::string what);
};

/// Checks, as face-set equalities over the common universe:
///  - the four subfamilies against brute-force filters of Δ₁ and Δ₂;
///  - Δ̃_side = Δ_side minus its subfamilies, and that it is a complex;
///  - Δ̃₁ = Δ̃₂;
///  - Δ₂ = Δ̃₁ ⊔ (Δ_{2,int} ∪ Δ_{2,G}) with the union disjoint;
///  - Δ₁ ∪ Δ_{2,int} ∪ Δ_{2,G} = Δ₂ ∪ Δ_{1,int} ∪ Δ_{1,F};
///  - Δ̃₁ ∪ Δ_{1,int} ∪ Δ_{2,int} = Δ̃₂ ∪ Δ_{1,int} ∪ Δ_{2,int}, and that
///    (Δ₁ \ Δ_{1,F}) ∪ Δ_{2,int} equals it exactly when Δ_{1,int} and
///    Δ_{1,F} share no face (likewise on the right).
CheckReport verify_decomposition(const BraidContext& ctx);

/// For every internal l, Lk({f_l}) is the union of the cones
/// Lk({f_{l-1}, f_l}) * f_{l-1} and Lk({f_l, f_{l+1}}) * f_{l+1}, the links
/// being the shortened complexes; and the same on the right side.
CheckReport verify_link_decomposition(const BraidContext& ctx);

/// Under m > 3, (A_3) and (B_3): no edge {f_k, f_l} with f_k internal and
/// |k - l| != 1 in Δ₁, and the g-analogue in Δ₂. Throws PreconditionError
/// otherwise.
bool check_A3B3_edges(const BraidContext& ctx);

/// Under the same hypothesis, the two cones of verify_link_decomposition
/// meet only in faces avoiding both f_{l-1} and f_{l+1}.
bool check_link_unions_disjoint(const BraidContext& ctx);

enum class BraidCase {
  Unsupported = 0,
  Isomorphic = 1,
  LeftIsSubdivisionOfRight = 2,
  RightIsSubdivisionOfLeft = 3,
  CommonRefinement = 4,
};

std::string to_string(BraidCase c);

struct PolynomialDelta {
  /// H(Δ₂) - H(Δ₁)
  HPoly h_lhs;
  /// (m - 2) αt (H(Δ(Q₂²; π)) - H(Δ(Q₁²; π)))
  HPoly h_rhs;
  bool h_identity = false;
  /// Present only when Δ₁ and Δ₂ are both spherical.
  std::optional<GammaPoly> gamma_lhs;
  std::optional<GammaPoly> gamma_rhs;
  bool gamma_identity = false;
};

/// Requires m <= 3 or (A_3) and (B_3); throws PreconditionError otherwise.
PolynomialDelta polynomial_delta(const BraidContext& ctx);

struct CaseReport {
  BraidCase kind = BraidCase::Unsupported;
  int m = 0;
  bool A2 = false;
  bool B2 = false;
  std::optional<bool> A3;  // absent when m < 3
  std::optional<bool> B3;

  LabeledComplex left;
  LabeledComplex right;
  bool left_spherical = false;
  bool right_spherical = false;

  /// The common refinement in case 4.
  std::optional<LabeledComplex> common;
  /// Labels introduced by the subdivision witness, in subdivision order.
  std::vector<VertexLabel> fresh;
  /// Witness vertex bijection (identity on the universe when the relation
  /// holds literally).
  VertexMap bijection;
  bool literal = false;
  bool witness_verified = false;
  std::string witness;

  CheckReport decomposition;
  std::optional<PolynomialDelta> delta;

  /// Supported case, verified witness, decomposition holds and the
  /// polynomial identities hold where they apply.
  bool verified() const;
};

CaseReport classify(const BraidContext& ctx);

/// Applies braid moves at the given 1-based positions in order, classifying
/// each one. Throws InputError on an invalid move.
struct SequenceStep {
  Word before;
  Word after;
  std::size_t pos = 0;
  CaseReport report;
};

std::vector<SequenceStep> apply_sequence(const CoxeterSystem& sys, const Word& start, const GroupElement& pi,
                                         const std::vector<std::size_t>& positions);

}  // namespace braidcx
