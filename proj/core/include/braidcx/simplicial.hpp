#pragma once

// Simplicial complexes on labeled vertices.
//
// A complex keeps its vertex labels sorted and stores facets as bitmasks over
// that order (at most 64 vertices). The VOID complex has no faces at all and
// is distinct from {∅}, the complex whose only face is the empty one.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidcx/polynomial.hpp"

namespace braidcx {

using FaceMask = std::uint64_t;

struct VertexLabel {
  // Declaration order is the sort order, which follows word order:
  // Q letters, then the braid window, then Q' letters.
  enum class Kind : std::uint8_t { QPos, WindowF, WindowG, QPrimePos, Fresh };

  Kind kind = Kind::QPos;
  int index = 0;
  std::string name;

  static VertexLabel q(int position) { return {Kind::QPos, position, {}}; }
  static VertexLabel q_prime(int position) { return {Kind::QPrimePos, position, {}}; }
  static VertexLabel f(int l) { return {Kind::WindowF, l, {}}; }
  /// g_l of a window of length m. g_1 is f_m and g_m is f_1, so those two
  /// come back as WindowF labels.
  static VertexLabel g(int l, int m);
  static VertexLabel fresh(std::string name) { return {Kind::Fresh, 0, std::move(name)}; }

  /// "q3", "q'2", "f1", "g2", or the fresh name.
  std::string str() const;

  auto operator<=>(const VertexLabel&) const = default;
  bool operator==(const VertexLabel&) const = default;
};

/// Sorted, duplicate-free set of labels.
using LabelSet = std::vector<VertexLabel>;

LabelSet make_label_set(std::vector<VertexLabel> labels);
std::string to_string(const LabelSet& face);

class LabeledComplex {
 public:
  /// VOID.
  LabeledComplex() = default;

  static LabeledComplex void_complex() { return {}; }
  /// {∅}
  static LabeledComplex empty_face_only();
  /// Complex generated by the given faces; non-maximal ones are dropped.
  /// An empty list gives VOID, a list holding only {} gives {∅}.
  static LabeledComplex from_facets(const std::vector<LabelSet>& faces);
  /// Same, with faces given as masks over `universe` (sorted, unique).
  static LabeledComplex from_masks(const std::vector<VertexLabel>& universe, const std::vector<FaceMask>& faces);

  bool is_void() const { return void_; }
  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const std::vector<FaceMask>& facet_masks() const { return facets_; }
  std::vector<LabelSet> facets() const;

  /// Largest face dimension: -1 for {∅}, -2 for VOID.
  int dimension() const;
  bool is_pure() const;
  bool has_vertex(const VertexLabel& v) const;

  /// Mask of `face` in this complex's vertex order, or nullopt when some
  /// label is not a vertex.
  std::optional<FaceMask> mask_of(const LabelSet& face) const;
  LabelSet labels_of(FaceMask mask) const;

  bool contains(const LabelSet& face) const;
  bool contains_mask(FaceMask mask) const;

  /// Every face including ∅ (absent for VOID), sorted by size then mask.
  std::vector<FaceMask> all_face_masks() const;
  std::vector<LabelSet> all_faces() const;

  bool operator==(const LabeledComplex&) const = default;

 private:
  bool void_ = true;
  std::vector<VertexLabel> vertices_;
  std::vector<FaceMask> facets_;  // sorted, pairwise incomparable
};

/// A set of faces over a fixed vertex universe, for set algebra on face
/// families that need not be complexes (open stars and the like).
class FaceSet {
 public:
  explicit FaceSet(std::vector<VertexLabel> universe);
  /// All faces of `x`; its vertices must lie in `universe`.
  static FaceSet of_complex(std::vector<VertexLabel> universe, const LabeledComplex& x);

  const std::vector<VertexLabel>& universe() const { return universe_; }
  const std::set<FaceMask>& masks() const { return masks_; }
  std::size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }

  FaceMask mask_of(const LabelSet& face) const;
  LabelSet labels_of(FaceMask mask) const;

  void insert(const LabelSet& face);
  void insert_mask(FaceMask mask) { masks_.insert(mask); }
  bool contains(const LabelSet& face) const;

  FaceSet operator|(const FaceSet& other) const;
  FaceSet operator-(const FaceSet& other) const;
  FaceSet operator&(const FaceSet& other) const;

  /// Downward closed.
  bool is_complex() const;
  /// Complex spanned by the maximal members; VOID when empty.
  LabeledComplex to_complex() const;

  bool operator==(const FaceSet&) const = default;

 private:
  void check_universe(const FaceSet& other) const;
  std::vector<VertexLabel> universe_;
  std::set<FaceMask> masks_;
};

/// {ρ ∈ X : σ ∪ ρ ∈ X, σ ∩ ρ = ∅}. Throws PreconditionError if σ ∉ X.
LabeledComplex link(const LabeledComplex& x, const LabelSet& sigma);
/// {ρ ∈ X : σ ∪ ρ ∈ X}.
LabeledComplex star(const LabeledComplex& x, const LabelSet& sigma);
/// Faces of the star that do not contain σ.
LabeledComplex boundary_star(const LabeledComplex& x, const LabelSet& sigma);
/// {A ∪ B}; the vertex sets must be disjoint.
LabeledComplex join(const LabeledComplex& x, const LabeledComplex& y);

/// (f_0, ..., f_d); empty for VOID and for {∅}.
std::vector<std::int64_t> f_vector(const LabeledComplex& x);
/// (h_0, ..., h_n) with n = dim + 1. Throws PreconditionError for VOID.
std::vector<std::int64_t> h_vector(const LabeledComplex& x);
/// H(X)(alpha, t); zero for VOID.
HPoly h_polynomial(const LabeledComplex& x);
/// gamma(X); zero for VOID. Throws PreconditionError when h is not
/// palindromic.
GammaPoly gamma(const LabeledComplex& x);

/// h-vector from an f-vector of a complex of dimension n - 1.
std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f, int n);
/// f-vector (f_0..f_{n-1}) from an h-vector (h_0..h_n).
std::vector<std::int64_t> f_from_h(const std::vector<std::int64_t>& h);

/// Bisects every face containing the edge {s, t} with the new vertex r.
LabeledComplex edge_subdivide(const LabeledComplex& x, const VertexLabel& s, const VertexLabel& t,
                              const VertexLabel& r);

/// k = fresh.size() chained subdivisions: the i-th one subdivides
/// {r_{i-1}, t} with r_i, where r_0 = s.
LabeledComplex k_subdivide(const LabeledComplex& x, const VertexLabel& s, const VertexLabel& t,
                           const std::vector<VertexLabel>& fresh);

/// Every clique of the 1-skeleton is a face.
bool is_flag(const LabeledComplex& x);

using VertexMap = std::map<VertexLabel, VertexLabel>;

struct IsoConstraints {
  /// Pairs that must appear in the bijection. An entry whose source is not
  /// a vertex of X must have a target that is not a vertex of Y, and is
  /// then ignored.
  VertexMap fixed;
  /// When set, unfixed vertices of X inside free_x map into free_y and those
  /// outside map outside.
  std::optional<LabelSet> free_x;
  std::optional<LabelSet> free_y;
};

/// A facet-preserving vertex bijection X -> Y honoring the constraints,
/// found by backtracking; nullopt if none exists.
std::optional<VertexMap> find_isomorphism(const LabeledComplex& x, const LabeledComplex& y,
                                          const IsoConstraints& constraints = {});

}  // namespace braidcx
