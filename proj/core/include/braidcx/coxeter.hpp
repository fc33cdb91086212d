#pragma once

// Finite Coxeter systems in the geometric representation.
//
// Generators are numbered 1..rank everywhere in the public interface, and so
// are word positions. Group elements are stored as their matrices acting on
// the simple-root basis; two elements compare equal when their matrices agree
// entrywise after rounding to a fixed grid.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "braidcx/error.hpp"

namespace braidcx {

/// A finite sequence of generator indices (1-based).
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) : letters_(letters) {}
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  /// Parses "1,2,1", "1 2 1" or "" (the empty word). "e" is also accepted
  /// for the empty word.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word operator+(const Word& other) const;
  Word reversed() const;
  /// Subword [first, first + count) with 0-based offsets.
  Word slice(std::size_t first, std::size_t count) const;

  /// "1,2,1"
  std::string str() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

/// The alternating word i j i j ... of the given length.
Word alternating_word(int i, int j, std::size_t length);

/// Symmetric matrix of orders m_ij of a finite Coxeter system.
class CoxeterMatrix {
 public:
  /// Validates symmetry, the diagonal, m_ij >= 2 off the diagonal and that
  /// every connected component of the diagram is of finite type.
  explicit CoxeterMatrix(std::vector<std::vector<int>> entries);

  /// Named finite types: "A"/"B"/"D" with a rank, "E" (6,7,8), "F" (4),
  /// "H" (3,4), and "I2" whose parameter is m.
  static CoxeterMatrix named(std::string_view family, int parameter);

  int rank() const { return static_cast<int>(entries_.size()); }
  /// m_ij for generators i, j in [1, rank].
  int operator()(int i, int j) const;
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  bool simply_laced() const;
  /// Finite type of each connected component, e.g. {"A3"} or {"A1", "I2(5)"}.
  const std::vector<std::string>& component_types() const { return types_; }
  /// "A3", "A1xI2(5)".
  std::string type_name() const;
  /// |W|, saturating at UINT64_MAX.
  std::uint64_t group_order() const { return order_; }

 private:
  std::vector<std::vector<int>> entries_;
  std::vector<std::string> types_;
  std::uint64_t order_ = 1;
};

struct SystemOptions {
  /// Rounding grid used for element equality and hashing.
  double grid = 1e-6;
  /// A root is negative iff all its coordinates are <= this. Must lie in
  /// (0, 0.5).
  double negativity_tolerance = 1e-6;
  /// Largest |W| accepted by operations that enumerate the whole group.
  std::uint64_t max_group_order = 2'000'000;
};

class CoxeterSystem;

/// An element of W, stored as its matrix in the simple-root basis.
class GroupElement {
 public:
  GroupElement() = default;

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const std::vector<std::int64_t>& key() const { return key_; }

  bool operator==(const GroupElement& other) const { return key_ == other.key_; }
  bool operator<(const GroupElement& other) const { return key_ < other.key_; }

 private:
  friend class CoxeterSystem;
  GroupElement(Eigen::MatrixXd matrix, double grid);

  Eigen::MatrixXd matrix_;
  std::vector<std::int64_t> key_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterMatrix matrix, SystemOptions options = {});

  int rank() const { return matrix_.rank(); }
  const CoxeterMatrix& coxeter_matrix() const { return matrix_; }
  const SystemOptions& options() const { return options_; }
  int m(int i, int j) const { return matrix_(i, j); }

  /// Reflection s_i in the simple-root basis, v -> v - 2 B(a_i, v) a_i.
  const Eigen::MatrixXd& generator(int s) const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  /// g * s_s
  GroupElement times_generator(const GroupElement& g, int s) const;
  /// s_s * g
  GroupElement generator_times(int s, const GroupElement& g) const;
  GroupElement inverse(const GroupElement& g) const;

  /// g(a_s) is a negative root, i.e. l(g s) < l(g).
  bool is_right_descent(const GroupElement& g, int s) const;
  /// g^{-1}(a_s) is a negative root, i.e. l(s g) < l(g).
  bool is_left_descent(const GroupElement& g, int s) const;

  /// Column test used by the descent checks; exposed for the enumerators
  /// that keep a raw matrix around.
  bool column_is_negative(const Eigen::MatrixXd& m, int s) const;

  void check_word(const Word& w) const;

  /// Wraps a matrix already known to represent an element of W.
  GroupElement from_matrix(Eigen::MatrixXd m) const { return GroupElement(std::move(m), options_.grid); }

 private:
  GroupElement wrap(Eigen::MatrixXd m) const { return from_matrix(std::move(m)); }

  CoxeterMatrix matrix_;
  SystemOptions options_;
  std::vector<Eigen::MatrixXd> generators_;
};

/// Product of the generators of w in word order; the empty word is e.
GroupElement element_of(const CoxeterSystem& sys, const Word& w);

/// l(g), by stripping right descents until the identity is reached.
int length(const CoxeterSystem& sys, const GroupElement& g);

bool is_reduced(const CoxeterSystem& sys, const Word& w);

std::set<int> right_descents(const CoxeterSystem& sys, const GroupElement& g);
std::set<int> left_descents(const CoxeterSystem& sys, const GroupElement& g);

/// One reduced word of g: strip the smallest right descent repeatedly.
Word reduced_word(const CoxeterSystem& sys, const GroupElement& g);

/// Greedy left-to-right fold keeping only length-increasing steps.
GroupElement demazure_product(const CoxeterSystem& sys, const Word& w);

/// True iff some subword of q is a reduced expression of pi.
bool contains_reduced(const CoxeterSystem& sys, const Word& q, const GroupElement& pi);

/// Every set of positions of q (bit k = position k+1) carrying a reduced
/// expression of pi, in depth-first order with "take" before "skip".
std::vector<std::uint64_t> reduced_subword_masks(const CoxeterSystem& sys, const Word& q, const GroupElement& pi);

/// A reduced word for element_of(w). Not necessarily a subword of w.
Word nil_reduce(const CoxeterSystem& sys, const Word& w);

/// Replaces the alternating window i j i ... of length m_ij starting at the
/// 1-based position `pos` with j i j ...
Word apply_braid_move(const CoxeterSystem& sys, const Word& w, std::size_t pos, int i, int j);

/// Position/letter pair describing a braid move available in a word.
struct BraidSite {
  std::size_t pos;  // 1-based
  int i;
  int j;
  auto operator<=>(const BraidSite&) const = default;
};

/// Every braid move applicable to w, ordered by position then letters.
std::vector<BraidSite> braid_sites(const CoxeterSystem& sys, const Word& w);

inline constexpr std::size_t kDefaultReducedWordCap = 100'000;

/// All reduced words of g (BFS over braid moves from one seed).
std::set<Word> reduced_words(const CoxeterSystem& sys, const GroupElement& g,
                             std::size_t cap = kDefaultReducedWordCap);

GroupElement longest_element(const CoxeterSystem& sys);

/// The c-sorting word of g: the lexicographically first reduced subword of
/// c c c ... expressing g. `c` must contain every generator exactly once.
Word c_sorting_word(const CoxeterSystem& sys, const Word& c, const GroupElement& g);

/// Every element of W with a reduced word, by BFS from the identity.
/// Refuses groups larger than options().max_group_order.
std::vector<std::pair<GroupElement, Word>> enumerate_elements(const CoxeterSystem& sys);

}  // namespace braidcx
