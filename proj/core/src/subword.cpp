#include "braidcx/subword.hpp"

#include <algorithm>

#include "braidcx/error.hpp"

namespace braidcx {

SubwordDescriptor SubwordDescriptor::plain(const CoxeterSystem& sys, Word word, GroupElement pi) {
  std::vector<VertexLabel> labels;
  for (std::size_t k = 0; k < word.size(); ++k) labels.push_back(VertexLabel::q(static_cast<int>(k + 1)));
  return labeled(sys, std::move(word), std::move(labels), std::move(pi));
}

SubwordDescriptor SubwordDescriptor::labeled(const CoxeterSystem& sys, Word word, std::vector<VertexLabel> labels,
                                             GroupElement pi) {
  SubwordDescriptor d{&sys, std::move(word), std::move(labels), std::move(pi)};
  d.validate();
  return d;
}

void SubwordDescriptor::validate() const {
  if (system == nullptr) throw InputError("subword descriptor without a Coxeter system");
  system->check_word(word);
  if (labels.size() != word.size()) throw InputError("one label per position is required");
  if (word.size() > 64) throw InputError("words longer than 64 letters are not supported");
  if (make_label_set(labels).size() != labels.size()) throw InputError("position labels must be distinct");
}

SubwordDescriptor SubwordDescriptor::without_positions(const std::vector<int>& positions) const {
  std::vector<bool> drop(word.size(), false);
  for (int p : positions) {
    if (p < 1 || p > static_cast<int>(word.size())) throw InputError("position " + std::to_string(p) + " out of range");
    drop[static_cast<std::size_t>(p - 1)] = true;
  }
  std::vector<int> letters;
  std::vector<VertexLabel> kept;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (drop[k]) continue;
    letters.push_back(word[k]);
    kept.push_back(labels[k]);
  }
  return SubwordDescriptor{system, Word(std::move(letters)), std::move(kept), pi};
}

std::vector<int> SubwordDescriptor::positions_of(const LabelSet& wanted) const {
  std::vector<int> out;
  for (const auto& v : wanted) {
    auto it = std::find(labels.begin(), labels.end(), v);
    if (it == labels.end()) throw PreconditionError("label " + v.str() + " is not a position of the word");
    out.push_back(static_cast<int>(it - labels.begin()) + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubwordDescriptor SubwordDescriptor::without_labels(const LabelSet& wanted) const {
  return without_positions(positions_of(wanted));
}

std::vector<FaceMask> reduced_expression_masks(const SubwordDescriptor& d) {
  d.validate();
  return reduced_subword_masks(*d.system, d.word, d.pi);
}

LabeledComplex build(const SubwordDescriptor& d) {
  const auto expressions = reduced_expression_masks(d);
  if (expressions.empty()) return LabeledComplex::void_complex();
  const FaceMask all = d.word.size() == 64 ? ~FaceMask{0} : (FaceMask{1} << d.word.size()) - 1;
  // Complex vertex order is label order; translate position bits.
  std::vector<std::size_t> order(d.word.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d.labels[a] < d.labels[b]; });
  std::vector<VertexLabel> universe;
  std::vector<std::size_t> slot(d.word.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    universe.push_back(d.labels[order[k]]);
    slot[order[k]] = k;
  }
  std::vector<FaceMask> facets;
  facets.reserve(expressions.size());
  for (FaceMask e : expressions) {
    const FaceMask complement = all & ~e;
    FaceMask m = 0;
    for (std::size_t k = 0; k < d.word.size(); ++k)
      if (complement & (FaceMask{1} << k)) m |= FaceMask{1} << slot[k];
    facets.push_back(m);
  }
  return LabeledComplex::from_masks(universe, facets);
}

bool is_face(const SubwordDescriptor& d, const std::vector<int>& positions) {
  const auto rest = d.without_positions(positions);
  return contains_reduced(*d.system, rest.word, d.pi);
}

bool is_spherical(const SubwordDescriptor& d) {
  d.validate();
  return demazure_product(*d.system, d.word) == d.pi;
}

bool link_oracle_check(const SubwordDescriptor& d, const std::vector<int>& positions) {
  if (!is_face(d, positions)) throw PreconditionError("positions do not form a face");
  LabelSet face;
  for (int p : positions) face.push_back(d.labels[static_cast<std::size_t>(p - 1)]);
  const LabeledComplex whole = build(d);
  return link(whole, make_label_set(face)) == build(d.without_positions(positions));
}

}  // namespace braidcx
