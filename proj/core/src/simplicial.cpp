#include "braidcx/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "braidcx/error.hpp"

namespace braidcx {

namespace {

constexpr std::size_t kMaxVertices = 64;

FaceMask bit(std::size_t k) { return FaceMask{1} << k; }

bool is_subset(FaceMask a, FaceMask b) { return (a & ~b) == 0; }

std::vector<FaceMask> maximal(std::vector<FaceMask> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  // Larger faces first so each candidate is only tested against keepers.
  std::vector<FaceMask> by_size = faces;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](FaceMask a, FaceMask b) { return std::popcount(a) > std::popcount(b); });
  std::vector<FaceMask> keep;
  for (FaceMask f : by_size) {
    bool covered = std::any_of(keep.begin(), keep.end(), [&](FaceMask k) { return is_subset(f, k); });
    if (!covered) keep.push_back(f);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- labels

VertexLabel VertexLabel::g(int l, int m) {
  if (l == 1) return f(m);
  if (l == m) return f(1);
  return {Kind::WindowG, l, {}};
}

std::string VertexLabel::str() const {
  switch (kind) {
    case Kind::QPos:
      return "q" + std::to_string(index);
    case Kind::QPrimePos:
      return "q'" + std::to_string(index);
    case Kind::WindowF:
      return "f" + std::to_string(index);
    case Kind::WindowG:
      return "g" + std::to_string(index);
    case Kind::Fresh:
      return name;
  }
  return name;
}

LabelSet make_label_set(std::vector<VertexLabel> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::string to_string(const LabelSet& face) {
  std::string out = "{";
  for (std::size_t k = 0; k < face.size(); ++k) {
    if (k) out += ",";
    out += face[k].str();
  }
  return out + "}";
}

// ---------------------------------------------------------------- complex

LabeledComplex LabeledComplex::empty_face_only() {
  LabeledComplex x;
  x.void_ = false;
  x.facets_ = {0};
  return x;
}

LabeledComplex LabeledComplex::from_facets(const std::vector<LabelSet>& faces) {
  std::vector<VertexLabel> universe;
  for (const auto& f : faces) universe.insert(universe.end(), f.begin(), f.end());
  universe = make_label_set(std::move(universe));
  if (universe.size() > kMaxVertices) throw InputError("complexes are limited to 64 vertices");
  std::vector<FaceMask> masks;
  for (const auto& f : faces) {
    FaceMask m = 0;
    for (const auto& v : f) m |= bit(static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), v) - universe.begin()));
    masks.push_back(m);
  }
  return from_masks(universe, masks);
}

LabeledComplex LabeledComplex::from_masks(const std::vector<VertexLabel>& universe, const std::vector<FaceMask>& faces) {
  if (faces.empty()) return {};
  if (universe.size() > kMaxVertices) throw InputError("complexes are limited to 64 vertices");
  FaceMask used = 0;
  for (FaceMask f : faces) used |= f;
  if (universe.size() < 64 && (used >> universe.size()) != 0) throw InputError("face mask outside the universe");
  // Re-index onto the vertices that actually occur.
  std::vector<int> remap(universe.size(), -1);
  LabeledComplex x;
  x.void_ = false;
  for (std::size_t k = 0; k < universe.size(); ++k) {
    if (used & bit(k)) {
      remap[k] = static_cast<int>(x.vertices_.size());
      x.vertices_.push_back(universe[k]);
    }
  }
  if (!std::is_sorted(x.vertices_.begin(), x.vertices_.end()))
    throw InputError("universe must be sorted");
  std::vector<FaceMask> local;
  local.reserve(faces.size());
  for (FaceMask f : faces) {
    FaceMask m = 0;
    for (std::size_t k = 0; k < universe.size(); ++k)
      if (f & bit(k)) m |= bit(static_cast<std::size_t>(remap[k]));
    local.push_back(m);
  }
  x.facets_ = maximal(std::move(local));
  return x;
}

std::vector<LabelSet> LabeledComplex::facets() const {
  std::vector<LabelSet> out;
  for (FaceMask f : facets_) out.push_back(labels_of(f));
  return out;
}

int LabeledComplex::dimension() const {
  if (void_) return -2;
  int d = -1;
  for (FaceMask f : facets_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

bool LabeledComplex::is_pure() const {
  if (void_) return true;
  const int d = dimension();
  return std::all_of(facets_.begin(), facets_.end(), [&](FaceMask f) { return std::popcount(f) - 1 == d; });
}

bool LabeledComplex::has_vertex(const VertexLabel& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<FaceMask> LabeledComplex::mask_of(const LabelSet& face) const {
  FaceMask m = 0;
  for (const auto& v : face) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    m |= bit(static_cast<std::size_t>(it - vertices_.begin()));
  }
  return m;
}

LabelSet LabeledComplex::labels_of(FaceMask mask) const {
  LabelSet out;
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (mask & bit(k)) out.push_back(vertices_[k]);
  return out;
}

bool LabeledComplex::contains_mask(FaceMask mask) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](FaceMask f) { return is_subset(mask, f); });
}

bool LabeledComplex::contains(const LabelSet& face) const {
  if (void_) return false;
  auto m = mask_of(face);
  return m && contains_mask(*m);
}

std::vector<FaceMask> LabeledComplex::all_face_masks() const {
  if (void_) return {};
  std::unordered_set<FaceMask> seen;
  for (FaceMask f : facets_) {
    // all submasks of f, including 0
    for (FaceMask sub = f;; sub = (sub - 1) & f) {
      seen.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<FaceMask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](FaceMask a, FaceMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::vector<LabelSet> LabeledComplex::all_faces() const {
  std::vector<LabelSet> out;
  for (FaceMask m : all_face_masks()) out.push_back(labels_of(m));
  return out;
}

// ---------------------------------------------------------------- face sets

FaceSet::FaceSet(std::vector<VertexLabel> universe) : universe_(make_label_set(std::move(universe))) {
  if (universe_.size() > kMaxVertices) throw InputError("face sets are limited to 64 vertices");
}

FaceSet FaceSet::of_complex(std::vector<VertexLabel> universe, const LabeledComplex& x) {
  FaceSet out(std::move(universe));
  const auto& verts = x.vertices();
  std::vector<FaceMask> lift(verts.size());
  for (std::size_t k = 0; k < verts.size(); ++k) lift[k] = out.mask_of({verts[k]});
  for (FaceMask local : x.all_face_masks()) {
    FaceMask m = 0;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (local & bit(k)) m |= lift[k];
    out.masks_.insert(m);
  }
  return out;
}

FaceMask FaceSet::mask_of(const LabelSet& face) const {
  FaceMask m = 0;
  for (const auto& v : face) {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), v);
    if (it == universe_.end() || *it != v) throw PreconditionError("label " + v.str() + " outside the face-set universe");
    m |= bit(static_cast<std::size_t>(it - universe_.begin()));
  }
  return m;
}

LabelSet FaceSet::labels_of(FaceMask mask) const {
  LabelSet out;
  for (std::size_t k = 0; k < universe_.size(); ++k)
    if (mask & bit(k)) out.push_back(universe_[k]);
  return out;
}

void FaceSet::insert(const LabelSet& face) { masks_.insert(mask_of(face)); }

bool FaceSet::contains(const LabelSet& face) const { return masks_.contains(mask_of(face)); }

void FaceSet::check_universe(const FaceSet& other) const {
  if (universe_ != other.universe_) throw PreconditionError("face sets over different universes");
}

FaceSet FaceSet::operator|(const FaceSet& other) const {
  check_universe(other);
  FaceSet out = *this;
  out.masks_.insert(other.masks_.begin(), other.masks_.end());
  return out;
}

FaceSet FaceSet::operator-(const FaceSet& other) const {
  check_universe(other);
  FaceSet out(universe_);
  std::set_difference(masks_.begin(), masks_.end(), other.masks_.begin(), other.masks_.end(),
                      std::inserter(out.masks_, out.masks_.end()));
  return out;
}

FaceSet FaceSet::operator&(const FaceSet& other) const {
  check_universe(other);
  FaceSet out(universe_);
  std::set_intersection(masks_.begin(), masks_.end(), other.masks_.begin(), other.masks_.end(),
                        std::inserter(out.masks_, out.masks_.end()));
  return out;
}

bool FaceSet::is_complex() const {
  for (FaceMask m : masks_) {
    for (FaceMask rest = m; rest; rest &= rest - 1) {
      const FaceMask low = rest & (~rest + 1);
      if (!masks_.contains(m & ~low)) return false;
    }
  }
  return true;
}

LabeledComplex FaceSet::to_complex() const {
  return LabeledComplex::from_masks(universe_, std::vector<FaceMask>(masks_.begin(), masks_.end()));
}

// ---------------------------------------------------------------- links, stars

namespace {

FaceMask require_face(const LabeledComplex& x, const LabelSet& sigma) {
  auto m = x.mask_of(sigma);
  if (x.is_void() || !m || !x.contains_mask(*m)) throw PreconditionError(to_string(sigma) + " is not a face");
  return *m;
}

}  // namespace

LabeledComplex link(const LabeledComplex& x, const LabelSet& sigma) {
  const FaceMask s = require_face(x, sigma);
  std::vector<FaceMask> faces;
  for (FaceMask f : x.facet_masks())
    if (is_subset(s, f)) faces.push_back(f & ~s);
  return LabeledComplex::from_masks(x.vertices(), faces);
}

LabeledComplex star(const LabeledComplex& x, const LabelSet& sigma) {
  const FaceMask s = require_face(x, sigma);
  std::vector<FaceMask> faces;
  for (FaceMask f : x.facet_masks())
    if (is_subset(s, f)) faces.push_back(f);
  return LabeledComplex::from_masks(x.vertices(), faces);
}

LabeledComplex boundary_star(const LabeledComplex& x, const LabelSet& sigma) {
  const FaceMask s = require_face(x, sigma);
  std::vector<FaceMask> faces;
  for (FaceMask f : x.facet_masks()) {
    if (!is_subset(s, f)) continue;
    for (FaceMask rest = s; rest; rest &= rest - 1) faces.push_back(f & ~(rest & (~rest + 1)));
  }
  return LabeledComplex::from_masks(x.vertices(), faces);
}

LabeledComplex join(const LabeledComplex& x, const LabeledComplex& y) {
  if (x.is_void() || y.is_void()) return {};
  for (const auto& v : x.vertices())
    if (y.has_vertex(v)) throw PreconditionError("join of complexes sharing vertex " + v.str());
  std::vector<LabelSet> faces;
  for (const auto& a : x.facets()) {
    for (const auto& b : y.facets()) {
      LabelSet u = a;
      u.insert(u.end(), b.begin(), b.end());
      faces.push_back(make_label_set(std::move(u)));
    }
  }
  return LabeledComplex::from_facets(faces);
}

// ---------------------------------------------------------------- enumerative

std::vector<std::int64_t> f_vector(const LabeledComplex& x) {
  const int d = x.dimension();
  if (d < 0) return {};
  std::vector<std::int64_t> f(static_cast<std::size_t>(d + 1), 0);
  for (FaceMask m : x.all_face_masks()) {
    const int size = std::popcount(m);
    if (size > 0) ++f[static_cast<std::size_t>(size - 1)];
  }
  return f;
}

std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f, int n) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(n + 1), 0);
  auto f_at = [&](int i) -> std::int64_t {  // f_{i-1}, f_{-1} = 1
    if (i == 0) return 1;
    return i - 1 < static_cast<int>(f.size()) ? f[static_cast<std::size_t>(i - 1)] : 0;
  };
  for (int k = 0; k <= n; ++k) {
    std::int64_t acc = 0;
    for (int i = 0; i <= k; ++i) {
      const std::int64_t sign = ((k - i) % 2 == 0) ? 1 : -1;
      acc += sign * binomial(n - i, k - i) * f_at(i);
    }
    h[static_cast<std::size_t>(k)] = acc;
  }
  return h;
}

std::vector<std::int64_t> f_from_h(const std::vector<std::int64_t>& h) {
  // f_{i-1} = sum_{k<=i} C(n-k, i-k) h_k
  const int n = static_cast<int>(h.size()) - 1;
  std::vector<std::int64_t> f;
  for (int i = 1; i <= n; ++i) {
    std::int64_t acc = 0;
    for (int k = 0; k <= i; ++k) acc += binomial(n - k, i - k) * h[static_cast<std::size_t>(k)];
    f.push_back(acc);
  }
  return f;
}

std::vector<std::int64_t> h_vector(const LabeledComplex& x) {
  if (x.is_void()) throw PreconditionError("h-vector of the void complex is undefined");
  return h_from_f(f_vector(x), x.dimension() + 1);
}

HPoly h_polynomial(const LabeledComplex& x) {
  if (x.is_void()) return {};
  return HPoly::from_coefficients(h_vector(x));
}

GammaPoly gamma(const LabeledComplex& x) { return gamma_of(h_polynomial(x)); }

// ---------------------------------------------------------------- subdivisions

LabeledComplex edge_subdivide(const LabeledComplex& x, const VertexLabel& s, const VertexLabel& t,
                              const VertexLabel& r) {
  if (s == t) throw PreconditionError("edge endpoints must differ");
  if (!x.contains(make_label_set({s, t})))
    throw PreconditionError("{" + s.str() + "," + t.str() + "} is not an edge");
  if (x.has_vertex(r)) throw PreconditionError("new vertex " + r.str() + " already present");
  std::vector<LabelSet> faces;
  for (const auto& facet : x.facets()) {
    const bool has_s = std::binary_search(facet.begin(), facet.end(), s);
    const bool has_t = std::binary_search(facet.begin(), facet.end(), t);
    if (!(has_s && has_t)) {
      faces.push_back(facet);
      continue;
    }
    LabelSet without_t, without_s;
    for (const auto& v : facet) {
      if (v != t) without_t.push_back(v);
      if (v != s) without_s.push_back(v);
    }
    without_t.push_back(r);
    without_s.push_back(r);
    faces.push_back(make_label_set(std::move(without_t)));
    faces.push_back(make_label_set(std::move(without_s)));
  }
  return LabeledComplex::from_facets(faces);
}

LabeledComplex k_subdivide(const LabeledComplex& x, const VertexLabel& s, const VertexLabel& t,
                           const std::vector<VertexLabel>& fresh) {
  if (fresh.empty() && !x.contains(make_label_set({s, t})))
    throw PreconditionError("{" + s.str() + "," + t.str() + "} is not an edge");
  if (make_label_set(fresh).size() != fresh.size()) throw PreconditionError("fresh labels must be distinct");
  LabeledComplex out = x;
  VertexLabel prev = s;
  for (const auto& r : fresh) {
    out = edge_subdivide(out, prev, t, r);
    prev = r;
  }
  return out;
}

bool is_flag(const LabeledComplex& x) {
  if (x.is_void()) return true;
  const auto faces = x.all_face_masks();
  const std::size_t n = x.vertices().size();
  std::vector<FaceMask> adjacent(n, 0);
  for (FaceMask m : faces) {
    if (std::popcount(m) != 2) continue;
    const auto a = static_cast<std::size_t>(std::countr_zero(m));
    const auto b = static_cast<std::size_t>(63 - std::countl_zero(m));
    adjacent[a] |= bit(b);
    adjacent[b] |= bit(a);
  }
  const std::unordered_set<FaceMask> lookup(faces.begin(), faces.end());
  // A minimal non-face of size >= 3 is a face plus one vertex adjacent to
  // all of it.
  for (FaceMask m : faces) {
    if (std::popcount(m) < 2) continue;
    FaceMask common = ~FaceMask{0};
    for (FaceMask rest = m; rest; rest &= rest - 1) common &= adjacent[static_cast<std::size_t>(std::countr_zero(rest))];
    common &= ~m;
    for (FaceMask rest = common; rest; rest &= rest - 1) {
      const FaceMask v = rest & (~rest + 1);
      if (!lookup.contains(m | v)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- isomorphism

namespace {

class IsoSearch {
 public:
  IsoSearch(const LabeledComplex& x, const LabeledComplex& y) : x_(x), y_(y), n_(x.vertices().size()) {
    degree_x_ = degrees(x);
    degree_y_ = degrees(y);
    pair_x_ = pairs(x);
    pair_y_ = pairs(y);
    target_ = y.facet_masks();
    map_.assign(n_, -1);
    used_.assign(n_, false);
    class_x_.assign(n_, 0);
    class_y_.assign(n_, 0);
  }

  bool fix(std::size_t a, std::size_t b) {
    if (degree_x_[a] != degree_y_[b]) return false;
    if (map_[a] != -1) return map_[a] == static_cast<int>(b);
    if (used_[b]) return false;
    map_[a] = static_cast<int>(b);
    used_[b] = true;
    return true;
  }

  void set_classes(std::vector<int> cx, std::vector<int> cy) {
    class_x_ = std::move(cx);
    class_y_ = std::move(cy);
  }

  bool solve() {
    for (std::size_t a = 0; a < n_; ++a)
      if (map_[a] == -1) order_.push_back(a);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return degree_x_[a] > degree_x_[b]; });
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (map_[a] != -1 && map_[b] != -1 &&
            pair_x_[a][b] != pair_y_[static_cast<std::size_t>(map_[a])][static_cast<std::size_t>(map_[b])])
          return false;
    return step(0);
  }

  const std::vector<int>& mapping() const { return map_; }

 private:
  static std::vector<int> degrees(const LabeledComplex& c) {
    std::vector<int> d(c.vertices().size(), 0);
    for (FaceMask f : c.facet_masks())
      for (std::size_t k = 0; k < d.size(); ++k)
        if (f & bit(k)) ++d[k];
    return d;
  }

  static std::vector<std::vector<int>> pairs(const LabeledComplex& c) {
    const std::size_t n = c.vertices().size();
    std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
    for (FaceMask f : c.facet_masks())
      for (std::size_t a = 0; a < n; ++a)
        if (f & bit(a))
          for (std::size_t b = 0; b < n; ++b)
            if (f & bit(b)) ++p[a][b];
    return p;
  }

  bool complete() const {
    std::vector<FaceMask> image;
    for (FaceMask f : x_.facet_masks()) {
      FaceMask g = 0;
      for (std::size_t k = 0; k < n_; ++k)
        if (f & bit(k)) g |= bit(static_cast<std::size_t>(map_[k]));
      image.push_back(g);
    }
    std::sort(image.begin(), image.end());
    return image == target_;
  }

  bool step(std::size_t depth) {
    if (depth == order_.size()) return complete();
    const std::size_t a = order_[depth];
    for (std::size_t b = 0; b < n_; ++b) {
      if (used_[b] || degree_x_[a] != degree_y_[b] || class_x_[a] != class_y_[b]) continue;
      bool ok = pair_x_[a][a] == pair_y_[b][b];
      for (std::size_t u = 0; u < n_ && ok; ++u)
        if (map_[u] != -1) ok = pair_x_[a][u] == pair_y_[b][static_cast<std::size_t>(map_[u])];
      if (!ok) continue;
      map_[a] = static_cast<int>(b);
      used_[b] = true;
      if (step(depth + 1)) return true;
      map_[a] = -1;
      used_[b] = false;
    }
    return false;
  }

  const LabeledComplex& x_;
  const LabeledComplex& y_;
  std::size_t n_;
  std::vector<int> degree_x_, degree_y_;
  std::vector<std::vector<int>> pair_x_, pair_y_;
  std::vector<FaceMask> target_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> class_x_, class_y_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const LabeledComplex& x, const LabeledComplex& y,
                                          const IsoConstraints& constraints) {
  if (x.is_void() != y.is_void()) return std::nullopt;
  if (x.is_void()) return VertexMap{};
  if (x.vertices().size() != y.vertices().size() || x.facet_masks().size() != y.facet_masks().size())
    return std::nullopt;
  if (f_vector(x) != f_vector(y)) return std::nullopt;

  const auto& vx = x.vertices();
  const auto& vy = y.vertices();
  auto index = [](const std::vector<VertexLabel>& vs, const VertexLabel& v) -> int {
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    return (it != vs.end() && *it == v) ? static_cast<int>(it - vs.begin()) : -1;
  };

  IsoSearch search(x, y);
  for (const auto& [from, to] : constraints.fixed) {
    const int a = index(vx, from), b = index(vy, to);
    if ((a < 0) != (b < 0)) return std::nullopt;
    if (a < 0) continue;
    if (!search.fix(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) return std::nullopt;
  }
  if (constraints.free_x || constraints.free_y) {
    const LabelSet fx = constraints.free_x ? make_label_set(*constraints.free_x) : LabelSet{};
    const LabelSet fy = constraints.free_y ? make_label_set(*constraints.free_y) : LabelSet{};
    std::vector<int> cx(vx.size()), cy(vy.size());
    for (std::size_t k = 0; k < vx.size(); ++k) cx[k] = std::binary_search(fx.begin(), fx.end(), vx[k]) ? 1 : 0;
    for (std::size_t k = 0; k < vy.size(); ++k) cy[k] = std::binary_search(fy.begin(), fy.end(), vy[k]) ? 1 : 0;
    search.set_classes(std::move(cx), std::move(cy));
  }
  if (!search.solve()) return std::nullopt;
  VertexMap out;
  for (std::size_t k = 0; k < vx.size(); ++k) out.emplace(vx[k], vy[static_cast<std::size_t>(search.mapping()[k])]);
  return out;
}

}  // namespace braidcx
