#include "braidcx/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace braidcx {

// ---------------------------------------------------------------- Word

Word Word::parse(std::string_view text) {
  std::vector<int> letters;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token == "e" && letters.empty()) {
      token.clear();
      return;
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InputError("bad word letter '" + token + "'");
    }
    if (used != token.size()) throw InputError("bad word letter '" + token + "'");
    if (value < 1) throw InputError("word letters are 1-based, got " + token);
    letters.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '[' || ch == ']') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return Word(std::move(letters));
}

Word Word::operator+(const Word& other) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

Word Word::reversed() const { return Word(std::vector<int>(letters_.rbegin(), letters_.rend())); }

Word Word::slice(std::size_t first, std::size_t count) const {
  first = std::min(first, letters_.size());
  count = std::min(count, letters_.size() - first);
  return Word(std::vector<int>(letters_.begin() + first, letters_.begin() + first + count));
}

std::string Word::str() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters_[k]);
  }
  return out;
}

Word alternating_word(int i, int j, std::size_t length) {
  std::vector<int> out(length);
  for (std::size_t k = 0; k < length; ++k) out[k] = (k % 2 == 0) ? i : j;
  return Word(std::move(out));
}

// ---------------------------------------------------------------- CoxeterMatrix

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r = sat_mul(r, static_cast<std::uint64_t>(k));
  return r;
}

struct ComponentType {
  std::string name;
  std::uint64_t order;
};

// Identifies one connected component of the Coxeter diagram. `nodes` are
// 0-based indices; throws InputError when the component is not finite.
ComponentType identify_component(const std::vector<std::vector<int>>& m,
                                 const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {"A1", 2};

  std::map<int, std::vector<int>> adj;
  int edges = 0;
  std::vector<int> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int v = m[nodes[a]][nodes[b]];
      if (v >= 3) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edges;
        labels.push_back(v);
      }
    }
  }
  if (n == 2) {
    int v = labels.at(0);
    if (v == 3) return {"A2", 6};
    return {"I2(" + std::to_string(v) + ")", 2ull * static_cast<std::uint64_t>(v)};
  }
  auto reject = [] { throw InputError("Coxeter matrix is not of finite type"); };
  if (edges != n - 1) reject();  // connected with a cycle
  for (int v : labels)
    if (v > 5) reject();

  int branch = -1;
  for (auto& [node, nb] : adj) {
    if (nb.size() > 3) reject();
    if (nb.size() == 3) {
      if (branch != -1) reject();
      branch = node;
    }
  }
  const auto heavy = std::count_if(labels.begin(), labels.end(), [](int v) { return v != 3; });
  if (heavy > 1) reject();

  auto label = [&](int a, int b) { return m[nodes[a]][nodes[b]]; };

  if (branch != -1) {
    if (heavy != 0) reject();
    std::vector<int> arms;
    for (int start : adj[branch]) {
      int prev = branch, cur = start, len = 1;
      while (adj[cur].size() == 2) {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      return {"D" + std::to_string(n), sat_mul(std::uint64_t{1} << (n - 1), factorial(n))};
    }
    if (arms[0] == 1 && arms[1] == 2) {
      if (arms[2] == 2) return {"E6", 51840};
      if (arms[2] == 3) return {"E7", 2903040};
      if (arms[2] == 4) return {"E8", 696729600};
    }
    reject();
  }

  // A path: find an end and walk it, recording edge labels in order.
  int end = -1;
  for (auto& [node, nb] : adj)
    if (nb.size() == 1) {
      end = node;
      break;
    }
  std::vector<int> path_labels;
  for (int prev = -1, cur = end;;) {
    int next = -1;
    for (int nb : adj[cur])
      if (nb != prev) next = nb;
    if (next == -1) break;
    path_labels.push_back(label(cur, next));
    prev = cur;
    cur = next;
  }
  if (heavy == 0) return {"A" + std::to_string(n), factorial(n + 1)};
  const auto pos = std::find_if(path_labels.begin(), path_labels.end(), [](int v) { return v != 3; }) -
                   path_labels.begin();
  const int v = path_labels[pos];
  const bool at_end = pos == 0 || pos == static_cast<long>(path_labels.size()) - 1;
  if (v == 4) {
    if (at_end) return {"B" + std::to_string(n), sat_mul(std::uint64_t{1} << n, factorial(n))};
    if (n == 4) return {"F4", 1152};
  }
  if (v == 5 && at_end) {
    if (n == 3) return {"H3", 120};
    if (n == 4) return {"H4", 14400};
  }
  reject();
  return {};
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw InputError("Coxeter matrix must have rank >= 1");
  for (std::size_t a = 0; a < n; ++a) {
    if (entries_[a].size() != n) throw InputError("Coxeter matrix must be square");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (entries_[a][a] != 1) throw InputError("Coxeter matrix diagonal must be 1");
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (entries_[a][b] != entries_[b][a]) throw InputError("Coxeter matrix must be symmetric");
      if (entries_[a][b] < 2) throw InputError("off-diagonal Coxeter entries must be >= 2");
    }
  }
  std::vector<int> component(n, -1);
  int count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    std::vector<int> nodes;
    std::deque<std::size_t> queue{start};
    component[start] = count;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      nodes.push_back(static_cast<int>(cur));
      for (std::size_t b = 0; b < n; ++b) {
        if (b != cur && entries_[cur][b] >= 3 && component[b] == -1) {
          component[b] = count;
          queue.push_back(b);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    auto type = identify_component(entries_, nodes);
    types_.push_back(type.name);
    order_ = sat_mul(order_, type.order);
    ++count;
  }
}

CoxeterMatrix CoxeterMatrix::named(std::string_view family, int parameter) {
  const std::string f(family);
  auto path = [](int n, int def) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int a = 0; a < n; ++a) m[a][a] = 1;
    for (int a = 0; a + 1 < n; ++a) m[a][a + 1] = m[a + 1][a] = def;
    return m;
  };
  auto set = [](std::vector<std::vector<int>>& m, int a, int b, int v) {
    m[a - 1][b - 1] = m[b - 1][a - 1] = v;
  };
  auto bad = [&] {
    throw InputError("unsupported group " + f + " with parameter " + std::to_string(parameter));
  };
  if (f == "A") {
    if (parameter < 1) bad();
    return CoxeterMatrix(path(parameter, 3));
  }
  if (f == "B" || f == "C") {
    if (parameter < 2) bad();
    auto m = path(parameter, 3);
    set(m, parameter - 1, parameter, 4);
    return CoxeterMatrix(std::move(m));
  }
  if (f == "D") {
    if (parameter < 4) bad();
    const int n = parameter;
    auto m = path(n - 1, 3);
    for (auto& row : m) row.push_back(2);
    m.push_back(std::vector<int>(n, 2));
    m[n - 1][n - 1] = 1;
    set(m, n - 2, n, 3);
    return CoxeterMatrix(std::move(m));
  }
  if (f == "E") {
    if (parameter < 6 || parameter > 8) bad();
    const int n = parameter;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int a = 0; a < n; ++a) m[a][a] = 1;
    set(m, 1, 3, 3);
    set(m, 2, 4, 3);
    set(m, 3, 4, 3);
    for (int a = 4; a < n; ++a) set(m, a, a + 1, 3);
    return CoxeterMatrix(std::move(m));
  }
  if (f == "F") {
    if (parameter != 4) bad();
    auto m = path(4, 3);
    set(m, 2, 3, 4);
    return CoxeterMatrix(std::move(m));
  }
  if (f == "H") {
    if (parameter != 3 && parameter != 4) bad();
    auto m = path(parameter, 3);
    set(m, 1, 2, 5);
    return CoxeterMatrix(std::move(m));
  }
  if (f == "I2" || f == "I") {
    if (parameter < 2) bad();
    return CoxeterMatrix(std::vector<std::vector<int>>{{1, parameter}, {parameter, 1}});
  }
  bad();
  return CoxeterMatrix(std::vector<std::vector<int>>{{1}});
}

int CoxeterMatrix::operator()(int i, int j) const {
  if (i < 1 || i > rank() || j < 1 || j > rank())
    throw InputError("generator index out of range");
  return entries_[i - 1][j - 1];
}

bool CoxeterMatrix::simply_laced() const {
  for (const auto& row : entries_)
    for (int v : row)
      if (v > 3) return false;
  return true;
}

std::string CoxeterMatrix::type_name() const {
  std::string out;
  for (std::size_t k = 0; k < types_.size(); ++k) {
    if (k) out += 'x';
    out += types_[k];
  }
  return out;
}

// ---------------------------------------------------------------- elements

GroupElement::GroupElement(Eigen::MatrixXd matrix, double grid) : matrix_(std::move(matrix)) {
  key_.resize(static_cast<std::size_t>(matrix_.size()));
  for (Eigen::Index k = 0; k < matrix_.size(); ++k)
    key_[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(std::llround(matrix_.data()[k] / grid));
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : g.key()) {
    h ^= std::hash<std::int64_t>{}(v);
    h *= 0x100000001b3ull;
  }
  return h;
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, SystemOptions options)
    : matrix_(std::move(matrix)), options_(options) {
  if (!(options_.grid > 0.0)) throw InputError("rounding grid must be positive");
  if (!(options_.negativity_tolerance > 0.0 && options_.negativity_tolerance < 0.5))
    throw InputError("negativity tolerance must lie in (0, 0.5)");
  const int n = rank();
  Eigen::MatrixXd form(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      form(a, b) = a == b ? 1.0 : -std::cos(std::numbers::pi / matrix_.entries()[a][b]);
  for (int s = 0; s < n; ++s) {
    Eigen::MatrixXd gen = Eigen::MatrixXd::Identity(n, n);
    for (int k = 0; k < n; ++k) gen(s, k) -= 2.0 * form(s, k);
    generators_.push_back(std::move(gen));
  }
}

const Eigen::MatrixXd& CoxeterSystem::generator(int s) const {
  if (s < 1 || s > rank()) throw InputError("generator index " + std::to_string(s) + " out of range");
  return generators_[static_cast<std::size_t>(s - 1)];
}

GroupElement CoxeterSystem::identity() const { return wrap(Eigen::MatrixXd::Identity(rank(), rank())); }

GroupElement CoxeterSystem::multiply(const GroupElement& a, const GroupElement& b) const {
  return wrap(a.matrix() * b.matrix());
}

GroupElement CoxeterSystem::times_generator(const GroupElement& g, int s) const {
  return wrap(g.matrix() * generator(s));
}

GroupElement CoxeterSystem::generator_times(int s, const GroupElement& g) const {
  return wrap(generator(s) * g.matrix());
}

GroupElement CoxeterSystem::inverse(const GroupElement& g) const {
  return element_of(*this, reduced_word(*this, g).reversed());
}

bool CoxeterSystem::column_is_negative(const Eigen::MatrixXd& m, int s) const {
  const auto col = m.col(s - 1);
  for (Eigen::Index k = 0; k < col.size(); ++k)
    if (col[k] > options_.negativity_tolerance) return false;
  return true;
}

bool CoxeterSystem::is_right_descent(const GroupElement& g, int s) const {
  generator(s);
  return column_is_negative(g.matrix(), s);
}

bool CoxeterSystem::is_left_descent(const GroupElement& g, int s) const {
  generator(s);
  // The simple-root basis is not orthonormal, so g^{-1} is not g^T.
  return column_is_negative(inverse(g).matrix(), s);
}

void CoxeterSystem::check_word(const Word& w) const {
  for (int letter : w)
    if (letter < 1 || letter > rank())
      throw InputError("word letter " + std::to_string(letter) + " outside [1, " + std::to_string(rank()) + "]");
}

// ---------------------------------------------------------------- operations

GroupElement element_of(const CoxeterSystem& sys, const Word& w) {
  sys.check_word(w);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(sys.rank(), sys.rank());
  for (int s : w) m = m * sys.generator(s);
  return sys.from_matrix(std::move(m));
}

int length(const CoxeterSystem& sys, const GroupElement& g) {
  Eigen::MatrixXd m = g.matrix();
  int len = 0;
  for (;;) {
    int descent = 0;
    for (int s = 1; s <= sys.rank(); ++s) {
      if (sys.column_is_negative(m, s)) {
        descent = s;
        break;
      }
    }
    if (descent == 0) return len;
    m = m * sys.generator(descent);
    ++len;
  }
}

bool is_reduced(const CoxeterSystem& sys, const Word& w) {
  return length(sys, element_of(sys, w)) == static_cast<int>(w.size());
}

std::set<int> right_descents(const CoxeterSystem& sys, const GroupElement& g) {
  std::set<int> out;
  for (int s = 1; s <= sys.rank(); ++s)
    if (sys.column_is_negative(g.matrix(), s)) out.insert(s);
  return out;
}

std::set<int> left_descents(const CoxeterSystem& sys, const GroupElement& g) {
  return right_descents(sys, sys.inverse(g));
}

Word reduced_word(const CoxeterSystem& sys, const GroupElement& g) {
  Eigen::MatrixXd m = g.matrix();
  std::vector<int> reversed;
  for (;;) {
    int descent = 0;
    for (int s = 1; s <= sys.rank(); ++s) {
      if (sys.column_is_negative(m, s)) {
        descent = s;
        break;
      }
    }
    if (descent == 0) break;
    reversed.push_back(descent);
    m = m * sys.generator(descent);
  }
  return Word(std::vector<int>(reversed.rbegin(), reversed.rend()));
}

GroupElement demazure_product(const CoxeterSystem& sys, const Word& w) {
  sys.check_word(w);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(sys.rank(), sys.rank());
  for (int s : w) {
    // l(d s) > l(d) iff s is not a right descent of d.
    if (!sys.column_is_negative(m, s)) m = m * sys.generator(s);
  }
  return sys.from_matrix(std::move(m));
}

namespace {

// Depth-first search over subwords of q that are reduced expressions of pi.
// Tracks r = v^{-1} where v = u^{-1} pi is what remains to be produced after
// the chosen prefix u; letter q_k may be taken iff it is a left descent of v,
// i.e. column q_k of r is a negative root.
class ReducedSubwordSearch {
 public:
  ReducedSubwordSearch(const CoxeterSystem& sys, const Word& q, const GroupElement& pi)
      : sys_(sys), q_(q), pi_inverse_(sys.inverse(pi).matrix()), target_(length(sys, pi)) {
    sys.check_word(q);
  }

  bool any() {
    stop_at_first_ = true;
    found_.clear();
    run(0, pi_inverse_, target_, 0);
    return !found_.empty();
  }

  std::vector<std::uint64_t> all() {
    stop_at_first_ = false;
    found_.clear();
    run(0, pi_inverse_, target_, 0);
    return found_;
  }

 private:
  bool run(std::size_t pos, const Eigen::MatrixXd& r, int remaining, std::uint64_t taken) {
    if (remaining == 0) {
      found_.push_back(taken);
      return stop_at_first_;
    }
    if (static_cast<std::size_t>(remaining) > q_.size() - pos) return false;
    const int s = q_[pos];
    if (sys_.column_is_negative(r, s)) {
      if (run(pos + 1, r * sys_.generator(s), remaining - 1, taken | (std::uint64_t{1} << pos))) return true;
    }
    return run(pos + 1, r, remaining, taken);
  }

  const CoxeterSystem& sys_;
  const Word& q_;
  Eigen::MatrixXd pi_inverse_;
  int target_;
  bool stop_at_first_ = true;
  std::vector<std::uint64_t> found_;
};

}  // namespace

bool contains_reduced(const CoxeterSystem& sys, const Word& q, const GroupElement& pi) {
  if (q.size() > 64) throw InputError("words longer than 64 letters are not supported");
  return ReducedSubwordSearch(sys, q, pi).any();
}

std::vector<std::uint64_t> reduced_subword_masks(const CoxeterSystem& sys, const Word& q, const GroupElement& pi) {
  if (q.size() > 64) throw InputError("words longer than 64 letters are not supported");
  return ReducedSubwordSearch(sys, q, pi).all();
}

Word nil_reduce(const CoxeterSystem& sys, const Word& w) { return reduced_word(sys, element_of(sys, w)); }

Word apply_braid_move(const CoxeterSystem& sys, const Word& w, std::size_t pos, int i, int j) {
  sys.check_word(w);
  if (i == j) throw InputError("braid move needs two distinct generators");
  const int m = sys.m(i, j);
  if (pos < 1 || pos - 1 + static_cast<std::size_t>(m) > w.size())
    throw InputError("braid window at position " + std::to_string(pos) + " runs past the word");
  const Word window = alternating_word(i, j, static_cast<std::size_t>(m));
  std::vector<int> out = w.letters();
  for (int k = 0; k < m; ++k) {
    if (out[pos - 1 + k] != window[k])
      throw InputError("word " + w.str() + " has no window " + window.str() + " at position " + std::to_string(pos));
    out[pos - 1 + k] = (k % 2 == 0) ? j : i;
  }
  return Word(std::move(out));
}

std::vector<BraidSite> braid_sites(const CoxeterSystem& sys, const Word& w) {
  sys.check_word(w);
  std::vector<BraidSite> sites;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const int i = w[p], j = w[p + 1];
    if (i == j) continue;
    const auto m = static_cast<std::size_t>(sys.m(i, j));
    if (p + m > w.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < m && ok; ++k) ok = w[p + k] == ((k % 2 == 0) ? i : j);
    if (ok) sites.push_back({p + 1, i, j});
  }
  return sites;
}

std::set<Word> reduced_words(const CoxeterSystem& sys, const GroupElement& g, std::size_t cap) {
  std::set<Word> seen{reduced_word(sys, g)};
  std::deque<Word> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (const auto& site : braid_sites(sys, w)) {
      Word next = apply_braid_move(sys, w, site.pos, site.i, site.j);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("more than " + std::to_string(cap) + " reduced words");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

GroupElement longest_element(const CoxeterSystem& sys) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(sys.rank(), sys.rank());
  for (;;) {
    int ascent = 0;
    for (int s = 1; s <= sys.rank() && ascent == 0; ++s)
      if (!sys.column_is_negative(m, s)) ascent = s;
    if (ascent == 0) return sys.from_matrix(std::move(m));
    m = m * sys.generator(ascent);
  }
}

Word c_sorting_word(const CoxeterSystem& sys, const Word& c, const GroupElement& g) {
  sys.check_word(c);
  std::vector<int> sorted(c.begin(), c.end());
  std::sort(sorted.begin(), sorted.end());
  for (int s = 1; s <= sys.rank(); ++s)
    if (static_cast<int>(sorted.size()) != sys.rank() || sorted[static_cast<std::size_t>(s - 1)] != s)
      throw InputError("c must contain every generator exactly once");

  // r = v^{-1} with v = u^{-1} g the part of g still to be produced.
  Eigen::MatrixXd r = sys.inverse(g).matrix();
  int remaining = length(sys, g);
  std::vector<int> out;
  while (remaining > 0) {
    for (int s : c) {
      if (remaining == 0) break;
      if (sys.column_is_negative(r, s)) {
        out.push_back(s);
        r = r * sys.generator(s);
        --remaining;
      }
    }
  }
  return Word(std::move(out));
}

std::vector<std::pair<GroupElement, Word>> enumerate_elements(const CoxeterSystem& sys) {
  const auto order = sys.coxeter_matrix().group_order();
  if (order > sys.options().max_group_order)
    throw CapExceeded("group order " + std::to_string(order) + " exceeds the configured guard");
  std::vector<std::pair<GroupElement, Word>> out;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;
  out.emplace_back(sys.identity(), Word{});
  index.emplace(out.front().first, 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int s = 1; s <= sys.rank(); ++s) {
      GroupElement next = sys.times_generator(out[head].first, s);
      if (index.contains(next)) continue;
      Word w = out[head].second + Word{s};
      index.emplace(next, out.size());
      out.emplace_back(std::move(next), std::move(w));
    }
  }
  return out;
}

}  // namespace braidcx
