#include "braidcx/polynomial.hpp"

#include <algorithm>

#include "braidcx/error.hpp"

namespace braidcx {

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string term_list(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (out.empty()) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string monomial(std::int64_t c, const std::string& vars) {
  if (vars.empty()) return std::to_string(c);
  if (c == 1) return vars;
  if (c == -1) return "-" + vars;
  return std::to_string(c) + vars;
}

std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

HPoly HPoly::from_coefficients(std::vector<std::int64_t> coeffs) {
  HPoly p;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

void HPoly::normalize() {
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; })) coeffs_.clear();
}

bool HPoly::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

HPoly HPoly::operator+(const HPoly& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (degree() != other.degree())
    throw PreconditionError("adding homogeneous polynomials of degrees " + std::to_string(degree()) + " and " +
                            std::to_string(other.degree()));
  std::vector<std::int64_t> out(coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeffs_[k] + other.coeffs_[k];
  return from_coefficients(std::move(out));
}

HPoly HPoly::operator-(const HPoly& other) const { return *this + other * -1; }

HPoly HPoly::operator*(std::int64_t factor) const {
  std::vector<std::int64_t> out = coeffs_;
  for (auto& c : out) c *= factor;
  return from_coefficients(std::move(out));
}

HPoly HPoly::times_alpha_t() const {
  if (is_zero()) return {};
  std::vector<std::int64_t> out(coeffs_.size() + 2, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + 1);
  return from_coefficients(std::move(out));
}

std::string HPoly::str() const {
  std::vector<std::string> terms;
  const int n = degree();
  for (int k = 0; k <= n; ++k) {
    const auto c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    terms.push_back(monomial(c, power("a", k) + power("t", n - k)));
  }
  return term_list(terms);
}

GammaPoly GammaPoly::from_coefficients(std::vector<std::int64_t> coeffs) {
  GammaPoly p;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

void GammaPoly::normalize() {
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; })) coeffs_.clear();
}

bool GammaPoly::operator==(const GammaPoly& other) const {
  const auto n = std::max(coeffs_.size(), other.coeffs_.size());
  for (std::size_t k = 0; k < n; ++k)
    if ((*this)[k] != other[k]) return false;
  return true;
}

GammaPoly GammaPoly::operator+(const GammaPoly& other) const {
  std::vector<std::int64_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = (*this)[k] + other[k];
  return from_coefficients(std::move(out));
}

GammaPoly GammaPoly::operator-(const GammaPoly& other) const { return *this + other * -1; }

GammaPoly GammaPoly::operator*(std::int64_t factor) const {
  std::vector<std::int64_t> out = coeffs_;
  for (auto& c : out) c *= factor;
  return from_coefficients(std::move(out));
}

GammaPoly GammaPoly::times_tau() const {
  if (is_zero()) return {};
  std::vector<std::int64_t> out(coeffs_.size() + 1, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + 1);
  return from_coefficients(std::move(out));
}

std::string GammaPoly::str() const {
  std::vector<std::string> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    terms.push_back(monomial(coeffs_[k], power("τ", static_cast<int>(k))));
  }
  return term_list(terms);
}

GammaPoly gamma_of(const HPoly& h) {
  if (h.is_zero()) return {};
  if (!h.is_palindromic()) throw PreconditionError("not Dehn-Sommerville: h-vector is not palindromic");
  const int n = h.degree();
  std::vector<std::int64_t> rest = h.coefficients();
  std::vector<std::int64_t> gamma;
  for (int k = 0; 2 * k <= n; ++k) {
    const std::int64_t g = rest[static_cast<std::size_t>(k)];
    gamma.push_back(g);
    // subtract g (alpha t)^k (alpha + t)^(n - 2k)
    for (int j = 0; j <= n - 2 * k; ++j) rest[static_cast<std::size_t>(k + j)] -= g * binomial(n - 2 * k, j);
  }
  if (std::any_of(rest.begin(), rest.end(), [](std::int64_t c) { return c != 0; }))
    throw PreconditionError("not Dehn-Sommerville: gamma expansion leaves a remainder");
  return GammaPoly::from_coefficients(std::move(gamma));
}

HPoly h_of_gamma(const GammaPoly& gamma, int degree) {
  if (gamma.is_zero()) return {};
  std::vector<std::int64_t> out(static_cast<std::size_t>(degree + 1), 0);
  for (std::size_t k = 0; k < gamma.coefficients().size(); ++k) {
    const int kk = static_cast<int>(k);
    if (2 * kk > degree) throw PreconditionError("gamma degree too large for the requested H degree");
    for (int j = 0; j <= degree - 2 * kk; ++j)
      out[static_cast<std::size_t>(kk + j)] += gamma[k] * binomial(degree - 2 * kk, j);
  }
  return HPoly::from_coefficients(std::move(out));
}

}  // namespace braidcx
