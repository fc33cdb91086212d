#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidcx {

/// Homogeneous polynomial sum_k c_k alpha^k t^(n-k) with integer
/// coefficients. The zero polynomial has no degree and is compatible with
/// every degree under addition.
class HPoly {
 public:
  HPoly() = default;  // zero
  /// From an h-vector (h_0, ..., h_n); degree n = size - 1.
  static HPoly from_coefficients(std::vector<std::int64_t> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  /// Symmetric in alpha and t.
  bool is_palindromic() const;

  HPoly operator+(const HPoly& other) const;
  HPoly operator-(const HPoly& other) const;
  HPoly operator*(std::int64_t factor) const;
  /// alpha * t * this
  HPoly times_alpha_t() const;

  bool operator==(const HPoly&) const = default;

  /// "1 + 3αt + α²"-style rendering in the variables a and t.
  std::string str() const;

 private:
  void normalize();
  std::vector<std::int64_t> coeffs_;
};

/// gamma_0 + gamma_1 tau + ... ; the zero polynomial has no coefficients.
/// Trailing zero coefficients are kept so gamma of a square reads (1, 0).
class GammaPoly {
 public:
  GammaPoly() = default;
  static GammaPoly from_coefficients(std::vector<std::int64_t> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  /// gamma_k, zero past the end.
  std::int64_t operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

  GammaPoly operator+(const GammaPoly& other) const;
  GammaPoly operator-(const GammaPoly& other) const;
  GammaPoly operator*(std::int64_t factor) const;
  GammaPoly times_tau() const;

  /// Coefficientwise; trailing zeros are insignificant.
  bool operator==(const GammaPoly& other) const;
  std::string str() const;

 private:
  void normalize();
  std::vector<std::int64_t> coeffs_;
};

/// Unique gamma with H = sum_k gamma_k (alpha t)^k (alpha + t)^(n - 2k),
/// found by peeling the lowest alpha-power term. Throws PreconditionError
/// ("not Dehn-Sommerville") when H is not palindromic. gamma(0) = 0.
GammaPoly gamma_of(const HPoly& h);

/// Inverse transform, used to check the expansion.
HPoly h_of_gamma(const GammaPoly& gamma, int degree);

}  // namespace braidcx
