#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hbf {

/// Dense real vector of fixed dimension; the carrier for keys, values,
/// bindings and memories. Entries are always finite.
class HyperVector {
 public:
  /// Zero vector. Throws InvalidArgument for dim == 0.
  explicit HyperVector(std::size_t dim);
  /// Takes ownership of `values`. Throws InvalidArgument if empty or if any
  /// entry is NaN/Inf.
  explicit HyperVector(std::vector<double> values);

  /// e0 = [1, 0, ..., 0], the identity of circular convolution.
  static HyperVector impulse(std::size_t dim);

  std::size_t dim() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  HyperVector& operator+=(const HyperVector& other);
  // this += scale * other
  void add_scaled(const HyperVector& other, double scale);
  HyperVector scaled(double factor) const;

  friend bool operator==(const HyperVector&, const HyperVector&) = default;

 private:
  std::vector<double> values_;
};

/// HyperVector whose entries are exactly +1.0 or -1.0, so ||v||^2 == dim.
class SignVector {
 public:
  /// Throws InvalidArgument unless every entry is exactly +1 or -1.
  explicit SignVector(std::vector<double> signs);

  std::size_t dim() const noexcept { return vector_.dim(); }
  double operator[](std::size_t i) const noexcept { return vector_[i]; }
  std::span<const double> values() const noexcept { return vector_.values(); }
  const HyperVector& vector() const noexcept { return vector_; }
  operator const HyperVector&() const noexcept { return vector_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  HyperVector vector_;
};

double inner_product(const HyperVector& a, const HyperVector& b);
double squared_norm(const HyperVector& a) noexcept;
double norm(const HyperVector& a) noexcept;
/// Throws InvalidArgument if either vector is zero.
double cosine(const HyperVector& a, const HyperVector& b);

// Circular convolution (a*b)[t] = sum_j a[j] b[(t-j) mod d].
HyperVector convolve_naive(const HyperVector& a, const HyperVector& b);
// Spectral route; dim must be a power of two.
HyperVector convolve_fft(const HyperVector& a, const HyperVector& b);
// FFT for power-of-two dims, naive otherwise.
HyperVector convolve(const HyperVector& a, const HyperVector& b);

// Circular correlation (a (*) b)[t] = sum_j a[j] b[(t+j) mod d];
// spectrally conj(F(a)) . F(b).
HyperVector correlate_naive(const HyperVector& a, const HyperVector& b);
HyperVector correlate_fft(const HyperVector& a, const HyperVector& b);
HyperVector correlate(const HyperVector& a, const HyperVector& b);

}  // namespace hbf
