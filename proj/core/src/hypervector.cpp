#include "hbf/hypervector.hpp"

#include <cmath>
#include <string>

#include "hbf/errors.hpp"
#include "hbf/fft.hpp"

namespace hbf {
namespace {

void require_same_dim(const HyperVector& a, const HyperVector& b,
                      const char* op) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument(std::string(op) + ": dimension mismatch (" +
                          std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()) + ")");
  }
}

double dot(const double* x, const double* y, std::size_t n) noexcept {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += x[i] * y[i];
    s1 += x[i + 1] * y[i + 1];
    s2 += x[i + 2] * y[i + 2];
    s3 += x[i + 3] * y[i + 3];
  }
  for (; i < n; ++i) s0 += x[i] * y[i];
  return (s0 + s1) + (s2 + s3);
}

// out[t] = sum_j a[j] w[start(j) + t], with w holding two periods. Looping
// over j outside keeps the inner loop a contiguous update across t, which
// the compiler vectorizes; the summation order is still fixed.
template <typename StartFn>
HyperVector cyclic_products(const HyperVector& a, std::vector<double> w,
                            StartFn start) {
  const std::size_t d = a.dim();
  w.insert(w.end(), w.begin(), w.end());
  std::vector<double> out(d, 0.0);
  const double* av = a.values().data();
  double* o = out.data();
  std::size_t j = 0;
  for (; j + 4 <= d; j += 4) {
    const double a0 = av[j], a1 = av[j + 1], a2 = av[j + 2], a3 = av[j + 3];
    const double* w0 = w.data() + start(j);
    const double* w1 = w.data() + start(j + 1);
    const double* w2 = w.data() + start(j + 2);
    const double* w3 = w.data() + start(j + 3);
    for (std::size_t t = 0; t < d; ++t) {
      o[t] += (a0 * w0[t] + a1 * w1[t]) + (a2 * w2[t] + a3 * w3[t]);
    }
  }
  for (; j < d; ++j) {
    const double aj = av[j];
    const double* wj = w.data() + start(j);
    for (std::size_t t = 0; t < d; ++t) o[t] += aj * wj[t];
  }
  return HyperVector(std::move(out));
}

void require_fft_dim(std::size_t d, const char* op) {
  if (!fft::is_power_of_two(d)) {
    throw InvalidArgument(std::string(op) +
                          ": FFT path requires a power-of-two dimension, got " +
                          std::to_string(d));
  }
}

}  // namespace

HyperVector::HyperVector(std::size_t dim) : values_(dim, 0.0) {
  if (dim == 0) throw InvalidArgument("HyperVector: dimension must be positive");
}

HyperVector::HyperVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidArgument("HyperVector: dimension must be positive");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidArgument("HyperVector: non-finite entry at index " +
                            std::to_string(i));
    }
  }
}

HyperVector HyperVector::impulse(std::size_t dim) {
  HyperVector e(dim);
  e.values_[0] = 1.0;
  return e;
}

HyperVector& HyperVector::operator+=(const HyperVector& other) {
  require_same_dim(*this, other, "operator+=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

void HyperVector::add_scaled(const HyperVector& other, double scale) {
  require_same_dim(*this, other, "add_scaled");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] += scale * other.values_[i];
  }
}

HyperVector HyperVector::scaled(double factor) const {
  std::vector<double> out(values_);
  for (double& x : out) x *= factor;
  return HyperVector(std::move(out));
}

SignVector::SignVector(std::vector<double> signs) : vector_(std::move(signs)) {
  for (std::size_t i = 0; i < vector_.dim(); ++i) {
    if (vector_[i] != 1.0 && vector_[i] != -1.0) {
      throw InvalidArgument("SignVector: entry " + std::to_string(i) +
                            " is not +1 or -1");
    }
  }
}

double inner_product(const HyperVector& a, const HyperVector& b) {
  require_same_dim(a, b, "inner_product");
  return dot(a.values().data(), b.values().data(), a.dim());
}

double squared_norm(const HyperVector& a) noexcept {
  return dot(a.values().data(), a.values().data(), a.dim());
}

double norm(const HyperVector& a) noexcept { return std::sqrt(squared_norm(a)); }

double cosine(const HyperVector& a, const HyperVector& b) {
  require_same_dim(a, b, "cosine");
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) {
    throw InvalidArgument("cosine: zero vector has no direction");
  }
  return inner_product(a, b) / (na * nb);
}

HyperVector convolve_naive(const HyperVector& a, const HyperVector& b) {
  require_same_dim(a, b, "convolve_naive");
  const std::size_t d = a.dim();
  // b[(t - j) mod d] == w[d - j + t] over two periods of b.
  const auto bv = b.values();
  return cyclic_products(a, std::vector<double>(bv.begin(), bv.end()),
                         [d](std::size_t j) { return d - j; });
}

HyperVector correlate_naive(const HyperVector& a, const HyperVector& b) {
  require_same_dim(a, b, "correlate_naive");
  const auto bv = b.values();
  return cyclic_products(a, std::vector<double>(bv.begin(), bv.end()),
                         [](std::size_t j) { return j; });
}

HyperVector convolve_fft(const HyperVector& a, const HyperVector& b) {
  require_same_dim(a, b, "convolve_fft");
  require_fft_dim(a.dim(), "convolve_fft");
  auto [fa, fb] = fft::forward_real_pair(a.values(), b.values());
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] = fft::multiply(fa[i], fb[i]);
  return HyperVector(fft::inverse_real(std::move(fa)));
}

HyperVector correlate_fft(const HyperVector& a, const HyperVector& b) {
  require_same_dim(a, b, "correlate_fft");
  require_fft_dim(a.dim(), "correlate_fft");
  auto [fa, fb] = fft::forward_real_pair(a.values(), b.values());
  for (std::size_t i = 0; i < fa.size(); ++i) {
    fa[i] = fft::multiply(std::conj(fa[i]), fb[i]);
  }
  return HyperVector(fft::inverse_real(std::move(fa)));
}

HyperVector convolve(const HyperVector& a, const HyperVector& b) {
  return fft::is_power_of_two(a.dim()) ? convolve_fft(a, b) : convolve_naive(a, b);
}

HyperVector correlate(const HyperVector& a, const HyperVector& b) {
  return fft::is_power_of_two(a.dim()) ? correlate_fft(a, b)
                                       : correlate_naive(a, b);
}

}  // namespace hbf
