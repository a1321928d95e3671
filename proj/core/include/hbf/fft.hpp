#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hbf::fft {

using Complex = std::complex<double>;

// Plain (a+bi)(c+di). std::complex's operator* takes a slow library path to
// get Annex G infinities right; every input here is finite.
inline Complex multiply(Complex x, Complex y) noexcept {
  return {x.real() * y.real() - x.imag() * y.imag(),
          x.real() * y.imag() + x.imag() * y.real()};
}

constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

// Iterative radix-2 transform of a fixed power-of-two length. Twiddles are
// evaluated directly with cos/sin, not by recurrence.
class Plan {
 public:
  explicit Plan(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  // X[f] = sum_t x[t] exp(-2 pi i f t / n), in place.
  void forward(std::span<Complex> data) const;
  // Unnormalized inverse (positive exponent); callers divide by n.
  void inverse(std::span<Complex> data) const;

 private:
  void transform(std::span<Complex> data,
                 const std::vector<Complex>& twiddles) const;

  std::size_t size_;
  std::vector<std::size_t> bit_reverse_;
  std::vector<Complex> twiddles_;
  std::vector<Complex> inverse_twiddles_;
};

// Shared plan for a size; thread-safe, plans live for the process lifetime.
const Plan& plan_for(std::size_t size);

// DFT of a real signal (full complex spectrum of the same length).
std::vector<Complex> forward_real(std::span<const double> signal);

// Spectra of two equal-length real signals from one complex transform of
// a + i b, split with X[-f] = conj(X[f]).
struct SpectrumPair {
  std::vector<Complex> a;
  std::vector<Complex> b;
};
SpectrumPair forward_real_pair(std::span<const double> a, std::span<const double> b);

// Real part of the normalized inverse DFT.
std::vector<double> inverse_real(std::span<const Complex> spectrum);
std::vector<double> inverse_real(std::vector<Complex>&& spectrum);

}  // namespace hbf::fft
