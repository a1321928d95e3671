#include "hbf/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "hbf/errors.hpp"

namespace hbf::fft {

Plan::Plan(std::size_t size) : size_(size) {
  if (!is_power_of_two(size)) {
    throw InvalidArgument("fft: size must be a power of two, got " +
                          std::to_string(size));
  }
  bit_reverse_.resize(size);
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < size) ++bits;
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bit_reverse_[i] = r;
  }
  // Stage with half-length h reads its twiddles from [h - 1, 2h - 1), so the
  // butterfly loop walks them contiguously.
  twiddles_.resize(size > 1 ? size - 1 : 0);
  inverse_twiddles_.resize(twiddles_.size());
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t k = 0; k < half; ++k) {
      const double angle = -std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(half);
      twiddles_[half - 1 + k] = {std::cos(angle), std::sin(angle)};
      inverse_twiddles_[half - 1 + k] = std::conj(twiddles_[half - 1 + k]);
    }
  }
}

void Plan::forward(std::span<Complex> data) const { transform(data, twiddles_); }

void Plan::inverse(std::span<Complex> data) const {
  transform(data, inverse_twiddles_);
}

void Plan::transform(std::span<Complex> data,
                     const std::vector<Complex>& twiddles) const {
  if (data.size() != size_) {
    throw InvalidArgument("fft: buffer length does not match plan size");
  }
  for (std::size_t i = 0; i < size_; ++i) {
    const std::size_t j = bit_reverse_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  Complex* x = data.data();
  // First stage has the single twiddle 1.
  for (std::size_t i = 0; i + 1 < size_; i += 2) {
    const Complex u = x[i];
    const Complex v = x[i + 1];
    x[i] = u + v;
    x[i + 1] = u - v;
  }
  for (std::size_t half = 2; half < size_; half <<= 1) {
    const Complex* w = twiddles.data() + half - 1;
    for (std::size_t start = 0; start < size_; start += 2 * half) {
      Complex* lo = x + start;
      Complex* hi = lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = lo[k];
        const Complex v = multiply(hi[k], w[k]);
        lo[k] = u + v;
        hi[k] = u - v;
      }
    }
  }
}

const Plan& plan_for(std::size_t size) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<Plan>> plans;
  std::lock_guard lock(mutex);
  auto& slot = plans[size];
  if (!slot) slot = std::make_unique<Plan>(size);
  return *slot;
}

std::vector<Complex> forward_real(std::span<const double> signal) {
  std::vector<Complex> spectrum(signal.begin(), signal.end());
  plan_for(signal.size()).forward(spectrum);
  return spectrum;
}

SpectrumPair forward_real_pair(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("fft: paired signals must have equal length");
  }
  const std::size_t n = a.size();
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = {a[i], b[i]};
  plan_for(n).forward(z);
  SpectrumPair out{std::vector<Complex>(n), std::vector<Complex>(n)};
  for (std::size_t f = 0; f < n; ++f) {
    const Complex zf = z[f];
    const Complex zr = std::conj(z[(n - f) & (n - 1)]);
    out.a[f] = 0.5 * (zf + zr);
    // (zf - zr) / 2i
    const Complex diff = zf - zr;
    out.b[f] = {0.5 * diff.imag(), -0.5 * diff.real()};
  }
  return out;
}

std::vector<double> inverse_real(std::vector<Complex>&& spectrum) {
  std::vector<Complex> buffer = std::move(spectrum);
  plan_for(buffer.size()).inverse(buffer);
  const double scale = 1.0 / static_cast<double>(buffer.size());
  std::vector<double> out(buffer.size());
  for (std::size_t i = 0; i < buffer.size(); ++i) out[i] = buffer[i].real() * scale;
  return out;
}

std::vector<double> inverse_real(std::span<const Complex> spectrum) {
  return inverse_real(std::vector<Complex>(spectrum.begin(), spectrum.end()));
}

}  // namespace hbf::fft
