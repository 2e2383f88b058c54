#include "zccs/correlation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zccs {

std::int64_t CorrelationValue::total() const {
  std::int64_t t = 0;
  for (std::int64_t c : counts) t += c;
  return t;
}

std::complex<double> CorrelationValue::realize() const {
  std::complex<double> v = 0;
  for (int p = 0; p < q; ++p) {
    if (counts[p] == 0) continue;
    double angle = 2.0 * std::numbers::pi * p / q;
    v += static_cast<double>(counts[p]) *
         std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return v;
}

bool CorrelationValue::is_zero() const {
  if (q == 2) return counts[0] == counts[1];
  if (q == 4) return counts[0] == counts[2] && counts[1] == counts[3];
  double eps = 1e-7 * static_cast<double>(std::max<std::int64_t>(1, total()));
  return std::abs(realize()) < eps;
}

CorrelationValue& CorrelationValue::operator+=(const CorrelationValue& other) {
  if (other.q != q) throw std::invalid_argument("CorrelationValue: q mismatch");
  for (int p = 0; p < q; ++p) counts[p] += other.counts[p];
  return *this;
}

CorrelationValue accf(int q, std::span<const int> a, std::span<const int> b,
                      int tau) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("accf: sequences must have equal length");
  }
  CorrelationValue v(q);
  auto len = static_cast<std::int64_t>(a.size());
  if (tau >= 0) {
    for (std::int64_t i = 0; i + tau < len; ++i) {
      int pa = a[static_cast<std::size_t>(i + tau)];
      int pb = b[static_cast<std::size_t>(i)];
      if (pa == PhaseSequence::kZero || pb == PhaseSequence::kZero) continue;
      ++v.counts[((pa - pb) % q + q) % q];
    }
  } else {
    for (std::int64_t i = 0; i - tau < len; ++i) {
      int pa = a[static_cast<std::size_t>(i)];
      int pb = b[static_cast<std::size_t>(i - tau)];
      if (pa == PhaseSequence::kZero || pb == PhaseSequence::kZero) continue;
      ++v.counts[((pa - pb) % q + q) % q];
    }
  }
  return v;
}

CorrelationValue accf(const PhaseSequence& a, const PhaseSequence& b, int tau) {
  if (a.q != b.q) throw std::invalid_argument("accf: q mismatch");
  return accf(a.q, a.entries, b.entries, tau);
}

PhaseSequence PhaseMatrix::row_sequence(int r) const {
  PhaseSequence s;
  s.q = q;
  auto rv = row(r);
  s.entries.assign(rv.begin(), rv.end());
  return s;
}

PhaseSequence PhaseMatrix::column_sequence(int c) const {
  PhaseSequence s;
  s.q = q;
  s.entries.resize(rows);
  for (int r = 0; r < rows; ++r) s.entries[r] = at(r, c);
  return s;
}

PhaseMatrix PhaseMatrix::conjugated() const {
  PhaseMatrix out = *this;
  for (int& e : out.data) {
    if (e != PhaseSequence::kZero) e = (q - e) % q;
  }
  return out;
}

CorrelationValue code_correlation(const PhaseMatrix& a, const PhaseMatrix& b,
                                  int tau) {
  if (a.q != b.q || a.rows != b.rows || a.cols != b.cols) {
    throw std::invalid_argument("code_correlation: shape mismatch");
  }
  CorrelationValue v(a.q);
  for (int r = 0; r < a.rows; ++r) {
    v += accf(a.q, a.row(r), b.row(r), tau);
  }
  return v;
}

CorrelationTrace code_correlation_trace(const PhaseMatrix& a,
                                        const PhaseMatrix& b) {
  CorrelationTrace trace;
  trace.length = a.cols;
  trace.values.reserve(2 * a.cols - 1);
  for (int tau = -(a.cols - 1); tau <= a.cols - 1; ++tau) {
    trace.values.push_back(code_correlation(a, b, tau));
  }
  return trace;
}

}  // namespace zccs
