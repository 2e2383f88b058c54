#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "zccs/gbf.hpp"

namespace zccs {

// Aperiodic correlation value stored exactly: counts[p] is the number of
// overlapping index pairs whose phase difference is p (pairs touching a
// masked/ZERO entry contribute nothing).  The complex value is
// sum_p counts[p] * omega^p with omega = exp(2*pi*i/q).
struct CorrelationValue {
  int q = 2;
  std::vector<std::int64_t> counts;

  explicit CorrelationValue(int q_ = 2) : q(q_), counts(q_, 0) {}

  std::int64_t total() const;
  std::complex<double> realize() const;

  // Exact for q in {2, 4} (the value lies in Z[i]); for larger even q the
  // realized magnitude is compared against 1e-7 scaled by the number of
  // summands.
  bool is_zero() const;

  CorrelationValue& operator+=(const CorrelationValue& other);
};

// ACCF of equal-length sequences at shift tau; |tau| >= L gives the empty
// (zero) value.  For tau < 0 the pairs are (a_i, b_{i+|tau|}), matching the
// conjugate-symmetric convention C(a,b)(tau) = conj(C(b,a)(-tau)).
CorrelationValue accf(const PhaseSequence& a, const PhaseSequence& b, int tau);
CorrelationValue accf(int q, std::span<const int> a, std::span<const int> b,
                      int tau);

inline CorrelationValue aacf(const PhaseSequence& a, int tau) {
  return accf(a, a, tau);
}

// An M x L matrix of Z_q phases: rows are the constituent sequences of a
// code, columns the chip-slot sequences.
struct PhaseMatrix {
  int q = 2;
  int rows = 0;
  int cols = 0;
  std::vector<int> data;  // row-major

  PhaseMatrix() = default;
  PhaseMatrix(int q_, int rows_, int cols_)
      : q(q_), rows(rows_), cols(cols_),
        data(static_cast<std::size_t>(rows_) * cols_, 0) {}

  int& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  int at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  std::span<const int> row(int r) const {
    return {data.data() + static_cast<std::size_t>(r) * cols,
            static_cast<std::size_t>(cols)};
  }
  PhaseSequence row_sequence(int r) const;
  PhaseSequence column_sequence(int c) const;

  // Entrywise phase negation: psi* of the underlying functions.
  PhaseMatrix conjugated() const;

  bool operator==(const PhaseMatrix&) const = default;
};

// Code-level ACCF: the row-wise ACCF sum at shift tau.
CorrelationValue code_correlation(const PhaseMatrix& a, const PhaseMatrix& b,
                                  int tau);

// Correlation values for every shift in (-L, L), indexed by tau + L - 1.
struct CorrelationTrace {
  int length = 0;  // L
  std::vector<CorrelationValue> values;

  const CorrelationValue& at(int tau) const {
    return values[static_cast<std::size_t>(tau + length - 1)];
  }
};

CorrelationTrace code_correlation_trace(const PhaseMatrix& a,
                                        const PhaseMatrix& b);

}  // namespace zccs
