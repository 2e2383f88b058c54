#pragma once

#include <vector>

#include "zccs/correlation.hpp"
#include "zccs/gbf.hpp"

namespace zccs {

// Peak-to-mean envelope power of the multicarrier signal built from a
// sequence.  The peak is sampled on an equispaced grid of oversample * length
// points in [0, 1), so the reported value is a lower bound on the true
// supremum; the Golay-mate certificate supplies the rigorous <= 2 bound.
struct PmeprReport {
  double value = 0.0;
  int oversample = 1;
  std::vector<double> per_column;  // filled by pmepr_code_columns
};

// |S(t)|^2 on the sampling grid, S(t) = sum_j omega^{a_j} e^{2 pi i j t}.
std::vector<double> envelope_power(const PhaseSequence& a, int oversample);

PmeprReport pmepr_sequence(const PhaseSequence& a, int oversample);

// Per-column PMEPR of a code; value is the maximum over columns.
PmeprReport pmepr_code_columns(const PhaseMatrix& code, int oversample);

// Certificate that a code column lies in a Golay complementary pair: the
// column's phase vector is interpolated back to a function of the row
// variables, whose quadratic graph must be a Hamiltonian path with edge
// weights q/2; the mate adds q/2 times an end variable, and the summed
// auto-correlations must vanish exactly off peak.
struct ColumnCertificate {
  int column = 0;
  int mate_end_vertex = -1;  // row variable added to form the mate
  bool pass = false;
  int violation_tau = 0;     // first off-peak shift with nonzero sum, if any
};

struct CertificateReport {
  bool all_pass = false;
  std::vector<ColumnCertificate> columns;
};

CertificateReport golay_mate_certificates(const PhaseMatrix& code);

}  // namespace zccs
