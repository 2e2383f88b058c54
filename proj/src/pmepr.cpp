#include "zccs/pmepr.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace zccs {

std::vector<double> envelope_power(const PhaseSequence& a, int oversample) {
  if (oversample < 1) {
    throw std::invalid_argument("envelope_power: oversample must be >= 1");
  }
  if (!a.unimodular()) {
    throw std::domain_error("envelope_power: sequence has masked entries");
  }
  const auto len = a.entries.size();
  const std::size_t samples = len * static_cast<std::size_t>(oversample);
  std::vector<double> power(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    double t = static_cast<double>(s) / static_cast<double>(samples);
    std::complex<double> sum = 0;
    for (std::size_t j = 0; j < len; ++j) {
      double angle = 2.0 * std::numbers::pi *
                     (static_cast<double>(a.entries[j]) / a.q +
                      static_cast<double>(j) * t);
      sum += std::complex<double>(std::cos(angle), std::sin(angle));
    }
    power[s] = std::norm(sum);
  }
  return power;
}

PmeprReport pmepr_sequence(const PhaseSequence& a, int oversample) {
  PmeprReport report;
  report.oversample = oversample;
  double peak = 0;
  for (double p : envelope_power(a, oversample)) peak = std::max(peak, p);
  report.value = peak / static_cast<double>(a.entries.size());
  return report;
}

PmeprReport pmepr_code_columns(const PhaseMatrix& code, int oversample) {
  PmeprReport report;
  report.oversample = oversample;
  report.per_column.reserve(static_cast<std::size_t>(code.cols));
  for (int c = 0; c < code.cols; ++c) {
    double v = pmepr_sequence(code.column_sequence(c), oversample).value;
    report.per_column.push_back(v);
    report.value = std::max(report.value, v);
  }
  return report;
}

CertificateReport golay_mate_certificates(const PhaseMatrix& code) {
  CertificateReport report;
  report.all_pass = true;
  const int rows = code.rows;
  if (rows <= 0 || (rows & (rows - 1)) != 0) {
    throw std::invalid_argument(
        "golay_mate_certificates: row count must be a power of two");
  }
  const int n = std::countr_zero(static_cast<unsigned>(rows));
  const int half = code.q / 2;

  for (int col = 0; col < code.cols; ++col) {
    ColumnCertificate cert;
    cert.column = col;
    PhaseSequence column = code.column_sequence(col);

    int gamma = -1;
    if (n <= 1) {
      gamma = 0;  // a single row variable (or none) is trivially a path end
    } else {
      Gbf fn = Gbf::from_values(code.q, n, column.entries);
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
      if (is_path_over(quadratic_graph(fn), all, half)) {
        gamma = graph_path(quadratic_graph(fn), half)->front();
      }
    }

    if (gamma < 0 || (n == 0)) {
      // no row variables: a length-1 column has no off-peak shifts
      cert.pass = n == 0;
      cert.mate_end_vertex = -1;
      if (n > 0) cert.violation_tau = 0;
    } else {
      cert.mate_end_vertex = gamma;
      PhaseSequence mate = column;
      for (int r = 0; r < rows; ++r) {
        if ((r >> gamma) & 1) {
          mate.entries[static_cast<std::size_t>(r)] =
              (mate.entries[static_cast<std::size_t>(r)] + half) % code.q;
        }
      }
      cert.pass = true;
      for (int tau = 1; tau < rows; ++tau) {
        CorrelationValue sum = aacf(column, tau);
        sum += aacf(mate, tau);
        if (!sum.is_zero()) {
          cert.pass = false;
          cert.violation_tau = tau;
          break;
        }
      }
    }
    report.all_pass = report.all_pass && cert.pass;
    report.columns.push_back(cert);
  }
  return report;
}

}  // namespace zccs
