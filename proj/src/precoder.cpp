// SPDX-License-Identifier: Apache-2.0
#include "fogndt/precoder.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fogndt/errors.hpp"

namespace fogndt {
namespace {

constexpr double kRankTolerance = 1e-12;

// Rotate the largest-modulus component (lowest index on ties) onto the
// positive real axis so the vector returned for a given submatrix does not
// depend on the SVD's arbitrary per-column phase.
void fix_phase(Eigen::VectorXcd& v) {
  int pivot = 0;
  double best = std::abs(v(0));
  for (int i = 1; i < v.size(); ++i) {
    double mag = std::abs(v(i));
    if (mag > best) {
      best = mag;
      pivot = i;
    }
  }
  if (best == 0.0) return;
  std::complex<double> rotation = std::conj(v(pivot)) / best;
  v *= rotation;
}

}  // namespace

PrecoderSet zf_precoders(const Eigen::MatrixXcd& channel_rows, CsiBasis basis) {
  const int num_nodes = static_cast<int>(channel_rows.rows());
  if (num_nodes < 1 || channel_rows.cols() != num_nodes)
    throw std::invalid_argument("channel matrix must be square");

  PrecoderSet set;
  set.basis = basis;
  set.vectors = Eigen::MatrixXcd::Zero(num_nodes, num_nodes);
  if (num_nodes == 1) {
    set.vectors(0, 0) = 1.0;
    return set;
  }

  Eigen::MatrixXcd others(num_nodes - 1, num_nodes);
  for (int user = 0; user < num_nodes; ++user) {
    int out = 0;
    for (int row = 0; row < num_nodes; ++row)
      if (row != user) others.row(out++) = channel_rows.row(row);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(others, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (!(sv(num_nodes - 2) > kRankTolerance * sv(0)))
      throw NumericalError("rank-deficient channel: zero-forcing null space is not unique");

    Eigen::VectorXcd null_vector = svd.matrixV().col(num_nodes - 1);
    fix_phase(null_vector);
    set.vectors.col(user) = null_vector;
  }
  return set;
}

}  // namespace fogndt
