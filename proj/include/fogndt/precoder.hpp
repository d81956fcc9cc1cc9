// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

namespace fogndt {

// Which channel view a precoder set was computed from. The edge knows the
// true channel; the cloud only its degraded estimate.
enum class CsiBasis { TrueChannel, CloudEstimate };

// Column k is the unit-norm beamforming vector for user k's stream.
struct PrecoderSet {
  Eigen::MatrixXcd vectors;
  CsiBasis basis = CsiBasis::TrueChannel;
};

// Zero-forcing beamformers: column k spans the null space of the channel
// rows of all other users, so rows(k') * vectors.col(k) == 0 for k' != k
// under the plain (unconjugated) transpose the downlink model uses.
//
// The null vector of each (K-1) x K submatrix is fixed deterministically:
// its largest-modulus component (lowest index on ties) is rotated to the
// positive real axis. Throws NumericalError when a submatrix is rank
// deficient and the null space is not one-dimensional.
PrecoderSet zf_precoders(const Eigen::MatrixXcd& channel_rows, CsiBasis basis);

}  // namespace fogndt
