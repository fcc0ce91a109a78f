#pragma once

#include "blochpath/types.hpp"

namespace blochpath {

/// Maps normalized amplitudes to the Bloch vector
///   X = 2(C0r C1r + C0i C1i),  Y = 2(C0r C1i - C0i C1r),  Z = 2|C0|^2 - 1.
/// Throws ValidationError if |c0|^2+|c1|^2 deviates from 1 by more than norm_tol.
BlochVector bloch_from_amplitudes(const QubitAmplitudes& s, double norm_tol = 1e-6);

/// State cos(theta/2)|0> + sin(theta/2)|1>; real amplitudes, exactly normalized.
QubitAmplitudes initial_qubit_state(double theta0);

/// Inverse of bloch_from_amplitudes up to global phase, for points on the unit
/// sphere (c0 chosen real and nonnegative).
QubitAmplitudes amplitudes_from_bloch(const BlochVector& r);

}  // namespace blochpath
