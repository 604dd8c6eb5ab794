#pragma once

#include <complex>

#include "sunbeam/cyclo.hpp"
#include "sunbeam/transition.hpp"

namespace sunbeam {

struct RyserOptions {
    /// Largest matrix side accepted; Ryser is O(2^n), so this is a guard,
    /// not a hard constant. Raise deliberately for big single shots.
    int max_side = 20;
    /// Worker threads; 0 picks hardware concurrency. Output is identical
    /// for any value.
    int jobs = 1;
};

/// Factorial-time permanent over the cyclotomic ring; oracle only,
/// refuses sides above 9.
CycloPoly permanent_naive(const ExponentMatrix& m);

/// Gray-coded Ryser permanent over the cyclotomic ring. Exact; equals
/// permanent_naive on the overlap domain.
CycloPoly permanent_ryser(const ExponentMatrix& m, const RyserOptions& opts = {});

/// Perm(Lambda(t)); zero iff the physical amplitude is zero.
CycloPoly amplitude_unnormalized(const Transition& t, const RyserOptions& opts = {});

/// Physical amplitude with the N^(-n/2) and factorial factors restored.
std::complex<double> amplitude_normalized(const Transition& t, const RyserOptions& opts = {});

}  // namespace sunbeam
