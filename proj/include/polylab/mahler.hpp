#pragma once

#include <complex>
#include <vector>

#include "polylab/intpoly.hpp"

namespace polylab {

struct RootSet {
    std::vector<std::complex<long double>> roots;  // multiplicity included
    long double max_err;                           // per-root error estimate
    int iterations;
};

// All complex roots by simultaneous (Aberth-Ehrlich) iteration.  The input
// must be squarefree for the residual target to be reachable; callers that
// may hold repeated roots should decompose first (mahler_measure does).
// Throws convergence_error when the residual target is not met within
// max_iter sweeps.
RootSet complex_roots(const IntPoly& p, double tol = 1e-12, int max_iter = 500);

struct MahlerResult {
    double value;
    double error_bound;
};

// Mahler measure |lc| * prod max(1, |root|).  Degree capped at 16.
// Internally splits off repeated factors (Yun) so the root iteration only
// ever sees squarefree polynomials.
MahlerResult mahler_measure(const IntPoly& p, double tol = 1e-12);

}  // namespace polylab
