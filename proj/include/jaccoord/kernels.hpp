#pragma once

#include "jaccoord/bipoly.hpp"

// Multiplication kernels behind BiPoly::operator*. The sparse kernel is the
// serial reference; the dense kernel clears denominators and convolves the
// integer coefficient grid column by column with an OpenMP parallel loop.
namespace jaccoord::kernels {

BiPoly mul_sparse_reference(const BiPoly& a, const BiPoly& b);
BiPoly mul_dense_parallel(const BiPoly& a, const BiPoly& b);

/// Picks a kernel from operand sizes. Both kernels return identical results.
BiPoly mul(const BiPoly& a, const BiPoly& b);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace jaccoord::kernels
