#pragma once

#include "simplexeig/frame.hpp"

#include <vector>

namespace simplexeig {

// T = sum_k lambda_k v_k^{(x)d} kept in rank-one form; nothing here ever
// materializes the n^d array except the dense_tensor test oracle below.
// The enumeration routines assume unit weights; the weights stay in the
// data model for the contraction and energy paths.
struct SimplexTensor {
    SimplexFrame frame;
    int order; // d >= 2
    Eigen::VectorXd weights;

    int dimension() const { return frame.dimension(); }
};

// Regular simplex tensor: all weights equal to one.
SimplexTensor make_simplex_tensor(int n, int d);

// T . x^{d-1} = sum_k lambda_k <v_k, x>^{d-1} v_k
Eigen::VectorXd contract_pow(const SimplexTensor& t, const Eigen::VectorXd& x);

// T . x^{d-2} = sum_k lambda_k <v_k, x>^{d-2} v_k v_k^T (the full frame
// operator sum for d = 2). Symmetric by construction.
Eigen::MatrixXd contract_matrix(const SimplexTensor& t, const Eigen::VectorXd& x);

// J(x) = <T, x^{(x)d}> = sum_k lambda_k <v_k, x>^d
double energy(const SimplexTensor& t, const Eigen::VectorXd& x);

// Fully materialized supersymmetric array, row-major over the d indices.
// Guarded to n^d <= 10^7 entries (std::length_error beyond). Test oracle,
// not a production path.
std::vector<double> dense_tensor(const SimplexTensor& t);

// Contraction of the dense array against x^{d-1}; oracle counterpart of
// contract_pow.
Eigen::VectorXd dense_contract_pow(const SimplexTensor& t, const std::vector<double>& dense,
                                   const Eigen::VectorXd& x);

} // namespace simplexeig
