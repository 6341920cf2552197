#pragma once

#include <Eigen/Dense>

namespace simplexeig {

// The n+1 equiangular unit vectors of the regular simplex frame in R^n,
// stored as columns of an n x (n+1) matrix. Immutable after construction
// and safe to share across threads.
class SimplexFrame {
public:
    int dimension() const { return n_; }
    int count() const { return n_ + 1; }
    const Eigen::MatrixXd& vectors() const { return vectors_; }
    Eigen::VectorXd vector(int k) const { return vectors_.col(k); }

private:
    friend SimplexFrame build_simplex_frame(int n);
    SimplexFrame(int n, Eigen::MatrixXd vectors) : n_(n), vectors_(std::move(vectors)) {}

    int n_;
    Eigen::MatrixXd vectors_;
};

// Builds the frame from the explicit closed form: the first n vectors are
// renormalized projections of the unit vectors onto the complement of the
// all-ones direction, the last is -(1/sqrt(n)) * ones. Throws
// std::invalid_argument for n < 2.
SimplexFrame build_simplex_frame(int n);

// Gramian V^T V: unit diagonal, every off-diagonal equal to -1/n.
// Constructed symmetric entry for entry.
Eigen::MatrixXd gramian(const SimplexFrame& frame);

// Worst-case violations of the four frame identities.
struct FrameCheck {
    double unit_norm_error;      // max | ||v_k|| - 1 |
    double gramian_error;        // max | <v_j, v_k> + 1/n |, j != k
    double vector_sum_error;     // max component of | sum_k v_k |
    double frame_operator_error; // max entry of | V V^T - (n+1)/n I |

    bool pass() const
    {
        return unit_norm_error <= 1e-14 && gramian_error <= 1e-14 &&
               vector_sum_error <= 1e-13 && frame_operator_error <= 1e-13;
    }
};

FrameCheck check_frame(const SimplexFrame& frame);

} // namespace simplexeig
