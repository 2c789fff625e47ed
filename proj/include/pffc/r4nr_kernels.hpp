#ifndef PFFC_R4NR_KERNELS_HPP_
#define PFFC_R4NR_KERNELS_HPP_

#include <Eigen/Dense>

namespace pffc {

// Loss and full-subgradient kernels for the robust multi-output regression
// objective (1/n) sum_i ||y_i - c x_i||_2 with predictors p x n, responses
// q x n and coefficients q x p.
//
// The *_serial variants are the plain column-loop reference; the *_parallel
// variants block the sample range, compute each block with dense matrix
// products (OpenMP across blocks), and combine partial results in block
// order so the answer does not depend on the thread count.

double r4nr_loss_serial(const Eigen::MatrixXd& predictors,
                        const Eigen::MatrixXd& responses,
                        const Eigen::MatrixXd& coeff);

double r4nr_loss_parallel(const Eigen::MatrixXd& predictors,
                          const Eigen::MatrixXd& responses,
                          const Eigen::MatrixXd& coeff);

// (1/n) sum_i -(r_i / ||r_i||) x_i^T with the i-th term zero when r_i = 0.
Eigen::MatrixXd r4nr_subgradient_serial(const Eigen::MatrixXd& predictors,
                                        const Eigen::MatrixXd& responses,
                                        const Eigen::MatrixXd& coeff);

Eigen::MatrixXd r4nr_subgradient_parallel(const Eigen::MatrixXd& predictors,
                                          const Eigen::MatrixXd& responses,
                                          const Eigen::MatrixXd& coeff);

}  // namespace pffc

#endif  // PFFC_R4NR_KERNELS_HPP_
