#include "pffc/r4nr_kernels.hpp"

#include <algorithm>
#include <vector>

namespace pffc {

namespace {

constexpr int kMaxBlocks = 32;

struct BlockRange {
  int begin;
  int end;
};

// Fixed block partition of the sample range. The partition depends only on
// n, never on the thread count, so block-ordered reduction is reproducible.
std::vector<BlockRange> sample_blocks(int n) {
  const int blocks = std::min(n, kMaxBlocks);
  std::vector<BlockRange> out;
  out.reserve(blocks);
  for (int b = 0; b < blocks; ++b) {
    const int begin = static_cast<int>(static_cast<long>(n) * b / blocks);
    const int end = static_cast<int>(static_cast<long>(n) * (b + 1) / blocks);
    if (end > begin) out.push_back({begin, end});
  }
  return out;
}

}  // namespace

double r4nr_loss_serial(const Eigen::MatrixXd& predictors,
                        const Eigen::MatrixXd& responses,
                        const Eigen::MatrixXd& coeff) {
  const int n = static_cast<int>(predictors.cols());
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    total += (responses.col(i) - coeff * predictors.col(i)).norm();
  }
  return total / n;
}

double r4nr_loss_parallel(const Eigen::MatrixXd& predictors,
                          const Eigen::MatrixXd& responses,
                          const Eigen::MatrixXd& coeff) {
  const int n = static_cast<int>(predictors.cols());
  const auto blocks = sample_blocks(n);
  std::vector<double> partial(blocks.size(), 0.0);

#pragma omp parallel for schedule(static)
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    const auto [begin, end] = blocks[b];
    const int width = end - begin;
    Eigen::MatrixXd residual =
        responses.middleCols(begin, width) -
        coeff * predictors.middleCols(begin, width);
    double sum = 0.0;
    for (int j = 0; j < width; ++j) sum += residual.col(j).norm();
    partial[b] = sum;
  }

  double total = 0.0;
  for (double s : partial) total += s;
  return total / n;
}

Eigen::MatrixXd r4nr_subgradient_serial(const Eigen::MatrixXd& predictors,
                                        const Eigen::MatrixXd& responses,
                                        const Eigen::MatrixXd& coeff) {
  const int n = static_cast<int>(predictors.cols());
  Eigen::MatrixXd grad =
      Eigen::MatrixXd::Zero(coeff.rows(), coeff.cols());
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd r = responses.col(i) - coeff * predictors.col(i);
    const double rn = r.norm();
    if (rn == 0.0) continue;  // 0 is a valid subgradient at the kink
    grad.noalias() -= (r / rn) * predictors.col(i).transpose();
  }
  return grad / n;
}

Eigen::MatrixXd r4nr_subgradient_parallel(const Eigen::MatrixXd& predictors,
                                          const Eigen::MatrixXd& responses,
                                          const Eigen::MatrixXd& coeff) {
  const int n = static_cast<int>(predictors.cols());
  const auto blocks = sample_blocks(n);
  std::vector<Eigen::MatrixXd> partial(blocks.size());

#pragma omp parallel for schedule(static)
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    const auto [begin, end] = blocks[b];
    const int width = end - begin;
    Eigen::MatrixXd residual =
        responses.middleCols(begin, width) -
        coeff * predictors.middleCols(begin, width);
    for (int j = 0; j < width; ++j) {
      const double rn = residual.col(j).norm();
      if (rn == 0.0) {
        residual.col(j).setZero();
      } else {
        residual.col(j) /= -rn;
      }
    }
    partial[b].noalias() =
        residual * predictors.middleCols(begin, width).transpose();
  }

  Eigen::MatrixXd grad =
      Eigen::MatrixXd::Zero(coeff.rows(), coeff.cols());
  for (const auto& m : partial) grad += m;
  return grad / n;
}

}  // namespace pffc
