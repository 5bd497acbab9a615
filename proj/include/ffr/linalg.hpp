#pragma once
// Dense exact linear algebra over Q.

#include <vector>

#include "ffr/core.hpp"

namespace ffr {

using QMatrix = std::vector<std::vector<Q>>;

int rank_of(QMatrix m);
// basis of {v : m v = 0}, m is rows x cols
std::vector<std::vector<Q>> nullspace(QMatrix m, int cols);
QMatrix matmul(const QMatrix& a, const QMatrix& b);
QMatrix identity_matrix(int n);

}  // namespace ffr
