#pragma once

#include "qh/domain.hpp"

#include <vector>

namespace qh {

class ExactMatrix {
public:
    ExactMatrix(Domain d, size_t n) : dom_(d), n_(n), a_(n * n) {}
    ExactMatrix(Domain d, std::vector<std::vector<long>> rows);

    const Domain& domain() const { return dom_; }
    size_t size() const { return n_; }
    Scalar& at(size_t i, size_t j) { return a_[i * n_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

private:
    Domain dom_;
    size_t n_;
    std::vector<Scalar> a_;
};

// Bareiss elimination with row pivoting. Dimension 0 gives 1.
Scalar det_fraction_free(const ExactMatrix& m);

// Determinants of all leading principal j x j blocks, j = 0..limit, of an
// integer matrix. One Bareiss sweep is shared between the blocks: the sweep
// only advances past column c once the block it has reached is known to be
// nonsingular, and vanishing blocks are settled on a copy of the trailing part.
std::vector<mpz_class> leading_principal_minors(const std::vector<std::vector<mpz_class>>& m, size_t limit);

}  // namespace qh
