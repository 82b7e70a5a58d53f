#include "qh/matrix.hpp"

#include <stdexcept>

namespace qh {

ExactMatrix::ExactMatrix(Domain d, std::vector<std::vector<long>> rows) : dom_(d), n_(rows.size()), a_(n_ * n_) {
    for (size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) throw std::invalid_argument("matrix is not square");
        for (size_t j = 0; j < n_; ++j) at(i, j) = d.from_int(rows[i][j]);
    }
}

Scalar det_fraction_free(const ExactMatrix& m) {
    const Domain& d = m.domain();
    size_t n = m.size();
    if (n == 0) return d.from_int(1);
    ExactMatrix a = m;
    Scalar prev = d.from_int(1);
    bool negate = false;
    for (size_t c = 0; c + 1 < n; ++c) {
        size_t r = c;
        while (r < n && a.at(r, c) == 0) ++r;
        if (r == n) return d.from_int(0);
        if (r != c) {
            for (size_t l = c; l < n; ++l) std::swap(a.at(r, l), a.at(c, l));
            negate = !negate;
        }
        const Scalar piv = a.at(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t l = c + 1; l < n; ++l)
                a.at(i, l) = d.div(d.sub(d.mul(a.at(i, l), piv), d.mul(a.at(i, c), a.at(c, l))), prev);
            a.at(i, c) = 0;
        }
        prev = piv;
    }
    Scalar det = a.at(n - 1, n - 1);
    return negate ? d.neg(det) : det;
}

namespace {

using Grid = std::vector<std::vector<mpz_class>>;

// One elimination step at column c with rows/cols in [c, hi).
void bareiss_step(Grid& t, size_t c, size_t hi, const mpz_class& prev) {
    const mpz_class piv = t[c][c];
    mpz_class tmp;
    for (size_t i = c + 1; i < hi; ++i) {
        const mpz_class lead = t[i][c];
        for (size_t l = c + 1; l < hi; ++l) {
            tmp = t[i][l] * piv;
            if (lead != 0) tmp -= lead * t[c][l];
            if (prev != 1) mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            t[i][l].swap(tmp);
        }
        t[i][c] = 0;
    }
}

// Pivot search in column c among rows [c, hi); returns false when none exists.
bool pivot_rows(Grid& t, size_t c, size_t hi, int& sign) {
    size_t r = c;
    while (r < hi && t[r][c] == 0) ++r;
    if (r == hi) return false;
    if (r != c) {
        t[r].swap(t[c]);
        sign = -sign;
    }
    return true;
}

// Determinant of the block continuing a Bareiss sweep whose last pivot was prev.
mpz_class continue_block(Grid b, mpz_class prev) {
    size_t g = b.size();
    int sign = 1;
    for (size_t c = 0; c + 1 < g; ++c) {
        if (!pivot_rows(b, c, g, sign)) return 0;
        mpz_class piv = b[c][c];
        bareiss_step(b, c, g, prev);
        prev = piv;
    }
    mpz_class det = b[g - 1][g - 1];
    return sign < 0 ? mpz_class(-det) : det;
}

}  // namespace

std::vector<mpz_class> leading_principal_minors(const Grid& m, size_t limit) {
    if (limit > m.size()) throw std::invalid_argument("leading_principal_minors: limit exceeds dimension");
    Grid t(limit);
    for (size_t i = 0; i < limit; ++i) {
        if (m[i].size() < limit) throw std::invalid_argument("leading_principal_minors: ragged matrix");
        t[i].assign(m[i].begin(), m[i].begin() + limit);
    }
    std::vector<mpz_class> out(limit + 1);
    out[0] = 1;
    size_t k = 0;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t j = 1; j <= limit; ++j) {
        Grid b(j - k);
        for (size_t i = k; i < j; ++i) b[i - k].assign(t[i].begin() + k, t[i].begin() + j);
        mpz_class det = continue_block(std::move(b), prev);
        out[j] = sign < 0 ? mpz_class(-det) : det;
        if (det == 0) continue;
        // The leading j block is nonsingular, so pivots exist inside it and
        // row swaps stay within it; every larger block sees the same sweep.
        for (size_t c = k; c < j; ++c) {
            pivot_rows(t, c, j, sign);
            mpz_class piv = t[c][c];
            bareiss_step(t, c, limit, prev);
            prev = piv;
        }
        k = j;
    }
    return out;
}

}  // namespace qh
