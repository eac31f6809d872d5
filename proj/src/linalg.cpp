#include "sshl/linalg.hpp"

#include <utility>

namespace sshl {

namespace {

void require_square(const Matrix& a)
{
    for (const auto& row : a)
        if (row.size() != a.size())
            throw dimension_mismatch("matrix is not square");
}

} // namespace

Q det_exact(const Matrix& a)
{
    require_square(a);
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (const Q& v : a[i])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
        scale *= l;
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        // Each update is an exact division by the previous pivot.
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    Q out(m[n - 1][n - 1] * sign, scale);
    out.canonicalize();
    return out;
}

Q pfaffian_exact(const Matrix& a)
{
    require_square(a);
    const std::size_t n = a.size();
    if (n % 2)
        throw dimension_mismatch("pfaffian needs even order");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j] != -a[j][i])
                throw dimension_mismatch("pfaffian needs an antisymmetric matrix");
    if (n == 0)
        return 1;
    Q out = 0;
    for (std::size_t j = 1; j < n; ++j) {
        if (a[0][j] == 0)
            continue;
        Matrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            if (r == j)
                continue;
            std::vector<Q> row;
            for (std::size_t c = 1; c < n; ++c)
                if (c != j)
                    row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        Q term = a[0][j] * pfaffian_exact(minor);
        // Sign (-1)^{j+1} with 1-based column j+1 and row 1.
        out += (j % 2 == 1) ? term : Q(-term);
    }
    return out;
}

} // namespace sshl
