#include "adreal/linalg.hpp"

#include <utility>

namespace adreal {

MatrixH to_quaternionic(const MatrixC& a)
{
    MatrixH out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = Quaternion(a(i, j));
    return out;
}

MatrixC to_complex(const MatrixH& a)
{
    MatrixC out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& q = a(i, j);
            if (!q.is_complex())
                throw DimensionMismatch("quaternionic entry " + to_string(q) + " is not complex");
            out(i, j) = Gaussian(q.a0, q.a1);
        }
    return out;
}

MatrixC to_complex(const MatrixQ& a)
{
    MatrixC out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = Gaussian(a(i, j));
    return out;
}

namespace {

// Gaussian integers, only as the working ring of the fraction-free elimination.
struct GInt {
    mpz_class re;
    mpz_class im;

    bool is_zero() const { return re == 0 && im == 0; }
};

GInt mul(const GInt& a, const GInt& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt sub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

// a / b where b divides a in Z[i].
GInt divexact(const GInt& a, const GInt& b)
{
    const mpz_class norm = b.re * b.re + b.im * b.im;
    GInt num = mul(a, GInt{b.re, -b.im});
    GInt out;
    mpz_divexact(out.re.get_mpz_t(), num.re.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(out.im.get_mpz_t(), num.im.get_mpz_t(), norm.get_mpz_t());
    return out;
}

// Rows scaled by the lcm of their denominators. `scales` receives the factor per row.
std::vector<std::vector<GInt>> integral_rows(const MatrixC& a, std::vector<mpz_class>* scales)
{
    std::vector<std::vector<GInt>> rows(a.rows(), std::vector<GInt>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).re.get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).im.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            rows[i][j].re = a(i, j).re.get_num() * (l / a(i, j).re.get_den());
            rows[i][j].im = a(i, j).im.get_num() * (l / a(i, j).im.get_den());
        }
        if (scales)
            scales->push_back(l);
    }
    return rows;
}

// Fraction-free echelon in place. Returns the rank; `swaps` counts row exchanges.
std::size_t bareiss(std::vector<std::vector<GInt>>& m, std::size_t cols, int* swaps)
{
    const std::size_t rows = m.size();
    GInt prev{1, 0};
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            if (swaps)
                ++*swaps;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = divexact(sub(mul(m[i][j], m[r][c]), mul(m[i][c], m[r][j])), prev);
            m[i][c] = GInt{0, 0};
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

} // namespace

std::size_t exact_rank(const MatrixC& a)
{
    if (a.rows() == 0 || a.cols() == 0)
        return 0;
    auto m = integral_rows(a, nullptr);
    return bareiss(m, a.cols(), nullptr);
}

Gaussian det_C(const MatrixC& a)
{
    a.require_square("det_C");
    const std::size_t n = a.rows();
    if (n == 0)
        return Gaussian(1);
    std::vector<mpz_class> scales;
    auto m = integral_rows(a, &scales);
    int swaps = 0;
    if (bareiss(m, n, &swaps) < n)
        return Gaussian(0);
    mpz_class denom = 1;
    for (const auto& s : scales)
        denom *= s;
    Gaussian d(Rational(m[n - 1][n - 1].re, denom), Rational(m[n - 1][n - 1].im, denom));
    d.re.canonicalize();
    d.im.canonicalize();
    return swaps % 2 ? -d : d;
}

MatrixC rref(MatrixC a, std::vector<std::size_t>* pivots)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero())
            ++p;
        if (p == a.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(r, j));
        const Gaussian inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero())
                continue;
            const Gaussian f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(i, j) -= f * a(r, j);
        }
        if (pivots)
            pivots->push_back(c);
        ++r;
    }
    return a;
}

std::vector<MatrixC> nullspace(const MatrixC& a)
{
    std::vector<std::size_t> pivots;
    const MatrixC red = rref(a, &pivots);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<MatrixC> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        MatrixC v(a.cols(), 1);
        v(f, 0) = Gaussian(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v(pivots[k], 0) = -red(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

MatrixC inverse_C(const MatrixC& a)
{
    a.require_square("inverse_C");
    const std::size_t n = a.rows();
    MatrixC aug(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, MatrixC::identity(n));
    std::vector<std::size_t> pivots;
    const MatrixC red = rref(std::move(aug), &pivots);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw SingularMatrix("inverse_C: matrix is singular");
    return red.block(0, n, n, n);
}

MatrixC phi_embed(const MatrixH& a)
{
    a.require_square("phi_embed");
    const std::size_t n = a.rows();
    MatrixC out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto [z1, z2] = a(i, j).complex_split();
            out(i, j) = z1;
            out(i, j + n) = z2;
            out(i + n, j) = -z2.conj();
            out(i + n, j + n) = z1.conj();
        }
    return out;
}

MatrixH phi_project(const MatrixC& m)
{
    m.require_square("phi_project");
    if (m.rows() % 2 != 0)
        throw DimensionMismatch("phi_project: odd dimension");
    const std::size_t n = m.rows() / 2;
    MatrixH out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Gaussian& z1 = m(i, j);
            const Gaussian& z2 = m(i, j + n);
            if (m(i + n, j) != -z2.conj() || m(i + n, j + n) != z1.conj())
                throw DimensionMismatch("phi_project: matrix is not in the image of Phi");
            out(i, j) = Quaternion::from_split(z1, z2);
        }
    return out;
}

Rational det_H(const MatrixH& a)
{
    const Gaussian d = det_C(phi_embed(a));
    if (!d.is_real())
        throw Error("det_H: non-real determinant " + to_string(d) + " (internal error)");
    return d.re;
}

Gaussian tr_H(const MatrixH& a) { return phi_embed(a).trace(); }

MatrixH inverse_H(const MatrixH& a)
{
    a.require_square("inverse_H");
    return phi_project(inverse_C(phi_embed(a)));
}

MatrixH inverse_H_direct(const MatrixH& a)
{
    a.require_square("inverse_H_direct");
    const std::size_t n = a.rows();
    MatrixH m = a;
    MatrixH inv = MatrixH::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero())
            ++p;
        if (p == n)
            throw SingularMatrix("inverse_H_direct: matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        // Row operations multiply from the left, so the accumulated product is a left inverse.
        const Quaternion pinv = m(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) = pinv * m(c, j);
            inv(c, j) = pinv * inv(c, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero())
                continue;
            const Quaternion f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

} // namespace adreal
