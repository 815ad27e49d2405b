#include "texsys/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace texsys {

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k)
{
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        at(dst, c) += k * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k)
{
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, dst) += k * at(r, src);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t c = 0; c < cols_; ++c)
        at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t i)
{
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, i) = -at(r, i);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    assert(a.cols() == b.rows());
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                p.at(i, j) += aik * b.at(k, j);
        }
    return p;
}

std::vector<Int> multiply(const IntMatrix& m, const std::vector<Int>& x)
{
    assert(x.size() == m.cols());
    std::vector<Int> y(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) y[r] += m.at(r, c) * x[c];
    return y;
}

namespace {

struct Transforms {
    bool track = false;
    IntMatrix u, uinv, v, vinv;

    // row op on M: row i += k * row j
    void row_add(std::size_t i, std::size_t j, const Int& k)
    {
        if (!track) return;
        u.add_row_multiple(i, j, k);
        uinv.add_col_multiple(j, i, -k); // inverse op applied on the right
    }
    void row_swap(std::size_t i, std::size_t j)
    {
        if (!track) return;
        u.swap_rows(i, j);
        uinv.swap_cols(i, j);
    }
    void row_negate(std::size_t i)
    {
        if (!track) return;
        u.negate_row(i);
        uinv.negate_col(i);
    }
    void col_add(std::size_t i, std::size_t j, const Int& k) // col i += k * col j
    {
        if (!track) return;
        v.add_col_multiple(i, j, k);
        vinv.add_row_multiple(j, i, -k);
    }
    void col_swap(std::size_t i, std::size_t j)
    {
        if (!track) return;
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    }
    void col_negate(std::size_t i)
    {
        if (!track) return;
        v.negate_col(i);
        vinv.negate_row(i);
    }
};

// smallest nonzero |entry| in m[t.., t..]; ties by row-major position
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc)
{
    bool found = false;
    Int best;
    for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c) {
            if (m.at(r, c) == 0) continue;
            Int mag = abs(m.at(r, c));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pr = r;
                pc = c;
            }
        }
    return found;
}

} // namespace

SNFResult snf(IntMatrix m, bool with_transforms)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t nmin = std::min(rows, cols);
    IntMatrix original = with_transforms ? m : IntMatrix();

    Transforms tf;
    tf.track = with_transforms;
    if (with_transforms) {
        tf.u = IntMatrix::identity(rows);
        tf.uinv = IntMatrix::identity(rows);
        tf.v = IntMatrix::identity(cols);
        tf.vinv = IntMatrix::identity(cols);
    }

    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            std::size_t pr = t, pc = t;
            if (!find_pivot(m, t, pr, pc)) {
                t = nmin; // all remaining entries are zero
                break;
            }
            m.swap_rows(t, pr);
            tf.row_swap(t, pr);
            m.swap_cols(t, pc);
            tf.col_swap(t, pc);

            const Int pivot = m.at(t, t);
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (m.at(r, t) == 0) continue;
                Int k = -(m.at(r, t) / pivot);
                m.add_row_multiple(r, t, k);
                tf.row_add(r, t, k);
                if (m.at(r, t) != 0) clean = false; // remainder left; re-pivot
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (m.at(t, c) == 0) continue;
                Int k = -(m.at(t, c) / pivot);
                m.add_col_multiple(c, t, k);
                tf.col_add(c, t, k);
                if (m.at(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // pull in any entry the pivot does not divide, then re-reduce
            bool divides_all = true;
            for (std::size_t r = t + 1; r < rows && divides_all; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (m.at(r, c) % pivot != 0) {
                        m.add_row_multiple(t, r, 1);
                        tf.row_add(t, r, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) {
                if (m.at(t, t) < 0) {
                    m.negate_row(t);
                    tf.row_negate(t);
                }
                break;
            }
        }
        if (t == nmin) break;
    }

    SNFResult result;
    result.diagonal.resize(nmin);
    for (std::size_t i = 0; i < nmin; ++i) {
        result.diagonal[i] = m.at(i, i);
        if (result.diagonal[i] != 0) ++result.rank;
    }
    if (with_transforms) {
        IntMatrix check = tf.u * original * tf.v;
        if (check != m)
            throw error(errc::internal_inconsistency, "snf transform verification failed");
        if (!(tf.u * tf.uinv == IntMatrix::identity(rows)) ||
            !(tf.vinv * tf.v == IntMatrix::identity(cols)))
            throw error(errc::internal_inconsistency, "snf transform inverses are wrong");
        result.left = std::move(tf.u);
        result.right = std::move(tf.v);
        result.left_inverse = std::move(tf.uinv);
        result.right_inverse = std::move(tf.vinv);
    }
    return result;
}

AbelianInvariants cokernel_invariants(const IntMatrix& m)
{
    SNFResult s = snf(m);
    std::vector<Int> torsion(s.diagonal.begin(), s.diagonal.begin() + s.rank);
    return make_abelian(m.rows() - s.rank, std::move(torsion));
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b)
{
    SNFResult s = snf(m, true);
    std::vector<Int> y = multiply(*s.left, b);
    std::vector<Int> z(m.cols());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < s.diagonal.size() && s.diagonal[i] != 0) {
            if (y[i] % s.diagonal[i] != 0) return std::nullopt;
            z[i] = y[i] / s.diagonal[i];
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return multiply(*s.right, z);
}

bool solvable_mod(const IntMatrix& m, const std::vector<Int>& b, const Int& modulus)
{
    SNFResult s = snf(m, true);
    std::vector<Int> y = multiply(*s.left, b);
    for (std::size_t i = 0; i < y.size(); ++i) {
        Int d = i < s.diagonal.size() ? s.diagonal[i] : Int(0);
        Int g = gcd(d, modulus); // d == 0 row: constraint is y == 0 mod modulus
        if (g == 0) g = modulus;
        if (y[i] % g != 0) return false;
    }
    return true;
}

} // namespace texsys
