#include "skewmon/mat.hpp"

#include <algorithm>
#include <sstream>

namespace skewmon {

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p)
{
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, nt = 1, r = p, nr = mod_reduce(a, p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1)
        throw StructuralError("mod_inverse: not invertible");
    return mod_reduce(t, p);
}

} // namespace

Mat::Mat(Field f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols)
{
    if (f_.is_prime())
        num_.assign(rows * cols, 0);
    else
        rat_.assign(rows * cols, Rat());
}

Mat Mat::identity(Field f, std::size_t n)
{
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set_int(i, i, 1);
    return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw StructuralError("Mat::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            m.set_int(i, j, rows[i][j]);
    }
    return m;
}

Mat Mat::basis_col(Field f, std::size_t dim, std::size_t i)
{
    Mat m(f, dim, 1);
    m.set_int(i, 0, 1);
    return m;
}

Rat Mat::get(std::size_t i, std::size_t j) const
{
    return f_.is_prime() ? Rat(n(i, j)) : r(i, j);
}

void Mat::set(std::size_t i, std::size_t j, const Rat& v)
{
    if (f_.is_prime()) {
        if (v.den != 1) {
            std::int64_t inv = mod_inverse(mod_reduce(v.den, (std::int64_t)f_.p()), (std::int64_t)f_.p());
            n(i, j) = mod_reduce(mod_reduce(v.num, (std::int64_t)f_.p()) * inv, (std::int64_t)f_.p());
        } else {
            n(i, j) = mod_reduce(v.num, (std::int64_t)f_.p());
        }
    } else {
        r(i, j) = v;
    }
}

void Mat::set_int(std::size_t i, std::size_t j, std::int64_t v)
{
    if (f_.is_prime())
        n(i, j) = mod_reduce(v, (std::int64_t)f_.p());
    else
        r(i, j) = Rat(v);
}

std::int64_t Mat::get_int(std::size_t i, std::size_t j) const
{
    if (f_.is_prime())
        return n(i, j);
    const Rat& v = r(i, j);
    if (v.den != 1)
        throw StructuralError("Mat::get_int: entry is not an integer");
    return v.num;
}

void Mat::check_same_field(const Mat& o, const char* op) const
{
    if (f_ != o.f_)
        throw StructuralError(std::string(op) + ": mixed-field operands " + f_.to_string() +
                              " vs " + o.f_.to_string());
}

bool Mat::operator==(const Mat& o) const
{
    if (f_ != o.f_ || rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    return f_.is_prime() ? num_ == o.num_ : rat_ == o.rat_;
}

bool Mat::is_zero() const
{
    if (f_.is_prime())
        return std::all_of(num_.begin(), num_.end(), [](std::int64_t v) { return v == 0; });
    return std::all_of(rat_.begin(), rat_.end(), [](const Rat& v) { return v.is_zero(); });
}

Mat Mat::operator+(const Mat& o) const
{
    check_same_field(o, "Mat::+");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw StructuralError("Mat::+: shape mismatch");
    Mat out(f_, rows_, cols_);
    if (f_.is_prime()) {
        const std::int64_t p = (std::int64_t)f_.p();
        for (std::size_t k = 0; k < num_.size(); ++k)
            out.num_[k] = mod_reduce(num_[k] + o.num_[k], p);
    } else {
        for (std::size_t k = 0; k < rat_.size(); ++k)
            out.rat_[k] = rat_[k] + o.rat_[k];
    }
    return out;
}

Mat Mat::operator-(const Mat& o) const
{
    check_same_field(o, "Mat::-");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw StructuralError("Mat::-: shape mismatch");
    Mat out(f_, rows_, cols_);
    if (f_.is_prime()) {
        const std::int64_t p = (std::int64_t)f_.p();
        for (std::size_t k = 0; k < num_.size(); ++k)
            out.num_[k] = mod_reduce(num_[k] - o.num_[k], p);
    } else {
        for (std::size_t k = 0; k < rat_.size(); ++k)
            out.rat_[k] = rat_[k] - o.rat_[k];
    }
    return out;
}

Mat Mat::operator*(const Mat& o) const
{
    check_same_field(o, "Mat::*");
    if (cols_ != o.rows_)
        throw StructuralError("Mat::*: inner dimension mismatch (" + std::to_string(cols_) +
                              " vs " + std::to_string(o.rows_) + ")");
    Mat out(f_, rows_, o.cols_);
    if (f_.is_prime()) {
        const std::int64_t p = (std::int64_t)f_.p();
        // ikj order with delayed reduction; entries < 2^20 so ~2^23 terms fit.
        for (std::size_t i = 0; i < rows_; ++i) {
            std::int64_t* dst = &out.num_[i * o.cols_];
            for (std::size_t k = 0; k < cols_; ++k) {
                const std::int64_t a = n(i, k);
                if (a == 0)
                    continue;
                const std::int64_t* src = &o.num_[k * o.cols_];
                for (std::size_t j = 0; j < o.cols_; ++j)
                    dst[j] += a * src[j];
            }
            for (std::size_t j = 0; j < o.cols_; ++j)
                dst[j] = mod_reduce(dst[j], p);
        }
    } else {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat a = r(i, k);
                if (a.is_zero())
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out.r(i, j) = out.r(i, j) + a * o.r(k, j);
            }
    }
    return out;
}

Mat Mat::scaled(const Rat& c) const
{
    Mat out(f_, rows_, cols_);
    if (f_.is_prime()) {
        const std::int64_t p = (std::int64_t)f_.p();
        std::int64_t cv;
        if (c.den != 1)
            cv = mod_reduce(mod_reduce(c.num, p) * mod_inverse(mod_reduce(c.den, p), p), p);
        else
            cv = mod_reduce(c.num, p);
        for (std::size_t k = 0; k < num_.size(); ++k)
            out.num_[k] = mod_reduce(num_[k] * cv, p);
    } else {
        for (std::size_t k = 0; k < rat_.size(); ++k)
            out.rat_[k] = rat_[k] * c;
    }
    return out;
}

Mat Mat::transpose() const
{
    Mat out(f_, cols_, rows_);
    if (f_.is_prime()) {
        for (std::size_t i = 0; i < rows_; ++i) {
            const std::int64_t* src = &num_[i * cols_];
            for (std::size_t j = 0; j < cols_; ++j)
                out.num_[j * rows_ + i] = src[j];
        }
    } else {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out.set(j, i, get(i, j));
    }
    return out;
}

std::int64_t* Mat::raw()
{
    if (!f_.is_prime())
        throw StructuralError("Mat::raw: prime fields only");
    return num_.data();
}

const std::int64_t* Mat::raw() const
{
    if (!f_.is_prime())
        throw StructuralError("Mat::raw: prime fields only");
    return num_.data();
}

Mat Mat::kron(const Mat& a, const Mat& b)
{
    a.check_same_field(b, "Mat::kron");
    Mat out(a.f_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ia = 0; ia < a.rows_; ++ia)
        for (std::size_t ja = 0; ja < a.cols_; ++ja) {
            const Rat v = a.get(ia, ja);
            if (v.is_zero())
                continue;
            for (std::size_t ib = 0; ib < b.rows_; ++ib)
                for (std::size_t jb = 0; jb < b.cols_; ++jb) {
                    const Rat w = b.get(ib, jb);
                    if (!w.is_zero())
                        out.set(ia * b.rows_ + ib, ja * b.cols_ + jb, v * w);
                }
        }
    return out;
}

Mat Mat::hstack(const std::vector<Mat>& parts)
{
    if (parts.empty())
        throw StructuralError("Mat::hstack: empty");
    std::size_t cols = 0;
    for (const auto& m : parts) {
        parts[0].check_same_field(m, "Mat::hstack");
        if (m.rows_ != parts[0].rows_)
            throw StructuralError("Mat::hstack: row mismatch");
        cols += m.cols_;
    }
    Mat out(parts[0].f_, parts[0].rows_, cols);
    std::size_t off = 0;
    for (const auto& m : parts) {
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j)
                out.set(i, off + j, m.get(i, j));
        off += m.cols_;
    }
    return out;
}

Mat Mat::vstack(const std::vector<Mat>& parts)
{
    if (parts.empty())
        throw StructuralError("Mat::vstack: empty");
    std::size_t rows = 0;
    for (const auto& m : parts) {
        parts[0].check_same_field(m, "Mat::vstack");
        if (m.cols_ != parts[0].cols_)
            throw StructuralError("Mat::vstack: column mismatch");
        rows += m.rows_;
    }
    Mat out(parts[0].f_, rows, parts[0].cols_);
    std::size_t off = 0;
    for (const auto& m : parts) {
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j)
                out.set(off + i, j, m.get(i, j));
        off += m.rows_;
    }
    return out;
}

Mat Mat::direct_sum(const Mat& o) const
{
    check_same_field(o, "Mat::direct_sum");
    Mat out(f_, rows_ + o.rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.set(i, j, get(i, j));
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j)
            out.set(rows_ + i, cols_ + j, o.get(i, j));
    return out;
}

Mat Mat::col(std::size_t j) const
{
    Mat out(f_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
        out.set(i, 0, get(i, j));
    return out;
}

Mat Mat::reindex_cols(const std::vector<std::size_t>& src) const
{
    Mat out(f_, rows_, src.size());
    if (f_.is_prime()) {
        for (std::size_t i = 0; i < rows_; ++i) {
            const std::int64_t* in = &num_[i * cols_];
            std::int64_t* dst = &out.num_[i * src.size()];
            for (std::size_t j = 0; j < src.size(); ++j)
                dst[j] = in[src[j]];
        }
    } else {
        for (std::size_t j = 0; j < src.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i)
                out.set(i, j, get(i, src[j]));
    }
    return out;
}

Mat Mat::reindex_rows(const std::vector<std::size_t>& src) const
{
    Mat out(f_, src.size(), cols_);
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.set(i, j, get(src[i], j));
    return out;
}

Mat Mat::mul_kron_id(const Mat& p, std::size_t id_dim) const
{
    // this: r x (p.rows * id), result: r x (p.cols * id);
    // result[:, (c,t)] = sum_k this[:, (k,t)] * p[k,c]
    if (cols_ != p.rows() * id_dim)
        throw StructuralError("mul_kron_id: shape mismatch");
    check_same_field(p, "mul_kron_id");
    Mat out(f_, rows_, p.cols() * id_dim);
    if (f_.is_prime()) {
        const std::int64_t pm = (std::int64_t)f_.p();
        for (std::size_t i = 0; i < rows_; ++i) {
            const std::int64_t* src = &num_[i * cols_];
            std::int64_t* dst = &out.num_[i * out.cols_];
            for (std::size_t k = 0; k < p.rows(); ++k)
                for (std::size_t c = 0; c < p.cols(); ++c) {
                    const std::int64_t v = p.n(k, c);
                    if (v == 0)
                        continue;
                    for (std::size_t t = 0; t < id_dim; ++t)
                        dst[c * id_dim + t] += v * src[k * id_dim + t];
                }
            for (std::size_t j = 0; j < out.cols_; ++j)
                dst[j] = mod_reduce(dst[j], pm);
        }
    } else {
        for (std::size_t k = 0; k < p.rows(); ++k)
            for (std::size_t c = 0; c < p.cols(); ++c) {
                const Rat v = p.get(k, c);
                if (v.is_zero())
                    continue;
                for (std::size_t t = 0; t < id_dim; ++t) {
                    const std::size_t jsrc = k * id_dim + t, jdst = c * id_dim + t;
                    for (std::size_t i = 0; i < rows_; ++i) {
                        Rat acc = out.get(i, jdst) + get(i, jsrc) * v;
                        out.set(i, jdst, acc);
                    }
                }
            }
    }
    return out;
}

Mat Mat::mul_id_kron(std::size_t id_dim, const Mat& p) const
{
    // this: r x (id * p.rows), result: r x (id * p.cols), blockwise this_b * p
    if (cols_ != p.rows() * id_dim)
        throw StructuralError("mul_id_kron: shape mismatch");
    check_same_field(p, "mul_id_kron");
    Mat out(f_, rows_, p.cols() * id_dim);
    if (f_.is_prime()) {
        const std::int64_t pm = (std::int64_t)f_.p();
        for (std::size_t b = 0; b < id_dim; ++b)
            for (std::size_t i = 0; i < rows_; ++i) {
                for (std::size_t k = 0; k < p.rows(); ++k) {
                    const std::int64_t a = n(i, b * p.rows() + k);
                    if (a == 0)
                        continue;
                    for (std::size_t c = 0; c < p.cols(); ++c)
                        out.num_[i * out.cols_ + b * p.cols() + c] += a * p.n(k, c);
                }
                for (std::size_t c = 0; c < p.cols(); ++c) {
                    auto& v = out.num_[i * out.cols_ + b * p.cols() + c];
                    v = mod_reduce(v, pm);
                }
            }
    } else {
        for (std::size_t b = 0; b < id_dim; ++b)
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t k = 0; k < p.rows(); ++k) {
                    const Rat a = get(i, b * p.rows() + k);
                    if (a.is_zero())
                        continue;
                    for (std::size_t c = 0; c < p.cols(); ++c) {
                        Rat acc = out.get(i, b * p.cols() + c) + a * p.get(k, c);
                        out.set(i, b * p.cols() + c, acc);
                    }
                }
    }
    return out;
}

Mat Mat::mul_colsparse(const Mat& b) const
{
    check_same_field(b, "mul_colsparse");
    if (cols_ != b.rows_)
        throw StructuralError("mul_colsparse: inner dimension mismatch");
    Mat out(f_, rows_, b.cols_);
    if (f_.is_prime()) {
        const std::int64_t p = (std::int64_t)f_.p();
        // row-major scan of b keeps the zero test sequential
        for (std::size_t k = 0; k < b.rows_; ++k)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const std::int64_t v = b.n(k, j);
                if (v == 0)
                    continue;
                for (std::size_t i = 0; i < rows_; ++i)
                    out.num_[i * b.cols_ + j] += v * n(i, k);
            }
        for (auto& v : out.num_)
            v = mod_reduce(v, p);
    } else {
        for (std::size_t k = 0; k < b.rows_; ++k)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rat v = b.r(k, j);
                if (v.is_zero())
                    continue;
                for (std::size_t i = 0; i < rows_; ++i)
                    out.r(i, j) = out.r(i, j) + v * r(i, k);
            }
    }
    return out;
}

bool Mat::kills_middle_kron(std::size_t l, const Mat& b, std::size_t rd) const
{
    check_same_field(b, "kills_middle_kron");
    if (cols_ != l * b.rows_ * rd)
        throw StructuralError("kills_middle_kron: shape mismatch");
    const std::size_t lr = l * rd;
    if (f_.is_prime()) {
        const std::int64_t p = (std::int64_t)f_.p();
        std::vector<std::int64_t> buf(rows_ * lr);
        for (std::size_t c = 0; c < b.cols_; ++c) {
            std::fill(buf.begin(), buf.end(), 0);
            bool any = false;
            for (std::size_t q = 0; q < b.rows_; ++q) {
                const std::int64_t v = b.n(q, c);
                if (v == 0)
                    continue;
                any = true;
                for (std::size_t i = 0; i < l; ++i)
                    for (std::size_t k = 0; k < rd; ++k) {
                        const std::size_t col = (i * b.rows_ + q) * rd + k;
                        std::int64_t* dst = &buf[(i * rd + k) * rows_];
                        for (std::size_t row = 0; row < rows_; ++row)
                            dst[row] += v * n(row, col);
                    }
            }
            if (!any)
                continue;
            for (auto& x : buf)
                if (mod_reduce(x, p) != 0)
                    return false;
        }
        return true;
    }
    for (std::size_t c = 0; c < b.cols_; ++c) {
        std::vector<Rat> buf(rows_ * lr);
        for (std::size_t q = 0; q < b.rows_; ++q) {
            const Rat v = b.r(q, c);
            if (v.is_zero())
                continue;
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t k = 0; k < rd; ++k) {
                    const std::size_t col = (i * b.rows_ + q) * rd + k;
                    for (std::size_t row = 0; row < rows_; ++row)
                        buf[(i * rd + k) * rows_ + row] =
                            buf[(i * rd + k) * rows_ + row] + v * r(row, col);
                }
        }
        for (const auto& x : buf)
            if (!x.is_zero())
                return false;
    }
    return true;
}

Mat Mat::mul_middle_expand(std::size_t l, const Mat& s, std::size_t rd, const Mat& x) const
{
    check_same_field(s, "mul_middle_expand");
    check_same_field(x, "mul_middle_expand");
    if (cols_ != l * s.rows_ * rd)
        throw StructuralError("mul_middle_expand: lhs shape mismatch");
    if (x.rows_ != l * s.cols_ * rd)
        throw StructuralError("mul_middle_expand: rhs shape mismatch");
    Mat out(f_, rows_, x.cols_);
    for (std::size_t xr = 0; xr < x.rows_; ++xr) {
        const std::size_t k = xr % rd;
        const std::size_t q = (xr / rd) % s.cols_;
        const std::size_t i = xr / (rd * s.cols_);
        for (std::size_t j = 0; j < x.cols_; ++j) {
            const Rat v = x.get(xr, j);
            if (v.is_zero())
                continue;
            for (std::size_t p = 0; p < s.rows_; ++p) {
                const Rat w = s.get(p, q);
                if (w.is_zero())
                    continue;
                const Rat c = v * w;
                const std::size_t col = (i * s.rows_ + p) * rd + k;
                for (std::size_t row = 0; row < rows_; ++row) {
                    Rat acc = out.get(row, j) + c * get(row, col);
                    out.set(row, j, acc);
                }
            }
        }
    }
    return out;
}

bool Mat::kills_middle_kron_t(std::size_t l, const Mat& b, std::size_t rd) const
{
    // rows of this = source coordinates (l, q, k); cols = target dimension
    check_same_field(b, "kills_middle_kron_t");
    if (rows_ != l * b.rows() * rd)
        throw StructuralError("kills_middle_kron_t: shape mismatch");
    const std::size_t tdim = cols_;
    if (f_.is_prime()) {
        const std::int64_t p = (std::int64_t)f_.p();
        std::vector<std::int64_t> buf(l * rd * tdim);
        for (std::size_t c = 0; c < b.cols(); ++c) {
            std::fill(buf.begin(), buf.end(), 0);
            bool any = false;
            for (std::size_t q = 0; q < b.rows(); ++q) {
                const std::int64_t v = b.n(q, c);
                if (v == 0)
                    continue;
                any = true;
                for (std::size_t i = 0; i < l; ++i)
                    for (std::size_t k = 0; k < rd; ++k) {
                        const std::int64_t* src = &num_[((i * b.rows() + q) * rd + k) * tdim];
                        std::int64_t* dst = &buf[(i * rd + k) * tdim];
                        for (std::size_t t = 0; t < tdim; ++t)
                            dst[t] += v * src[t];
                    }
            }
            if (!any)
                continue;
            for (auto& x : buf)
                if (mod_reduce(x, p) != 0)
                    return false;
        }
        return true;
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::vector<Rat> buf(l * rd * tdim);
        for (std::size_t q = 0; q < b.rows(); ++q) {
            const Rat v = b.get(q, c);
            if (v.is_zero())
                continue;
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t k = 0; k < rd; ++k)
                    for (std::size_t t = 0; t < tdim; ++t)
                        buf[(i * rd + k) * tdim + t] =
                            buf[(i * rd + k) * tdim + t] +
                            v * get((i * b.rows() + q) * rd + k, t);
        }
        for (const auto& x : buf)
            if (!x.is_zero())
                return false;
    }
    return true;
}

Mat Mat::mul_t_colsparse(const Mat& b) const
{
    check_same_field(b, "mul_t_colsparse");
    if (rows_ != b.rows())
        throw StructuralError("mul_t_colsparse: shape mismatch");
    Mat out(f_, cols_, b.cols());
    if (f_.is_prime()) {
        const std::int64_t p = (std::int64_t)f_.p();
        for (std::size_t k = 0; k < b.rows(); ++k) {
            const std::int64_t* src = &num_[k * cols_];
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const std::int64_t v = b.n(k, j);
                if (v == 0)
                    continue;
                for (std::size_t i = 0; i < cols_; ++i)
                    out.num_[i * b.cols() + j] += v * src[i];
            }
        }
        for (auto& x : out.num_)
            x = mod_reduce(x, p);
    } else {
        for (std::size_t k = 0; k < b.rows(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rat v = b.get(k, j);
                if (v.is_zero())
                    continue;
                for (std::size_t i = 0; i < cols_; ++i)
                    out.set(i, j, out.get(i, j) + v * get(k, i));
            }
    }
    return out;
}

std::pair<Mat, std::vector<std::size_t>> Mat::rref() const
{
    Mat m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    if (f_.is_prime()) {
        const std::int64_t p = (std::int64_t)f_.p();
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && m.n(piv, col) == 0)
                ++piv;
            if (piv == rows_)
                continue;
            if (piv != row)
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap(m.n(row, j), m.n(piv, j));
            const std::int64_t inv = mod_inverse(m.n(row, col), p);
            for (std::size_t j = col; j < cols_; ++j)
                m.n(row, j) = mod_reduce(m.n(row, j) * inv, p);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row)
                    continue;
                const std::int64_t c = m.n(i, col);
                if (c == 0)
                    continue;
                for (std::size_t j = col; j < cols_; ++j)
                    m.n(i, j) = mod_reduce(m.n(i, j) - c * m.n(row, j), p);
            }
            pivots.push_back(col);
            ++row;
        }
    } else {
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && m.r(piv, col).is_zero())
                ++piv;
            if (piv == rows_)
                continue;
            if (piv != row)
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap(m.r(row, j), m.r(piv, j));
            const Rat inv = skewmon::inverse(m.r(row, col));
            for (std::size_t j = col; j < cols_; ++j)
                m.r(row, j) = m.r(row, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row)
                    continue;
                const Rat c = m.r(i, col);
                if (c.is_zero())
                    continue;
                for (std::size_t j = col; j < cols_; ++j)
                    m.r(i, j) = m.r(i, j) - c * m.r(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t Mat::rank() const { return rref().second.size(); }

Mat Mat::kernel_basis() const
{
    auto [red, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Mat basis(f_, cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis.set_int(fc, k, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            Rat v = red.get(i, fc);
            if (!v.is_zero())
                basis.set(pivots[i], k, -v);
        }
    }
    return basis;
}

Mat::Cokernel Mat::cokernel_projection() const
{
    // Row-reduce the transpose: its rref rows are a canonical basis of the
    // column space; quotient coordinates are the non-pivot positions.
    auto [red, pivots] = transpose().rref();
    std::vector<bool> is_pivot(rows_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free_coords;
    for (std::size_t c = 0; c < rows_; ++c)
        if (!is_pivot[c])
            free_coords.push_back(c);
    const std::size_t q = free_coords.size();
    Mat proj(f_, q, rows_);
    for (std::size_t t = 0; t < q; ++t) {
        proj.set_int(t, free_coords[t], 1);
        // subtract the image component matching the pivot coordinates
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            Rat v = red.get(i, free_coords[t]);
            if (!v.is_zero())
                proj.set(t, pivots[i], -v);
        }
    }
    // proj(v) = coordinates of v - sum_i v[P_i]*row_i at the free positions;
    // the formula above is its matrix because row_i[free_t] appears with sign -1.
    Mat section(f_, rows_, q);
    for (std::size_t t = 0; t < q; ++t)
        section.set_int(free_coords[t], t, 1);
    return {std::move(proj), std::move(section)};
}

std::optional<Mat> Mat::solve(const Mat& rhs) const
{
    check_same_field(rhs, "Mat::solve");
    if (rhs.rows_ != rows_)
        throw StructuralError("Mat::solve: rhs row mismatch");
    Mat aug = hstack({*this, rhs});
    auto [red, pivots] = aug.rref();
    for (auto c : pivots)
        if (c >= cols_)
            return std::nullopt; // pivot in the rhs block: inconsistent
    Mat x(f_, cols_, rhs.cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            x.set(pivots[i], j, red.get(i, cols_ + j));
    return x;
}

std::optional<Mat> Mat::inverse() const
{
    if (rows_ != cols_)
        return std::nullopt;
    auto x = solve(identity(f_, rows_));
    if (!x)
        return std::nullopt;
    if ((*this) * (*x) != identity(f_, rows_))
        return std::nullopt;
    return x;
}

std::vector<std::vector<std::int64_t>> Mat::to_int_rows() const
{
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Rat v = get(i, j);
            if (v.den != 1)
                throw StructuralError("Mat::to_int_rows: non-integer entry");
            out[i][j] = v.num;
        }
    return out;
}

std::string Mat::to_string() const
{
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " over " << f_.to_string() << "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << get(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

std::optional<Mat> factor_through_projection(const Mat& f, const Mat& p, const Mat& s)
{
    Mat g = f.mul_colsparse(s);
    if (g * p != f)
        return std::nullopt;
    return g;
}

std::optional<Mat> factor_through_mono(const Mat& f, const Mat& inc)
{
    auto g = inc.solve(f);
    if (!g)
        return std::nullopt;
    if (inc * (*g) != f)
        return std::nullopt;
    return g;
}

std::optional<Mat> factor_through_epi(const Mat& f, const Mat& e)
{
    // right inverse of e via solve, then verify
    auto rinv = e.solve(Mat::identity(e.field(), e.rows()));
    if (!rinv)
        return std::nullopt;
    Mat g = f * (*rinv);
    if (g * e != f)
        return std::nullopt;
    return g;
}

} // namespace skewmon
