#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skewmon/field.hpp"
#include "skewmon/rational.hpp"
#include "skewmon/util.hpp"

namespace skewmon {

// Dense exact matrix over F_p or Q. Entries are stored row-major as int64
// numerators plus, for the rational field only, a parallel denominator array.
// All reductions (rref, kernel, cokernel, solve) use a fixed pivot policy:
// leftmost column first, first nonzero row from the top, so every derived
// basis is canonical and reproducible.
class Mat {
public:
    Mat() : f_(Field::fp(2)), rows_(0), cols_(0) {}
    Mat(Field f, std::size_t rows, std::size_t cols);

    static Mat identity(Field f, std::size_t n);
    static Mat zero(Field f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
    static Mat from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows);
    // Standard basis column vector e_i.
    static Mat basis_col(Field f, std::size_t dim, std::size_t i);

    Field field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rat& v);
    void set_int(std::size_t i, std::size_t j, std::int64_t v);
    // Residue (F_p) or numerator with den==1 demanded (used by encoders).
    std::int64_t get_int(std::size_t i, std::size_t j) const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Rat& c) const;
    Mat transpose() const;

    static Mat kron(const Mat& a, const Mat& b);
    static Mat hstack(const std::vector<Mat>& parts);
    static Mat vstack(const std::vector<Mat>& parts);
    Mat direct_sum(const Mat& o) const;

    Mat col(std::size_t j) const;
    // Result column j equals this->col(src[j]).
    Mat reindex_cols(const std::vector<std::size_t>& src) const;
    Mat reindex_rows(const std::vector<std::size_t>& src) const;

    // this * (P (x) I_id), computed blockwise without materializing the kron.
    Mat mul_kron_id(const Mat& p, std::size_t id_dim) const;
    // this * (I_id (x) P).
    Mat mul_id_kron(std::size_t id_dim, const Mat& p) const;
    // this * b, walking b column-by-column and skipping zeros; fast when b
    // is column-sparse (sections, balancing-relation generators).
    Mat mul_colsparse(const Mat& b) const;
    // true iff this * (I_l (x) b (x) I_r) == 0, without materializing the kron
    bool kills_middle_kron(std::size_t l, const Mat& b, std::size_t r) const;
    // this * (I_l (x) s (x) I_r) * x for column-sparse s and x
    Mat mul_middle_expand(std::size_t l, const Mat& s, std::size_t r, const Mat& x) const;

    // Transposed-layout variants: `this` stores the transpose of the map A
    // being operated on (rows of this = columns of A), which keeps the hot
    // loops sequential. Used by the product/associator assembly internals.
    bool kills_middle_kron_t(std::size_t l, const Mat& b, std::size_t r) const;
    // (this^T) * b for column-sparse b
    Mat mul_t_colsparse(const Mat& b) const;

    // Raw row-major storage access for prime fields; internal hot paths only.
    std::int64_t* raw();
    const std::int64_t* raw() const;

    std::pair<Mat, std::vector<std::size_t>> rref() const;
    std::size_t rank() const;
    // Columns form the canonical basis of the null space.
    Mat kernel_basis() const;

    struct Cokernel;
    // Quotient of the codomain k^rows by the column space.
    Cokernel cokernel_projection() const;

    // Solve this * X = rhs exactly; nullopt when inconsistent.
    std::optional<Mat> solve(const Mat& rhs) const;
    std::optional<Mat> inverse() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    std::vector<std::vector<std::int64_t>> to_int_rows() const;
    std::string to_string() const;

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<std::int64_t> num_;
    std::vector<Rat> rat_; // used instead of num_ when f_ is Q

    void check_same_field(const Mat& o, const char* op) const;
    std::int64_t& n(std::size_t i, std::size_t j) { return num_[i * cols_ + j]; }
    std::int64_t n(std::size_t i, std::size_t j) const { return num_[i * cols_ + j]; }
    Rat& r(std::size_t i, std::size_t j) { return rat_[i * cols_ + j]; }
    const Rat& r(std::size_t i, std::size_t j) const { return rat_[i * cols_ + j]; }

    friend struct MatOps;
};

struct Mat::Cokernel {
    Mat projection; // codomain ->> quotient
    Mat section;    // quotient -> codomain, projection*section = id
};

// Spec-level free functions on matrices.
inline std::pair<Mat, std::vector<std::size_t>> rref(const Mat& m) { return m.rref(); }
inline Mat kernel_basis(const Mat& m) { return m.kernel_basis(); }
inline Mat::Cokernel cokernel_projection(const Mat& m) { return m.cokernel_projection(); }
inline std::optional<Mat> solve(const Mat& m, const Mat& b) { return m.solve(b); }
inline Mat kron(const Mat& a, const Mat& b) { return Mat::kron(a, b); }
inline std::size_t rank(const Mat& m) { return m.rank(); }

// Factor f through a surjection p (with section s): the unique g with
// g*p == f. Returns nullopt when f is not constant on the fibers of p,
// i.e. the formula is not well defined on the quotient.
std::optional<Mat> factor_through_projection(const Mat& f, const Mat& p, const Mat& s);

// Factor f through an injection inc: the unique g with inc*g == f.
std::optional<Mat> factor_through_mono(const Mat& f, const Mat& inc);

// Factor f through an arbitrary surjection e (no section given): the unique
// g with g*e == f, when it exists.
std::optional<Mat> factor_through_epi(const Mat& f, const Mat& e);

} // namespace skewmon
