#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewmon/mat.hpp"
#include "skewmon/report.hpp"

namespace skewmon {

// Finite-dimensional unital associative algebra given by structure constants.
// mult maps e_i (x) e_j (column i*dim + j) to the coordinates of e_i*e_j.
class Algebra {
public:
    Algebra(Field f, std::size_t dim, Mat mult, Mat unit, std::string name = "");

    static Algebra field_unit(Field f); // the ground field as a dim-1 algebra
    static Algebra group_algebra_c2(Field f);
    static Algebra tensor(const Algebra& a, const Algebra& b); // Kronecker basis
    Algebra opposite() const;
    static Algebra enveloping(const Algebra& a); // a^op (x) a

    Field field() const { return f_; }
    std::size_t dim() const { return dim_; }
    const Mat& mult() const { return mult_; }
    const Mat& unit() const { return unit_; }
    const std::string& name() const { return name_; }

    // Left/right multiplication by basis element e_i, and by arbitrary
    // coordinate vectors.
    const Mat& lmul(std::size_t i) const { return lmul_[i]; }
    const Mat& rmul(std::size_t i) const { return rmul_[i]; }
    Mat lmul_vec(const Mat& v) const;
    Mat rmul_vec(const Mat& v) const;
    Mat product(const Mat& a, const Mat& b) const;

private:
    Field f_;
    std::size_t dim_;
    Mat mult_; // dim x dim^2
    Mat unit_; // dim x 1
    std::string name_;
    std::vector<Mat> lmul_, rmul_;
};

using AlgebraRef = std::shared_ptr<const Algebra>;

// Brute-force verification of associativity and the two-sided unit over all
// basis triples; empty report means valid.
Report check_algebra(const Algebra& a);

inline AlgebraRef make_algebra(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

} // namespace skewmon
