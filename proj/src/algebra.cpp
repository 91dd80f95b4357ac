#include "skewmon/algebra.hpp"

namespace skewmon {

Algebra::Algebra(Field f, std::size_t dim, Mat mult, Mat unit, std::string name)
    : f_(f), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)), name_(std::move(name))
{
    if (mult_.rows() != dim_ || mult_.cols() != dim_ * dim_)
        throw StructuralError("Algebra: mult must be dim x dim^2");
    if (unit_.rows() != dim_ || unit_.cols() != 1)
        throw StructuralError("Algebra: unit must be dim x 1");
    lmul_.reserve(dim_);
    rmul_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Mat l(f_, dim_, dim_), r(f_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                l.set(k, j, mult_.get(k, i * dim_ + j)); // e_i * e_j
                r.set(k, j, mult_.get(k, j * dim_ + i)); // e_j * e_i
            }
        lmul_.push_back(std::move(l));
        rmul_.push_back(std::move(r));
    }
}

Algebra Algebra::field_unit(Field f)
{
    return Algebra(f, 1, Mat::from_rows(f, {{1}}), Mat::from_rows(f, {{1}}), "k");
}

Algebra Algebra::group_algebra_c2(Field f)
{
    // basis {1, g}, g^2 = 1
    Mat mult(f, 2, 4);
    mult.set_int(0, 0, 1); // 1*1 = 1
    mult.set_int(1, 1, 1); // 1*g = g
    mult.set_int(1, 2, 1); // g*1 = g
    mult.set_int(0, 3, 1); // g*g = 1
    Mat unit(f, 2, 1);
    unit.set_int(0, 0, 1);
    return Algebra(f, 2, mult, unit, "k[C2]");
}

Algebra Algebra::tensor(const Algebra& a, const Algebra& b)
{
    if (a.field() != b.field())
        throw StructuralError("Algebra::tensor: mixed fields");
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    Mat mult(a.field(), d, d * d);
    for (std::size_t i1 = 0; i1 < da; ++i1)
        for (std::size_t i2 = 0; i2 < db; ++i2)
            for (std::size_t j1 = 0; j1 < da; ++j1)
                for (std::size_t j2 = 0; j2 < db; ++j2) {
                    const std::size_t i = i1 * db + i2, j = j1 * db + j2;
                    for (std::size_t k1 = 0; k1 < da; ++k1)
                        for (std::size_t k2 = 0; k2 < db; ++k2) {
                            Rat v = a.mult().get(k1, i1 * da + j1) * b.mult().get(k2, i2 * db + j2);
                            if (!v.is_zero())
                                mult.set(k1 * db + k2, i * d + j, v);
                        }
                }
    Mat unit = Mat::kron(a.unit(), b.unit());
    return Algebra(a.field(), d, mult, unit, a.name() + "(x)" + b.name());
}

Algebra Algebra::opposite() const
{
    Mat mult(f_, dim_, dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                mult.set(k, i * dim_ + j, mult_.get(k, j * dim_ + i));
    return Algebra(f_, dim_, mult, unit_, name_ + "^op");
}

Algebra Algebra::enveloping(const Algebra& a) { return tensor(a.opposite(), a); }

Mat Algebra::lmul_vec(const Mat& v) const
{
    Mat out(f_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Rat c = v.get(i, 0);
        if (!c.is_zero())
            out = out + lmul_[i].scaled(c);
    }
    return out;
}

Mat Algebra::rmul_vec(const Mat& v) const
{
    Mat out(f_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Rat c = v.get(i, 0);
        if (!c.is_zero())
            out = out + rmul_[i].scaled(c);
    }
    return out;
}

Mat Algebra::product(const Mat& a, const Mat& b) const { return mult_ * Mat::kron(a, b); }

Report check_algebra(const Algebra& a)
{
    Report rep;
    const std::size_t d = a.dim();
    bool assoc_ok = true;
    for (std::size_t i = 0; i < d && assoc_ok; ++i)
        for (std::size_t j = 0; j < d && assoc_ok; ++j)
            for (std::size_t l = 0; l < d; ++l) {
                Mat ei = Mat::basis_col(a.field(), d, i);
                Mat ej = Mat::basis_col(a.field(), d, j);
                Mat el = Mat::basis_col(a.field(), d, l);
                Mat lhs = a.product(a.product(ei, ej), el);
                Mat rhs = a.product(ei, a.product(ej, el));
                if (lhs != rhs) {
                    rep.add({"alg-assoc[" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(l) + "]",
                             "alg-assoc", CheckStatus::fail,
                             "associativity fails at basis triple", Witness{lhs, rhs}});
                    assoc_ok = false;
                    break;
                }
            }
    if (assoc_ok)
        rep.add_pass("alg-assoc", "alg-assoc", "all basis triples");
    Mat id = Mat::identity(a.field(), d);
    rep.add_eq("alg-unit-left", "alg-unit", a.lmul_vec(a.unit()), id);
    rep.add_eq("alg-unit-right", "alg-unit", a.rmul_vec(a.unit()), id);
    return rep;
}

} // namespace skewmon
