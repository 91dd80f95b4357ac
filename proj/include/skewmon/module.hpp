#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewmon/algebra.hpp"

namespace skewmon {

// Finite-dimensional bimodule: commuting left and right actions of two
// algebras, one matrix per basis element. A plain right R-module is the
// special case whose left algebra is the ground field; this is how the
// category of right modules and the category of bimodules share one type.
struct Bimodule {
    AlgebraRef left, right;
    std::size_t dim = 0;
    std::vector<Mat> lact; // lact[i]: action of left basis element e_i
    std::vector<Mat> ract; // ract[i]: action of right basis element e_i
    std::string name;

    Field field() const { return left->field(); }
    Mat lact_vec(const Mat& v) const;
    Mat ract_vec(const Mat& v) const;

    // The regular bimodule of an algebra: left/right multiplication on itself.
    static Bimodule regular(const AlgebraRef& a, std::string name = "");
    // A space with trivial actions of the ground field on both sides.
    static Bimodule plain(Field f, std::size_t dim, std::string name = "");
    // Right module: trivial left k-action, given right action matrices.
    static Bimodule right_module(const AlgebraRef& r, std::vector<Mat> ract,
                                 std::string name = "");
    static Bimodule bimodule(const AlgebraRef& l, const AlgebraRef& r, std::vector<Mat> lact,
                             std::vector<Mat> ract, std::string name = "");
};

using Obj = std::shared_ptr<const Bimodule>;

inline Obj make_obj(Bimodule b) { return std::make_shared<const Bimodule>(std::move(b)); }

// Unitality, multiplicativity and commutation of the two actions.
Report check_bimodule(const Bimodule& m);

// An equivariant map between bimodules; mat has dst->dim rows.
struct BimodMap {
    Obj src, dst;
    Mat mat;
};

// Tensor product over the shared algebra B = m.right = n.left: quotient of
// the Kronecker space m (x) n by the balancing relations over the basis of B.
// Outer actions (m.left, n.right) descend to the quotient.
struct TensorOver {
    Obj ob;
    Mat proj; // m.dim*n.dim ->> ob.dim
    Mat sect; // section, proj*sect = id
};
TensorOver tensor_over(const Obj& m, const Obj& n, const std::string& name = "");

// Basis of B-linear maps m -> n for modules over the same algebra on the
// given sides; each column of the result vectorizes one map row-major.
enum class Side { left, right, both };
std::vector<Mat> hom_basis(const Bimodule& m, const Bimodule& n, Side side);

// Equalizer / coequalizer of parallel map families on a common carrier.
// actions_to_induce must commute with all fs/gs; this is verified and a
// StructuralError is thrown otherwise.
struct SubObject {
    Mat inclusion;            // sub -> carrier
    std::vector<Mat> induced; // restricted actions, same order as input
};
SubObject equalizer(const std::vector<Mat>& fs, const std::vector<Mat>& gs,
                    const std::vector<Mat>& actions_to_induce);

struct QuotObject {
    Mat projection; // carrier ->> quotient
    Mat section;
    std::vector<Mat> induced;
};
QuotObject coequalizer(const std::vector<Mat>& fs, const std::vector<Mat>& gs,
                       const std::vector<Mat>& actions_to_induce);

// Bimodule-level wrappers: fs/gs share source and target; all actions of the
// source are induced on the result.
std::pair<Obj, Mat> equalizer(const Obj& src, const std::vector<Mat>& fs,
                              const std::vector<Mat>& gs, const std::string& name = "");
std::pair<Obj, Mat> coequalizer(const Obj& src, const std::vector<Mat>& fs,
                                const std::vector<Mat>& gs, const std::string& name = "");

} // namespace skewmon
