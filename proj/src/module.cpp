#include "skewmon/module.hpp"

namespace skewmon {

Mat Bimodule::lact_vec(const Mat& v) const
{
    Mat out(field(), dim, dim);
    for (std::size_t i = 0; i < lact.size(); ++i) {
        Rat c = v.get(i, 0);
        if (!c.is_zero())
            out = out + lact[i].scaled(c);
    }
    return out;
}

Mat Bimodule::ract_vec(const Mat& v) const
{
    Mat out(field(), dim, dim);
    for (std::size_t i = 0; i < ract.size(); ++i) {
        Rat c = v.get(i, 0);
        if (!c.is_zero())
            out = out + ract[i].scaled(c);
    }
    return out;
}

Bimodule Bimodule::regular(const AlgebraRef& a, std::string name)
{
    Bimodule b;
    b.left = a;
    b.right = a;
    b.dim = a->dim();
    for (std::size_t i = 0; i < a->dim(); ++i) {
        b.lact.push_back(a->lmul(i));
        b.ract.push_back(a->rmul(i));
    }
    b.name = name.empty() ? a->name() : std::move(name);
    return b;
}

Bimodule Bimodule::plain(Field f, std::size_t dim, std::string name)
{
    Bimodule b;
    auto k = make_algebra(Algebra::field_unit(f));
    b.left = k;
    b.right = k;
    b.dim = dim;
    b.lact = {Mat::identity(f, dim)};
    b.ract = {Mat::identity(f, dim)};
    b.name = std::move(name);
    return b;
}

Bimodule Bimodule::right_module(const AlgebraRef& r, std::vector<Mat> ract, std::string name)
{
    Bimodule b;
    b.left = make_algebra(Algebra::field_unit(r->field()));
    b.right = r;
    b.dim = ract.empty() ? 0 : ract[0].rows();
    b.lact = {Mat::identity(r->field(), b.dim)};
    b.ract = std::move(ract);
    b.name = std::move(name);
    return b;
}

Bimodule Bimodule::bimodule(const AlgebraRef& l, const AlgebraRef& r, std::vector<Mat> lact,
                            std::vector<Mat> ract, std::string name)
{
    Bimodule b;
    b.left = l;
    b.right = r;
    b.dim = lact.empty() ? 0 : lact[0].rows();
    b.lact = std::move(lact);
    b.ract = std::move(ract);
    b.name = std::move(name);
    return b;
}

Report check_bimodule(const Bimodule& m)
{
    Report rep;
    const Field f = m.field();
    Mat id = Mat::identity(f, m.dim);
    rep.add_eq("bimod-left-unital", "mod-unital", m.lact_vec(m.left->unit()), id);
    rep.add_eq("bimod-right-unital", "mod-unital", m.ract_vec(m.right->unit()), id);
    const std::size_t dl = m.left->dim(), dr = m.right->dim();
    for (std::size_t i = 0; i < dl; ++i)
        for (std::size_t j = 0; j < dl; ++j) {
            Mat prod = m.left->product(Mat::basis_col(f, dl, i), Mat::basis_col(f, dl, j));
            rep.add_eq("bimod-left-mult[" + std::to_string(i) + "," + std::to_string(j) + "]",
                       "mod-mult", m.lact[i] * m.lact[j], m.lact_vec(prod));
        }
    for (std::size_t i = 0; i < dr; ++i)
        for (std::size_t j = 0; j < dr; ++j) {
            Mat prod = m.right->product(Mat::basis_col(f, dr, i), Mat::basis_col(f, dr, j));
            // right action reverses: m.(e_i e_j) = (m.e_i).e_j
            rep.add_eq("bimod-right-mult[" + std::to_string(i) + "," + std::to_string(j) + "]",
                       "mod-mult", m.ract[j] * m.ract[i], m.ract_vec(prod));
        }
    for (std::size_t i = 0; i < dl; ++i)
        for (std::size_t j = 0; j < dr; ++j)
            rep.add_eq("bimod-commute[" + std::to_string(i) + "," + std::to_string(j) + "]",
                       "mod-commute", m.lact[i] * m.ract[j], m.ract[j] * m.lact[i]);
    return rep;
}

TensorOver tensor_over(const Obj& m, const Obj& n, const std::string& name)
{
    if (m->right.get() != n->left.get() && !(m->right->dim() == n->left->dim() &&
                                             m->right->mult() == n->left->mult()))
        throw StructuralError("tensor_over: middle algebras differ");
    const Field f = m->field();
    const std::size_t dm = m->dim, dn = n->dim, db = m->right->dim();
    std::vector<Mat> rels;
    rels.reserve(db);
    Mat idm = Mat::identity(f, dm), idn = Mat::identity(f, dn);
    for (std::size_t b = 0; b < db; ++b)
        rels.push_back(Mat::kron(m->ract[b], idn) - Mat::kron(idm, n->lact[b]));
    Mat relmat = Mat::hstack(rels);
    auto cok = relmat.cokernel_projection();

    Bimodule out;
    out.left = m->left;
    out.right = n->right;
    out.dim = cok.projection.rows();
    out.name = name.empty() ? "(" + m->name + "(x)" + n->name + ")" : name;
    for (std::size_t i = 0; i < m->left->dim(); ++i) {
        Mat act = cok.projection * Mat::kron(m->lact[i], idn) * cok.section;
        out.lact.push_back(std::move(act));
    }
    for (std::size_t j = 0; j < n->right->dim(); ++j) {
        Mat act = cok.projection * Mat::kron(idm, n->ract[j]) * cok.section;
        out.ract.push_back(std::move(act));
    }
    return {make_obj(std::move(out)), std::move(cok.projection), std::move(cok.section)};
}

std::vector<Mat> hom_basis(const Bimodule& m, const Bimodule& n, Side side)
{
    // Unknown X: n.dim x m.dim, vec row-major; X*act_m - act_n*X = 0 becomes
    // (I (x) act_m^T - act_n (x) I) vec(X) = 0.
    const Field f = m.field();
    const std::size_t dm = m.dim, dn = n.dim;
    std::vector<Mat> constraints;
    Mat idm = Mat::identity(f, dm), idn = Mat::identity(f, dn);
    auto add_family = [&](const std::vector<Mat>& am, const std::vector<Mat>& an) {
        for (std::size_t b = 0; b < am.size(); ++b)
            constraints.push_back(Mat::kron(idn, am[b].transpose()) - Mat::kron(an[b], idm));
    };
    if (side == Side::right || side == Side::both)
        add_family(m.ract, n.ract);
    if (side == Side::left || side == Side::both)
        add_family(m.lact, n.lact);
    Mat sys = constraints.empty() ? Mat::zero(f, 1, dn * dm) : Mat::vstack(constraints);
    Mat ker = sys.kernel_basis();
    std::vector<Mat> out;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        Mat x(f, dn, dm);
        for (std::size_t i = 0; i < dn; ++i)
            for (std::size_t j = 0; j < dm; ++j)
                x.set(i, j, ker.get(i * dm + j, k));
        out.push_back(std::move(x));
    }
    return out;
}

SubObject equalizer(const std::vector<Mat>& fs, const std::vector<Mat>& gs,
                    const std::vector<Mat>& actions_to_induce)
{
    if (fs.size() != gs.size() || fs.empty())
        throw StructuralError("equalizer: need matching nonempty families");
    std::vector<Mat> diffs;
    for (std::size_t i = 0; i < fs.size(); ++i)
        diffs.push_back(fs[i] - gs[i]);
    Mat inc = Mat::vstack(diffs).kernel_basis();
    SubObject out{inc, {}};
    for (const auto& act : actions_to_induce) {
        auto restricted = factor_through_mono(act * inc, inc);
        if (!restricted)
            throw StructuralError("equalizer: action does not preserve the subobject");
        out.induced.push_back(std::move(*restricted));
    }
    return out;
}

QuotObject coequalizer(const std::vector<Mat>& fs, const std::vector<Mat>& gs,
                       const std::vector<Mat>& actions_to_induce)
{
    if (fs.size() != gs.size() || fs.empty())
        throw StructuralError("coequalizer: need matching nonempty families");
    std::vector<Mat> diffs;
    for (std::size_t i = 0; i < fs.size(); ++i)
        diffs.push_back(fs[i] - gs[i]);
    auto cok = Mat::hstack(diffs).cokernel_projection();
    QuotObject out{cok.projection, cok.section, {}};
    for (const auto& act : actions_to_induce) {
        auto induced = factor_through_projection(out.projection * act, out.projection, out.section);
        if (!induced)
            throw StructuralError("coequalizer: action does not descend to the quotient");
        out.induced.push_back(std::move(*induced));
    }
    return out;
}

std::pair<Obj, Mat> equalizer(const Obj& src, const std::vector<Mat>& fs,
                              const std::vector<Mat>& gs, const std::string& name)
{
    std::vector<Mat> acts = src->lact;
    acts.insert(acts.end(), src->ract.begin(), src->ract.end());
    auto sub = equalizer(fs, gs, acts);
    Bimodule b;
    b.left = src->left;
    b.right = src->right;
    b.dim = sub.inclusion.cols();
    b.lact.assign(sub.induced.begin(), sub.induced.begin() + src->lact.size());
    b.ract.assign(sub.induced.begin() + src->lact.size(), sub.induced.end());
    b.name = name.empty() ? "eq(" + src->name + ")" : name;
    return {make_obj(std::move(b)), sub.inclusion};
}

std::pair<Obj, Mat> coequalizer(const Obj& src, const std::vector<Mat>& fs,
                                const std::vector<Mat>& gs, const std::string& name)
{
    std::vector<Mat> acts = src->lact;
    acts.insert(acts.end(), src->ract.begin(), src->ract.end());
    auto quot = coequalizer(fs, gs, acts);
    Bimodule b;
    b.left = src->left;
    b.right = src->right;
    b.dim = quot.projection.rows();
    b.lact.assign(quot.induced.begin(), quot.induced.begin() + src->lact.size());
    b.ract.assign(quot.induced.begin() + src->lact.size(), quot.induced.end());
    b.name = name.empty() ? "coeq(" + src->name + ")" : name;
    return {make_obj(std::move(b)), quot.projection};
}

} // namespace skewmon
