#include "skewmon/bialgebroid.hpp"

namespace skewmon {

namespace {

Mat swap_perm(Field f, std::size_t a, std::size_t b)
{
    // permutation matrix for x (x) y |-> y (x) x
    Mat m(f, b * a, a * b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            m.set_int(j * a + i, i * b + j, 1);
    return m;
}

// Balancing relation columns for a tensor-over quotient: column (i,(ja,jb))
// is ract[i].col(ja) (x) e_jb - e_ja (x) lact[i].col(jb). Assembled entry by
// entry to avoid Kronecker temporaries.
Mat balancing_relations(const std::vector<Mat>& ract, const std::vector<Mat>& lact)
{
    const std::size_t r = ract.size();
    const std::size_t da = ract[0].rows(), db = lact[0].rows();
    Mat out(ract[0].field(), da * db, r * da * db);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t ja = 0; ja < da; ++ja)
            for (std::size_t jb = 0; jb < db; ++jb) {
                const std::size_t col = (i * da + ja) * db + jb;
                for (std::size_t t = 0; t < da; ++t) {
                    Rat v = ract[i].get(t, ja);
                    if (!v.is_zero())
                        out.set(t * db + jb, col, v);
                }
                for (std::size_t t = 0; t < db; ++t) {
                    Rat v = lact[i].get(t, jb);
                    if (!v.is_zero()) {
                        const std::size_t row = ja * db + t;
                        out.set(row, col, out.get(row, col) - v);
                    }
                }
            }
    return out;
}

// (I_l (x) S (x) I_r) * X for column-sparse S and X, built entrywise.
Mat middle_expand_sparse(std::size_t l, const Mat& s, std::size_t rd, const Mat& x)
{
    if (x.rows() != l * s.cols() * rd)
        throw StructuralError("middle_expand_sparse: shape mismatch");
    Mat out(s.field(), l * s.rows() * rd, x.cols());
    for (std::size_t xr = 0; xr < x.rows(); ++xr) {
        const std::size_t k = xr % rd;
        const std::size_t q = (xr / rd) % s.cols();
        const std::size_t i = xr / (rd * s.cols());
        bool row_used = false;
        for (std::size_t j = 0; j < x.cols() && !row_used; ++j)
            row_used = !x.get(xr, j).is_zero();
        if (!row_used)
            continue;
        for (std::size_t p = 0; p < s.rows(); ++p) {
            Rat w = s.get(p, q);
            if (w.is_zero())
                continue;
            const std::size_t orow = (i * s.rows() + p) * rd + k;
            for (std::size_t j = 0; j < x.cols(); ++j) {
                Rat v = x.get(xr, j);
                if (!v.is_zero())
                    out.set(orow, j, out.get(orow, j) + w * v);
            }
        }
    }
    return out;
}

} // namespace

RightBialgebroid::RightBialgebroid(AlgebraRef base_in, AlgebraRef total_in, Mat s_in, Mat t_in,
                                   Mat delta_into_hh, Mat counit_in, std::string name_in)
    : base(std::move(base_in)), total(std::move(total_in)), s(std::move(s_in)),
      t(std::move(t_in)), counit(std::move(counit_in)), name(std::move(name_in))
{
    const std::size_t h = total->dim(), r = base->dim();
    if (s.rows() != h || s.cols() != r)
        throw StructuralError("bialgebroid.s: expected " + std::to_string(h) + "x" +
                              std::to_string(r));
    if (t.rows() != h || t.cols() != r)
        throw StructuralError("bialgebroid.t: expected " + std::to_string(h) + "x" +
                              std::to_string(r));
    if (counit.rows() != r || counit.cols() != h)
        throw StructuralError("bialgebroid.counit: expected " + std::to_string(r) + "x" +
                              std::to_string(h));
    if (delta_into_hh.rows() != h * h || delta_into_hh.cols() != h)
        throw StructuralError("bialgebroid.Delta: expected " + std::to_string(h * h) + "x" +
                              std::to_string(h));
    for (std::size_t i = 0; i < r; ++i) {
        Mat si = s.col(i), ti = t.col(i);
        lambda1.push_back(total->rmul_vec(ti));
        rho1.push_back(total->lmul_vec(ti));
        lambda2.push_back(total->lmul_vec(si));
        rho2.push_back(total->rmul_vec(si));
    }
    // X2 = H (x) H modulo a s(r) (x) b - a (x) b t(r)
    Field f = field();
    Mat idh = Mat::identity(f, h);
    std::vector<Mat> rels;
    for (std::size_t i = 0; i < r; ++i)
        rels.push_back(Mat::kron(rho2[i], idh) - Mat::kron(idh, lambda1[i]));
    auto cok = Mat::hstack(rels).cokernel_projection();
    x2_proj = std::move(cok.projection);
    x2_sect = std::move(cok.section);
    delta = x2_proj * delta_into_hh;
    delta_lift = x2_sect * delta;
}

Report check_bialgebroid(const RightBialgebroid& b)
{
    Report rep;
    rep.merge(check_algebra(*b.base));
    rep.merge(check_algebra(*b.total));
    const Field f = b.field();
    const std::size_t h = b.hdim(), r = b.rdim();
    const Algebra& R = *b.base;
    const Algebra& H = *b.total;
    Mat idh = Mat::identity(f, h);
    Mat swap_rr = swap_perm(f, r, r);

    rep.add_eq("bgd-s-mult", "bgd-s-mult", b.s * R.mult(), H.mult() * Mat::kron(b.s, b.s));
    rep.add_eq("bgd-s-unit", "bgd-s-mult", b.s * R.unit(), H.unit());
    rep.add_eq("bgd-t-antimult", "bgd-t-antimult", b.t * R.mult(),
               H.mult() * Mat::kron(b.t, b.t) * swap_rr);
    rep.add_eq("bgd-t-unit", "bgd-t-antimult", b.t * R.unit(), H.unit());
    rep.add_eq("bgd-st-commute", "bgd-st-commute", H.mult() * Mat::kron(b.s, b.t),
               H.mult() * Mat::kron(b.t, b.s) * swap_rr);

    // pairwise commutation of the four actions
    const std::vector<std::pair<const char*, const std::vector<Mat>*>> families = {
        {"lambda1", &b.lambda1}, {"rho1", &b.rho1}, {"lambda2", &b.lambda2}, {"rho2", &b.rho2}};
    for (std::size_t x = 0; x < families.size(); ++x)
        for (std::size_t y = x + 1; y < families.size(); ++y) {
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i)
                for (std::size_t j = 0; j < r && ok; ++j)
                    ok = (*families[x].second)[i] * (*families[y].second)[j] ==
                         (*families[y].second)[j] * (*families[x].second)[i];
            if (ok)
                rep.add_pass(std::string("bgd-actions-commute[") + families[x].first + "," +
                                 families[y].first + "]",
                             "bgd-actions-commute");
            else
                rep.add_fail(std::string("bgd-actions-commute[") + families[x].first + "," +
                                 families[y].first + "]",
                             "bgd-actions-commute");
        }

    // X2 bimodule actions for the coring structure: lambda1 on the first
    // factor, rho2 on the second.
    auto x2_act = [&](const Mat& first, const Mat& second) {
        return b.x2_proj * Mat::kron(first, idh) * Mat::kron(idh, second) * b.x2_sect;
    };
    for (std::size_t i = 0; i < r; ++i) {
        Mat left = x2_act(b.lambda1[i], idh);
        Mat right = x2_act(idh, b.rho2[i]);
        rep.add_eq("bgd-coring-left-linear[" + std::to_string(i) + "]", "bgd-coring-linear",
                   b.delta * b.lambda1[i], left * b.delta);
        rep.add_eq("bgd-coring-right-linear[" + std::to_string(i) + "]", "bgd-coring-linear",
                   b.delta * b.rho2[i], right * b.delta);
    }

    // X3 = H^3 modulo the two balancing families; coassociativity through it
    {
        std::vector<Mat> rels;
        for (std::size_t i = 0; i < r; ++i) {
            rels.push_back(Mat::kron(Mat::kron(b.rho2[i], idh), idh) -
                           Mat::kron(Mat::kron(idh, b.lambda1[i]), idh));
            rels.push_back(Mat::kron(Mat::kron(idh, b.rho2[i]), idh) -
                           Mat::kron(Mat::kron(idh, idh), b.lambda1[i]));
        }
        auto x3 = Mat::hstack(rels).cokernel_projection();
        Mat d_first_raw = x3.projection * Mat::kron(b.delta_lift, idh);  // on H(x)H
        Mat d_second_raw = x3.projection * Mat::kron(idh, b.delta_lift); // on H(x)H
        auto d_first = factor_through_projection(d_first_raw, b.x2_proj, b.x2_sect);
        auto d_second = factor_through_projection(d_second_raw, b.x2_proj, b.x2_sect);
        if (!d_first || !d_second)
            rep.add_fail("bgd-coring-coassoc", "bgd-coring-coassoc",
                         "(Delta x id) or (id x Delta) not well defined on X2");
        else
            rep.add_eq("bgd-coring-coassoc", "bgd-coring-coassoc", (*d_first) * b.delta,
                       (*d_second) * b.delta);
    }

    // counitality: a (x) b |-> a s(eps(b)) and a (x) b |-> b t(eps(a))
    {
        Mat s_eps = b.s * b.counit, t_eps = b.t * b.counit;
        Mat right_leg_raw = H.mult() * Mat::kron(idh, s_eps);
        Mat left_leg_raw = H.mult() * Mat::kron(idh, t_eps) * swap_perm(f, h, h);
        auto right_leg = factor_through_projection(right_leg_raw, b.x2_proj, b.x2_sect);
        auto left_leg = factor_through_projection(left_leg_raw, b.x2_proj, b.x2_sect);
        if (!right_leg || !left_leg)
            rep.add_fail("bgd-coring-counit", "bgd-coring-counit",
                         "counit legs not well defined on X2");
        else {
            rep.add_eq("bgd-coring-counit-right", "bgd-coring-counit", (*right_leg) * b.delta,
                       idh);
            rep.add_eq("bgd-coring-counit-left", "bgd-coring-counit", (*left_leg) * b.delta, idh);
        }
    }

    rep.add_eq("bgd-delta-unit", "bgd-delta-unit", b.delta * H.unit(),
               b.x2_proj * Mat::kron(H.unit(), H.unit()));

    // Takeuchi condition: s(r)-on-first equals t(r)-on-second after Delta
    {
        std::vector<Mat> us, vs;
        for (std::size_t i = 0; i < r; ++i) {
            us.push_back(x2_act(b.lambda2[i], idh));
            vs.push_back(x2_act(idh, b.rho1[i]));
        }
        bool tak = true;
        for (std::size_t i = 0; i < r && tak; ++i)
            tak = (us[i] * b.delta == vs[i] * b.delta);
        if (tak)
            rep.add_pass("bgd-takeuchi", "bgd-takeuchi");
        else
            rep.add_fail("bgd-takeuchi", "bgd-takeuchi",
                         "Delta does not land in the Takeuchi subspace");
        // multiplicativity of Delta, factorwise through the fixed lifts;
        // meaningful precisely when the Takeuchi condition holds
        std::vector<std::size_t> shuffle =
            axis_permutation({h, h, h, h}, {0, 2, 1, 3}); // (a,b,c,d) -> (a,c,b,d)
        Mat rhs = b.x2_proj * Mat::kron(H.mult(), H.mult());
        rhs = rhs.reindex_cols(shuffle);
        rhs = rhs * Mat::kron(b.delta_lift, b.delta_lift);
        rep.add_eq("bgd-delta-mult", "bgd-delta-mult", b.delta * H.mult(), rhs);
    }

    // counit module conditions
    Mat eps_mult = b.counit * H.mult();
    rep.add_eq("bgd-counit-s", "bgd-counit-s", eps_mult * Mat::kron(idh, b.s * b.counit),
               eps_mult);
    rep.add_eq("bgd-counit-t", "bgd-counit-t", eps_mult * Mat::kron(idh, b.t * b.counit),
               eps_mult);
    rep.add_eq("bgd-counit-unit", "bgd-counit-unit", b.counit * H.unit(), R.unit());
    return rep;
}

BialgebroidStructure::BialgebroidStructure(BialgebroidRef b) : b_(std::move(b))
{
    // Probe objects are bimodules throughout: the left action is the
    // E = End(R_R) ~ R action, ignored by the product (which only consumes
    // right actions) but consumed by the E-object machinery.
    unit_ = make_obj(Bimodule::regular(b_->base, "R"));
    h_ = make_obj(Bimodule::bimodule(b_->base, b_->base, b_->lambda2, b_->rho2, "H"));
}

const BialgebroidStructure::ProdData& BialgebroidStructure::product_data(const Obj& a,
                                                                         const Obj& c) const
{
    const std::pair<const void*, const void*> key{a.get(), c.get()};
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = prod_cache_.find(key);
        if (it != prod_cache_.end())
            return it->second;
    }
    const std::size_t m = a->dim, n = c->dim, r = b_->rdim();

    // U = N (x)_{R2} H: n.r (x) h ~ n (x) s(r)h
    Mat rel1 = balancing_relations(c->ract, b_->lambda2);
    auto cok1 = rel1.cokernel_projection();
    // residual actions descend because left and right multiplications on H
    // commute with the balancing maps (s/t images commute); validity of the
    // instance itself is check_bialgebroid's business
    std::vector<Mat> u_lam1, u_rho2;
    for (std::size_t i = 0; i < r; ++i) {
        u_lam1.push_back(cok1.projection.mul_id_kron(n, b_->lambda1[i]).mul_colsparse(cok1.section));
        u_rho2.push_back(cok1.projection.mul_id_kron(n, b_->rho2[i]).mul_colsparse(cok1.section));
    }

    // M (x)_{R1} U: m.r (x) u ~ m (x) lambda1(r)u
    Mat rel2 = balancing_relations(a->ract, u_lam1);
    auto cok2 = rel2.cokernel_projection();

    std::vector<Mat> ract;
    for (std::size_t i = 0; i < r; ++i)
        ract.push_back(cok2.projection.mul_id_kron(m, u_rho2[i]).mul_colsparse(cok2.section));
    Bimodule out = Bimodule::right_module(b_->base, std::move(ract),
                                          "(" + a->name + "*" + c->name + ")");
    ProdData data;
    data.ob = make_obj(std::move(out));
    data.proj = cok2.projection.mul_id_kron(m, cok1.projection);
    // sect and the stage-2 kernel piece lift through I_m (x) cok1.section
    data.sect = middle_expand_sparse(m, cok1.section, 1, cok2.section);
    data.rel_mid = std::move(rel1);
    data.rel_outer_lifted = middle_expand_sparse(m, cok1.section, 1, rel2);

    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = prod_cache_.emplace(key, std::move(data));
    return it->second;
}

Obj BialgebroidStructure::ob(const Obj& a, const Obj& c) const { return product_data(a, c).ob; }

BimodMap BialgebroidStructure::mor(const BimodMap& f, const BimodMap& g) const
{
    // f (*) g = proj' . (f (x) g (x) id_H) . sect. Module maps always descend;
    // probe maps come from hom bases, so no per-call balancing check is run.
    const ProdData& src = product_data(f.src, g.src);
    const ProdData& dst = product_data(f.dst, g.dst);
    const std::size_t h = b_->hdim();
    Mat idh = Mat::identity(b_->field(), h);
    Mat y = dst.proj.mul_kron_id(f.mat, g.dst->dim * h);
    y = y.mul_id_kron(f.src->dim, Mat::kron(g.mat, idh));
    return {src.ob, dst.ob, y.mul_colsparse(src.sect)};
}

BimodMap BialgebroidStructure::gamma(const Obj& l, const Obj& m, const Obj& n) const
{
    const std::tuple<const void*, const void*, const void*> key{l.get(), m.get(), n.get()};
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = gamma_cache_.find(key);
        if (it != gamma_cache_.end())
            return it->second;
    }
    BimodMap g = gamma_uncached(l, m, n);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = gamma_cache_.emplace(key, std::move(g));
    return it->second;
}

BimodMap BialgebroidStructure::gamma_uncached(const Obj& l, const Obj& m, const Obj& n) const
{
    const Field f = b_->field();
    const std::size_t dl = l->dim, dm = m->dim, dn = n->dim, h = b_->hdim();
    const ProdData& mn = product_data(m, n);
    const ProdData& l_mn = product_data(l, mn.ob);
    const ProdData& lm = product_data(l, m);
    const ProdData& lm_n = product_data(lm.ob, n);

    // target projection from the free space L(x)M(x)H_a(x)N(x)H_b, kept
    // transposed so the per-column assembly walks memory sequentially
    Mat psi_t = lm_n.proj.mul_kron_id(lm.proj, dn * h).transpose();
    const std::size_t tdim = psi_t.cols();

    // sparse legs of Delta and of the multiplication
    auto cols_of = [&](const Mat& mat) {
        std::vector<std::vector<std::pair<std::size_t, Rat>>> cols(mat.cols());
        for (std::size_t j = 0; j < mat.cols(); ++j)
            for (std::size_t i = 0; i < mat.rows(); ++i) {
                Rat v = mat.get(i, j);
                if (!v.is_zero())
                    cols[j].push_back({i, v});
            }
        return cols;
    };
    auto delta_legs = cols_of(b_->delta_lift);    // h |-> sum (a,b)
    auto mult_legs = cols_of(b_->total->mult());  // (g,b) |-> sum c

    // assembly over the free source L(x)M(x)N(x)H_g(x)H_h:
    // (l,m,n,g,h) |-> sum psi[(l,m,a,n,c)] with a,b from Delta(h), c = g.b
    Mat acc_t(f, dl * dm * dn * h * h, tdim);
    const bool prime = f.is_prime();
    const std::int64_t p = prime ? (std::int64_t)f.p() : 0;
    std::size_t j = 0;
    for (std::size_t il = 0; il < dl; ++il)
        for (std::size_t im = 0; im < dm; ++im)
            for (std::size_t in = 0; in < dn; ++in)
                for (std::size_t ig = 0; ig < h; ++ig)
                    for (std::size_t ih = 0; ih < h; ++ih, ++j) {
                        for (const auto& [ab, ca] : delta_legs[ih]) {
                            const std::size_t a = ab / h, bb = ab % h;
                            for (const auto& [c, cm] : mult_legs[ig * h + bb]) {
                                const Rat coef = ca * cm;
                                const std::size_t pc =
                                    (((il * dm + im) * h + a) * dn + in) * h + c;
                                if (prime) {
                                    const std::int64_t cv =
                                        ((coef.num % p) + p) % p; // den == 1 over F_p
                                    const std::int64_t* src = psi_t.raw() + pc * tdim;
                                    std::int64_t* dst = acc_t.raw() + j * tdim;
                                    for (std::size_t t = 0; t < tdim; ++t)
                                        dst[t] = (dst[t] + cv * src[t]) % p;
                                } else {
                                    for (std::size_t t = 0; t < tdim; ++t) {
                                        Rat v = psi_t.get(pc, t);
                                        if (!v.is_zero())
                                            acc_t.set(j, t, acc_t.get(j, t) + coef * v);
                                    }
                                }
                            }
                        }
                    }

    // Well-definedness on the source quotient means the assembled map kills
    // its kernel: I_l (x) ker(mn.proj) (x) I_h plus the kernel of l_mn.proj
    // lifted through I_l (x) mn.sect (x) I_h. Each kernel splits into its
    // stage-1 and stage-2 relation pieces.
    bool ok = acc_t.kills_middle_kron_t(dl * dm, mn.rel_mid, h) &&
              acc_t.kills_middle_kron_t(dl, mn.rel_outer_lifted, h);
    // contract the middle axis through mn.sect: rows (i,q,k) of the result
    // are sums of rows (i,p,k) of acc_t weighted by sect[p,q]
    const std::size_t mn_dim = mn.ob->dim, mn_free = dm * dn * h;
    Mat acc_s_t(f, dl * mn_dim * h, tdim);
    for (std::size_t q = 0; q < mn_dim; ++q)
        for (std::size_t pp = 0; pp < mn_free; ++pp) {
            const Rat w = mn.sect.get(pp, q);
            if (w.is_zero())
                continue;
            for (std::size_t i = 0; i < dl; ++i)
                for (std::size_t k = 0; k < h; ++k) {
                    const std::size_t dstrow = (i * mn_dim + q) * h + k;
                    const std::size_t srcrow = (i * mn_free + pp) * h + k;
                    if (prime && w.num == 1) {
                        const std::int64_t* src = acc_t.raw() + srcrow * tdim;
                        std::int64_t* dst = acc_s_t.raw() + dstrow * tdim;
                        for (std::size_t t = 0; t < tdim; ++t)
                            dst[t] = (dst[t] + src[t]) % p;
                    } else {
                        for (std::size_t t = 0; t < tdim; ++t)
                            acc_s_t.set(dstrow, t,
                                        acc_s_t.get(dstrow, t) + w * acc_t.get(srcrow, t));
                    }
                }
        }
    ok = ok && acc_s_t.kills_middle_kron_t(dl, l_mn.rel_mid, 1) &&
         acc_s_t.mul_t_colsparse(l_mn.rel_outer_lifted).is_zero();
    if (!ok)
        throw StructuralError("gamma: not well defined on balancing relations");
    return {l_mn.ob, lm_n.ob, acc_s_t.mul_t_colsparse(l_mn.sect)};
}

BimodMap BialgebroidStructure::eta(const Obj& m) const
{
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = eta_cache_.find(m.get());
        if (it != eta_cache_.end())
            return it->second;
    }
    const ProdData& rm = product_data(unit_, m);
    Mat free_map =
        Mat::kron(Mat::kron(b_->base->unit(), Mat::identity(b_->field(), m->dim)),
                  b_->total->unit());
    BimodMap res{m, rm.ob, rm.proj * free_map};
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = eta_cache_.emplace(m.get(), std::move(res));
    return it->second;
}

BimodMap BialgebroidStructure::eps(const Obj& m) const
{
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = eps_cache_.find(m.get());
        if (it != eps_cache_.end())
            return it->second;
    }
    const Field f = b_->field();
    const ProdData& mr = product_data(m, unit_);
    const std::size_t dm = m->dim, r = b_->rdim(), h = b_->hdim();
    // act: M (x) R -> M, m (x) r |-> m.r
    Mat act(f, dm, dm * r);
    for (std::size_t j = 0; j < dm; ++j)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t tt = 0; tt < dm; ++tt) {
                Rat v = m->ract[i].get(tt, j);
                if (!v.is_zero())
                    act.set(tt, j * r + i, v);
            }
    // q: R (x) H -> R, r (x) h |-> eps(s(r)h)
    Mat q = b_->counit * b_->total->mult() * Mat::kron(b_->s, Mat::identity(f, h));
    Mat free_map = act.mul_id_kron(dm, q);
    auto e = factor_through_projection(free_map, mr.proj, mr.sect);
    if (!e)
        throw StructuralError("eps: not well defined on balancing relations");
    BimodMap res{mr.ob, m, std::move(*e)};
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = eps_cache_.emplace(m.get(), std::move(res));
    return it->second;
}

BimodMap BialgebroidStructure::e_basis_map(std::size_t i) const
{
    return {unit_, unit_, b_->base->lmul(i)};
}

GaloisData galois_map(const RightBialgebroid& b)
{
    const Field f = b.field();
    const std::size_t h = b.hdim(), r = b.rdim();
    Mat idh = Mat::identity(f, h);
    // Y2 = H (x)_{R2} H: g s(r) (x) h ~ g (x) s(r) h
    std::vector<Mat> rels;
    for (std::size_t i = 0; i < r; ++i)
        rels.push_back(Mat::kron(b.rho2[i], idh) - Mat::kron(idh, b.lambda2[i]));
    auto y2 = Mat::hstack(rels).cokernel_projection();

    Mat acc = b.x2_proj;                              // cols (a, c)
    acc = acc.mul_id_kron(h, b.total->mult());        // cols (a, g, b)
    acc = acc.reindex_cols(axis_permutation({h, h, h}, {1, 0, 2})); // (g, a, b)
    acc = acc.mul_id_kron(h, b.delta_lift);           // cols (g, h)
    auto beta = factor_through_projection(acc, y2.projection, y2.section);
    if (!beta)
        throw StructuralError("galois_map: not well defined on balancing relations");
    GaloisData out;
    out.map = std::move(*beta);
    out.domain_dim = out.map.cols();
    out.codomain_dim = out.map.rows();
    out.rank = out.map.rank();
    out.invertible = out.domain_dim == out.codomain_dim && out.rank == out.domain_dim;
    return out;
}

HopfResult is_hopf(const RightBialgebroid& b)
{
    HopfResult res;
    res.galois = galois_map(b);
    auto st = std::make_shared<BialgebroidStructure>(std::make_shared<RightBialgebroid>(b));
    Obj r = st->unit();
    BimodMap g = st->gamma(r, r, r);
    res.gamma_rrr_invertible = g.mat.is_invertible();
    res.hopf = res.galois.invertible;
    res.agree = res.hopf == res.gamma_rrr_invertible;
    return res;
}

RightBialgebroid from_bialgebra(AlgebraRef h, const Mat& delta_into_hh, const Mat& counit,
                                std::string name)
{
    AlgebraRef k = make_algebra(Algebra::field_unit(h->field()));
    Mat unit_as_map = h->unit(); // k -> H
    return RightBialgebroid(k, h, unit_as_map, unit_as_map, delta_into_hh, counit,
                            std::move(name));
}

RightBialgebroid enveloping_bialgebroid(const AlgebraRef& r, std::string name)
{
    const Field f = r->field();
    const std::size_t d = r->dim();
    AlgebraRef h = make_algebra(Algebra::enveloping(*r));
    Mat s(f, d * d, d), t(f, d * d, d);
    for (std::size_t j = 0; j < d; ++j) {
        Mat sj = Mat::kron(r->unit(), Mat::basis_col(f, d, j)); // 1 (x) r
        Mat tj = Mat::kron(Mat::basis_col(f, d, j), r->unit()); // r (x) 1
        for (std::size_t i = 0; i < d * d; ++i) {
            s.set(i, j, sj.get(i, 0));
            t.set(i, j, tj.get(i, 0));
        }
    }
    Mat delta(f, d * d * d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat leg1 = Mat::kron(Mat::basis_col(f, d, i), r->unit()); // r' (x) 1
            Mat leg2 = Mat::kron(r->unit(), Mat::basis_col(f, d, j)); // 1 (x) r
            Mat col = Mat::kron(leg1, leg2);
            for (std::size_t k = 0; k < col.rows(); ++k)
                delta.set(k, i * d + j, col.get(k, 0));
        }
    Mat counit(f, d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat prod = r->product(Mat::basis_col(f, d, i), Mat::basis_col(f, d, j));
            for (std::size_t k = 0; k < d; ++k)
                counit.set(k, i * d + j, prod.get(k, 0));
        }
    return RightBialgebroid(r, h, s, t, delta, counit,
                            name.empty() ? r->name() + "^e" : std::move(name));
}

} // namespace skewmon
