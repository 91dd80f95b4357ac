#pragma once

#include "skewmon/bialgebroid.hpp"

namespace skewmon {

// E = End(R_R) is the base algebra R acting by left multiplication; an
// E-object in the module category is a bimodule, its left action being the
// E-action. Everything here is relative to the right-monoidal structure a
// bialgebroid induces on right R-modules.

// The (2,1)-type object on a product carrier K (*) L: two left E-actions
// and the right E-action attached to the product sign.
struct E2Object {
    Obj carrier;
    std::vector<Mat> lam1, lam2, rho1;
    Report checks; // unitality/multiplicativity/commutation over the E-basis
};
E2Object product_actions(const BialgebroidStructure& s, const Obj& k, const Obj& l);

// The right action attached to the product sign of K (*) L, for one element
// r in E presented as an endo-arrow of the unit object.
Mat rho1_action(const SkewMonStructure& s, const BimodMap& e, const Obj& k, const Obj& l);
Mat rho1_action(const BialgebroidStructure& s, const Obj& k, const Obj& l, std::size_t i);

// The relation table between the lambda/rho actions and the structure maps,
// evaluated over the given E-maps on probe objects. Probe lact families must
// be indexed consistently with e_maps.
Report check_lambda_rho_table(const SkewMonStructure& s, const std::vector<BimodMap>& e_maps,
                              const std::vector<Obj>& probes);
Report check_lambda_rho_table(const BialgebroidStructure& s, const std::vector<Obj>& probes);

// Center (equalizer of lambda1/rho1, E-object via lambda2) and quotient
// (coequalizer of rho1/lambda2, E-object via lambda1) of K (*) L.
struct CenterData {
    Obj ob;
    Mat z; // inclusion
};
CenterData center(const BialgebroidStructure& s, const Obj& k, const Obj& l);

struct QuotientData {
    Obj ob;
    Mat q;    // projection
    Mat sect; // linear section of q
};
QuotientData quotient(const BialgebroidStructure& s, const Obj& k, const Obj& l);

// theta = q . z, an E-map between the center and the quotient.
struct ThetaData {
    Mat theta;
    Report checks;
};
ThetaData theta(const BialgebroidStructure& s, const Obj& k, const Obj& l);

// The quotient right-monoidal structure (*)_q on bimodules: unique structure
// making (forget, q, 1_R) a right-monoidal functor into the base structure.
class QuotientStructure : public SkewMonStructure {
public:
    explicit QuotientStructure(BialgebroidStructureRef base);

    Obj unit() const override { return unit_; }
    Obj ob(const Obj& a, const Obj& b) const override;
    BimodMap mor(const BimodMap& f, const BimodMap& g) const override;
    BimodMap gamma(const Obj& l, const Obj& m, const Obj& n) const override;
    BimodMap eta(const Obj& m) const override;
    BimodMap eps(const Obj& m) const override;

    const BialgebroidStructure& base() const { return *base_; }
    // q_{L,M}: L (*) M -> L (*)_q M in the base category
    BimodMap q_map(const Obj& l, const Obj& m) const;
    Mat q_section(const Obj& l, const Obj& m) const;
    // the right-monoidal functor (forget, q, 1_R)
    SkewMonFunctorData forgetful_functor() const;

private:
    BialgebroidStructureRef base_;
    Obj unit_;
    struct QProd {
        Obj ob;
        Mat q, sect;
    };
    mutable std::map<std::pair<const void*, const void*>, QProd> cache_;
    mutable std::map<std::tuple<const void*, const void*, const void*>, BimodMap> gamma_cache_;
    const QProd& prod(const Obj& a, const Obj& b) const;
};

// The center right-monoidal structure (*)_z: (forget, z, 1_R) becomes a
// right-opmonoidal functor.
class CenterStructure : public SkewMonStructure {
public:
    explicit CenterStructure(BialgebroidStructureRef base);

    Obj unit() const override { return unit_; }
    Obj ob(const Obj& a, const Obj& b) const override;
    BimodMap mor(const BimodMap& f, const BimodMap& g) const override;
    BimodMap gamma(const Obj& l, const Obj& m, const Obj& n) const override;
    BimodMap eta(const Obj& m) const override;
    BimodMap eps(const Obj& m) const override;

    const BialgebroidStructure& base() const { return *base_; }
    BimodMap z_map(const Obj& l, const Obj& m) const; // L (*)_z M -> L (*) M
    SkewOpmonFunctorData forgetful_opfunctor() const;

private:
    BialgebroidStructureRef base_;
    Obj unit_;
    struct ZProd {
        Obj ob;
        Mat z;
    };
    mutable std::map<std::pair<const void*, const void*>, ZProd> cache_;
    mutable std::map<std::tuple<const void*, const void*, const void*>, BimodMap> gamma_cache_;
    const ZProd& prod(const Obj& a, const Obj& b) const;
};

// kappa_M = q_{R,M}: monad morphism from T_q to T; zeta_L = z_{L,R}: comonad
// morphism from Q^z to Q. Both come with their defining equation checks.
MonadMorphism kappa(const QuotientStructure& s, const ProbeSet& p);
MonadMorphism zeta(const CenterStructure& s, const ProbeSet& p);

// Eilenberg-Moore data over the canonical (co)monad of a structure.
struct TModule {
    Obj carrier;
    Mat action; // R (*) M -> M
};
struct QComodule {
    Obj carrier;
    Mat coaction; // M -> M (*) R
};
Report check_tmodule(const SkewMonStructure& s, const TModule& m);
Report check_qcomodule(const SkewMonStructure& s, const QComodule& m);
Report check_entwined(const SkewMonStructure& s, const Obj& carrier, const Mat& action,
                      const Mat& coaction);
Report check_module_map(const SkewMonStructure& s, const TModule& a, const TModule& b,
                        const Mat& t);
Report check_comodule_map(const SkewMonStructure& s, const QComodule& a, const QComodule& b,
                          const Mat& t);
// The split-equalizer presentation of a comodule (coaction equalizes delta
// against Delta (*) R, split by the counit).
Report check_comodule_split_equalizer(const SkewMonStructure& s, const QComodule& m);

// Lemma-level induced E-actions on modules/comodules, with monoid-morphism
// verification and equivariance of supplied maps.
struct InducedAction {
    std::vector<Mat> action; // per E-basis element
    Report checks;
};
InducedAction induced_e_action(const BialgebroidStructure& s, const TModule& m,
                               const std::vector<Mat>& module_maps = {});
InducedAction induced_e_action(const BialgebroidStructure& s, const QComodule& m,
                               const std::vector<Mat>& comodule_maps = {});

// Factorizations through the center/quotient of the free (co)module carrier.
struct Factorization {
    Mat factor;
    Report checks;
};
Factorization factorize_coaction(const BialgebroidStructure& s, const QComodule& m);
Factorization factorize_action(const BialgebroidStructure& s, const TModule& m);

// Extensional checks of the equivalence E_{T_q} ~ M_T on sample module
// pairs: the hom-spaces computed on both sides coincide.
struct TqModule {
    Obj carrier; // bimodule
    Mat action;  // T_q N -> N
};
Report phi_q_equivalence(const QuotientStructure& s,
                         const std::vector<std::pair<TqModule, TqModule>>& sample_pairs);

// The natural isomorphism T_q N ~ N (x)_{R^e} H, verified invertible and
// natural on the supplied probe maps.
struct TqTensorResult {
    Report checks;
    std::vector<std::size_t> tq_dims, tensor_dims;
};
TqTensorResult tq_as_tensor(const QuotientStructure& s, const ProbeSet& probes);

// Default bimodule probes for the quotient/center structures on E.
std::vector<Obj> default_e_probes(const BialgebroidStructure& s);

} // namespace skewmon
