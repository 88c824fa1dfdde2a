#pragma once

#include "tambcat/bundles.hpp"

#include <functional>

namespace tambcat {

// Bigraded family of base objects with bilateral action maps. value(t,s) is
// contravariant in t (the target category) and covariant in s. Over Bool the
// action maps carry no data and are reconstructed on demand; validators work
// from the value tables instead.
struct Profunctor {
    CatPtr src, tgt;
    std::vector<BaseObject> val;            // tgt.n x src.n
    std::vector<BaseMap> lact_, ract_;      // Rat only

    Base base() const { return src->base; }
    const BaseObject& value(Obj t, Obj s) const { return val[t * src->n + s]; }
    BaseObject& value_ref(Obj t, Obj s) { return val[t * src->n + s]; }
    // tgt(t2,t) (x) P(t,s) -> P(t2,s)
    BaseMap lact(Obj t2, Obj t, Obj s) const;
    // P(t,s) (x) src(s,s2) -> P(t,s2)
    BaseMap ract(Obj t, Obj s, Obj s2) const;
    BaseMap apply_left(Obj t2, Obj t, Obj s, const Element& f) const;
    BaseMap apply_right(Obj t, Obj s, Obj s2, const Element& g) const;
};

Profunctor make_profunctor(CatPtr src, CatPtr tgt);
void fill_profunctor_actions(Profunctor& p,
                             const std::function<BaseMap(Obj, Obj, Obj)>& lact,
                             const std::function<BaseMap(Obj, Obj, Obj)>& ract);
ValidationReport validate_profunctor(const Profunctor& p);
Profunctor hom_profunctor(CatPtr c);
Profunctor zero_profunctor(CatPtr src, CatPtr tgt);

struct TambaraModule {
    Profunctor p;
    ModulePtr srcM, tgtM; // module structures over a common C
    std::vector<BaseMap> zeta_; // Rat only: P(t,s) -> P(Ht, Hs), index (H*nT+t)*nS+s

    Base base() const { return p.base(); }
    const MonoidalStructure& C() const { return *srcM->C; }
    int nC() const { return srcM->nC(); }
    int nS() const { return srcM->nM(); }
    int nT() const { return tgtM->nM(); }
    const BaseObject& value(Obj t, Obj s) const { return p.value(t, s); }
    BaseMap zeta(Obj H, Obj t, Obj s) const;
};

TambaraModule make_tambara(ModulePtr srcM, ModulePtr tgtM);
void fill_zeta(TambaraModule& t, const std::function<BaseMap(Obj, Obj, Obj)>& zeta);
TambaraModule identity_tambara(ModulePtr m);
TambaraModule zero_tambara(ModulePtr srcM, ModulePtr tgtM);
ValidationReport validate_tambara(const TambaraModule& t);
bool tambara_equal(const TambaraModule& a, const TambaraModule& b); // bit-exact tables

// Morphism data shared by profunctor and Tambara morphisms.
struct TambaraMorphism {
    std::vector<BaseMap> comp; // nT x nS
    const BaseMap& at(Obj t, Obj s, int nS) const { return comp[t * nS + s]; }
};

TambaraMorphism identity_morphism(const TambaraModule& t);
ValidationReport validate_profunctor_morphism(const Profunctor& s, const Profunctor& t, const TambaraMorphism& m);
ValidationReport validate_tambara_morphism(const TambaraModule& s, const TambaraModule& t, const TambaraMorphism& m);
bool morphism_is_iso(const TambaraMorphism& m);
TambaraMorphism invert_morphism(const TambaraMorphism& m); // throws NotInvertible
TambaraMorphism compose_morphisms(const TambaraMorphism& g, const TambaraMorphism& f);
bool morphisms_equal(const TambaraMorphism& a, const TambaraMorphism& b);

// ---- coends ----

struct CoendPresentation {
    Base base = Base::Rat;
    std::vector<BaseObject> blocks; // per middle object
    std::vector<long> offsets;
    BaseObject ambient;
    QuotientPresentation q;

    const BaseObject& quotient() const { return q.quot; }
    BaseMap inject(Obj b) const;                         // block_b -> ambient
    BaseMap class_of(Obj b) const;                       // block_b -> quotient
    // Induce quotient -> V from an extranatural family block_b -> V.
    // Asserts (Rat) that the family coequalizes the coend relations.
    BaseMap induce(const std::vector<BaseMap>& family, const BaseObject& V) const;
};

// Coend of the diagonal of T over `middle`; `cov` and `contra` give the
// actions with the hom factor first.
struct CoendData {
    const FinCategory* middle = nullptr;
    std::function<BaseObject(Obj, Obj)> value;          // T(b_contra, b_cov)
    std::function<BaseMap(Obj, Obj, Obj)> cov;          // B(x,y) (x) T(bp,x) -> T(bp,y)
    std::function<BaseMap(Obj, Obj, Obj)> contra;       // B(x,y) (x) T(y,bv) -> T(x,bv)
};
CoendPresentation materialize_coend_general(const CoendData& d);

enum class ExtraSide { None, Left, Right };
// Induced map between coend quotients: blockmap(b) = (target block, map) where
// the map is E (x) block_b -> block'_tb (Left), block_b (x) E -> ... (Right)
// or block_b -> block'_tb (None). Returns [E (x)] src.quot -> tgt.quot.
BaseMap induce_between_quotients(const CoendPresentation& src, const CoendPresentation& tgt,
                                 ExtraSide side, const BaseObject& E,
                                 const std::function<std::pair<Obj, BaseMap>(Obj)>& blockmap);

struct ProfComposite {
    Profunctor p;
    std::vector<CoendPresentation> pres; // per (t,s)
    const CoendPresentation& at(Obj t, Obj s) const { return pres[t * p.src->n + s]; }
};

struct TambaraComposite {
    TambaraModule t;
    std::vector<CoendPresentation> pres;
    const CoendPresentation& at(Obj a, Obj b) const { return pres[a * t.p.src->n + b]; }
    ProfComposite as_prof() const { return ProfComposite{t.p, pres}; }
};

// (P . Q)(c,a) = coend_b P(c,b) (x) Q(b,a); requires src(P) == tgt(Q).
ProfComposite compose_profunctors(const Profunctor& P, const Profunctor& Q,
                                  const std::vector<Obj>* generator = nullptr);
TambaraComposite compose_tambara(const TambaraModule& S, const TambaraModule& T);

// full-vs-generator strategy comparison (spec: materialize_coend strategies)
struct StrategyComparison {
    CoendPresentation full, gen;
    BaseMap comparison; // gen quotient -> full quotient
    bool iso = false;
};
StrategyComparison coend_strategy_comparison(const Profunctor& P, const Profunctor& Q, Obj t, Obj s,
                                             const std::vector<Obj>& generator);

// Yoneda unitors on the composite with the identity Tambara module.
struct UnitorData {
    TambaraComposite composite;
    TambaraMorphism fwd; // composite -> T
    TambaraMorphism bwd; // T -> composite
    bool iso = false;
};
enum class Side { Left, Right };
UnitorData yoneda_unitor(const TambaraModule& T, Side side);

// horizontal composition of morphisms through materialized composites
TambaraMorphism hcompose_morphisms(const ProfComposite& srcC, const ProfComposite& tgtC,
                                   const Profunctor& P, const Profunctor& P2, const TambaraMorphism& tp,
                                   const Profunctor& Q, const Profunctor& Q2, const TambaraMorphism& tq);
// associator (P.Q).R -> P.(Q.R) on materialized composites, plus inverse
struct AssocData {
    TambaraMorphism fwd, bwd;
    bool iso = false;
};
AssocData associator(const Profunctor& P, const Profunctor& Q, const Profunctor& R,
                     const ProfComposite& PQ, const ProfComposite& QR,
                     const ProfComposite& PQ_R, const ProfComposite& P_QR);

// ---- operations ----

struct MorphismSpace {
    bool bool_inclusion = false;        // Bool base: relation inclusion S <= T
    std::vector<TambaraMorphism> basis; // Rat
    long dim() const;
};
MorphismSpace tambara_morphism_space(const TambaraModule& S, const TambaraModule& T);
MorphismSpace profunctor_morphism_space(const Profunctor& S, const Profunctor& T);

enum class RestrictSide { Restrict, Corestrict };
TambaraModule restrict_tambara(const TambaraModule& psi, const ModuleFunctor& phi, RestrictSide side);

struct AdjunctionData {
    TambaraModule ell; // Hom(-, Phi -)
    TambaraModule arr; // Hom(Phi -, -)
    TambaraComposite ell_r; // ell . arr  (endo on target)
    TambaraComposite r_ell; // arr . ell  (endo on source)
    TambaraMorphism eta;    // Hom_M -> r_ell
    TambaraMorphism eps;    // ell_r -> Hom_N
    ValidationReport report; // morphism laws + triangle identities
};
TambaraModule representable_tambara(const ModuleFunctor& phi);
AdjunctionData representable_adjunction(const ModuleFunctor& phi);

struct RepresentabilityResult {
    bool representable = false;
    bool strong = false;
    ModuleFunctor functor;
};
RepresentabilityResult is_representable(const TambaraModule& psi);

// Free Tambara modules on C (Theta mode and the general triple coend).
struct FreeTambara {
    TambaraModule t;
    std::vector<CoendPresentation> pres; // per (F,G)
    const CoendPresentation& at(Obj F, Obj G) const { return pres[F * t.p.src->n + G]; }
};
FreeTambara free_tambara_theta(ModulePtr selfC, Obj K, Obj L);
FreeTambara free_tambara_general(ModulePtr selfC, const Profunctor& sigma);
// unit of the free/forgetful adjunction: Sigma -> U F_l Sigma
TambaraMorphism free_tambara_unit(ModulePtr selfC, const Profunctor& sigma, const FreeTambara& free);

TambaraModule transport_tambara_structure(const TambaraModule& t, const Profunctor& target,
                                          const TambaraMorphism& s); // s: t.p -> target invertible

TambaraModule restrict_along_monoidal_functor(const MonoidalFunctor& f, const TambaraModule& t);

struct TambaraCoequalizer {
    TambaraModule quot;
    TambaraMorphism proj;
    std::vector<QuotientPresentation> pres; // per (t,s)
    ValidationReport certificate;           // well-definedness of the induced structure
    // factor a coequalizing morphism through the quotient
    TambaraMorphism factor(const TambaraMorphism& g, const TambaraModule& target) const;
};
TambaraCoequalizer coequalizer_tambara(const TambaraModule& S, const TambaraModule& T,
                                       const TambaraMorphism& p, const TambaraMorphism& b);

} // namespace tambcat
