#pragma once

#include "tambcat/solve.hpp"

#include <memory>
#include <string>

namespace tambcat {

using Obj = int;
using Element = BaseMap; // dom = unit_object(base)

struct CheckItem {
    std::string law;
    std::string witness;
    bool pass = true;
};

struct ValidationReport {
    std::vector<CheckItem> items;
    bool ok() const;
    void check(const std::string& law, const std::string& witness, bool pass);
    void merge(const ValidationReport& other, const std::string& prefix = "");
    std::string first_failure() const;
};

// A finite enriched category: hom objects, structure-constant composition
// comp(a,b,c): hom(b,c) (x) hom(a,b) -> hom(a,c), identity elements.
struct FinCategory {
    Base base = Base::Rat;
    std::string name;
    std::vector<std::string> object_names;
    int n = 0;
    std::vector<BaseObject> hom_;
    std::vector<BaseMap> comp_;
    std::vector<Element> id_;

    const BaseObject& hom(Obj a, Obj b) const { return hom_[a * n + b]; }
    const BaseMap& comp(Obj a, Obj b, Obj c) const { return comp_[(a * n + b) * n + c]; }
    const Element& id(Obj a) const { return id_[a]; }
    std::string obj_name(Obj a) const;
};

using CatPtr = std::shared_ptr<const FinCategory>;

FinCategory make_category(Base base, std::string name, std::vector<std::string> objects);
void set_hom(FinCategory& c, Obj a, Obj b, BaseObject v);
// Derives Bool composition/identities from the hom table (preorder data).
void finish_bool_category(FinCategory& c);

Element make_element(Base base, const BaseObject& cod, std::vector<Rational> coords);
Element zero_element(Base base, const BaseObject& cod);
bool element_exists(const Element& e); // Bool: the witness exists; Rat: always

Element compose_elements(const FinCategory& c, Obj a, Obj b, Obj x, const Element& g, const Element& f);
BaseMap precompose_map(const FinCategory& c, Obj a, Obj b, Obj x, const Element& f);  // hom(b,x) -> hom(a,x)
BaseMap postcompose_map(const FinCategory& c, Obj a, Obj b, Obj x, const Element& g); // hom(a,b) -> hom(a,x)
std::optional<Element> invert_element(const FinCategory& c, Obj a, Obj b, const Element& f);
bool objects_isomorphic(const FinCategory& c, Obj a, Obj b, Element* witness = nullptr);

ValidationReport validate_category(const FinCategory& c);

struct MonoidalStructure {
    CatPtr cat;
    std::vector<Obj> tensor_obj_;    // n*n
    std::vector<BaseMap> tensor_mor_; // hom(a,a2) (x) hom(b,b2) -> hom(ab, a2b2)
    Obj unit = 0;

    int n() const { return cat->n; }
    Obj tensor_obj(Obj a, Obj b) const { return tensor_obj_[a * n() + b]; }
    const BaseMap& tensor_mor(Obj a, Obj b, Obj a2, Obj b2) const {
        return tensor_mor_[((a * n() + b) * n() + a2) * n() + b2];
    }
};

using MonoidalPtr = std::shared_ptr<const MonoidalStructure>;

ValidationReport validate_monoidal(const MonoidalStructure& s);
// b (x) -  on morphisms:  C(a, a2) -> C(b a, b a2)
BaseMap tensor_whisker_left(const MonoidalStructure& s, Obj b, Obj a, Obj a2);
// - (x) b:  C(a, a2) -> C(a b, a2 b)
BaseMap tensor_whisker_right(const MonoidalStructure& s, Obj a, Obj a2, Obj b);
Element tensor_elements(const MonoidalStructure& s, Obj a, Obj a2, Obj b, Obj b2, const Element& f, const Element& g);

// A strict action of a monoidal category on a finite category.
struct ModuleStructure {
    std::string name;
    MonoidalPtr C;
    CatPtr M;
    std::vector<Obj> act_obj_;    // nC x nM
    std::vector<BaseMap> act_mor_; // C(F,G) (x) M(x,y) -> M(Fx, Gy)

    int nC() const { return C->n(); }
    int nM() const { return M->n; }
    Obj act(Obj F, Obj x) const { return act_obj_[F * nM() + x]; }
    const BaseMap& act_mor(Obj F, Obj G, Obj x, Obj y) const {
        return act_mor_[((F * nC() + G) * nM() + x) * nM() + y];
    }
};

using ModulePtr = std::shared_ptr<const ModuleStructure>;

// H . -  on hom spaces: M(x,y) -> M(Hx, Hy)
BaseMap act_on_hom(const ModuleStructure& m, Obj H, Obj x, Obj y);
// - . x  on hom spaces: C(F,G) -> M(Fx, Gx)
BaseMap whisker_at(const ModuleStructure& m, Obj F, Obj G, Obj x);
Element act_element(const ModuleStructure& m, Obj F, Obj G, Obj x, Obj y, const Element& f, const Element& v);

ValidationReport validate_module(const ModuleStructure& m);
ModulePtr self_module(MonoidalPtr c); // C acting on itself by tensoring on the left

struct ModuleFunctor {
    ModulePtr src, tgt;
    std::vector<Obj> ob;          // per src object
    std::vector<BaseMap> mor;     // M(x,y) -> N(ob x, ob y)
    std::vector<Element> phi;     // (F,x): element of N(F . ob x, ob(F . x))
    std::vector<Element> phi_inv; // inverses of phi (filled by finish_module_functor)

    Obj apply(Obj x) const { return ob[x]; }
    const BaseMap& hom_map(Obj x, Obj y) const { return mor[x * (long)src->nM() + y]; }
    const Element& phi_at(Obj F, Obj x) const { return phi[F * (long)src->nM() + x]; }
    const Element& phi_inv_at(Obj F, Obj x) const { return phi_inv[F * (long)src->nM() + x]; }
};

void finish_module_functor(ModuleFunctor& f); // computes phi_inv; throws NotInvertible
ValidationReport validate_module_functor(const ModuleFunctor& f);
ModuleFunctor identity_module_functor(ModulePtr m);
// F |-> F . X with identity coherence (strict actions).
ModuleFunctor evaluation_functor(ModulePtr m, Obj X);
ModuleFunctor compose_module_functors(const ModuleFunctor& g, const ModuleFunctor& f);

struct MonoidalFunctor { // strict
    MonoidalPtr src, tgt;
    std::vector<Obj> ob;
    std::vector<BaseMap> mor; // C(a,b) -> D(Fa, Fb)

    Obj apply(Obj a) const { return ob[a]; }
    const BaseMap& hom_map(Obj a, Obj b) const { return mor[a * (long)src->n() + b]; }
};

ValidationReport validate_monoidal_functor(const MonoidalFunctor& f);
// The C-module category F*M obtained by acting through a monoidal functor.
ModulePtr restrict_module_along(const MonoidalFunctor& f, ModulePtr m);

enum class OppMode { Opp, Rev, Op };
FinCategory opposite_category(const FinCategory& c);
std::shared_ptr<const FinCategory> product_category(CatPtr a, CatPtr b);

} // namespace tambcat
