#include "tambcat/fincat.hpp"

#include <sstream>

namespace tambcat {

bool ValidationReport::ok() const {
    for (const auto& c : items)
        if (!c.pass) return false;
    return true;
}

void ValidationReport::check(const std::string& law, const std::string& witness, bool pass) {
    items.push_back(CheckItem{law, witness, pass});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& c : other.items) items.push_back(CheckItem{prefix + c.law, c.witness, c.pass});
}

std::string ValidationReport::first_failure() const {
    for (const auto& c : items)
        if (!c.pass) return c.law + " at " + c.witness;
    return "";
}

std::string FinCategory::obj_name(Obj a) const {
    if (a >= 0 && a < (int)object_names.size() && !object_names[a].empty()) return object_names[a];
    return std::to_string(a);
}

FinCategory make_category(Base base, std::string name, std::vector<std::string> objects) {
    FinCategory c;
    c.base = base;
    c.name = std::move(name);
    c.n = (int)objects.size();
    c.object_names = std::move(objects);
    c.hom_.assign((size_t)c.n * c.n, zero_object(base));
    c.comp_.clear();
    c.id_.clear();
    return c;
}

void set_hom(FinCategory& c, Obj a, Obj b, BaseObject v) { c.hom_[a * c.n + b] = v; }

void finish_bool_category(FinCategory& c) {
    int n = c.n;
    c.comp_.resize((size_t)n * n * n);
    c.id_.resize(n);
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b)
            for (Obj x = 0; x < n; ++x) {
                auto m = try_bool_map(tensor(c.hom(b, x), c.hom(a, b)), c.hom(a, x));
                // invalid (non-transitive) tables keep a placeholder; validators report it
                c.comp_[(a * n + b) * n + x] = m ? *m : bool_map(zero_object(Base::Bool), c.hom(a, x));
            }
    for (Obj a = 0; a < n; ++a) c.id_[a] = Element{Base::Bool, unit_object(Base::Bool), c.hom(a, a), {}};
}

Element make_element(Base base, const BaseObject& cod, std::vector<Rational> coords) {
    if (base == Base::Bool) {
        if (!cod.truth()) fail("InvalidShape", "element of empty Bool hom");
        return bool_map(unit_object(base), cod);
    }
    return rat_map(unit_object(base), cod, std::move(coords));
}

Element zero_element(Base base, const BaseObject& cod) {
    if (base == Base::Bool) fail("UnsupportedBase", "zero element over Bool");
    return zero_map(unit_object(base), cod);
}

bool element_exists(const Element& e) {
    if (e.base == Base::Bool) return e.cod.truth();
    return true;
}

Element compose_elements(const FinCategory& c, Obj a, Obj b, Obj x, const Element& g, const Element& f) {
    return compose(c.comp(a, b, x), tensor(g, f));
}

BaseMap precompose_map(const FinCategory& c, Obj a, Obj b, Obj x, const Element& f) {
    return compose(c.comp(a, b, x), tensor(identity_map(c.hom(b, x)), f));
}

BaseMap postcompose_map(const FinCategory& c, Obj a, Obj b, Obj x, const Element& g) {
    return compose(c.comp(a, b, x), tensor(g, identity_map(c.hom(a, b))));
}

std::optional<Element> invert_element(const FinCategory& c, Obj a, Obj b, const Element& f) {
    if (c.base == Base::Bool) {
        if (!f.cod.truth() || !c.hom(b, a).truth()) return std::nullopt;
        return make_element(Base::Bool, c.hom(b, a), {});
    }
    const BaseObject& hba = c.hom(b, a);
    BaseMap p = compose(c.comp(a, b, a), tensor(identity_map(hba), f)); // u |-> u.f
    BaseMap q = compose(c.comp(b, a, b), tensor(f, identity_map(hba))); // u |-> f.u
    MapBuilder sys(hba, direct_sum(c.hom(a, a), c.hom(b, b)));
    sys.add_block(0, 0, p);
    sys.add_block(c.hom(a, a).dim, 0, q);
    std::vector<Rational> rhs = c.id(a).a;
    rhs.insert(rhs.end(), c.id(b).a.begin(), c.id(b).a.end());
    auto u = solve_linear(sys.take(), rhs);
    if (!u) return std::nullopt;
    Element e = make_element(Base::Rat, hba, *u);
    // the solve enforces both identities; double-check exactly
    if (!maps_equal(compose_elements(c, a, b, a, e, f), c.id(a))) return std::nullopt;
    if (!maps_equal(compose_elements(c, b, a, b, f, e), c.id(b))) return std::nullopt;
    return e;
}

// e: a -> b is invertible iff hom(x, e) is a linear isomorphism for every x (Yoneda).
static bool element_is_invertible(const FinCategory& c, Obj a, Obj b, const Element& e) {
    for (Obj x = 0; x < c.n; ++x)
        if (!is_isomorphism(postcompose_map(c, x, a, b, e))) return false;
    return true;
}

bool objects_isomorphic(const FinCategory& c, Obj a, Obj b, Element* witness) {
    if (c.base == Base::Bool) {
        if (!(c.hom(a, b).truth() && c.hom(b, a).truth())) return false;
        if (witness) *witness = make_element(Base::Bool, c.hom(a, b), {});
        return true;
    }
    long k = c.hom(a, b).dim;
    if (k == 0) return a == b && c.hom(a, a).dim == 0 ? (witness ? (*witness = zero_element(Base::Rat, c.hom(a, b)), true) : true) : false;
    // prefer the identity element when a == b
    if (a == b) {
        if (element_is_invertible(c, a, b, c.id(a))) {
            if (witness) *witness = c.id(a);
            return true;
        }
    }
    // degree bound for the invertibility determinants of a generic combination
    long deg = 0;
    for (Obj x = 0; x < c.n; ++x) deg += c.hom(x, a).dim;
    long bound = deg + 1;
    std::vector<long> idx(k, 0);
    // grid search over {0..deg}^k decides existence exactly for a polynomial
    // of degree <= deg per variable; capped, with the cap ample at desk scale
    double budget = 1;
    for (long i = 0; i < k; ++i) budget *= (double)(bound + 1);
    if (budget > 2e6) bound = 3; // cap; callers treat "not found" as negative only at desk scale
    while (true) {
        std::vector<Rational> coords(k, Rational(0));
        for (long i = 0; i < k; ++i) coords[i] = Rational(idx[i]);
        Element e = make_element(Base::Rat, c.hom(a, b), coords);
        if (element_is_invertible(c, a, b, e)) {
            if (witness) *witness = e;
            return true;
        }
        long i = 0;
        for (; i < k; ++i) {
            if (++idx[i] <= bound) break;
            idx[i] = 0;
        }
        if (i == k) break;
    }
    return false;
}

ValidationReport validate_category(const FinCategory& c) {
    ValidationReport rep;
    int n = c.n;
    if (c.base == Base::Bool) {
        for (Obj a = 0; a < n; ++a) rep.check("reflexivity", c.obj_name(a), c.hom(a, a).truth());
        for (Obj a = 0; a < n; ++a)
            for (Obj b = 0; b < n; ++b)
                for (Obj x = 0; x < n; ++x)
                    rep.check("transitivity", "(" + c.obj_name(a) + "," + c.obj_name(b) + "," + c.obj_name(x) + ")",
                              implies(tensor(c.hom(b, x), c.hom(a, b)), c.hom(a, x)));
        return rep;
    }
    for (Obj a = 0; a < n; ++a)
        rep.check("identity-element", c.obj_name(a),
                  (long)c.id(a).a.size() == c.hom(a, a).dim && c.id(a).dom == unit_object(Base::Rat));
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) {
            const BaseObject& hab = c.hom(a, b);
            bool lu = maps_equal(compose(c.comp(a, b, b), tensor(c.id(b), identity_map(hab))), identity_map(hab));
            bool ru = maps_equal(compose(c.comp(a, a, b), tensor(identity_map(hab), c.id(a))), identity_map(hab));
            rep.check("left-unit", "(" + c.obj_name(a) + "," + c.obj_name(b) + ")", lu);
            rep.check("right-unit", "(" + c.obj_name(a) + "," + c.obj_name(b) + ")", ru);
        }
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b)
            for (Obj x = 0; x < n; ++x)
                for (Obj d = 0; d < n; ++d) {
                    // hom(x,d) (x) hom(b,x) (x) hom(a,b) -> hom(a,d)
                    BaseMap lhs = compose(c.comp(a, b, d), tensor(c.comp(b, x, d), identity_map(c.hom(a, b))));
                    BaseMap rhs = compose(c.comp(a, x, d), tensor(identity_map(c.hom(x, d)), c.comp(a, b, x)));
                    rep.check("associativity",
                              "(" + c.obj_name(a) + "," + c.obj_name(b) + "," + c.obj_name(x) + "," + c.obj_name(d) + ")",
                              maps_equal(lhs, rhs));
                }
    return rep;
}

BaseMap tensor_whisker_left(const MonoidalStructure& s, Obj b, Obj a, Obj a2) {
    const FinCategory& c = *s.cat;
    return compose(s.tensor_mor(b, a, b, a2), tensor(c.id(b), identity_map(c.hom(a, a2))));
}

BaseMap tensor_whisker_right(const MonoidalStructure& s, Obj a, Obj a2, Obj b) {
    const FinCategory& c = *s.cat;
    return compose(s.tensor_mor(a, b, a2, b), tensor(identity_map(c.hom(a, a2)), c.id(b)));
}

Element tensor_elements(const MonoidalStructure& s, Obj a, Obj a2, Obj b, Obj b2, const Element& f, const Element& g) {
    return compose(s.tensor_mor(a, b, a2, b2), tensor(f, g));
}

ValidationReport validate_monoidal(const MonoidalStructure& s) {
    ValidationReport rep;
    const FinCategory& c = *s.cat;
    int n = c.n;
    auto nm = [&](Obj a) { return c.obj_name(a); };
    for (Obj a = 0; a < n; ++a) {
        rep.check("unit-left", nm(a), s.tensor_obj(s.unit, a) == a);
        rep.check("unit-right", nm(a), s.tensor_obj(a, s.unit) == a);
    }
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b)
            for (Obj x = 0; x < n; ++x)
                rep.check("tensor-assoc", "(" + nm(a) + "," + nm(b) + "," + nm(x) + ")",
                          s.tensor_obj(s.tensor_obj(a, b), x) == s.tensor_obj(a, s.tensor_obj(b, x)));
    if (c.base == Base::Bool) {
        for (Obj a = 0; a < n; ++a)
            for (Obj b = 0; b < n; ++b)
                for (Obj a2 = 0; a2 < n; ++a2)
                    for (Obj b2 = 0; b2 < n; ++b2)
                        rep.check("tensor-monotone", "(" + nm(a) + "," + nm(b) + ")->(" + nm(a2) + "," + nm(b2) + ")",
                                  implies(tensor(c.hom(a, a2), c.hom(b, b2)),
                                          c.hom(s.tensor_obj(a, b), s.tensor_obj(a2, b2))));
        return rep;
    }
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b)
            rep.check("tensor-id", "(" + nm(a) + "," + nm(b) + ")",
                      maps_equal(compose(s.tensor_mor(a, b, a, b), tensor(c.id(a), c.id(b))),
                                 c.id(s.tensor_obj(a, b))));
    // interchange with composition
    for (Obj a = 0; a < n; ++a)
        for (Obj a2 = 0; a2 < n; ++a2)
            for (Obj a3 = 0; a3 < n; ++a3)
                for (Obj b = 0; b < n; ++b)
                    for (Obj b2 = 0; b2 < n; ++b2)
                        for (Obj b3 = 0; b3 < n; ++b3) {
                            std::vector<BaseObject> fs = {c.hom(a2, a3), c.hom(a, a2), c.hom(b2, b3), c.hom(b, b2)};
                            BaseMap perm = permute_factors(fs, {0, 2, 1, 3});
                            BaseMap lhs = compose(s.tensor_mor(a, b, a3, b3), tensor(c.comp(a, a2, a3), c.comp(b, b2, b3)));
                            BaseMap rhs = compose(c.comp(s.tensor_obj(a, b), s.tensor_obj(a2, b2), s.tensor_obj(a3, b3)),
                                                  compose(tensor(s.tensor_mor(a2, b2, a3, b3), s.tensor_mor(a, b, a2, b2)), perm));
                            rep.check("interchange",
                                      "(" + nm(a) + "," + nm(a2) + "," + nm(a3) + ";" + nm(b) + "," + nm(b2) + "," + nm(b3) + ")",
                                      maps_equal(lhs, rhs));
                        }
    // strict unitors at the morphism level
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) {
            rep.check("strict-left-unitor", "(" + nm(a) + "," + nm(b) + ")",
                      maps_equal(tensor_whisker_left(s, s.unit, a, b), identity_map(c.hom(a, b))));
            rep.check("strict-right-unitor", "(" + nm(a) + "," + nm(b) + ")",
                      maps_equal(tensor_whisker_right(s, a, b, s.unit), identity_map(c.hom(a, b))));
        }
    return rep;
}

BaseMap act_on_hom(const ModuleStructure& m, Obj H, Obj x, Obj y) {
    return compose(m.act_mor(H, H, x, y), tensor(m.C->cat->id(H), identity_map(m.M->hom(x, y))));
}

BaseMap whisker_at(const ModuleStructure& m, Obj F, Obj G, Obj x) {
    return compose(m.act_mor(F, G, x, x), tensor(identity_map(m.C->cat->hom(F, G)), m.M->id(x)));
}

Element act_element(const ModuleStructure& m, Obj F, Obj G, Obj x, Obj y, const Element& f, const Element& v) {
    return compose(m.act_mor(F, G, x, y), tensor(f, v));
}

ValidationReport validate_module(const ModuleStructure& m) {
    ValidationReport rep;
    const FinCategory& C = *m.C->cat;
    const FinCategory& M = *m.M;
    auto nc = [&](Obj a) { return C.obj_name(a); };
    auto nmm = [&](Obj a) { return M.obj_name(a); };
    for (Obj x = 0; x < M.n; ++x) rep.check("unit-acts-trivially", nmm(x), m.act(m.C->unit, x) == x);
    for (Obj F = 0; F < C.n; ++F)
        for (Obj G = 0; G < C.n; ++G)
            for (Obj x = 0; x < M.n; ++x)
                rep.check("strict-multiplicativity", "(" + nc(G) + "," + nc(F) + "," + nmm(x) + ")",
                          m.act(m.C->tensor_obj(G, F), x) == m.act(G, m.act(F, x)));
    if (C.base == Base::Bool) {
        for (Obj F = 0; F < C.n; ++F)
            for (Obj G = 0; G < C.n; ++G)
                for (Obj x = 0; x < M.n; ++x)
                    for (Obj y = 0; y < M.n; ++y)
                        rep.check("action-monotone", "(" + nc(F) + "->" + nc(G) + "," + nmm(x) + "->" + nmm(y) + ")",
                                  implies(tensor(C.hom(F, G), M.hom(x, y)), M.hom(m.act(F, x), m.act(G, y))));
        return rep;
    }
    for (Obj F = 0; F < C.n; ++F)
        for (Obj x = 0; x < M.n; ++x)
            rep.check("act-id", "(" + nc(F) + "," + nmm(x) + ")",
                      maps_equal(compose(m.act_mor(F, F, x, x), tensor(C.id(F), M.id(x))), M.id(m.act(F, x))));
    for (Obj x = 0; x < M.n; ++x)
        for (Obj y = 0; y < M.n; ++y)
            rep.check("strict-unit-action", "(" + nmm(x) + "," + nmm(y) + ")",
                      maps_equal(act_on_hom(m, m.C->unit, x, y), identity_map(M.hom(x, y))));
    // interchange with composition on both sides
    for (Obj F = 0; F < C.n; ++F)
        for (Obj G = 0; G < C.n; ++G)
            for (Obj H = 0; H < C.n; ++H)
                for (Obj x = 0; x < M.n; ++x)
                    for (Obj y = 0; y < M.n; ++y)
                        for (Obj z = 0; z < M.n; ++z) {
                            std::vector<BaseObject> fs = {C.hom(G, H), C.hom(F, G), M.hom(y, z), M.hom(x, y)};
                            BaseMap perm = permute_factors(fs, {0, 2, 1, 3});
                            BaseMap lhs = compose(m.act_mor(F, H, x, z), tensor(C.comp(F, G, H), M.comp(x, y, z)));
                            BaseMap rhs = compose(M.comp(m.act(F, x), m.act(G, y), m.act(H, z)),
                                                  compose(tensor(m.act_mor(G, H, y, z), m.act_mor(F, G, x, y)), perm));
                            rep.check("act-interchange",
                                      "(" + nc(F) + "," + nc(G) + "," + nc(H) + ";" + nmm(x) + "," + nmm(y) + "," + nmm(z) + ")",
                                      maps_equal(lhs, rhs));
                        }
    // compatibility with the tensor product
    for (Obj F = 0; F < C.n; ++F)
        for (Obj F2 = 0; F2 < C.n; ++F2)
            for (Obj G = 0; G < C.n; ++G)
                for (Obj G2 = 0; G2 < C.n; ++G2)
                    for (Obj x = 0; x < M.n; ++x)
                        for (Obj y = 0; y < M.n; ++y) {
                            Obj GF = m.C->tensor_obj(G, F), G2F2 = m.C->tensor_obj(G2, F2);
                            BaseMap lhs = compose(m.act_mor(GF, G2F2, x, y),
                                                  tensor(m.C->tensor_mor(G, F, G2, F2), identity_map(M.hom(x, y))));
                            BaseMap rhs = compose(m.act_mor(G, G2, m.act(F, x), m.act(F2, y)),
                                                  tensor(identity_map(C.hom(G, G2)), m.act_mor(F, F2, x, y)));
                            rep.check("act-multiplicative",
                                      "(" + nc(G) + "," + nc(G2) + ";" + nc(F) + "," + nc(F2) + ";" + nmm(x) + "," + nmm(y) + ")",
                                      maps_equal(lhs, rhs));
                        }
    return rep;
}

ModulePtr self_module(MonoidalPtr c) {
    auto m = std::make_shared<ModuleStructure>();
    m->name = c->cat->name + "-self";
    m->C = c;
    m->M = c->cat;
    int n = c->n();
    m->act_obj_.resize((size_t)n * n);
    m->act_mor_.resize((size_t)n * n * n * n);
    for (Obj F = 0; F < n; ++F)
        for (Obj x = 0; x < n; ++x) m->act_obj_[F * n + x] = c->tensor_obj(F, x);
    for (Obj F = 0; F < n; ++F)
        for (Obj G = 0; G < n; ++G)
            for (Obj x = 0; x < n; ++x)
                for (Obj y = 0; y < n; ++y)
                    m->act_mor_[((F * n + G) * n + x) * n + y] = c->tensor_mor(F, x, G, y);
    return m;
}

void finish_module_functor(ModuleFunctor& f) {
    const FinCategory& N = *f.tgt->M;
    f.phi_inv.clear();
    for (Obj F = 0; F < f.src->nC(); ++F)
        for (Obj x = 0; x < f.src->nM(); ++x) {
            Obj a = f.tgt->act(F, f.ob[x]);
            Obj b = f.ob[f.src->act(F, x)];
            auto inv = invert_element(N, a, b, f.phi_at(F, x));
            if (!inv) fail("NotInvertible", "module functor coherence cell at (" +
                                                 f.src->C->cat->obj_name(F) + "," + f.src->M->obj_name(x) + ")");
            f.phi_inv.push_back(*inv);
        }
}

ValidationReport validate_module_functor(const ModuleFunctor& f) {
    ValidationReport rep;
    const FinCategory& M = *f.src->M;
    const FinCategory& N = *f.tgt->M;
    const FinCategory& C = *f.src->C->cat;
    auto nc = [&](Obj a) { return C.obj_name(a); };
    auto nmm = [&](Obj a) { return M.obj_name(a); };
    if (M.base == Base::Bool) {
        for (Obj x = 0; x < M.n; ++x)
            for (Obj y = 0; y < M.n; ++y)
                rep.check("functor-monotone", "(" + nmm(x) + "," + nmm(y) + ")",
                          implies(M.hom(x, y), N.hom(f.ob[x], f.ob[y])));
        for (Obj F = 0; F < C.n; ++F)
            for (Obj x = 0; x < M.n; ++x) {
                Obj a = f.tgt->act(F, f.ob[x]), b = f.ob[f.src->act(F, x)];
                rep.check("phi-iso", "(" + nc(F) + "," + nmm(x) + ")", N.hom(a, b).truth() && N.hom(b, a).truth());
            }
        return rep;
    }
    for (Obj x = 0; x < M.n; ++x)
        rep.check("preserves-id", nmm(x), maps_equal(compose(f.hom_map(x, x), M.id(x)), N.id(f.ob[x])));
    for (Obj x = 0; x < M.n; ++x)
        for (Obj y = 0; y < M.n; ++y)
            for (Obj z = 0; z < M.n; ++z)
                rep.check("preserves-comp", "(" + nmm(x) + "," + nmm(y) + "," + nmm(z) + ")",
                          maps_equal(compose(f.hom_map(x, z), M.comp(x, y, z)),
                                     compose(N.comp(f.ob[x], f.ob[y], f.ob[z]), tensor(f.hom_map(y, z), f.hom_map(x, y)))));
    for (Obj F = 0; F < C.n; ++F)
        for (Obj x = 0; x < M.n; ++x) {
            Obj a = f.tgt->act(F, f.ob[x]), b = f.ob[f.src->act(F, x)];
            bool inv = maps_equal(compose_elements(N, a, b, a, f.phi_inv_at(F, x), f.phi_at(F, x)), N.id(a)) &&
                       maps_equal(compose_elements(N, b, a, b, f.phi_at(F, x), f.phi_inv_at(F, x)), N.id(b));
            rep.check("phi-invertible", "(" + nc(F) + "," + nmm(x) + ")", inv);
        }
    // unit coherence: phi_{1,x} = id (strict actions)
    for (Obj x = 0; x < M.n; ++x)
        rep.check("phi-unit", nmm(x), maps_equal(f.phi_at(f.src->C->unit, x), N.id(f.ob[x])));
    // composition coherence: phi_{G(x)F,x} = phi_{G,Fx} . (G . phi_{F,x})
    for (Obj F = 0; F < C.n; ++F)
        for (Obj G = 0; G < C.n; ++G)
            for (Obj x = 0; x < M.n; ++x) {
                Obj GF = f.src->C->tensor_obj(G, F);
                Obj Fx = f.src->act(F, x);
                Obj a = f.tgt->act(GF, f.ob[x]);
                Obj mid = f.tgt->act(G, f.ob[Fx]);
                Element gphi = act_element(*f.tgt, G, G, f.tgt->act(F, f.ob[x]), f.ob[Fx], C.id(G), f.phi_at(F, x));
                Element rhs = compose_elements(N, a, mid, f.ob[f.src->act(GF, x)], f.phi_at(G, Fx), gphi);
                rep.check("phi-multiplicative", "(" + nc(G) + "," + nc(F) + "," + nmm(x) + ")",
                          maps_equal(f.phi_at(GF, x), rhs));
            }
    // naturality of phi_F in x
    for (Obj F = 0; F < C.n; ++F)
        for (Obj x = 0; x < M.n; ++x)
            for (Obj y = 0; y < M.n; ++y) {
                Obj Fx = f.src->act(F, x), Fy = f.src->act(F, y);
                BaseMap path1 = compose(postcompose_map(N, f.tgt->act(F, f.ob[x]), f.tgt->act(F, f.ob[y]), f.ob[Fy], f.phi_at(F, y)),
                                        compose(act_on_hom(*f.tgt, F, f.ob[x], f.ob[y]), f.hom_map(x, y)));
                BaseMap path2 = compose(precompose_map(N, f.tgt->act(F, f.ob[x]), f.ob[Fx], f.ob[Fy], f.phi_at(F, x)),
                                        compose(f.hom_map(Fx, Fy), act_on_hom(*f.src, F, x, y)));
                rep.check("phi-natural-x", "(" + nc(F) + ";" + nmm(x) + "," + nmm(y) + ")", maps_equal(path1, path2));
            }
    // naturality of phi in F
    for (Obj F = 0; F < C.n; ++F)
        for (Obj G = 0; G < C.n; ++G)
            for (Obj x = 0; x < M.n; ++x) {
                Obj Fx = f.src->act(F, x), Gx = f.src->act(G, x);
                BaseMap path1 = compose(postcompose_map(N, f.tgt->act(F, f.ob[x]), f.tgt->act(G, f.ob[x]), f.ob[Gx], f.phi_at(G, x)),
                                        whisker_at(*f.tgt, F, G, f.ob[x]));
                BaseMap path2 = compose(precompose_map(N, f.tgt->act(F, f.ob[x]), f.ob[Fx], f.ob[Gx], f.phi_at(F, x)),
                                        compose(f.hom_map(Fx, Gx), whisker_at(*f.src, F, G, x)));
                rep.check("phi-natural-F", "(" + nc(F) + "," + nc(G) + ";" + nmm(x) + ")", maps_equal(path1, path2));
            }
    return rep;
}

ModuleFunctor identity_module_functor(ModulePtr m) {
    ModuleFunctor f;
    f.src = f.tgt = m;
    for (Obj x = 0; x < m->nM(); ++x) f.ob.push_back(x);
    for (Obj x = 0; x < m->nM(); ++x)
        for (Obj y = 0; y < m->nM(); ++y) f.mor.push_back(identity_map(m->M->hom(x, y)));
    for (Obj F = 0; F < m->nC(); ++F)
        for (Obj x = 0; x < m->nM(); ++x) f.phi.push_back(m->M->id(m->act(F, x)));
    finish_module_functor(f);
    return f;
}

ModuleFunctor evaluation_functor(ModulePtr m, Obj X) {
    ModuleFunctor f;
    f.src = self_module(m->C);
    f.tgt = m;
    int n = m->nC();
    for (Obj F = 0; F < n; ++F) f.ob.push_back(m->act(F, X));
    for (Obj F = 0; F < n; ++F)
        for (Obj G = 0; G < n; ++G) f.mor.push_back(whisker_at(*m, F, G, X));
    for (Obj H = 0; H < n; ++H)
        for (Obj F = 0; F < n; ++F) f.phi.push_back(m->M->id(m->act(m->C->tensor_obj(H, F), X)));
    finish_module_functor(f);
    return f;
}

ModuleFunctor compose_module_functors(const ModuleFunctor& g, const ModuleFunctor& f) {
    if (g.src != f.tgt) fail("InvalidShape", "module functor composition mismatch");
    ModuleFunctor h;
    h.src = f.src;
    h.tgt = g.tgt;
    for (Obj x = 0; x < f.src->nM(); ++x) h.ob.push_back(g.ob[f.ob[x]]);
    for (Obj x = 0; x < f.src->nM(); ++x)
        for (Obj y = 0; y < f.src->nM(); ++y) h.mor.push_back(compose(g.hom_map(f.ob[x], f.ob[y]), f.hom_map(x, y)));
    const FinCategory& Q = *g.tgt->M;
    for (Obj F = 0; F < f.src->nC(); ++F)
        for (Obj x = 0; x < f.src->nM(); ++x) {
            // phi^{gf}_{F,x} = g(phi^f_{F,x}) . phi^g_{F, f x}
            Obj a = g.tgt->act(F, h.ob[x]);
            Obj mid = g.ob[f.tgt->act(F, f.ob[x])];
            Obj b = h.ob[f.src->act(F, x)];
            Element gphif = compose(g.hom_map(f.tgt->act(F, f.ob[x]), f.ob[f.src->act(F, x)]), f.phi_at(F, x));
            h.phi.push_back(compose_elements(Q, a, mid, b, gphif, g.phi_at(F, f.ob[x])));
        }
    finish_module_functor(h);
    return h;
}

ValidationReport validate_monoidal_functor(const MonoidalFunctor& f) {
    ValidationReport rep;
    const FinCategory& C = *f.src->cat;
    const FinCategory& D = *f.tgt->cat;
    rep.check("unit-strict", "", f.ob[f.src->unit] == f.tgt->unit);
    for (Obj a = 0; a < C.n; ++a)
        for (Obj b = 0; b < C.n; ++b)
            rep.check("tensor-strict", "(" + C.obj_name(a) + "," + C.obj_name(b) + ")",
                      f.ob[f.src->tensor_obj(a, b)] == f.tgt->tensor_obj(f.ob[a], f.ob[b]));
    if (C.base == Base::Bool) {
        for (Obj a = 0; a < C.n; ++a)
            for (Obj b = 0; b < C.n; ++b)
                rep.check("functor-monotone", "(" + C.obj_name(a) + "," + C.obj_name(b) + ")",
                          implies(C.hom(a, b), D.hom(f.ob[a], f.ob[b])));
        return rep;
    }
    for (Obj a = 0; a < C.n; ++a)
        rep.check("preserves-id", C.obj_name(a), maps_equal(compose(f.hom_map(a, a), C.id(a)), D.id(f.ob[a])));
    for (Obj a = 0; a < C.n; ++a)
        for (Obj b = 0; b < C.n; ++b)
            for (Obj x = 0; x < C.n; ++x)
                rep.check("preserves-comp", "(" + C.obj_name(a) + "," + C.obj_name(b) + "," + C.obj_name(x) + ")",
                          maps_equal(compose(f.hom_map(a, x), C.comp(a, b, x)),
                                     compose(D.comp(f.ob[a], f.ob[b], f.ob[x]), tensor(f.hom_map(b, x), f.hom_map(a, b)))));
    for (Obj a = 0; a < C.n; ++a)
        for (Obj b = 0; b < C.n; ++b)
            for (Obj a2 = 0; a2 < C.n; ++a2)
                for (Obj b2 = 0; b2 < C.n; ++b2)
                    rep.check("monoidal-on-homs", "(" + C.obj_name(a) + "," + C.obj_name(b) + ")",
                              maps_equal(compose(f.hom_map(f.src->tensor_obj(a, b), f.src->tensor_obj(a2, b2)),
                                                 f.src->tensor_mor(a, b, a2, b2)),
                                         compose(f.tgt->tensor_mor(f.ob[a], f.ob[b], f.ob[a2], f.ob[b2]),
                                                 tensor(f.hom_map(a, a2), f.hom_map(b, b2)))));
    return rep;
}

ModulePtr restrict_module_along(const MonoidalFunctor& f, ModulePtr m) {
    if (m->C != f.tgt) fail("InvalidFunctor", "module is not over the functor's target");
    auto out = std::make_shared<ModuleStructure>();
    out->name = m->name + "|" + f.src->cat->name;
    out->C = f.src;
    out->M = m->M;
    int nC = f.src->n(), nM = m->nM();
    out->act_obj_.resize((size_t)nC * nM);
    out->act_mor_.resize((size_t)nC * nC * nM * nM);
    for (Obj c = 0; c < nC; ++c)
        for (Obj x = 0; x < nM; ++x) out->act_obj_[c * nM + x] = m->act(f.ob[c], x);
    for (Obj c = 0; c < nC; ++c)
        for (Obj c2 = 0; c2 < nC; ++c2)
            for (Obj x = 0; x < nM; ++x)
                for (Obj y = 0; y < nM; ++y)
                    out->act_mor_[((c * nC + c2) * nM + x) * nM + y] =
                        compose(m->act_mor(f.ob[c], f.ob[c2], x, y),
                                tensor(f.hom_map(c, c2), identity_map(m->M->hom(x, y))));
    return out;
}

FinCategory opposite_category(const FinCategory& c) {
    FinCategory o = make_category(c.base, c.name + "^opp", c.object_names);
    for (Obj a = 0; a < c.n; ++a)
        for (Obj b = 0; b < c.n; ++b) set_hom(o, a, b, c.hom(b, a));
    if (c.base == Base::Bool) {
        finish_bool_category(o);
        return o;
    }
    o.comp_.resize((size_t)c.n * c.n * c.n);
    o.id_ = c.id_;
    for (Obj a = 0; a < c.n; ++a)
        for (Obj b = 0; b < c.n; ++b)
            for (Obj x = 0; x < c.n; ++x)
                o.comp_[(a * c.n + b) * c.n + x] = compose(c.comp(x, b, a), swap_factors(c.hom(x, b), c.hom(b, a)));
    return o;
}

std::shared_ptr<const FinCategory> product_category(CatPtr a, CatPtr b) {
    auto p = std::make_shared<FinCategory>();
    p->base = a->base;
    p->name = a->name + "*" + b->name;
    p->n = a->n * b->n;
    for (Obj x = 0; x < a->n; ++x)
        for (Obj y = 0; y < b->n; ++y) p->object_names.push_back("(" + a->obj_name(x) + "," + b->obj_name(y) + ")");
    int n = p->n;
    p->hom_.resize((size_t)n * n);
    auto oi = [&](Obj x, Obj y) { return x * b->n + y; };
    for (Obj x = 0; x < a->n; ++x)
        for (Obj y = 0; y < b->n; ++y)
            for (Obj x2 = 0; x2 < a->n; ++x2)
                for (Obj y2 = 0; y2 < b->n; ++y2)
                    p->hom_[oi(x, y) * n + oi(x2, y2)] = tensor(a->hom(x, x2), b->hom(y, y2));
    if (p->base == Base::Bool) {
        finish_bool_category(*p);
        return p;
    }
    p->comp_.resize((size_t)n * n * n);
    p->id_.resize(n);
    for (Obj x = 0; x < a->n; ++x)
        for (Obj y = 0; y < b->n; ++y) p->id_[oi(x, y)] = tensor(a->id(x), b->id(y));
    for (Obj x = 0; x < a->n; ++x)
        for (Obj y = 0; y < b->n; ++y)
            for (Obj x2 = 0; x2 < a->n; ++x2)
                for (Obj y2 = 0; y2 < b->n; ++y2)
                    for (Obj x3 = 0; x3 < a->n; ++x3)
                        for (Obj y3 = 0; y3 < b->n; ++y3) {
                            std::vector<BaseObject> fs = {a->hom(x2, x3), b->hom(y2, y3), a->hom(x, x2), b->hom(y, y2)};
                            BaseMap perm = permute_factors(fs, {0, 2, 1, 3});
                            p->comp_[(oi(x, y) * n + oi(x2, y2)) * n + oi(x3, y3)] =
                                compose(tensor(a->comp(x, x2, x3), b->comp(y, y2, y3)), perm);
                        }
    return p;
}

} // namespace tambcat
