#include "tambcat/profunctor.hpp"

namespace tambcat {

// ---------- profunctor basics ----------

BaseMap Profunctor::lact(Obj t2, Obj t, Obj s) const {
    if (base() == Base::Bool) return bool_map(tensor(tgt->hom(t2, t), value(t, s)), value(t2, s));
    return lact_[((size_t)t2 * tgt->n + t) * src->n + s];
}

BaseMap Profunctor::ract(Obj t, Obj s, Obj s2) const {
    if (base() == Base::Bool) return bool_map(tensor(value(t, s), src->hom(s, s2)), value(t, s2));
    return ract_[((size_t)t * src->n + s) * src->n + s2];
}

BaseMap Profunctor::apply_left(Obj t2, Obj t, Obj s, const Element& f) const {
    return compose(lact(t2, t, s), tensor(f, identity_map(value(t, s))));
}

BaseMap Profunctor::apply_right(Obj t, Obj s, Obj s2, const Element& g) const {
    return compose(ract(t, s, s2), tensor(identity_map(value(t, s)), g));
}

Profunctor make_profunctor(CatPtr src, CatPtr tgt) {
    Profunctor p;
    p.src = std::move(src);
    p.tgt = std::move(tgt);
    p.val.assign((size_t)p.tgt->n * p.src->n, zero_object(p.src->base));
    return p;
}

void fill_profunctor_actions(Profunctor& p, const std::function<BaseMap(Obj, Obj, Obj)>& lact,
                             const std::function<BaseMap(Obj, Obj, Obj)>& ract) {
    if (p.base() == Base::Bool) return;
    int nT = p.tgt->n, nS = p.src->n;
    p.lact_.clear();
    p.ract_.clear();
    for (Obj t2 = 0; t2 < nT; ++t2)
        for (Obj t = 0; t < nT; ++t)
            for (Obj s = 0; s < nS; ++s) p.lact_.push_back(lact(t2, t, s));
    for (Obj t = 0; t < nT; ++t)
        for (Obj s = 0; s < nS; ++s)
            for (Obj s2 = 0; s2 < nS; ++s2) p.ract_.push_back(ract(t, s, s2));
}

ValidationReport validate_profunctor(const Profunctor& p) {
    ValidationReport rep;
    const FinCategory& N = *p.tgt;
    const FinCategory& M = *p.src;
    auto w = [&](Obj a, Obj b, Obj c) {
        return "(" + N.obj_name(a) + "," + N.obj_name(b) + ";" + M.obj_name(c) + ")";
    };
    if (p.base() == Base::Bool) {
        for (Obj t2 = 0; t2 < N.n; ++t2)
            for (Obj t = 0; t < N.n; ++t)
                for (Obj s = 0; s < M.n; ++s)
                    rep.check("left-closure", w(t2, t, s), implies(tensor(N.hom(t2, t), p.value(t, s)), p.value(t2, s)));
        for (Obj t = 0; t < N.n; ++t)
            for (Obj s = 0; s < M.n; ++s)
                for (Obj s2 = 0; s2 < M.n; ++s2)
                    rep.check("right-closure", w(t, s, s2), implies(tensor(p.value(t, s), M.hom(s, s2)), p.value(t, s2)));
        return rep;
    }
    for (Obj t = 0; t < N.n; ++t)
        for (Obj s = 0; s < M.n; ++s) {
            rep.check("left-identity", w(t, t, s),
                      maps_equal(compose(p.lact(t, t, s), tensor(N.id(t), identity_map(p.value(t, s)))),
                                 identity_map(p.value(t, s))));
            rep.check("right-identity", w(t, t, s),
                      maps_equal(compose(p.ract(t, s, s), tensor(identity_map(p.value(t, s)), M.id(s))),
                                 identity_map(p.value(t, s))));
        }
    for (Obj t3 = 0; t3 < N.n; ++t3)
        for (Obj t2 = 0; t2 < N.n; ++t2)
            for (Obj t = 0; t < N.n; ++t)
                for (Obj s = 0; s < M.n; ++s) {
                    // inputs N(t2,t) (x) N(t3,t2) (x) P(t,s)
                    std::vector<BaseObject> fs = {N.hom(t2, t), N.hom(t3, t2), p.value(t, s)};
                    BaseMap lhs = compose(p.lact(t3, t, s), tensor(N.comp(t3, t2, t), identity_map(p.value(t, s))));
                    BaseMap rhs = compose(p.lact(t3, t2, s),
                                          compose(tensor(identity_map(N.hom(t3, t2)), p.lact(t2, t, s)),
                                                  permute_factors(fs, {1, 0, 2})));
                    rep.check("left-functorial", w(t3, t2, t) + M.obj_name(s), maps_equal(lhs, rhs));
                }
    for (Obj t = 0; t < N.n; ++t)
        for (Obj s = 0; s < M.n; ++s)
            for (Obj s2 = 0; s2 < M.n; ++s2)
                for (Obj s3 = 0; s3 < M.n; ++s3) {
                    // inputs P(t,s) (x) M(s,s2) (x) M(s2,s3)
                    std::vector<BaseObject> fs = {p.value(t, s), M.hom(s, s2), M.hom(s2, s3)};
                    BaseMap lhs = compose(p.ract(t, s, s3),
                                          compose(tensor(identity_map(p.value(t, s)), M.comp(s, s2, s3)),
                                                  permute_factors(fs, {0, 2, 1})));
                    BaseMap rhs = compose(p.ract(t, s2, s3), tensor(p.ract(t, s, s2), identity_map(M.hom(s2, s3))));
                    rep.check("right-functorial", w(t, s, s2) + M.obj_name(s3), maps_equal(lhs, rhs));
                }
    for (Obj t2 = 0; t2 < N.n; ++t2)
        for (Obj t = 0; t < N.n; ++t)
            for (Obj s = 0; s < M.n; ++s)
                for (Obj s2 = 0; s2 < M.n; ++s2) {
                    // inputs N(t2,t) (x) P(t,s) (x) M(s,s2)
                    BaseMap lhs = compose(p.ract(t2, s, s2), tensor(p.lact(t2, t, s), identity_map(M.hom(s, s2))));
                    BaseMap rhs = compose(p.lact(t2, t, s2), tensor(identity_map(N.hom(t2, t)), p.ract(t, s, s2)));
                    rep.check("actions-commute", w(t2, t, s) + M.obj_name(s2), maps_equal(lhs, rhs));
                }
    return rep;
}

Profunctor hom_profunctor(CatPtr c) {
    Profunctor p = make_profunctor(c, c);
    for (Obj t = 0; t < c->n; ++t)
        for (Obj s = 0; s < c->n; ++s) p.value_ref(t, s) = c->hom(t, s);
    if (p.base() == Base::Rat)
        fill_profunctor_actions(
            p,
            [&](Obj t2, Obj t, Obj s) { return compose(c->comp(t2, t, s), swap_factors(c->hom(t2, t), c->hom(t, s))); },
            [&](Obj t, Obj s, Obj s2) { return compose(c->comp(t, s, s2), swap_factors(c->hom(t, s), c->hom(s, s2))); });
    return p;
}

Profunctor zero_profunctor(CatPtr src, CatPtr tgt) {
    Profunctor p = make_profunctor(src, tgt);
    if (p.base() == Base::Rat)
        fill_profunctor_actions(
            p, [&](Obj t2, Obj t, Obj s) { return zero_map(tensor(tgt->hom(t2, t), p.value(t, s)), p.value(t2, s)); },
            [&](Obj t, Obj s, Obj s2) { return zero_map(tensor(p.value(t, s), src->hom(s, s2)), p.value(t, s2)); });
    return p;
}

// ---------- Tambara modules ----------

BaseMap TambaraModule::zeta(Obj H, Obj t, Obj s) const {
    if (base() == Base::Bool) return bool_map(p.value(t, s), p.value(tgtM->act(H, t), srcM->act(H, s)));
    return zeta_[((size_t)H * nT() + t) * nS() + s];
}

TambaraModule make_tambara(ModulePtr srcM, ModulePtr tgtM) {
    if (srcM->C != tgtM->C) fail("InvalidComposite", "Tambara module needs a common acting category");
    TambaraModule t;
    t.p = make_profunctor(srcM->M, tgtM->M);
    t.srcM = std::move(srcM);
    t.tgtM = std::move(tgtM);
    return t;
}

void fill_zeta(TambaraModule& t, const std::function<BaseMap(Obj, Obj, Obj)>& zeta) {
    if (t.base() == Base::Bool) return;
    t.zeta_.clear();
    for (Obj H = 0; H < t.nC(); ++H)
        for (Obj a = 0; a < t.nT(); ++a)
            for (Obj b = 0; b < t.nS(); ++b) t.zeta_.push_back(zeta(H, a, b));
}

TambaraModule identity_tambara(ModulePtr m) {
    TambaraModule t = make_tambara(m, m);
    t.p = hom_profunctor(m->M);
    fill_zeta(t, [&](Obj H, Obj a, Obj b) { return act_on_hom(*m, H, a, b); });
    return t;
}

TambaraModule zero_tambara(ModulePtr srcM, ModulePtr tgtM) {
    TambaraModule t = make_tambara(srcM, tgtM);
    t.p = zero_profunctor(srcM->M, tgtM->M);
    ModulePtr sm = t.srcM, tm = t.tgtM;
    fill_zeta(t, [&t, sm, tm](Obj H, Obj a, Obj b) {
        return zero_map(t.p.value(a, b), t.p.value(tm->act(H, a), sm->act(H, b)));
    });
    return t;
}

ValidationReport validate_tambara(const TambaraModule& T) {
    ValidationReport rep = validate_profunctor(T.p);
    const FinCategory& C = *T.srcM->C->cat;
    const FinCategory& N = *T.tgtM->M;
    const FinCategory& M = *T.srcM->M;
    auto nm = [&](const FinCategory& c, Obj a) { return c.obj_name(a); };
    if (T.base() == Base::Bool) {
        for (Obj H = 0; H < C.n; ++H)
            for (Obj t = 0; t < N.n; ++t)
                for (Obj s = 0; s < M.n; ++s)
                    rep.check("zeta-closure", "(" + nm(C, H) + ";" + nm(N, t) + "," + nm(M, s) + ")",
                              implies(T.value(t, s), T.value(T.tgtM->act(H, t), T.srcM->act(H, s))));
        for (Obj H = 0; H < C.n; ++H)
            for (Obj H2 = 0; H2 < C.n; ++H2)
                for (Obj t = 0; t < N.n; ++t)
                    for (Obj s = 0; s < M.n; ++s)
                        rep.check("extranaturality",
                                  "(" + nm(C, H) + "," + nm(C, H2) + ";" + nm(N, t) + "," + nm(M, s) + ")",
                                  implies(tensor(C.hom(H, H2), T.value(t, s)),
                                          T.value(T.tgtM->act(H, t), T.srcM->act(H2, s))));
        return rep;
    }
    for (Obj t = 0; t < N.n; ++t)
        for (Obj s = 0; s < M.n; ++s)
            rep.check("zeta-unital", "(" + nm(N, t) + "," + nm(M, s) + ")",
                      maps_equal(T.zeta(T.srcM->C->unit, t, s), identity_map(T.value(t, s))));
    for (Obj G = 0; G < C.n; ++G)
        for (Obj F = 0; F < C.n; ++F)
            for (Obj t = 0; t < N.n; ++t)
                for (Obj s = 0; s < M.n; ++s) {
                    Obj GF = T.srcM->C->tensor_obj(G, F);
                    BaseMap lhs = T.zeta(GF, t, s);
                    BaseMap rhs = compose(T.zeta(G, T.tgtM->act(F, t), T.srcM->act(F, s)), T.zeta(F, t, s));
                    rep.check("zeta-multiplicative",
                              "(" + nm(C, G) + "," + nm(C, F) + ";" + nm(N, t) + "," + nm(M, s) + ")",
                              maps_equal(lhs, rhs));
                }
    for (Obj H = 0; H < C.n; ++H)
        for (Obj t2 = 0; t2 < N.n; ++t2)
            for (Obj t = 0; t < N.n; ++t)
                for (Obj s = 0; s < M.n; ++s) {
                    BaseMap lhs = compose(T.zeta(H, t2, s), T.p.lact(t2, t, s));
                    BaseMap rhs = compose(T.p.lact(T.tgtM->act(H, t2), T.tgtM->act(H, t), T.srcM->act(H, s)),
                                          tensor(act_on_hom(*T.tgtM, H, t2, t), T.zeta(H, t, s)));
                    rep.check("zeta-natural-left",
                              "(" + nm(C, H) + ";" + nm(N, t2) + "," + nm(N, t) + "," + nm(M, s) + ")",
                              maps_equal(lhs, rhs));
                }
    for (Obj H = 0; H < C.n; ++H)
        for (Obj t = 0; t < N.n; ++t)
            for (Obj s = 0; s < M.n; ++s)
                for (Obj s2 = 0; s2 < M.n; ++s2) {
                    BaseMap lhs = compose(T.zeta(H, t, s2), T.p.ract(t, s, s2));
                    BaseMap rhs = compose(T.p.ract(T.tgtM->act(H, t), T.srcM->act(H, s), T.srcM->act(H, s2)),
                                          tensor(T.zeta(H, t, s), act_on_hom(*T.srcM, H, s, s2)));
                    rep.check("zeta-natural-right",
                              "(" + nm(C, H) + ";" + nm(N, t) + "," + nm(M, s) + "," + nm(M, s2) + ")",
                              maps_equal(lhs, rhs));
                }
    for (Obj H = 0; H < C.n; ++H)
        for (Obj H2 = 0; H2 < C.n; ++H2)
            for (Obj t = 0; t < N.n; ++t)
                for (Obj s = 0; s < M.n; ++s) {
                    // C(H,H2) (x) T(t,s) -> T(Ht, H2 s)
                    Obj Ht = T.tgtM->act(H, t), H2t = T.tgtM->act(H2, t);
                    Obj Hs = T.srcM->act(H, s), H2s = T.srcM->act(H2, s);
                    BaseMap side1 =
                        compose(T.p.lact(Ht, H2t, H2s), tensor(whisker_at(*T.tgtM, H, H2, t), T.zeta(H2, t, s)));
                    BaseMap side2 = compose(T.p.ract(Ht, Hs, H2s),
                                            compose(tensor(T.zeta(H, t, s), whisker_at(*T.srcM, H, H2, s)),
                                                    swap_factors(C.hom(H, H2), T.value(t, s))));
                    rep.check("extranaturality",
                              "(" + nm(C, H) + "," + nm(C, H2) + ";" + nm(N, t) + "," + nm(M, s) + ")",
                              maps_equal(side1, side2));
                }
    return rep;
}

bool tambara_equal(const TambaraModule& a, const TambaraModule& b) {
    if (a.nS() != b.nS() || a.nT() != b.nT() || a.nC() != b.nC()) return false;
    for (Obj t = 0; t < a.nT(); ++t)
        for (Obj s = 0; s < a.nS(); ++s)
            if (a.value(t, s) != b.value(t, s)) return false;
    if (a.base() == Base::Bool) return true;
    for (Obj t2 = 0; t2 < a.nT(); ++t2)
        for (Obj t = 0; t < a.nT(); ++t)
            for (Obj s = 0; s < a.nS(); ++s)
                if (!maps_equal(a.p.lact(t2, t, s), b.p.lact(t2, t, s))) return false;
    for (Obj t = 0; t < a.nT(); ++t)
        for (Obj s = 0; s < a.nS(); ++s)
            for (Obj s2 = 0; s2 < a.nS(); ++s2)
                if (!maps_equal(a.p.ract(t, s, s2), b.p.ract(t, s, s2))) return false;
    for (Obj H = 0; H < a.nC(); ++H)
        for (Obj t = 0; t < a.nT(); ++t)
            for (Obj s = 0; s < a.nS(); ++s)
                if (!maps_equal(a.zeta(H, t, s), b.zeta(H, t, s))) return false;
    return true;
}

// ---------- morphisms ----------

TambaraMorphism identity_morphism(const TambaraModule& t) {
    TambaraMorphism m;
    for (Obj a = 0; a < t.nT(); ++a)
        for (Obj b = 0; b < t.nS(); ++b) m.comp.push_back(identity_map(t.value(a, b)));
    return m;
}

ValidationReport validate_profunctor_morphism(const Profunctor& s, const Profunctor& t, const TambaraMorphism& m) {
    ValidationReport rep;
    const FinCategory& N = *s.tgt;
    const FinCategory& M = *s.src;
    int nS = M.n;
    if (s.base() == Base::Bool) {
        for (Obj a = 0; a < N.n; ++a)
            for (Obj b = 0; b < nS; ++b)
                rep.check("component", "(" + N.obj_name(a) + "," + M.obj_name(b) + ")",
                          implies(s.value(a, b), t.value(a, b)));
        return rep;
    }
    for (Obj a2 = 0; a2 < N.n; ++a2)
        for (Obj a = 0; a < N.n; ++a)
            for (Obj b = 0; b < nS; ++b) {
                BaseMap lhs = compose(m.at(a2, b, nS), s.lact(a2, a, b));
                BaseMap rhs = compose(t.lact(a2, a, b), tensor(identity_map(N.hom(a2, a)), m.at(a, b, nS)));
                rep.check("natural-left", "(" + N.obj_name(a2) + "," + N.obj_name(a) + ";" + M.obj_name(b) + ")",
                          maps_equal(lhs, rhs));
            }
    for (Obj a = 0; a < N.n; ++a)
        for (Obj b = 0; b < nS; ++b)
            for (Obj b2 = 0; b2 < nS; ++b2) {
                BaseMap lhs = compose(m.at(a, b2, nS), s.ract(a, b, b2));
                BaseMap rhs = compose(t.ract(a, b, b2), tensor(m.at(a, b, nS), identity_map(M.hom(b, b2))));
                rep.check("natural-right", "(" + N.obj_name(a) + ";" + M.obj_name(b) + "," + M.obj_name(b2) + ")",
                          maps_equal(lhs, rhs));
            }
    return rep;
}

ValidationReport validate_tambara_morphism(const TambaraModule& s, const TambaraModule& t, const TambaraMorphism& m) {
    ValidationReport rep = validate_profunctor_morphism(s.p, t.p, m);
    if (s.base() == Base::Bool) return rep;
    int nS = s.nS();
    for (Obj H = 0; H < s.nC(); ++H)
        for (Obj a = 0; a < s.nT(); ++a)
            for (Obj b = 0; b < nS; ++b) {
                BaseMap lhs = compose(m.at(s.tgtM->act(H, a), s.srcM->act(H, b), nS), s.zeta(H, a, b));
                BaseMap rhs = compose(t.zeta(H, a, b), m.at(a, b, nS));
                rep.check("tambara-axiom",
                          "(" + s.srcM->C->cat->obj_name(H) + ";" + s.tgtM->M->obj_name(a) + "," +
                              s.srcM->M->obj_name(b) + ")",
                          maps_equal(lhs, rhs));
            }
    return rep;
}

bool morphism_is_iso(const TambaraMorphism& m) {
    for (const auto& c : m.comp)
        if (!is_isomorphism(c)) return false;
    return true;
}

TambaraMorphism invert_morphism(const TambaraMorphism& m) {
    TambaraMorphism out;
    for (const auto& c : m.comp) {
        auto inv = inverse(c);
        if (!inv) fail("NotInvertible", "component of Tambara morphism not invertible");
        out.comp.push_back(*inv);
    }
    return out;
}

TambaraMorphism compose_morphisms(const TambaraMorphism& g, const TambaraMorphism& f) {
    TambaraMorphism out;
    for (size_t i = 0; i < f.comp.size(); ++i) out.comp.push_back(compose(g.comp[i], f.comp[i]));
    return out;
}

bool morphisms_equal(const TambaraMorphism& a, const TambaraMorphism& b) {
    if (a.comp.size() != b.comp.size()) return false;
    for (size_t i = 0; i < a.comp.size(); ++i)
        if (!maps_equal(a.comp[i], b.comp[i])) return false;
    return true;
}

// ---------- coends ----------

BaseMap CoendPresentation::inject(Obj b) const {
    if (base == Base::Bool) return bool_map(blocks[b], ambient);
    BaseMap m = zero_map(blocks[b], ambient);
    for (long i = 0; i < blocks[b].dim; ++i) m.at(offsets[b] + i, i) = 1;
    return m;
}

BaseMap CoendPresentation::class_of(Obj b) const { return compose(q.projection, inject(b)); }

BaseMap CoendPresentation::induce(const std::vector<BaseMap>& family, const BaseObject& V) const {
    if (base == Base::Bool) {
        for (size_t b = 0; b < blocks.size(); ++b)
            if (!implies(blocks[b], V)) fail("InvalidShape", "coend induce: family does not exist");
        return bool_map(quotient(), V);
    }
    MapBuilder total(ambient, V);
    for (size_t b = 0; b < blocks.size(); ++b) total.add_block(0, offsets[b], family[b]);
    BaseMap assembled = total.take();
    // the family must kill the relation span, i.e. coequalize
    for (const auto& rel : q.relation_generators) {
        for (long r = 0; r < V.dim; ++r) {
            Rational acc(0);
            for (long c = 0; c < ambient.dim; ++c)
                if (rel[c] != 0) acc += assembled.at(r, c) * rel[c];
            if (acc != 0) fail("InvalidShape", "coend induce: family is not extranatural");
        }
    }
    return compose(assembled, q.section);
}

CoendPresentation materialize_coend_general(const CoendData& d) {
    const FinCategory& B = *d.middle;
    CoendPresentation out;
    out.base = B.base;
    long off = 0;
    BaseObject amb = zero_object(B.base);
    for (Obj b = 0; b < B.n; ++b) {
        BaseObject blk = d.value(b, b);
        out.blocks.push_back(blk);
        out.offsets.push_back(off);
        off += blk.dim;
        amb = direct_sum(amb, blk);
    }
    out.ambient = amb;
    if (B.base == Base::Bool) {
        out.q = trivial_quotient(amb);
        return out;
    }
    long rel_dim = 0;
    std::vector<long> rel_off;
    for (Obj x = 0; x < B.n; ++x)
        for (Obj y = 0; y < B.n; ++y) {
            rel_off.push_back(rel_dim);
            rel_dim += tensor(B.hom(x, y), d.value(y, x)).dim;
        }
    MapBuilder f(rat_object(rel_dim), amb), g(rat_object(rel_dim), amb);
    int k = 0;
    for (Obj x = 0; x < B.n; ++x)
        for (Obj y = 0; y < B.n; ++y, ++k) {
            BaseMap covm = d.cov(y, x, y);       // B(x,y) (x) T(y,x) -> T(y,y)
            BaseMap contram = d.contra(x, y, x); // B(x,y) (x) T(y,x) -> T(x,x)
            f.add_block(out.offsets[y], rel_off[k], covm);
            g.add_block(out.offsets[x], rel_off[k], contram);
        }
    out.q = coequalizer_presentation(f.take(), g.take());
    return out;
}

static BaseMap distribute_left(const BaseObject& E, const std::vector<BaseObject>& blocks,
                               const std::vector<long>& offsets) {
    BaseObject amb = zero_object(E.base);
    for (const auto& b : blocks) amb = direct_sum(amb, b);
    BaseObject dom = tensor(E, amb);
    if (E.base == Base::Bool) return bool_map(dom, dom);
    BaseMap m = zero_map(dom, dom);
    long pos = 0;
    for (size_t b = 0; b < blocks.size(); ++b)
        for (long e = 0; e < E.dim; ++e)
            for (long k = 0; k < blocks[b].dim; ++k) m.at(pos++, e * amb.dim + offsets[b] + k) = 1;
    return m;
}

BaseMap induce_between_quotients(const CoendPresentation& src, const CoendPresentation& tgt, ExtraSide side,
                                 const BaseObject& E, const std::function<std::pair<Obj, BaseMap>(Obj)>& blockmap) {
    if (src.base == Base::Bool) {
        BaseObject dom = side == ExtraSide::None   ? src.quotient()
                         : side == ExtraSide::Left ? tensor(E, src.quotient())
                                                   : tensor(src.quotient(), E);
        return bool_map(dom, tgt.quotient());
    }
    long n = (long)src.blocks.size();
    MapBuilder big(side == ExtraSide::None   ? src.ambient
                   : side == ExtraSide::Left ? tensor(E, src.ambient)
                                             : tensor(src.ambient, E),
                   tgt.ambient);
    long left_off = 0;
    for (Obj b = 0; b < n; ++b) {
        auto [tb, m] = blockmap(b);
        if (side == ExtraSide::None) {
            big.add_block(tgt.offsets[tb], src.offsets[b], m);
        } else if (side == ExtraSide::Right) {
            big.add_block(tgt.offsets[tb], src.offsets[b] * E.dim, m); // right tensor keeps blocks contiguous
        } else {
            big.add_block(tgt.offsets[tb], left_off, m); // after distribute_left
            left_off += E.dim * src.blocks[b].dim;
        }
    }
    BaseMap assembled = big.take();
    BaseMap pre = side == ExtraSide::None ? src.q.section
                  : side == ExtraSide::Left
                      ? compose(distribute_left(E, src.blocks, src.offsets), tensor(identity_map(E), src.q.section))
                      : tensor(src.q.section, identity_map(E));
    return compose(tgt.q.projection, compose(assembled, pre));
}

// ---------- composition ----------

ProfComposite compose_profunctors(const Profunctor& P, const Profunctor& Q, const std::vector<Obj>* /*generator*/) {
    if (P.src != Q.tgt) fail("InvalidComposite", "profunctor composition: middle category mismatch");
    const FinCategory& B = *P.src;
    ProfComposite out;
    out.p = make_profunctor(Q.src, P.tgt);
    int nT = P.tgt->n, nS = Q.src->n;
    out.pres.reserve((size_t)nT * nS);
    for (Obj c = 0; c < nT; ++c)
        for (Obj a = 0; a < nS; ++a) {
            CoendData d;
            d.middle = &B;
            d.value = [&P, &Q, c, a](Obj bc, Obj bv) { return tensor(P.value(c, bv), Q.value(bc, a)); };
            d.cov = [&P, &Q, &B, c, a](Obj bp, Obj x, Obj y) {
                std::vector<BaseObject> fs = {B.hom(x, y), P.value(c, x), Q.value(bp, a)};
                return compose(tensor(P.ract(c, x, y), identity_map(Q.value(bp, a))), permute_factors(fs, {1, 0, 2}));
            };
            d.contra = [&P, &Q, &B, c, a](Obj x, Obj y, Obj bv) {
                std::vector<BaseObject> fs = {B.hom(x, y), P.value(c, bv), Q.value(y, a)};
                return compose(tensor(identity_map(P.value(c, bv)), Q.lact(x, y, a)), permute_factors(fs, {1, 0, 2}));
            };
            CoendPresentation pres = materialize_coend_general(d);
            out.p.value_ref(c, a) = pres.quotient();
            out.pres.push_back(std::move(pres));
        }
    if (P.base() == Base::Rat) {
        fill_profunctor_actions(
            out.p,
            [&](Obj c2, Obj c, Obj a) {
                return induce_between_quotients(out.at(c, a), out.at(c2, a), ExtraSide::Left, P.tgt->hom(c2, c),
                                                [&](Obj b) {
                                                    return std::make_pair(
                                                        b, tensor(P.lact(c2, c, b), identity_map(Q.value(b, a))));
                                                });
            },
            [&](Obj c, Obj a, Obj a2) {
                return induce_between_quotients(out.at(c, a), out.at(c, a2), ExtraSide::Right, Q.src->hom(a, a2),
                                                [&](Obj b) {
                                                    return std::make_pair(
                                                        b, tensor(identity_map(P.value(c, b)), Q.ract(b, a, a2)));
                                                });
            });
    }
    return out;
}

TambaraComposite compose_tambara(const TambaraModule& S, const TambaraModule& T) {
    if (S.srcM != T.tgtM) fail("InvalidComposite", "Tambara composition: middle module mismatch");
    ProfComposite pc = compose_profunctors(S.p, T.p);
    TambaraComposite out;
    out.t = make_tambara(T.srcM, S.tgtM);
    out.t.p = std::move(pc.p);
    out.pres = std::move(pc.pres);
    const ModuleStructure& mid = *S.srcM;
    fill_zeta(out.t, [&](Obj H, Obj c, Obj a) {
        Obj Hc = S.tgtM->act(H, c), Ha = T.srcM->act(H, a);
        return induce_between_quotients(out.at(c, a), out.at(Hc, Ha), ExtraSide::None, BaseObject{}, [&](Obj b) {
            return std::make_pair(mid.act(H, b), tensor(S.zeta(H, c, b), T.zeta(H, b, a)));
        });
    });
    return out;
}

StrategyComparison coend_strategy_comparison(const Profunctor& P, const Profunctor& Q, Obj t, Obj s,
                                             const std::vector<Obj>& generator) {
    if (P.src != Q.tgt) fail("InvalidComposite", "strategy comparison: middle mismatch");
    if (generator.empty()) fail("MissingGenerator", "generator strategy without declared generator");
    const FinCategory& B = *P.src;
    StrategyComparison out;
    CoendData d;
    d.middle = &B;
    d.value = [&](Obj bc, Obj bv) { return tensor(P.value(t, bv), Q.value(bc, s)); };
    d.cov = [&](Obj bp, Obj x, Obj y) {
        std::vector<BaseObject> fs = {B.hom(x, y), P.value(t, x), Q.value(bp, s)};
        return compose(tensor(P.ract(t, x, y), identity_map(Q.value(bp, s))), permute_factors(fs, {1, 0, 2}));
    };
    d.contra = [&](Obj x, Obj y, Obj bv) {
        std::vector<BaseObject> fs = {B.hom(x, y), P.value(t, bv), Q.value(y, s)};
        return compose(tensor(identity_map(P.value(t, bv)), Q.lact(x, y, s)), permute_factors(fs, {1, 0, 2}));
    };
    out.full = materialize_coend_general(d);
    if (P.base() == Base::Bool) {
        BaseObject genval = zero_object(Base::Bool);
        for (Obj z : generator) genval = direct_sum(genval, tensor(P.value(t, z), Q.value(z, s)));
        out.gen.base = Base::Bool;
        out.gen.blocks = {genval};
        out.gen.offsets = {0};
        out.gen.ambient = genval;
        out.gen.q = trivial_quotient(genval);
        out.iso = genval == out.full.quotient();
        if (implies(genval, out.full.quotient())) out.comparison = bool_map(genval, out.full.quotient());
        return out;
    }
    // generator strategy: single coequalizer over Z = (+)_i gen_i
    long pz = 0, qz = 0;
    std::vector<long> poff, qoff;
    for (Obj z : generator) {
        poff.push_back(pz);
        qoff.push_back(qz);
        pz += P.value(t, z).dim;
        qz += Q.value(z, s).dim;
    }
    BaseObject amb = rat_object(pz * qz);
    long rel = 0;
    std::vector<long> roff;
    for (size_t i = 0; i < generator.size(); ++i)
        for (size_t j = 0; j < generator.size(); ++j) {
            roff.push_back(rel);
            rel += P.value(t, generator[i]).dim * B.hom(generator[i], generator[j]).dim * Q.value(generator[j], s).dim;
        }
    MapBuilder f(rat_object(rel), amb), g(rat_object(rel), amb);
    int k = 0;
    for (size_t i = 0; i < generator.size(); ++i)
        for (size_t j = 0; j < generator.size(); ++j, ++k) {
            Obj zi = generator[i], zj = generator[j];
            // source block: P(t,zi) (x) B(zi,zj) (x) Q(zj,s)
            BaseMap fv = tensor(P.ract(t, zi, zj), identity_map(Q.value(zj, s))); // -> P(t,zj) (x) Q(zj,s)
            BaseMap gv = tensor(identity_map(P.value(t, zi)), Q.lact(zi, zj, s));
            BaseMap fe = zero_map(fv.dom, amb);
            for (long r = 0; r < fv.rows(); ++r) {
                long pr = r / Q.value(zj, s).dim, qr = r % Q.value(zj, s).dim;
                long target = (poff[j] + pr) * qz + (qoff[j] + qr);
                for (long col = 0; col < fv.cols(); ++col)
                    if (fv.at(r, col) != 0) fe.at(target, col) += fv.at(r, col);
            }
            BaseMap ge = zero_map(gv.dom, amb);
            for (long r = 0; r < gv.rows(); ++r) {
                long pr = r / Q.value(zi, s).dim, qr = r % Q.value(zi, s).dim;
                long target = (poff[i] + pr) * qz + (qoff[i] + qr);
                for (long col = 0; col < gv.cols(); ++col)
                    if (gv.at(r, col) != 0) ge.at(target, col) += gv.at(r, col);
            }
            f.add_block(0, roff[k], fe);
            g.add_block(0, roff[k], ge);
        }
    out.gen.base = Base::Rat;
    out.gen.blocks = {amb};
    out.gen.offsets = {0};
    out.gen.ambient = amb;
    out.gen.q = coequalizer_presentation(f.take(), g.take());
    BaseMap incl = zero_map(amb, out.full.ambient);
    for (size_t i = 0; i < generator.size(); ++i) {
        Obj z = generator[i];
        for (long pr = 0; pr < P.value(t, z).dim; ++pr)
            for (long qr = 0; qr < Q.value(z, s).dim; ++qr)
                incl.at(out.full.offsets[z] + pr * Q.value(z, s).dim + qr, (poff[i] + pr) * qz + (qoff[i] + qr)) = 1;
    }
    out.comparison = compose(out.full.q.projection, compose(incl, out.gen.q.section));
    out.iso = is_isomorphism(out.comparison);
    return out;
}

// ---------- unitors, whiskering, associator ----------

UnitorData yoneda_unitor(const TambaraModule& T, Side side) {
    UnitorData out;
    TambaraModule hom = identity_tambara(side == Side::Left ? T.tgtM : T.srcM);
    out.composite = side == Side::Left ? compose_tambara(hom, T) : compose_tambara(T, hom);
    int nS = T.nS(), nT = T.nT();
    for (Obj t = 0; t < nT; ++t)
        for (Obj s = 0; s < nS; ++s) {
            const CoendPresentation& pres = out.composite.at(t, s);
            if (side == Side::Left) {
                std::vector<BaseMap> fam;
                for (Obj b = 0; b < nT; ++b) fam.push_back(T.p.lact(t, b, s));
                out.fwd.comp.push_back(pres.induce(fam, T.value(t, s)));
                out.bwd.comp.push_back(
                    compose(pres.class_of(t), tensor(T.tgtM->M->id(t), identity_map(T.value(t, s)))));
            } else {
                std::vector<BaseMap> fam;
                for (Obj b = 0; b < nS; ++b) fam.push_back(T.p.ract(t, b, s));
                out.fwd.comp.push_back(pres.induce(fam, T.value(t, s)));
                out.bwd.comp.push_back(
                    compose(pres.class_of(s), tensor(identity_map(T.value(t, s)), T.srcM->M->id(s))));
            }
        }
    out.iso = true;
    for (Obj t = 0; t < nT && out.iso; ++t)
        for (Obj s = 0; s < nS && out.iso; ++s) {
            const BaseMap& f = out.fwd.comp[t * nS + s];
            const BaseMap& b = out.bwd.comp[t * nS + s];
            if (!is_isomorphism(f) || !maps_equal(compose(f, b), identity_map(T.value(t, s)))) out.iso = false;
            if (f.base == Base::Rat && !maps_equal(compose(b, f), identity_map(f.dom))) out.iso = false;
        }
    return out;
}

TambaraMorphism hcompose_morphisms(const ProfComposite& srcC, const ProfComposite& tgtC, const Profunctor& P,
                                   const Profunctor& P2, const TambaraMorphism& tp, const Profunctor& Q,
                                   const Profunctor& Q2, const TambaraMorphism& tq) {
    (void)P2;
    (void)Q2;
    TambaraMorphism out;
    int nT = P.tgt->n, nS = Q.src->n, nMid = P.src->n;
    for (Obj c = 0; c < nT; ++c)
        for (Obj a = 0; a < nS; ++a)
            out.comp.push_back(
                induce_between_quotients(srcC.at(c, a), tgtC.at(c, a), ExtraSide::None, BaseObject{}, [&](Obj b) {
                    return std::make_pair(b, tensor(tp.at(c, b, nMid), tq.at(b, a, nS)));
                }));
    return out;
}

AssocData associator(const Profunctor& P, const Profunctor& Q, const Profunctor& R, const ProfComposite& PQ,
                     const ProfComposite& QR, const ProfComposite& PQ_R, const ProfComposite& P_QR) {
    AssocData out;
    int nT = P.tgt->n;
    int nZ = R.src->n;
    int nA = Q.src->n;
    int nB = P.src->n;
    for (Obj d = 0; d < nT; ++d)
        for (Obj z = 0; z < nZ; ++z) {
            const CoendPresentation& srces = PQ_R.at(d, z);
            const CoendPresentation& tgtes = P_QR.at(d, z);
            if (P.base() == Base::Bool) {
                out.fwd.comp.push_back(bool_map(srces.quotient(), tgtes.quotient()));
                out.bwd.comp.push_back(bool_map(tgtes.quotient(), srces.quotient()));
                continue;
            }
            MapBuilder fb(srces.ambient, tgtes.quotient());
            for (Obj a = 0; a < nA; ++a) {
                long dimR = R.value(a, z).dim;
                const CoendPresentation& inner = PQ.at(d, a);
                MapBuilder chain(tensor(inner.ambient, R.value(a, z)), tgtes.quotient());
                for (Obj b = 0; b < nB; ++b) {
                    BaseMap cls_inner = QR.at(b, z).class_of(a); // Q(b,a) (x) R(a,z) -> QR(b,z)
                    BaseMap m = compose(tgtes.class_of(b), tensor(identity_map(P.value(d, b)), cls_inner));
                    chain.add_block(0, inner.offsets[b] * dimR, m);
                }
                fb.add_block(0, srces.offsets[a],
                             compose(chain.take(), tensor(inner.q.section, identity_map(R.value(a, z)))));
            }
            out.fwd.comp.push_back(compose(fb.take(), srces.q.section));
            MapBuilder bb(tgtes.ambient, srces.quotient());
            for (Obj b = 0; b < nB; ++b) {
                const CoendPresentation& inner = QR.at(b, z);
                BaseMap dist = distribute_left(P.value(d, b), inner.blocks, inner.offsets);
                MapBuilder chain(dist.cod, srces.quotient());
                long doff = 0;
                for (Obj a = 0; a < nA; ++a) {
                    BaseMap cls_inner = PQ.at(d, a).class_of(b);
                    BaseMap m = compose(srces.class_of(a), tensor(cls_inner, identity_map(R.value(a, z))));
                    chain.add_block(0, doff, m);
                    doff += P.value(d, b).dim * inner.blocks[a].dim;
                }
                bb.add_block(0, tgtes.offsets[b],
                             compose(chain.take(), compose(dist, tensor(identity_map(P.value(d, b)), inner.q.section))));
            }
            out.bwd.comp.push_back(compose(bb.take(), tgtes.q.section));
        }
    out.iso = true;
    for (size_t i = 0; i < out.fwd.comp.size(); ++i) {
        if (!maps_equal(compose(out.fwd.comp[i], out.bwd.comp[i]), identity_map(out.bwd.comp[i].dom))) out.iso = false;
        if (out.fwd.comp[i].base == Base::Rat &&
            !maps_equal(compose(out.bwd.comp[i], out.fwd.comp[i]), identity_map(out.fwd.comp[i].dom)))
            out.iso = false;
    }
    return out;
}

// ---------- morphism spaces ----------

long MorphismSpace::dim() const { return (long)basis.size(); }

static MorphismSpace morphism_space_impl(const Profunctor& S, const Profunctor& T, const TambaraModule* St,
                                         const TambaraModule* Tt) {
    MorphismSpace out;
    int nT = S.tgt->n, nS = S.src->n;
    MapSpaceProblem prob(S.base());
    std::vector<int> u;
    for (Obj t = 0; t < nT; ++t)
        for (Obj s = 0; s < nS; ++s) u.push_back(prob.add_unknown(S.value(t, s), T.value(t, s)));
    if (S.base() == Base::Bool) {
        out.bool_inclusion = prob.solve().bool_feasible;
        if (out.bool_inclusion) {
            TambaraMorphism m;
            for (Obj t = 0; t < nT; ++t)
                for (Obj s = 0; s < nS; ++s) m.comp.push_back(bool_map(S.value(t, s), T.value(t, s)));
            out.basis.push_back(std::move(m));
        }
        return out;
    }
    for (Obj t2 = 0; t2 < nT; ++t2)
        for (Obj t = 0; t < nT; ++t)
            for (Obj s = 0; s < nS; ++s) {
                BaseObject hom = S.tgt->hom(t2, t);
                prob.add_equation(
                    {MapSpaceProblem::term(1, identity_map(T.value(t2, s)), u[t2 * nS + s], S.lact(t2, t, s)),
                     MapSpaceProblem::term_id_tensor(-1, T.lact(t2, t, s), hom, u[t * nS + s],
                                                     identity_map(tensor(hom, S.value(t, s))))});
            }
    for (Obj t = 0; t < nT; ++t)
        for (Obj s = 0; s < nS; ++s)
            for (Obj s2 = 0; s2 < nS; ++s2) {
                BaseObject hom = S.src->hom(s, s2);
                prob.add_equation(
                    {MapSpaceProblem::term(1, identity_map(T.value(t, s2)), u[t * nS + s2], S.ract(t, s, s2)),
                     MapSpaceProblem::term_tensor_id(-1, T.ract(t, s, s2), u[t * nS + s], hom,
                                                     identity_map(tensor(S.value(t, s), hom)))});
            }
    if (St && Tt) {
        for (Obj H = 0; H < St->nC(); ++H)
            for (Obj t = 0; t < nT; ++t)
                for (Obj s = 0; s < nS; ++s) {
                    Obj Ht = St->tgtM->act(H, t), Hs = St->srcM->act(H, s);
                    prob.add_equation(
                        {MapSpaceProblem::term(1, identity_map(T.value(Ht, Hs)), u[Ht * nS + Hs], St->zeta(H, t, s)),
                         MapSpaceProblem::term(-1, Tt->zeta(H, t, s), u[t * nS + s], identity_map(S.value(t, s)))});
                }
    }
    for (auto& assignment : prob.solve().basis) {
        TambaraMorphism m;
        m.comp = std::move(assignment);
        out.basis.push_back(std::move(m));
    }
    return out;
}

MorphismSpace tambara_morphism_space(const TambaraModule& S, const TambaraModule& T) {
    return morphism_space_impl(S.p, T.p, &S, &T);
}

MorphismSpace profunctor_morphism_space(const Profunctor& S, const Profunctor& T) {
    return morphism_space_impl(S, T, nullptr, nullptr);
}

} // namespace tambcat
