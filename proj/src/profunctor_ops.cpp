#include "tambcat/profunctor.hpp"

namespace tambcat {

// ---------- restriction / corestriction ----------

TambaraModule restrict_tambara(const TambaraModule& psi, const ModuleFunctor& phi, RestrictSide side) {
    TambaraModule out;
    if (side == RestrictSide::Restrict) {
        if (phi.tgt != psi.srcM) fail("InvalidRestriction", "restriction: functor target != source leg");
        out = make_tambara(phi.src, psi.tgtM);
        for (Obj t = 0; t < out.nT(); ++t)
            for (Obj s = 0; s < out.nS(); ++s) out.p.value_ref(t, s) = psi.value(t, phi.ob[s]);
        if (out.base() == Base::Rat) {
            fill_profunctor_actions(
                out.p, [&](Obj t2, Obj t, Obj s) { return psi.p.lact(t2, t, phi.ob[s]); },
                [&](Obj t, Obj s, Obj s2) {
                    return compose(psi.p.ract(t, phi.ob[s], phi.ob[s2]),
                                   tensor(identity_map(psi.value(t, phi.ob[s])), phi.hom_map(s, s2)));
                });
            fill_zeta(out, [&](Obj H, Obj t, Obj s) {
                Obj Ht = psi.tgtM->act(H, t);
                Obj HPs = psi.srcM->act(H, phi.ob[s]);
                Obj PHs = phi.ob[phi.src->act(H, s)];
                return compose(psi.p.apply_right(Ht, HPs, PHs, phi.phi_at(H, s)), psi.zeta(H, t, phi.ob[s]));
            });
        }
    } else {
        if (phi.tgt != psi.tgtM) fail("InvalidRestriction", "corestriction: functor target != target leg");
        out = make_tambara(psi.srcM, phi.src);
        for (Obj t = 0; t < out.nT(); ++t)
            for (Obj s = 0; s < out.nS(); ++s) out.p.value_ref(t, s) = psi.value(phi.ob[t], s);
        if (out.base() == Base::Rat) {
            fill_profunctor_actions(
                out.p,
                [&](Obj t2, Obj t, Obj s) {
                    return compose(psi.p.lact(phi.ob[t2], phi.ob[t], s),
                                   tensor(phi.hom_map(t2, t), identity_map(psi.value(phi.ob[t], s))));
                },
                [&](Obj t, Obj s, Obj s2) { return psi.p.ract(phi.ob[t], s, s2); });
            fill_zeta(out, [&](Obj H, Obj t, Obj s) {
                Obj Hs = psi.srcM->act(H, s);
                Obj HPt = psi.tgtM->act(H, phi.ob[t]);
                Obj PHt = phi.ob[phi.src->act(H, t)];
                return compose(psi.p.apply_left(PHt, HPt, Hs, phi.phi_inv_at(H, t)), psi.zeta(H, phi.ob[t], s));
            });
        }
    }
    return out;
}

// ---------- the proarrow equipment ----------

TambaraModule representable_tambara(const ModuleFunctor& phi) {
    ModulePtr Mm = phi.src, Nm = phi.tgt;
    const FinCategory& N = *Nm->M;
    TambaraModule ell = make_tambara(Mm, Nm);
    for (Obj z = 0; z < ell.nT(); ++z)
        for (Obj x = 0; x < ell.nS(); ++x) ell.p.value_ref(z, x) = N.hom(z, phi.ob[x]);
    if (ell.base() == Base::Rat) {
        fill_profunctor_actions(
            ell.p,
            [&](Obj z2, Obj z, Obj x) {
                return compose(N.comp(z2, z, phi.ob[x]), swap_factors(N.hom(z2, z), N.hom(z, phi.ob[x])));
            },
            [&](Obj z, Obj x, Obj x2) {
                BaseMap sw = swap_factors(N.hom(z, phi.ob[x]), Mm->M->hom(x, x2));
                return compose(N.comp(z, phi.ob[x], phi.ob[x2]),
                               compose(tensor(phi.hom_map(x, x2), identity_map(N.hom(z, phi.ob[x]))), sw));
            });
        fill_zeta(ell, [&](Obj H, Obj z, Obj x) {
            Obj Hz = Nm->act(H, z), HPx = Nm->act(H, phi.ob[x]), PHx = phi.ob[Mm->act(H, x)];
            return compose(postcompose_map(N, Hz, HPx, PHx, phi.phi_at(H, x)), act_on_hom(*Nm, H, z, phi.ob[x]));
        });
    }
    return ell;
}

static TambaraModule representable_right_adjoint(const ModuleFunctor& phi) {
    ModulePtr Mm = phi.src, Nm = phi.tgt;
    const FinCategory& N = *Nm->M;
    TambaraModule arr = make_tambara(Nm, Mm);
    for (Obj x = 0; x < arr.nT(); ++x)
        for (Obj z = 0; z < arr.nS(); ++z) arr.p.value_ref(x, z) = N.hom(phi.ob[x], z);
    if (arr.base() == Base::Rat) {
        fill_profunctor_actions(
            arr.p,
            [&](Obj x2, Obj x, Obj z) {
                // M(x2,x) (x) N(Phi x, z) -> N(Phi x2, z): v . Phi(m)
                BaseMap pre = tensor(phi.hom_map(x2, x), identity_map(N.hom(phi.ob[x], z)));
                return compose(N.comp(phi.ob[x2], phi.ob[x], z),
                               compose(swap_factors(N.hom(phi.ob[x2], phi.ob[x]), N.hom(phi.ob[x], z)), pre));
            },
            [&](Obj x, Obj z, Obj z2) {
                return compose(N.comp(phi.ob[x], z, z2), swap_factors(N.hom(phi.ob[x], z), N.hom(z, z2)));
            });
        fill_zeta(arr, [&](Obj H, Obj x, Obj z) {
            Obj Hz = Nm->act(H, z), HPx = Nm->act(H, phi.ob[x]), PHx = phi.ob[Mm->act(H, x)];
            return compose(precompose_map(N, PHx, HPx, Hz, phi.phi_inv_at(H, x)), act_on_hom(*Nm, H, phi.ob[x], z));
        });
    }
    return arr;
}

AdjunctionData representable_adjunction(const ModuleFunctor& phi) {
    AdjunctionData out;
    out.ell = representable_tambara(phi);
    out.arr = representable_right_adjoint(phi);
    out.ell_r = compose_tambara(out.ell, out.arr); // endoprofunctor of the target
    out.r_ell = compose_tambara(out.arr, out.ell); // endoprofunctor of the source
    const FinCategory& N = *phi.tgt->M;
    const FinCategory& M = *phi.src->M;
    for (Obj z = 0; z < N.n; ++z)
        for (Obj z2 = 0; z2 < N.n; ++z2) {
            std::vector<BaseMap> fam;
            for (Obj x = 0; x < M.n; ++x)
                fam.push_back(
                    compose(N.comp(z, phi.ob[x], z2), swap_factors(N.hom(z, phi.ob[x]), N.hom(phi.ob[x], z2))));
            out.eps.comp.push_back(out.ell_r.at(z, z2).induce(fam, N.hom(z, z2)));
        }
    for (Obj x = 0; x < M.n; ++x)
        for (Obj x2 = 0; x2 < M.n; ++x2) {
            BaseMap ins = tensor(N.id(phi.ob[x]), phi.hom_map(x, x2));
            out.eta.comp.push_back(compose(out.r_ell.at(x, x2).class_of(phi.ob[x]), ins));
        }
    TambaraModule homN = identity_tambara(phi.tgt);
    TambaraModule homM = identity_tambara(phi.src);
    out.report.merge(validate_tambara_morphism(out.ell_r.t, homN, out.eps), "eps/");
    out.report.merge(validate_tambara_morphism(homM, out.r_ell.t, out.eta), "eta/");

    if (out.ell.base() == Base::Rat) {
        // triangle 1: lambda . (eps . ell) . assoc^{-1} . (ell . eta) . rho^{-1} = id_ell
        UnitorData rho = yoneda_unitor(out.ell, Side::Right);
        UnitorData lam = yoneda_unitor(out.ell, Side::Left);
        ProfComposite ell_rell = compose_profunctors(out.ell.p, out.r_ell.t.p);
        TambaraMorphism step2 = hcompose_morphisms(rho.composite.as_prof(), ell_rell, out.ell.p, out.ell.p,
                                                   identity_morphism(out.ell), homM.p, out.r_ell.t.p, out.eta);
        ProfComposite ellr_ell = compose_profunctors(out.ell_r.t.p, out.ell.p);
        AssocData asc =
            associator(out.ell.p, out.arr.p, out.ell.p, out.ell_r.as_prof(), out.r_ell.as_prof(), ellr_ell, ell_rell);
        TambaraMorphism step4 = hcompose_morphisms(ellr_ell, lam.composite.as_prof(), out.ell_r.t.p, homN.p, out.eps,
                                                   out.ell.p, out.ell.p, identity_morphism(out.ell));
        TambaraMorphism t1 = compose_morphisms(
            lam.fwd, compose_morphisms(step4, compose_morphisms(asc.bwd, compose_morphisms(step2, rho.bwd))));
        out.report.check("triangle-1", "", morphisms_equal(t1, identity_morphism(out.ell)));

        // triangle 2: rho . (arr . eps) . assoc . (eta . arr) . lambda^{-1} = id_arr
        UnitorData lam2 = yoneda_unitor(out.arr, Side::Left);
        UnitorData rho2 = yoneda_unitor(out.arr, Side::Right);
        ProfComposite rell_r = compose_profunctors(out.r_ell.t.p, out.arr.p);
        TambaraMorphism s2 = hcompose_morphisms(lam2.composite.as_prof(), rell_r, homM.p, out.r_ell.t.p, out.eta,
                                                out.arr.p, out.arr.p, identity_morphism(out.arr));
        ProfComposite r_ellr = compose_profunctors(out.arr.p, out.ell_r.t.p);
        AssocData asc2 =
            associator(out.arr.p, out.ell.p, out.arr.p, out.r_ell.as_prof(), out.ell_r.as_prof(), rell_r, r_ellr);
        TambaraMorphism s4 = hcompose_morphisms(r_ellr, rho2.composite.as_prof(), out.arr.p, out.arr.p,
                                                identity_morphism(out.arr), out.ell_r.t.p, homN.p, out.eps);
        TambaraMorphism t2 = compose_morphisms(
            rho2.fwd, compose_morphisms(s4, compose_morphisms(asc2.fwd, compose_morphisms(s2, lam2.bwd))));
        out.report.check("triangle-2", "", morphisms_equal(t2, identity_morphism(out.arr)));
    } else {
        bool ok = out.report.ok();
        out.report.check("triangle-1", "", ok); // posetal: triangles hold once the morphisms exist
        out.report.check("triangle-2", "", ok);
    }
    return out;
}

// ---------- representability detection ----------

RepresentabilityResult is_representable(const TambaraModule& psi) {
    RepresentabilityResult out;
    const FinCategory& N = *psi.tgtM->M;
    const FinCategory& M = *psi.srcM->M;
    ModuleFunctor f;
    f.src = psi.srcM;
    f.tgt = psi.tgtM;
    std::vector<std::vector<BaseMap>> tau(M.n), tau_inv(M.n);
    for (Obj x = 0; x < M.n; ++x) {
        bool found = false;
        for (Obj y = 0; y < N.n && !found; ++y) {
            if (psi.base() == Base::Bool) {
                bool eq = true;
                for (Obj z = 0; z < N.n; ++z) eq = eq && (N.hom(z, y) == psi.value(z, x));
                if (eq) {
                    found = true;
                    f.ob.push_back(y);
                }
                continue;
            }
            // natural transformations N(-,y) => psi(-,x), then an invertible combination
            MapSpaceProblem prob(Base::Rat);
            std::vector<int> u;
            for (Obj z = 0; z < N.n; ++z) u.push_back(prob.add_unknown(N.hom(z, y), psi.value(z, x)));
            for (Obj z2 = 0; z2 < N.n; ++z2)
                for (Obj z = 0; z < N.n; ++z) {
                    BaseObject hom = N.hom(z2, z);
                    BaseMap lact_hom = compose(N.comp(z2, z, y), swap_factors(N.hom(z2, z), N.hom(z, y)));
                    prob.add_equation({MapSpaceProblem::term(1, identity_map(psi.value(z2, x)), u[z2], lact_hom),
                                       MapSpaceProblem::term_id_tensor(-1, psi.p.lact(z2, z, x), hom, u[z],
                                                                       identity_map(tensor(hom, N.hom(z, y))))});
                }
            auto sol = prob.solve();
            if (sol.dim() == 0) continue;
            long deg = 0;
            for (Obj z = 0; z < N.n; ++z) deg += N.hom(z, y).dim;
            auto combo = search_invertible(
                sol.dim(),
                [&](const std::vector<Rational>& lam) {
                    for (Obj z = 0; z < N.n; ++z) {
                        BaseMap acc = zero_map(N.hom(z, y), psi.value(z, x));
                        for (long i = 0; i < sol.dim(); ++i) acc = add(acc, scale(lam[i], sol.basis[i][z]));
                        if (!is_isomorphism(acc)) return false;
                    }
                    return true;
                },
                deg);
            if (!combo) continue;
            found = true;
            f.ob.push_back(y);
            tau[x].clear();
            for (Obj z = 0; z < N.n; ++z) {
                BaseMap acc = zero_map(N.hom(z, y), psi.value(z, x));
                for (long i = 0; i < sol.dim(); ++i) acc = add(acc, scale((*combo)[i], sol.basis[i][z]));
                tau[x].push_back(acc);
            }
        }
        if (!found) return out;
    }
    out.representable = true;
    if (psi.base() == Base::Bool) {
        for (Obj x = 0; x < M.n; ++x)
            for (Obj x2 = 0; x2 < M.n; ++x2) {
                auto m = try_bool_map(M.hom(x, x2), N.hom(f.ob[x], f.ob[x2]));
                if (!m) return RepresentabilityResult{};
                f.mor.push_back(*m);
            }
        out.strong = true;
        for (Obj F = 0; F < psi.nC(); ++F)
            for (Obj x = 0; x < M.n; ++x) {
                Obj a = psi.tgtM->act(F, f.ob[x]), b = f.ob[psi.srcM->act(F, x)];
                if (!N.hom(a, b).truth()) return RepresentabilityResult{};
                f.phi.push_back(bool_map(unit_object(Base::Bool), N.hom(a, b)));
                if (!N.hom(b, a).truth()) out.strong = false;
            }
        if (out.strong) finish_module_functor(f);
        out.functor = std::move(f);
        return out;
    }
    for (Obj x = 0; x < M.n; ++x) {
        tau_inv[x].clear();
        for (Obj z = 0; z < N.n; ++z) tau_inv[x].push_back(*inverse(tau[x][z]));
    }
    std::vector<Element> univ;
    for (Obj x = 0; x < M.n; ++x) univ.push_back(compose(tau[x][f.ob[x]], N.id(f.ob[x])));
    for (Obj x = 0; x < M.n; ++x)
        for (Obj x2 = 0; x2 < M.n; ++x2)
            f.mor.push_back(compose(tau_inv[x2][f.ob[x]],
                                    compose(psi.p.ract(f.ob[x], x, x2), tensor(univ[x], identity_map(M.hom(x, x2))))));
    out.strong = true;
    for (Obj F = 0; F < psi.nC(); ++F)
        for (Obj x = 0; x < M.n; ++x) {
            Obj Fy = psi.tgtM->act(F, f.ob[x]);
            Obj Fx = psi.srcM->act(F, x);
            // phi_{F,x} = tau^{-1}(zeta_F(u_x)), per the lax-structure formula
            Element phi = compose(tau_inv[Fx][Fy], compose(psi.zeta(F, f.ob[x], x), univ[x]));
            f.phi.push_back(phi);
            if (!invert_element(N, Fy, f.ob[Fx], phi)) out.strong = false;
        }
    if (out.strong) finish_module_functor(f);
    out.functor = std::move(f);
    return out;
}

// ---------- free Tambara modules ----------

FreeTambara free_tambara_theta(ModulePtr selfC, Obj K, Obj L) {
    const MonoidalStructure& S = *selfC->C;
    const FinCategory& C = *S.cat;
    FreeTambara result;
    TambaraModule& out = result.t;
    out = make_tambara(selfC, selfC);
    std::vector<CoendPresentation>& pres = result.pres;
    pres.resize((size_t)C.n * C.n);
    for (Obj F = 0; F < C.n; ++F)
        for (Obj G = 0; G < C.n; ++G) {
            CoendData d;
            d.middle = &C;
            d.value = [&S, &C, K, L, F, G](Obj hc, Obj hv) {
                return tensor(C.hom(F, S.tensor_obj(hv, L)), C.hom(S.tensor_obj(hc, K), G));
            };
            d.cov = [&S, &C, K, L, F, G](Obj hp, Obj x, Obj y) {
                Obj xL = S.tensor_obj(x, L), yL = S.tensor_obj(y, L);
                BaseMap first =
                    compose(C.comp(F, xL, yL), tensor(tensor_whisker_right(S, x, y, L), identity_map(C.hom(F, xL))));
                return tensor(first, identity_map(C.hom(S.tensor_obj(hp, K), G)));
            };
            d.contra = [&S, &C, K, L, F, G](Obj x, Obj y, Obj hv) {
                Obj xK = S.tensor_obj(x, K), yK = S.tensor_obj(y, K);
                BaseObject hFyL = C.hom(F, S.tensor_obj(hv, L));
                BaseMap second =
                    compose(C.comp(xK, yK, G),
                            compose(tensor(identity_map(C.hom(yK, G)), tensor_whisker_right(S, x, y, K)),
                                    swap_factors(C.hom(x, y), C.hom(yK, G))));
                std::vector<BaseObject> fs = {C.hom(x, y), hFyL, C.hom(yK, G)};
                return compose(tensor(identity_map(hFyL), second), permute_factors(fs, {1, 0, 2}));
            };
            pres[F * C.n + G] = materialize_coend_general(d);
            out.p.value_ref(F, G) = pres[F * C.n + G].quotient();
        }
    if (out.base() == Base::Rat) {
        fill_profunctor_actions(
            out.p,
            [&](Obj F2, Obj F, Obj G) {
                return induce_between_quotients(
                    pres[F * C.n + G], pres[F2 * C.n + G], ExtraSide::Left, C.hom(F2, F), [&](Obj h) {
                        Obj hL = S.tensor_obj(h, L);
                        BaseMap m = compose(C.comp(F2, F, hL), swap_factors(C.hom(F2, F), C.hom(F, hL)));
                        return std::make_pair(h, tensor(m, identity_map(C.hom(S.tensor_obj(h, K), G))));
                    });
            },
            [&](Obj F, Obj G, Obj G2) {
                return induce_between_quotients(
                    pres[F * C.n + G], pres[F * C.n + G2], ExtraSide::Right, C.hom(G, G2), [&](Obj h) {
                        Obj hK = S.tensor_obj(h, K);
                        BaseMap m = compose(C.comp(hK, G, G2), swap_factors(C.hom(hK, G), C.hom(G, G2)));
                        return std::make_pair(h, tensor(identity_map(C.hom(F, S.tensor_obj(h, L))), m));
                    });
            });
        fill_zeta(out, [&](Obj D, Obj F, Obj G) {
            Obj DF = S.tensor_obj(D, F), DG = S.tensor_obj(D, G);
            return induce_between_quotients(pres[F * C.n + G], pres[DF * C.n + DG], ExtraSide::None, BaseObject{},
                                            [&](Obj h) {
                                                Obj hL = S.tensor_obj(h, L), hK = S.tensor_obj(h, K);
                                                return std::make_pair(S.tensor_obj(D, h),
                                                                      tensor(tensor_whisker_left(S, D, F, hL),
                                                                             tensor_whisker_left(S, D, hK, G)));
                                            });
        });
    }
    return result;
}

FreeTambara free_tambara_general(ModulePtr selfC, const Profunctor& sigma) {
    const MonoidalStructure& S = *selfC->C;
    const FinCategory& C = *S.cat;
    if (sigma.src != S.cat || sigma.tgt != S.cat) fail("InvalidInput", "free Tambara input must be C -|-> C");
    auto triple = product_category(S.cat, product_category(S.cat, S.cat));
    int n = C.n;
    auto dec = [n](Obj o) { // (H, B, Cv)
        return std::array<Obj, 3>{o / (n * n), (o / n) % n, o % n};
    };
    auto enc = [n](Obj H, Obj B, Obj Cv) { return (H * n + B) * n + Cv; };
    FreeTambara result;
    TambaraModule& out = result.t;
    out = make_tambara(selfC, selfC);
    std::vector<CoendPresentation>& pres = result.pres;
    pres.resize((size_t)n * n);
    for (Obj F = 0; F < n; ++F)
        for (Obj G = 0; G < n; ++G) {
            CoendData d;
            d.middle = triple.get();
            d.value = [&, F, G](Obj bc, Obj bv) {
                auto [Hc, Bc, Cc] = dec(bc);
                auto [Hv, Bv, Cv] = dec(bv);
                (void)Cc;
                (void)Bv;
                return tensor(tensor(C.hom(F, S.tensor_obj(Hv, Bv)), sigma.value(Bc, Cv)),
                              C.hom(S.tensor_obj(Hc, Cc), G));
            };
            d.cov = [&, F, G](Obj bp, Obj x, Obj y) {
                auto [Hp, Bp, Cp] = dec(bp);
                auto [Hx, Bx, Cx] = dec(x);
                auto [Hy, By, Cy] = dec(y);
                (void)Cp;
                Obj HBx = S.tensor_obj(Hx, Bx), HBy = S.tensor_obj(Hy, By);
                BaseMap m1 = compose(C.comp(F, HBx, HBy),
                                     tensor(S.tensor_mor(Hx, Bx, Hy, By), identity_map(C.hom(F, HBx))));
                BaseMap m2 = sigma.ract(Bp, Cx, Cy);
                std::vector<BaseObject> fs = {C.hom(Hx, Hy), C.hom(Bx, By), C.hom(Cx, Cy),
                                              C.hom(F, HBx), sigma.value(Bp, Cx), C.hom(S.tensor_obj(Hp, Cp), G)};
                // (c1,c2,c3,t1,t2,t3) -> (c1,c2,t1, t2,c3, t3)
                BaseMap perm = permute_factors(fs, {0, 1, 3, 4, 2, 5});
                return compose(tensor(tensor(m1, m2), identity_map(C.hom(S.tensor_obj(Hp, Cp), G))), perm);
            };
            d.contra = [&, F, G](Obj x, Obj y, Obj bv) {
                auto [Hx, Bx, Cx] = dec(x);
                auto [Hy, By, Cy] = dec(y);
                auto [Hv, Bv, Cv] = dec(bv);
                (void)Bv;
                Obj HCx = S.tensor_obj(Hx, Cx), HCy = S.tensor_obj(Hy, Cy);
                BaseMap tm = S.tensor_mor(Hx, Cx, Hy, Cy); // C(Hx,Hy) (x) C(Cx,Cy) -> C(HCx, HCy)
                BaseMap m3 = compose(C.comp(HCx, HCy, G),
                                     compose(swap_factors(C.hom(HCx, HCy), C.hom(HCy, G)),
                                             tensor(tm, identity_map(C.hom(HCy, G)))));
                BaseMap m2 = sigma.lact(Bx, By, Cv);
                std::vector<BaseObject> fs = {C.hom(Hx, Hy), C.hom(Bx, By), C.hom(Cx, Cy),
                                              C.hom(F, S.tensor_obj(Hv, Bv)), sigma.value(By, Cv), C.hom(HCy, G)};
                // (c1,c2,c3,t1,t2,t3) -> (t1, c2,t2, c1,c3,t3)
                BaseMap perm = permute_factors(fs, {3, 1, 4, 0, 2, 5});
                return compose(tensor(tensor(identity_map(C.hom(F, S.tensor_obj(Hv, Bv))), m2), m3), perm);
            };
            pres[F * n + G] = materialize_coend_general(d);
            out.p.value_ref(F, G) = pres[F * n + G].quotient();
        }
    if (out.base() == Base::Rat) {
        fill_profunctor_actions(
            out.p,
            [&](Obj F2, Obj F, Obj G) {
                return induce_between_quotients(pres[F * n + G], pres[F2 * n + G], ExtraSide::Left, C.hom(F2, F),
                                                [&](Obj b) {
                                                    auto [H, B, Cv] = dec(b);
                                                    Obj HB = S.tensor_obj(H, B);
                                                    BaseMap m = compose(C.comp(F2, F, HB),
                                                                        swap_factors(C.hom(F2, F), C.hom(F, HB)));
                                                    return std::make_pair(
                                                        b, tensor(tensor(m, identity_map(sigma.value(B, Cv))),
                                                                  identity_map(C.hom(S.tensor_obj(H, Cv), G))));
                                                });
            },
            [&](Obj F, Obj G, Obj G2) {
                return induce_between_quotients(pres[F * n + G], pres[F * n + G2], ExtraSide::Right, C.hom(G, G2),
                                                [&](Obj b) {
                                                    auto [H, B, Cv] = dec(b);
                                                    Obj HC = S.tensor_obj(H, Cv);
                                                    BaseMap m = compose(C.comp(HC, G, G2),
                                                                        swap_factors(C.hom(HC, G), C.hom(G, G2)));
                                                    return std::make_pair(
                                                        b, tensor(identity_map(tensor(C.hom(F, S.tensor_obj(H, B)),
                                                                                      sigma.value(B, Cv))),
                                                                  m));
                                                });
            });
        fill_zeta(out, [&](Obj D, Obj F, Obj G) {
            Obj DF = S.tensor_obj(D, F), DG = S.tensor_obj(D, G);
            return induce_between_quotients(
                pres[F * n + G], pres[DF * n + DG], ExtraSide::None, BaseObject{}, [&](Obj b) {
                    auto [H, B, Cv] = dec(b);
                    Obj HB = S.tensor_obj(H, B), HC = S.tensor_obj(H, Cv);
                    return std::make_pair(enc(S.tensor_obj(D, H), B, Cv),
                                          tensor(tensor(tensor_whisker_left(S, D, F, HB),
                                                        identity_map(sigma.value(B, Cv))),
                                                 tensor_whisker_left(S, D, HC, G)));
                });
        });
    }
    return result;
}

TambaraMorphism free_tambara_unit(ModulePtr selfC, const Profunctor& sigma, const FreeTambara& free) {
    const MonoidalStructure& S = *selfC->C;
    const FinCategory& C = *S.cat;
    int n = C.n;
    TambaraMorphism unit;
    for (Obj F = 0; F < n; ++F)
        for (Obj G = 0; G < n; ++G) {
            if (sigma.base() == Base::Bool) {
                unit.comp.push_back(bool_map(sigma.value(F, G), free.t.value(F, G)));
                continue;
            }
            // v |-> class of id_F (x) v (x) id_G at the block (unit, F, G)
            Obj block = (S.unit * n + F) * n + G;
            BaseMap ins = tensor(tensor(C.id(F), identity_map(sigma.value(F, G))), C.id(G));
            unit.comp.push_back(compose(free.at(F, G).class_of(block), ins));
        }
    return unit;
}

// ---------- transports and functorial restriction ----------

TambaraModule transport_tambara_structure(const TambaraModule& t, const Profunctor& target, const TambaraMorphism& s) {
    int nS = t.nS();
    for (const auto& c : s.comp)
        if (!is_isomorphism(c)) fail("NotInvertible", "transport needs an invertible profunctor morphism");
    TambaraModule out = make_tambara(t.srcM, t.tgtM);
    out.p = target;
    fill_zeta(out, [&](Obj H, Obj a, Obj b) {
        Obj Ha = t.tgtM->act(H, a), Hb = t.srcM->act(H, b);
        return compose(s.at(Ha, Hb, nS), compose(t.zeta(H, a, b), *inverse(s.at(a, b, nS))));
    });
    return out;
}

TambaraModule restrict_along_monoidal_functor(const MonoidalFunctor& f, const TambaraModule& t) {
    if (t.srcM->C != f.tgt) fail("InvalidFunctor", "restriction along functor: module not over target");
    ModulePtr srcR = restrict_module_along(f, t.srcM);
    ModulePtr tgtR = t.srcM == t.tgtM ? srcR : restrict_module_along(f, t.tgtM);
    TambaraModule out = make_tambara(srcR, tgtR);
    out.p = t.p;
    fill_zeta(out, [&](Obj H, Obj a, Obj b) { return t.zeta(f.ob[H], a, b); });
    return out;
}

// ---------- pointwise coequalizers ----------

TambaraCoequalizer coequalizer_tambara(const TambaraModule& S, const TambaraModule& T, const TambaraMorphism& p,
                                       const TambaraMorphism& b) {
    TambaraCoequalizer out;
    int nT = T.nT(), nS = T.nS();
    out.pres.reserve((size_t)nT * nS);
    out.quot = make_tambara(T.srcM, T.tgtM);
    for (Obj t = 0; t < nT; ++t)
        for (Obj s = 0; s < nS; ++s) {
            QuotientPresentation q = coequalizer_presentation(p.at(t, s, nS), b.at(t, s, nS));
            out.quot.p.value_ref(t, s) = q.quot;
            out.pres.push_back(std::move(q));
        }
    (void)S;
    auto& pres = out.pres;
    if (T.base() == Base::Rat) {
        fill_profunctor_actions(
            out.quot.p,
            [&](Obj t2, Obj t, Obj s) {
                const QuotientPresentation& qs = pres[t * nS + s];
                const QuotientPresentation& qt = pres[t2 * nS + s];
                return compose(qt.projection,
                               compose(T.p.lact(t2, t, s), tensor(identity_map(T.p.tgt->hom(t2, t)), qs.section)));
            },
            [&](Obj t, Obj s, Obj s2) {
                const QuotientPresentation& qs = pres[t * nS + s];
                const QuotientPresentation& qt = pres[t * nS + s2];
                return compose(qt.projection,
                               compose(T.p.ract(t, s, s2), tensor(qs.section, identity_map(T.p.src->hom(s, s2)))));
            });
        fill_zeta(out.quot, [&](Obj H, Obj t, Obj s) {
            Obj Ht = T.tgtM->act(H, t), Hs = T.srcM->act(H, s);
            return compose(pres[Ht * nS + Hs].projection, compose(T.zeta(H, t, s), pres[t * nS + s].section));
        });
    }
    for (Obj t = 0; t < nT; ++t)
        for (Obj s = 0; s < nS; ++s) out.proj.comp.push_back(out.pres[t * nS + s].projection);
    out.certificate = validate_tambara_morphism(T, out.quot, out.proj);
    return out;
}

TambaraMorphism TambaraCoequalizer::factor(const TambaraMorphism& g, const TambaraModule& target) const {
    TambaraMorphism out;
    for (size_t i = 0; i < pres.size(); ++i) {
        BaseMap m = compose(g.comp[i], pres[i].section);
        // certify the factorization: m . proj == g
        if (!maps_equal(compose(m, pres[i].projection), g.comp[i]))
            fail("InvalidShape", "morphism does not coequalize the pair");
        out.comp.push_back(std::move(m));
    }
    (void)target;
    return out;
}

} // namespace tambcat
