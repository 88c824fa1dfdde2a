#include "doctest.h"
#include "tambcat/bundles.hpp"

using namespace tambcat;

TEST_CASE("Z_{0,2} bundle passes all laws") {
    CategoryBundle b = gen_truncated_addition(2);
    CHECK(b.C->tensor_obj(1, 2) == 2);
    ValidationReport rep = validate_bundle(b);
    CHECK(rep.ok());
    // min{a+b,N} associativity by exhaustive triples
    for (Obj a = 0; a <= 2; ++a)
        for (Obj x = 0; x <= 2; ++x)
            for (Obj y = 0; y <= 2; ++y)
                CHECK(b.C->tensor_obj(b.C->tensor_obj(a, x), y) == b.C->tensor_obj(a, b.C->tensor_obj(x, y)));
}

TEST_CASE("N = 0 gives the terminal monoidal poset") {
    CategoryBundle b = gen_truncated_addition(0);
    CHECK(b.C->cat->n == 1);
    CHECK(validate_bundle(b).ok());
}

TEST_CASE("single-object trivial category passes") {
    auto z1 = cyclic_group_table(1);
    CategoryBundle b = gen_group_action(z1, regular_action_table(z1), "triv");
    CHECK(validate_bundle(b).ok());
}

TEST_CASE("corrupting one composition entry is caught at a named tuple") {
    CategoryBundle b = linearize(gen_truncated_addition(2));
    FinCategory cat = *b.C->cat; // copy
    // 2 * comp(0,0,1) breaks associativity at the triple (0,0,0) -> 1
    BaseMap& m = cat.comp_[(0 * 3 + 0) * 3 + 1];
    m.at(0, 0) = 2;
    auto rep = validate_category(cat);
    CHECK_FALSE(rep.ok());
    bool assoc_failed = false;
    std::string witness;
    for (const auto& it : rep.items)
        if (it.law == "associativity" && !it.pass) {
            assoc_failed = true;
            witness = it.witness;
            break;
        }
    CHECK(assoc_failed);
    CHECK(witness == "(0,0,0,1)");
}

TEST_CASE("non-transitive Bool table is caught") {
    FinCategory cat = make_category(Base::Bool, "bad", {"a", "b", "c"});
    set_hom(cat, 0, 0, bool_object(true));
    set_hom(cat, 1, 1, bool_object(true));
    set_hom(cat, 2, 2, bool_object(true));
    set_hom(cat, 0, 1, bool_object(true));
    set_hom(cat, 1, 2, bool_object(true)); // 0<=1, 1<=2 but not 0<=2
    finish_bool_category(cat);
    auto rep = validate_category(cat);
    CHECK_FALSE(rep.ok());
    CHECK(rep.first_failure().find("transitivity") != std::string::npos);
}

TEST_CASE("group action bundle: Z/2 regular") {
    auto z2 = cyclic_group_table(2);
    CategoryBundle b = gen_group_action(z2, regular_action_table(z2), "Z2");
    CHECK(validate_bundle(b).ok());
    CHECK(b.C->tensor_obj(1, 1) == 0);
    // rigidity witness: dual of g is g^{-1}, zigzags hold with identity cells
    for (Obj g = 0; g < 2; ++g) {
        Obj ginv = g == 0 ? 0 : 1;
        CHECK(b.C->tensor_obj(g, ginv) == b.C->unit);
        CHECK(b.C->tensor_obj(ginv, g) == b.C->unit);
    }
}

TEST_CASE("linearize preserves validity and hom dimensions") {
    CategoryBundle kb = linearize(gen_truncated_addition(2));
    CHECK(validate_bundle(kb).ok());
    CHECK(kb.C->cat->hom(0, 2).dim == 1);
    CHECK(kb.C->cat->hom(2, 0).dim == 0);
    CategoryBundle kt = linearize(gen_truncated_addition(0));
    CHECK(kt.C->cat->n == 1);
    CHECK(validate_bundle(kt).ok());
}

TEST_CASE("vec skeleton bundle validates") {
    CategoryBundle v = gen_vec_skeleton();
    CHECK(validate_bundle(v).ok());
    CHECK(v.C->tensor_obj(1, 1) == 1);
    CHECK(v.C->tensor_obj(1, 0) == 0);
}

TEST_CASE("reverse_and_opposite is involutive and fixes commutative tensors") {
    CategoryBundle b = gen_truncated_addition(2);
    CategoryBundle rev = reverse_and_opposite(b, OppMode::Rev);
    for (Obj a = 0; a < 3; ++a)
        for (Obj x = 0; x < 3; ++x) CHECK(rev.C->tensor_obj(a, x) == b.C->tensor_obj(a, x));

    CategoryBundle z3 = gen_group_action(cyclic_group_table(3), regular_action_table(cyclic_group_table(3)), "Z3");
    CategoryBundle z3rev = reverse_and_opposite(z3, OppMode::Rev);
    CHECK(validate_bundle(z3rev).ok());
    // rev transposes the tensor table
    for (Obj a = 0; a < 3; ++a)
        for (Obj x = 0; x < 3; ++x) CHECK(z3rev.C->tensor_obj(a, x) == z3.C->tensor_obj(x, a));
    CategoryBundle z3revrev = reverse_and_opposite(z3rev, OppMode::Rev);
    for (Obj a = 0; a < 3; ++a)
        for (Obj x = 0; x < 3; ++x) CHECK(z3revrev.C->tensor_obj(a, x) == z3.C->tensor_obj(a, x));

    CategoryBundle opp = reverse_and_opposite(z3, OppMode::Opp);
    CHECK(validate_bundle(opp).ok());
    CategoryBundle oppopp = reverse_and_opposite(opp, OppMode::Opp);
    for (Obj a = 0; a < 3; ++a)
        for (Obj x = 0; x < 3; ++x) {
            CHECK(oppopp.C->cat->hom(a, x) == z3.C->cat->hom(a, x));
            CHECK(maps_equal(oppopp.C->cat->comp(a, x, 0), z3.C->cat->comp(a, x, 0)));
        }
    CHECK(validate_bundle(reverse_and_opposite(z3, OppMode::Op)).ok());
}

TEST_CASE("module functors: identity and evaluation validate") {
    CategoryBundle b = gen_truncated_addition(2);
    ModulePtr m = b.module_named("Z_{0,1}");
    CHECK(validate_module_functor(identity_module_functor(m)).ok());
    CHECK(validate_module_functor(evaluation_functor(m, 0)).ok());

    CategoryBundle kb = linearize(gen_truncated_addition(2));
    ModulePtr km = kb.module_named("kZ_{0,1}");
    CHECK(validate_module_functor(identity_module_functor(km)).ok());
    ModuleFunctor ev = evaluation_functor(km, 0);
    CHECK(validate_module_functor(ev).ok());
    ModuleFunctor comp = compose_module_functors(identity_module_functor(km), ev);
    CHECK(validate_module_functor(comp).ok());
}

TEST_CASE("invert_element and objects_isomorphic") {
    CategoryBundle kb = linearize(gen_truncated_addition(2));
    const FinCategory& c = *kb.C->cat;
    CHECK(invert_element(c, 0, 0, c.id(0)).has_value());
    Element f = make_element(Base::Rat, c.hom(0, 1), {Rational(1)});
    CHECK_FALSE(invert_element(c, 0, 1, f).has_value()); // hom(1,0) is empty
    CHECK(objects_isomorphic(c, 1, 1));
    CHECK_FALSE(objects_isomorphic(c, 0, 1));

    CategoryBundle b = gen_truncated_addition(2);
    CHECK(objects_isomorphic(*b.C->cat, 2, 2));
    CHECK_FALSE(objects_isomorphic(*b.C->cat, 0, 2));
}

TEST_CASE("product and opposite categories validate") {
    CategoryBundle kb = linearize(gen_truncated_addition(1));
    auto prod = product_category(kb.C->cat, kb.C->cat);
    CHECK(validate_category(*prod).ok());
    CHECK(validate_category(opposite_category(*kb.C->cat)).ok());
    CategoryBundle b = gen_truncated_addition(2);
    CHECK(validate_category(*product_category(b.C->cat, b.C->cat)).ok());
}

TEST_CASE("restrict module along the quotient functor Z_{0,3} -> Z_{0,2}") {
    CategoryBundle b3 = gen_truncated_addition(3);
    CategoryBundle b2 = gen_truncated_addition(2);
    MonoidalFunctor q;
    q.src = b3.C;
    q.tgt = b2.C;
    for (Obj a = 0; a <= 3; ++a) q.ob.push_back(std::min((int)a, 2));
    for (Obj a = 0; a <= 3; ++a)
        for (Obj x = 0; x <= 3; ++x) {
            auto m = try_bool_map(b3.C->cat->hom(a, x), b2.C->cat->hom(q.ob[a], q.ob[x]));
            REQUIRE(m);
            q.mor.push_back(*m);
        }
    CHECK(validate_monoidal_functor(q).ok());
    ModulePtr restricted = restrict_module_along(q, b2.module_named("Z_{0,1}"));
    CHECK(validate_module(*restricted).ok());
}

TEST_CASE("fuzz bundles validate") {
    for (unsigned long s = 0; s < 20; ++s) {
        FuzzDraw d = fuzz_bundle(s);
        CHECK(validate_bundle(d.bundle).ok());
        CHECK(validate_module(*d.module).ok());
    }
}
