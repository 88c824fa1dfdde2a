#include "tambcat/bundles.hpp"

namespace tambcat {

ModulePtr CategoryBundle::module_named(const std::string& n) const {
    for (const auto& m : modules)
        if (m->name == n) return m;
    fail("InvalidInput", "no module named '" + n + "' in bundle " + name);
}

ValidationReport validate_bundle(const CategoryBundle& b) {
    ValidationReport rep;
    rep.merge(validate_category(*b.C->cat), "C/");
    rep.merge(validate_monoidal(*b.C), "C/");
    for (const auto& m : b.modules) {
        rep.merge(validate_category(*m->M), m->name + "/");
        rep.merge(validate_module(*m), m->name + "/");
    }
    return rep;
}

CategoryBundle gen_truncated_addition(int N) {
    if (N < 0) fail("InvalidInput", "N must be >= 0");
    CategoryBundle b;
    b.base = Base::Bool;
    b.name = "Z_{0," + std::to_string(N) + "}";
    std::vector<std::string> names;
    for (int i = 0; i <= N; ++i) names.push_back(std::to_string(i));
    FinCategory cat = make_category(Base::Bool, b.name, names);
    for (Obj a = 0; a <= N; ++a)
        for (Obj x = 0; x <= N; ++x) set_hom(cat, a, x, bool_object(a <= x));
    finish_bool_category(cat);
    auto catp = std::make_shared<FinCategory>(std::move(cat));

    auto mon = std::make_shared<MonoidalStructure>();
    mon->cat = catp;
    mon->unit = 0;
    int n = N + 1;
    mon->tensor_obj_.resize((size_t)n * n);
    mon->tensor_mor_.resize((size_t)n * n * n * n);
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x) mon->tensor_obj_[a * n + x] = std::min(a + x, N);
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x)
            for (Obj a2 = 0; a2 < n; ++a2)
                for (Obj x2 = 0; x2 < n; ++x2) {
                    BaseObject dom = tensor(catp->hom(a, a2), catp->hom(x, x2));
                    BaseObject cod = catp->hom(mon->tensor_obj_[a * n + x], mon->tensor_obj_[a2 * n + x2]);
                    auto m = try_bool_map(dom, cod);
                    mon->tensor_mor_[((a * n + x) * n + a2) * n + x2] =
                        m ? *m : bool_map(zero_object(Base::Bool), cod);
                }
    b.C = mon;
    b.modules.push_back(self_module(mon));
    b.generators[b.modules[0]->name] = {0};
    for (int k = 0; k <= N; ++k) b.modules.push_back(gen_truncated_module(b, N, k));
    for (int k = 0; k <= N; ++k) b.generators[b.modules[k + 1]->name] = {0};
    return b;
}

ModulePtr gen_truncated_module(const CategoryBundle& b, int N, int k) {
    if (k > N || k < 0) fail("InvalidTruncation", "need 0 <= k <= N");
    std::vector<std::string> names;
    for (int i = 0; i <= k; ++i) names.push_back(std::to_string(i));
    FinCategory cat = make_category(Base::Bool, "Z_{0," + std::to_string(k) + "}", names);
    for (Obj a = 0; a <= k; ++a)
        for (Obj x = 0; x <= k; ++x) set_hom(cat, a, x, bool_object(a <= x));
    finish_bool_category(cat);
    auto catp = std::make_shared<FinCategory>(std::move(cat));

    auto m = std::make_shared<ModuleStructure>();
    m->name = catp->name;
    m->C = b.C;
    m->M = catp;
    int nC = N + 1, nM = k + 1;
    m->act_obj_.resize((size_t)nC * nM);
    m->act_mor_.resize((size_t)nC * nC * nM * nM);
    for (Obj c = 0; c < nC; ++c)
        for (Obj s = 0; s < nM; ++s) m->act_obj_[c * nM + s] = std::min(c + s, k);
    for (Obj c = 0; c < nC; ++c)
        for (Obj c2 = 0; c2 < nC; ++c2)
            for (Obj s = 0; s < nM; ++s)
                for (Obj s2 = 0; s2 < nM; ++s2) {
                    BaseObject dom = tensor(b.C->cat->hom(c, c2), catp->hom(s, s2));
                    BaseObject cod = catp->hom(m->act_obj_[c * nM + s], m->act_obj_[c2 * nM + s2]);
                    auto mm = try_bool_map(dom, cod);
                    m->act_mor_[((c * nC + c2) * nM + s) * nM + s2] =
                        mm ? *mm : bool_map(zero_object(Base::Bool), cod);
                }
    return m;
}

static FinCategory discrete_rat_category(const std::string& name, int n, const std::string& prefix) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    FinCategory cat = make_category(Base::Rat, name, names);
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x) set_hom(cat, a, x, rat_object(a == x ? 1 : 0));
    cat.comp_.resize((size_t)n * n * n);
    cat.id_.resize(n);
    for (Obj a = 0; a < n; ++a) cat.id_[a] = make_element(Base::Rat, cat.hom(a, a), {Rational(1)});
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x)
            for (Obj y = 0; y < n; ++y) {
                BaseObject dom = tensor(cat.hom(x, y), cat.hom(a, x));
                BaseObject cod = cat.hom(a, y);
                BaseMap m = zero_map(dom, cod);
                if (a == x && x == y) m.at(0, 0) = 1;
                cat.comp_[(a * n + x) * n + y] = m;
            }
    return cat;
}

CategoryBundle gen_group_action(const std::vector<std::vector<int>>& group_table,
                                const std::vector<std::vector<int>>& action_table, const std::string& name) {
    int n = (int)group_table.size();
    if (n == 0) fail("InvalidInput", "empty group table");
    for (const auto& row : group_table)
        if ((int)row.size() != n) fail("InvalidInput", "group table not square");
    int e = -1; // two-sided identity
    for (int g = 0; g < n; ++g) {
        bool ok = true;
        for (int h = 0; h < n; ++h) ok = ok && group_table[g][h] == h && group_table[h][g] == h;
        if (ok) e = g;
    }
    if (e < 0) fail("InvalidInput", "group table has no identity");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (group_table[group_table[g][h]][k] != group_table[g][group_table[h][k]])
                    fail("InvalidInput", "group table not associative");

    CategoryBundle b;
    b.base = Base::Rat;
    b.name = name;
    auto catp = std::make_shared<FinCategory>(discrete_rat_category(name, n, "g"));
    auto mon = std::make_shared<MonoidalStructure>();
    mon->cat = catp;
    mon->unit = e;
    mon->tensor_obj_.resize((size_t)n * n);
    mon->tensor_mor_.resize((size_t)n * n * n * n);
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x) mon->tensor_obj_[a * n + x] = group_table[a][x];
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x)
            for (Obj a2 = 0; a2 < n; ++a2)
                for (Obj x2 = 0; x2 < n; ++x2) {
                    BaseObject dom = tensor(catp->hom(a, a2), catp->hom(x, x2));
                    BaseObject cod = catp->hom(mon->tensor_obj_[a * n + x], mon->tensor_obj_[a2 * n + x2]);
                    BaseMap m = zero_map(dom, cod);
                    if (a == a2 && x == x2) m.at(0, 0) = 1;
                    mon->tensor_mor_[((a * n + x) * n + a2) * n + x2] = m;
                }
    b.C = mon;
    b.modules.push_back(self_module(mon));
    b.generators[b.modules[0]->name] = {e};

    int ns = (int)action_table[0].size();
    for (const auto& row : action_table)
        if ((int)row.size() != ns) fail("InvalidInput", "ragged action table");
    auto mcat = std::make_shared<FinCategory>(discrete_rat_category(name + "-set", ns, "s"));
    auto mod = std::make_shared<ModuleStructure>();
    mod->name = name + "-set";
    mod->C = mon;
    mod->M = mcat;
    mod->act_obj_.resize((size_t)n * ns);
    mod->act_mor_.resize((size_t)n * n * ns * ns);
    for (Obj g = 0; g < n; ++g)
        for (Obj s = 0; s < ns; ++s) mod->act_obj_[g * ns + s] = action_table[g][s];
    for (Obj g = 0; g < n; ++g)
        for (Obj g2 = 0; g2 < n; ++g2)
            for (Obj s = 0; s < ns; ++s)
                for (Obj s2 = 0; s2 < ns; ++s2) {
                    BaseObject dom = tensor(catp->hom(g, g2), mcat->hom(s, s2));
                    BaseObject cod = mcat->hom(mod->act_obj_[g * ns + s], mod->act_obj_[g2 * ns + s2]);
                    BaseMap m = zero_map(dom, cod);
                    if (g == g2 && s == s2) m.at(0, 0) = 1;
                    mod->act_mor_[((g * n + g2) * ns + s) * ns + s2] = m;
                }
    b.modules.push_back(mod);
    b.generators[mod->name] = {0};
    return b;
}

std::vector<std::vector<int>> cyclic_group_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x) t[a][x] = (a + x) % n;
    return t;
}

std::vector<std::vector<int>> regular_action_table(const std::vector<std::vector<int>>& group_table) {
    return group_table;
}

static std::shared_ptr<FinCategory> linearize_category(const FinCategory& c) {
    auto out = std::make_shared<FinCategory>(make_category(Base::Rat, "k" + c.name, c.object_names));
    int n = c.n;
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x) set_hom(*out, a, x, rat_object(c.hom(a, x).truth() ? 1 : 0));
    out->comp_.resize((size_t)n * n * n);
    out->id_.resize(n);
    for (Obj a = 0; a < n; ++a)
        out->id_[a] = make_element(Base::Rat, out->hom(a, a), out->hom(a, a).dim ? std::vector<Rational>{1} : std::vector<Rational>{});
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x)
            for (Obj y = 0; y < n; ++y) {
                BaseObject dom = tensor(out->hom(x, y), out->hom(a, x));
                BaseObject cod = out->hom(a, y);
                BaseMap m = zero_map(dom, cod);
                if (dom.dim == 1 && cod.dim == 1) m.at(0, 0) = 1;
                out->comp_[(a * n + x) * n + y] = m;
            }
    return out;
}

CategoryBundle linearize(const CategoryBundle& bb) {
    if (bb.base != Base::Bool) fail("InvalidInput", "linearize expects a Bool bundle");
    CategoryBundle b;
    b.base = Base::Rat;
    b.name = "k" + bb.name;
    auto catp = linearize_category(*bb.C->cat);
    auto mon = std::make_shared<MonoidalStructure>();
    mon->cat = catp;
    mon->unit = bb.C->unit;
    mon->tensor_obj_ = bb.C->tensor_obj_;
    int n = catp->n;
    mon->tensor_mor_.resize((size_t)n * n * n * n);
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x)
            for (Obj a2 = 0; a2 < n; ++a2)
                for (Obj x2 = 0; x2 < n; ++x2) {
                    BaseObject dom = tensor(catp->hom(a, a2), catp->hom(x, x2));
                    BaseObject cod = catp->hom(mon->tensor_obj_[a * n + x], mon->tensor_obj_[a2 * n + x2]);
                    BaseMap m = zero_map(dom, cod);
                    if (dom.dim == 1 && cod.dim == 1) m.at(0, 0) = 1;
                    mon->tensor_mor_[((a * n + x) * n + a2) * n + x2] = m;
                }
    b.C = mon;
    for (const auto& bm : bb.modules) {
        auto mod = std::make_shared<ModuleStructure>();
        mod->name = "k" + bm->name;
        mod->C = mon;
        mod->M = (bm->M == bb.C->cat) ? catp : std::shared_ptr<const FinCategory>(linearize_category(*bm->M));
        mod->act_obj_ = bm->act_obj_;
        int nM = mod->nM();
        mod->act_mor_.resize((size_t)n * n * nM * nM);
        for (Obj c = 0; c < n; ++c)
            for (Obj c2 = 0; c2 < n; ++c2)
                for (Obj s = 0; s < nM; ++s)
                    for (Obj s2 = 0; s2 < nM; ++s2) {
                        BaseObject dom = tensor(catp->hom(c, c2), mod->M->hom(s, s2));
                        BaseObject cod = mod->M->hom(mod->act(c, s), mod->act(c2, s2));
                        BaseMap m = zero_map(dom, cod);
                        if (dom.dim == 1 && cod.dim == 1) m.at(0, 0) = 1;
                        mod->act_mor_[((c * n + c2) * nM + s) * nM + s2] = m;
                    }
        b.modules.push_back(mod);
    }
    for (const auto& [k, v] : bb.generators) b.generators["k" + k] = v;
    return b;
}

CategoryBundle gen_vec_skeleton() {
    CategoryBundle b;
    b.base = Base::Rat;
    b.name = "vec1";
    FinCategory cat = make_category(Base::Rat, "vec1", {"0", "k"});
    set_hom(cat, 0, 0, rat_object(0));
    set_hom(cat, 0, 1, rat_object(0));
    set_hom(cat, 1, 0, rat_object(0));
    set_hom(cat, 1, 1, rat_object(1));
    cat.comp_.resize(8);
    cat.id_.resize(2);
    cat.id_[0] = zero_element(Base::Rat, cat.hom(0, 0));
    cat.id_[1] = make_element(Base::Rat, cat.hom(1, 1), {Rational(1)});
    for (Obj a = 0; a < 2; ++a)
        for (Obj x = 0; x < 2; ++x)
            for (Obj y = 0; y < 2; ++y) {
                BaseObject dom = tensor(cat.hom(x, y), cat.hom(a, x));
                BaseObject cod = cat.hom(a, y);
                BaseMap m = zero_map(dom, cod);
                if (a == 1 && x == 1 && y == 1) m.at(0, 0) = 1;
                cat.comp_[(a * 2 + x) * 2 + y] = m;
            }
    auto catp = std::make_shared<FinCategory>(std::move(cat));
    auto mon = std::make_shared<MonoidalStructure>();
    mon->cat = catp;
    mon->unit = 1;
    mon->tensor_obj_ = {0, 0, 0, 1}; // multiplication of dimensions
    mon->tensor_mor_.resize(16);
    for (Obj a = 0; a < 2; ++a)
        for (Obj x = 0; x < 2; ++x)
            for (Obj a2 = 0; a2 < 2; ++a2)
                for (Obj x2 = 0; x2 < 2; ++x2) {
                    BaseObject dom = tensor(catp->hom(a, a2), catp->hom(x, x2));
                    BaseObject cod = catp->hom(mon->tensor_obj_[a * 2 + x], mon->tensor_obj_[a2 * 2 + x2]);
                    BaseMap m = zero_map(dom, cod);
                    if (dom.dim == 1 && cod.dim == 1) m.at(0, 0) = 1;
                    mon->tensor_mor_[((a * 2 + x) * 2 + a2) * 2 + x2] = m;
                }
    b.C = mon;
    b.modules.push_back(self_module(mon));
    b.generators[b.modules[0]->name] = {0, 1};
    return b;
}

CategoryBundle reverse_and_opposite(const CategoryBundle& b, OppMode mode) {
    bool flip_mor = (mode == OppMode::Opp || mode == OppMode::Op);
    bool flip_tensor = (mode == OppMode::Rev || mode == OppMode::Op);
    if (flip_tensor && !b.C) fail("MissingStructure", "rev needs a monoidal structure");
    CategoryBundle out;
    out.base = b.base;
    std::string tag = mode == OppMode::Opp ? "^opp" : mode == OppMode::Rev ? "^rev" : "^op";
    out.name = b.name + tag;
    CatPtr catp = flip_mor ? std::make_shared<FinCategory>(opposite_category(*b.C->cat)) : b.C->cat;
    auto mon = std::make_shared<MonoidalStructure>();
    mon->cat = catp;
    mon->unit = b.C->unit;
    int n = catp->n;
    mon->tensor_obj_.resize((size_t)n * n);
    mon->tensor_mor_.resize((size_t)n * n * n * n);
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x)
            mon->tensor_obj_[a * n + x] = flip_tensor ? b.C->tensor_obj(x, a) : b.C->tensor_obj(a, x);
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x)
            for (Obj a2 = 0; a2 < n; ++a2)
                for (Obj x2 = 0; x2 < n; ++x2) {
                    Obj A = a, X = x, A2 = a2, X2 = x2;
                    if (flip_mor) { std::swap(A, A2); std::swap(X, X2); }
                    BaseMap base_map = flip_tensor
                                           ? compose(b.C->tensor_mor(X, A, X2, A2),
                                                     swap_factors(b.C->cat->hom(A, A2), b.C->cat->hom(X, X2)))
                                           : b.C->tensor_mor(A, X, A2, X2);
                    mon->tensor_mor_[((a * n + x) * n + a2) * n + x2] = base_map;
                }
    out.C = mon;
    out.modules.push_back(self_module(mon));
    out.generators = b.generators;
    return out;
}

FuzzDraw fuzz_bundle(unsigned long seed) {
    // deterministic split-mix style draw over a family of valid bundles
    auto next = [&]() {
        seed += 0x9e3779b97f4a7c15UL;
        unsigned long z = seed;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9UL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebUL;
        return z ^ (z >> 31);
    };
    FuzzDraw d;
    unsigned long kind = next() % 4;
    if (kind == 0 || kind == 1) {
        int N = 1 + (int)(next() % 4);
        int k = (int)(next() % (N + 1));
        d.bundle = gen_truncated_addition(N);
        d.module = d.bundle.modules[k + 1];
        d.generator = 0;
        if (kind == 1) {
            d.bundle = linearize(d.bundle);
            d.module = d.bundle.modules[k + 1];
        }
    } else {
        int order = 2 + (int)(next() % 3);
        auto table = cyclic_group_table(order);
        if (kind == 3) {
            // quotient action of Z/n on Z/m, m | n
            int m = order == 4 ? 2 : 1;
            std::vector<std::vector<int>> act(order, std::vector<int>(m));
            for (int g = 0; g < order; ++g)
                for (int s = 0; s < m; ++s) act[g][s] = (g + s) % m;
            d.bundle = gen_group_action(table, act, "Z" + std::to_string(order) + "-quot");
        } else {
            d.bundle = gen_group_action(table, regular_action_table(table), "Z" + std::to_string(order));
        }
        d.module = d.bundle.modules[1];
        d.generator = 0;
    }
    return d;
}

std::vector<CategoryBundle> builtin_bundles() {
    std::vector<CategoryBundle> out;
    out.push_back(gen_truncated_addition(2));
    out.push_back(gen_truncated_addition(3));
    auto z2 = cyclic_group_table(2);
    out.push_back(gen_group_action(z2, regular_action_table(z2), "Z2"));
    out.push_back(linearize(gen_truncated_addition(2)));
    out.push_back(gen_vec_skeleton());
    return out;
}

} // namespace tambcat
