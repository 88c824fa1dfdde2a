#pragma once

#include "tambcat/fincat.hpp"

#include <map>

namespace tambcat {

// A self-contained package of categories, monoidal/module structure and
// declared generators; the unit of file IO and of the built-in generators.
struct CategoryBundle {
    Base base = Base::Bool;
    std::string name;
    MonoidalPtr C;                                  // the acting monoidal category
    std::vector<ModulePtr> modules;                 // module categories over C (first entry: C on itself)
    std::map<std::string, std::vector<Obj>> generators; // declared additive generators, per module name
    std::map<std::string, std::string> meta;

    ModulePtr module_named(const std::string& n) const;
    ModulePtr self() const { return modules.empty() ? nullptr : modules.front(); }
};

ValidationReport validate_bundle(const CategoryBundle& b);

// Z_{0,N}: the monoidal poset ({0..N}, min{a+b,N}, 0), Bool base.
CategoryBundle gen_truncated_addition(int N);
// adds the module Z_{0,k} (action min{c+s,k}) to a Z_{0,N} bundle
ModulePtr gen_truncated_module(const CategoryBundle& b, int N, int k);

// Rat bundle for a finite group acting on a finite set; hom(g,h) = delta * Q.
CategoryBundle gen_group_action(const std::vector<std::vector<int>>& group_table,
                                const std::vector<std::vector<int>>& action_table,
                                const std::string& name = "group");
std::vector<std::vector<int>> cyclic_group_table(int n);
std::vector<std::vector<int>> regular_action_table(const std::vector<std::vector<int>>& group_table);

// Bool -> Rat: hom true |-> 1-dim, false |-> 0-dim.
CategoryBundle linearize(const CategoryBundle& boolBundle);

// Skeleton of finite-dimensional spaces truncated at dimension one: objects
// {0, k}, tensor = multiplication. Its additive closure is the stage for the
// abelianization checks.
CategoryBundle gen_vec_skeleton();

CategoryBundle reverse_and_opposite(const CategoryBundle& b, OppMode mode);

// deterministic family of small valid bundles for property suites
struct FuzzDraw {
    CategoryBundle bundle;
    ModulePtr module;
    Obj generator = 0;
};
FuzzDraw fuzz_bundle(unsigned long seed);

// the bundles every acceptance/property suite runs over
std::vector<CategoryBundle> builtin_bundles();

// -------- file format --------
std::string save_bundle_json(const CategoryBundle& b);
CategoryBundle load_bundle_json(const std::string& text);
void save_bundle(const CategoryBundle& b, const std::string& path);
CategoryBundle load_bundle(const std::string& path);
bool bundles_equal(const CategoryBundle& a, const CategoryBundle& b); // bit-exact on tables

} // namespace tambcat
