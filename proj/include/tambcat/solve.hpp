#pragma once

#include "tambcat/base.hpp"

namespace tambcat {

// Homogeneous linear systems over an unknown family of BaseMaps. Each term of
// an equation is  coeff * L . embed(X_k) . R  where embed is either X itself,
// id_D (x) X, or X (x) id_D. Over Bool the system degenerates to the truth
// value "all unknown maps exist".
struct MapSpaceProblem {
    enum class Embed { Plain, IdTensorX, XTensorId };

    struct Term {
        Rational coeff;
        BaseMap left;
        Embed embed;
        BaseObject embed_obj; // D when embed != Plain
        int unknown;
        BaseMap right;
    };

    Base base = Base::Rat;
    std::vector<std::pair<BaseObject, BaseObject>> unknowns; // (dom, cod)
    std::vector<std::vector<Term>> equations;

    explicit MapSpaceProblem(Base b) : base(b) {}

    int add_unknown(const BaseObject& dom, const BaseObject& cod);

    static Term term(const Rational& coeff, BaseMap left, int unknown, BaseMap right);
    static Term term_id_tensor(const Rational& coeff, BaseMap left, const BaseObject& d, int unknown, BaseMap right);
    static Term term_tensor_id(const Rational& coeff, BaseMap left, int unknown, const BaseObject& d, BaseMap right);

    // All terms of one equation must share left.cod and right.dom; sum == 0.
    void add_equation(std::vector<Term> terms);

    struct Solution {
        bool bool_feasible = false;                    // Bool base only
        std::vector<std::vector<BaseMap>> basis;       // Rat: basis vectors, one BaseMap per unknown
        long dim() const { return (long)basis.size(); }
    };
    Solution solve() const;

    // Expresses the given assignment in the solution basis, if it lies in the
    // solution space (i.e. satisfies all equations).
    bool satisfies(const std::vector<BaseMap>& assignment) const;
};

// Deterministic search for a coefficient vector making `check` true: single
// basis vectors first, then the full grid {0..degree_bound}^k (which decides
// existence exactly when the acceptance predicate is the nonvanishing of a
// polynomial of degree <= degree_bound per variable), capped by a budget.
std::optional<std::vector<Rational>> search_invertible(long k,
                                                       const std::function<bool(const std::vector<Rational>&)>& check,
                                                       long degree_bound);

} // namespace tambcat
