#pragma once

#include "tambcat/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace tambcat {

// The two enrichment bases: the boolean quantale and finite-dimensional
// rational vector spaces. Everything upstream is written against this layer.
enum class Base { Bool, Rat };

struct BaseObject {
    Base base = Base::Rat;
    long dim = 0; // Rat: dimension >= 0. Bool: 0 = false, 1 = true.

    bool truth() const { return dim != 0; }
    bool operator==(const BaseObject& o) const { return base == o.base && dim == o.dim; }
    bool operator!=(const BaseObject& o) const { return !(*this == o); }
};

BaseObject bool_object(bool v);
BaseObject rat_object(long dim);
BaseObject unit_object(Base b); // Rat: dim 1; Bool: true
BaseObject zero_object(Base b); // Rat: dim 0; Bool: false

BaseObject tensor(const BaseObject& a, const BaseObject& b);     // dims multiply / AND
BaseObject direct_sum(const BaseObject& a, const BaseObject& b); // dims add / OR

// A morphism of the base. Rat: dense cod.dim x dom.dim matrix, row-major.
// Bool: the unique implication witness; a map true -> false is rejected.
struct BaseMap {
    Base base = Base::Rat;
    BaseObject dom, cod;
    std::vector<Rational> a;

    Rational& at(long r, long c) { return a[r * dom.dim + c]; }
    const Rational& at(long r, long c) const { return a[r * dom.dim + c]; }
    long rows() const { return cod.dim; }
    long cols() const { return dom.dim; }
};

BaseMap bool_map(const BaseObject& dom, const BaseObject& cod); // throws InvalidShape on true -> false
// Returns the unique Bool map if it exists, nullopt otherwise. Rat: always the zero map.
std::optional<BaseMap> try_bool_map(const BaseObject& dom, const BaseObject& cod);
BaseMap rat_map(const BaseObject& dom, const BaseObject& cod, std::vector<Rational> entries);
BaseMap zero_map(const BaseObject& dom, const BaseObject& cod);
BaseMap identity_map(const BaseObject& x);

BaseMap compose(const BaseMap& g, const BaseMap& f); // g after f
BaseMap add(const BaseMap& f, const BaseMap& g);
BaseMap sub(const BaseMap& f, const BaseMap& g);
BaseMap scale(const Rational& c, const BaseMap& f);
BaseMap tensor(const BaseMap& f, const BaseMap& g);     // Kronecker; index (i,j) -> i*dim_g + j
BaseMap direct_sum(const BaseMap& f, const BaseMap& g); // block diagonal
bool maps_equal(const BaseMap& f, const BaseMap& g);
bool is_zero(const BaseMap& f);

// Permutation a1 (x) ... (x) ak  ->  a_{perm[0]} (x) ... (x) a_{perm[k-1]}.
BaseMap permute_factors(const std::vector<BaseObject>& factors, const std::vector<int>& perm);
BaseMap swap_factors(const BaseObject& a, const BaseObject& b); // a(x)b -> b(x)a

// Incremental assembly of a map from rectangular blocks (entries accumulate).
struct MapBuilder {
    BaseMap m;
    explicit MapBuilder(const BaseObject& dom, const BaseObject& cod);
    void add_block(long row_off, long col_off, const BaseMap& block, const Rational& coeff = 1);
    BaseMap take() { return std::move(m); }
};

// Row echelon utilities (exact).
struct Rref {
    std::vector<std::vector<Rational>> rows; // reduced rows, nonzero only
    std::vector<long> pivots;                // pivot column per row, increasing
    long width = 0;
};
Rref rref_of_rows(std::vector<std::vector<Rational>> rows, long width);
long rank(const BaseMap& m);
// Basis of {x : m x = 0} as columns.
std::vector<std::vector<Rational>> nullspace(const BaseMap& m);
// One solution of m x = rhs, if any.
std::optional<std::vector<Rational>> solve_linear(const BaseMap& m, const std::vector<Rational>& rhs);

bool is_isomorphism(const BaseMap& m);
std::optional<BaseMap> inverse(const BaseMap& m);

// Presentation of a quotient of `ambient` with a chosen section. The section
// hits the non-pivot coordinates of the reduced row-echelon form of the
// relation span, so results are deterministic.
struct QuotientPresentation {
    BaseObject ambient;
    BaseObject quot;
    BaseMap projection; // ambient -> quot
    BaseMap section;    // quot -> ambient, projection . section = id
    std::vector<std::vector<Rational>> relation_generators;
};

QuotientPresentation trivial_quotient(const BaseObject& ambient);
QuotientPresentation quotient_by_vectors(const BaseObject& ambient, std::vector<std::vector<Rational>> relations);
// Cokernel of (f - g); Bool: the posetal collapse (quotient = codomain).
QuotientPresentation coequalizer_presentation(const BaseMap& f, const BaseMap& g);

// Whether the Bool map dom -> cod exists.
inline bool implies(const BaseObject& a, const BaseObject& b) { return !a.truth() || b.truth(); }

} // namespace tambcat
