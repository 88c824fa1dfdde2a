#include "tambcat/base.hpp"

#include <algorithm>
#include <sstream>

namespace tambcat {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) fail("ParseError", "zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception& e) {
        fail("ParseError", "bad rational '" + s + "'");
    }
}

BaseObject bool_object(bool v) { return BaseObject{Base::Bool, v ? 1 : 0}; }

BaseObject rat_object(long dim) {
    if (dim < 0) fail("InvalidShape", "negative dimension");
    return BaseObject{Base::Rat, dim};
}

BaseObject unit_object(Base b) { return b == Base::Bool ? bool_object(true) : rat_object(1); }
BaseObject zero_object(Base b) { return b == Base::Bool ? bool_object(false) : rat_object(0); }

static void check_same_base(const BaseObject& a, const BaseObject& b) {
    if (a.base != b.base) fail("InvalidShape", "mixed bases");
}

BaseObject tensor(const BaseObject& a, const BaseObject& b) {
    check_same_base(a, b);
    if (a.base == Base::Bool) return bool_object(a.truth() && b.truth());
    return rat_object(a.dim * b.dim);
}

BaseObject direct_sum(const BaseObject& a, const BaseObject& b) {
    check_same_base(a, b);
    if (a.base == Base::Bool) return bool_object(a.truth() || b.truth());
    return rat_object(a.dim + b.dim);
}

BaseMap bool_map(const BaseObject& dom, const BaseObject& cod) {
    if (dom.base != Base::Bool || cod.base != Base::Bool) fail("InvalidShape", "bool_map on Rat objects");
    if (dom.truth() && !cod.truth()) fail("InvalidShape", "no Bool map true -> false");
    return BaseMap{Base::Bool, dom, cod, {}};
}

std::optional<BaseMap> try_bool_map(const BaseObject& dom, const BaseObject& cod) {
    if (dom.base == Base::Rat) return zero_map(dom, cod);
    if (dom.truth() && !cod.truth()) return std::nullopt;
    return BaseMap{Base::Bool, dom, cod, {}};
}

BaseMap rat_map(const BaseObject& dom, const BaseObject& cod, std::vector<Rational> entries) {
    if (dom.base != Base::Rat || cod.base != Base::Rat) fail("InvalidShape", "rat_map on Bool objects");
    if ((long)entries.size() != dom.dim * cod.dim) fail("InvalidShape", "entry count mismatch");
    return BaseMap{Base::Rat, dom, cod, std::move(entries)};
}

BaseMap zero_map(const BaseObject& dom, const BaseObject& cod) {
    check_same_base(dom, cod);
    if (dom.base == Base::Bool) return bool_map(dom, cod);
    return BaseMap{Base::Rat, dom, cod, std::vector<Rational>(dom.dim * cod.dim, Rational(0))};
}

BaseMap identity_map(const BaseObject& x) {
    if (x.base == Base::Bool) return bool_map(x, x);
    BaseMap m = zero_map(x, x);
    for (long i = 0; i < x.dim; ++i) m.at(i, i) = 1;
    return m;
}

BaseMap compose(const BaseMap& g, const BaseMap& f) {
    if (f.base != g.base || f.cod != g.dom) fail("InvalidShape", "compose: shape mismatch");
    if (f.base == Base::Bool) return bool_map(f.dom, g.cod);
    BaseMap out = zero_map(f.dom, g.cod);
    for (long i = 0; i < g.rows(); ++i)
        for (long k = 0; k < g.cols(); ++k) {
            const Rational& gik = g.at(i, k);
            if (gik == 0) continue;
            for (long j = 0; j < f.cols(); ++j) {
                const Rational& fkj = f.at(k, j);
                if (fkj != 0) out.at(i, j) += gik * fkj;
            }
        }
    return out;
}

BaseMap add(const BaseMap& f, const BaseMap& g) {
    if (f.base != g.base || f.dom != g.dom || f.cod != g.cod) fail("InvalidShape", "add: shape mismatch");
    if (f.base == Base::Bool) return f;
    BaseMap out = f;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += g.a[i];
    return out;
}

BaseMap sub(const BaseMap& f, const BaseMap& g) {
    if (f.base != g.base || f.dom != g.dom || f.cod != g.cod) fail("InvalidShape", "sub: shape mismatch");
    if (f.base == Base::Bool) return f;
    BaseMap out = f;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] -= g.a[i];
    return out;
}

BaseMap scale(const Rational& c, const BaseMap& f) {
    if (f.base == Base::Bool) return f;
    BaseMap out = f;
    for (auto& x : out.a) x *= c;
    return out;
}

BaseMap tensor(const BaseMap& f, const BaseMap& g) {
    if (f.base != g.base) fail("InvalidShape", "tensor: mixed bases");
    BaseObject dom = tensor(f.dom, g.dom), cod = tensor(f.cod, g.cod);
    if (f.base == Base::Bool) return bool_map(dom, cod);
    BaseMap out = zero_map(dom, cod);
    for (long i = 0; i < f.rows(); ++i)
        for (long j = 0; j < f.cols(); ++j) {
            const Rational& fij = f.at(i, j);
            if (fij == 0) continue;
            for (long k = 0; k < g.rows(); ++k)
                for (long l = 0; l < g.cols(); ++l) {
                    const Rational& gkl = g.at(k, l);
                    if (gkl != 0) out.at(i * g.rows() + k, j * g.cols() + l) = fij * gkl;
                }
        }
    return out;
}

BaseMap direct_sum(const BaseMap& f, const BaseMap& g) {
    if (f.base != g.base) fail("InvalidShape", "direct_sum: mixed bases");
    BaseObject dom = direct_sum(f.dom, g.dom), cod = direct_sum(f.cod, g.cod);
    if (f.base == Base::Bool) return bool_map(dom, cod);
    BaseMap out = zero_map(dom, cod);
    for (long i = 0; i < f.rows(); ++i)
        for (long j = 0; j < f.cols(); ++j) out.at(i, j) = f.at(i, j);
    for (long i = 0; i < g.rows(); ++i)
        for (long j = 0; j < g.cols(); ++j) out.at(f.rows() + i, f.cols() + j) = g.at(i, j);
    return out;
}

bool maps_equal(const BaseMap& f, const BaseMap& g) {
    if (f.base != g.base || f.dom != g.dom || f.cod != g.cod) return false;
    return f.base == Base::Bool || f.a == g.a;
}

bool is_zero(const BaseMap& f) {
    if (f.base == Base::Bool) return !f.dom.truth();
    return std::all_of(f.a.begin(), f.a.end(), [](const Rational& x) { return x == 0; });
}

BaseMap permute_factors(const std::vector<BaseObject>& factors, const std::vector<int>& perm) {
    if (factors.empty()) fail("InvalidShape", "permute_factors: empty");
    Base b = factors[0].base;
    BaseObject dom = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) dom = tensor(dom, factors[i]);
    std::vector<BaseObject> pf(factors.size());
    for (size_t i = 0; i < perm.size(); ++i) pf[i] = factors[perm[i]];
    BaseObject cod = pf[0];
    for (size_t i = 1; i < pf.size(); ++i) cod = tensor(cod, pf[i]);
    if (b == Base::Bool) return bool_map(dom, cod);

    long n = factors.size();
    std::vector<long> idx(n, 0);
    BaseMap out = zero_map(dom, cod);
    long total = dom.dim;
    for (long flat = 0; flat < total; ++flat) {
        long rem = flat;
        for (long i = n - 1; i >= 0; --i) {
            idx[i] = rem % factors[i].dim;
            rem /= factors[i].dim;
        }
        long target = 0;
        for (long i = 0; i < n; ++i) target = target * pf[i].dim + idx[perm[i]];
        out.at(target, flat) = 1;
    }
    return out;
}

BaseMap swap_factors(const BaseObject& a, const BaseObject& b) { return permute_factors({a, b}, {1, 0}); }

MapBuilder::MapBuilder(const BaseObject& dom, const BaseObject& cod) {
    if (dom.base == Base::Bool) {
        if (dom.truth() && !cod.truth()) fail("InvalidShape", "MapBuilder: no Bool map true -> false");
        m = BaseMap{Base::Bool, dom, cod, {}};
    } else {
        m = zero_map(dom, cod);
    }
}

void MapBuilder::add_block(long row_off, long col_off, const BaseMap& block, const Rational& coeff) {
    if (m.base == Base::Bool) return;
    for (long i = 0; i < block.rows(); ++i)
        for (long j = 0; j < block.cols(); ++j) {
            const Rational& v = block.at(i, j);
            if (v != 0) m.at(row_off + i, col_off + j) += coeff * v;
        }
}

Rref rref_of_rows(std::vector<std::vector<Rational>> rows, long width) {
    Rref out;
    out.width = width;
    long lead = 0;
    size_t r = 0;
    // forward elimination into echelon form
    for (; lead < width && r < rows.size(); ++lead) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][lead] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Rational inv = Rational(1) / rows[r][lead];
        for (long c = 0; c < width; ++c) rows[r][c] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const Rational& f = rows[i][lead];
            if (f == 0) continue;
            Rational ff = f;
            for (long c = 0; c < width; ++c) rows[i][c] -= ff * rows[r][c];
        }
        out.pivots.push_back(lead);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

static std::vector<std::vector<Rational>> map_rows(const BaseMap& m) {
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

long rank(const BaseMap& m) {
    if (m.base == Base::Bool) return (m.dom.truth() && m.cod.truth()) ? 1 : 0;
    return (long)rref_of_rows(map_rows(m), m.cols()).pivots.size();
}

std::vector<std::vector<Rational>> nullspace(const BaseMap& m) {
    if (m.base == Base::Bool) fail("UnsupportedBase", "nullspace over Bool");
    Rref r = rref_of_rows(map_rows(m), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (long p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (long free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_c] = 1;
        for (size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -r.rows[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_linear(const BaseMap& m, const std::vector<Rational>& rhs) {
    if (m.base == Base::Bool) fail("UnsupportedBase", "solve_linear over Bool");
    auto rows = map_rows(m);
    for (long i = 0; i < m.rows(); ++i) rows[i].push_back(rhs[i]);
    Rref r = rref_of_rows(std::move(rows), m.cols() + 1);
    std::vector<Rational> x(m.cols(), Rational(0));
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt; // inconsistent
        x[r.pivots[i]] = r.rows[i][m.cols()];
    }
    return x;
}

bool is_isomorphism(const BaseMap& m) {
    if (m.base == Base::Bool) return m.dom == m.cod;
    return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<BaseMap> inverse(const BaseMap& m) {
    if (m.base == Base::Bool) {
        if (m.dom != m.cod) return std::nullopt;
        return bool_map(m.cod, m.dom);
    }
    if (m.rows() != m.cols()) return std::nullopt;
    long n = m.rows();
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(2 * n, Rational(0)));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
        rows[i][n + i] = 1;
    }
    Rref r = rref_of_rows(std::move(rows), 2 * n);
    if ((long)r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    BaseMap out = zero_map(m.cod, m.dom);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out.at(i, j) = r.rows[i][n + j];
    return out;
}

QuotientPresentation trivial_quotient(const BaseObject& ambient) {
    return QuotientPresentation{ambient, ambient, identity_map(ambient), identity_map(ambient), {}};
}

QuotientPresentation quotient_by_vectors(const BaseObject& ambient, std::vector<std::vector<Rational>> relations) {
    if (ambient.base == Base::Bool) return trivial_quotient(ambient);
    QuotientPresentation q;
    q.ambient = ambient;
    q.relation_generators = relations;
    Rref r = rref_of_rows(std::move(relations), ambient.dim);
    std::vector<bool> is_pivot(ambient.dim, false);
    for (long p : r.pivots) is_pivot[p] = true;
    std::vector<long> free_cols;
    for (long c = 0; c < ambient.dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    long qd = (long)free_cols.size();
    q.quot = rat_object(qd);
    q.projection = zero_map(ambient, q.quot);
    q.section = zero_map(q.quot, ambient);
    for (long t = 0; t < qd; ++t) {
        q.projection.at(t, free_cols[t]) = 1;
        q.section.at(free_cols[t], t) = 1;
    }
    // reducing e_{pivot_i} modulo row i leaves -row_i on the free coordinates
    for (size_t i = 0; i < r.pivots.size(); ++i)
        for (long t = 0; t < qd; ++t) q.projection.at(t, r.pivots[i]) = -r.rows[i][free_cols[t]];
    return q;
}

QuotientPresentation coequalizer_presentation(const BaseMap& f, const BaseMap& g) {
    if (f.base != g.base || f.dom != g.dom || f.cod != g.cod) fail("InvalidShape", "coequalizer: parallel pair expected");
    if (f.base == Base::Bool) return trivial_quotient(f.cod);
    BaseMap d = sub(f, g);
    std::vector<std::vector<Rational>> relations;
    for (long j = 0; j < d.cols(); ++j) {
        std::vector<Rational> col(d.rows(), Rational(0));
        bool nz = false;
        for (long i = 0; i < d.rows(); ++i) {
            col[i] = d.at(i, j);
            if (col[i] != 0) nz = true;
        }
        if (nz) relations.push_back(std::move(col));
    }
    return quotient_by_vectors(f.cod, std::move(relations));
}

} // namespace tambcat
