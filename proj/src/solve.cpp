#include "tambcat/solve.hpp"

namespace tambcat {

int MapSpaceProblem::add_unknown(const BaseObject& dom, const BaseObject& cod) {
    unknowns.emplace_back(dom, cod);
    return (int)unknowns.size() - 1;
}

MapSpaceProblem::Term MapSpaceProblem::term(const Rational& coeff, BaseMap left, int unknown, BaseMap right) {
    return Term{coeff, std::move(left), Embed::Plain, BaseObject{}, unknown, std::move(right)};
}

MapSpaceProblem::Term MapSpaceProblem::term_id_tensor(const Rational& coeff, BaseMap left, const BaseObject& d,
                                                      int unknown, BaseMap right) {
    return Term{coeff, std::move(left), Embed::IdTensorX, d, unknown, std::move(right)};
}

MapSpaceProblem::Term MapSpaceProblem::term_tensor_id(const Rational& coeff, BaseMap left, int unknown,
                                                      const BaseObject& d, BaseMap right) {
    return Term{coeff, std::move(left), Embed::XTensorId, d, unknown, std::move(right)};
}

void MapSpaceProblem::add_equation(std::vector<Term> terms) {
    if (base == Base::Bool) return; // constraints are automatic in a posetal base
    if (terms.empty()) return;
    for (const auto& t : terms) {
        const auto& [ud, uc] = unknowns[t.unknown];
        BaseObject ed = ud, ec = uc;
        if (t.embed == Embed::IdTensorX) {
            ed = tensor(t.embed_obj, ud);
            ec = tensor(t.embed_obj, uc);
        } else if (t.embed == Embed::XTensorId) {
            ed = tensor(ud, t.embed_obj);
            ec = tensor(uc, t.embed_obj);
        }
        if (t.right.cod != ed || t.left.dom != ec) fail("InvalidShape", "MapSpaceProblem: term shape mismatch");
        if (t.left.cod != terms[0].left.cod || t.right.dom != terms[0].right.dom)
            fail("InvalidShape", "MapSpaceProblem: equation shape mismatch");
    }
    equations.push_back(std::move(terms));
}

namespace {

// coefficient of X[m,s] in (L . E(X) . R)[r,c]
void accumulate_term(const MapSpaceProblem::Term& t, const std::pair<BaseObject, BaseObject>& shape, long r, long c,
                     std::vector<Rational>& row, long coeff_offset) {
    long xr = shape.second.dim, xc = shape.first.dim;
    long d = 1;
    if (t.embed != MapSpaceProblem::Embed::Plain) d = t.embed_obj.dim;
    for (long m = 0; m < xr; ++m)
        for (long s = 0; s < xc; ++s) {
            Rational acc(0);
            if (t.embed == MapSpaceProblem::Embed::Plain) {
                acc = t.left.at(r, m) * t.right.at(s, c);
            } else if (t.embed == MapSpaceProblem::Embed::IdTensorX) {
                for (long k = 0; k < d; ++k) acc += t.left.at(r, k * xr + m) * t.right.at(k * xc + s, c);
            } else {
                for (long k = 0; k < d; ++k) acc += t.left.at(r, m * d + k) * t.right.at(s * d + k, c);
            }
            if (acc != 0) row[coeff_offset + m * xc + s] += t.coeff * acc;
        }
}

} // namespace

MapSpaceProblem::Solution MapSpaceProblem::solve() const {
    Solution sol;
    if (base == Base::Bool) {
        sol.bool_feasible = true;
        for (const auto& [d, c] : unknowns)
            if (!implies(d, c)) sol.bool_feasible = false;
        return sol;
    }
    std::vector<long> offsets;
    long total = 0;
    for (const auto& [d, c] : unknowns) {
        offsets.push_back(total);
        total += d.dim * c.dim;
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& eq : equations) {
        long er = eq[0].left.cod.dim, ec = eq[0].right.dom.dim;
        for (long r = 0; r < er; ++r)
            for (long c = 0; c < ec; ++c) {
                std::vector<Rational> row(total, Rational(0));
                for (const auto& t : eq) accumulate_term(t, unknowns[t.unknown], r, c, row, offsets[t.unknown]);
                bool nz = false;
                for (const auto& x : row)
                    if (x != 0) { nz = true; break; }
                if (nz) rows.push_back(std::move(row));
            }
    }
    BaseMap sys = zero_map(rat_object(total), rat_object((long)rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (long j = 0; j < total; ++j) sys.at((long)i, j) = rows[i][j];
    for (const auto& v : nullspace(sys)) {
        std::vector<BaseMap> assignment;
        for (size_t k = 0; k < unknowns.size(); ++k) {
            BaseMap m = zero_map(unknowns[k].first, unknowns[k].second);
            long n = unknowns[k].first.dim * unknowns[k].second.dim;
            for (long i = 0; i < n; ++i) m.a[i] = v[offsets[k] + i];
            assignment.push_back(std::move(m));
        }
        sol.basis.push_back(std::move(assignment));
    }
    return sol;
}

std::optional<std::vector<Rational>> search_invertible(long k,
                                                       const std::function<bool(const std::vector<Rational>&)>& check,
                                                       long degree_bound) {
    if (k == 0) return std::nullopt;
    for (long i = 0; i < k; ++i) {
        std::vector<Rational> v(k, Rational(0));
        v[i] = 1;
        if (check(v)) return v;
    }
    long bound = degree_bound + 1;
    double budget = 1;
    for (long i = 0; i < k; ++i) budget *= (double)(bound + 1);
    if (budget > 3e6) bound = 3;
    std::vector<long> idx(k, 0);
    while (true) {
        std::vector<Rational> v(k);
        for (long i = 0; i < k; ++i) v[i] = Rational(idx[i]);
        if (check(v)) return v;
        long i = 0;
        for (; i < k; ++i) {
            if (++idx[i] <= bound) break;
            idx[i] = 0;
        }
        if (i == k) break;
    }
    // moment curve, in case the grid was capped
    for (long s = 1; s <= degree_bound + 2; ++s) {
        std::vector<Rational> v(k);
        Rational p(1);
        for (long i = 0; i < k; ++i) {
            v[i] = p;
            p *= s;
        }
        if (check(v)) return v;
    }
    return std::nullopt;
}

bool MapSpaceProblem::satisfies(const std::vector<BaseMap>& assignment) const {
    if (base == Base::Bool) return true;
    for (const auto& eq : equations) {
        BaseObject rd = eq[0].right.dom, lc = eq[0].left.cod;
        BaseMap acc = zero_map(rd, lc);
        for (const auto& t : eq) {
            BaseMap e = assignment[t.unknown];
            if (t.embed == Embed::IdTensorX) e = tensor(identity_map(t.embed_obj), e);
            if (t.embed == Embed::XTensorId) e = tensor(e, identity_map(t.embed_obj));
            acc = add(acc, scale(t.coeff, compose(t.left, compose(e, t.right))));
        }
        if (!is_zero(acc)) return false;
    }
    return true;
}

} // namespace tambcat
