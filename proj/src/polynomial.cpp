#include "trimcc/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "trimcc/errors.hpp"

namespace trimcc {

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b, const char* op) {
    if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring()))
        throw InputError(std::string("mixed rings in polynomial ") + op);
}

std::int32_t checked_exp_add(std::int32_t a, std::int32_t b) {
    std::int64_t s = static_cast<std::int64_t>(a) + b;
    if (s >= kMaxExponent)
        throw ComputationLimitError("monomial exponent overflow (limit 2^30)");
    return static_cast<std::int32_t>(s);
}

struct CanonicalLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return canonical_cmp(a, b) < 0;
    }
};

} // namespace

int canonical_cmp(const Exponents& a, const Exponents& b) {
    long long da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

Polynomial Polynomial::zero(PolynomialRing::Ptr ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
}

Polynomial Polynomial::constant(PolynomialRing::Ptr ring, const Rational& c) {
    Polynomial p = zero(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({c, Exponents(p.ring_->nvars(), 0)});
    return p;
}

Polynomial Polynomial::variable(PolynomialRing::Ptr ring, int var) {
    if (var < 0 || var >= ring->nvars()) throw InputError("variable index out of range");
    Polynomial p = zero(std::move(ring));
    Exponents e(p.ring_->nvars(), 0);
    e[var] = 1;
    p.terms_.push_back({Rational(1L), std::move(e)});
    return p;
}

Polynomial Polynomial::monomial(PolynomialRing::Ptr ring, const Rational& c, Exponents e) {
    if (static_cast<int>(e.size()) != ring->nvars())
        throw InputError("monomial exponent vector has wrong length");
    for (auto x : e)
        if (x < 0 || x >= kMaxExponent)
            throw InputError("monomial exponent out of range");
    Polynomial p = zero(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({c, std::move(e)});
    return p;
}

Polynomial Polynomial::from_terms(PolynomialRing::Ptr ring, std::vector<Term> terms) {
    std::map<Exponents, Rational, CanonicalLess> acc;
    for (auto& t : terms) {
        if (static_cast<int>(t.exps.size()) != ring->nvars())
            throw InputError("term exponent vector has wrong length");
        auto [it, inserted] = acc.emplace(std::move(t.exps), t.coef);
        if (!inserted) it->second += t.coef;
    }
    Polynomial p = zero(std::move(ring));
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) p.terms_.push_back({it->second, it->first});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && canonical_cmp(terms_[0].exps, Exponents(ring_->nvars(), 0)) == 0);
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_ring(*this, o, "addition");
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = canonical_cmp(terms_[i].exps, o.terms_[j].exps);
        if (c > 0) {
            merged.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            merged.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) merged.push_back({s, terms_[i].exps});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
    while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b, "multiplication");
    std::map<Exponents, Rational, CanonicalLess> acc;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Exponents e(ta.exps.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = checked_exp_add(ta.exps[k], tb.exps[k]);
            Rational c = ta.coef * tb.coef;
            auto [it, inserted] = acc.emplace(std::move(e), c);
            if (!inserted) it->second += c;
        }
    }
    Polynomial p = Polynomial::zero(a.ring_);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) p.terms_.push_back({it->second, it->first});
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coef *= c;
    return p;
}

Polynomial Polynomial::pow(long e) const {
    if (e < 0) throw InputError("negative polynomial power");
    Polynomial acc = constant(ring_, Rational(1L));
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_) return a.is_zero() && b.is_zero();
    if (!a.ring_->same(*b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].coef != b.terms_[i].coef ||
            canonical_cmp(a.terms_[i].exps, b.terms_[i].exps) != 0)
            return false;
    return true;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw InputError("derivative: variable out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exps[var] == 0) continue;
        Term d;
        d.coef = t.coef * Rational(static_cast<long>(t.exps[var]));
        d.exps = t.exps;
        d.exps[var] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(out));
}

long long Polynomial::total_degree() const {
    long long d = -1;
    for (const auto& t : terms_) {
        long long s = 0;
        for (auto e : t.exps) s += e;
        d = std::max(d, s);
    }
    return d;
}

long long Polynomial::degree_in(const std::vector<int>& vars) const {
    long long d = -1;
    for (const auto& t : terms_) {
        long long s = 0;
        for (int v : vars) s += t.exps[v];
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    long long d0 = -1;
    for (const auto& t : terms_) {
        long long s = 0;
        for (auto e : t.exps) s += e;
        if (d0 < 0)
            d0 = s;
        else if (s != d0)
            return false;
    }
    return true;
}

std::optional<std::vector<long long>> Polynomial::block_degrees() const {
    std::vector<long long> degs;
    bool first = true;
    for (const auto& t : terms_) {
        std::vector<long long> d(ring_->blocks().size(), 0);
        for (size_t b = 0; b < ring_->blocks().size(); ++b)
            for (int v : ring_->blocks()[b].vars) d[b] += t.exps[v];
        if (first) {
            degs = d;
            first = false;
        } else if (d != degs) {
            return std::nullopt;
        }
    }
    if (first) degs.assign(ring_->blocks().size(), 0);
    return degs;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
        throw InputError("evaluate: point has wrong length");
    Rational acc(0L);
    for (const auto& t : terms_) {
        Rational v = t.coef;
        for (size_t i = 0; i < point.size(); ++i)
            if (t.exps[i]) v *= point[i].pow(t.exps[i]);
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw InputError("substitute: need one image per variable");
    if (images.empty()) throw InputError("substitute into empty ring");
    auto target = images[0].ring();
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial m = Polynomial::constant(target, t.coef);
        for (size_t i = 0; i < images.size(); ++i)
            if (t.exps[i]) m *= images[i].pow(t.exps[i]);
        acc += m;
    }
    return acc;
}

Polynomial Polynomial::lifted(PolynomialRing::Ptr bigger) const {
    Polynomial p = zero(bigger);
    for (const auto& t : terms_) {
        Exponents e(bigger->nvars(), 0);
        for (int i = 0; i < ring_->nvars(); ++i) {
            int j = bigger->var_index(ring_->var_name(i));
            if (j < 0) throw InputError("lifted: target ring misses variable " + ring_->var_name(i));
            e[j] = t.exps[i];
        }
        p.terms_.push_back({t.coef, std::move(e)});
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return canonical_cmp(a.exps, b.exps) > 0; });
    return p;
}

Polynomial Polynomial::restricted(PolynomialRing::Ptr smaller) const {
    Polynomial p = zero(smaller);
    for (const auto& t : terms_) {
        Exponents e(smaller->nvars(), 0);
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (t.exps[i] == 0) continue;
            int j = smaller->var_index(ring_->var_name(i));
            if (j < 0)
                throw InputError("restricted: polynomial involves dropped variable " +
                                 ring_->var_name(i));
            e[j] = t.exps[i];
        }
        p.terms_.push_back({t.coef, std::move(e)});
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return canonical_cmp(a.exps, b.exps) > 0; });
    return p;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw InputError("leading term of zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (order.greater(terms_[i].exps, terms_[best].exps)) best = i;
    return terms_[best];
}

Rational Polynomial::leading_coef_canonical() const {
    if (terms_.empty()) throw InputError("leading coefficient of zero polynomial");
    return terms_[0].coef;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return scaled(leading_term(order).coef.inverse());
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coef;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool has_vars = false;
        std::ostringstream vars;
        bool firstv = true;
        for (size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (!firstv) vars << "*";
            firstv = false;
            has_vars = true;
            vars << ring_->var_name(static_cast<int>(i));
            if (t.exps[i] > 1) vars << "^" << t.exps[i];
        }
        if (!has_vars) {
            os << c.str();
        } else if (c.is_one()) {
            os << vars.str();
        } else {
            os << c.str() << "*" << vars.str();
        }
    }
    return os.str();
}

PolyMatrix jacobian_matrix(const std::vector<Polynomial>& gens, const std::vector<int>& vars) {
    if (gens.empty()) return {};
    for (const auto& g : gens)
        if (!g.ring()->same(*gens[0].ring()))
            throw InputError("jacobian_matrix: generators in different rings");
    PolyMatrix J(gens.size());
    for (size_t i = 0; i < gens.size(); ++i)
        for (int v : vars) J[i].push_back(gens[i].derivative(v));
    return J;
}

Polynomial poly_matrix_determinant(const PolyMatrix& M) {
    size_t n = M.size();
    if (n == 0) throw InputError("determinant of empty matrix");
    for (const auto& row : M)
        if (row.size() != n) throw InputError("determinant of non-square matrix");
    if (n == 1) return M[0][0];
    auto ring = M[0][0].ring();
    Polynomial det = Polynomial::zero(ring);
    // Laplace expansion along the first row; matrices here stay small.
    for (size_t j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        PolyMatrix sub(n - 1);
        for (size_t r = 1; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (c != j) sub[r - 1].push_back(M[r][c]);
        Polynomial cofactor = M[0][j] * poly_matrix_determinant(sub);
        if (j % 2)
            det -= cofactor;
        else
            det += cofactor;
    }
    return det;
}

namespace {
void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(n, k, 0, cur, out);
    return out;
}
} // namespace

std::vector<Polynomial> minors_ideal_generators(const PolyMatrix& M, int k) {
    int rows = static_cast<int>(M.size());
    int cols = rows ? static_cast<int>(M[0].size()) : 0;
    if (k <= 0 || k > rows || k > cols)
        throw InputError("minors: k out of range for matrix dimensions");
    std::vector<Polynomial> out;
    for (const auto& rs : subsets(rows, k)) {
        for (const auto& cs : subsets(cols, k)) {
            PolyMatrix sub(k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i].push_back(M[rs[i]][cs[j]]);
            Polynomial d = poly_matrix_determinant(sub);
            if (!d.is_zero()) out.push_back(std::move(d));
        }
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t counter) {
    // splitmix64 finalizer over the mixed inputs
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (tag + 1) + 0xbf58476d1ce4e5b9ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Polynomial random_linear_form(const PolynomialRing::Ptr& ring, const std::string& block,
                              std::uint64_t seed) {
    const auto& b = ring->block(block);
    std::vector<Term> terms;
    std::uint64_t state = seed;
    bool nonzero = false;
    int rounds = 0;
    while (!nonzero) {
        terms.clear();
        for (size_t i = 0; i < b.vars.size(); ++i) {
            state = derive_seed(state, 0x51, i);
            long c = static_cast<long>(state % 20001ULL) - 10000;
            if (c != 0) {
                nonzero = true;
                Exponents e(ring->nvars(), 0);
                e[b.vars[i]] = 1;
                terms.push_back({Rational(c), std::move(e)});
            }
        }
        if (++rounds > 64) throw ComputationLimitError("random_linear_form: degenerate stream");
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace trimcc
