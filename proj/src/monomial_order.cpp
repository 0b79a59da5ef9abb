#include "trimcc/monomial_order.hpp"

#include <numeric>
#include <sstream>

#include "trimcc/errors.hpp"

namespace trimcc {

const std::vector<int> MonomialOrder::empty_;

namespace {
// Grevlex comparison restricted to the given variable group.
int grevlex_cmp(const Exponents& a, const Exponents& b, const std::vector<int>& group) {
    long long da = 0, db = 0;
    for (int i : group) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (auto it = group.rbegin(); it != group.rend(); ++it) {
        std::int32_t ai = a[*it], bi = b[*it];
        if (ai != bi) return ai < bi ? 1 : -1;
    }
    return 0;
}
} // namespace

MonomialOrder::MonomialOrder(Kind k, std::vector<std::vector<int>> groups, int nvars)
    : kind_(k), groups_(std::move(groups)), nvars_(nvars) {
    std::ostringstream os;
    switch (k) {
        case Kind::Lex: os << "lex"; break;
        case Kind::Grevlex: os << "grevlex"; break;
        case Kind::BlockElimination: os << "elim"; break;
        case Kind::PerBlockGrevlex: os << "blockgrevlex"; break;
    }
    for (const auto& g : groups_) {
        os << "|";
        for (int i : g) os << i << ",";
    }
    key_ = os.str();
}

MonomialOrder MonomialOrder::lex(int nvars) { return MonomialOrder(Kind::Lex, {}, nvars); }

MonomialOrder MonomialOrder::grevlex(int nvars) {
    std::vector<int> all(nvars);
    std::iota(all.begin(), all.end(), 0);
    return MonomialOrder(Kind::Grevlex, {all}, nvars);
}

MonomialOrder MonomialOrder::block_elimination(const PolynomialRing& ring,
                                               const std::vector<std::string>& drop) {
    std::vector<bool> dropped(ring.nvars(), false);
    std::vector<int> first;
    for (const auto& name : drop) {
        int i = ring.var_index(name);
        if (i < 0) throw InputError("block_elimination: unknown variable '" + name + "'");
        if (!dropped[i]) first.push_back(i);
        dropped[i] = true;
    }
    std::vector<int> rest;
    for (int i = 0; i < ring.nvars(); ++i)
        if (!dropped[i]) rest.push_back(i);
    std::vector<std::vector<int>> groups;
    if (!first.empty()) groups.push_back(first);
    if (!rest.empty()) groups.push_back(rest);
    return MonomialOrder(Kind::BlockElimination, std::move(groups), ring.nvars());
}

MonomialOrder MonomialOrder::per_block_grevlex(const PolynomialRing& ring) {
    std::vector<std::vector<int>> groups;
    for (const auto& b : ring.blocks())
        if (!b.vars.empty()) groups.push_back(b.vars);
    return MonomialOrder(Kind::PerBlockGrevlex, std::move(groups), ring.nvars());
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    if (kind_ == Kind::Lex) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    for (const auto& g : groups_) {
        int c = grevlex_cmp(a, b, g);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace trimcc
