#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trimcc/ring.hpp"

namespace trimcc {

using Exponents = std::vector<std::int32_t>;

// Total multiplicative order on monomials with 1 minimal.  Kinds:
//   lex                 — lexicographic on the ring's variable order
//   grevlex             — graded reverse lexicographic on all variables
//   block-elimination   — grevlex block order with a leading group of
//                         variables to be eliminated
//   per-block-grevlex   — grevlex within each ring grading block in order
// Block-structured kinds compare group by group, grevlex inside each group.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, BlockElimination, PerBlockGrevlex };

    static MonomialOrder lex(int nvars);
    static MonomialOrder grevlex(int nvars);
    // Eliminates the variables listed in `drop` (compared first).
    static MonomialOrder block_elimination(const PolynomialRing& ring,
                                           const std::vector<std::string>& drop);
    static MonomialOrder per_block_grevlex(const PolynomialRing& ring);

    Kind kind() const { return kind_; }
    // +1 if a > b, -1 if a < b, 0 if equal.
    int compare(const Exponents& a, const Exponents& b) const;
    bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }
    bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }

    // Stable string key for GB caches.
    const std::string& key() const { return key_; }
    // Group of variable indices compared first (empty unless elimination).
    const std::vector<int>& eliminated() const { return groups_.empty() ? empty_ : groups_[0]; }

private:
    MonomialOrder(Kind k, std::vector<std::vector<int>> groups, int nvars);

    Kind kind_;
    std::vector<std::vector<int>> groups_;
    int nvars_ = 0;
    std::string key_;
    static const std::vector<int> empty_;
};

} // namespace trimcc
