#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace trimcc {

// A polynomial ring over Q, given by an ordered list of distinct variable
// names partitioned into ordered grading blocks (e.g. a primal block
// x0..xn and a dual block a0..an for bihomogeneous computations).
class PolynomialRing {
public:
    struct Block {
        std::string name;
        std::vector<int> vars; // indices into the variable list
    };

    using Ptr = std::shared_ptr<const PolynomialRing>;

    // Single block named "all" covering every variable.
    static Ptr make(std::vector<std::string> vars);
    // Explicit blocks: each entry (block name, variable names in order).
    static Ptr make(std::vector<std::string> vars,
                    std::vector<std::pair<std::string, std::vector<std::string>>> blocks);

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[i]; }
    // -1 when absent.
    int var_index(const std::string& name) const;

    const std::vector<Block>& blocks() const { return blocks_; }
    bool has_block(const std::string& name) const;
    const Block& block(const std::string& name) const;

    // Structural equality (same variable names in order, same blocks).
    bool same(const PolynomialRing& other) const;

    std::string describe() const;

    // New ring with extra variables appended as a new block; existing
    // variable indices are unchanged.
    Ptr extended(const std::vector<std::string>& new_vars, const std::string& block_name) const;

    // New ring over the given subset of variables (kept in this ring's
    // order), single block.
    Ptr restricted(const std::vector<std::string>& keep) const;

private:
    std::vector<std::string> vars_;
    std::vector<Block> blocks_;
    std::map<std::string, int> index_;
};

} // namespace trimcc
