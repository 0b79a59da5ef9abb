#include "trimcc/ring.hpp"

#include <algorithm>
#include <sstream>

#include "trimcc/errors.hpp"

namespace trimcc {

namespace {
void check_names(const std::vector<std::string>& vars) {
    for (const auto& v : vars) {
        if (v.empty()) throw InputError("empty variable name");
        if (!(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw InputError("bad variable name: '" + v + "'");
        for (char c : v)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw InputError("bad variable name: '" + v + "'");
    }
}
} // namespace

PolynomialRing::Ptr PolynomialRing::make(std::vector<std::string> vars) {
    std::vector<std::string> all = vars;
    return make(std::move(vars), {{"all", all}});
}

PolynomialRing::Ptr PolynomialRing::make(
    std::vector<std::string> vars,
    std::vector<std::pair<std::string, std::vector<std::string>>> blocks) {
    check_names(vars);
    auto ring = std::make_shared<PolynomialRing>();
    ring->vars_ = std::move(vars);
    for (int i = 0; i < static_cast<int>(ring->vars_.size()); ++i) {
        if (!ring->index_.emplace(ring->vars_[i], i).second)
            throw InputError("duplicate variable name: '" + ring->vars_[i] + "'");
    }
    std::vector<bool> seen(ring->vars_.size(), false);
    for (auto& [bname, bvars] : blocks) {
        Block b;
        b.name = bname;
        for (const auto& v : bvars) {
            int idx = ring->var_index(v);
            if (idx < 0) throw InputError("block '" + bname + "' names unknown variable '" + v + "'");
            if (seen[idx]) throw InputError("variable '" + v + "' appears in two blocks");
            seen[idx] = true;
            b.vars.push_back(idx);
        }
        ring->blocks_.push_back(std::move(b));
    }
    for (int i = 0; i < ring->nvars(); ++i)
        if (!seen[i]) throw InputError("variable '" + ring->vars_[i] + "' not covered by any block");
    return ring;
}

int PolynomialRing::var_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool PolynomialRing::has_block(const std::string& name) const {
    for (const auto& b : blocks_)
        if (b.name == name) return true;
    return false;
}

const PolynomialRing::Block& PolynomialRing::block(const std::string& name) const {
    for (const auto& b : blocks_)
        if (b.name == name) return b;
    throw InputError("no block named '" + name + "'");
}

bool PolynomialRing::same(const PolynomialRing& other) const {
    if (this == &other) return true;
    if (vars_ != other.vars_) return false;
    if (blocks_.size() != other.blocks_.size()) return false;
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].name != other.blocks_[i].name || blocks_[i].vars != other.blocks_[i].vars)
            return false;
    return true;
}

std::string PolynomialRing::describe() const {
    std::ostringstream os;
    os << "Q[";
    for (size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
    os << "]";
    return os.str();
}

PolynomialRing::Ptr PolynomialRing::extended(const std::vector<std::string>& new_vars,
                                             const std::string& block_name) const {
    std::vector<std::string> vars = vars_;
    vars.insert(vars.end(), new_vars.begin(), new_vars.end());
    std::vector<std::pair<std::string, std::vector<std::string>>> blocks;
    for (const auto& b : blocks_) {
        std::vector<std::string> names;
        for (int i : b.vars) names.push_back(vars_[i]);
        blocks.emplace_back(b.name, names);
    }
    blocks.emplace_back(block_name, new_vars);
    return make(std::move(vars), std::move(blocks));
}

PolynomialRing::Ptr PolynomialRing::restricted(const std::vector<std::string>& keep) const {
    for (const auto& v : keep)
        if (var_index(v) < 0) throw InputError("restricted: unknown variable '" + v + "'");
    std::vector<std::string> vars;
    for (const auto& v : vars_)
        if (std::find(keep.begin(), keep.end(), v) != keep.end()) vars.push_back(v);
    return make(std::move(vars));
}

} // namespace trimcc
