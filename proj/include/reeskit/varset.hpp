#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace reeskit {

// Variables are partitioned into blocks: the base ring variables Z, the
// presentation variables T adjoined for a Rees-type presentation, and
// auxiliary elimination variables (the Rees variable u, colon/saturation
// helpers). T and aux variables carry weight 1 in the T-grading, base
// variables carry weight 0.
enum class VarBlock { base, rees, aux };

class VarRegistry;
using RegistryPtr = std::shared_ptr<const VarRegistry>;

class VarRegistry {
public:
    VarRegistry(std::vector<std::string> names, std::vector<VarBlock> blocks)
        : names_(std::move(names)), blocks_(std::move(blocks)) {
        if (names_.size() != blocks_.size())
            throw std::invalid_argument("VarRegistry: names/blocks size mismatch");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw std::invalid_argument("VarRegistry: empty variable name");
            auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
            (void)it;
            if (!fresh)
                throw std::invalid_argument("VarRegistry: duplicate variable '" + names_[i] + "'");
        }
    }

    static RegistryPtr make(std::vector<std::string> names, std::vector<VarBlock> blocks) {
        return std::make_shared<const VarRegistry>(std::move(names), std::move(blocks));
    }

    static RegistryPtr make_base(std::vector<std::string> names) {
        std::vector<VarBlock> blocks(names.size(), VarBlock::base);
        return make(std::move(names), std::move(blocks));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    VarBlock block(int i) const { return blocks_.at(i); }

    std::optional<int> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int index_of(const std::string& name) const {
        auto idx = find(name);
        if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
        return *idx;
    }

    std::vector<int> indices_of_block(VarBlock b) const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (blocks_[i] == b) out.push_back(i);
        return out;
    }

    // weight of variable i in the T-grading
    int t_weight(int i) const { return blocks_.at(i) == VarBlock::base ? 0 : 1; }

    // New registry with extra variables appended.
    RegistryPtr extend(const std::vector<std::string>& more,
                       const std::vector<VarBlock>& more_blocks) const {
        std::vector<std::string> n = names_;
        std::vector<VarBlock> b = blocks_;
        n.insert(n.end(), more.begin(), more.end());
        b.insert(b.end(), more_blocks.begin(), more_blocks.end());
        return make(std::move(n), std::move(b));
    }

    // New registry keeping only the listed variable indices, in the given order.
    RegistryPtr restrict_to(const std::vector<int>& keep) const {
        std::vector<std::string> n;
        std::vector<VarBlock> b;
        n.reserve(keep.size());
        for (int i : keep) {
            n.push_back(names_.at(i));
            b.push_back(blocks_.at(i));
        }
        return make(std::move(n), std::move(b));
    }

    bool same_names(const VarRegistry& other) const {
        return names_ == other.names_;
    }

private:
    std::vector<std::string> names_;
    std::vector<VarBlock> blocks_;
    std::unordered_map<std::string, int> index_;
};

} // namespace reeskit
