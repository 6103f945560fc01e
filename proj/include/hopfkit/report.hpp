#pragma once

#include <string>
#include <vector>

#include "hopfkit/linmap.hpp"

namespace hopfkit {

struct CheckItem {
    std::string axiom;
    bool ok = false;
    std::string witness;  // empty when ok
};

// Outcome of one structural check: per-axiom verdicts with witnesses.
// The overall verdict is the conjunction of the items.
struct Report {
    std::string subject;
    std::vector<CheckItem> items;

    bool pass() const {
        for (const auto& it : items)
            if (!it.ok) return false;
        return true;
    }
    void add(const std::string& axiom, bool ok, const std::string& witness = "") {
        items.push_back({axiom, ok, witness});
    }
    template <class K>
    void add_eq(const std::string& axiom, const LinMap<K>& lhs, const LinMap<K>& rhs,
                const std::vector<Index>& dom_dims = {}) {
        auto w = first_difference(lhs, rhs, dom_dims);
        items.push_back({axiom, !w.has_value(), w ? w->str() : ""});
    }
    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& it : other.items)
            items.push_back({prefix.empty() ? it.axiom : prefix + "." + it.axiom, it.ok, it.witness});
    }
    const CheckItem* first_failure() const {
        for (const auto& it : items)
            if (!it.ok) return &it;
        return nullptr;
    }
};

}  // namespace hopfkit
