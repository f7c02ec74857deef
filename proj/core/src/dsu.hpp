#pragma once

#include <numeric>
#include <vector>

namespace mpar::detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (p_[x] != x) x = p_[x] = p_[p_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        p_[b] = a;
        return true;
    }
    std::size_t count() {
        std::size_t c = 0;
        for (std::size_t i = 0; i < p_.size(); ++i) c += find(i) == i;
        return c;
    }

private:
    std::vector<std::size_t> p_;
};

}  // namespace mpar::detail
