#include "lv/group_id.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lv/errors.hpp"

namespace lv {

namespace {

Endomorphism invert(const Endomorphism& e) {
    auto aff = as_affine(e);
    if (!aff) throw unsupported_error("closure over non-affine elements is not supported");
    return affine_inverse(*aff).expand();
}

} // namespace

ClosureResult closure_check(const std::vector<Endomorphism>& elements, std::size_t bound) {
    ClosureResult res;
    std::map<std::string, int> index;
    std::vector<Endomorphism> all;
    auto insert = [&](const Endomorphism& e) -> bool {
        auto [it, fresh] = index.emplace(canonical_key(e), static_cast<int>(all.size()));
        if (fresh) {
            all.push_back(e);
            if (all.size() > bound) throw closure_bound_error("closure exceeded element bound");
        }
        return fresh;
    };

    bool grew = false;
    for (const auto& e : elements) insert(e);
    if (all.empty()) {
        insert(Endomorphism::identity(1));
        grew = true;
    }
    // all.size() is re-read each pass, so late arrivals get their inverses
    // and products with everything as well
    for (std::size_t i = 0; i < all.size(); ++i) {
        grew |= insert(invert(all[i]));
        for (std::size_t j = 0; j <= i; ++j) {
            grew |= insert(compose(all[i], all[j]));
            grew |= insert(compose(all[j], all[i]));
        }
    }
    res.closed = !grew;
    res.completed = std::move(all);
    return res;
}

std::vector<std::vector<int>> cayley(const std::vector<Endomorphism>& elements) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        index.emplace(canonical_key(elements[i]), static_cast<int>(i));
    const int n = static_cast<int>(elements.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto it = index.find(canonical_key(compose(elements[i], elements[j])));
            if (it == index.end())
                throw domain_error("cayley: set is not closed under composition");
            table[i][j] = it->second;
        }
    }
    return table;
}

std::string GroupType::name() const {
    switch (tag) {
        case Tag::Trivial: return "trivial";
        case Tag::Cyclic: return "cyclic";
        case Tag::Klein4: return "klein4";
        case Tag::Dihedral: return "dihedral";
        case Tag::Other: return "other";
    }
    return "other";
}

GroupType identify(const std::vector<Endomorphism>& elements) {
    const int n = static_cast<int>(elements.size());
    if (n == 0) throw domain_error("identify: empty element set");
    const auto table = cayley(elements);

    int id_idx = -1;
    const Endomorphism id = Endomorphism::identity(elements[0].nvars);
    for (int i = 0; i < n; ++i)
        if (elements[i] == id) id_idx = i;
    if (id_idx < 0) throw domain_error("identify: identity not in set");

    std::vector<int> order(n, 0);
    for (int i = 0; i < n; ++i) {
        int cur = i, k = 1;
        while (cur != id_idx) {
            cur = table[cur][i];
            ++k;
            if (k > n) throw domain_error("identify: element order exceeds set size");
        }
        order[i] = k;
    }

    GroupType g;
    g.order = n;
    g.element_orders = order;
    std::sort(g.element_orders.begin(), g.element_orders.end());
    g.abelian = true;
    for (int i = 0; i < n && g.abelian; ++i)
        for (int j = 0; j < n; ++j)
            if (table[i][j] != table[j][i]) {
                g.abelian = false;
                break;
            }

    if (n == 1) {
        g.tag = GroupType::Tag::Trivial;
        g.m = 1;
        return g;
    }
    for (int i = 0; i < n; ++i) {
        if (order[i] == n) {
            g.tag = GroupType::Tag::Cyclic;
            g.m = n;
            return g;
        }
    }
    if (n == 4) {
        bool involutions = true;
        for (int i = 0; i < n; ++i)
            if (i != id_idx && order[i] != 2) involutions = false;
        if (involutions) {
            g.tag = GroupType::Tag::Klein4;
            g.m = 2;
            return g;
        }
    }
    if (n % 2 == 0 && n >= 6) {
        const int m = n / 2;
        for (int r = 0; r < n; ++r) {
            if (order[r] != m) continue;
            std::vector<bool> in_r(n, false);
            int cur = id_idx;
            for (int k = 0; k < m; ++k) {
                in_r[cur] = true;
                cur = table[cur][r];
            }
            int r_inv = id_idx;
            for (int k = 0; k < m - 1; ++k) r_inv = table[r_inv][r];
            for (int s = 0; s < n; ++s) {
                if (in_r[s] || order[s] != 2) continue;
                if (table[table[s][r]][s] == r_inv) {
                    g.tag = GroupType::Tag::Dihedral;
                    g.m = m;
                    return g;
                }
            }
        }
    }
    g.tag = GroupType::Tag::Other;
    return g;
}

} // namespace lv
