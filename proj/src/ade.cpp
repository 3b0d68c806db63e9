#include "conelat/ade.hpp"

#include "conelat/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace conelat::ade {

DynkinType parse_type(const std::string& s)
{
    if (s.size() < 2)
        throw Error("malformed Dynkin type '" + s + "'");
    DynkinType t;
    t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    try {
        std::size_t used = 0;
        t.rank = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1)
            throw Error("");
    } catch (const std::exception&) {
        throw Error("malformed Dynkin type '" + s + "'");
    }
    bool ok = (t.family == 'A' && t.rank >= 1) || (t.family == 'D' && t.rank >= 4) ||
              (t.family == 'E' && t.rank >= 6);
    if (!ok || t.rank > 8)
        throw Error("unsupported Dynkin type '" + s + "' (A_n, D_n, E6-E8 of rank at most 8)");
    return t;
}

std::vector<std::vector<int>> cartan_matrix(const DynkinType& t)
{
    const int n = t.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    for (int i = 0; i < n; ++i)
        a[i][i] = 2;
    switch (t.family) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i)
            link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        // 1-3-4-5-...-n with 2 attached to 4 (1-based)
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i)
            link(i, i + 1);
        break;
    default:
        throw Error("unknown Dynkin family");
    }
    return a;
}

bool is_diagram_automorphism(const DynkinType& t, const std::vector<int>& tau)
{
    const int n = t.rank;
    if (static_cast<int>(tau.size()) != n)
        return false;
    std::vector<int> sorted = tau;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i)
            return false;
    const auto a = cartan_matrix(t);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[tau[i]][tau[j]] != a[i][j])
                return false;
    return true;
}

std::vector<int> diagram_automorphism(const DynkinType& t, const std::string& spec)
{
    const int n = t.rank;
    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    if (spec == "id" || spec == "identity") {
        return tau;
    } else if (spec == "flip") {
        if (t.family == 'A') {
            for (int i = 0; i < n; ++i)
                tau[i] = n - 1 - i;
        } else if (t.family == 'D') {
            std::swap(tau[n - 2], tau[n - 1]);
        } else if (t.family == 'E' && n == 6) {
            // 1<->6, 3<->5, 2 and 4 fixed (1-based)
            tau = {5, 1, 4, 3, 2, 0};
        } else {
            throw Error(t.name() + " has no nontrivial diagram automorphism");
        }
    } else if (spec == "triality") {
        if (!(t.family == 'D' && n == 4))
            throw Error("triality exists only for D4");
        tau = {2, 1, 3, 0};
    } else {
        std::vector<int> parsed;
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                parsed.push_back(std::stoi(item) - 1);
            } catch (const std::exception&) {
                throw Error("malformed diagram automorphism '" + spec + "'");
            }
        }
        tau = parsed;
    }
    if (!is_diagram_automorphism(t, tau))
        throw Error("'" + spec + "' is not an automorphism of the " + t.name() + " diagram");
    return tau;
}

namespace {

using RootVec = std::vector<int>;

// <beta, alpha_i> for the symmetric Cartan form
int pairing(const std::vector<std::vector<int>>& a, const RootVec& beta, int i)
{
    int s = 0;
    for (std::size_t j = 0; j < beta.size(); ++j)
        s += beta[j] * a[j][i];
    return s;
}

RootVec simple_reflect(const std::vector<std::vector<int>>& a, const RootVec& beta, int i)
{
    RootVec r = beta;
    r[i] -= pairing(a, beta, i);
    return r;
}

struct PermHash {
    std::size_t operator()(const std::vector<std::uint8_t>& p) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto x : p)
            h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

} // namespace

std::vector<std::vector<int>> root_system(const DynkinType& t)
{
    const auto a = cartan_matrix(t);
    const int n = t.rank;
    std::vector<RootVec> positive;
    std::map<RootVec, bool> seen;
    for (int i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        positive.push_back(e);
        seen[e] = true;
    }
    for (std::size_t k = 0; k < positive.size(); ++k)
        for (int i = 0; i < n; ++i) {
            RootVec r = simple_reflect(a, positive[k], i);
            bool pos = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
            if (pos && !seen.count(r)) {
                seen[r] = true;
                positive.push_back(r);
            }
        }
    std::vector<RootVec> all = positive;
    for (const auto& r : positive) {
        RootVec m = r;
        for (auto& x : m)
            x = -x;
        all.push_back(m);
    }
    return all;
}

std::uint64_t weyl_group_order(const DynkinType& t)
{
    auto factorial = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i)
            f *= static_cast<std::uint64_t>(i);
        return f;
    };
    switch (t.family) {
    case 'A':
        return factorial(t.rank + 1);
    case 'D':
        return (std::uint64_t{1} << (t.rank - 1)) * factorial(t.rank);
    case 'E':
        return t.rank == 6 ? 51840 : t.rank == 7 ? 2903040 : 696729600;
    }
    throw Error("unknown Dynkin family");
}

std::uint64_t fixed_order_by_root_permutations(const DynkinType& t, const std::vector<int>& tau)
{
    if (!is_diagram_automorphism(t, tau))
        throw Error("not a diagram automorphism");
    const auto a = cartan_matrix(t);
    const auto roots = root_system(t);
    const int n = t.rank;
    std::map<RootVec, std::uint8_t> index;
    for (std::size_t k = 0; k < roots.size(); ++k)
        index[roots[k]] = static_cast<std::uint8_t>(k);

    using Perm = std::vector<std::uint8_t>;
    std::vector<Perm> gens;
    for (int i = 0; i < n; ++i) {
        Perm p(roots.size());
        for (std::size_t k = 0; k < roots.size(); ++k)
            p[k] = index.at(simple_reflect(a, roots[k], i));
        gens.push_back(std::move(p));
    }
    Perm tau_perm(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
        RootVec img(n, 0);
        for (int j = 0; j < n; ++j)
            img[tau[j]] = roots[k][j];
        tau_perm[k] = index.at(img);
    }

    Perm id(roots.size());
    std::iota(id.begin(), id.end(), 0);
    std::unordered_set<Perm, PermHash> group{id};
    std::vector<Perm> frontier{id};
    std::uint64_t fixed = 0;
    auto commutes = [&](const Perm& p) {
        for (std::size_t k = 0; k < p.size(); ++k)
            if (tau_perm[p[k]] != p[tau_perm[k]])
                return false;
        return true;
    };
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& p : frontier) {
            if (commutes(p))
                ++fixed;
            for (const auto& s : gens) {
                Perm q(p.size());
                for (std::size_t k = 0; k < p.size(); ++k)
                    q[k] = s[p[k]];
                if (group.insert(q).second)
                    next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    if (group.size() != weyl_group_order(t))
        throw Error("Weyl group enumeration produced the wrong number of elements");
    return fixed;
}

std::uint64_t fixed_order_by_orbit_search(const DynkinType& t, const std::vector<int>& tau)
{
    if (!is_diagram_automorphism(t, tau))
        throw Error("not a diagram automorphism");
    const auto a = cartan_matrix(t);
    const int n = t.rank;
    using Weight = std::vector<long long>; // Dynkin labels
    auto reflect = [&](const Weight& w, int i) {
        Weight r = w;
        for (int j = 0; j < n; ++j)
            r[j] -= w[i] * a[i][j];
        return r;
    };
    auto first_negative = [&](const Weight& w) {
        for (int j = 0; j < n; ++j)
            if (w[j] < 0)
                return j;
        return n;
    };
    auto tau_fixed = [&](const Weight& w) {
        for (int j = 0; j < n; ++j)
            if (w[tau[j]] != w[j])
                return false;
        return true;
    };

    // Reverse search: the parent of w != rho is s_i w for the first negative
    // label i; children of w are s_j w for positive labels j whose parent is w.
    struct Frame {
        Weight w;
        int next_child;
    };
    std::vector<Frame> stack{{Weight(n, 1), 0}};
    std::uint64_t total = 0, fixed = 0;
    total = 1;
    fixed = tau_fixed(stack.back().w) ? 1 : 0;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_child == n) {
            stack.pop_back();
            continue;
        }
        const int j = f.next_child++;
        if (f.w[j] <= 0)
            continue;
        Weight c = reflect(f.w, j);
        if (first_negative(c) != j)
            continue;
        ++total;
        if (tau_fixed(c))
            ++fixed;
        stack.push_back({std::move(c), 0});
    }
    if (total != weyl_group_order(t))
        throw Error("orbit search produced the wrong number of elements");
    return fixed;
}

std::uint64_t folded_weyl_order(const DynkinType& t, const std::vector<int>& tau, const FoldOptions& opt)
{
    if (weyl_group_order(t) > kLargeGroup) {
        if (!opt.allow_large)
            throw Error("W(" + t.name() + ") has " + std::to_string(weyl_group_order(t)) +
                        " elements; pass the large-group opt-in to enumerate it");
        return fixed_order_by_orbit_search(t, tau);
    }
    return fixed_order_by_root_permutations(t, tau);
}

} // namespace conelat::ade
