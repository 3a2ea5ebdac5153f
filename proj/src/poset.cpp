#include "jtab/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jtab {

std::string to_string(const Vertex& v) {
    std::ostringstream os;
    os << '(' << v.u << ',' << v.i << ',' << v.k << ')';
    return os.str();
}

std::string PosetEdge::label() const {
    std::ostringstream os;
    switch (kind) {
        case MapKind::Beta: os << "beta_" << i; break;
        case MapKind::Alpha: os << "alpha_" << i; break;
        case MapKind::E: os << "e_" << i << ',' << k; break;
        case MapKind::W: os << "w_" << i; break;
    }
    return os.str();
}

PosetDP::PosetDP(const Partition& p) : p_(p) {
    if (p.empty()) throw std::domain_error("build_poset: empty partition");
    for (auto [i, ni] : p.runs())
        for (int k = 1; k <= ni; k++)
            for (int u = 1; u <= i; u++) vertices_.push_back({u, i, k});

    auto s = p.distinct_parts();  // decreasing
    std::set<int> sset(s.begin(), s.end());
    for (size_t idx = 0; idx < s.size(); idx++) {
        int i = s[idx];
        int ni = p.multiplicity(i);
        /* beta_i and alpha_i need the next smaller part i^- */
        if (idx + 1 < s.size()) {
            int im = s[idx + 1];
            int nim = p.multiplicity(im);
            for (int u = 1; u <= im; u++)
                edges_.push_back({{u, i, ni}, {u, im, 1}, MapKind::Beta, i, 0});
            for (int u = 1; u <= im; u++)
                edges_.push_back({{u, im, nim}, {u + i - im, i, 1}, MapKind::Alpha, i, 0});
        }
        for (int k = 1; k < ni; k++)
            for (int u = 1; u <= i; u++)
                edges_.push_back({{u, i, k}, {u, i, k + 1}, MapKind::E, i, k});
        if (!sset.count(i - 1) && !sset.count(i + 1))
            for (int u = 1; u < i; u++)
                edges_.push_back({{u, i, ni}, {u + 1, i, 1}, MapKind::W, i, 0});
    }
}

Vertex PosetDP::tau(const Vertex& v) const {
    return {v.i + 1 - v.u, v.i, p_.multiplicity(v.i) + 1 - v.k};
}

std::string PosetDP::to_dot() const {
    std::ostringstream os;
    os << "digraph DP {\n  rankdir=LR;\n";
    for (const auto& v : vertices_)
        os << "  \"" << to_string(v) << "\" [label=\"" << to_string(v)
           << "\\nw=" << weight(v) << "\"];\n";
    for (const auto& e : edges_)
        os << "  \"" << to_string(e.from) << "\" -> \"" << to_string(e.to)
           << "\" [label=\"" << e.label() << "\"];\n";
    os << "}\n";
    return os.str();
}

PosetDP build_poset(const Partition& p) { return PosetDP(p); }

std::map<Vertex, int> sl2_weights(const Partition& p) {
    std::map<Vertex, int> w;
    for (auto [i, ni] : p.runs())
        for (int k = 1; k <= ni; k++)
            for (int u = 1; u <= i; u++) w[{u, i, k}] = 2 * u - i - 1;
    return w;
}

std::vector<int> dynkin_weights(const Partition& p) {
    if (p.total() < 2) throw std::domain_error("dynkin_weights: need n >= 2");
    std::vector<int> rho;
    for (auto [i, ni] : p.runs())
        for (int k = 0; k < ni; k++)
            for (int u = 1; u <= i; u++) rho.push_back(2 * u - i - 1);
    std::sort(rho.begin(), rho.end());
    std::vector<int> diffs(rho.size() - 1);
    for (size_t j = 0; j + 1 < rho.size(); j++) diffs[j] = rho[j + 1] - rho[j];
    return diffs;
}

UChainReport u_chain_length(const Partition& p, int a) {
    if (p.multiplicity(a) == 0) throw std::domain_error("u_chain_length: a is not a part");
    long long len = static_cast<long long>(a) * p.multiplicity(a) +
                    static_cast<long long>(a - 1) * p.multiplicity(a - 1);
    for (auto [i, ni] : p.runs()) {
        if (i <= a) break;
        len += 2LL * ni;
    }
    return {a, len};
}

long long oblak_largest_part(const Partition& p) {
    long long best = 0;
    for (int a : p.distinct_parts()) best = std::max(best, u_chain_length(p, a).length);
    return best;
}

Partition remove_u_chain(const Partition& p, int a) {
    if (p.multiplicity(a) == 0) throw std::domain_error("remove_u_chain: a is not a part");
    std::vector<std::pair<int, int>> runs;
    for (auto [i, ni] : p.runs()) {
        if (i > a)
            runs.emplace_back(i - 2, ni);  // loses the two linking vertices
        else if (i <= a - 2)
            runs.emplace_back(i, ni);
        /* rows a and a-1 are consumed by the chain */
    }
    Partition out = Partition::from_runs(runs);
    if (out.total() != p.total() - u_chain_length(p, a).length)
        throw std::domain_error("remove_u_chain: inconsistent removal");
    return out;
}

Partition oblak(const Partition& p) {
    if (p.empty()) return p;
    if (is_almost_rectangular(p)) return Partition({static_cast<int>(p.total())});
    long long best = 0;
    int besta = 0;
    for (int a : p.distinct_parts()) {
        long long len = u_chain_length(p, a).length;
        if (len > best || (len == best && a > besta)) {
            best = len;
            besta = a;
        }
    }
    Partition rest = oblak(remove_u_chain(p, besta));
    std::vector<int> parts{static_cast<int>(best)};
    parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
    return Partition(std::move(parts));
}

namespace {
void oblak_all_branches(const Partition& p, std::vector<int>& prefix, std::set<Partition>& out) {
    if (p.empty()) {
        out.insert(Partition(prefix));
        return;
    }
    if (is_almost_rectangular(p)) {
        prefix.push_back(static_cast<int>(p.total()));
        out.insert(Partition(prefix));
        prefix.pop_back();
        return;
    }
    long long best = 0;
    for (int a : p.distinct_parts()) best = std::max(best, u_chain_length(p, a).length);
    for (int a : p.distinct_parts()) {
        if (u_chain_length(p, a).length != best) continue;
        prefix.push_back(static_cast<int>(best));
        oblak_all_branches(remove_u_chain(p, a), prefix, out);
        prefix.pop_back();
    }
}
}

bool oblak_tie_independence(const Partition& p) {
    std::set<Partition> results;
    std::vector<int> prefix;
    oblak_all_branches(p, prefix, results);
    return results.size() <= 1;
}

} // namespace jtab
