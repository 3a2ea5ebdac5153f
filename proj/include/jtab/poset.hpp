#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jtab/partition.hpp"

namespace jtab {

/* Vertex (u,i,k) of the poset D_P: position u in a row of length i, copy k. */
struct Vertex {
    int u = 0;
    int i = 0;
    int k = 0;
    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

enum class MapKind { Beta, Alpha, E, W };

/* One cover edge of Diag(D_P), labeled by the elementary map producing it.
 * For Beta/Alpha/W the label index is the row length i; for E it is (i,k).
 */
struct PosetEdge {
    Vertex from;
    Vertex to;
    MapKind kind;
    int i = 0;
    int k = 0;  // copy index, E maps only
    std::string label() const;
};

class PosetDP {
public:
    explicit PosetDP(const Partition& p);

    const Partition& source() const { return p_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<PosetEdge>& edges() const { return edges_; }

    /* sl2 weight 2u - i - 1 */
    static int weight(const Vertex& v) { return 2 * v.u - v.i - 1; }
    /* order-reversing involution (u,i,k) -> (i+1-u, i, n_i+1-k) */
    Vertex tau(const Vertex& v) const;

    std::string to_dot() const;

private:
    Partition p_;
    std::vector<Vertex> vertices_;
    std::vector<PosetEdge> edges_;
};

PosetDP build_poset(const Partition& p);

std::map<Vertex, int> sl2_weights(const Partition& p);

/* first differences of the sorted weight multiset (n-1 values, n >= 2) */
std::vector<int> dynkin_weights(const Partition& p);

struct UChainReport {
    int a = 0;
    long long length = 0;
};

/* |C_a| = a n_a + (a-1) n_{a-1} + 2 sum_{i>a} n_i, a a part of P */
UChainReport u_chain_length(const Partition& p, int a);

/* largest part of Q(P): max over parts a of |C_a| */
long long oblak_largest_part(const Partition& p);

/* P'(P,a): parts a and a-1 removed, parts > a shrunk by two */
Partition remove_u_chain(const Partition& p, int a);

/* Ob(P): peel a maximum-length U-chain (largest a on ties) until almost
 * rectangular; the result is stable
 */
Partition oblak(const Partition& p);

/* recompute Ob(P) along every maximizing choice of a; true iff all branches
 * agree
 */
bool oblak_tie_independence(const Partition& p);

} // namespace jtab
