#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jtab/partition.hpp"

namespace jtab {

enum class BoxKind { QInverse, Dhl };

/* A k-dimensional box of partitions with side lengths S_Q = (s_1,...,s_k).
 * Cell (i_1,...,i_k), all 1-based, holds a partition with i_1+...+i_k parts.
 */
class BoxQ {
public:
    BoxQ(Partition q, Key dims, BoxKind kind);

    const Partition& q() const { return q_; }
    const Key& dims() const { return dims_; }
    BoxKind kind() const { return kind_; }
    long long cell_count() const;

    const Partition& at(const std::vector<int>& index) const;
    void set(const std::vector<int>& index, Partition p);
    const std::vector<Partition>& cells() const { return cells_; }

    /* index tuple of the c-th cell in row-major order */
    std::vector<int> index_of(size_t c) const;

private:
    Partition q_;
    Key dims_;
    BoxKind kind_;
    std::vector<Partition> cells_;
    size_t flatten(const std::vector<int>& index) const;
};

/* the box of partitions with diagonal hook lengths Q (Lemma 5.9), built by
 * bending length-q_1 hooks around the box for (q_2,...,q_k)
 */
BoxQ dhl_box(const Partition& q);

/* bend a hook of length q1 around base so the result has t parts in total;
 * requires 1 <= t - #parts(base) <= q1 - (largest diagonal hook of base) - 1
 */
Partition bend_hook(int q1, const Partition& base, int t);

/* Theorem 5.13: the (s-1) x (r-1) x (u-r) box for Q = (u+s, u, u-r) with
 * s = q1 - q2 in {2,3,4}
 */
BoxQ box_two_part_lift(const Partition& q3);

/* Ob^{-1}(Q) by exhaustive enumeration, arranged into a box when the
 * per-parts-count census matches the coordinate-sum census of S_Q.
 */
struct BruteBoxReport {
    BoxQ box;
    bool total_matches;             // |Ob^{-1}(Q)| == prod S_Q
    bool diagonal_counts_match;     // per parts-count census agrees
    bool canonical;                 // cells placed by the closed-form lift
    std::map<int, long long> found_by_parts;
    std::map<int, long long> expected_by_parts;
};

BruteBoxReport box_bruteforce(const Partition& q);

/* Eq. (5.12): p(n) against sum over stable Q |- n of prod S_Q */
std::pair<long long, long long> partition_count_identity(long long n);

/* floors of a box printed as 2-D tables, matching the paper's displays */
std::string render_floors(const BoxQ& box, bool ar_style = false);

} // namespace jtab
