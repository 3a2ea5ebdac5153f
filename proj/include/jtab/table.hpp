#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jtab/partition.hpp"

namespace jtab {

/* Invariants of T((u,u-r)) at hook index t:
 *   q = ceil((u-r)/(t+1)),  d = (t+1)q - (u-r)  (so 0 <= d < t+1),
 *   k = row where the t-th B/C hook starts,  c = type-C column budget.
 */
struct TableInvariants {
    int t = 0;
    int q = 0;
    int d = 0;
    int k = 0;
    int c = 0;
};

/* the last genuine hook index, min{u-r, floor((r-1)/2)} - 1; -1 when r = 2 */
int t_max(int u, int r);

/* valid for 0 <= t <= t_max; the sentinel level t = t_max+1 only defines
 * k_t = r (no hook)
 */
TableInvariants table_invariants(int u, int r, int t);

/* k_t with the conventions k_{-1} = 0 and k_{t_max+1} = r */
int k_of(int u, int r, int t);

enum class CellClass { A, B, C };

char to_char(CellClass c);

/* grid cell of T(Q): closed-form partition, owning class and row/hook index,
 * and the almost-rectangular blocks ((total, count) pairs) of the closed form
 */
struct TableCell {
    int k = 0;
    int l = 0;
    CellClass cls = CellClass::A;
    int t = 0;
    Partition partition;
    std::vector<std::pair<long long, int>> blocks;
    std::string ar_text() const;
};

/* which A row or B/C hook owns cell (k,l), per the covering in the proof of
 * Theorem 3.11(d)
 */
std::pair<CellClass, int> classify_cell(int u, int r, int k, int l);

Partition table_entry(int u, int r, int k, int l);

class TableQ {
public:
    TableQ(int u, int r);

    int u() const { return u_; }
    int r() const { return r_; }
    Partition q() const { return Partition({u_, u_ - r_}); }
    int rows() const { return r_ - 1; }
    int cols() const { return u_ - r_; }
    const TableCell& cell(int k, int l) const;  // 1-based
    const std::vector<TableCell>& cells() const { return cells_; }

private:
    int u_, r_;
    std::vector<TableCell> cells_;
};

/* Q must be a stable two-part partition (u, u-r), u > r >= 2 */
TableQ build_table(const Partition& q);

/* Definition 3.1 membership.  P must decompose into two almost rectangular
 * blocks (a,a-1 | b,b-1) with a-b >= 2; u is the largest part of Ob(P).
 * b_disjunct records which type-B condition fired (bit 1: the bottom-chain
 * condition, bit 2: the middle-chain one).
 */
struct TypeSet {
    bool a = false;
    bool b = false;
    bool c = false;
    int b_disjunct = 0;
};

TypeSet type_of(const Partition& p, const Partition& q);

/* the (c1,c2,s1,s2;a) of Definition 3.4; P must be of type C */
struct TypeCParam {
    int c1 = 0, c2 = 0, s1 = 0, s2 = 0, a = 0;
    friend bool operator==(const TypeCParam&, const TypeCParam&) = default;
};

TypeCParam type_c_param(const Partition& p);
Partition type_c_partition(const TypeCParam& c);
/* Q(P_C) of Eq. (3.12) */
Partition type_c_image(const TypeCParam& c);

enum class InverseVia { ClosedForm, BruteForce };

/* Ob^{-1}(Q): the T(Q) cell set (two-part Q) or the exhaustive bin */
std::set<Partition> inverse_image(const Partition& q, InverseVia via);

/* all P |- n binned by Ob(P); jobs > 1 splits the stream across threads with
 * a deterministic merge
 */
std::map<Partition, std::vector<Partition>> oblak_preimage_bins(long long n, int jobs = 1);

/* Corollary 3.16 */
struct Corners {
    Partition p11, p1w, pr1, prw;  // w = u-r
    char pr1_case = '?';           // 'a', 'b' or 'c'
};

Corners corners(const Partition& q);

/* no C cells and strict A/B alternation down column one */
bool has_normal_pattern(const Partition& q);

/* largest part of P_{k,1} for k = 1..r-1; throws if not non-increasing */
std::vector<int> first_column_largest_parts(const Partition& q);

} // namespace jtab
