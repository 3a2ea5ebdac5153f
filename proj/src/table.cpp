#include "jtab/table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "jtab/poset.hpp"

namespace jtab {

namespace {
int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_two_part_stable(const Partition& q) {
    if (q.size() != 2 || !is_stable(q))
        throw std::domain_error("expected a stable two-part partition (u,u-r) with u > r >= 2");
}
}

int t_max(int u, int r) {
    if (u <= r || r < 2) throw std::domain_error("t_max: need u > r >= 2");
    if (r == 2) return -1;  // only the k_0 = r sentinel exists
    return std::min(u - r, (r - 1) / 2) - 1;
}

TableInvariants table_invariants(int u, int r, int t) {
    if (u <= r || r < 2) throw std::domain_error("table_invariants: need u > r >= 2");
    int bound = std::min(u - r, (r - 1) / 2);
    if (t < 0 || t > bound) throw std::domain_error("table_invariants: t out of range");
    TableInvariants inv;
    inv.t = t;
    if (t == bound) {  // Notation 3.10 sentinel
        inv.q = ceil_div(u - r, t + 1);
        inv.d = (t + 1) * inv.q - (u - r);
        inv.k = r;
        inv.c = 0;
        return inv;
    }
    inv.q = ceil_div(u - r, t + 1);
    inv.d = (t + 1) * inv.q - (u - r);
    inv.k = t + ceil_div(u - t + inv.d, inv.q + 1);
    inv.c = inv.d == 0 ? 0 : ceil_div(u - 2 * (t + 1) + inv.d, inv.q) - (inv.k - t);
    return inv;
}

int k_of(int u, int r, int t) {
    if (t < 0) return 0;
    return table_invariants(u, r, t).k;
}

char to_char(CellClass c) {
    switch (c) {
        case CellClass::A: return 'A';
        case CellClass::B: return 'B';
        case CellClass::C: return 'C';
    }
    return '?';
}

std::string TableCell::ar_text() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < blocks.size(); i++) {
        if (i) os << ',';
        if (blocks[i].second == 1)
            os << blocks[i].first;
        else
            os << '[' << blocks[i].first << "]^" << blocks[i].second;
    }
    os << ')';
    return os.str();
}

std::pair<CellClass, int> classify_cell(int u, int r, int k, int l) {
    if (k < 1 || k > r - 1 || l < 1 || l > u - r)
        throw std::domain_error("classify_cell: cell outside the (r-1) x (u-r) grid");
    int bound = std::min(u - r, (r - 1) / 2);
    /* locate k among the hook rows: k_{t1-1} < k <= k_{t1} */
    int t1 = 0;
    while (k_of(u, r, t1) < k) t1++;  // terminates: k_of(.,., bound) = r > k
    bool on_hook_row = (t1 < bound) && (k == k_of(u, r, t1));
    if (l <= u - r - t1) {
        if (!on_hook_row) return {CellClass::A, t1};
        int c = table_invariants(u, r, t1).c;
        return {l <= c ? CellClass::C : CellClass::B, t1};
    }
    /* vertical arm of an earlier hook: l = u - r - T */
    int T = u - r - l;
    TableInvariants inv = table_invariants(u, r, T);
    return {l <= inv.c - (k - inv.k) ? CellClass::C : CellClass::B, T};
}

namespace {
TableCell make_cell(int u, int r, int k, int l) {
    auto [cls, t] = classify_cell(u, r, k, l);
    TableCell cell;
    cell.k = k;
    cell.l = l;
    cell.cls = cls;
    cell.t = t;
    switch (cls) {
        case CellClass::A:
            cell.blocks = {{u, k - t}, {u - r, t + l}};
            break;
        case CellClass::B:
            cell.blocks = {{u - r + 2 * (t + 1), t + 1}, {u - 2 * (t + 1), k - t + l - 1}};
            break;
        case CellClass::C: {
            TableInvariants inv = table_invariants(u, r, t);
            cell.blocks = {{u - r + 2 * (t + 1), t + 1},
                           {u - 2 * (t + 1) - inv.d * (inv.q - 1), k - t + l - inv.d - 1},
                           {static_cast<long long>(inv.d) * (inv.q - 1), inv.d}};
            break;
        }
    }
    Partition p;
    for (auto [total, count] : cell.blocks)
        p = p.unite(almost_rectangular(total, count));
    cell.partition = p;
    return cell;
}
}

Partition table_entry(int u, int r, int k, int l) { return make_cell(u, r, k, l).partition; }

TableQ::TableQ(int u, int r) : u_(u), r_(r) {
    if (u <= r || r < 2) throw std::domain_error("TableQ: need u > r >= 2");
    cells_.reserve(static_cast<size_t>(r - 1) * (u - r));
    for (int k = 1; k <= r - 1; k++)
        for (int l = 1; l <= u - r; l++) cells_.push_back(make_cell(u, r, k, l));
}

const TableCell& TableQ::cell(int k, int l) const {
    if (k < 1 || k > rows() || l < 1 || l > cols()) throw std::domain_error("TableQ::cell: out of grid");
    return cells_[static_cast<size_t>(k - 1) * cols() + (l - 1)];
}

TableQ build_table(const Partition& q) {
    require_two_part_stable(q);
    int u = q.parts()[0];
    int r = u - q.parts()[1];
    return TableQ(u, r);
}

namespace {
/* Eq. (3.1) normalization: P = (a^{n_a},(a-1)^{n_{a-1}},b^{n_b},(b-1)^{n_{b-1}}),
 * a - b >= 2, n_a > 0, n_b > 0.  a is forced to the largest part and b to the
 * largest part below a-1.
 */
struct AbShape {
    int a, na, nam1, b, nb, nbm1;
};

AbShape ab_shape(const Partition& p) {
    auto s = p.distinct_parts();
    if (s.size() < 2 || s.size() > 4) throw std::domain_error("type_of: not a two-block partition");
    AbShape sh{};
    sh.a = s[0];
    sh.na = p.multiplicity(sh.a);
    sh.nam1 = p.multiplicity(sh.a - 1);
    size_t idx = 1 + (sh.nam1 > 0 ? 1 : 0);
    if (idx >= s.size()) throw std::domain_error("type_of: partition is almost rectangular");
    sh.b = s[idx];
    sh.nb = p.multiplicity(sh.b);
    sh.nbm1 = p.multiplicity(sh.b - 1);
    if (sh.a - sh.b < 2) throw std::domain_error("type_of: blocks not separated by two");
    size_t used = 2 + (sh.nam1 > 0 ? 1 : 0) + (sh.nbm1 > 0 ? 1 : 0);
    if (used != s.size()) throw std::domain_error("type_of: parts escape the two blocks");
    return sh;
}
}

TypeSet type_of(const Partition& p, const Partition& q) {
    require_two_part_stable(q);
    if (oblak(p) != q) throw std::domain_error("type_of: Ob(P) != Q");
    AbShape sh = ab_shape(p);
    long long u = q.parts()[0];
    TypeSet out;
    out.a = u == static_cast<long long>(sh.a) * sh.na + static_cast<long long>(sh.a - 1) * sh.nam1;
    bool b1 = u == 2LL * sh.na + 2LL * sh.nam1 + static_cast<long long>(sh.b) * sh.nb +
                       static_cast<long long>(sh.b - 1) * sh.nbm1;
    bool b2 = sh.b == sh.a - 2 && sh.nbm1 == 0 &&
              u == 2LL * sh.na + static_cast<long long>(sh.a - 1) * sh.nam1 +
                       static_cast<long long>(sh.b) * sh.nb;
    out.b = b1 || b2;
    out.b_disjunct = (b1 ? 1 : 0) | (b2 ? 2 : 0);
    out.c = sh.b == sh.a - 2 && sh.na > 0 && sh.nam1 > 0 && sh.nb > 0 && sh.nbm1 > 0 &&
            u == 2LL * sh.na + static_cast<long long>(sh.a - 1) * sh.nam1 +
                     static_cast<long long>(sh.b) * sh.nb;
    return out;
}

Partition type_c_partition(const TypeCParam& c) {
    if (c.c1 < 1 || c.c2 < 1 || c.s1 < 0 || c.s2 < 0 || c.a < 4)
        throw std::domain_error("type_c_partition: parameters violate Eq. (2.2) bounds");
    return Partition::from_runs(
        {{c.a, c.c1}, {c.a - 1, c.c2 + c.s2}, {c.a - 2, c.c1 + c.s1}, {c.a - 3, c.c2}});
}

Partition type_c_image(const TypeCParam& c) {
    long long u = static_cast<long long>(c.c2 + c.s2) * (c.a - 1) +
                  static_cast<long long>(c.c1 + c.s1) * (c.a - 2) + 2LL * c.c1;
    long long w = static_cast<long long>(c.c1) * (c.a - 2) + static_cast<long long>(c.c2) * (c.a - 3);
    return Partition({static_cast<int>(u), static_cast<int>(w)});
}

TypeCParam type_c_param(const Partition& p) {
    if (p.empty()) throw std::domain_error("type_c_param: empty partition");
    TypeCParam c;
    c.a = p.largest();
    c.c1 = p.multiplicity(c.a);
    c.c2 = p.multiplicity(c.a - 3);
    c.s2 = p.multiplicity(c.a - 1) - c.c2;
    c.s1 = p.multiplicity(c.a - 2) - c.c1;
    if (c.a < 4 || c.c1 < 1 || c.c2 < 1 || c.s1 < 0 || c.s2 < 0 || type_c_partition(c) != p)
        throw std::domain_error("type_c_param: partition is not of type C");
    return c;
}

std::set<Partition> inverse_image(const Partition& q, InverseVia via) {
    if (via == InverseVia::ClosedForm) {
        TableQ t = build_table(q);
        std::set<Partition> out;
        for (const auto& cell : t.cells()) out.insert(cell.partition);
        return out;
    }
    if (q.empty() || !is_stable(q)) throw std::domain_error("inverse_image: Q must be stable");
    std::set<Partition> out;
    PartitionStream ps(q.total());
    Partition p;
    while (ps.next(p))
        if (oblak(p) == q) out.insert(p);
    return out;
}

std::map<Partition, std::vector<Partition>> oblak_preimage_bins(long long n, int jobs) {
    std::vector<Partition> all = partitions_of(n);
    if (jobs < 1) jobs = 1;
    size_t count = all.size();
    std::vector<Partition> images(count);
    if (jobs == 1) {
        for (size_t i = 0; i < count; i++) images[i] = oblak(all[i]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; w++)
            pool.emplace_back([&, w] {
                for (size_t i = w; i < count; i += jobs) images[i] = oblak(all[i]);
            });
        for (auto& th : pool) th.join();
    }
    std::map<Partition, std::vector<Partition>> bins;
    for (size_t i = 0; i < count; i++) bins[images[i]].push_back(all[i]);
    return bins;
}

Corners corners(const Partition& q) {
    require_two_part_stable(q);
    int u = q.parts()[0];
    int r = u - q.parts()[1];
    if (r < 3) throw std::domain_error("corners: need r >= 3");
    int w = u - r;
    Corners out;
    out.p11 = table_entry(u, r, 1, 1);
    out.p1w = table_entry(u, r, 1, w);
    out.pr1 = table_entry(u, r, r - 1, 1);
    out.prw = table_entry(u, r, r - 1, w);
    if (w <= (r - 1) / 2)
        out.pr1_case = 'a';
    else if (r % 2 == 1)
        out.pr1_case = 'b';
    else
        out.pr1_case = 'c';  // r even, w >= r/2 (the u-r = r/2 boundary included)
    return out;
}

bool has_normal_pattern(const Partition& q) {
    TableQ t = build_table(q);
    for (const auto& cell : t.cells())
        if (cell.cls == CellClass::C) return false;
    for (int k = 1; k <= t.rows(); k++) {
        CellClass expect = (k % 2 == 1) ? CellClass::A : CellClass::B;
        if (t.cell(k, 1).cls != expect) return false;
    }
    return true;
}

std::vector<int> first_column_largest_parts(const Partition& q) {
    TableQ t = build_table(q);
    std::vector<int> out;
    for (int k = 1; k <= t.rows(); k++) out.push_back(t.cell(k, 1).partition.largest());
    for (size_t i = 0; i + 1 < out.size(); i++)
        if (out[i] < out[i + 1])
            throw std::domain_error("first_column_largest_parts: sequence increased (Lemma 3.19 violated)");
    return out;
}

} // namespace jtab
