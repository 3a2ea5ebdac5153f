#include "jtab/boxes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jtab/poset.hpp"
#include "jtab/table.hpp"

namespace jtab {

BoxQ::BoxQ(Partition q, Key dims, BoxKind kind)
    : q_(std::move(q)), dims_(std::move(dims)), kind_(kind) {
    long long total = 1;
    for (int s : dims_.entries) {
        if (s < 1) throw std::domain_error("BoxQ: side lengths must be >= 1");
        total *= s;
    }
    cells_.resize(static_cast<size_t>(total));
}

long long BoxQ::cell_count() const { return static_cast<long long>(cells_.size()); }

size_t BoxQ::flatten(const std::vector<int>& index) const {
    if (index.size() != dims_.entries.size()) throw std::domain_error("BoxQ: index arity mismatch");
    size_t flat = 0;
    for (size_t j = 0; j < index.size(); j++) {
        if (index[j] < 1 || index[j] > dims_.entries[j]) throw std::domain_error("BoxQ: index out of box");
        flat = flat * dims_.entries[j] + (index[j] - 1);
    }
    return flat;
}

const Partition& BoxQ::at(const std::vector<int>& index) const { return cells_[flatten(index)]; }

void BoxQ::set(const std::vector<int>& index, Partition p) { cells_[flatten(index)] = std::move(p); }

std::vector<int> BoxQ::index_of(size_t c) const {
    std::vector<int> index(dims_.entries.size());
    for (size_t j = index.size(); j-- > 0;) {
        index[j] = static_cast<int>(c % dims_.entries[j]) + 1;
        c /= dims_.entries[j];
    }
    return index;
}

Partition bend_hook(int q1, const Partition& base, int t) {
    int tb = base.size();
    if (t - tb < 1) throw std::domain_error("bend_hook: too few parts requested");
    std::vector<int> parts;
    parts.reserve(t);
    parts.push_back(q1 - t + 1);
    for (int x : base.parts()) parts.push_back(x + 1);
    for (int j = 0; j < t - tb - 1; j++) parts.push_back(1);
    if (parts.size() >= 2 && parts[0] < parts[1])
        throw std::domain_error("bend_hook: hook does not fit around the base");
    return Partition(std::move(parts));
}

BoxQ dhl_box(const Partition& q) {
    if (q.empty() || !is_stable(q)) throw std::domain_error("dhl_box: Q must be stable");
    Key dims = key(q);
    BoxQ box(q, dims, BoxKind::Dhl);
    const auto& parts = q.parts();
    if (parts.size() == 1) {
        for (int i1 = 1; i1 <= dims.entries[0]; i1++)
            box.set({i1}, bend_hook(parts[0], Partition(), i1));
        return box;
    }
    Partition tail(std::vector<int>(parts.begin() + 1, parts.end()));
    BoxQ inner = dhl_box(tail);
    for (size_t c = 0; c < inner.cells().size(); c++) {
        std::vector<int> idx = inner.index_of(c);
        const Partition& base = inner.cells()[c];
        for (int i1 = 1; i1 <= dims.entries[0]; i1++) {
            std::vector<int> full{i1};
            full.insert(full.end(), idx.begin(), idx.end());
            box.set(full, bend_hook(parts[0], base, i1 + base.size()));
        }
    }
    return box;
}

namespace {
Partition prepend(std::initializer_list<int> head, const Partition& rest) {
    return Partition(head).unite(rest);
}
}

BoxQ box_two_part_lift(const Partition& q3) {
    if (q3.size() != 3 || !is_stable(q3)) throw std::domain_error("box_two_part_lift: Q must be stable with three parts");
    int q1 = q3.parts()[0], q2 = q3.parts()[1], q3p = q3.parts()[2];
    int s = q1 - q2;
    int u = q2;
    int r = q2 - q3p;
    if (s < 2 || s > 4) throw std::domain_error("box_two_part_lift: q1 - q2 must be 2, 3 or 4");

    BoxQ box(q3, key(q3), BoxKind::QInverse);
    TableQ base(u, r);
    for (int k = 1; k <= r - 1; k++)
        for (int l = 1; l <= u - r; l++)
            box.set({1, k, l}, prepend({u + s}, base.cell(k, l).partition));
    if (s == 2) return box;

    if (s == 3) {
        TableQ up1(u + 1, r + 1);  // its own r-value is r+1, rows 1..r
        for (int k = 1; k <= r - 1; k++)
            for (int l = 1; l <= u - r; l++)
                box.set({2, k, l}, prepend({u + 2}, up1.cell(k + 1, l).partition));
        return box;
    }

    /* s == 4, Prop. 5.17 */
    TableQ up2(u + 2, r + 2);  // rows 1..r+1
    for (int k = 1; k <= r - 1; k++)
        for (int l = 1; l <= u - r; l++)
            box.set({2, k, l}, prepend({u + 2}, up2.cell(k + 1, l).partition));

    for (int l = 1; l <= u - r; l++)
        box.set({3, r - 1, l}, prepend({u + 2}, up2.cell(r + 1, l).partition));
    if (r == 2) return box;

    if (2 * r > u + 2) {
        for (int k = 1; k <= r - 2; k++)
            for (int l = 1; l <= u - r; l++)
                box.set({3, k, l},
                        almost_rectangular(u + 4, 2).unite(base.cell(k + 1, l).partition));
    } else {
        TableQ wide(u + 2, 4);  // T((u+2,u-2)), rows 1..3
        for (int l = 1; l <= u - r; l++)
            box.set({3, 1, l}, prepend({u - r + 4}, wide.cell(3, l).partition));
        for (int k = 2; k <= r - 2; k++) {
            box.set({3, k, u - r}, prepend({u - r + 4}, wide.cell(3, (u - r) + (k - 1)).partition));
            for (int l = 1; l <= u - r - 1; l++)
                box.set({3, k, l},
                        almost_rectangular(u + 4, 2).unite(base.cell(k + 1, l).partition));
        }
    }
    return box;
}

BruteBoxReport box_bruteforce(const Partition& q) {
    if (q.empty() || !is_stable(q)) throw std::domain_error("box_bruteforce: Q must be stable");
    Key dims = key(q);
    int k = static_cast<int>(dims.entries.size());

    std::set<Partition> found = inverse_image(q, InverseVia::BruteForce);

    std::map<int, long long> found_by_parts;
    for (const auto& p : found) found_by_parts[p.size()]++;

    BoxQ box(q, dims, BoxKind::QInverse);
    std::map<int, long long> expected_by_parts;
    for (size_t c = 0; c < box.cells().size(); c++) {
        auto idx = box.index_of(c);
        int sum = 0;
        for (int i : idx) sum += i;
        expected_by_parts[sum]++;
    }

    BruteBoxReport report{std::move(box), false, false, false, found_by_parts, expected_by_parts};
    long long prod = 1;
    for (int s : dims.entries) prod *= s;
    report.total_matches = static_cast<long long>(found.size()) == prod;
    report.diagonal_counts_match = found_by_parts == expected_by_parts;
    if (!report.diagonal_counts_match) return report;  // counterexample candidate, box left empty

    /* try the closed-form arrangements first */
    if (k == 2) {
        TableQ t = build_table(q);
        std::set<Partition> closed;
        for (const auto& cell : t.cells()) closed.insert(cell.partition);
        if (closed == found) {
            for (const auto& cell : t.cells()) report.box.set({cell.k, cell.l}, cell.partition);
            report.canonical = true;
            return report;
        }
    } else if (k == 1) {
        for (int i = 1; i <= dims.entries[0]; i++)
            report.box.set({i}, almost_rectangular(q.total(), i));
        report.canonical = true;
        return report;
    } else if (k == 3) {
        int s = q.parts()[0] - q.parts()[1];
        if (s >= 2 && s <= 4) {
            BoxQ lift = box_two_part_lift(q);
            std::set<Partition> lifted(lift.cells().begin(), lift.cells().end());
            if (lifted == found) {
                report.box = std::move(lift);
                report.canonical = true;
                return report;
            }
        }
    }

    /* no closed form: deterministic fill, descending within each diagonal */
    std::map<int, std::vector<Partition>> by_parts;
    for (const auto& p : found) by_parts[p.size()].push_back(p);
    for (auto& [m, v] : by_parts) std::sort(v.begin(), v.end(), std::greater<Partition>());
    std::map<int, size_t> used;
    for (size_t c = 0; c < report.box.cells().size(); c++) {
        auto idx = report.box.index_of(c);
        int sum = 0;
        for (int i : idx) sum += i;
        report.box.set(idx, by_parts[sum][used[sum]++]);
    }
    return report;
}

std::pair<long long, long long> partition_count_identity(long long n) {
    if (n < 1) throw std::domain_error("partition_count_identity: n must be >= 1");
    long long lhs = partition_count(n);
    long long rhs = 0;
    for (const auto& q : stable_partitions_of(n)) {
        long long prod = 1;
        for (int s : key(q).entries) prod *= s;
        rhs += prod;
    }
    return {lhs, rhs};
}

std::string render_floors(const BoxQ& box, bool ar_style) {
    const auto& dims = box.dims().entries;
    int k = static_cast<int>(dims.size());
    auto text = [&](const Partition& p) { return ar_style ? to_ar_string(p) : to_plain_string(p); };
    std::ostringstream os;
    if (k == 1) {
        for (int i = 1; i <= dims[0]; i++) os << (i > 1 ? "  " : "") << text(box.at({i}));
        os << '\n';
        return os.str();
    }
    int rows = dims[k - 2], cols = dims[k - 1];
    long long nfloors = 1;
    for (int j = 0; j < k - 2; j++) nfloors *= dims[j];
    for (long long f = 0; f < nfloors; f++) {
        std::vector<int> head(k - 2);
        long long rem = f;
        for (int j = k - 3; j >= 0; j--) {
            head[j] = static_cast<int>(rem % dims[j]) + 1;
            rem /= dims[j];
        }
        if (k > 2) {
            os << "floor (";
            for (size_t j = 0; j < head.size(); j++) os << (j ? "," : "") << head[j];
            os << "):\n";
        }
        std::vector<std::vector<std::string>> grid(rows, std::vector<std::string>(cols));
        std::vector<size_t> width(cols, 0);
        for (int a = 1; a <= rows; a++)
            for (int b = 1; b <= cols; b++) {
                std::vector<int> idx = head;
                idx.push_back(a);
                idx.push_back(b);
                grid[a - 1][b - 1] = text(box.at(idx));
                width[b - 1] = std::max(width[b - 1], grid[a - 1][b - 1].size());
            }
        for (int a = 0; a < rows; a++) {
            os << "  ";
            for (int b = 0; b < cols; b++) {
                os << grid[a][b];
                if (b + 1 < cols) os << std::string(width[b] - grid[a][b].size() + 2, ' ');
            }
            os << '\n';
        }
    }
    return os.str();
}

} // namespace jtab
