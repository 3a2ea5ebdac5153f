#include "jtab/jordanlab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jtab/rng.hpp"

namespace jtab {

namespace {
void require_modulus_above(long long n) {
    if (static_cast<long long>(Fp::modulus()) <= n)
        throw std::domain_error("prime modulus must exceed the matrix dimension");
}
}

MatFp jordan_matrix(const Partition& p) {
    require_modulus_above(p.total());
    int n = static_cast<int>(p.total());
    MatFp m = MatFp::Zero(n, n);
    int off = 0;
    for (int len : p.parts()) {
        for (int c = 0; c + 1 < len; c++) m(off + c, off + c + 1) = Fp(1);
        off += len;
    }
    return m;
}

Partition jordan_type(const MatFp& a) {
    int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw std::domain_error("jordan_type: matrix not square");
    if (n == 0) return Partition();
    std::vector<int> ranks{n};  // ranks[i] = rank A^i
    MatFp power = a;
    while (true) {
        int r = rank_gfp(power);
        if (r >= ranks.back())
            throw std::domain_error("jordan_type: matrix is not nilpotent");
        ranks.push_back(r);
        if (r == 0) break;
        power = power * a;
    }
    /* number of parts >= i equals corank A^i - corank A^{i-1} = r_{i-1} - r_i */
    int maxpart = static_cast<int>(ranks.size()) - 1;
    std::vector<std::pair<int, int>> runs;
    for (int v = maxpart; v >= 1; v--) {
        int ge_v = ranks[v - 1] - ranks[v];
        int ge_v1 = v < maxpart ? ranks[v] - ranks[v + 1] : 0;
        if (ge_v - ge_v1 > 0) runs.emplace_back(v, ge_v - ge_v1);
    }
    return Partition::from_runs(runs);
}

std::vector<long long> rank_sequence(const Partition& p) {
    long long n = p.total();
    std::vector<long long> out;
    for (long long k = 1; k < n; k++) {
        long long r = 0;
        for (int part : p.parts())
            if (part >= k) r += part - k;
        out.push_back(r);
    }
    return out;
}

UBStructure::UBStructure(const Partition& base) : base_(base) {
    if (base.empty()) throw std::domain_error("UBStructure: empty base partition");
    n_ = static_cast<int>(base.total());
    int off = 0;
    for (auto [len, count] : base.runs())
        for (int k = 1; k <= count; k++) {
            rows_.push_back({len, k, off});
            off += len;
        }
    int nrows = static_cast<int>(rows_.size());
    for (int s = 0; s < nrows; s++)
        for (int d = 0; d < nrows; d++) {
            int i = rows_[s].len, j = rows_[d].len;
            int lo = std::max(1, j - i + 1);
            for (int u = lo; u <= j; u++) {
                if (u == 1 && i == j && rows_[d].copy <= rows_[s].copy)
                    continue;  // strict upper triangularity of pi_i
                lookup_[{s, d, u}] = static_cast<int>(coords_.size());
                coords_.push_back({s, d, u});
            }
        }
}

int UBStructure::coord_weight(int c) const {
    const UBCoord& co = coords_[c];
    return 2 * co.ustart - rows_[co.dst].len + rows_[co.src].len - 2;
}

bool UBStructure::two_part() const {
    return rows_.size() == 2 && rows_[0].len != rows_[1].len;
}

int UBStructure::find(int src, int dst, int ustart) const {
    auto it = lookup_.find({src, dst, ustart});
    if (it == lookup_.end()) throw std::domain_error("UBStructure: no such coordinate");
    return it->second;
}

int UBStructure::index_a(int m) const {
    if (!two_part()) throw std::domain_error("labeled coordinates need a two-part base");
    return find(0, 0, m + 1);
}

int UBStructure::index_b(int m) const {
    if (!two_part()) throw std::domain_error("labeled coordinates need a two-part base");
    return find(1, 1, m + 1);
}

int UBStructure::index_g(int j) const {
    if (!two_part()) throw std::domain_error("labeled coordinates need a two-part base");
    int r = rows_[0].len - rows_[1].len;
    return find(1, 0, r + j);
}

int UBStructure::index_gp(int j) const {
    if (!two_part()) throw std::domain_error("labeled coordinates need a two-part base");
    return find(0, 1, j);
}

std::string UBStructure::coord_label(int c) const {
    const UBCoord& co = coords_[c];
    std::ostringstream os;
    if (two_part()) {
        int r = rows_[0].len - rows_[1].len;
        if (co.src == 0 && co.dst == 0) return (os << "a_" << co.ustart - 1, os.str());
        if (co.src == 1 && co.dst == 1) return (os << "b_" << co.ustart - 1, os.str());
        if (co.src == 1 && co.dst == 0) return (os << "g_" << co.ustart - r, os.str());
        return (os << "g'_" << co.ustart, os.str());
    }
    os << "h[(" << rows_[co.src].len << ',' << rows_[co.src].copy << ")->(" << rows_[co.dst].len
       << ',' << rows_[co.dst].copy << ")]_" << co.ustart;
    return os.str();
}

MatFp UBStructure::realize(const std::vector<Fp>& values) const {
    if (values.size() != coords_.size()) throw std::domain_error("realize: wrong value count");
    MatFp m = MatFp::Zero(n_, n_);
    for (size_t c = 0; c < coords_.size(); c++) {
        if (values[c].is_zero()) continue;
        const UBCoord& co = coords_[c];
        int i = rows_[co.src].len, j = rows_[co.dst].len;
        int offs = rows_[co.src].offset, offd = rows_[co.dst].offset;
        /* A(m+1, i, k) has component values[c] on (ustart+m, j, l) */
        for (int sh = 0; sh < i && co.ustart + sh <= j; sh++)
            m(offd + j - (co.ustart + sh), offs + i - 1 - sh) = values[c];
    }
    return m;
}

UBSample sample_UB(const Partition& base, uint64_t seed, uint64_t trial) {
    require_modulus_above(base.total());
    UBStructure ub(base);
    auto rng = trial_rng(seed, trial);
    std::vector<Fp> values(ub.dim());
    for (auto& v : values) v = Fp(static_cast<long long>(uniform_below(rng, Fp::modulus())));
    MatFp m = ub.realize(values);
    return {std::move(ub), std::move(values), std::move(m)};
}

McImage mc_image(const Partition& p, int trials, uint64_t seed) {
    if (trials < 1) throw std::domain_error("mc_image: trials must be >= 1");
    require_modulus_above(p.total());
    McImage out;
    UBStructure ub(p);
    for (int t = 0; t < trials; t++) {
        auto rng = trial_rng(seed, t);
        std::vector<Fp> values(ub.dim());
        for (auto& v : values) v = Fp(static_cast<long long>(uniform_below(rng, Fp::modulus())));
        out.histogram[jordan_type(ub.realize(values))]++;
    }
    /* Bruhat-maximum over the sampled types */
    Partition best;
    bool found = false;
    for (const auto& [type, count] : out.histogram) {
        bool dominates_all = true;
        for (const auto& [other, c2] : out.histogram)
            if (!bruhat_leq(other, type)) {
                dominates_all = false;
                break;
            }
        if (dominates_all) {
            best = type;
            found = true;
        }
    }
    if (!found) {
        out.dominance_ok = false;
        best = out.histogram.rbegin()->first;  // deterministic fallback
    }
    out.type = best;
    return out;
}

ScalingReport scaling_invariance_check(const Partition& base, int trials, uint64_t seed) {
    require_modulus_above(base.total());
    UBStructure ub(base);
    ScalingReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; t++) {
        auto rng = trial_rng(seed, t);
        std::vector<Fp> values(ub.dim());
        for (auto& v : values) v = Fp(static_cast<long long>(uniform_below(rng, Fp::modulus())));
        Fp lambda = Fp(1 + static_cast<long long>(uniform_below(rng, Fp::modulus() - 1)));
        std::vector<Fp> scaled(values);
        for (int c = 0; c < ub.dim(); c++) scaled[c] = values[c] * lambda.pow(ub.coord_weight(c));
        if (jordan_type(ub.realize(values)) == jordan_type(ub.realize(scaled))) rep.passes++;
    }
    return rep;
}

std::vector<std::string> LocusSpec::generator_names() const {
    std::vector<std::string> names;
    for (int m = 1; m <= mu; m++) names.push_back("a_" + std::to_string(m));
    for (int m = 1; m <= nu; m++) names.push_back("b_" + std::to_string(m));
    for (int j = 1; j <= s; j++)
        names.push_back("X_" + std::to_string(j) + "(" + std::to_string(k1) + "," +
                        std::to_string(k2) + ")");
    return names;
}

LocusSpec locus_spec(const Partition& q, int k, int l) {
    TableQ table = build_table(q);
    int u = table.u(), r = table.r();
    const TableCell& cell = table.cell(k, l);
    LocusSpec spec;
    spec.q = q;
    spec.k = k;
    spec.l = l;
    spec.cls = cell.cls;
    spec.t = cell.t;
    spec.beyond_conjecture = (l == u - r) && (u - r >= 2);
    int t = cell.t;
    if (k + l <= r) {
        if (cell.cls == CellClass::A) {
            spec.mu = k - t - 1;
            spec.nu = t + l - 1;
        } else {
            spec.mu = k + l - t - 2;
            spec.nu = t;
        }
    } else {
        spec.s = k + l - r;
        if (cell.cls == CellClass::A) {
            spec.k1 = k - t - 1;
            spec.k2 = t + (r - k) - 1;
        } else {
            spec.k1 = r - t - 2;
            spec.k2 = t;
        }
        spec.mu = spec.k1;
        spec.nu = spec.k2;
        if (spec.k1 + spec.s > u - 1 || spec.k2 + spec.s > u - r - 1)
            throw std::domain_error("locus_spec: generator indices leave U_B (unsupported cell)");
    }
    if (spec.mu > u - 1 || spec.nu > u - r - 1)
        throw std::domain_error("locus_spec: generator indices leave U_B (unsupported cell)");
    return spec;
}

LocusReport sample_jordan_types(const UBStructure& ub, const SampleConstraints& cons, int trials,
                                uint64_t seed) {
    require_modulus_above(ub.base().total());
    LocusReport rep;
    rep.trials = trials;
    uint32_t p = Fp::modulus();
    for (int t = 0; t < trials; t++) {
        auto rng = trial_rng(seed, t);
        bool ok = false;
        std::vector<Fp> values(ub.dim());
        for (int attempt = 0; attempt < 32 && !ok; attempt++) {
            for (auto& v : values) v = Fp(static_cast<long long>(uniform_below(rng, p)));
            for (int c : cons.zero_coords) values[c] = Fp(0);
            ok = true;
            if (cons.s > 0) {
                Fp a1 = values[ub.index_a(cons.k1 + 1)];
                Fp g1 = values[ub.index_g(1)];
                if (!a1.is_zero()) {
                    /* X_j = sum_v a_{k1+v} b_{k2+j+1-v} - sum_v g_v g'_{j+1-v}; solve for b_{k2+j} */
                    for (int j = 1; j <= cons.s; j++) {
                        Fp rest(0);
                        for (int v = 2; v <= j; v++)
                            rest += values[ub.index_a(cons.k1 + v)] *
                                    values[ub.index_b(cons.k2 + j + 1 - v)];
                        for (int v = 1; v <= j; v++)
                            rest -= values[ub.index_g(v)] * values[ub.index_gp(j + 1 - v)];
                        values[ub.index_b(cons.k2 + j)] = -rest / a1;
                    }
                } else if (!g1.is_zero()) {
                    for (int j = 1; j <= cons.s; j++) {
                        Fp rest(0);
                        for (int v = 1; v <= j; v++)
                            rest += values[ub.index_a(cons.k1 + v)] *
                                    values[ub.index_b(cons.k2 + j + 1 - v)];
                        for (int v = 2; v <= j; v++)
                            rest -= values[ub.index_g(v)] * values[ub.index_gp(j + 1 - v)];
                        values[ub.index_gp(j)] = rest / g1;
                    }
                } else {
                    ok = false;
                    continue;
                }
            }
            for (int c : cons.nonzero_coords)
                if (values[c].is_zero()) {
                    ok = false;
                    break;
                }
        }
        if (!ok) {
            rep.failed_trials++;
            continue;
        }
        rep.histogram[jordan_type(ub.realize(values))]++;
    }
    for (const auto& [type, count] : rep.histogram)
        if (count > rep.modal_count) {
            rep.modal = type;
            rep.modal_count = count;
        }
    return rep;
}

LocusReport locus_sample_check(const LocusSpec& spec, int trials, uint64_t seed) {
    UBStructure ub(spec.q);
    SampleConstraints cons;
    for (int m = 1; m <= spec.mu; m++) cons.zero_coords.push_back(ub.index_a(m));
    for (int m = 1; m <= spec.nu; m++) cons.zero_coords.push_back(ub.index_b(m));
    cons.s = spec.s;
    cons.k1 = spec.k1;
    cons.k2 = spec.k2;
    LocusReport rep = sample_jordan_types(ub, cons, trials, seed);
    int u = spec.q.parts()[0];
    int r = u - spec.q.parts()[1];
    rep.matches_table = rep.modal_count > 0 && rep.modal == table_entry(u, r, spec.k, spec.l);
    return rep;
}

} // namespace jtab
