#include "jtab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "jtab/boxes.hpp"
#include "jtab/jordanlab.hpp"
#include "jtab/poset.hpp"
#include "jtab/rng.hpp"
#include "jtab/table.hpp"

namespace jtab {

namespace {
std::string pstr(const Partition& p) { return to_plain_string(p); }
}

SuiteResult verify_table_completeness(int max_n, int jobs) {
    SuiteResult res;
    res.name = "table-completeness";
    long long disjunct2_only = 0;
    for (int n = 3; n <= max_n; n++) {
        auto bins = oblak_preimage_bins(n, jobs);
        for (const auto& q : stable_partitions_of(n)) {
            if (q.size() != 2) continue;
            int u = q.parts()[0];
            int r = u - q.parts()[1];
            TableQ t(u, r);
            std::set<Partition> closed;
            for (const auto& cell : t.cells()) {
                if (cell.partition.size() != cell.k + cell.l)
                    res.fail("cell parts count off at " + pstr(q));
                closed.insert(cell.partition);
                auto ts = type_of(cell.partition, q);
                if (ts.b_disjunct == 2) disjunct2_only++;
            }
            if (static_cast<long long>(closed.size()) !=
                static_cast<long long>(r - 1) * (u - r))
                res.fail("|T(Q)| != (r-1)(u-r) for Q = " + pstr(q));
            auto it = bins.find(q);
            std::set<Partition> brute;
            if (it != bins.end()) brute.insert(it->second.begin(), it->second.end());
            if (closed != brute) res.fail("T(Q) != Ob^{-1}(Q) for Q = " + pstr(q));
            res.checks++;
        }
    }
    std::ostringstream note;
    note << "type-B middle-chain disjunct fired alone on " << disjunct2_only << " cells";
    res.notes.push_back(note.str());
    return res;
}

SuiteResult verify_lemma38(int max_u) {
    SuiteResult res;
    res.name = "lemma38";
    for (int u = 4; u <= max_u; u++)
        for (int r = 3; r < u; r++) {
            int tm = t_max(u, r);
            int prev_kt = 0, prev_km = 0;
            for (int t = 0; t <= tm; t++) {
                auto inv = table_invariants(u, r, t);
                if (inv.d < 0 || inv.d >= t + 1) res.fail("d out of [0,t+1)");
                if (inv.k - t < prev_km) res.fail("k_t - t not weakly increasing");
                if (2 * (inv.k - t) > r + 2) res.fail("k_t - t exceeds ceil((r+1)/2)");
                if (inv.k <= prev_kt) res.fail("k_t not strictly increasing");
                if (inv.k < 2 || inv.k > r - 1) res.fail("k_t outside [2, r-1]");
                prev_kt = inv.k;
                prev_km = inv.k - t;
                res.checks++;
            }
            if (tm >= 0) {
                int ktm = table_invariants(u, r, tm).k;
                int want = u - r <= (r - 1) / 2 ? u - (r - 1) / 2 - 1
                           : r % 2 == 1        ? r - 1
                                               : r - 2;
                if (ktm != want) {
                    std::ostringstream os;
                    os << "k_{t_max} closed form fails at u=" << u << " r=" << r;
                    res.fail(os.str());
                }
                res.checks++;
            }
        }
    return res;
}

SuiteResult verify_pn_identity(int max_n) {
    SuiteResult res;
    res.name = "pn-identity";
    for (int n = 1; n <= max_n; n++) {
        auto [lhs, rhs] = partition_count_identity(n);
        if (lhs != rhs) {
            std::ostringstream os;
            os << "p(" << n << ") = " << lhs << " but sum of key products = " << rhs;
            res.fail(os.str());
        }
        res.checks++;
    }
    return res;
}

SuiteResult verify_dhl_boxes(int max_n) {
    SuiteResult res;
    res.name = "dhl";
    for (int n = 1; n <= max_n; n++)
        for (const auto& q : stable_partitions_of(n)) {
            BoxQ box = dhl_box(q);
            long long prod = 1;
            for (int s : key(q).entries) prod *= s;
            if (box.cell_count() != prod) res.fail("|DHL(Q)| != prod S_Q at Q = " + pstr(q));
            std::set<Partition> distinct;
            for (size_t c = 0; c < box.cells().size(); c++) {
                const Partition& p = box.cells()[c];
                auto idx = box.index_of(c);
                int sum = 0;
                for (int i : idx) sum += i;
                if (dhl(p) != q) res.fail("dhl(cell) != Q at Q = " + pstr(q));
                if (p.size() != sum) res.fail("cell parts != coordinate sum at Q = " + pstr(q));
                distinct.insert(p);
            }
            if (static_cast<long long>(distinct.size()) != box.cell_count())
                res.fail("DHL cells not distinct at Q = " + pstr(q));
            res.checks++;
        }
    return res;
}

SuiteResult verify_box_counts(int max_n, int jobs) {
    SuiteResult res;
    res.name = "box-counts";
    for (int n = 6; n <= max_n; n++) {
        auto bins = oblak_preimage_bins(n, jobs);
        for (const auto& q : stable_partitions_of(n)) {
            if (q.size() != 3) continue;
            long long prod = 1;
            for (int s : key(q).entries) prod *= s;
            auto it = bins.find(q);
            long long got = it == bins.end() ? 0 : static_cast<long long>(it->second.size());
            if (got != prod) res.fail("|Ob^{-1}(Q)| != prod S_Q for Q = " + pstr(q));
            int spread = q.parts()[0] - q.parts()[1];
            if (spread >= 2 && spread <= 4) {
                BoxQ lift = box_two_part_lift(q);
                std::set<Partition> ls(lift.cells().begin(), lift.cells().end());
                std::set<Partition> bs(it->second.begin(), it->second.end());
                if (ls != bs) res.fail("lift != brute force for Q = " + pstr(q));
            }
            res.checks++;
        }
    }
    return res;
}

SuiteResult verify_mc_oblak(int max_n, int trials, uint64_t seed, int jobs) {
    SuiteResult res;
    res.name = "mc-oblak";
    std::vector<Partition> all;
    for (int n = 1; n <= max_n; n++) {
        auto some = partitions_of(n);
        all.insert(all.end(), some.begin(), some.end());
    }
    size_t count = all.size();
    std::vector<std::string> problems(count);
    if (jobs < 1) jobs = 1;
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; w++)
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count; i += static_cast<size_t>(jobs)) {
                McImage m = mc_image(all[i], trials, seed);
                if (!m.dominance_ok)
                    problems[i] = "incomparable sample set for P = " + pstr(all[i]);
                else if (m.type != oblak(all[i]))
                    problems[i] = "mc image " + pstr(m.type) + " != Ob(P) for P = " + pstr(all[i]);
            }
        });
    for (auto& th : pool) th.join();
    for (const auto& msg : problems) {
        res.checks++;
        if (!msg.empty()) res.fail(msg);
    }
    return res;
}

SuiteResult verify_scaling(const std::vector<Partition>& bases, int trials, uint64_t seed) {
    SuiteResult res;
    res.name = "scaling";
    for (const auto& base : bases) {
        ScalingReport rep = scaling_invariance_check(base, trials, seed);
        if (rep.passes != rep.trials) {
            std::ostringstream os;
            os << "scaling broke Jordan type on " << (rep.trials - rep.passes) << "/"
               << rep.trials << " pairs for base " << pstr(base);
            res.fail(os.str());
        }
        res.checks += trials;
    }
    return res;
}

SuiteResult verify_loci_52(int trials, uint64_t seed) {
    SuiteResult res;
    res.name = "loci-52";
    Partition q({5, 2});
    for (int k = 1; k <= 2; k++)
        for (int l = 1; l <= 2; l++) {
            LocusReport rep = locus_sample_check(locus_spec(q, k, l), trials, seed);
            if (!rep.matches_table || rep.modal_count * 100 < trials * 99) {
                std::ostringstream os;
                os << "cell (" << k << "," << l << ") modal type " << pstr(rep.modal) << " ("
                   << rep.modal_count << "/" << trials << ")";
                res.fail(os.str());
            }
            res.checks += trials;
        }
    /* Z(P_{1,2}) meet Z(P_{2,1}) = Z((3,3,1)), Eq. (4.25) */
    UBStructure ub(q);
    SampleConstraints cons;
    cons.zero_coords = {ub.index_a(1), ub.index_b(1)};
    cons.nonzero_coords = {ub.index_g(1), ub.index_gp(1)};
    LocusReport rep = sample_jordan_types(ub, cons, trials, seed);
    if (rep.failed_trials != 0 || rep.modal != Partition({3, 3, 1}) || rep.modal_count != trials)
        res.fail("intersection locus did not give (3,3,1) on every sample");
    res.checks += trials;
    return res;
}

SuiteResult verify_dimension_check(int count, uint64_t seed) {
    SuiteResult res;
    res.name = "dimension";
    auto rng = trial_rng(seed, 99);
    for (int i = 0; i < count; i++) {
        int u = 3 + static_cast<int>(uniform_below(rng, 38));
        int r = 2 + static_cast<int>(uniform_below(rng, u - 2));
        UBSample s = sample_UB(Partition({u, u - r}), seed, i);
        if (s.structure.dim() != u + 3 * (u - r) - 2) {
            std::ostringstream os;
            os << "dim U_B wrong for (u,r) = (" << u << "," << r << ")";
            res.fail(os.str());
        }
        res.checks++;
    }
    return res;
}

SuiteResult report_bruhat_column(int max_n) {
    SuiteResult res;
    res.name = "bruhat-column";
    res.conjecture = true;
    for (int n = 3; n <= max_n; n++)
        for (const auto& q : stable_partitions_of(n)) {
            if (q.size() != 2) continue;
            TableQ t = build_table(q);
            if (t.r() < 3) continue;
            for (int k = 1; k <= t.rows() - 1; k++) {
                if (!bruhat_leq(t.cell(k + 1, 1).partition, t.cell(k, 1).partition)) {
                    std::ostringstream os;
                    os << "column-1 Bruhat drop fails at Q = " << pstr(q) << ", k = " << k;
                    res.fail(os.str());
                }
                res.checks++;
            }
        }
    return res;
}

SuiteResult report_box_4part(int max_n, int jobs) {
    SuiteResult res;
    res.name = "box-4part";
    res.conjecture = true;
    for (int n = 10; n <= max_n; n++) {
        bool any = false;
        for (const auto& q : stable_partitions_of(n))
            if (q.size() == 4) any = true;
        if (!any) continue;
        auto bins = oblak_preimage_bins(n, jobs);
        for (const auto& q : stable_partitions_of(n)) {
            if (q.size() != 4) continue;
            long long prod = 1;
            for (int s : key(q).entries) prod *= s;
            auto it = bins.find(q);
            long long got = it == bins.end() ? 0 : static_cast<long long>(it->second.size());
            if (got != prod) {
                std::ostringstream os;
                os << "4-part count " << got << " != " << prod << " for Q = " << pstr(q);
                res.fail(os.str());
            }
            res.checks++;
        }
    }
    return res;
}

SuiteResult report_ob_parts(int max_n) {
    SuiteResult res;
    res.name = "ob-parts";
    res.conjecture = true;
    for (int n = 16; n <= max_n; n++) {
        PartitionStream ps(n);
        Partition p;
        while (ps.next(p)) {
            if (r_p(p) < 4) continue;  // theorem ground below 4, asserted elsewhere
            if (oblak(p).size() != r_p(p)) res.fail("parts(Ob(P)) != r_P at P = " + pstr(p));
            res.checks++;
        }
    }
    return res;
}

SuiteResult report_loci_beyond(int trials, uint64_t seed) {
    SuiteResult res;
    res.name = "loci-beyond";
    res.conjecture = true;
    for (const char* qs : {"(6,3)", "(7,4)", "(9,5)"}) {
        Partition q = parse_partition(qs);
        TableQ t = build_table(q);
        for (int k = 1; k <= t.rows(); k++)
            for (int l = 1; l < t.cols(); l++) {  // within Conjecture 4.17's range
                LocusReport rep = locus_sample_check(locus_spec(q, k, l), trials, seed);
                if (!rep.matches_table) {
                    std::ostringstream os;
                    os << "modal type off the table at Q = " << qs << " cell (" << k << "," << l
                       << "): " << pstr(rep.modal);
                    res.fail(os.str());
                }
                res.checks++;
            }
    }
    return res;
}

} // namespace jtab
