/* Acceptance suite: one pass/fail line per criterion, exit code = number of
 * failed criteria.  Conjecture-level observations print as REPORT lines and
 * never gate.
 */

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jtab/boxes.hpp"
#include "jtab/gfp.hpp"
#include "jtab/jordanlab.hpp"
#include "jtab/partition.hpp"
#include "jtab/poset.hpp"
#include "jtab/table.hpp"
#include "jtab/verify.hpp"

using namespace jtab;

namespace {

int failures = 0;

void line(int criterion, bool pass, const std::string& what, double secs) {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << "  ["
       << static_cast<long long>(secs * 1000) << " ms]";
    std::cout << os.str() << '\n';
    if (!pass) failures++;
}

template <typename F>
void run(int criterion, const std::string& what, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string extra;
    try {
        pass = f(extra);
    } catch (const std::exception& e) {
        extra = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line(criterion, pass, what + (extra.empty() ? "" : " -- " + extra), secs);
}

bool suite_ok(const SuiteResult& res, std::string& extra) {
    std::ostringstream os;
    os << res.checks << " checks";
    for (size_t i = 0; i < res.failures.size() && i < 3; i++) os << "; " << res.failures[i];
    extra = os.str();
    return res.pass;
}

/* ---- golden tables, transcribed from the published displays ----
 *
 * Two display glitches are corrected (both adjudicated by the brute-force
 * completeness sweep of criterion 1, which covers every one of these Q):
 *   - T((27,3)) rows 8,9, columns 1,2: the A-row entries must read
 *     ([27]^{k-1},[3]^{l+1}) so that cell (k,l) has k+l parts;
 *   - T((16,5)) cell (7,1): c_2 = 1 makes (7,1) the type-C cell
 *     ([11]^3,[9]^4,1); the printed ([11]^3,[10]^5) maps to (17,4), not (16,5).
 */

using Golden = std::vector<std::vector<std::string>>;

const Golden kT_10_7 = {
    {"(10,7)", "(10,[7]^2)", "(10,[7]^3)", "(10,[7]^4)", "(10,[7]^5)", "(10,[7]^6)", "(10,[7]^7)"},
    {"(9,[8]^2)", "(9,[8]^3)", "(9,[8]^4)", "(9,[8]^5)", "(9,[8]^6)", "(9,[8]^7)", "(9,[8]^8)"},
};

const Golden kT_10_6 = {
    {"(10,6)", "(10,[6]^2)", "(10,[6]^3)", "(10,[6]^4)", "(10,[6]^5)", "(10,[6]^6)"},
    {"(8,[8]^2)", "(8,[8]^3)", "(8,[8]^4)", "(8,[8]^5)", "(8,[8]^6)", "(8,[8]^7)"},
    {"([10]^2,[6]^2)", "([10]^2,[6]^3)", "([10]^2,[6]^4)", "([10]^2,[6]^5)", "([10]^2,[6]^6)",
     "(8,[8]^8)"},
};

const Golden kT_10_2 = {
    {"(10,2)", "(10,1,1)"},
    {"(5,5,2)", "(5,5,1,1)"},
    {"(4,3,3,2)", "(4,3,3,1,1)"},
    {"(4,2^4)", "(4,2^3,1,1)"},
    {"(3,3,2,2,1,1)", "(4,2^2,1^4)"},
    {"(3,3,2,1^4)", "(4,2,1^6)"},
    {"(3,3,1^6)", "(4,1^8)"},
};

const Golden kT_12_3 = {
    {"(12,3)", "(12,[3]^2)", "(12,[3]^3)"},
    {"([12]^2,3)", "([12]^2,[3]^2)", "([12]^2,[3]^3)"},
    {"(5,[10]^3)", "(5,[10]^4)", "(5,[10]^5)"},
    {"([12]^3,[3]^2)", "([12]^3,[3]^3)", "(5,[10]^6)"},
    {"(4,[10]^4,1)", "([7]^2,[8]^5)", "(5,[10]^7)"},
    {"([12]^4,[3]^3)", "([7]^2,[8]^6)", "(5,[10]^8)"},
    {"([9]^3,[6]^5)", "([7]^2,[8]^7)", "(5,[10]^9)"},
    {"([9]^3,[6]^6)", "([7]^2,[8]^8)", "(5,[10]^10)"},
};

const Golden kT_16_5 = {
    {"(16,5)", "(16,[5]^2)", "(16,[5]^3)", "(16,[5]^4)", "(16,[5]^5)"},
    {"([16]^2,5)", "([16]^2,[5]^2)", "([16]^2,[5]^3)", "([16]^2,[5]^4)", "([16]^2,[5]^5)"},
    {"(7,[14]^3)", "(7,[14]^4)", "(7,[14]^5)", "(7,[14]^6)", "(7,[14]^7)"},
    {"([16]^3,[5]^2)", "([16]^3,[5]^3)", "([16]^3,[5]^4)", "([16]^3,[5]^5)", "(7,[14]^8)"},
    {"([13]^3,[8]^3)", "([9]^2,[12]^5)", "([9]^2,[12]^6)", "([9]^2,[12]^7)", "(7,[14]^9)"},
    {"([16]^4,[5]^3)", "([16]^4,[5]^4)", "([16]^4,[5]^5)", "([9]^2,[12]^8)", "(7,[14]^10)"},
    {"([11]^3,[9]^4,1)", "([11]^3,[10]^6)", "([11]^3,[10]^7)", "([9]^2,[12]^9)", "(7,[14]^11)"},
    {"([16]^5,[5]^4)", "([16]^5,[5]^5)", "([11]^3,[10]^8)", "([9]^2,[12]^10)", "(7,[14]^12)"},
    {"([13]^4,[8]^6)", "([13]^4,[8]^7)", "([11]^3,[10]^9)", "([9]^2,[12]^11)", "(7,[14]^13)"},
    {"([15]^5,[6]^6)", "([13]^4,[8]^8)", "([11]^3,[10]^10)", "([9]^2,[12]^12)", "(7,[14]^14)"},
};

const Golden kT_18_3 = {
    {"(18,3)", "(18,[3]^2)", "(18,[3]^3)"},
    {"([18]^2,3)", "([18]^2,[3]^2)", "([18]^2,[3]^3)"},
    {"([18]^3,3)", "([18]^3,[3]^2)", "([18]^3,[3]^3)"},
    {"([18]^4,3)", "([18]^4,[3]^2)", "([18]^4,[3]^3)"},
    {"(5,[16]^5)", "(5,[16]^6)", "(5,[16]^7)"},
    {"([18]^5,[3]^2)", "([18]^5,[3]^3)", "(5,[16]^8)"},
    {"([16]^5,[5]^3)", "([10]^3,[11]^6)", "(5,[16]^9)"},
    {"([18]^6,[3]^3)", "([7]^2,[14]^8)", "(5,[16]^10)"},
    {"([18]^7,[3]^3)", "([7]^2,[14]^9)", "(5,[16]^11)"},
    {"([9]^3,[12]^8)", "([7]^2,[14]^10)", "(5,[16]^12)"},
    {"([9]^3,[12]^9)", "([7]^2,[14]^11)", "(5,[16]^13)"},
    {"([9]^3,[12]^10)", "([7]^2,[14]^12)", "(5,[16]^14)"},
    {"([9]^3,[12]^11)", "([7]^2,[14]^13)", "(5,[16]^15)"},
    {"([9]^3,[12]^12)", "([7]^2,[14]^14)", "(5,[16]^16)"},
};

Golden make_27_3() {
    Golden g;
    auto block = [](const std::string& total, int count) {
        return count == 1 ? total : "[" + total + "]^" + std::to_string(count);
    };
    for (int k = 1; k <= 23; k++) {
        std::vector<std::string> row;
        for (int l = 1; l <= 3; l++) {
            std::string s;
            if (k <= 6)
                s = "(" + block("27", k) + "," + block("3", l) + ")";
            else if (k == 7)
                s = "(5,[25]^" + std::to_string(l + 6) + ")";
            else if (k <= 9 && l <= 2)
                s = "(" + block("27", k - 1) + ",[3]^" + std::to_string(l + 1) + ")";
            else if (k <= 9)
                s = "(5,[25]^" + std::to_string(k + 2) + ")";
            else if (k == 10 && l <= 2)
                s = "([7]^2,[22]^" + std::to_string(l + 7) + ",1)";
            else if (k == 11 && l == 2)
                s = "([7]^2,[22]^10,1)";
            else if (l == 1 && k <= 14)
                s = "(" + block("27", k - 2) + ",[3]^3)";
            else if (l == 1)
                s = "([9]^3,[21]^" + std::to_string(k - 2) + ")";
            else if (l == 2)
                s = "([7]^2,[23]^" + std::to_string(k) + ")";
            else
                s = "(5,[25]^" + std::to_string(k + 2) + ")";
            row.push_back(s);
        }
        g.push_back(row);
    }
    return g;
}

bool check_golden(const Partition& q, const Golden& golden, std::string& extra) {
    TableQ t = build_table(q);
    if (t.rows() != static_cast<int>(golden.size())) {
        extra = "row count mismatch for " + to_plain_string(q);
        return false;
    }
    for (int k = 1; k <= t.rows(); k++)
        for (int l = 1; l <= t.cols(); l++) {
            std::string got = to_plain_string(t.cell(k, l).partition);
            std::string want = to_plain_string(parse_partition(golden[k - 1][l - 1]));
            if (got != want) {
                std::ostringstream os;
                os << to_plain_string(q) << " cell (" << k << "," << l << "): got " << got
                   << ", table shows " << want;
                extra = os.str();
                return false;
            }
        }
    return true;
}

std::set<Partition> parse_set(std::initializer_list<const char*> texts) {
    std::set<Partition> out;
    for (const char* t : texts) out.insert(parse_partition(t));
    return out;
}

bool check_brute_box(const Partition& q, const std::set<Partition>& want, std::string& extra) {
    BruteBoxReport rep = box_bruteforce(q);
    std::set<Partition> got = inverse_image(q, InverseVia::BruteForce);
    if (got != want) {
        extra = "preimage set mismatch for " + to_plain_string(q);
        return false;
    }
    if (!rep.total_matches || !rep.diagonal_counts_match) {
        extra = "parts-count binning mismatch for " + to_plain_string(q);
        return false;
    }
    return true;
}

void report(const SuiteResult& res) {
    std::cout << "REPORT (non-gating) " << res.name << ": "
              << (res.pass ? "no deviation" : "DEVIATION") << " over " << res.checks
              << " checks\n";
    for (size_t i = 0; i < res.failures.size() && i < 5; i++)
        std::cout << "    " << res.failures[i] << '\n';
}

} // namespace

int main() {
    Fp::set_modulus(65537);
    const uint64_t seed = 1;

    run(1, "T(Q) = brute-force Ob^{-1}(Q), |T(Q)| = (r-1)(u-r), k+l parts (all 2u-r <= 35)",
        [](std::string& extra) { return suite_ok(verify_table_completeness(35, 1), extra); });

    run(2, "golden tables (27,3), (12,3), (16,5), (18,3), (10,7), (10,6), (10,2)",
        [](std::string& extra) {
            return check_golden(Partition({27, 3}), make_27_3(), extra) &&
                   check_golden(Partition({12, 3}), kT_12_3, extra) &&
                   check_golden(Partition({16, 5}), kT_16_5, extra) &&
                   check_golden(Partition({18, 3}), kT_18_3, extra) &&
                   check_golden(Partition({10, 7}), kT_10_7, extra) &&
                   check_golden(Partition({10, 6}), kT_10_6, extra) &&
                   check_golden(Partition({10, 2}), kT_10_2, extra);
        });

    run(3, "table-invariant relations (Lemma 3.8) for all u > r >= 3, u <= 60",
        [](std::string& extra) { return suite_ok(verify_lemma38(60), extra); });

    run(4, "Monte-Carlo image = Ob(P) for every P |- n <= 14 (p = 65537, 8 trials, seed 1)",
        [&](std::string& extra) { return suite_ok(verify_mc_oblak(14, 8, seed, 8), extra); });

    run(5, "loci of Q = (5,2): four table cells >= 99/100 + intersection (3,3,1) 100/100",
        [&](std::string& extra) { return suite_ok(verify_loci_52(100, seed), extra); });

    run(6, "sl2-weighted scaling keeps Jordan types for (5,2), (5,3), (7,4), 100 pairs each",
        [&](std::string& extra) {
            return suite_ok(verify_scaling({Partition({5, 2}), Partition({5, 3}),
                                            Partition({7, 4})},
                                           100, seed),
                            extra);
        });

    run(7, "boxes: published floors for (8,5,2), (9,6,3), (9,6,2), (9,5,2), (11,8,5,2); lift = "
           "brute force for 3-part |Q| <= 26",
        [](std::string& extra) {
            bool ok = true;
            ok = ok && check_brute_box(
                           Partition({8, 5, 2}),
                           parse_set({"(8,5,2)", "(8,5,1,1)", "(8,4,2,1)", "(8,4,1,1,1)",
                                      "(7,4,2,2)", "(7,4,2,1,1)", "(7,3,3,1,1)", "(7,4,1,1,1,1)"}),
                           extra);
            ok = ok && check_brute_box(
                           Partition({9, 6, 3}),
                           parse_set({"(9,6,3)", "(9,6,[3]^2)", "(9,6,[3]^3)", "(9,5,[4]^2)",
                                      "(9,5,[4]^3)", "(9,5,[4]^4)", "(8,5,[5]^2)",
                                      "(8,[7]^2,[3]^2)", "(8,[7]^2,[3]^3)", "(8,5,[5]^3)",
                                      "(8,5,[5]^4)", "(8,5,[5]^5)"}),
                           extra);
            ok = ok && check_brute_box(
                           Partition({9, 6, 2}),
                           parse_set({"(9,6,2)", "(9,6,1,1)", "(9,4,2^2)", "(9,4,2,1^2)",
                                      "(9,3^2,1^2)", "(9,4,1^4)", "(8,4,3,2)", "(8,4,3,1^2)",
                                      "(8,4,2^2,1)", "(8,4,2,1^3)", "(8,3^2,1^3)", "(8,4,1^5)"}),
                           extra);
            ok = ok && check_brute_box(
                           Partition({9, 5, 2}),
                           parse_set({"(9,5,2)", "(9,5,1,1)", "(9,4,2,1)", "(9,4,1^3)",
                                      "(7,4,3,2)", "(7,4,3,1^2)", "(7,4,2^2,1)", "(7,4,2,1^3)",
                                      "(6,[7]^2,[3]^2)", "(7,3^2,1^3)", "(6,[7]^2,[3]^3)",
                                      "(7,4,1^5)"}),
                           extra);
            if (ok) {
                /* (11,8,5,2): first floor adjoins 11 to B((8,5,2)); second floor is Eq. (5.17) */
                std::set<Partition> want;
                for (const auto& p :
                     parse_set({"(8,5,2)", "(8,5,1,1)", "(8,4,2,1)", "(8,4,1,1,1)", "(7,4,2,2)",
                                "(7,4,2,1,1)", "(7,3,3,1,1)", "(7,4,1,1,1,1)"}))
                    want.insert(Partition({11}).unite(p));
                for (const auto& p :
                     parse_set({"(10,7,4,3,2)", "(10,7,4,3,1^2)", "(10,7,4,2^2,1)",
                                "(10,7,4,2,1^3)", "(10,6,4,3,2,1)", "(10,7,3^2,1^3)",
                                "(10,6,4,3,1^3)", "(10,7,4,1^5)"}))
                    want.insert(p);
                ok = check_brute_box(Partition({11, 8, 5, 2}), want, extra);
            }
            if (!ok) return false;
            return suite_ok(verify_box_counts(26, 1), extra);
        });

    run(8, "p(n) = sum over stable Q of prod S_Q for all n <= 40", [](std::string& extra) {
        return suite_ok(verify_pn_identity(40), extra);
    });

    run(9, "DHL boxes: Fig.-6 layout for (6,2); dhl(cell) = Q, |box| = prod S_Q for |Q| <= 30",
        [](std::string& extra) {
            BoxQ box = dhl_box(Partition({6, 2}));
            const char* want[3][2] = {{"(5,3)", "(4,2,2)"},
                                      {"(4,3,1)", "(3,2,2,1)"},
                                      {"(3,3,1,1)", "(2,2,2,1,1)"}};
            for (int i = 1; i <= 3; i++)
                for (int j = 1; j <= 2; j++)
                    if (box.at({i, j}) != parse_partition(want[i - 1][j - 1])) {
                        extra = "Fig. 6 cell mismatch";
                        return false;
                    }
            return suite_ok(verify_dhl_boxes(30), extra);
        });

    run(10, "dim U_B = u + 3(u-r) - 2 on 20 random two-part bases", [&](std::string& extra) {
        return suite_ok(verify_dimension_check(20, seed), extra);
    });

    std::cout << '\n';
    report(report_bruhat_column(35));
    report(report_box_4part(26, 1));
    report(report_ob_parts(24));
    report(report_loci_beyond(50, seed));

    std::cout << '\n'
              << (failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS" : "ACCEPTANCE FAILURES PRESENT")
              << '\n';
    return failures;
}
