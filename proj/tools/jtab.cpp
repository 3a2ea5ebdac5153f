/* jtab: partitions, Jordan types, tables and boxes on the command line.
 *
 * Exit codes: 0 success, 1 usage/parse error, 2 domain error,
 * 3 verification failure, 4 conjecture-deviation report.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "jtab/boxes.hpp"
#include "jtab/gfp.hpp"
#include "jtab/jordanlab.hpp"
#include "jtab/partition.hpp"
#include "jtab/poset.hpp"
#include "jtab/table.hpp"
#include "jtab/verify.hpp"

using json = nlohmann::json;
using namespace jtab;

namespace {

struct RunConfig {
    std::string format = "text";
    uint64_t prime = 65537;
    int trials = 0;  // 0 = per-command default
    uint64_t seed = 1;
    int max_n = 40;
    int jobs = 1;
    bool json_out() const { return format == "json"; }
};

json to_json(const Partition& p) { return json{{"parts", p.parts()}}; }

/* text partitions plus the JSON form {"parts":[...]}, so JSON output can be
 * piped straight back in
 */
Partition parse_arg(const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        json j = json::parse(text);
        return Partition(j.at("parts").get<std::vector<int>>());
    }
    return parse_partition(text);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_oblak(const RunConfig& cfg, const std::string& ptext) {
    Partition p = parse_arg(ptext);
    Partition q = oblak(p);
    if (cfg.json_out()) {
        json chains = json::array();
        for (int a : p.distinct_parts())
            chains.push_back({{"a", a}, {"length", u_chain_length(p, a).length}});
        emit(json{{"P", to_json(p)},
                  {"n", p.total()},
                  {"stable", is_stable(p)},
                  {"r_p", r_p(p)},
                  {"chains", chains},
                  {"oblak", to_json(q)},
                  {"tie_independent", oblak_tie_independence(p)}});
        return 0;
    }
    std::cout << "P = " << to_plain_string(p) << "  (n = " << p.total() << ")\n";
    std::cout << "stable: " << (is_stable(p) ? "yes" : "no") << "\n";
    std::cout << "r_P = " << r_p(p) << "\n";
    std::cout << "U-chains:";
    for (int a : p.distinct_parts())
        std::cout << "  |C_" << a << "| = " << u_chain_length(p, a).length;
    std::cout << "\nOb(P) = " << to_plain_string(q) << "\n";
    return 0;
}

int cmd_table(const RunConfig& cfg, const std::string& qtext) {
    TableQ t = build_table(parse_arg(qtext));
    if (cfg.json_out()) {
        json cells = json::array();
        for (const auto& cell : t.cells())
            cells.push_back({{"k", cell.k},
                             {"l", cell.l},
                             {"partition", to_json(cell.partition)},
                             {"class", std::string(1, to_char(cell.cls))},
                             {"t", cell.t}});
        emit(json{{"Q", to_json(t.q())}, {"rows", t.rows()}, {"cols", t.cols()}, {"cells", cells}});
        return 0;
    }
    std::cout << "T(" << to_plain_string(t.q()) << "): " << t.rows() << " x " << t.cols()
              << " table, cell (k,l) has k+l parts\n";
    std::vector<std::vector<std::string>> grid(t.rows(), std::vector<std::string>(t.cols()));
    std::vector<size_t> width(t.cols(), 0);
    for (const auto& cell : t.cells()) {
        std::string s = cell.ar_text() + "^" + to_char(cell.cls);
        if (cell.cls != CellClass::A) s += std::to_string(cell.t);
        grid[cell.k - 1][cell.l - 1] = s;
        width[cell.l - 1] = std::max(width[cell.l - 1], s.size());
    }
    for (int k = 1; k <= t.rows(); k++) {
        std::cout << "  k=" << k << (k < 10 ? " " : "") << " ";
        for (int l = 1; l <= t.cols(); l++) {
            std::cout << grid[k - 1][l - 1];
            if (l < t.cols())
                std::cout << std::string(width[l - 1] - grid[k - 1][l - 1].size() + 2, ' ');
        }
        std::cout << '\n';
    }
    std::cout << "(^A: type A row; ^Bt / ^Ct: cell of the t-th B/C hook)\n";
    return 0;
}

int cmd_inverse(const RunConfig& cfg, const std::string& qtext, bool brute) {
    Partition q = parse_arg(qtext);
    if (q.empty() || !is_stable(q)) throw std::domain_error("inverse: Q must be stable");
    std::set<Partition> inv;
    std::string mode;
    if (!brute && q.size() == 2) {
        inv = inverse_image(q, InverseVia::ClosedForm);
        mode = "closed-form";
    } else if (!brute && q.size() == 1) {
        for (int k = 1; k <= q.total(); k++) inv.insert(almost_rectangular(q.total(), k));
        mode = "almost-rectangular row";
    } else {
        if (q.total() > cfg.max_n)
            throw std::domain_error("inverse: brute force over p(n) needs n <= --max-n");
        inv = inverse_image(q, InverseVia::BruteForce);
        mode = "brute-force";
    }
    if (cfg.json_out()) {
        json arr = json::array();
        for (const auto& p : inv) arr.push_back(to_json(p));
        emit(json{{"Q", to_json(q)}, {"mode", mode}, {"count", inv.size()}, {"partitions", arr}});
        return 0;
    }
    std::cout << "Ob^{-1}(" << to_plain_string(q) << ") via " << mode << ": " << inv.size()
              << " partitions\n";
    for (const auto& p : inv)
        std::cout << "  " << to_plain_string(p) << "  " << to_ar_string(p) << '\n';
    return 0;
}

/* cells as nested arrays indexed [i_1][i_2]...[i_k] */
json box_cells_json(const BoxQ& box, std::vector<int>& prefix, size_t depth) {
    if (depth == box.dims().entries.size()) return to_json(box.at(prefix));
    json arr = json::array();
    for (int i = 1; i <= box.dims().entries[depth]; i++) {
        prefix.push_back(i);
        arr.push_back(box_cells_json(box, prefix, depth + 1));
        prefix.pop_back();
    }
    return arr;
}

json box_to_json(const BoxQ& box) {
    std::vector<int> prefix;
    return json{{"Q", to_json(box.q())},
                {"dims", box.dims().entries},
                {"cells", box_cells_json(box, prefix, 0)}};
}

int cmd_box(const RunConfig& cfg, const std::string& qtext, bool brute, bool ar_style) {
    Partition q = parse_arg(qtext);
    if (q.empty() || !is_stable(q)) throw std::domain_error("box: Q must be stable");
    int exit_code = 0;
    BoxQ box(q, key(q), BoxKind::QInverse);
    std::string mode;
    if (!brute && q.size() == 3 && q.parts()[0] - q.parts()[1] <= 4) {
        box = box_two_part_lift(q);
        mode = "three-part lift";
    } else if (!brute && q.size() == 2) {
        TableQ t = build_table(q);
        for (const auto& cell : t.cells()) box.set({cell.k, cell.l}, cell.partition);
        mode = "two-part table";
    } else if (!brute && q.size() == 1) {
        for (int k = 1; k <= q.total(); k++) box.set({k}, almost_rectangular(q.total(), k));
        mode = "almost-rectangular row";
    } else {
        if (q.total() > cfg.max_n)
            throw std::domain_error("box: brute force over p(n) needs n <= --max-n");
        BruteBoxReport rep = box_bruteforce(q);
        mode = rep.canonical ? "brute force (closed-form arrangement)"
                             : "brute force (diagonal-sorted arrangement)";
        if (!rep.diagonal_counts_match) {
            std::cerr << "box: parts-count census disagrees with the key (conjecture deviation)\n";
            exit_code = 4;
        }
        box = std::move(rep.box);
    }
    if (cfg.json_out()) {
        json j = box_to_json(box);
        j["mode"] = mode;
        emit(j);
        return exit_code;
    }
    std::cout << "B(" << to_plain_string(q) << "), dims " << to_string(box.dims()) << " via "
              << mode << ":\n";
    std::cout << render_floors(box, ar_style);
    return exit_code;
}

int cmd_dhl(const RunConfig& cfg, const std::string& qtext, bool ar_style) {
    BoxQ box = dhl_box(parse_arg(qtext));
    if (cfg.json_out()) {
        emit(box_to_json(box));
        return 0;
    }
    std::cout << "DHL(" << to_plain_string(box.q()) << "), dims " << to_string(box.dims())
              << ":\n";
    std::cout << render_floors(box, ar_style);
    return 0;
}

int cmd_poset(const RunConfig& cfg, const std::string& ptext) {
    PosetDP d = build_poset(parse_arg(ptext));
    if (cfg.json_out()) {
        json verts = json::array();
        for (const auto& v : d.vertices())
            verts.push_back({{"u", v.u}, {"i", v.i}, {"k", v.k}, {"weight", PosetDP::weight(v)}});
        json edges = json::array();
        for (const auto& e : d.edges())
            edges.push_back(
                {{"from", to_string(e.from)}, {"to", to_string(e.to)}, {"map", e.label()}});
        emit(json{{"P", to_json(d.source())}, {"vertices", verts}, {"edges", edges}});
        return 0;
    }
    std::cout << d.to_dot();
    return 0;
}

std::string quadric_text(const LocusSpec& spec, int j) {
    std::ostringstream os;
    os << "X_" << j << "(" << spec.k1 << "," << spec.k2 << ") =";
    for (int v = 1; v <= j; v++) {
        os << (v > 1 ? " + " : " ") << "a_" << spec.k1 + v << "*b_" << spec.k2 + j + 1 - v
           << " - g_" << v << "*g'_" << j + 1 - v;
    }
    return os.str();
}

int cmd_loci(const RunConfig& cfg, const std::string& qtext, int k, int l) {
    Partition q = parse_arg(qtext);
    LocusSpec spec = locus_spec(q, k, l);
    int trials = cfg.trials > 0 ? cfg.trials : 100;
    LocusReport rep = locus_sample_check(spec, trials, cfg.seed);
    int u = q.parts()[0];
    int r = u - q.parts()[1];
    if (cfg.json_out()) {
        json gens = json::array();
        for (const auto& g : spec.generator_names()) gens.push_back(g);
        json hist = json::array();
        for (const auto& [type, count] : rep.histogram)
            hist.push_back({{"type", to_json(type)}, {"count", count}});
        emit(json{{"Q", to_json(q)},
                  {"cell", {{"k", k}, {"l", l}}},
                  {"class", std::string(1, to_char(spec.cls))},
                  {"t", spec.t},
                  {"generators", gens},
                  {"beyond_conjecture", spec.beyond_conjecture},
                  {"sample_count", trials},
                  {"type_histogram", hist},
                  {"modal_type", to_json(rep.modal)},
                  {"matches_table", rep.matches_table}});
        return 0;
    }
    std::cout << "Z(P_{" << k << "," << l << "}) in U_B for B = J_" << to_plain_string(q)
              << ", table cell " << to_plain_string(table_entry(u, r, k, l)) << " ["
              << to_char(spec.cls) << ", hook/row t = " << spec.t << "]\n";
    std::cout << "conjectured generators";
    if (spec.beyond_conjecture)
        std::cout << " (l = u-r column: beyond the conjectured range, extrapolated)";
    std::cout << ":\n";
    if (spec.generator_names().empty()) std::cout << "  (none: dense open cell)\n";
    for (int m = 1; m <= spec.mu; m++) std::cout << "  a_" << m << " = 0\n";
    for (int m = 1; m <= spec.nu; m++) std::cout << "  b_" << m << " = 0\n";
    for (int j = 1; j <= spec.s; j++) std::cout << "  " << quadric_text(spec, j) << " = 0\n";
    std::cout << "sampling " << trials << " points (seed " << cfg.seed << "):\n";
    for (const auto& [type, count] : rep.histogram)
        std::cout << "  " << to_plain_string(type) << " x " << count << '\n';
    std::cout << "modal type " << to_plain_string(rep.modal)
              << (rep.matches_table ? " matches" : " does NOT match") << " the table entry\n";
    return rep.matches_table ? 0 : 4;
}

int print_suite(const RunConfig& cfg, const SuiteResult& res) {
    if (cfg.json_out()) {
        emit(json{{"suite", res.name},
                  {"pass", res.pass},
                  {"conjecture", res.conjecture},
                  {"checks", res.checks},
                  {"notes", res.notes},
                  {"failures", res.failures}});
    } else {
        std::cout << (res.pass ? "PASS" : (res.conjecture ? "DEVIATION" : "FAIL")) << "  "
                  << res.name << "  (" << res.checks << " checks)\n";
        for (const auto& n : res.notes) std::cout << "  note: " << n << '\n';
        for (const auto& f : res.failures) std::cout << "  " << f << '\n';
    }
    if (res.pass) return 0;
    return res.conjecture ? 4 : 3;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    int trials = cfg.trials;
    auto bounded = [&](int fallback) { return std::min(cfg.max_n, fallback); };
    if (suite == "table-completeness")
        return print_suite(cfg, verify_table_completeness(bounded(35), cfg.jobs));
    if (suite == "lemma38") return print_suite(cfg, verify_lemma38(std::max(cfg.max_n, 60)));
    if (suite == "pn-identity") return print_suite(cfg, verify_pn_identity(bounded(40)));
    if (suite == "dhl") return print_suite(cfg, verify_dhl_boxes(bounded(30)));
    if (suite == "box-counts") return print_suite(cfg, verify_box_counts(bounded(26), cfg.jobs));
    if (suite == "mc-oblak")
        return print_suite(cfg,
                           verify_mc_oblak(bounded(14), trials ? trials : 8, cfg.seed, cfg.jobs));
    if (suite == "scaling")
        return print_suite(
            cfg, verify_scaling({Partition({5, 2}), Partition({5, 3}), Partition({7, 4})},
                                trials ? trials : 100, cfg.seed));
    if (suite == "loci-(5,2)" || suite == "loci-52")
        return print_suite(cfg, verify_loci_52(trials ? trials : 100, cfg.seed));
    if (suite == "dimension") return print_suite(cfg, verify_dimension_check(20, cfg.seed));
    if (suite == "bruhat-column") return print_suite(cfg, report_bruhat_column(bounded(35)));
    if (suite == "box-4part") return print_suite(cfg, report_box_4part(bounded(26), cfg.jobs));
    if (suite == "ob-parts") return print_suite(cfg, report_ob_parts(bounded(26)));
    if (suite == "loci-beyond")
        return print_suite(cfg, report_loci_beyond(trials ? trials : 50, cfg.seed));
    if (suite == "all") {
        int worst = 0;
        for (const char* s :
             {"table-completeness", "lemma38", "pn-identity", "dhl", "box-counts", "mc-oblak",
              "scaling", "loci-52", "dimension"})
            worst = std::max(worst, cmd_verify(cfg, s));
        return worst;
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jordan types of generic nilpotent commutators: the Oblak recursion, "
                 "inverse-image tables and boxes, and an exact GF(p) matrix laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--prime", cfg.prime, "prime modulus for the matrix laboratory")
        ->capture_default_str();
    app.add_option("--trials", cfg.trials, "sampling trials (0 = per-command default)");
    app.add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
    app.add_option("--max-n", cfg.max_n, "budget for brute-force enumeration")
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads for verify suites")->capture_default_str();

    std::string parg, qarg, suite;
    int karg = 0, larg = 0;
    bool brute = false, ar_style = false;

    auto* oblak_cmd = app.add_subcommand("oblak", "Ob(P), r_P, U-chain lengths, stability");
    oblak_cmd->add_option("P", parg, "partition, e.g. 3,2,2,1 or ([10]^4,1)")->required();

    auto* table_cmd = app.add_subcommand("table", "the table T(Q) for two-part stable Q");
    table_cmd->add_option("Q", qarg)->required();

    auto* inv_cmd = app.add_subcommand("inverse", "the inverse image Ob^{-1}(Q)");
    inv_cmd->add_option("Q", qarg)->required();
    inv_cmd->add_flag("--brute", brute, "force exhaustive enumeration");

    auto* box_cmd = app.add_subcommand("box", "the box B(Q), floor by floor");
    box_cmd->add_option("Q", qarg)->required();
    box_cmd->add_flag("--brute", brute, "force exhaustive enumeration");
    box_cmd->add_flag("--ar", ar_style, "render cells in almost-rectangular style");

    auto* dhl_cmd = app.add_subcommand("dhl", "the box of partitions with diagonal hooks Q");
    dhl_cmd->add_option("Q", qarg)->required();
    dhl_cmd->add_flag("--ar", ar_style, "render cells in almost-rectangular style");

    auto* poset_cmd = app.add_subcommand("poset", "the poset D_P as DOT (or JSON)");
    poset_cmd->add_option("P", parg)->required();

    auto* loci_cmd = app.add_subcommand("loci", "conjectured locus equations + sampling report");
    loci_cmd->add_option("Q", qarg)->required();
    loci_cmd->add_option("k", karg)->required();
    loci_cmd->add_option("l", larg)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    verify_cmd
        ->add_option("--suite", suite,
                     "table-completeness | lemma38 | pn-identity | dhl | box-counts | mc-oblak | "
                     "scaling | loci-(5,2) | dimension | bruhat-column | box-4part | ob-parts | "
                     "loci-beyond | all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Fp::set_modulus(static_cast<uint32_t>(cfg.prime));
        if (oblak_cmd->parsed()) return cmd_oblak(cfg, parg);
        if (table_cmd->parsed()) return cmd_table(cfg, qarg);
        if (inv_cmd->parsed()) return cmd_inverse(cfg, qarg, brute);
        if (box_cmd->parsed()) return cmd_box(cfg, qarg, brute, ar_style);
        if (dhl_cmd->parsed()) return cmd_dhl(cfg, qarg, ar_style);
        if (poset_cmd->parsed()) return cmd_poset(cfg, parg);
        if (loci_cmd->parsed()) return cmd_loci(cfg, qarg, karg, larg);
        if (verify_cmd->parsed()) return cmd_verify(cfg, suite);
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
