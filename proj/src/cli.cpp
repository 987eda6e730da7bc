#include "minorlist/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "minorlist/gadgets.hpp"
#include "minorlist/io.hpp"

namespace minorlist {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Ctx {
    bool quiet = false;
    int threads = 1;  // forwarded to solvers; current solvers are sequential
    Clock::time_point start = Clock::now();

    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
    void prose(const std::string& line) const {
        if (!quiet) std::cerr << line << "\n";
    }
    int emit(const std::string& command, const json& inputs, const std::string& verdict,
             const json& details, int code) const {
        std::cout << report_json(command, inputs, verdict, details, ms()).dump(2) << "\n";
        return code;
    }
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

Graph load_graph(const std::string& path) { return graph_from_json(load_json(path)); }

int cmd_build_thm2(Ctx& ctx, int a, int t, const std::string& out_file, bool thm3) {
    Witness w = thm3 ? thm3_witness(a, t) : thm2_witness(a, t);
    bool in_regime = t >= (thm3 ? thm3_threshold(a) : thm2_threshold(a));
    save_json(out_file, witness_to_json(w));
    ctx.prose("wrote " + out_file + " (" + std::to_string(w.graph.size()) + " vertices)");
    json details{{"out", out_file}, {"vertices", w.graph.size()}, {"in_regime", in_regime},
                 {"lambda", lambda_to_string(w.lam)}};
    return ctx.emit(thm3 ? "build thm3" : "build thm2", {{"a", a}, {"t", t}}, "pass", details,
                    exit_code::kPass);
}

int cmd_build_thmkq(Ctx& ctx, int n, long long eps_num, long long eps_den, int q,
                    const std::string& ks_text, const std::string& eps_prime_text,
                    uint64_t cap, const std::string& out_dir) {
    std::cerr << "TRACE n=" << n << " num=" << eps_num << " den=" << eps_den << " q=" << q
              << " ks='" << ks_text << "' epsp='" << eps_prime_text << "' cap=" << cap << " out='" << out_dir << "'\n";
    Rational eps(eps_num, eps_den);
    std::cerr << "T1\n";
    Rational eps_prime = eps_prime_text.empty() ? pick_eps_prime(eps, q) : parse_rational_text(eps_prime_text);
    std::cerr << "T2 " << eps_prime.str() << "\n";
    std::vector<int> ks;
    for (auto& part : parse_lambda(ks_text).parts()) ks.push_back(part);
    std::cerr << "T3 ks0=" << ks.at(0) << "\n";
    SteinerGraph h = cyclic_instance(n, static_cast<int>(eps_prime.floor_times(n)), eps_prime);
    std::cerr << "T4\n";
    auto build = build_thmkq(h, q, ks, eps_prime, cap);
    std::cerr << "T5\n";
    fs::create_directories(out_dir);
    json bundle = multicopy_to_json(build);
    bundle["steiner"] = steiner_to_json(h);
    bundle["q"] = q;
    bundle["kind"] = "thmkq";
    bundle["eps"] = eps.str();
    bundle["eps_prime"] = eps_prime.str();
    save_json(out_dir + "/bundle.json", bundle);
    ctx.prose("wrote " + out_dir + "/bundle.json with " + std::to_string(build.copies.size()) + " copies");
    json details{{"out", out_dir}, {"copies", build.copies.size()}, {"universe_size", build.universe_size},
                 {"vertices", build.graph.size()}, {"t", build.t}};
    return ctx.emit("build thmkq", {{"n", n}, {"q", q}, {"ks", ks_text}, {"eps", eps.str()}},
                    "pass", details, exit_code::kPass);
}

int cmd_build_ab(Ctx& ctx, int n, int m, long long eps_num, long long eps_den, uint64_t cap,
                 const std::string& out_dir) {
    Rational eps(eps_num, eps_den);
    SteinerGraph h = cyclic_instance(n, static_cast<int>(eps.floor_times(n)), eps);
    auto build = build_ab(h, m, cap);
    fs::create_directories(out_dir);
    json bundle = multicopy_to_json(build);
    bundle["steiner"] = steiner_to_json(h);
    bundle["m"] = m;
    bundle["kind"] = "ab";
    save_json(out_dir + "/bundle.json", bundle);
    ctx.prose("wrote " + out_dir + "/bundle.json with " + std::to_string(build.copies.size()) + " copies");
    json details{{"out", out_dir}, {"copies", build.copies.size()}, {"universe_size", build.universe_size}};
    return ctx.emit("build ab", {{"n", n}, {"m", m}, {"eps", eps.str()}}, "pass", details, exit_code::kPass);
}

int cmd_verify_witness(Ctx& ctx, const std::string& file, const std::string& minor_mode, uint64_t budget) {
    Witness w = witness_from_json(load_json(file));
    MinorMode mode = MinorMode::Exact;
    if (minor_mode == "certificate") mode = MinorMode::Certificate;
    else if (minor_mode == "skip") mode = MinorMode::SkipMinor;
    else if (minor_mode != "exact") throw std::invalid_argument("unknown --minor mode: " + minor_mode);
    auto rep = verify_witness(w, mode, budget);
    save_json(file, witness_to_json(w));  // record the verification status
    json details{{"assignment", to_string(rep.record.assignment)},
                 {"coloring", to_string(rep.record.coloring)},
                 {"minor", to_string(rep.record.minor)},
                 {"summary", rep.summary},
                 {"notes", rep.record.notes}};
    ctx.prose("witness " + file + ": " + rep.summary);
    int code = exit_code::kPass;
    std::string verdict = "pass";
    if (rep.summary == "failed") code = exit_code::kFail, verdict = "fail";
    if (rep.summary == "inconclusive") code = exit_code::kInconclusive, verdict = "inconclusive";
    return ctx.emit("verify witness", {{"file", file}, {"minor", minor_mode}}, verdict, details, code);
}

int cmd_verify_percopy(Ctx& ctx, const std::string& dir, uint64_t cap) {
    json bundle = load_json(dir + "/bundle.json");
    SteinerGraph h = steiner_from_json(bundle.at("steiner"));
    PerCopyReport rep;
    std::string kind = bundle.value("kind", "thmkq");
    if (kind == "ab") {
        rep = verify_ab_percopy(h, bundle.at("m").get<int>(), cap);
    } else {
        std::vector<int> ks;
        for (auto& cls : parse_lambda(bundle.at("lambda").get<std::string>()).parts()) ks.push_back(cls);
        Rational eps_prime = parse_rational_text(bundle.at("eps_prime").get<std::string>());
        rep = verify_thmkq_percopy(h, bundle.at("q").get<int>(), ks, eps_prime, cap);
    }
    json details{{"copies_checked", rep.copies_checked}, {"all_blocked", rep.all_blocked},
                 {"failures", rep.failures}};
    ctx.prose(std::to_string(rep.copies_checked) + " copies checked, " +
              (rep.all_blocked ? "all blocked" : "some extended"));
    return ctx.emit("verify percopy", {{"dir", dir}}, rep.all_blocked ? "pass" : "fail", details,
                    rep.all_blocked ? exit_code::kPass : exit_code::kFail);
}

int cmd_check_color(Ctx& ctx, const std::string& graph_file, const std::string& lists_file, int b,
                    const std::string& partial_file) {
    Graph g = load_graph(graph_file);
    ListAssignment l;
    ColourClasses c;
    assignment_from_json(load_json(lists_file), l, c);
    json inputs{{"graph", graph_file}, {"lists", lists_file}, {"b", b}};
    if (b > 1) {
        auto r = find_bfold(g, l, b);
        if (r) return ctx.emit("check color", inputs, "pass", {{"fold", r.fold->sets}}, exit_code::kPass);
        return ctx.emit("check color", inputs, "fail", {{"reason", "no b-fold colouring: " + r.reason}},
                        exit_code::kFail);
    }
    std::map<int, int> partial;
    if (!partial_file.empty())
        for (auto& [key, col] : load_json(partial_file).items()) partial[std::stoi(key)] = col.get<int>();
    auto col = find_coloring(g, l, partial);
    if (col) return ctx.emit("check color", inputs, "pass", {{"coloring", *col}}, exit_code::kPass);
    ctx.prose("no coloring");
    return ctx.emit("check color", inputs, "fail", {{"reason", "no coloring"}}, exit_code::kFail);
}

int cmd_check_assignment(Ctx& ctx, const std::string& graph_file, const std::string& lists_file,
                         const std::string& lambda_text) {
    Graph g = load_graph(graph_file);
    ListAssignment l;
    ColourClasses c;
    assignment_from_json(load_json(lists_file), l, c);
    Lambda lam = parse_lambda(lambda_text);
    auto r = is_valid_assignment(g, l, lam, c);
    json inputs{{"graph", graph_file}, {"lists", lists_file}, {"lambda", lambda_text}};
    if (r) return ctx.emit("check assignment", inputs, "pass", {}, exit_code::kPass);
    return ctx.emit("check assignment", inputs, "fail",
                    {{"reason", r.reason}, {"vertex", r.vertex}, {"class", r.class_index}}, exit_code::kFail);
}

int cmd_minor(Ctx& ctx, const std::string& graph_file, int t, uint64_t budget) {
    Graph g = load_graph(graph_file);
    auto r = find_kt_minor(g, t, budget);
    json inputs{{"graph", graph_file}, {"t", t}, {"budget", budget}};
    json details{{"nodes", r.nodes}};
    switch (r.status) {
        case MinorStatus::None:
            ctx.prose("no K_" + std::to_string(t) + " minor");
            details["minor_free"] = true;
            return ctx.emit("minor", inputs, "pass", details, exit_code::kPass);
        case MinorStatus::Found: {
            details["minor_free"] = false;
            details["model"] = r.model->branch_sets;
            ctx.prose("K_" + std::to_string(t) + " minor found");
            return ctx.emit("minor", inputs, "fail", details, exit_code::kFail);
        }
        case MinorStatus::BudgetExceeded:
            ctx.prose("budget exceeded");
            return ctx.emit("minor", inputs, "inconclusive", details, exit_code::kInconclusive);
    }
    return exit_code::kInvalid;
}

int cmd_order(Ctx& ctx, const std::string& lhs, const std::string& rhs) {
    bool ok = leq_order(parse_lambda(lhs), parse_lambda(rhs));
    ctx.prose(lhs + (ok ? " <= " : " !<= ") + rhs);
    return ctx.emit("order", {{"lhs", lhs}, {"rhs", rhs}}, ok ? "pass" : "fail", {{"leq", ok}},
                    ok ? exit_code::kPass : exit_code::kFail);
}

int cmd_steiner_sample(Ctx& ctx, int n, const std::string& eps_text, uint64_t seed, int budget,
                       const std::string& out_file) {
    Rational eps = parse_rational_text(eps_text);
    auto s = sample_steiner(n, eps, seed, budget);
    json inputs{{"n", n}, {"eps", eps.str()}, {"seed", seed}, {"budget", budget}};
    if (!s) {
        ctx.prose("no verified instance within the attempt budget");
        return ctx.emit("steiner sample", inputs, "inconclusive", {}, exit_code::kInconclusive);
    }
    if (!out_file.empty()) save_json(out_file, steiner_to_json(*s));
    json details{{"verified_t", *s->verified_t}};
    if (!out_file.empty()) details["out"] = out_file;
    return ctx.emit("steiner sample", inputs, "pass", details, exit_code::kPass);
}

ObstacleFamily family_from_json(const json& j, CliqueSelector& select) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "toy") {
        select = toy_selector();
        return toy_family();
    }
    if (kind == "thm2") {
        int a = j.at("a").get<int>(), t = j.at("t").get<int>();
        auto fam = thm2_family(a, t);
        auto gl = thm2_lists(build_thm2(a, t));
        auto a_colors = gl.a_colors;
        int size = 2 * a + 5;
        select = [a_colors, size](const Coloring& psi) { return pattern_clique_thm2(psi, a_colors, size); };
        return fam;
    }
    if (kind == "thm3") {
        int a = j.at("a").get<int>(), t = j.at("t").get<int>();
        auto fam = thm3_family(a, t);
        auto gl = thm3_lists(build_thm3(a, t));
        auto d_triples = gl.d_triples;
        select = [d_triples, a](const Coloring& psi) {
            auto sel = pattern_clique_thm3(psi, d_triples, a);
            return sel.vertices;
        };
        return fam;
    }
    throw std::invalid_argument("unknown family kind: " + kind);
}

int cmd_compose(Ctx& ctx, const std::string& family_file, const std::string& h2_file,
                const std::string& lists_file, const std::string& out_file, uint64_t cap) {
    CliqueSelector select;
    ObstacleFamily fam = family_from_json(load_json(family_file), select);
    Graph h2 = load_graph(h2_file);
    ListAssignment l2;
    ColourClasses unused;
    assignment_from_json(load_json(lists_file), l2, unused);
    ComposeOptions opts;
    opts.copy_cap = cap;
    auto r = compose(fam, h2, l2, select, opts);
    Witness w;
    w.graph = r.graph;
    w.lists = r.lists;
    w.lam = fam.lam;
    w.classes = fam.classes;
    w.t = 0;
    w.provenance = "compose(" + family_file + ")";
    w.compose_info = r.provenance;
    save_json(out_file, witness_to_json(w));
    json inputs{{"family", family_file}, {"h2", h2_file}, {"lists", lists_file}};
    json details{{"out", out_file}, {"copies", r.provenance.copies.size()},
                 {"vertices", r.graph.size()}, {"degenerate", r.degenerate}};
    if (r.degenerate) details["warning"] = r.warning;
    ctx.prose("composed " + std::to_string(r.provenance.copies.size()) + " copies into " + out_file);
    return ctx.emit("compose", inputs, "pass", details, exit_code::kPass);
}

}  // namespace

int run(const std::vector<std::string>& args) {
    Ctx ctx;
    CLI::App app{"builders and verifiers for list-colouring gadgets on minor-free graphs"};
    app.set_help_all_flag("--help-all");
    app.add_flag("--quiet", ctx.quiet, "suppress prose (stderr); JSON report still goes to stdout");
    app.add_option("--threads", ctx.threads, "solver threads (results are independent of this)");

    // build
    auto* build = app.add_subcommand("build", "construct a gadget or witness bundle");
    int b_a = 0, b_t = 0;
    std::string b_out;
    auto* thm2 = build->add_subcommand("thm2", "two-clique gadget witness");
    thm2->add_option("--a", b_a)->required();
    thm2->add_option("--t", b_t)->required();
    thm2->add_option("--out", b_out)->required();
    auto* thm3 = build->add_subcommand("thm3", "triple-structured gadget witness");
    thm3->add_option("--a", b_a)->required();
    thm3->add_option("--t", b_t)->required();
    thm3->add_option("--out", b_out)->required();

    int kq_n = 0, kq_q = 0;
    long long kq_num = 0, kq_den = 1;
    std::string kq_ks, kq_out, kq_eps_prime;
    uint64_t kq_cap = 100000;
    auto* thmkq = build->add_subcommand("thmkq", "shared-clique multi-copy gadget");
    thmkq->add_option("--n", kq_n)->required();
    thmkq->add_option("--eps-num", kq_num)->required();
    thmkq->add_option("--eps-den", kq_den)->required();
    thmkq->add_option("--q", kq_q)->required();
    thmkq->add_option("--ks", kq_ks, "parts, lambda text format")->required();
    thmkq->add_option("--eps-prime", kq_eps_prime, "override eps' (rational)");
    thmkq->add_option("--cap", kq_cap);
    thmkq->add_option("--out", kq_out)->required();

    int ab_n = 0, ab_m = 0;
    long long ab_num = 1, ab_den = 2;
    std::string ab_out;
    uint64_t ab_cap = 100000;
    auto* ab = build->add_subcommand("ab", "m-fold multi-copy gadget");
    ab->add_option("--n", ab_n)->required();
    ab->add_option("--m", ab_m)->required();
    ab->add_option("--eps-num", ab_num);
    ab->add_option("--eps-den", ab_den);
    ab->add_option("--cap", ab_cap);
    ab->add_option("--out", ab_out)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "verify a witness bundle or per-copy directory");
    std::string v_file, v_minor = "exact";
    uint64_t v_budget = kDefaultMinorBudget;
    auto* v_witness = verify->add_subcommand("witness");
    v_witness->add_option("file", v_file)->required();
    v_witness->add_option("--minor", v_minor, "exact|certificate|skip");
    v_witness->add_option("--budget", v_budget);
    std::string v_dir;
    uint64_t v_cap = 100000;
    auto* v_percopy = verify->add_subcommand("percopy");
    v_percopy->add_option("dir", v_dir)->required();
    v_percopy->add_option("--cap", v_cap);

    // check
    auto* check = app.add_subcommand("check", "colouring and assignment checks");
    std::string c_graph, c_lists, c_partial, c_lambda;
    int c_b = 1;
    auto* c_color = check->add_subcommand("color");
    c_color->add_option("--graph", c_graph)->required();
    c_color->add_option("--lists", c_lists)->required();
    c_color->add_option("--b", c_b);
    c_color->add_option("--partial", c_partial);
    auto* c_assign = check->add_subcommand("assignment");
    c_assign->add_option("--graph", c_graph)->required();
    c_assign->add_option("--lists", c_lists)->required();
    c_assign->add_option("--lambda", c_lambda)->required();

    // minor
    std::string m_graph;
    int m_t = 0;
    uint64_t m_budget = kDefaultMinorBudget;
    auto* minor = app.add_subcommand("minor", "exact K_t-minor search");
    minor->add_option("--graph", m_graph)->required();
    minor->add_option("--t", m_t)->required();
    minor->add_option("--budget", m_budget);

    // order
    std::string o_lhs, o_rhs;
    auto* order = app.add_subcommand("order", "decide lambda <= lambda'");
    order->add_option("--lhs", o_lhs)->required();
    order->add_option("--rhs", o_rhs)->required();

    // steiner
    auto* steiner = app.add_subcommand("steiner", "two-clique random instances");
    int s_n = 0, s_budget = 0;
    std::string s_eps, s_out;
    uint64_t s_seed = 0;
    bool s_seed_set = false;
    auto* s_sample = steiner->add_subcommand("sample");
    s_sample->add_option("--n", s_n)->required();
    s_sample->add_option("--eps", s_eps, "rational, e.g. 1/3")->required();
    s_sample->add_option("--seed", s_seed)->required()->each([&](const std::string&) { s_seed_set = true; });
    s_sample->add_option("--budget", s_budget)->required();
    s_sample->add_option("--out", s_out);

    // compose
    std::string cp_family, cp_h2, cp_lists, cp_out;
    uint64_t cp_cap = 1000000;
    auto* comp = app.add_subcommand("compose", "glue obstacle copies over a base graph");
    comp->add_option("--family", cp_family)->required();
    comp->add_option("--h2", cp_h2)->required();
    comp->add_option("--lists", cp_lists)->required();
    comp->add_option("--out", cp_out)->required();
    comp->add_option("--cap", cp_cap);

    app.require_subcommand(1);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help("", CLI::AppFormatMode::All);
            return exit_code::kPass;
        }
        std::cerr << e.what() << "\n";
        return exit_code::kInvalid;
    }

    try {
        if (thm2->parsed()) return cmd_build_thm2(ctx, b_a, b_t, b_out, false);
        if (thm3->parsed()) return cmd_build_thm2(ctx, b_a, b_t, b_out, true);
        if (thmkq->parsed()) return cmd_build_thmkq(ctx, kq_n, kq_num, kq_den, kq_q, kq_ks, kq_eps_prime, kq_cap, kq_out);
        if (ab->parsed()) return cmd_build_ab(ctx, ab_n, ab_m, ab_num, ab_den, ab_cap, ab_out);
        if (v_witness->parsed()) return cmd_verify_witness(ctx, v_file, v_minor, v_budget);
        if (v_percopy->parsed()) return cmd_verify_percopy(ctx, v_dir, v_cap);
        if (c_color->parsed()) return cmd_check_color(ctx, c_graph, c_lists, c_b, c_partial);
        if (c_assign->parsed()) return cmd_check_assignment(ctx, c_graph, c_lists, c_lambda);
        if (minor->parsed()) return cmd_minor(ctx, m_graph, m_t, m_budget);
        if (order->parsed()) return cmd_order(ctx, o_lhs, o_rhs);
        if (s_sample->parsed()) return cmd_steiner_sample(ctx, s_n, s_eps, s_seed, s_budget, s_out);
        if (comp->parsed()) return cmd_compose(ctx, cp_family, cp_h2, cp_lists, cp_out, cp_cap);
        std::cerr << "no subcommand\n";
        return exit_code::kInvalid;
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        std::cout << report_json("error", {}, "inconclusive", {{"reason", e.what()}}, ctx.ms()).dump(2) << "\n";
        return exit_code::kInconclusive;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        std::cout << report_json("error", {}, "invalid", {{"reason", e.what()}}, ctx.ms()).dump(2) << "\n";
        return exit_code::kInvalid;
    }
}

}  // namespace minorlist
