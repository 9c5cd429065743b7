#include "dv/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dv/generators.hpp"
#include "dv/hitting_set.hpp"
#include "dv/io.hpp"
#include "dv/reductions.hpp"
#include "dv/solvers.hpp"

namespace dv::cli {

namespace {

using nlohmann::json;

std::string fnv1a_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::uint64_t hash = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << hash;
    return "fnv1a:" + hex.str();
}

struct command_context {
    std::string command;
    std::string input_path;
    bool json_mode = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    json doc;

    void finish(std::ostream& out) {
        if (!json_mode) return;
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        doc["command"] = command;
        if (!input_path.empty()) doc["input"] = {{"path", input_path}, {"digest", fnv1a_digest(input_path)}};
        doc["timings"] = {{"total_ms", ms}};
        out << doc.dump(2) << '\n';
    }
};

std::string regime_name(regime_tag tag) {
    switch (tag) {
        case regime_tag::polynomial_binary: return "polynomial";
        case regime_tag::np_complete_binary: return "NP-complete";
        case regime_tag::unknown_non_binary: return "unclassified";
    }
    return "?";
}

json profile_json(const distance_profile_t& p) { return {{"h", p.h}, {"H", p.H}}; }

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::istringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            out.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw domain_error(what + ": bad integer '" + token + "'");
        }
    }
    return out;
}

int cmd_solve(const std::string& input, int k, const std::string& algo, command_context& ctx, std::ostream& out,
              std::ostream& err) {
    if (k < 0) throw domain_error("budget k must be non-negative");
    matrix m = load_matrix(input);
    instance inst(m, std::min(k, m.d()));

    strategy s = strategy::auto_select;
    if (algo == "exact") s = strategy::exact;
    else if (algo == "branch") s = strategy::branch;
    else if (algo == "poly") s = strategy::poly;
    else if (algo != "auto") throw domain_error("unknown algorithm '" + algo + "'");

    auto outcome = solve(inst, s);
    bool yes = outcome.sol.has_value();
    err << "strategy: " << outcome.report.path << '\n';

    ctx.doc["result"] = yes ? "yes" : "no";
    ctx.doc["k"] = k;
    ctx.doc["strategy"] = outcome.report.path;
    if (m.n() >= 2) ctx.doc["profile"] = profile_json(distance_profile(m));
    if (outcome.report.detected) ctx.doc["regime"] = regime_name(outcome.report.detected->tag);
    if (outcome.report.reduced_profile) ctx.doc["reduced_profile"] = profile_json(*outcome.report.reduced_profile);
    if (yes) ctx.doc["solution"] = outcome.sol->columns;

    if (!ctx.json_mode) out << (yes ? format_solution(*outcome.sol) : "no") << '\n';
    return yes ? 0 : 1;
}

int cmd_classify(const std::string& input, bool explain, command_context& ctx, std::ostream& out, std::ostream&) {
    matrix m = load_matrix(input);
    if (m.n() < 2) throw domain_error("classify: needs at least two rows");
    auto p = distance_profile(m);
    auto r = classify(p, static_cast<int>(m.alphabet().size()));

    std::ostringstream line;
    line << regime_name(r.tag) << " regime (h=" << p.h << ", H=" << p.H;
    if (r.tag == regime_tag::unknown_non_binary) line << ", |alphabet|=" << m.alphabet().size();
    line << ")";

    ctx.doc["result"] = "ok";
    ctx.doc["regime"] = regime_name(r.tag);
    ctx.doc["profile"] = profile_json(p);
    ctx.doc["rule"] = r.reason;

    if (!ctx.json_mode) {
        out << line.str() << '\n';
        if (explain) {
            out << "rule: " << r.reason << '\n';
            if (m.binary()) {
                std::vector<int> non_null;
                for (int i = 1; i <= m.n(); ++i)
                    if (weight(m.bits(i)) > 0) non_null.push_back(i);
                if (non_null.size() >= 2) {
                    auto family = column_system(m, non_null);
                    if (auto s = sunflower_core(family)) {
                        out << "sunflower: core {";
                        for (std::size_t i = 0; i < s->core.size(); ++i) out << (i ? "," : "") << s->core[i];
                        out << "} with " << s->petals.size() << " petals\n";
                    } else {
                        out << "sunflower: column system of non-null rows is not a sunflower\n";
                    }
                }
            }
        }
    } else if (explain) {
        ctx.doc["explain"] = r.reason;
    }
    return 0;
}

int cmd_reduce(const std::string& input, const std::string& rules, const std::string& output, command_context& ctx,
               std::ostream& out, std::ostream& err) {
    matrix m = load_matrix(input);
    reduction_report total;
    total.kept_columns.resize(static_cast<std::size_t>(m.d()));
    for (int j = 1; j <= m.d(); ++j) total.kept_columns[static_cast<std::size_t>(j - 1)] = j;

    std::istringstream ss(rules);
    std::string rule;
    while (std::getline(ss, rule, ',')) {
        reduction_result step = [&] {
            if (rule == "preprocess") return preprocess_binary(m);
            if (rule == "inessential") return apply_rule_inessential(m);
            if (rule == "dominance") return dominance_reduce(m);
            throw domain_error("unknown rule '" + rule + "' (expected preprocess, inessential, dominance)");
        }();
        total = chain_reports(total, step.report);
        m = step.m;
    }

    err << "reduce: complemented " << total.complemented_columns << ", duplicates removed "
        << total.duplicate_columns_removed << ", inessential removed " << total.inessential_columns_removed
        << ", dominated removed " << total.dominated_columns_removed << "; d' = " << m.d() << '\n';

    ctx.doc["result"] = "ok";
    ctx.doc["report"] = {{"complemented", total.complemented_columns},
                         {"duplicates_removed", total.duplicate_columns_removed},
                         {"inessential_removed", total.inessential_columns_removed},
                         {"dominated_removed", total.dominated_columns_removed},
                         {"columns", m.d()}};

    if (!output.empty()) {
        save_matrix(m, output);
    } else if (!ctx.json_mode) {
        write_matrix(m, out);
    } else {
        std::ostringstream text;
        write_matrix(m, text);
        ctx.doc["matrix"] = text.str();
    }
    return 0;
}

int cmd_kernel(const std::string& input, int k, const std::string& param, const std::string& output,
               command_context& ctx, std::ostream& out, std::ostream& err) {
    matrix m = load_matrix(input);
    if (k < 0 || k > m.d()) throw domain_error("budget k must lie in [0, d]");
    instance inst(m, k);

    std::optional<instance> kernel;
    if (param == "sigma-k") {
        kernel = kernelize_sigma_k(inst);
    } else if (param == "h-k") {
        kernel = kernelize_h_k(inst);
    } else {
        throw domain_error("unknown kernel parameterization '" + param + "' (expected sigma-k or h-k)");
    }

    bool definite_no = !kernel.has_value();
    if (definite_no) kernel = instance(matrix::from_rows({{0}, {1}}), 0);  // trivial no-instance

    err << "kernel: " << (definite_no ? "definite-no; emitting trivial no-instance" : "ok") << "; n' = "
        << kernel->m.n() << ", d' = " << kernel->m.d() << ", k' = " << kernel->k << '\n';

    ctx.doc["result"] = definite_no ? "definite-no" : "ok";
    ctx.doc["kernel"] = {{"n", kernel->m.n()}, {"d", kernel->m.d()}, {"k", kernel->k}};

    if (!output.empty()) {
        save_matrix(kernel->m, output);
    } else if (!ctx.json_mode) {
        write_matrix(kernel->m, out);
    } else {
        std::ostringstream text;
        write_matrix(kernel->m, text);
        ctx.doc["matrix"] = text.str();
    }
    return 0;
}

int cmd_approx(const std::string& input, command_context& ctx, std::ostream& out, std::ostream& err) {
    matrix m = load_matrix(input);
    if (m.n() < 2) throw domain_error("approx: needs at least two rows");
    auto sol = greedy_factor_h(instance(m, m.d()));
    auto p = distance_profile(m);
    err << "approx: size " << sol.size() << ", factor bound H = " << p.H << '\n';

    ctx.doc["result"] = "ok";
    ctx.doc["solution"] = sol.columns;
    ctx.doc["profile"] = profile_json(p);
    if (!ctx.json_mode) out << format_solution(sol) << '\n';
    return 0;
}

int cmd_verify(const std::string& input, const std::string& columns, command_context& ctx, std::ostream& out,
               std::ostream&) {
    matrix m = load_matrix(input);
    solution sol = make_solution(parse_int_list(columns, "--columns"), m.d());
    bool ok = is_distinguishing(m, sol);
    ctx.doc["result"] = ok ? "valid" : "invalid";
    ctx.doc["solution"] = sol.columns;
    if (!ctx.json_mode) out << (ok ? "valid" : "invalid") << '\n';
    return ok ? 0 : 1;
}

struct generate_options {
    std::string kind;
    std::string output;
    std::string graph_path;
    std::string base_path;
    std::uint64_t seed = 0;
    int k = 0;
    int a = 0, b = 0;
    int rows = 6, cols = 8, alpha = 1, beta = 2, attempts = 2000;
    int core = 0;
    std::string petals;
};

int cmd_generate(const generate_options& opt, command_context& ctx, std::ostream& out, std::ostream& err) {
    std::optional<matrix> m;
    json meta{{"kind", opt.kind}, {"seed", opt.seed}, {"rng", seeded_rng::algorithm}};

    if (opt.kind == "d3is") {
        auto g = load_graph(opt.graph_path);
        auto result = from_graph_d3is(g, opt.k);
        if (result.trivial_verdict.has_value()) {
            throw domain_error("d3is generator refused a degenerate graph (" + result.note +
                               "); direct verdict: " + (*result.trivial_verdict ? "yes" : "no"));
        }
        m = result.inst->m;
        meta["k"] = result.inst->k;
    } else if (opt.kind == "pad1" || opt.kind == "pad2") {
        matrix base = load_matrix(opt.base_path);
        instance seed_inst(base, std::min(opt.k, base.d()));
        instance padded = opt.kind == "pad1" ? pad_case1(seed_inst, opt.b) : pad_case2(seed_inst, opt.a, opt.b);
        m = padded.m;
        meta["k"] = padded.k;
        meta["a"] = opt.a;
        meta["b"] = opt.b;
    } else if (opt.kind == "sunflower") {
        auto petals = parse_int_list(opt.petals, "--petals");
        m = gen_sunflower(petals, opt.core, opt.seed);
        meta["core"] = opt.core;
        meta["petals"] = petals;
    } else if (opt.kind == "random") {
        m = gen_random_profile(opt.rows, opt.cols, opt.alpha, opt.beta, opt.seed, opt.attempts);
        if (!m) throw domain_error("random generator exhausted its attempts without hitting profile (" +
                                   std::to_string(opt.alpha) + "," + std::to_string(opt.beta) + ")");
    } else {
        throw domain_error("unknown kind '" + opt.kind + "'");
    }

    if (m->n() >= 2) {
        auto p = distance_profile(*m);
        meta["profile"] = profile_json(p);
    }

    if (opt.output.empty()) throw domain_error("generate: --output is required");
    save_matrix(*m, opt.output);
    std::ofstream side(opt.output + ".meta.json");
    side << meta.dump(2) << '\n';
    err << "generate: wrote " << opt.output << " (" << m->n() << "x" << m->d() << ")\n";

    ctx.doc["result"] = "ok";
    ctx.doc["metadata"] = meta;
    if (!ctx.json_mode) out << opt.output << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distinct Vectors toolkit: keep few columns, keep all rows distinct"};
    app.require_subcommand(1);

    std::string input, output, algo = "auto", rules = "preprocess,inessential,dominance";
    std::string param = "sigma-k", columns;
    int k = 0;
    bool json_mode = false, explain = false;
    generate_options gen;

    auto* solve_cmd = app.add_subcommand("solve", "decide an instance and print a minimum solution");
    solve_cmd->add_option("--input", input)->required();
    solve_cmd->add_option("--k", k)->required();
    solve_cmd->add_option("--algo", algo)->check(CLI::IsMember({"auto", "exact", "branch", "poly"}));
    solve_cmd->add_flag("--json", json_mode);

    auto* classify_cmd = app.add_subcommand("classify", "report the complexity regime of the distance profile");
    classify_cmd->add_option("--input", input)->required();
    classify_cmd->add_flag("--explain", explain);
    classify_cmd->add_flag("--json", json_mode);

    auto* reduce_cmd = app.add_subcommand("reduce", "apply data-reduction rules");
    reduce_cmd->add_option("--input", input)->required();
    reduce_cmd->add_option("--rules", rules);
    reduce_cmd->add_option("--output", output);
    reduce_cmd->add_flag("--json", json_mode);

    auto* kernel_cmd = app.add_subcommand("kernel", "kernelize an instance");
    kernel_cmd->add_option("--input", input)->required();
    kernel_cmd->add_option("--k", k)->required();
    kernel_cmd->add_option("--param", param)->check(CLI::IsMember({"sigma-k", "h-k"}));
    kernel_cmd->add_option("--output", output);
    kernel_cmd->add_flag("--json", json_mode);

    auto* approx_cmd = app.add_subcommand("approx", "factor-H greedy approximation");
    approx_cmd->add_option("--input", input)->required();
    approx_cmd->add_flag("--json", json_mode);

    auto* generate_cmd = app.add_subcommand("generate", "construct instances with prescribed structure");
    generate_cmd->add_option("--kind", gen.kind)->required()->check(CLI::IsMember({"d3is", "pad1", "pad2", "sunflower", "random"}));
    generate_cmd->add_option("--output", gen.output)->required();
    generate_cmd->add_option("--seed", gen.seed);
    generate_cmd->add_option("--graph", gen.graph_path);
    generate_cmd->add_option("--base", gen.base_path);
    generate_cmd->add_option("--k", gen.k);
    generate_cmd->add_option("--a", gen.a);
    generate_cmd->add_option("--b", gen.b);
    generate_cmd->add_option("--rows", gen.rows);
    generate_cmd->add_option("--cols", gen.cols);
    generate_cmd->add_option("--alpha", gen.alpha);
    generate_cmd->add_option("--beta", gen.beta);
    generate_cmd->add_option("--attempts", gen.attempts);
    generate_cmd->add_option("--core", gen.core);
    generate_cmd->add_option("--petals", gen.petals);
    generate_cmd->add_flag("--json", json_mode);

    auto* verify_cmd = app.add_subcommand("verify", "check a column set against an instance");
    verify_cmd->add_option("--input", input)->required();
    verify_cmd->add_option("--columns", columns)->required();
    verify_cmd->add_flag("--json", json_mode);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    command_context ctx;
    ctx.json_mode = json_mode;
    ctx.input_path = input;

    try {
        int code = 2;
        if (solve_cmd->parsed()) {
            ctx.command = "solve";
            code = cmd_solve(input, k, algo, ctx, out, err);
        } else if (classify_cmd->parsed()) {
            ctx.command = "classify";
            code = cmd_classify(input, explain, ctx, out, err);
        } else if (reduce_cmd->parsed()) {
            ctx.command = "reduce";
            code = cmd_reduce(input, rules, output, ctx, out, err);
        } else if (kernel_cmd->parsed()) {
            ctx.command = "kernel";
            code = cmd_kernel(input, k, param, output, ctx, out, err);
        } else if (approx_cmd->parsed()) {
            ctx.command = "approx";
            code = cmd_approx(input, ctx, out, err);
        } else if (generate_cmd->parsed()) {
            ctx.command = "generate";
            ctx.input_path = gen.graph_path.empty() ? gen.base_path : gen.graph_path;
            code = cmd_generate(gen, ctx, out, err);
        } else if (verify_cmd->parsed()) {
            ctx.command = "verify";
            code = cmd_verify(input, columns, ctx, out, err);
        }
        ctx.finish(out);
        return code;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace dv::cli
