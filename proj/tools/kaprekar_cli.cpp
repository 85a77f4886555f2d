// kaprekar: trajectories, parametric class analysis, exhaustive verification
// and class-graph export for digit-subtraction routines.
//
// Exit codes: 0 success, 1 usage/parse error, 2 verification mismatch.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kaprekar/absorbing.hpp"
#include "kaprekar/dynamics.hpp"
#include "kaprekar/variants.hpp"

using namespace kaprekar;
namespace dyn = kaprekar::dynamics;
namespace var = kaprekar::variants;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    int width = 0;  // 0 = infer from the number where possible
    int base = 10;
    std::string process = "kaprekar";
    std::string format = "text";
    std::size_t max_steps = 1000;
};

int count_tokens(const std::string& text, int base) {
    if (base <= 10) return static_cast<int>(text.size());
    return static_cast<int>(std::count(text.begin(), text.end(), '.')) + 1;
}

bool is_transposition(const RunConfig& cfg) {
    if (cfg.process == "transposition") return true;
    if (cfg.process == "kaprekar") return false;
    throw std::invalid_argument("unknown process '" + cfg.process +
                                "' (expected kaprekar or transposition)");
}

void check_process_config(const RunConfig& cfg, int width) {
    if (is_transposition(cfg)) {
        if (cfg.base != 10)
            throw std::invalid_argument("the transposition process is defined for base 10");
        if (width < 2) throw std::invalid_argument("width must be >= 2");
    } else {
        if (width < 2 || width > 5)
            throw std::invalid_argument(
                "the routine's class parameterization covers widths 2-5");
    }
}

ParamVector annotate(const DigitVector& n, bool transposition) {
    if (transposition) return ParamVector(alpha_of(n));
    return extract_params(n);
}

std::string terminal_name(dyn::Terminal t) {
    switch (t) {
        case dyn::Terminal::fixed_point: return "fixed_point";
        case dyn::Terminal::entered_cycle: return "entered_cycle";
        case dyn::Terminal::step_limit: return "step_limit";
    }
    return "";
}

// ---- trajectory ----------------------------------------------------------

void run_trajectory(const std::string& number, const RunConfig& cfg) {
    int width = cfg.width ? cfg.width : count_tokens(number, cfg.base);
    check_process_config(cfg, width);
    bool transposition = is_transposition(cfg);
    DigitVector start = parse_number(number, cfg.base, width);
    if (is_excluded(start))
        throw std::domain_error("excluded input: " + start.to_string() +
                                " has all digits equal");
    dyn::StepFn step;
    if (transposition)
        step = [](const DigitVector& n) { return var::transposition_step(n); };
    else
        step = [](const DigitVector& n) { return kaprekar_step(n); };
    dyn::Trajectory t = dyn::iterate_trajectory(start, cfg.max_steps, step);

    if (cfg.format == "json") {
        ordered_json doc;
        doc["process"] = cfg.process;
        doc["width"] = width;
        doc["base"] = cfg.base;
        doc["start"] = start.to_string();
        doc["steps"] = ordered_json::array();
        for (const DigitVector& s : t.steps)
            doc["steps"].push_back({{"number", s.to_string()},
                                    {"class", annotate(s, transposition).to_string()}});
        doc["terminal"] = terminal_name(t.terminal);
        if (t.cycle_start_index) doc["cycle_start_index"] = *t.cycle_start_index;
        doc["cycle_length"] = t.cycle_length();
        std::cout << doc.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        std::cout << t.steps[i].to_string() << "  "
                  << annotate(t.steps[i], transposition).to_string();
        if (i + 1 == t.steps.size()) {
            if (t.terminal == dyn::Terminal::fixed_point)
                std::cout << "  [fixed point]";
            else if (t.terminal == dyn::Terminal::entered_cycle)
                std::cout << "  [entered cycle of length " << t.cycle_length() << "]";
            else
                std::cout << "  [step limit]";
        }
        std::cout << "\n";
    }
}

// ---- analyze -------------------------------------------------------------

struct Analysis {
    dyn::ClassGraph graph;
    std::vector<dyn::FixedPoint> fixed;
    std::vector<std::string> rejections;
    std::vector<dyn::Cycle> cycles;
    std::size_t transient = 0;
};

Analysis analyze(const RunConfig& cfg) {
    Analysis a;
    if (is_transposition(cfg)) {
        if (cfg.width < 3)
            throw std::invalid_argument("transposition analysis needs width >= 3");
        a.graph = var::variant_class_graph(cfg.width, cfg.base);
        for (std::size_t i = 0; i < a.graph.nodes.size(); ++i)
            if (a.graph.successor[i] == i)
                a.fixed.push_back({a.graph.via[i], a.graph.nodes[i]});
    } else {
        KiTable table = builtin_table(cfg.width, cfg.base);
        a.graph = dyn::build_class_graph(table);
        dyn::FixedPointReport fp = dyn::fixed_points(table);
        a.fixed = fp.points;
        a.rejections = fp.rejections;
    }
    a.cycles = dyn::find_cycles(a.graph);
    a.transient = dyn::max_transient(a.graph);
    return a;
}

void run_analyze(const RunConfig& cfg) {
    check_process_config(cfg, cfg.width);
    Analysis a = analyze(cfg);

    if (cfg.format == "json") {
        ordered_json doc;
        doc["process"] = cfg.process;
        doc["width"] = cfg.width;
        doc["base"] = cfg.base;
        doc["classes"] = a.graph.nodes.size();
        doc["fixed_points"] = ordered_json::array();
        for (const dyn::FixedPoint& f : a.fixed)
            doc["fixed_points"].push_back(
                {{"class", f.cls.to_string()},
                 {"via", f.via},
                 {"number", class_image(f.cls, cfg.width, cfg.base).to_string()}});
        doc["rejected_candidates"] = a.rejections;
        doc["cycles"] = ordered_json::array();
        for (const dyn::Cycle& c : a.cycles) {
            ordered_json jc;
            jc["classes"] = ordered_json::array();
            for (const ParamVector& p : c.classes) jc["classes"].push_back(p.to_string());
            jc["numbers"] = ordered_json::array();
            for (const DigitVector& n : c.numbers) jc["numbers"].push_back(n.to_string());
            jc["length"] = c.length();
            doc["cycles"].push_back(std::move(jc));
        }
        doc["max_class_transient"] = a.transient;
        std::cout << doc.dump(2) << "\n";
        return;
    }

    std::cout << "process: " << cfg.process << "  width: " << cfg.width
              << "  base: " << cfg.base << "\n";
    std::cout << "feasible classes: " << a.graph.nodes.size() << "\n";
    if (a.fixed.empty()) {
        std::cout << "fixed points: none\n";
    } else {
        std::cout << "fixed points (" << a.fixed.size() << "):\n";
        for (const dyn::FixedPoint& f : a.fixed)
            std::cout << "  " << f.cls.to_string() << " via " << f.via << " -> "
                      << class_image(f.cls, cfg.width, cfg.base).to_string() << "\n";
    }
    if (!a.rejections.empty()) {
        std::cout << "rejected balance candidates (" << a.rejections.size() << "):\n";
        for (const std::string& r : a.rejections) std::cout << "  " << r << "\n";
    }
    std::cout << "cycles (" << a.cycles.size() << "):\n";
    for (const dyn::Cycle& c : a.cycles) {
        std::cout << "  length " << c.length() << ":";
        for (const ParamVector& p : c.classes) std::cout << " " << p.to_string();
        std::cout << " ; numbers:";
        for (const DigitVector& n : c.numbers) std::cout << " " << n.to_string();
        std::cout << "\n";
    }
    std::cout << "max class transient: " << a.transient << " steps\n";
}

// ---- verify --------------------------------------------------------------

int run_verify(const RunConfig& cfg, bool show_table) {
    if (is_transposition(cfg))
        throw std::invalid_argument("verify covers the routine's tables; use analyze for "
                                    "the transposition process");
    if (cfg.width < 2 || cfg.width > 5)
        throw std::invalid_argument("verify needs width 2-5");
    KiTable table = builtin_table(cfg.width, cfg.base);
    std::vector<VerificationReport> reports;
    reports.push_back(verify_table(table));
    reports.push_back(verify_oracle_agreement(table));
    reports.push_back(absorbing::check_closure(
        absorbing::enumerate_image_set(cfg.width, cfg.base)));
    if ((cfg.width == 4 || cfg.width == 5) && cfg.base == 10)
        reports.push_back(absorbing::check_predicate_equivalence(cfg.width));
    try {
        reports.push_back(dyn::certify_cycles(table, dyn::find_cycles(table)));
    } catch (const std::domain_error& e) {
        VerificationReport broken;
        broken.title = "symbolic cycle certification, width " + std::to_string(cfg.width) +
                       ", base " + std::to_string(cfg.base);
        broken.mismatches.push_back(std::string("class graph cannot be built: ") + e.what());
        reports.push_back(std::move(broken));
    }

    bool all_ok = true;
    for (const VerificationReport& r : reports) all_ok = all_ok && r.ok();

    if (cfg.format == "json") {
        ordered_json doc;
        if (show_table) doc["table"] = table_report(table);
        doc["checks"] = ordered_json::array();
        for (const VerificationReport& r : reports) {
            ordered_json jr;
            jr["title"] = r.title;
            jr["cases_checked"] = r.cases_checked;
            jr["ok"] = r.ok();
            jr["mismatches"] = r.mismatches;
            jr["totality_violations"] = r.totality_violations;
            jr["overlap_disagreements"] = r.overlap_disagreements;
            jr["deviations"] = r.deviations;
            doc["checks"].push_back(std::move(jr));
        }
        doc["ok"] = all_ok;
        std::cout << doc.dump(2) << "\n";
    } else {
        if (show_table) std::cout << table_report(table) << "\n";
        for (const VerificationReport& r : reports) std::cout << r.to_string() << "\n";
        std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_ok ? 0 : 2;
}

// ---- graph ---------------------------------------------------------------

void run_graph(const RunConfig& cfg) {
    check_process_config(cfg, cfg.width);
    dyn::ClassGraph g;
    if (is_transposition(cfg)) {
        if (cfg.width < 3)
            throw std::invalid_argument("transposition graphs need width >= 3");
        g = var::variant_class_graph(cfg.width, cfg.base);
    } else {
        g = dyn::build_class_graph(builtin_table(cfg.width, cfg.base));
    }
    std::cout << dyn::export_graph(g, dyn::parse_graph_format(cfg.format));
}

// ---- absorbing -----------------------------------------------------------

void run_absorbing_list(const RunConfig& cfg) {
    std::cout << absorbing::enumerate_image_set(cfg.width, cfg.base).to_text();
}

void run_absorbing_check(const std::string& number, const RunConfig& cfg) {
    int width = cfg.width ? cfg.width : count_tokens(number, cfg.base);
    DigitVector n = parse_number(number, cfg.base, width);
    bool member;
    std::string how;
    if ((width == 4 || width == 5) && cfg.base == 10) {
        member = absorbing::image_predicate(n);
        how = member ? "matches the image digit shape" : "fails the image digit shape";
    } else {
        member = absorbing::enumerate_image_set(width, cfg.base).contains(n);
        how = member ? "found by enumeration" : "not found by enumeration";
    }
    std::cout << n.to_string() << ": " << (member ? "member of B" : "not in B") << width
              << " (" << how << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kaprekar digit-subtraction routine: trajectories, parametric classes, "
                 "exhaustive verification, class graphs"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string number;
    bool show_table = false;
    int exit_code = 0;

    auto add_common = [&](CLI::App* cmd, bool with_process) {
        cmd->add_option("--width", cfg.width,
                        "digit count (inferred from the number where one is given)");
        cmd->add_option("--base", cfg.base, "radix (default 10)");
        if (with_process)
            cmd->add_option("--process", cfg.process, "kaprekar (default) or transposition");
    };

    CLI::App* traj = app.add_subcommand("trajectory", "iterate the process from a number");
    traj->add_option("number", number, "starting number, e.g. 8082 or 53.99")->required();
    add_common(traj, true);
    traj->add_option("--max-steps", cfg.max_steps, "step limit (default 1000)");
    traj->add_option("--format", cfg.format, "text (default) or json");
    traj->callback([&] { run_trajectory(number, cfg); });

    CLI::App* ana =
        app.add_subcommand("analyze", "classes, fixed points, cycles, convergence");
    add_common(ana, true);
    ana->add_option("--format", cfg.format, "text (default) or json");
    ana->callback([&] {
        if (!cfg.width) cfg.width = 4;
        run_analyze(cfg);
    });

    CLI::App* ver =
        app.add_subcommand("verify", "exhaustive oracle checks of the symbolic tables");
    add_common(ver, false);
    ver->add_flag("--show-table", show_table, "print the K_i table first");
    ver->add_option("--format", cfg.format, "text (default) or json");
    ver->callback([&] {
        if (!cfg.width) cfg.width = 4;
        exit_code = run_verify(cfg, show_table);
    });

    CLI::App* gra = app.add_subcommand("graph", "export the class graph");
    add_common(gra, true);
    gra->add_option("--format", cfg.format, "dot or json")->default_val("dot");
    gra->callback([&] {
        if (!cfg.width) cfg.width = 4;
        run_graph(cfg);
    });

    CLI::App* abs = app.add_subcommand("absorbing", "image-set membership");
    abs->require_subcommand(1);
    CLI::App* abs_list = abs->add_subcommand("list", "print every image, one per line");
    add_common(abs_list, false);
    abs_list->callback([&] {
        if (!cfg.width) cfg.width = 4;
        run_absorbing_list(cfg);
    });
    CLI::App* abs_check = abs->add_subcommand("check", "test one number for membership");
    abs_check->add_option("number", number, "number to test")->required();
    add_common(abs_check, false);
    abs_check->callback([&] { run_absorbing_check(number, cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
