#include "kaprekar/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace kaprekar::dynamics {

std::size_t Trajectory::cycle_length() const {
    if (!cycle_start_index) return 0;
    return steps.size() - 1 - *cycle_start_index;
}

Trajectory iterate_trajectory(const DigitVector& start, std::size_t max_steps,
                              const StepFn& step) {
    if (max_steps < 1) throw std::invalid_argument("iterate_trajectory: max_steps must be >= 1");
    Trajectory t;
    t.steps.push_back(start);
    for (std::size_t i = 0; i < max_steps; ++i) {
        t.steps.push_back(step(t.steps.back()));
        auto first = std::find(t.steps.begin(), t.steps.end() - 1, t.steps.back());
        if (first != t.steps.end() - 1) {
            t.cycle_start_index = static_cast<std::size_t>(first - t.steps.begin());
            t.terminal = (t.cycle_length() == 1) ? Terminal::fixed_point
                                                 : Terminal::entered_cycle;
            return t;
        }
    }
    t.terminal = Terminal::step_limit;
    return t;
}

Trajectory trajectory(const DigitVector& n, std::size_t max_steps) {
    if (is_excluded(n))
        throw std::domain_error("trajectory: input " + n.to_string() +
                                " has all digits equal (excluded)");
    return iterate_trajectory(n, max_steps,
                              [](const DigitVector& m) { return kaprekar_step(m); });
}

std::size_t ClassGraph::index_of(const ParamVector& p) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
    if (it == nodes.end() || *it != p)
        throw std::domain_error("ClassGraph: class " + p.to_string() + " is not a node");
    return static_cast<std::size_t>(it - nodes.begin());
}

ClassGraph build_class_graph(const KiTable& table) {
    ClassGraph g;
    g.width = table.width;
    g.base = table.base;
    g.nodes = feasible_classes(table.width, table.base);
    g.successor.reserve(g.nodes.size());
    g.via.reserve(g.nodes.size());
    for (const ParamVector& p : g.nodes) {
        ClassStep step = step_class_via(table, p);
        g.successor.push_back(g.index_of(step.image));
        g.via.push_back(step.via);
    }
    return g;
}

namespace {

// Marks the nodes that lie on some cycle of the functional graph.
std::vector<bool> cycle_nodes(const ClassGraph& g) {
    std::vector<bool> on_cycle(g.nodes.size(), false);
    std::vector<int> state(g.nodes.size(), 0);  // 0 new, 1 in current walk, 2 done
    std::vector<std::size_t> path;
    for (std::size_t start = 0; start < g.nodes.size(); ++start) {
        if (state[start] != 0) continue;
        path.clear();
        std::size_t cur = start;
        while (state[cur] == 0) {
            state[cur] = 1;
            path.push_back(cur);
            cur = g.successor[cur];
        }
        if (state[cur] == 1) {
            // Closed a new cycle: everything from cur onward in the path.
            auto it = std::find(path.begin(), path.end(), cur);
            for (auto p = it; p != path.end(); ++p) on_cycle[*p] = true;
        }
        for (std::size_t node : path) state[node] = 2;
    }
    return on_cycle;
}

}  // namespace

std::size_t max_transient(const ClassGraph& g) {
    std::vector<bool> on_cycle = cycle_nodes(g);
    std::vector<std::size_t> depth(g.nodes.size(), 0);
    std::vector<bool> known(g.nodes.size(), false);
    std::size_t best = 0;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        stack.clear();
        std::size_t cur = i;
        while (!known[cur] && !on_cycle[cur]) {
            stack.push_back(cur);
            cur = g.successor[cur];
        }
        if (on_cycle[cur]) {
            depth[cur] = 0;
            known[cur] = true;
        }
        std::size_t d = depth[cur];
        while (!stack.empty()) {
            depth[stack.back()] = ++d;
            known[stack.back()] = true;
            stack.pop_back();
        }
        best = std::max(best, depth[i]);
    }
    return best;
}

std::vector<Cycle> find_cycles(const ClassGraph& g) {
    std::vector<bool> on_cycle = cycle_nodes(g);
    std::vector<bool> emitted(g.nodes.size(), false);
    std::vector<Cycle> cycles;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (!on_cycle[i] || emitted[i]) continue;
        std::vector<std::size_t> orbit;
        std::size_t cur = i;
        do {
            orbit.push_back(cur);
            emitted[cur] = true;
            cur = g.successor[cur];
        } while (cur != i);
        // Rotate so that the lexicographically smallest class leads.
        auto smallest = std::min_element(orbit.begin(), orbit.end(),
                                         [&](std::size_t a, std::size_t b) {
                                             return g.nodes[a] < g.nodes[b];
                                         });
        std::rotate(orbit.begin(), smallest, orbit.end());
        Cycle c;
        for (std::size_t node : orbit) {
            c.classes.push_back(g.nodes[node]);
            c.numbers.push_back(class_image(g.nodes[node], g.width, g.base));
        }
        cycles.push_back(std::move(c));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.classes[0] < b.classes[0]; });
    return cycles;
}

std::vector<Cycle> find_cycles(const KiTable& table) {
    return find_cycles(build_class_graph(table));
}

namespace {

std::string render_ratio(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

struct Candidate {
    bool exists = false;
    bool integral = false;
    ParamVector value;
    std::string text;  // rendering of a non-integral solution
};

// Exact solve of image(p) = p. Returns nullopt when the system is
// degenerate (none or infinitely many solutions); the caller then falls
// back to enumerating the feasible region.
std::optional<Candidate> solve_unique(const AffineImage& image) {
    const AffineRule& ar = image.alpha_rule;
    if (!image.beta_rule) {
        long long a = ar.c_alpha - 1;  // a*alpha = -c0
        if (a == 0) return std::nullopt;
        Candidate c;
        c.exists = true;
        if (-ar.c0 % a == 0) {
            c.integral = true;
            c.value = ParamVector(static_cast<int>(-ar.c0 / a));
        } else {
            c.text = "α = " + render_ratio(-ar.c0, a);
        }
        return c;
    }
    const AffineRule& br = *image.beta_rule;
    // (ca-1)·α + cb·β = -c0 ;  ca'·α + (cb'-1)·β = -c0'
    __int128 a11 = ar.c_alpha - 1, a12 = ar.c_beta, r1 = -ar.c0;
    __int128 a21 = br.c_alpha, a22 = br.c_beta - 1, r2 = -br.c0;
    __int128 det = a11 * a22 - a12 * a21;
    if (det == 0) return std::nullopt;
    __int128 num_a = r1 * a22 - a12 * r2;
    __int128 num_b = a11 * r2 - r1 * a21;
    Candidate c;
    c.exists = true;
    if (num_a % det == 0 && num_b % det == 0) {
        c.integral = true;
        c.value = ParamVector(static_cast<int>(num_a / det), static_cast<int>(num_b / det));
    } else {
        c.text = "(α, β) = (" +
                 render_ratio(static_cast<long long>(num_a), static_cast<long long>(det)) +
                 ", " +
                 render_ratio(static_cast<long long>(num_b), static_cast<long long>(det)) +
                 ")";
    }
    return c;
}

bool satisfies_all(const std::vector<LinearConstraint>& dom, const ParamVector& p) {
    return std::all_of(dom.begin(), dom.end(),
                       [&](const LinearConstraint& c) { return c.satisfied(p); });
}

void solve_fixed(const std::string& label, const AffineImage& image,
                 const std::vector<LinearConstraint>& domain, int width, int base,
                 FixedPointReport& out) {
    std::optional<Candidate> c = solve_unique(image);
    if (!c) {
        // Degenerate system: enumerate the feasible region directly.
        bool any = false;
        for (const ParamVector& p : feasible_classes(width, base)) {
            if (image.apply(p) == p && satisfies_all(domain, p)) {
                out.points.push_back({label, p});
                any = true;
            }
        }
        if (!any)
            out.rejections.push_back(label + ": no feasible in-domain solution");
        return;
    }
    if (!c->integral) {
        out.rejections.push_back(label + ": candidate " + c->text + " rejected (non-integral)");
        return;
    }
    if (!is_feasible(c->value, width, base)) {
        out.rejections.push_back(label + ": candidate " + c->value.to_string() +
                                 " rejected (infeasible)");
        return;
    }
    if (!satisfies_all(domain, c->value)) {
        out.rejections.push_back(label + ": candidate " + c->value.to_string() +
                                 " rejected (outside domain)");
        return;
    }
    out.points.push_back({label, c->value});
}

}  // namespace

FixedPointReport fixed_points(const KiTable& table) {
    FixedPointReport report;
    for (const KiFunction& f : table.functions)
        solve_fixed(f.id, f.image, f.full_domain(), table.width, table.base, report);
    return report;
}

bool ComposedMap::contains(const ParamVector& p) const {
    if (image.beta_rule.has_value() != p.beta.has_value()) return false;
    return std::all_of(domain.begin(), domain.end(),
                       [&](const LinearConstraint& c) { return c.satisfied(p); });
}

ComposedMap compose(const KiTable& table, const std::vector<std::string>& ids) {
    if (ids.empty()) throw std::invalid_argument("compose: empty function sequence");
    ComposedMap map;
    map.width = table.width;
    map.base = table.base;
    map.sequence = ids;
    bool two_param = table.width >= 4;
    AffineRule cur_a{0, 1, 0};
    AffineRule cur_b{0, 0, 1};  // unused for single-parameter tables

    auto substitute = [&](const AffineRule& r) {
        return AffineRule{r.c0 + r.c_alpha * cur_a.c0 + r.c_beta * cur_b.c0,
                          r.c_alpha * cur_a.c_alpha + r.c_beta * cur_b.c_alpha,
                          r.c_alpha * cur_a.c_beta + r.c_beta * cur_b.c_beta};
    };

    for (const std::string& id : ids) {
        const KiFunction& f = table.function(id);
        for (const LinearConstraint& c : f.full_domain()) {
            AffineRule rewritten = substitute(AffineRule{c.c0, c.c_alpha, c.c_beta});
            map.domain.push_back(
                {rewritten.c0, rewritten.c_alpha, rewritten.c_beta, c.relation});
        }
        AffineRule next_a = substitute(f.image.alpha_rule);
        AffineRule next_b =
            f.image.beta_rule ? substitute(*f.image.beta_rule) : AffineRule{0, 0, 0};
        cur_a = next_a;
        cur_b = next_b;
    }
    map.image.alpha_rule = cur_a;
    if (two_param) map.image.beta_rule = cur_b;
    return map;
}

FixedPointReport fixed_classes(const ComposedMap& map) {
    FixedPointReport report;
    std::string label;
    for (const std::string& id : map.sequence) label += (label.empty() ? "" : "∘") + id;
    solve_fixed(label, map.image, map.domain, map.width, map.base, report);
    return report;
}

VerificationReport certify_cycles(const KiTable& table, const std::vector<Cycle>& cycles) {
    VerificationReport report;
    report.title = "symbolic cycle certification, width " + std::to_string(table.width) +
                   ", base " + std::to_string(table.base);
    for (const Cycle& cycle : cycles) {
        ++report.cases_checked;
        std::vector<std::string> ids;
        for (const ParamVector& p : cycle.classes)
            ids.push_back(step_class_via(table, p).via);
        bool certified = false;
        for (std::size_t rot = 0; rot < ids.size() && !certified; ++rot) {
            std::vector<std::string> seq(ids.begin() + static_cast<std::ptrdiff_t>(rot),
                                         ids.end());
            seq.insert(seq.end(), ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(rot));
            ComposedMap composed = compose(table, seq);
            const ParamVector& start = cycle.classes[rot];
            if (composed.contains(start) && composed.image.apply(start) == start) {
                std::string chain;
                for (const std::string& id : seq) chain += (chain.empty() ? "" : "∘") + id;
                report.notes.push_back("cycle at " + start.to_string() + " (length " +
                                       std::to_string(cycle.length()) + ") certified by " +
                                       chain + " = " + composed.image.to_string());
                certified = true;
            }
        }
        if (!certified)
            report.mismatches.push_back("cycle at " + cycle.classes[0].to_string() +
                                        " (length " + std::to_string(cycle.length()) +
                                        "): no rotation certifies it");
    }
    return report;
}

GraphFormat parse_graph_format(std::string_view text) {
    if (text == "dot") return GraphFormat::dot;
    if (text == "json") return GraphFormat::json;
    throw std::invalid_argument("unsupported graph format '" + std::string(text) +
                                "' (expected dot or json)");
}

std::string export_graph(const ClassGraph& g, GraphFormat format) {
    if (format == GraphFormat::dot) {
        std::string out = "digraph classes_w" + std::to_string(g.width) + "_b" +
                          std::to_string(g.base) + " {\n";
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            out += "  \"" + g.nodes[i].to_string() + "\" -> \"" +
                   g.nodes[g.successor[i]].to_string() + "\" [label=\"" + g.via[i] + "\"];\n";
        }
        out += "}\n";
        return out;
    }
    nlohmann::ordered_json doc;
    doc["width"] = g.width;
    doc["base"] = g.base;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        doc["nodes"].push_back({{"class", g.nodes[i].to_string()},
                                {"successor", g.nodes[g.successor[i]].to_string()},
                                {"via", g.via[i]}});
    }
    doc["cycles"] = nlohmann::ordered_json::array();
    for (const Cycle& c : find_cycles(g)) {
        nlohmann::ordered_json jc;
        jc["classes"] = nlohmann::ordered_json::array();
        for (const ParamVector& p : c.classes) jc["classes"].push_back(p.to_string());
        jc["numbers"] = nlohmann::ordered_json::array();
        for (const DigitVector& n : c.numbers) jc["numbers"].push_back(n.to_string());
        jc["length"] = c.length();
        doc["cycles"].push_back(std::move(jc));
    }
    doc["fixed_points"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (g.successor[i] == i)
            doc["fixed_points"].push_back(
                {{"class", g.nodes[i].to_string()}, {"via", g.via[i]}});
    }
    return doc.dump(2) + "\n";
}

ClassGraph parse_graph_json(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    ClassGraph g;
    g.width = doc.at("width").get<int>();
    g.base = doc.at("base").get<int>();
    for (const auto& node : doc.at("nodes"))
        g.nodes.push_back(parse_params(node.at("class").get<std::string>()));
    if (!std::is_sorted(g.nodes.begin(), g.nodes.end()))
        throw std::invalid_argument("parse_graph_json: nodes are not sorted");
    for (const auto& node : doc.at("nodes")) {
        g.successor.push_back(g.index_of(parse_params(node.at("successor").get<std::string>())));
        g.via.push_back(node.at("via").get<std::string>());
    }
    return g;
}

}  // namespace kaprekar::dynamics
