#pragma once
// Iteration machinery: number trajectories, the functional graph on classes,
// exact fixed-point solving, cycle detection with symbolic certification,
// composed maps K^r, and DOT/JSON graph export.

#include <functional>

#include "kaprekar/param_maps.hpp"

namespace kaprekar::dynamics {

enum class Terminal { fixed_point, entered_cycle, step_limit };

struct Trajectory {
    std::vector<DigitVector> steps;  // starts with the input
    Terminal terminal = Terminal::step_limit;
    std::optional<std::size_t> cycle_start_index;

    /// Orbit length once a repeat occurred (1 for a fixed point); 0 if the
    /// step limit was hit first.
    std::size_t cycle_length() const;
};

using StepFn = std::function<DigitVector(const DigitVector&)>;

/// Iterates `step` until a previously seen value reappears or max_steps
/// applications have been made.
Trajectory iterate_trajectory(const DigitVector& start, std::size_t max_steps,
                              const StepFn& step);

Trajectory trajectory(const DigitVector& n, std::size_t max_steps = 1000);

/// Functional graph of step_class over all feasible classes.
struct ClassGraph {
    int width = 0;
    int base = 10;
    std::vector<ParamVector> nodes;      // sorted lexicographically
    std::vector<std::size_t> successor;  // index into nodes
    std::vector<std::string> via;        // id of the applied function

    std::size_t index_of(const ParamVector& p) const;  // throws if absent
    bool operator==(const ClassGraph&) const = default;
};

ClassGraph build_class_graph(const KiTable& table);

/// Longest tail: the maximum number of steps from any node to its cycle.
std::size_t max_transient(const ClassGraph& g);

struct FixedPoint {
    std::string via;  // function id (or composed sequence) that fixes the class
    ParamVector cls;
};

struct FixedPointReport {
    std::vector<FixedPoint> points;
    std::vector<std::string> rejections;  // candidates with their rejection reason
};

/// Solves alpha' = alpha, beta' = beta exactly for every function; keeps
/// solutions that are integral, feasible, and inside the function's domain.
/// Rejected candidates are reported with the reason (non-integral value,
/// infeasible class, or outside the domain).
FixedPointReport fixed_points(const KiTable& table);

struct Cycle {
    std::vector<ParamVector> classes;  // rotated so classes[0] is the lexicographic minimum
    std::vector<DigitVector> numbers;  // numbers[i] = class_image(classes[i])

    std::size_t length() const { return classes.size(); }
};

/// All cycles of the functional graph, rotation-normalized and sorted by
/// first class. A length-1 cycle is a fixed point.
std::vector<Cycle> find_cycles(const ClassGraph& g);
std::vector<Cycle> find_cycles(const KiTable& table);

/// Affine composition of a sequence of functions, first id applied first.
/// The domain is propagated back to the original parameters: a class lies in
/// it iff it lies in the first function's domain and every intermediate
/// image lies in the next one's.
struct ComposedMap {
    int width = 0;
    int base = 10;
    std::vector<std::string> sequence;
    AffineImage image;
    std::vector<LinearConstraint> domain;

    bool contains(const ParamVector& p) const;
};

ComposedMap compose(const KiTable& table, const std::vector<std::string>& ids);

/// Fixed classes of a composed map, same solving rules as fixed_points.
/// Degenerate systems (a whole line of solutions) fall back to enumerating
/// the feasible region.
FixedPointReport fixed_classes(const ComposedMap& map);

/// Certifies each cycle symbolically: some rotation of the applied-function
/// sequence must compose to a map with the rotation's starting class as an
/// in-domain fixed point.
VerificationReport certify_cycles(const KiTable& table, const std::vector<Cycle>& cycles);

enum class GraphFormat { dot, json };
GraphFormat parse_graph_format(std::string_view text);

/// Deterministic serialization. DOT: one edge per node, labeled with the
/// applied function id. JSON: {width, base, nodes, cycles, fixed_points}
/// with stable key order.
std::string export_graph(const ClassGraph& g, GraphFormat format);

/// Rebuilds a graph from its JSON export (cycles and fixed points are
/// derived data and are recomputed on the next export).
ClassGraph parse_graph_json(std::string_view text);

}  // namespace kaprekar::dynamics
