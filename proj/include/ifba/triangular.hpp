#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ifba {

// Absolute tolerance for equality predicates on [0,1] arithmetic.
inline constexpr double kTriangularEqTol = 1e-12;

enum class TNormKind { minimum, product, lukasiewicz, tabulated };
enum class TConormKind { maximum, probabilistic_sum, bounded_sum, tabulated };

std::string to_string(TNormKind kind);
std::string to_string(TConormKind kind);
TNormKind tnorm_kind_from_string(const std::string& name);
TConormKind tconorm_kind_from_string(const std::string& name);

// Sampled binary operation on [0,1]^2, evaluated by bilinear interpolation.
// Axes must be strictly increasing and span [0,1]. Values are stored as given;
// range conformance is the axiom checker's job, not the table's.
struct TabulatedGrid {
    std::vector<double> row_axis;
    std::vector<double> col_axis;
    std::vector<double> values; // row-major, row_axis.size() * col_axis.size()

    double value_at(std::size_t i, std::size_t j) const;
    double interpolate(double a, double b) const;
    void validate() const;

    // CSV layout: first row holds the column axis (corner cell ignored),
    // first column holds the row axis, interior cells the values.
    static TabulatedGrid from_csv(const std::filesystem::path& path);
};

struct TriangularNorm {
    TNormKind kind = TNormKind::minimum;
    std::optional<TabulatedGrid> table;
};

struct TriangularConorm {
    TConormKind kind = TConormKind::maximum;
    std::optional<TabulatedGrid> table;
};

double tnorm_eval(const TriangularNorm& op, double a, double b);
double tconorm_eval(const TriangularConorm& op, double a, double b);

struct TriangularWitness {
    std::vector<double> args; // the grid tuple that broke the axiom
    double lhs = 0.0;
    double rhs = 0.0;
};

struct TriangularAxiomRecord {
    std::string axiom; // commutativity | associativity | boundary | monotonicity
    bool pass = false;
    std::optional<TriangularWitness> witness;
};

struct TriangularAxiomReport {
    std::string op_name;
    int grid_resolution = 0;
    std::string interpolation; // "none" for closed-form kinds, "bilinear" for tabulated
    std::vector<TriangularAxiomRecord> axioms;

    bool all_pass() const;
    const TriangularAxiomRecord& record(const std::string& axiom) const;
};

// Exhaustive check of commutativity, associativity, boundary and monotonicity
// on the grid {0, 1/(g-1), ..., 1}. grid_resolution >= 3.
TriangularAxiomReport check_triangular_axioms(const TriangularNorm& op, int grid_resolution);
TriangularAxiomReport check_triangular_axioms(const TriangularConorm& op, int grid_resolution);

struct IdempotencyResult {
    bool idempotent = false;
    std::optional<double> witness; // first grid point a with op(a,a) != a
};

IdempotencyResult is_idempotent(const TriangularNorm& op, int grid_resolution);
IdempotencyResult is_idempotent(const TriangularConorm& op, int grid_resolution);

} // namespace ifba
