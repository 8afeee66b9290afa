#include "ifba/triangular.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ifba/csv.hpp"
#include "ifba/errors.hpp"

namespace ifba {

namespace {

void require_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw DomainError(std::string(name) + " must lie in [0,1], got " + std::to_string(v));
}

void require_grid(int grid_resolution) {
    if (grid_resolution < 3)
        throw DomainError("grid_resolution must be >= 3, got " + std::to_string(grid_resolution));
}

double grid_point(int i, int g) {
    return static_cast<double>(i) / static_cast<double>(g - 1);
}

// Locates the cell [axis[k], axis[k+1]] containing v; v is clamped to the
// axis hull so that out-of-range compositions (broken tables) stay evaluable
// inside the axiom checker.
std::pair<std::size_t, double> locate(const std::vector<double>& axis, double v) {
    const double lo = axis.front();
    const double hi = axis.back();
    v = std::clamp(v, lo, hi);
    auto it = std::upper_bound(axis.begin(), axis.end(), v);
    std::size_t k = (it == axis.begin()) ? 0 : static_cast<std::size_t>(it - axis.begin()) - 1;
    if (k + 1 >= axis.size()) k = axis.size() - 2;
    const double span = axis[k + 1] - axis[k];
    const double frac = span > 0.0 ? (v - axis[k]) / span : 0.0;
    return {k, frac};
}

} // namespace

std::string to_string(TNormKind kind) {
    switch (kind) {
        case TNormKind::minimum: return "minimum";
        case TNormKind::product: return "product";
        case TNormKind::lukasiewicz: return "lukasiewicz";
        case TNormKind::tabulated: return "tabulated";
    }
    return "unknown";
}

std::string to_string(TConormKind kind) {
    switch (kind) {
        case TConormKind::maximum: return "maximum";
        case TConormKind::probabilistic_sum: return "probabilistic_sum";
        case TConormKind::bounded_sum: return "bounded_sum";
        case TConormKind::tabulated: return "tabulated";
    }
    return "unknown";
}

TNormKind tnorm_kind_from_string(const std::string& name) {
    if (name == "minimum") return TNormKind::minimum;
    if (name == "product") return TNormKind::product;
    if (name == "lukasiewicz") return TNormKind::lukasiewicz;
    if (name == "tabulated") return TNormKind::tabulated;
    throw ConfigError("unknown t-norm kind: " + name);
}

TConormKind tconorm_kind_from_string(const std::string& name) {
    if (name == "maximum") return TConormKind::maximum;
    if (name == "probabilistic_sum") return TConormKind::probabilistic_sum;
    if (name == "bounded_sum") return TConormKind::bounded_sum;
    if (name == "tabulated") return TConormKind::tabulated;
    throw ConfigError("unknown t-conorm kind: " + name);
}

double TabulatedGrid::value_at(std::size_t i, std::size_t j) const {
    return values[i * col_axis.size() + j];
}

double TabulatedGrid::interpolate(double a, double b) const {
    const auto [i, fa] = locate(row_axis, a);
    const auto [j, fb] = locate(col_axis, b);
    const double v00 = value_at(i, j);
    const double v01 = value_at(i, j + 1);
    const double v10 = value_at(i + 1, j);
    const double v11 = value_at(i + 1, j + 1);
    return (1.0 - fa) * ((1.0 - fb) * v00 + fb * v01) +
           fa * ((1.0 - fb) * v10 + fb * v11);
}

void TabulatedGrid::validate() const {
    auto check_axis = [](const std::vector<double>& axis, const char* name) {
        if (axis.size() < 2)
            throw ConfigError(std::string(name) + " axis needs at least 2 points");
        for (std::size_t k = 0; k + 1 < axis.size(); ++k)
            if (!(axis[k] < axis[k + 1]))
                throw ConfigError(std::string(name) + " axis must be strictly increasing");
        if (axis.front() != 0.0 || axis.back() != 1.0)
            throw ConfigError(std::string(name) + " axis must span [0,1]");
    };
    check_axis(row_axis, "row");
    check_axis(col_axis, "column");
    if (values.size() != row_axis.size() * col_axis.size())
        throw ConfigError("table value count does not match axis sizes");
    for (double v : values)
        if (!std::isfinite(v)) throw ConfigError("table contains a non-finite value");
}

TabulatedGrid TabulatedGrid::from_csv(const std::filesystem::path& path) {
    const auto cells = csv::read_cells(path);
    if (cells.size() < 3)
        throw ConfigError("tabulated operation CSV needs at least 3 rows: " + path.string());
    const std::size_t width = cells.front().size();
    if (width < 3) throw ConfigError("tabulated operation CSV needs at least 3 columns");
    for (const auto& row : cells)
        if (row.size() != width)
            throw ConfigError("tabulated operation CSV must be strictly rectangular: " + path.string());

    TabulatedGrid grid;
    const std::string ctx = "table " + path.filename().string();
    for (std::size_t j = 1; j < width; ++j)
        grid.col_axis.push_back(csv::parse_double(cells[0][j], ctx + " column axis"));
    for (std::size_t i = 1; i < cells.size(); ++i) {
        grid.row_axis.push_back(csv::parse_double(cells[i][0], ctx + " row axis"));
        for (std::size_t j = 1; j < width; ++j)
            grid.values.push_back(csv::parse_double(cells[i][j], ctx + " values"));
    }
    grid.validate();
    return grid;
}

namespace {

// Raw evaluation, no input range check. The public entry points validate
// first; the axiom checker composes through this so broken tables can still
// be scored.
double eval_raw(const TriangularNorm& op, double a, double b) {
    switch (op.kind) {
        case TNormKind::minimum: return std::min(a, b);
        case TNormKind::product: return a * b;
        case TNormKind::lukasiewicz: return std::max(a + b - 1.0, 0.0);
        case TNormKind::tabulated: break;
    }
    if (!op.table || op.table->values.empty())
        throw ConfigError("tabulated t-norm has no table");
    return op.table->interpolate(a, b);
}

double eval_raw(const TriangularConorm& op, double a, double b) {
    switch (op.kind) {
        case TConormKind::maximum: return std::max(a, b);
        case TConormKind::probabilistic_sum: return a + b - a * b;
        case TConormKind::bounded_sum: return std::min(a + b, 1.0);
        case TConormKind::tabulated: break;
    }
    if (!op.table || op.table->values.empty())
        throw ConfigError("tabulated t-conorm has no table");
    return op.table->interpolate(a, b);
}

template <typename Op>
TriangularAxiomReport check_axioms_impl(const Op& op, int grid_resolution, double identity) {
    require_grid(grid_resolution);
    if constexpr (std::is_same_v<Op, TriangularNorm>) {
        if (op.kind == TNormKind::tabulated && (!op.table || op.table->values.empty()))
            throw ConfigError("tabulated t-norm has no table");
    } else {
        if (op.kind == TConormKind::tabulated && (!op.table || op.table->values.empty()))
            throw ConfigError("tabulated t-conorm has no table");
    }

    const int g = grid_resolution;
    auto f = [&op](double a, double b) { return eval_raw(op, a, b); };

    TriangularAxiomReport report;
    report.op_name = to_string(op.kind);
    report.grid_resolution = g;
    report.interpolation = op.table ? "bilinear" : "none";

    // Commutativity: f(a,b) == f(b,a).
    {
        TriangularAxiomRecord rec{"commutativity", true, std::nullopt};
        for (int i = 0; i < g && rec.pass; ++i)
            for (int j = i + 1; j < g && rec.pass; ++j) {
                const double a = grid_point(i, g), b = grid_point(j, g);
                const double lhs = f(a, b), rhs = f(b, a);
                if (std::abs(lhs - rhs) > kTriangularEqTol) {
                    rec.pass = false;
                    rec.witness = TriangularWitness{{a, b}, lhs, rhs};
                }
            }
        report.axioms.push_back(std::move(rec));
    }

    // Associativity: f(f(a,b),c) == f(a,f(b,c)).
    {
        TriangularAxiomRecord rec{"associativity", true, std::nullopt};
        for (int i = 0; i < g && rec.pass; ++i)
            for (int j = 0; j < g && rec.pass; ++j)
                for (int k = 0; k < g && rec.pass; ++k) {
                    const double a = grid_point(i, g), b = grid_point(j, g), c = grid_point(k, g);
                    const double lhs = f(f(a, b), c), rhs = f(a, f(b, c));
                    if (std::abs(lhs - rhs) > kTriangularEqTol) {
                        rec.pass = false;
                        rec.witness = TriangularWitness{{a, b, c}, lhs, rhs};
                    }
                }
        report.axioms.push_back(std::move(rec));
    }

    // Boundary: f(a, identity) == a. Scanned from the top corner, where
    // clipped or overflowing tables show up first.
    {
        TriangularAxiomRecord rec{"boundary", true, std::nullopt};
        for (int i = g - 1; i >= 0 && rec.pass; --i) {
            const double a = grid_point(i, g);
            const double lhs = f(a, identity);
            if (std::abs(lhs - a) > kTriangularEqTol) {
                rec.pass = false;
                rec.witness = TriangularWitness{{a, identity}, lhs, a};
            }
        }
        report.axioms.push_back(std::move(rec));
    }

    // Monotonicity: a<=c, b<=d implies f(a,b) <= f(c,d).
    {
        TriangularAxiomRecord rec{"monotonicity", true, std::nullopt};
        for (int i = 0; i < g && rec.pass; ++i)
            for (int j = 0; j < g && rec.pass; ++j) {
                const double a = grid_point(i, g), b = grid_point(j, g);
                const double lo = f(a, b);
                for (int k = i; k < g && rec.pass; ++k)
                    for (int l = j; l < g && rec.pass; ++l) {
                        const double c = grid_point(k, g), d = grid_point(l, g);
                        const double hi = f(c, d);
                        if (lo > hi + kTriangularEqTol) {
                            rec.pass = false;
                            rec.witness = TriangularWitness{{a, b, c, d}, lo, hi};
                        }
                    }
            }
        report.axioms.push_back(std::move(rec));
    }

    return report;
}

template <typename Op>
IdempotencyResult is_idempotent_impl(const Op& op, int grid_resolution) {
    require_grid(grid_resolution);
    for (int i = 0; i < grid_resolution; ++i) {
        const double a = grid_point(i, grid_resolution);
        if (std::abs(eval_raw(op, a, a) - a) > kTriangularEqTol)
            return {false, a};
    }
    return {true, std::nullopt};
}

} // namespace

double tnorm_eval(const TriangularNorm& op, double a, double b) {
    require_unit_interval(a, "a");
    require_unit_interval(b, "b");
    return eval_raw(op, a, b);
}

double tconorm_eval(const TriangularConorm& op, double a, double b) {
    require_unit_interval(a, "a");
    require_unit_interval(b, "b");
    return eval_raw(op, a, b);
}

bool TriangularAxiomReport::all_pass() const {
    return std::all_of(axioms.begin(), axioms.end(),
                       [](const TriangularAxiomRecord& r) { return r.pass; });
}

const TriangularAxiomRecord& TriangularAxiomReport::record(const std::string& axiom) const {
    for (const auto& rec : axioms)
        if (rec.axiom == axiom) return rec;
    throw ConfigError("no such axiom record: " + axiom);
}

TriangularAxiomReport check_triangular_axioms(const TriangularNorm& op, int grid_resolution) {
    return check_axioms_impl(op, grid_resolution, 1.0);
}

TriangularAxiomReport check_triangular_axioms(const TriangularConorm& op, int grid_resolution) {
    return check_axioms_impl(op, grid_resolution, 0.0);
}

IdempotencyResult is_idempotent(const TriangularNorm& op, int grid_resolution) {
    return is_idempotent_impl(op, grid_resolution);
}

IdempotencyResult is_idempotent(const TriangularConorm& op, int grid_resolution) {
    return is_idempotent_impl(op, grid_resolution);
}

} // namespace ifba
