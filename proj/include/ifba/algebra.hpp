#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifba/rng.hpp"

namespace ifba {

// Relative pivot threshold below which Gaussian elimination declares a matrix
// non-invertible.
inline constexpr double kPivotRelTol = 1e-12;
// A truncated power series is non-invertible when its constant term is
// smaller than this.
inline constexpr double kSeriesConstTol = 1e-15;

enum class AlgebraKind { scalar, matrix, truncated_series, null_product };
enum class NormKind { absolute_value, frobenius, coefficient_sum };

std::string to_string(AlgebraKind kind);

// A concrete carrier algebra over the reals. `dim` is the matrix order n,
// the series degree d, or the null-product vector length m (1 for scalars).
struct AlgebraModel {
    AlgebraKind kind = AlgebraKind::scalar;
    int dim = 1;
    NormKind norm_kind = NormKind::absolute_value;
    bool unital = true;

    static AlgebraModel scalar();
    static AlgebraModel matrix(int n);
    static AlgebraModel truncated_series(int degree);
    static AlgebraModel null_product(int m);

    // Grammar: kind[:key=value], e.g. "matrix:n=4", "series:d=8",
    // "nullprod:m=4", "scalar".
    static AlgebraModel parse(const std::string& spec);
    std::string spec_string() const;

    std::size_t payload_size() const;

    bool operator==(const AlgebraModel&) const = default;
};

// An element of one AlgebraModel. Payload layout: scalars hold one value,
// matrices n*n row-major entries, series d+1 coefficients (constant first),
// null-product vectors m components. All entries are finite by construction.
class AlgebraElement {
public:
    // Scalar zero; placeholder for aggregates that are filled in later.
    AlgebraElement() : model_(AlgebraModel::scalar()), data_{0.0} {}
    AlgebraElement(AlgebraModel model, std::vector<double> data);

    static AlgebraElement zero(const AlgebraModel& model);
    static AlgebraElement unit(const AlgebraModel& model);
    static AlgebraElement from_scalar(double value);

    const AlgebraModel& model() const { return model_; }
    std::span<const double> data() const { return data_; }
    double scalar_value() const;
    double at(int i, int j) const; // matrix entry access
    bool is_zero() const;          // all entries exactly zero

private:
    AlgebraModel model_;
    std::vector<double> data_;

    friend AlgebraElement add(const AlgebraElement&, const AlgebraElement&);
    friend AlgebraElement sub(const AlgebraElement&, const AlgebraElement&);
    friend AlgebraElement mul(const AlgebraElement&, const AlgebraElement&);
    friend AlgebraElement scale(double, const AlgebraElement&);
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(double c, const AlgebraElement& x);

// |x|, Frobenius norm, coefficient 1-norm, or Euclidean length per model kind.
double crisp_norm(const AlgebraElement& x);

// Exact-method inverse: reciprocal, pivoted Gauss-Jordan, or recursive series
// coefficient solve. nullopt means non-invertible under the documented
// thresholds. Throws UnsupportedOperationError for non-unital models.
std::optional<AlgebraElement> direct_inverse(const AlgebraElement& x);

// For a non-invertible matrix, a unit vector v with x·v ≈ 0, extracted from
// the elimination that detected the rank deficiency. nullopt if elimination
// completes without meeting a small pivot.
std::optional<std::vector<double>> kernel_vector(const AlgebraElement& x);

// Matrix-vector product on a matrix element's payload.
std::vector<double> apply_matrix(const AlgebraElement& x, std::span<const double> v);

// Element with independent entries uniform on [lo, hi].
AlgebraElement random_element(const AlgebraModel& model, Rng& rng, double lo, double hi);
// Element with crisp norm exactly 1 (Gaussian direction scaled by the model norm).
AlgebraElement random_direction(const AlgebraModel& model, Rng& rng);

// CSV I/O: matrices as n rows x n columns, everything else as a single row.
AlgebraElement load_element_csv(const AlgebraModel& model, const std::filesystem::path& path);
void store_element_csv(const AlgebraElement& x, const std::filesystem::path& path);

} // namespace ifba
