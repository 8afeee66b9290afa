#include "ifba/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "ifba/csv.hpp"
#include "ifba/errors.hpp"

namespace ifba {

std::string to_string(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::scalar: return "scalar";
        case AlgebraKind::matrix: return "matrix";
        case AlgebraKind::truncated_series: return "series";
        case AlgebraKind::null_product: return "nullprod";
    }
    return "unknown";
}

AlgebraModel AlgebraModel::scalar() {
    return {AlgebraKind::scalar, 1, NormKind::absolute_value, true};
}

AlgebraModel AlgebraModel::matrix(int n) {
    if (n < 1) throw ConfigError("matrix order must be >= 1");
    return {AlgebraKind::matrix, n, NormKind::frobenius, true};
}

AlgebraModel AlgebraModel::truncated_series(int degree) {
    if (degree < 0) throw ConfigError("series degree must be >= 0");
    return {AlgebraKind::truncated_series, degree, NormKind::coefficient_sum, true};
}

AlgebraModel AlgebraModel::null_product(int m) {
    if (m < 1) throw ConfigError("null-product dimension must be >= 1");
    // Frobenius on a plain vector is its Euclidean length.
    return {AlgebraKind::null_product, m, NormKind::frobenius, false};
}

AlgebraModel AlgebraModel::parse(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

    auto parse_param = [&rest, &spec](const std::string& expected_key) -> int {
        if (rest.empty())
            throw ConfigError("model spec '" + spec + "' is missing " + expected_key + "=<int>");
        const auto eq = rest.find('=');
        if (eq == std::string::npos || rest.find(',') != std::string::npos)
            throw ConfigError("malformed model spec: " + spec);
        const std::string key = rest.substr(0, eq);
        if (key != expected_key)
            throw ConfigError("unknown key '" + key + "' in model spec: " + spec);
        const std::string value = rest.substr(eq + 1);
        try {
            std::size_t pos = 0;
            const int v = std::stoi(value, &pos);
            if (pos != value.size()) throw std::invalid_argument(value);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("bad integer '" + value + "' in model spec: " + spec);
        }
    };

    if (kind == "scalar") {
        if (!rest.empty()) throw ConfigError("scalar model takes no parameters: " + spec);
        return scalar();
    }
    if (kind == "matrix") return matrix(parse_param("n"));
    if (kind == "series") return truncated_series(parse_param("d"));
    if (kind == "nullprod") return null_product(parse_param("m"));
    throw ConfigError("unknown model kind in spec: " + spec);
}

std::string AlgebraModel::spec_string() const {
    switch (kind) {
        case AlgebraKind::scalar: return "scalar";
        case AlgebraKind::matrix: return "matrix:n=" + std::to_string(dim);
        case AlgebraKind::truncated_series: return "series:d=" + std::to_string(dim);
        case AlgebraKind::null_product: return "nullprod:m=" + std::to_string(dim);
    }
    return "unknown";
}

std::size_t AlgebraModel::payload_size() const {
    switch (kind) {
        case AlgebraKind::scalar: return 1;
        case AlgebraKind::matrix: return static_cast<std::size_t>(dim) * dim;
        case AlgebraKind::truncated_series: return static_cast<std::size_t>(dim) + 1;
        case AlgebraKind::null_product: return static_cast<std::size_t>(dim);
    }
    return 0;
}

AlgebraElement::AlgebraElement(AlgebraModel model, std::vector<double> data)
    : model_(model), data_(std::move(data)) {
    if (data_.size() != model_.payload_size())
        throw ConfigError("payload size " + std::to_string(data_.size()) +
                          " does not match model " + model_.spec_string());
    for (double v : data_)
        if (!std::isfinite(v)) throw DomainError("element entries must be finite");
}

AlgebraElement AlgebraElement::zero(const AlgebraModel& model) {
    return AlgebraElement(model, std::vector<double>(model.payload_size(), 0.0));
}

AlgebraElement AlgebraElement::unit(const AlgebraModel& model) {
    if (!model.unital)
        throw UnsupportedOperationError("model " + model.spec_string() + " has no unit element");
    std::vector<double> data(model.payload_size(), 0.0);
    switch (model.kind) {
        case AlgebraKind::scalar:
        case AlgebraKind::truncated_series:
            data[0] = 1.0;
            break;
        case AlgebraKind::matrix:
            for (int i = 0; i < model.dim; ++i)
                data[static_cast<std::size_t>(i) * model.dim + i] = 1.0;
            break;
        case AlgebraKind::null_product:
            break; // unreachable
    }
    return AlgebraElement(model, std::move(data));
}

AlgebraElement AlgebraElement::from_scalar(double value) {
    return AlgebraElement(AlgebraModel::scalar(), {value});
}

double AlgebraElement::scalar_value() const {
    if (model_.kind != AlgebraKind::scalar)
        throw UnsupportedOperationError("scalar_value on a non-scalar element");
    return data_[0];
}

double AlgebraElement::at(int i, int j) const {
    if (model_.kind != AlgebraKind::matrix)
        throw UnsupportedOperationError("matrix access on a non-matrix element");
    return data_[static_cast<std::size_t>(i) * model_.dim + j];
}

bool AlgebraElement::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return v == 0.0; });
}

namespace {

void require_same_model(const AlgebraElement& x, const AlgebraElement& y) {
    if (!(x.model() == y.model()))
        throw ModelMismatchError("elements belong to different models: " +
                                 x.model().spec_string() + " vs " + y.model().spec_string());
}

} // namespace

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_model(x, y);
    std::vector<double> out(x.data_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.data_[i] + y.data_[i];
    return AlgebraElement(x.model_, std::move(out));
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_model(x, y);
    std::vector<double> out(x.data_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.data_[i] - y.data_[i];
    return AlgebraElement(x.model_, std::move(out));
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_model(x, y);
    const auto& m = x.model_;
    switch (m.kind) {
        case AlgebraKind::scalar:
            return AlgebraElement(m, {x.data_[0] * y.data_[0]});
        case AlgebraKind::matrix: {
            const int n = m.dim;
            std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    const double xik = x.data_[static_cast<std::size_t>(i) * n + k];
                    if (xik == 0.0) continue;
                    for (int j = 0; j < n; ++j)
                        out[static_cast<std::size_t>(i) * n + j] +=
                            xik * y.data_[static_cast<std::size_t>(k) * n + j];
                }
            return AlgebraElement(m, std::move(out));
        }
        case AlgebraKind::truncated_series: {
            // Cauchy product truncated at degree d.
            const int d = m.dim;
            std::vector<double> out(static_cast<std::size_t>(d) + 1, 0.0);
            for (int i = 0; i <= d; ++i) {
                if (x.data_[i] == 0.0) continue;
                for (int j = 0; i + j <= d; ++j)
                    out[i + j] += x.data_[i] * y.data_[j];
            }
            return AlgebraElement(m, std::move(out));
        }
        case AlgebraKind::null_product:
            return AlgebraElement::zero(m);
    }
    throw ConfigError("unreachable model kind");
}

AlgebraElement scale(double c, const AlgebraElement& x) {
    if (!std::isfinite(c)) throw DomainError("scale factor must be finite");
    std::vector<double> out(x.data_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * x.data_[i];
    return AlgebraElement(x.model_, std::move(out));
}

double crisp_norm(const AlgebraElement& x) {
    switch (x.model().norm_kind) {
        case NormKind::absolute_value:
            return std::abs(x.data()[0]);
        case NormKind::frobenius: {
            double s = 0.0;
            for (double v : x.data()) s += v * v;
            return std::sqrt(s);
        }
        case NormKind::coefficient_sum: {
            double s = 0.0;
            for (double v : x.data()) s += std::abs(v);
            return s;
        }
    }
    return 0.0;
}

namespace {

// Gauss-Jordan with partial pivoting on [A | I]. Returns the inverse, or
// nullopt once a pivot falls to kPivotRelTol * ||A||_F.
std::optional<std::vector<double>> invert_dense(std::span<const double> a_in, int n,
                                                double norm_a) {
    std::vector<double> a(a_in.begin(), a_in.end());
    std::vector<double> inv(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + i] = 1.0;

    const double pivot_floor = kPivotRelTol * norm_a;
    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        double best = std::abs(a[static_cast<std::size_t>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double cand = std::abs(a[static_cast<std::size_t>(r) * n + col]);
            if (cand > best) {
                best = cand;
                pivot_row = r;
            }
        }
        if (best <= pivot_floor) return std::nullopt;

        if (pivot_row != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a[static_cast<std::size_t>(pivot_row) * n + j],
                          a[static_cast<std::size_t>(col) * n + j]);
                std::swap(inv[static_cast<std::size_t>(pivot_row) * n + j],
                          inv[static_cast<std::size_t>(col) * n + j]);
            }

        const double pivot = a[static_cast<std::size_t>(col) * n + col];
        const double scale = 1.0 / pivot;
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(col) * n + j] *= scale;
            inv[static_cast<std::size_t>(col) * n + j] *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double factor = a[static_cast<std::size_t>(r) * n + col];
            if (factor == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a[static_cast<std::size_t>(r) * n + j] -=
                    factor * a[static_cast<std::size_t>(col) * n + j];
                inv[static_cast<std::size_t>(r) * n + j] -=
                    factor * inv[static_cast<std::size_t>(col) * n + j];
            }
        }
    }
    return inv;
}

} // namespace

std::optional<AlgebraElement> direct_inverse(const AlgebraElement& x) {
    const auto& m = x.model();
    if (!m.unital)
        throw UnsupportedOperationError("direct_inverse requires a unital model, got " +
                                        m.spec_string());
    switch (m.kind) {
        case AlgebraKind::scalar: {
            const double v = x.data()[0];
            if (v == 0.0) return std::nullopt;
            return AlgebraElement(m, {1.0 / v});
        }
        case AlgebraKind::matrix: {
            auto inv = invert_dense(x.data(), m.dim, crisp_norm(x));
            if (!inv) return std::nullopt;
            return AlgebraElement(m, std::move(*inv));
        }
        case AlgebraKind::truncated_series: {
            const int d = m.dim;
            const double c0 = x.data()[0];
            if (std::abs(c0) < kSeriesConstTol) return std::nullopt;
            std::vector<double> b(static_cast<std::size_t>(d) + 1, 0.0);
            b[0] = 1.0 / c0;
            for (int k = 1; k <= d; ++k) {
                double s = 0.0;
                for (int i = 1; i <= k; ++i) s += x.data()[i] * b[k - i];
                b[k] = -s / c0;
            }
            return AlgebraElement(m, std::move(b));
        }
        case AlgebraKind::null_product:
            break; // unreachable, non-unital
    }
    throw ConfigError("unreachable model kind");
}

std::optional<std::vector<double>> kernel_vector(const AlgebraElement& x) {
    const auto& m = x.model();
    if (m.kind != AlgebraKind::matrix)
        throw UnsupportedOperationError("kernel_vector requires a matrix element");
    const int n = m.dim;
    std::vector<double> a(x.data().begin(), x.data().end());
    const double pivot_floor = kPivotRelTol * crisp_norm(x);

    // Row echelon with partial pivoting; record the pivot column per row.
    std::vector<int> pivot_col_of_row;
    std::vector<bool> col_is_pivot(n, false);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = row;
        double best = std::abs(a[static_cast<std::size_t>(row) * n + col]);
        for (int r = row + 1; r < n; ++r) {
            const double cand = std::abs(a[static_cast<std::size_t>(r) * n + col]);
            if (cand > best) {
                best = cand;
                pr = r;
            }
        }
        if (best <= pivot_floor) continue; // free column
        if (pr != row)
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(pr) * n + j],
                          a[static_cast<std::size_t>(row) * n + j]);
        const double pivot = a[static_cast<std::size_t>(row) * n + col];
        for (int r = row + 1; r < n; ++r) {
            const double f = a[static_cast<std::size_t>(r) * n + col] / pivot;
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j)
                a[static_cast<std::size_t>(r) * n + j] -=
                    f * a[static_cast<std::size_t>(row) * n + j];
        }
        pivot_col_of_row.push_back(col);
        col_is_pivot[col] = true;
        ++row;
    }

    int free_col = -1;
    for (int col = 0; col < n; ++col)
        if (!col_is_pivot[col]) {
            free_col = col;
            break;
        }
    if (free_col < 0) return std::nullopt; // full rank at this threshold

    // Back-substitute with the free variable set to 1.
    std::vector<double> v(n, 0.0);
    v[free_col] = 1.0;
    for (int r = static_cast<int>(pivot_col_of_row.size()) - 1; r >= 0; --r) {
        const int pc = pivot_col_of_row[r];
        double s = 0.0;
        for (int j = pc + 1; j < n; ++j) s += a[static_cast<std::size_t>(r) * n + j] * v[j];
        v[pc] = -s / a[static_cast<std::size_t>(r) * n + pc] + 0.0; // +0.0 clears -0.0
    }

    double norm2 = 0.0;
    for (double c : v) norm2 += c * c;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& c : v) c *= inv;
    return v;
}

std::vector<double> apply_matrix(const AlgebraElement& x, std::span<const double> v) {
    const auto& m = x.model();
    if (m.kind != AlgebraKind::matrix)
        throw UnsupportedOperationError("apply_matrix requires a matrix element");
    const int n = m.dim;
    if (v.size() != static_cast<std::size_t>(n))
        throw DomainError("vector length does not match matrix order");
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += x.data()[static_cast<std::size_t>(i) * n + j] * v[j];
        out[i] = s;
    }
    return out;
}

AlgebraElement random_element(const AlgebraModel& model, Rng& rng, double lo, double hi) {
    std::vector<double> data(model.payload_size());
    for (auto& v : data) v = rng.uniform(lo, hi);
    return AlgebraElement(model, std::move(data));
}

AlgebraElement random_direction(const AlgebraModel& model, Rng& rng) {
    auto dir = rng.unit_sphere(model.payload_size());
    AlgebraElement e(model, std::move(dir));
    const double n = crisp_norm(e);
    return scale(1.0 / n, e);
}

AlgebraElement load_element_csv(const AlgebraModel& model, const std::filesystem::path& path) {
    const auto rows = csv::as_numeric(csv::read_cells(path), "element " + path.filename().string());
    std::vector<double> data;
    if (model.kind == AlgebraKind::matrix) {
        const std::size_t n = static_cast<std::size_t>(model.dim);
        if (rows.size() != n || rows.front().size() != n)
            throw ConfigError("matrix CSV must be " + std::to_string(n) + "x" +
                              std::to_string(n) + ": " + path.string());
        for (const auto& row : rows) data.insert(data.end(), row.begin(), row.end());
    } else {
        if (rows.size() != 1 || rows.front().size() != model.payload_size())
            throw ConfigError("element CSV for " + model.spec_string() +
                              " must be a single row of " +
                              std::to_string(model.payload_size()) + " values: " + path.string());
        data = rows.front();
    }
    return AlgebraElement(model, std::move(data));
}

void store_element_csv(const AlgebraElement& x, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write CSV file: " + path.string());
    char buf[64];
    const auto& m = x.model();
    const std::size_t cols = m.kind == AlgebraKind::matrix ? static_cast<std::size_t>(m.dim)
                                                           : x.data().size();
    for (std::size_t i = 0; i < x.data().size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", x.data()[i]);
        out << buf;
        out << (((i + 1) % cols == 0) ? '\n' : ',');
    }
}

} // namespace ifba
