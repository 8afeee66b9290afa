#pragma once

// Shared helpers for the test suites. The oracle_* functions are deliberately
// independent re-implementations (plain loops over payloads) used to check
// library results; they must not call back into the code paths under test.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ifba/algebra.hpp"

namespace testsupport {

inline double oracle_frobenius(std::span<const double> data) {
    double s = 0.0;
    for (double v : data) s += v * v;
    return std::sqrt(s);
}

inline double oracle_coeff_sum(std::span<const double> data) {
    double s = 0.0;
    for (double v : data) s += std::fabs(v);
    return s;
}

// Induced membership degree from a crisp norm value.
inline double oracle_mu(double norm, double t) { return t / (t + norm); }
inline double oracle_nu(double norm, double t) { return norm / (t + norm); }

// Plain triple-loop matrix product on raw payloads (row-major).
inline std::vector<double> oracle_matmul(const std::vector<double>& a,
                                         const std::vector<double>& b, int n) {
    std::vector<double> c(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += a[static_cast<std::size_t>(i) * n + k] *
                     b[static_cast<std::size_t>(k) * n + j];
            c[static_cast<std::size_t>(i) * n + j] = s;
        }
    return c;
}

inline ifba::AlgebraElement matrix2(double a, double b, double c, double d) {
    return ifba::AlgebraElement(ifba::AlgebraModel::matrix(2), {a, b, c, d});
}

// Unique scratch directory for file-based tests.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("ifba_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

} // namespace testsupport
