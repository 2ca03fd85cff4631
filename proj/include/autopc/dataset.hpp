#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace autopc {

/// Malformed or unusable data (CSV syntax, shape mismatch, constant column).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric sample matrix (rows = observations, columns = variables) with
/// column names and a lazily computed sample correlation matrix.
class Dataset {
public:
    Dataset(Eigen::MatrixXd values, std::vector<std::string> names);

    int num_rows() const { return static_cast<int>(values_.rows()); }
    int num_cols() const { return static_cast<int>(values_.cols()); }
    const Eigen::MatrixXd& values() const { return values_; }
    const std::vector<std::string>& names() const { return names_; }

    /// Sample correlation matrix, computed on first use and cached.
    /// Requires at least two rows; throws DataError naming any column whose
    /// sample variance is zero.
    const Eigen::MatrixXd& correlations() const;

private:
    Eigen::MatrixXd values_;
    std::vector<std::string> names_;
    mutable Eigen::MatrixXd corr_;
    mutable bool corr_ready_ = false;
};

/// CSV with a header row of column names; every data row must hold one
/// finite number per column. Errors carry 1-based line numbers.
Dataset parse_csv(std::istream& in);
Dataset read_csv_file(const std::string& path);
void write_csv_file(const std::string& path, const Dataset& data);

}  // namespace autopc
