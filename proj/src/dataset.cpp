#include "autopc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace autopc {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string item;
    while (std::getline(row, item, ',')) fields.push_back(trim(item));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

Dataset::Dataset(Eigen::MatrixXd values, std::vector<std::string> names)
    : values_(std::move(values)), names_(std::move(names)) {
    if (values_.cols() < 1) throw DataError("dataset needs at least one column");
    if (values_.rows() < 1) throw DataError("dataset needs at least one row");
    if (static_cast<Eigen::Index>(names_.size()) != values_.cols())
        throw DataError("column name count does not match column count");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
        if (name.empty()) throw DataError("empty column name");
        if (!seen.insert(name).second) throw DataError("duplicate column name '" + name + "'");
    }
    if (!values_.allFinite()) throw DataError("dataset contains non-finite values");
}

const Eigen::MatrixXd& Dataset::correlations() const {
    if (corr_ready_) return corr_;
    const Eigen::Index n = values_.rows();
    const Eigen::Index d = values_.cols();
    if (n < 2) throw DataError("correlation needs at least two rows");

    Eigen::MatrixXd centered = values_.rowwise() - values_.colwise().mean();
    Eigen::VectorXd sd(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        sd(j) = std::sqrt(centered.col(j).squaredNorm() / static_cast<double>(n - 1));
        if (sd(j) == 0.0)
            throw DataError("column '" + names_[static_cast<size_t>(j)] +
                            "' has zero variance");
    }

    corr_ = (centered.transpose() * centered) / static_cast<double>(n - 1);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            corr_(i, j) = std::clamp(corr_(i, j) / (sd(i) * sd(j)), -1.0, 1.0);
        }
        corr_(i, i) = 1.0;
    }
    corr_ready_ = true;
    return corr_;
}

Dataset parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("line 1: missing header row");
    std::vector<std::string> names = split_fields(line);
    if (names.empty() || (names.size() == 1 && names[0].empty()))
        throw DataError("line 1: empty header row");
    const size_t d = names.size();

    std::vector<double> cells;
    int line_no = 1;
    size_t rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != d)
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(d) + " fields, got " + std::to_string(fields.size()));
        for (const auto& f : fields) {
            size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(f, &used);
            } catch (const std::exception&) {
                throw DataError("line " + std::to_string(line_no) + ": '" + f +
                                "' is not a number");
            }
            if (used != f.size() || !std::isfinite(v))
                throw DataError("line " + std::to_string(line_no) + ": '" + f +
                                "' is not a finite number");
            cells.push_back(v);
        }
        ++rows;
    }
    if (rows == 0) throw DataError("no data rows");

    Eigen::MatrixXd values(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(d));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < d; ++c)
            values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cells[r * d + c];
    return Dataset(std::move(values), std::move(names));
}

Dataset read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open data file '" + path + "'");
    return parse_csv(in);
}

void write_csv_file(const std::string& path, const Dataset& data) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    const auto& names = data.names();
    for (size_t j = 0; j < names.size(); ++j) {
        if (j > 0) out << ',';
        out << names[j];
    }
    out << '\n';
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    const auto& values = data.values();
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        for (Eigen::Index j = 0; j < values.cols(); ++j) {
            if (j > 0) out << ',';
            out << values(i, j);
        }
        out << '\n';
    }
    if (!out) throw DataError("failed writing '" + path + "'");
}

}  // namespace autopc
