#ifndef COLLAR_TESTS_SUPPORT_HPP
#define COLLAR_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

// Fixture CSVs are plain doubles; rows whose magnitude leaves the double
// range parse to +-inf by design (their log columns carry the information).
inline std::vector<std::vector<double>> read_csv(const std::string& name) {
    std::ifstream in(std::string(COLLAR_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::string line;
    std::getline(in, line); // header
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            row.push_back(std::strtod(cell.c_str(), nullptr));
        rows.push_back(row);
    }
    return rows;
}

inline double rel_err(double got, double ref) {
    return std::abs(got - ref) / std::abs(ref);
}

// central difference with one Richardson step: O(h^4) truncation
inline double deriv(const std::function<double(double)>& f, double x, double h) {
    auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
    return (4.0 * d(h) - d(2.0 * h)) / 3.0;
}

} // namespace testsupport

#endif
