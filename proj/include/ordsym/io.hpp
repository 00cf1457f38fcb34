#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>

#include "ordsym/errors.hpp"

namespace ordsym {

// Reads one numeric column from a delimited text file. `column` is a 0-based
// index or a header name (a header row is required for names and tolerated
// for indices). Unparseable rows raise ParseError naming the line; nothing
// is skipped silently.
Eigen::VectorXd ingest_csv(std::istream& in, const std::string& column = "");
Eigen::VectorXd ingest_csv_file(const std::string& path, const std::string& column = "");

// log(x_{t+1}) - log(x_t); every input must be positive.
Eigen::VectorXd log_returns(Eigen::Ref<const Eigen::VectorXd> series);

// x_{t+1} - x_t.
Eigen::VectorXd first_difference(Eigen::Ref<const Eigen::VectorXd> series);

}  // namespace ordsym
