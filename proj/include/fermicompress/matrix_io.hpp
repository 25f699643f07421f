// Copyright 2026 The fermicompress Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/Dense>

namespace fermicompress {

// Plain-text dense matrix format: one row per line, entries separated by
// single spaces, each written with 17 significant digits so values round-trip
// exactly. Blank lines and lines starting with '#' are ignored on input.

void write_dense_matrix(std::ostream& out, const Eigen::MatrixXd& matrix);
Eigen::MatrixXd read_dense_matrix(std::istream& in);

void save_dense_matrix(const std::string& path, const Eigen::MatrixXd& matrix);
Eigen::MatrixXd load_dense_matrix(const std::string& path);

}  // namespace fermicompress
