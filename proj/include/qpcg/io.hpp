// Copyright 2026 The qpcg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats:
//   matrix   header line "rows cols nnz", then nnz lines "row col value" in
//            sorted zero-based coordinate order;
//   vector   one value per line, infinity spelled inf / -inf;
//   problem  "n m" line, then the P upper block (matrix), q (n values), the
//            A block (matrix), l (m values), u (m values).
// Settings load from a flat JSON object whose keys are the Settings field
// names.

#ifndef QPCG_IO_HPP
#define QPCG_IO_HPP

#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpcg/problem.hpp"
#include "qpcg/settings.hpp"
#include "qpcg/sparse.hpp"
#include "qpcg/types.hpp"

namespace qpcg {

namespace io_detail {

template <typename T>
T parse_scalar(const std::string& token) {
  try {
    if constexpr (std::is_same_v<T, float>) {
      return std::stof(token);
    } else {
      return static_cast<T>(std::stod(token));
    }
  } catch (const std::exception&) {
    throw std::runtime_error("io: cannot parse value '" + token + "'");
  }
}

template <typename T>
T next_scalar(std::istream& is) {
  std::string token;
  if (!(is >> token)) throw std::runtime_error("io: unexpected end of input");
  return parse_scalar<T>(token);
}

inline index_t next_index(std::istream& is) {
  long long v;
  if (!(is >> v) || v < 0) throw std::runtime_error("io: bad index field");
  return static_cast<index_t>(v);
}

template <typename T>
void put_scalar(std::ostream& os, T v) {
  if (v == infinity<T>()) {
    os << "inf";
  } else if (v == -infinity<T>()) {
    os << "-inf";
  } else {
    os << std::setprecision(std::numeric_limits<T>::max_digits10) << v;
  }
}

}  // namespace io_detail

template <typename T>
void write_matrix(std::ostream& os, const CsrMatrix<T>& m) {
  const CooMatrix<T> coo = csr_to_coo(m);
  os << coo.rows << ' ' << coo.cols << ' ' << coo.nnz() << '\n';
  for (index_t k = 0; k < coo.nnz(); ++k) {
    os << coo.row_indices[k] << ' ' << coo.col_indices[k] << ' ';
    io_detail::put_scalar(os, coo.values[k]);
    os << '\n';
  }
}

template <typename T>
CsrMatrix<T> read_matrix(std::istream& is) {
  CooMatrix<T> coo;
  coo.rows = io_detail::next_index(is);
  coo.cols = io_detail::next_index(is);
  const index_t nnz = io_detail::next_index(is);
  coo.values.reserve(nnz);
  coo.row_indices.reserve(nnz);
  coo.col_indices.reserve(nnz);
  for (index_t k = 0; k < nnz; ++k) {
    coo.row_indices.push_back(io_detail::next_index(is));
    coo.col_indices.push_back(io_detail::next_index(is));
    coo.values.push_back(io_detail::next_scalar<T>(is));
  }
  return coo_to_csr(coo);
}

template <typename T>
void write_vector(std::ostream& os, const std::vector<T>& v) {
  for (const T& x : v) {
    io_detail::put_scalar(os, x);
    os << '\n';
  }
}

template <typename T>
std::vector<T> read_vector(std::istream& is, std::size_t count) {
  std::vector<T> v;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    v.push_back(io_detail::next_scalar<T>(is));
  }
  return v;
}

template <typename T>
void write_problem(std::ostream& os, const QpProblem<T>& p) {
  os << p.num_vars() << ' ' << p.num_constraints() << '\n';
  write_matrix(os, p.p_upper);
  write_vector(os, p.q);
  write_matrix(os, p.a);
  write_vector(os, p.l);
  write_vector(os, p.u);
}

template <typename T>
QpProblem<T> read_problem(std::istream& is) {
  QpProblem<T> p;
  const index_t n = io_detail::next_index(is);
  const index_t m = io_detail::next_index(is);
  p.p_upper = read_matrix<T>(is);
  p.q = read_vector<T>(is, n);
  p.a = read_matrix<T>(is);
  p.l = read_vector<T>(is, m);
  p.u = read_vector<T>(is, m);
  if (p.p_upper.rows != n || p.a.rows != m) {
    throw std::runtime_error("io: problem header does not match blocks");
  }
  validate(p);
  return p;
}

template <typename T>
void save_problem(const std::string& path, const QpProblem<T>& p) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("io: cannot open " + path);
  write_problem(os, p);
}

template <typename T>
QpProblem<T> load_problem(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("io: cannot open " + path);
  return read_problem<T>(is);
}

// Flat key/value JSON; keys are exactly the Settings field names. Unknown
// keys are an error so typos do not silently fall back to defaults.
template <typename T>
Settings<T> settings_from_json(const nlohmann::json& j) {
  Settings<T> s;
  for (const auto& [key, value] : j.items()) {
    if (key == "alpha") s.alpha = value.template get<T>();
    else if (key == "sigma") s.sigma = value.template get<T>();
    else if (key == "rho_bar_init") s.rho_bar_init = value.template get<T>();
    else if (key == "eps_abs") s.eps_abs = value.template get<T>();
    else if (key == "eps_rel") s.eps_rel = value.template get<T>();
    else if (key == "eps_pinf") s.eps_pinf = value.template get<T>();
    else if (key == "eps_dinf") s.eps_dinf = value.template get<T>();
    else if (key == "max_admm_iter")
      s.max_admm_iter = value.template get<index_t>();
    else if (key == "check_interval")
      s.check_interval = value.template get<index_t>();
    else if (key == "rho_update_interval")
      s.rho_update_interval = value.template get<index_t>();
    else if (key == "lambda_pcg") s.lambda_pcg = value.template get<T>();
    else if (key == "eps_pcg_min") s.eps_pcg_min = value.template get<T>();
    else if (key == "scaling_enabled")
      s.scaling_enabled = value.template get<bool>();
    else if (key == "eps_equil") s.eps_equil = value.template get<T>();
    else if (key == "equil_max_passes")
      s.equil_max_passes = value.template get<index_t>();
    else if (key == "precision_note")
      s.precision_note = value.template get<std::string>();
    else throw std::runtime_error("settings: unknown key '" + key + "'");
  }
  validate(s);
  return s;
}

template <typename T>
Settings<T> load_settings(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("io: cannot open " + path);
  nlohmann::json j;
  is >> j;
  return settings_from_json<T>(j);
}

}  // namespace qpcg

#endif  // QPCG_IO_HPP
