#include "aklt/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aklt::io {
namespace {

using nlohmann::json;

json matrix_to_value(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_value(const json& value) {
  if (!value.is_array() || value.empty()) {
    throw std::invalid_argument("matrix literal: expected a nonempty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(value.size());
  Eigen::Index cols = -1;
  for (const json& row : value) {
    if (!row.is_array() || row.empty()) {
      throw std::invalid_argument("matrix literal: each row must be a nonempty array");
    }
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix literal: ragged rows");
    }
  }
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const json& entry = value[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        throw std::invalid_argument("matrix literal: entries must be [re, im] number pairs");
      }
      const double re = entry[0].get<double>();
      const double im = entry[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw std::invalid_argument("matrix literal: entries must be finite");
      }
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

json parse(const std::string& text) {
  json value = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) throw std::invalid_argument("io: malformed JSON");
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string matrix_to_json(const Matrix& m) { return matrix_to_value(m).dump(); }

Matrix matrix_from_json(const std::string& text) { return matrix_from_value(parse(text)); }

std::string channel_to_json(const channels::KrausChannel& ch) {
  json value;
  value["d_in"] = ch.d_in;
  value["d_out"] = ch.d_out;
  json kraus = json::array();
  for (const Matrix& k : ch.kraus) kraus.push_back(matrix_to_value(k));
  value["kraus"] = std::move(kraus);
  return value.dump();
}

channels::KrausChannel channel_from_json(const std::string& text) {
  const json value = parse(text);
  if (!value.is_object() || !value.contains("d_in") || !value.contains("d_out") ||
      !value.contains("kraus") || !value["kraus"].is_array()) {
    throw std::invalid_argument("channel literal: expected {d_in, d_out, kraus}");
  }
  std::vector<Matrix> kraus;
  for (const json& k : value["kraus"]) kraus.push_back(matrix_from_value(k));
  return channels::KrausChannel(std::move(kraus), value["d_in"].get<Eigen::Index>(),
                                value["d_out"].get<Eigen::Index>());
}

WordFile word_from_json(const std::string& text) {
  const json value = parse(text);
  if (!value.is_object() || !value.contains("n")) {
    throw std::invalid_argument("word file: expected an object with field n");
  }
  WordFile word;
  word.n = value["n"].get<int>();
  if (word.n < 1) throw std::invalid_argument("word file: n must be >= 1");

  word.phi0 = value.contains("phi0") ? matrix_from_value(value["phi0"])
                                     : Matrix(ops::identity(2) / 2.0);

  const auto read_list = [&](const char* key, Eigen::Index dim) {
    std::vector<Matrix> list;
    if (value.contains(key)) {
      if (!value[key].is_array() || static_cast<int>(value[key].size()) != word.n) {
        throw std::invalid_argument(std::string("word file: ") + key + " must list n matrices");
      }
      for (const json& entry : value[key]) list.push_back(matrix_from_value(entry));
    } else {
      list.assign(static_cast<std::size_t>(word.n), ops::identity(dim));
    }
    return list;
  };
  word.xs = read_list("xs", 2);
  word.ys = read_list("ys", 3);
  return word;
}

std::string word_to_json(const WordFile& word) {
  json value;
  value["n"] = word.n;
  value["phi0"] = matrix_to_value(word.phi0);
  json xs = json::array(), ys = json::array();
  for (const Matrix& x : word.xs) xs.push_back(matrix_to_value(x));
  for (const Matrix& y : word.ys) ys.push_back(matrix_to_value(y));
  value["xs"] = std::move(xs);
  value["ys"] = std::move(ys);
  return value.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("io: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("io: cannot open " + path + " for writing");
  out << contents;
}

}  // namespace aklt::io
