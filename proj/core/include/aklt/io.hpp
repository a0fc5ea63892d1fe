// Shared file formats: matrix literals (JSON array of rows, entries
// [re, im]), channel literals {d_in, d_out, kraus}, observable-word files
// {n, phi0, xs, ys}, and lossless floating-point text formatting.

#pragma once

#include "aklt/channels.hpp"
#include "aklt/hqmm.hpp"
#include "aklt/ops.hpp"

#include <string>

namespace aklt::io {

// 17 significant digits, enough for a lossless double round trip.
std::string format_double(double value);

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

std::string channel_to_json(const channels::KrausChannel& ch);
channels::KrausChannel channel_from_json(const std::string& text);

struct WordFile {
  int n = 0;
  Matrix phi0;                  // defaults to identity(2)/2 when omitted
  std::vector<Matrix> xs;       // defaults to n identity(2) when omitted
  std::vector<Matrix> ys;       // defaults to n identity(3) when omitted
};

WordFile word_from_json(const std::string& text);
std::string word_to_json(const WordFile& word);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace aklt::io
