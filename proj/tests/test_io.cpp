#include "aklt/io.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cstdlib>
#include <string>

using namespace aklt;

TEST_CASE("matrix literals round trip") {
  testing::Rng rng(61);
  const Matrix m = rng.ginibre(3, 2);
  const Matrix back = io::matrix_from_json(io::matrix_to_json(m));
  CHECK(back.rows() == 3);
  CHECK(back.cols() == 2);
  CHECK(ops::max_abs(m - back) == 0.0);
}

TEST_CASE("matrix literal validation") {
  CHECK_THROWS_AS(io::matrix_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json("[[1, 2]]"), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json("[[[1]]]"), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json("[[[1,0],[0,0]],[[1,0]]]"), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(R"([[["a",0]]])"), std::invalid_argument);
}

TEST_CASE("channel literals round trip") {
  const channels::KrausChannel phi = channels::aklt_channel();
  const channels::KrausChannel back = io::channel_from_json(io::channel_to_json(phi));
  CHECK(back.d_in == 2);
  CHECK(back.d_out == 2);
  REQUIRE(back.kraus.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(ops::max_abs(back.kraus[k] - phi.kraus[k]) == 0.0);
  }

  CHECK_THROWS_AS(io::channel_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(io::channel_from_json(R"({"d_in":2,"d_out":2,"kraus":[[[[1,0]]]]})"),
                  std::invalid_argument);
}

TEST_CASE("word files") {
  SUBCASE("explicit fields round trip") {
    io::WordFile word;
    word.n = 2;
    word.phi0 = ops::identity(2) / 2.0;
    word.xs = {ops::sigma_x(), ops::sigma_z()};
    word.ys = {ops::projector(3, 0), ops::projector(3, 1)};
    const io::WordFile back = io::word_from_json(io::word_to_json(word));
    CHECK(back.n == 2);
    CHECK(ops::max_abs(back.phi0 - word.phi0) == 0.0);
    CHECK(ops::max_abs(back.xs[1] - word.xs[1]) == 0.0);
    CHECK(ops::max_abs(back.ys[0] - word.ys[0]) == 0.0);
  }

  SUBCASE("omitted lists default to identities and phi0 to the mixed state") {
    const io::WordFile word = io::word_from_json(R"({"n": 3})");
    CHECK(word.n == 3);
    CHECK(ops::max_abs(word.phi0 - ops::identity(2) / 2.0) == 0.0);
    REQUIRE(word.xs.size() == 3);
    REQUIRE(word.ys.size() == 3);
    CHECK(ops::max_abs(word.xs[0] - ops::identity(2)) == 0.0);
    CHECK(ops::max_abs(word.ys[2] - ops::identity(3)) == 0.0);
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(io::word_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(io::word_from_json(R"({"n": 0})"), std::invalid_argument);
    CHECK_THROWS_AS(io::word_from_json(R"({"n": 2, "xs": [[[[1,0],[0,0]],[[0,0],[1,0]]]]})"),
                    std::invalid_argument);
  }
}

TEST_CASE("double formatting is lossless") {
  testing::Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const double value = (rng.uniform() - 0.5) * std::pow(10.0, int(rng.uniform() * 20) - 10);
    const std::string text = io::format_double(value);
    CHECK(std::strtod(text.c_str(), nullptr) == value);
  }
  CHECK(io::format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("file round trip") {
  const std::string path = "aklt_io_test_tmp.json";
  io::write_file(path, "{\"n\": 1}");
  CHECK(io::read_file(path) == "{\"n\": 1}");
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::read_file("definitely_missing_file.json"), std::runtime_error);
}
