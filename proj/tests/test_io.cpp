#include <doctest.h>

#include "flagdress/builtin.hpp"
#include "flagdress/errors.hpp"
#include "flagdress/io.hpp"

using namespace flagdress;

namespace {

const char* kSmall = R"({
  "n": 3,
  "layers": [
    {"d": 1, "weights": {"1": 0, "2": "1/2", "3": "-4"}},
    {"d": 2, "weights": {"12": 0, "13": 1, "23": 0}}
  ],
  "metadata": {"seed": 9}
})";

long parse_position(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("parsed: " << text);
    return -2;
}

} // namespace

TEST_CASE("instance files") {
    const InstanceFile f = parse_instance(kSmall);
    CHECK(f.flag.n == 3);
    CHECK(f.flag.dims() == std::vector<int>{1, 2});
    CHECK(f.flag.layers[0][Subset::of(3, {2})] == Rational(1, 2));
    CHECK(f.metadata["seed"] == 9);
    const Json j = instance_to_json(f.flag, f.metadata);
    CHECK(j.dump() ==
          R"({"n":3,"layers":[{"d":1,"weights":{"1":"0","2":"1/2","3":"-4"}},{"d":2,"weights":{"12":"0","13":"1","23":"0"}}],"metadata":{"seed":9}})");
    const InstanceFile back = parse_instance(j.dump());
    CHECK(back.flag.layers[0] == f.flag.layers[0]);
    CHECK(back.flag.layers[1] == f.flag.layers[1]);
    for (const auto name : builtin_names()) {
        const FlagInstance flag = builtin_instance(name);
        const FlagInstance again = parse_instance(instance_to_json(flag).dump()).flag;
        CHECK(again.layers[0] == flag.layers[0]);
        CHECK(again.layers[1] == flag.layers[1]);
    }
}

TEST_CASE("malformed instance files carry positions") {
    // Literal duplicate key: points at the second occurrence.
    const std::string dup = R"({"n": 3, "layers": [{"d": 1, "weights": {"1": 0, "2": 0, "2": 1, "3": 0}}]})";
    CHECK(parse_position(dup) == static_cast<long>(dup.rfind("\"2\"")));
    // Same subset spelled twice.
    const std::string canon = R"({"n": 3, "layers": [{"d": 2, "weights": {"12": 0, "21": 0, "13": 0, "23": 0}}]})";
    CHECK(parse_position(canon) == static_cast<long>(canon.find("\"21\"")));
    const std::string syntax = R"({"n": 3, "layers": [)";
    CHECK(parse_position(syntax) >= 0);
    const std::string bad_rational = R"({"n": 3, "layers": [{"d": 1, "weights": {"1": "1/x", "2": 0, "3": 0}}]})";
    CHECK(parse_position(bad_rational) == static_cast<long>(bad_rational.find("\"1\"")));

    CHECK_THROWS_AS(parse_instance(R"({"n": 3, "layers": [{"d": 1, "weights": {"1": 0, "2": 0}}]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 3, "layers": [{"d": 1, "weights": {"1": 0.5, "2": 0, "3": 0}}]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 3, "layers": [{"d": 1, "weights": {"12": 0, "2": 0, "3": 0}}]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 3, "layers": [{"d": 3, "weights": {}}]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 3, "layers": []})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 3, "layers": [{"d": 1, "weights": {"1": 0, "2": 0, "3": 0}}], "x": 1})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 3, "layers": [{"d": 2, "weights": {"12": 0, "13": 0, "23": 0}},
                                                          {"d": 1, "weights": {"1": 0, "2": 0, "3": 0}}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance("[1, 2]"), ParseError);
}

TEST_CASE("matrix files") {
    const FlagMatrix fm = parse_matrix_file(R"({"n": 3, "dims": [1, 2], "entries": [["1", 0, "t"], ["0", "1", "1"]]})");
    CHECK(fm.dims == std::vector<int>{1, 2});
    CHECK(fm.matrix(0, 2) == LaurentPoly::parse("t"));
    const FlagMatrix again = parse_matrix_file(matrix_to_json(fm).dump());
    CHECK(again.matrix == fm.matrix);
    CHECK_THROWS_AS(parse_matrix_file(R"({"n": 3, "dims": [1, 2], "entries": [["1", "0", "t^"], ["0", "1", "1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix_file(R"({"n": 3, "dims": [1, 2], "entries": [["1", "0"], ["0", "1", "1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix_file(R"({"n": 3, "dims": [1, 3], "entries": [["1", "0", "1"], ["0", "1", "1"]]})"),
                    ParseError);
}

TEST_CASE("digests") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("violation and analysis serialization") {
    const FlagInstance bad = builtin_instance("paper-ex1-invalid");
    const Json rep = to_json(check_flag(bad), bad);
    CHECK(rep["valid"] == false);
    const Json& first = rep["incidence"][0]["violations"][0];
    CHECK(first.dump() == R"({"kind":"incidence","S":"2","T":"1234","indices":[1,3,4],"terms":["1","1","0"]})");
}
