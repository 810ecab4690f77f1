#include "doctest.h"

#include "sympinv/io.hpp"

using namespace sympinv;

TEST_CASE("matrix and element round trips") {
  Field f = Field::prime(7);
  Mat m(f, {{1, 2}, {3, 5}});
  CHECK(matrix_from_json(to_json(m)) == m);
  Field q = Field::rational();
  Mat r(q, 1, 2, {Scalar::parse(q, "1/2"), Scalar::parse(q, "-3")});
  Json rj = to_json(r);
  CHECK(rj["rows"][0][0] == "1/2");
  CHECK(matrix_from_json(rj) == r);
  auto e = SymplecticElement::standard(Mat(f, {{1, 1}, {0, 1}}));
  auto back = element_from_json(to_json(e));
  CHECK(back.matrix() == e.matrix());
  CHECK(back.space().is_standard());
  Poly p(f, {1, 0, 1});
  CHECK(poly_from_json(f, to_json(p)) == p);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(element_from_json(parse_json(R"({"matrix": {"rows": [[1]]}})")), ParseError);
  CHECK_THROWS_AS(element_from_json(parse_json(R"({"matrix": {"field": {"kind": "prime", "p": 3}, "rows": [[1, 1], [1]]}})")),
                  ParseError);
  CHECK_THROWS_AS(element_from_json(parse_json(R"({"matrix": {"field": {"kind": "prime", "p": 3}, "rows": [[1, 1], [1, 1]]}})")),
                  NotSymplectic);
  CHECK_THROWS_AS(element_from_json(parse_json(R"({"matrix": {"field": {"kind": "prime", "p": 4}, "rows": [[1, 0], [0, 1]]}})")),
                  UnsupportedField);
}

TEST_CASE("report and witness json") {
  Field f = Field::prime(3);
  auto phi = SymplecticElement::standard(Mat::identity(f, 4));
  Json j = to_json(classify(phi));
  CHECK(j["bireflectional"]["verdict"] == "true");
  CHECK(j["inv_skew"]["verdict"] == "false");
  CHECK(j["elementary_divisor_table"].size() == 1);
  Witness w = witness_from_json(f, j["bireflectional"]["witness"]);
  CHECK(verify_witness(phi, w));
  Json wall = wall_report(SymplecticElement::standard(Mat(f, {{1, 1}, {0, 1}})));
  CHECK(wall["theta_is_square"] == false);
  CHECK(wall["antitriangular"]["conditions_hold"] == true);
}
