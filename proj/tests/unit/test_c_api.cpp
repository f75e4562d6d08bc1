#include <doctest.h>

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bernstein_c.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { bn_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Index {
  bn_index* p = nullptr;
  Index(long b, long s, long k = -1) { REQUIRE(bn_index_create(b, s, k, &p) == BN_OK); }
  ~Index() { bn_index_destroy(p); }
};

}  // namespace

TEST_CASE("version and rational helpers") {
  CHECK(std::string(bn_version()).size() > 0);
  Owned r;
  REQUIRE(bn_rational_normalize("6/8", &r.p) == BN_OK);
  CHECK(r.str() == "3/4");
  Owned d;
  REQUIRE(bn_rational_normalize("0.25", &d.p) == BN_OK);
  CHECK(d.str() == "1/4");
  double v = 0;
  CHECK(bn_rational_to_double("1/3", &v) == BN_OK);
  CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  Owned bad;
  CHECK(bn_rational_normalize("1/0", &bad.p) == BN_ERR_INPUT);
  CHECK(bad.p == nullptr);
  CHECK(bn_rational_normalize("one half", &bad.p) == BN_ERR_INPUT);
  CHECK(std::string(bn_last_error()).find("one half") != std::string::npos);
  bn_string_free(nullptr);
}

TEST_CASE("index handles") {
  Index idx(2, 3);
  CHECK(bn_index_k(idx.p) == 6);
  Owned w;
  REQUIRE(bn_index_weight(idx.p, &w.p) == BN_OK);
  CHECK(w.str() == "1/16");
  Index explicit_k(1, 2, 0);
  CHECK(bn_index_k(explicit_k.p) == 0);
  bn_index* none = nullptr;
  CHECK(bn_index_create(0, 1, -1, &none) == BN_ERR_INPUT);
  CHECK(none == nullptr);
  bn_index_destroy(nullptr);
}

TEST_CASE("exact family values") {
  Index idx(1, 1);
  Owned a, b;
  REQUIRE(bn_eval_closed(2, idx.p, "1/2", &a.p) == BN_OK);
  REQUIRE(bn_eval_recurrence(2, idx.p, "1/2", &b.p) == BN_OK);
  CHECK(a.str() == "1/2");
  CHECK(b.str() == "1/2");

  Index idx12(1, 2);
  Owned series;
  REQUIRE(bn_series_expand(idx12.p, "1/2", 3, &series.p) == BN_OK);
  CHECK(nlohmann::json::parse(series.str()) == nlohmann::json({"0", "0", "1/8", "3/16"}));

  Owned poly, deriv;
  REQUIRE(bn_to_polynomial(2, idx.p, &poly.p) == BN_OK);
  CHECK(nlohmann::json::parse(poly.str()) == nlohmann::json({"0", "2", "-2"}));
  REQUIRE(bn_derivative(2, idx.p, &deriv.p) == BN_OK);
  CHECK(nlohmann::json::parse(deriv.str()) == nlohmann::json({"2", "-4"}));

  Owned u;
  REQUIRE(bn_umbral_sum(3, idx.p, "1/3", &u.p) == BN_OK);
  CHECK(u.str() == "0");

  Owned s2, bern, lhs, rhs;
  REQUIRE(bn_stirling2(5, 2, &s2.p) == BN_OK);
  CHECK(s2.str() == "15");
  REQUIRE(bn_bernoulli_higher(2, 1, "0", &bern.p) == BN_OK);
  CHECK(bern.str() == "1/6");
  REQUIRE(bn_connection_identity(4, idx.p, "1/3", &lhs.p, &rhs.p) == BN_OK);
  CHECK(lhs.str() == rhs.str());

  Owned neg;
  REQUIRE(bn_interp_negative_integer(2, idx.p, "1/2", &neg.p) == BN_OK);
  CHECK(neg.str() == "1/2");

  Owned bad;
  CHECK(bn_eval_closed(2, idx.p, "1//2", &bad.p) == BN_ERR_INPUT);
  CHECK(bn_eval_closed(2, nullptr, "1/2", &bad.p) == BN_ERR_INPUT);
  CHECK(bn_derivative(0, idx.p, &bad.p) == BN_ERR_INPUT);
}

TEST_CASE("floating interpolation entry points") {
  Index idx(1, 1);
  double re = 0, im = 0;
  REQUIRE(bn_interp_eval(1, 0, idx.p, "1/2", &re, &im) == BN_OK);
  CHECK(re == doctest::Approx(-2.0));
  REQUIRE(bn_beta_form(2, 0, idx.p, "1/2", &re, &im) == BN_OK);
  CHECK(re == doctest::Approx(-8.0));
  REQUIRE(bn_mellin(1, 0, idx.p, "1/2", 0, 0.0, &re, &im) == BN_OK);
  CHECK(re == doctest::Approx(-2.0));
  REQUIRE(bn_contour(2, idx.p, "1/2", 1.0, 64, &re, &im) == BN_OK);
  CHECK(re == doctest::Approx(0.5));

  CHECK(bn_interp_eval(1, 0, idx.p, "1", &re, &im) == BN_ERR_DIVERGENT);
  CHECK(bn_mellin(1, 0, idx.p, "99/100", 0, 100.0, &re, &im) == BN_ERR_TAIL);
  CHECK(bn_contour(5, idx.p, "1/2", 1.0, 4, &re, &im) == BN_ERR_INPUT);
}

TEST_CASE("operator entry points") {
  Owned g, part, applied;
  REQUIRE(bn_g_basis(2, 1, "1/2", &g.p) == BN_OK);
  CHECK(g.str() == "1/2");
  REQUIRE(bn_partition_check(7, "2/9", &part.p) == BN_OK);
  CHECK(part.str() == "1");
  REQUIRE(bn_operator_apply("x^2", 10, "1/2", &applied.p) == BN_OK);
  CHECK(applied.str() == "11/40");

  double values[3] = {};
  REQUIRE(bn_basis_values(2, "0.5", values, 3) == BN_OK);
  CHECK(values[0] == 0.25);
  CHECK(values[1] == 0.5);
  CHECK(values[2] == 0.25);
  CHECK(bn_basis_values(2, "0.5", values, 2) == BN_ERR_INPUT);

  const long ns[] = {10, 20, 40};
  const char* grid[] = {"0", "1/4", "1/2", "3/4", "1"};
  Owned csv, json;
  REQUIRE(bn_operator_table("x^2", ns, 3, grid, 5, BN_FORMAT_CSV, &csv.p) == BN_OK);
  CHECK(csv.str() == "n,sup_error\n10,0.025\n20,0.0125\n40,0.00625\n");
  REQUIRE(bn_operator_table("sin", ns, 3, grid, 5, BN_FORMAT_JSON, &json.p) == BN_OK);
  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc["function"] == "sin");
  CHECK(doc["rows"].size() == 3);

  Owned bad;
  CHECK(bn_operator_apply("tan", 3, "1/2", &bad.p) == BN_ERR_INPUT);
  CHECK(bn_operator_table("x", ns, 0, grid, 5, BN_FORMAT_CSV, &bad.p) == BN_ERR_INPUT);
}

TEST_CASE("polygon handles") {
  bn_polygon* poly = nullptr;
  REQUIRE(bn_polygon_parse("0,0:0,1:1,1:1,0", &poly) == BN_OK);
  CHECK(bn_polygon_size(poly) == 4);
  CHECK(bn_polygon_dimension(poly) == 2);
  double p[3] = {};
  for (auto m : {BN_CURVE_BASIS, BN_CURVE_GENERALIZED, BN_CURVE_DE_CASTELJAU}) {
    REQUIRE(bn_curve_eval(poly, 0.5, m, p) == BN_OK);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p[1] == doctest::Approx(0.75).epsilon(1e-15));
  }
  double masses[4] = {};
  REQUIRE(bn_cubic_mass_demo(poly, 0.5, masses, p) == BN_OK);
  CHECK(masses[1] == 0.375);
  Owned svg;
  REQUIRE(bn_curve_export(poly, 33, BN_FORMAT_SVG, &svg.p) == BN_OK);
  CHECK(svg.str().find("<svg") != std::string::npos);
  Owned bad;
  CHECK(bn_curve_export(poly, 1, BN_FORMAT_JSON, &bad.p) == BN_ERR_INPUT);
  CHECK(bn_curve_export(poly, 5, BN_FORMAT_CSV, &bad.p) == BN_ERR_INPUT);
  CHECK(bn_curve_eval(poly, 2.0, BN_CURVE_BASIS, p) == BN_ERR_INPUT);
  bn_polygon_destroy(poly);

  const double coords[] = {0, 0, 0, 1, 1, 1};
  REQUIRE(bn_polygon_create(coords, 2, 3, &poly) == BN_OK);
  CHECK(bn_polygon_dimension(poly) == 3);
  CHECK(bn_cubic_mass_demo(poly, 0.5, masses, p) == BN_ERR_INPUT);
  bn_polygon_destroy(poly);
  poly = nullptr;
  CHECK(bn_polygon_parse("0,0", &poly) == BN_ERR_INPUT);
  CHECK(poly == nullptr);
}

TEST_CASE("audit handles") {
  bn_audit_report* report = nullptr;
  REQUIRE(bn_audit_run(6, &report) == BN_OK);
  REQUIRE(bn_audit_count(report) > 0);
  bool corollary_fails = false;
  for (std::size_t i = 0; i < bn_audit_count(report); ++i) {
    const char* name = nullptr;
    int holds = -1;
    REQUIRE(bn_audit_entry(report, i, &name, &holds) == BN_OK);
    if (std::string(name) == "corollary") corollary_fails = holds == 0;
  }
  CHECK(corollary_fails);
  const char* name = nullptr;
  int holds = 0;
  CHECK(bn_audit_entry(report, 999, &name, &holds) == BN_ERR_INPUT);
  Owned json;
  REQUIRE(bn_audit_to_json(report, &json.p) == BN_OK);
  CHECK(nlohmann::json::parse(json.str()).is_array());
  bn_audit_destroy(report);
  CHECK(bn_audit_run(0, &report) == BN_ERR_INPUT);
}

TEST_CASE("last error is per thread") {
  Owned bad;
  CHECK(bn_rational_normalize("x", &bad.p) == BN_ERR_INPUT);
  std::string other;
  std::thread([&] {
    Owned ok;
    bn_rational_normalize("1", &ok.p);
    other = bn_last_error();
  }).join();
  CHECK(other.empty());
  CHECK(std::string(bn_last_error()).size() > 0);
}
