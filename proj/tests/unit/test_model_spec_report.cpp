#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "qig/catalog.hpp"
#include "qig/model_spec.hpp"
#include "qig/report.hpp"

using namespace qig;
using nlohmann::json;

namespace {

LoadedModel load(const std::string& text) {
  return load_model_spec_text(text, "<inline>");
}

const CheckResult& find_check(const Report& report, const std::string& name) {
  for (const auto& c : report.checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check: ", name);
  static CheckResult dummy;
  return dummy;
}

// a tabulated pure-state spec built from qubit amplitudes at the full
// central-difference stencil
std::string tabulated_qubit_spec(double theta, double phi, double step) {
  const PureStateModel qubit = make_qubit();
  auto values = [&qubit](double th, double ph) {
    ParameterVector t(2);
    t << th, ph;
    const Eigen::VectorXcd psi = qubit.amplitudes(t);
    json rows = json::array();
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      rows.push_back({psi(i).real(), psi(i).imag()});
    }
    return rows;
  };

  json spec;
  spec["kind"] = "pure_state";
  spec["theta"] = {theta, phi};
  spec["space"] = {{"points", {0.0, 1.0}}, {"weights", {1.0, 1.0}}};
  spec["tables"] = {
      {"steps", {step, step}},
      {"center", values(theta, phi)},
      {"plus", {values(theta + step, phi), values(theta, phi + step)}},
      {"minus", {values(theta - step, phi), values(theta, phi - step)}},
  };
  return spec.dump();
}

}  // namespace

TEST_CASE("catalog specs load and report") {
  const LoadedModel coin =
      load(R"({"kind":"catalog","catalog":{"name":"bernoulli"},"theta":[0.5]})");
  CHECK(coin.kind == "probability");

  const Report report = run_report(coin);
  CHECK(report.overall() == CheckStatus::Pass);
  CHECK(report.fisher(0, 0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(exit_code_for(report) == 0);
}

TEST_CASE("qubit report passes the full pure-state check suite") {
  const LoadedModel loaded = load(
      R"({"kind":"catalog","catalog":{"name":"qubit"},"theta":[1.5707963267948966,0.0]})");
  const Report report = run_report(loaded);

  CHECK(report.overall() == CheckStatus::Pass);
  CHECK(report.has_pure);
  CHECK(report.has_qfi);
  CHECK(report.metric_part(0, 0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.metric_part(1, 1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(find_check(report, "qfi-three-way").status == CheckStatus::Pass);
  CHECK(find_check(report, "sld-residual").status == CheckStatus::Pass);
}

TEST_CASE("phase-encoding report: no classical information, gap = 1/2") {
  const LoadedModel loaded = load(
      R"({"kind":"catalog","catalog":{"name":"phase_encoding"},"theta":[0.4]})");
  const Report report = run_report(loaded);

  CHECK(report.overall() == CheckStatus::Pass);
  CHECK(report.fisher(0, 0) <= 1e-15);
  CHECK(report.g(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(report.alpha_covariance(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(find_check(report, "classical-recovery").status ==
        CheckStatus::NotApplicable);
  CHECK(report.metric_part(0, 0) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("tabulated pure-state specs run at tabulated quality") {
  const LoadedModel loaded =
      load(tabulated_qubit_spec(M_PI / 2.0, 0.0, 1e-6));
  CHECK(loaded.kind == "pure_state");

  const Report report = run_report(loaded);
  CHECK(report.tabulated);
  CHECK(report.overall() == CheckStatus::Pass);
  CHECK(report.g(0, 0) == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(report.omega(0, 1) == doctest::Approx(0.25).epsilon(1e-7));
}

TEST_CASE("tabulated probability specs reproduce the bernoulli values") {
  const ProbabilityModel coin = make_bernoulli();
  const double theta = 0.3, h = 1e-5;
  auto values = [&coin](double t) {
    ParameterVector p(1);
    p << t;
    const Eigen::VectorXd density = coin.density(p);
    return json::array({density(0), density(1)});
  };

  json spec;
  spec["kind"] = "probability";
  spec["theta"] = {theta};
  spec["space"] = {{"points", {0.0, 1.0}}, {"weights", {1.0, 1.0}}};
  spec["tables"] = {
      {"steps", {h}},
      {"center", values(theta)},
      {"plus", json::array({values(theta + h)})},
      {"minus", json::array({values(theta - h)})},
  };

  const LoadedModel loaded = load(spec.dump());
  CHECK(loaded.kind == "probability");
  const Report report = run_report(loaded);
  CHECK(report.overall() == CheckStatus::Pass);
  // linear family: central differences over the tables are exact
  CHECK(report.fisher(0, 0) == doctest::Approx(1.0 / 0.21).epsilon(1e-9));
}

TEST_CASE("support-boundary points fail the assembly check with a warning") {
  const LoadedModel loaded = load(
      R"({"kind":"catalog","catalog":{"name":"qubit"},"theta":[1e-7,0.3]})");
  const Report report = run_report(loaded);
  CHECK(find_check(report, "assembly-real").status == CheckStatus::Fail);
  bool flagged = false;
  for (const auto& w : report.warnings) {
    flagged = flagged || w.find("support boundary") != std::string::npos;
  }
  CHECK(flagged);
  CHECK(exit_code_for(report) == 2);
}

TEST_CASE("parse errors carry field context") {
  auto message_of = [](const std::string& text) {
    try {
      load(text);
      return std::string("no error");
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
  };

  CHECK(message_of(R"({"theta":[0.5]})").find("kind") != std::string::npos);
  CHECK(message_of(R"({"kind":"catalog","theta":[0.5]})").find("catalog") !=
        std::string::npos);
  CHECK(message_of(
            R"({"kind":"catalog","catalog":{"name":"nope"},"theta":[0.5]})")
            .find("unknown catalog model") != std::string::npos);
  CHECK(message_of(R"({"kind":"widget","theta":[0.5]})").find("unknown kind") !=
        std::string::npos);
  CHECK(message_of("{ not json").find("<inline>:1") != std::string::npos);

  // stencil completeness: drop the minus table for the second parameter
  json spec = json::parse(tabulated_qubit_spec(1.0, 0.3, 1e-6));
  spec["tables"]["minus"].erase(1);
  CHECK(message_of(spec.dump()).find("stencil") != std::string::npos);

  // theta arity must match the catalog model
  CHECK(message_of(
            R"({"kind":"catalog","catalog":{"name":"qubit"},"theta":[0.5]})")
            .find("expects 2 parameters") != std::string::npos);
}

TEST_CASE("tolerance overrides are explicit and validated") {
  const std::string base =
      R"({"kind":"catalog","catalog":{"name":"bernoulli"},"theta":[0.5],)";

  const LoadedModel strict =
      load(base + R"("options":{"tolerances":{"score_mean":1e-12}}})");
  CHECK(strict.tolerances.score_mean == 1e-12);

  CHECK_THROWS_AS(load(base + R"("options":{"tolerances":{"bogus":1.0}}})"),
                  ParseError);
  CHECK_THROWS_AS(load(base + R"("options":{"tolerances":{"sld":-1.0}}})"),
                  ParseError);
}

TEST_CASE("reports are deterministic without the timestamp") {
  const LoadedModel loaded = load(
      R"({"kind":"catalog","catalog":{"name":"qubit"},"theta":[0.7,0.2]})");
  const std::string a = render_report_json(run_report(loaded), false);
  const std::string b = render_report_json(run_report(loaded), false);
  CHECK(a == b);
  CHECK(a.find("\"timestamp\"") == std::string::npos);
  CHECK(render_report_json(run_report(loaded), true).find("\"timestamp\"") !=
        std::string::npos);
}

TEST_CASE("omega-sign mutation trips the assembly check") {
  const LoadedModel loaded = load(
      R"({"kind":"catalog","catalog":{"name":"qubit"},"theta":[1.1,0.4]})");

  RunOptions mutate;
  mutate.mutate = "omega-sign";
  const Report broken = run_report(loaded, mutate);
  CHECK(broken.overall() == CheckStatus::Fail);
  CHECK(find_check(broken, "assembly-imag").status == CheckStatus::Fail);
  CHECK(exit_code_for(broken) == 2);

  RunOptions unknown;
  unknown.mutate = "flip-everything";
  CHECK_THROWS_AS(run_report(loaded, unknown), ValidationError);
}

TEST_CASE("verify suite summarizes and validates count") {
  const VerifySummary summary = verify_suite(5, 2);
  CHECK(summary.failed == 0);
  CHECK(summary.models == 16);
  CHECK(summary.checks > 0);
  CHECK(summary.text.find("fail=0") != std::string::npos);

  CHECK_THROWS_AS(verify_suite(5, 0), ValidationError);

  RunOptions mutate;
  mutate.mutate = "omega-sign";
  CHECK(verify_suite(5, 1, mutate).failed > 0);
}

TEST_CASE("density spec round trip") {
  // tabulated density: the bernoulli diagonal embedding at theta = 0.3
  json spec;
  spec["kind"] = "density";
  spec["dim"] = 2;
  spec["theta"] = {0.3};
  const double h = 1e-6;
  auto rho_rows = [](double t) {
    return json::array({
        json::array({json::array({1.0 - t, 0.0}), json::array({0.0, 0.0})}),
        json::array({json::array({0.0, 0.0}), json::array({t, 0.0})}),
    });
  };
  spec["tables"] = {
      {"steps", {h}},
      {"center", rho_rows(0.3)},
      {"plus", json::array({rho_rows(0.3 + h)})},
      {"minus", json::array({rho_rows(0.3 - h)})},
  };

  const LoadedModel loaded = load(spec.dump());
  CHECK(loaded.kind == "density");
  const Report report = run_report(loaded);
  CHECK(report.overall() == CheckStatus::Pass);
  // classical value 1/(0.3 * 0.7) through the quantum route
  CHECK(report.metric_part(0, 0) ==
        doctest::Approx(1.0 / 0.21).epsilon(1e-6));
}
