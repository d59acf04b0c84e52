#include <catch2/catch_amalgamated.hpp>
#include <fstream>
#include <sstream>

#include "hlab/check.hpp"

using namespace hlab;

TEST_CASE("every registered check passes with default configuration") {
  RunConfig cfg;
  auto reports = run_checks(all_check_ids(), cfg);
  for (const auto& rep : reports) {
    INFO(rep.check_id << ": " << rep.detail);
    CHECK(rep.verdict == Verdict::kPass);
  }
  CHECK(aggregate_exit_code(reports) == 0);
}

TEST_CASE("check reports round-trip through JSON byte-identically") {
  RunConfig cfg;
  auto rep = run_check("hkr-p1", cfg);
  auto j = report_to_json(rep);
  std::string text = j.dump(2);
  auto parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump(2) == text);
  auto back = report_from_json(parsed);
  CHECK(report_to_json(back).dump(2) == text);
}

TEST_CASE("unknown check ids are usage errors") {
  RunConfig cfg;
  CHECK_THROWS_AS(run_check("unknown-id", cfg), UsageError);
  CHECK_THROWS_AS(run_checks({"hkr-p1", "nope"}, cfg), UsageError);
}

TEST_CASE("parallel runs agree with sequential ones") {
  RunConfig seq, par;
  par.jobs = 4;
  std::vector<std::string> ids{"hkr-p1", "veronese-2", "sl-duality-2", "bott-sanity",
                               "koszul-dual-2"};
  auto a = run_checks(ids, seq);
  auto b = run_checks(ids, par);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].check_id == b[k].check_id);
    CHECK(report_to_json(a[k], false).dump() == report_to_json(b[k], false).dump());
  }
}

TEST_CASE("prime-field cross-check mode") {
  RunConfig cfg;
  cfg.use_prime_field = true;
  cfg.prime = 1000003;
  for (const auto& id : {"hkr-p1", "gldim", "koszul-dual-2", "rolled-up-hilbert-2"}) {
    auto rep = run_check(id, cfg);
    INFO(id << ": " << rep.detail);
    CHECK(rep.verdict == Verdict::kPass);
  }
}

TEST_CASE("fresh reports match the committed golden files") {
  RunConfig cfg;
  for (const auto& id : all_check_ids()) {
    std::string path = std::string(HLAB_SOURCE_DIR) + "/tests/golden/" + id + ".json";
    std::ifstream in(path);
    INFO("golden file " << path << " (regenerate with: hlab check " << id
                        << " --format json --golden --out " << path << ")");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    auto rep = run_check(id, cfg);
    CHECK(report_to_json(rep, /*include_runtime=*/false).dump(2) + "\n" == buf.str());
  }
}
