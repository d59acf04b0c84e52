#pragma once

// Named verification suites: each check computes a dimension table twice,
// through the algebraic engine and through an independent oracle route, and
// passes only on exact agreement over the intersection of the validity
// windows.  Reports carry both provenances, the echoed parameters and the
// runtime; JSON serialization round-trips byte-identically.

#include <chrono>
#include <functional>
#include <json.hpp>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "hlab/constructions.hpp"
#include "hlab/dim_table.hpp"
#include "hlab/errors.hpp"
#include "hlab/geometry_oracle.hpp"
#include "hlab/hochschild.hpp"
#include "hlab/resolution.hpp"

namespace hlab {

enum class Verdict { kPass, kFail, kInsufficientPrecision };

inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    default:
      return "insufficient-precision";
  }
}

struct SideReport {
  std::string provenance;   // "algebraic" or "oracle"
  std::string description;  // what was computed, and over which field
  DimTable table;
};

struct CheckReport {
  std::string check_id;
  std::map<std::string, std::string> parameters;
  SideReport left, right;
  Verdict verdict = Verdict::kFail;
  std::string detail;  // first mismatch, when any
  long runtime_ms = 0;
};

struct RunConfig {
  bool use_prime_field = false;   // cross-check mode: run the rational-side
  std::uint64_t prime = 1000003;  // algebra computations over F_p instead
  int jobs = 1;
};

namespace detail {

inline Verdict settle(CheckReport& rep) {
  std::string why;
  switch (DimTable::compare(rep.left.table, rep.right.table, &why)) {
    case DimTable::Compare::kEqual:
      rep.verdict = Verdict::kPass;
      break;
    case DimTable::Compare::kDiffer:
      rep.verdict = Verdict::kFail;
      rep.detail = why;
      break;
    case DimTable::Compare::kNoOverlap:
      rep.verdict = Verdict::kInsufficientPrecision;
      rep.detail = "validity windows do not overlap";
      break;
  }
  return rep.verdict;
}

// Runs `body` for the configured coefficient field of the algebraic side.
template <class Fn>
auto with_field(const RunConfig& cfg, Fn&& body) {
  if (cfg.use_prime_field) return body(PrimeField(cfg.prime));
  return body(RationalField{});
}

inline DimTable hilbert_as_table(const HilbertSeries& h) {
  DimTable t;
  t.window.max_i = h.truncation();
  for (int d = 0; d <= h.truncation(); ++d) t.set(d, h.dim(d));
  return t;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual checks.  Suite ids are stable; `all` runs them in registry
// order.

inline CheckReport check_hkr(const RunConfig& cfg, int n) {
  CheckReport rep;
  rep.check_id = "hkr-p" + std::to_string(n - 1);
  int max_i = 2 * (n - 1) + 1;
  rep.parameters = {{"n", std::to_string(n)},
                    {"max_i", std::to_string(max_i)},
                    {"field", cfg.use_prime_field ? "fp:" + std::to_string(cfg.prime) : "rat"}};
  detail::with_field(cfg, [&](auto field) {
    auto A = beilinson_algebra(field, BeilinsonSpec{n, BeilinsonVariant::kSymmetric});
    rep.left = {"algebraic",
                "Hochschild cohomology of the symmetric tilting algebra, reduced bar complex over " +
                    field.name(),
                hh_cohomology(A, max_i)};
    return 0;
  });
  rep.right = {"oracle", "HKR assembly of Bott numbers for projective " + std::to_string(n - 1) +
                             "-space",
               hkr_cohomology_dims(n, max_i)};
  detail::settle(rep);
  return rep;
}

inline CheckReport check_hodge(const RunConfig& cfg, int n) {
  CheckReport rep;
  rep.check_id = "hodge-p" + std::to_string(n - 1);
  int max_i = 2 * (n - 1) + 1;
  rep.parameters = {{"n", std::to_string(n)},
                    {"max_i", std::to_string(max_i)},
                    {"field", cfg.use_prime_field ? "fp:" + std::to_string(cfg.prime) : "rat"}};
  detail::with_field(cfg, [&](auto field) {
    auto A = beilinson_algebra(field, BeilinsonSpec{n, BeilinsonVariant::kSymmetric});
    rep.left = {"algebraic", "Hochschild homology of the symmetric tilting algebra over " +
                                 field.name(),
                hh_homology(A, max_i)};
    return 0;
  });
  rep.right = {"oracle", "Hodge decomposition via Bott numbers (concentrated in degree 0)",
               hodge_homology_dims(n, -(n - 1), max_i)};
  detail::settle(rep);
  return rep;
}

inline CheckReport check_gldim(const RunConfig& cfg) {
  CheckReport rep;
  rep.check_id = "gldim";
  rep.parameters = {{"n", "2,3,4"},
                    {"field", cfg.use_prime_field ? "fp:" + std::to_string(cfg.prime) : "rat"}};
  // rows (i = n, d): d=0 gldim symmetric, d=1 gldim exterior, d=2/3 the
  // smoothness verdicts (1 = smooth)
  DimTable left, right;
  left.window.min_i = right.window.min_i = 2;
  left.window.max_i = right.window.max_i = 4;
  left.window.internal = right.window.internal = {{0, 3}};
  detail::with_field(cfg, [&](auto field) {
    for (int n = 2; n <= 4; ++n) {
      auto A0 = beilinson_algebra(field, BeilinsonSpec{n, BeilinsonVariant::kSymmetric});
      auto A1 = beilinson_algebra(field, BeilinsonSpec{n, BeilinsonVariant::kExterior});
      auto g0 = global_dimension(A0, n + 2);
      auto g1 = global_dimension(A1, n + 2);
      left.set(n, 0, g0.value ? *g0.value : -1);
      left.set(n, 1, g1.value ? *g1.value : -1);
      left.set(n, 2, smoothness_check(A0, n + 2) == Smoothness::kSmooth ? 1 : 0);
      left.set(n, 3, smoothness_check(A1, n + 2) == Smoothness::kSmooth ? 1 : 0);
      right.set(n, 0, n - 1);
      right.set(n, 1, n - 1);
      right.set(n, 2, 1);
      right.set(n, 3, 1);
    }
    return 0;
  });
  rep.left = {"algebraic", "global dimension via minimal resolutions of vertex simples; rows "
                           "(n, 0/1) = gldim of symmetric/exterior, (n, 2/3) = smooth flags",
              left};
  rep.right = {"oracle", "closed form: gldim = n-1, smooth", right};
  detail::settle(rep);
  return rep;
}

inline CheckReport check_koszul_dual(const RunConfig& cfg, int n) {
  CheckReport rep;
  rep.check_id = "koszul-dual-" + std::to_string(n);
  rep.parameters = {{"n", std::to_string(n)},
                    {"field", cfg.use_prime_field ? "fp:" + std::to_string(cfg.prime) : "rat"}};
  DimTable left, right;
  left.window.max_i = right.window.max_i = n - 1;
  left.window.internal = right.window.internal = {{0, 1}};
  detail::with_field(cfg, [&](auto field) {
    auto A0 = beilinson_algebra(field, BeilinsonSpec{n, BeilinsonVariant::kSymmetric});
    auto A1 = beilinson_algebra(field, BeilinsonSpec{n, BeilinsonVariant::kExterior});
    auto ext0 = ext_algebra_dims(A0, n - 1);
    auto ext1 = ext_algebra_dims(A1, n - 1);
    auto h0 = A0.hilbert();
    auto h1 = A1.hilbert();
    for (int i = 0; i <= n - 1; ++i) {
      left.set(i, 0, ext0.at(i));
      left.set(i, 1, ext1.at(i));
      right.set(i, 0, h1.dim(i));
      right.set(i, 1, h0.dim(i));
    }
    return 0;
  });
  rep.left = {"algebraic",
              "Ext-algebra dimensions of the simples; rows (i, 0) over the symmetric algebra, "
              "(i, 1) over the exterior one",
              left};
  rep.right = {"algebraic", "Hilbert function of the Koszul-dual partner, crosswise", right};
  detail::settle(rep);
  return rep;
}

inline CheckReport check_rolled_up_hilbert(const RunConfig& cfg, int n) {
  CheckReport rep;
  rep.check_id = "rolled-up-hilbert-" + std::to_string(n);
  const int D = 6;
  rep.parameters = {{"n", std::to_string(n)},
                    {"D", std::to_string(D)},
                    {"field", cfg.use_prime_field ? "fp:" + std::to_string(cfg.prime) : "rat"}};
  detail::with_field(cfg, [&](auto field) {
    auto B = rolled_up_algebra(field, n, D);
    rep.left = {"algebraic", "Hilbert function of the cyclic-quiver algebra over " + field.name(),
                detail::hilbert_as_table(B.hilbert())};
    return 0;
  });
  DimTable right;
  right.window.max_i = D;
  for (int d = 0; d <= D; ++d) right.set(d, rolled_up_expected_dim(n, d));
  rep.right = {"oracle", "matrix-of-Veronese-shifts dimension count", right};
  detail::settle(rep);
  return rep;
}

inline CheckReport check_dft_iso(const RunConfig& cfg, int n, std::uint64_t p, int D) {
  CheckReport rep;
  rep.check_id = "dft-iso-" + std::to_string(n);
  rep.parameters = {{"n", std::to_string(n)}, {"p", std::to_string(p)}, {"D", std::to_string(D)}};
  CyclicAction act{n, n, std::vector<int>(static_cast<std::size_t>(n), 1)};
  auto T = twisted_group_algebra(PrimeField(p), act, D);
  rep.left = {"algebraic",
              "Hilbert function of the twisted group algebra over fp:" + std::to_string(p) +
                  ", discrete-Fourier vertex basis",
              detail::hilbert_as_table(T.hilbert())};
  detail::with_field(cfg, [&](auto field) {
    auto B = rolled_up_algebra(field, n, D);
    rep.right = {"algebraic", "Hilbert function of the cyclic-quiver algebra over " + field.name(),
                 detail::hilbert_as_table(B.hilbert())};
    return 0;
  });
  detail::settle(rep);
  return rep;
}

inline CheckReport check_b0_gldim(const RunConfig& cfg, int n) {
  CheckReport rep;
  rep.check_id = "b0-gldim-" + std::to_string(n);
  const int D = 2 * n;
  rep.parameters = {{"n", std::to_string(n)},
                    {"D", std::to_string(D)},
                    {"field", cfg.use_prime_field ? "fp:" + std::to_string(cfg.prime) : "rat"}};
  DimTable left, right;
  left.window.max_i = right.window.max_i = n - 1;
  detail::with_field(cfg, [&](auto field) {
    auto B = rolled_up_algebra(field, n, D);
    for (int v = 0; v < n; ++v) {
      auto res = minimal_resolution(simple_module(B, v), n + 2);
      left.set(v, res.finished ? res.length() : -1);
      right.set(v, n);
    }
    return 0;
  });
  rep.left = {"algebraic",
              "projective dimension of each vertex simple, resolutions computed degree by degree "
              "up to internal degree " + std::to_string(D),
              left};
  rep.right = {"oracle", "expected homologically homogeneous value n", right};
  detail::settle(rep);
  return rep;
}

inline CheckReport check_twisted_hh_graded(const RunConfig&) {
  CheckReport rep;
  rep.check_id = "twisted-hh-graded";
  const int max_d = 4;
  rep.parameters = {{"vars", "2"}, {"order", "2"}, {"weights", "1,1"}, {"p", "5"},
                    {"max_d", std::to_string(max_d)}};
  CyclicAction act{2, 2, {1, 1}};
  auto T = twisted_group_algebra(PrimeField(5), act, 6);
  DimTable left;
  left.window.max_i = max_d;
  left.window.internal = {{0, max_d}};
  for (int d = 0; d <= max_d; ++d) {
    auto w = hh_graded(T, Direction::kHomology, d, max_d);
    for (int i = 0; i <= max_d; ++i) left.set(i, d, w.at(i, d));
  }
  rep.left = {"algebraic",
              "graded Hochschild homology windows of the twisted group algebra over fp:5", left};
  rep.right = {"oracle", "invariant monomial forms on the fixed-point scheme",
               fixed_point_hh_homology(act, max_d, max_d)};
  detail::settle(rep);
  return rep;
}

inline CheckReport check_sl_duality(const RunConfig&, int n) {
  CheckReport rep;
  rep.check_id = "sl-duality-" + std::to_string(n);
  const int max_d = 5;
  rep.parameters = {{"vars", std::to_string(n)}, {"order", std::to_string(n)},
                    {"weights", "all 1"}, {"max_d", std::to_string(max_d)}};
  CyclicAction act{n, n, std::vector<int>(static_cast<std::size_t>(n), 1)};
  rep.left = {"oracle", "fixed-point cohomology table (determinant-shifted count)",
              fixed_point_hh_cohomology(act, max_d)};
  auto hom = fixed_point_hh_homology(act, max_d);
  DimTable reflected;
  reflected.window.max_i = n;
  reflected.window.internal = {{0, max_d}};
  for (int i = 0; i <= n; ++i)
    for (int d = 0; d <= max_d; ++d) reflected.set(i, d, hom.at(n - i, d));
  rep.right = {"oracle", "fixed-point homology table reflected at i -> vars - i", reflected};
  detail::settle(rep);
  return rep;
}

inline CheckReport check_veronese(const RunConfig&, int n) {
  CheckReport rep;
  rep.check_id = "veronese-" + std::to_string(n);
  const int D = 8;
  rep.parameters = {{"n", std::to_string(n)}, {"D", std::to_string(D)}};
  rep.left = {"algebraic", "closed-form Veronese subring Hilbert function",
              detail::hilbert_as_table(veronese_hilbert(n, D))};
  CyclicAction act{n, n, std::vector<int>(static_cast<std::size_t>(n), 1)};
  auto id = fixed_point_hh_homology(act, D, -1, /*identity_only=*/true);
  DimTable right;
  right.window.max_i = D;
  for (int d = 0; d <= D; ++d) right.set(d, id.at(0, d));
  rep.right = {"oracle", "identity-summand invariant 0-form count of the diagonal action", right};
  detail::settle(rep);
  return rep;
}

inline CheckReport check_bott_sanity(const RunConfig&) {
  CheckReport rep;
  rep.check_id = "bott-sanity";
  rep.parameters = {{"n", "<=5"}, {"|m|", "<=8"}};
  long serre = 0, vanishing = 0, h0 = 0;
  for (int n = 2; n <= 5; ++n)
    for (int p = 0; p <= n - 1; ++p)
      for (int q = 0; q <= n - 1; ++q)
        for (int m = -8; m <= 8; ++m) {
          if (bott_dim(n, p, q, m) != bott_dim(n, n - 1 - p, n - 1 - q, -m)) ++serre;
          if (q >= 1 && m >= 0 && !(p == q && m == 0) && bott_dim(n, p, q, m) != 0) ++vanishing;
        }
  for (int n = 2; n <= 3; ++n)
    for (int p = 0; p <= n - 1; ++p)
      for (int m = 0; m <= 8; ++m)
        if (euler_koszul_h0(n, p, m) != bott_dim(n, p, 0, m)) ++h0;
  DimTable left, right;
  left.window.max_i = right.window.max_i = 2;
  left.set(0, serre);
  left.set(1, vanishing);
  left.set(2, h0);
  for (int i = 0; i <= 2; ++i) right.set(i, 0);
  rep.left = {"algebraic",
              "violation counters: Serre symmetry, vanishing pattern, h^0 vs Euler-Koszul kernel",
              left};
  rep.right = {"oracle", "zero violations expected", right};
  detail::settle(rep);
  return rep;
}

inline CheckReport check_engine_validation(const RunConfig& cfg) {
  CheckReport rep;
  rep.check_id = "engine-validation";
  rep.parameters = {{"field", cfg.use_prime_field ? "fp:" + std::to_string(cfg.prime) : "rat"}};
  long b2 = 0, euler = 0, reduced_vs_full = 0, center = 0;
  detail::with_field(cfg, [&](auto field) {
    using K = decltype(field);
    std::vector<GradedAlgebra<K>> finite;
    finite.push_back(dual_numbers_algebra(field, 5));
    for (int n = 2; n <= 3; ++n) {
      finite.push_back(beilinson_algebra(field, BeilinsonSpec{n, BeilinsonVariant::kSymmetric}));
      finite.push_back(beilinson_algebra(field, BeilinsonSpec{n, BeilinsonVariant::kExterior}));
    }
    // b^2 = 0 is asserted inside every complex constructor; any violation
    // throws and is counted here.  Euler identity checked on exhausted ones.
    for (const auto& A : finite) {
      for (auto dir : {Direction::kCohomology, Direction::kHomology}) {
        try {
          auto cx = dir == Direction::kCohomology ? reduced_cochain_complex(A, 5)
                                                  : reduced_chain_complex(A, 5);
          if (cx.exhausted && !euler_identity_holds(cx)) ++euler;
        } catch (const NotAComplexError&) {
          ++b2;
        } catch (const InsufficientPrecisionError&) {
          // dual numbers: chains never die; Euler identity not applicable
        }
      }
    }
    auto B = rolled_up_algebra(field, 2, 5);
    for (int d = 0; d <= 4; ++d) {
      try {
        auto cx = reduced_chain_complex(B, d + 1, d);
        if (!euler_identity_holds(cx)) ++euler;
      } catch (const NotAComplexError&) {
        ++b2;
      }
    }
    // reduced vs full on the two reference algebras
    auto D = dual_numbers_algebra(field, 5);
    auto Kr = beilinson_algebra(field, BeilinsonSpec{2, BeilinsonVariant::kSymmetric});
    for (const auto* A : {&D, &Kr}) {
      if (DimTable::compare(hh_cohomology(*A, 3), full_bar_cohomology(*A, 3)) !=
          DimTable::Compare::kEqual)
        ++reduced_vs_full;
      if (DimTable::compare(hh_homology(*A, 3), full_bar_homology(*A, 3)) !=
          DimTable::Compare::kEqual)
        ++reduced_vs_full;
    }
    // HH^0 = center, summed over internal degrees
    for (const auto& A : finite) {
      long c = 0;
      for (int d = 0; d <= A.truncation; ++d) c += A.center_dim(d);
      if (hh_cohomology(A, 0).at(0) != c) ++center;
    }
    return 0;
  });
  DimTable left, right;
  left.window.max_i = right.window.max_i = 3;
  left.set(0, b2);
  left.set(1, euler);
  left.set(2, reduced_vs_full);
  left.set(3, center);
  for (int i = 0; i <= 3; ++i) right.set(i, 0);
  rep.left = {"algebraic",
              "violation counters: b^2 != 0, Euler characteristic, reduced vs full bar, HH^0 vs "
              "center",
              left};
  rep.right = {"oracle", "zero violations expected", right};
  detail::settle(rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Registry and runner.

inline const std::vector<std::pair<std::string, std::function<CheckReport(const RunConfig&)>>>&
check_registry() {
  static const std::vector<std::pair<std::string, std::function<CheckReport(const RunConfig&)>>>
      reg = {
          {"hkr-p1", [](const RunConfig& c) { return check_hkr(c, 2); }},
          {"hkr-p2", [](const RunConfig& c) { return check_hkr(c, 3); }},
          {"hodge-p1", [](const RunConfig& c) { return check_hodge(c, 2); }},
          {"hodge-p2", [](const RunConfig& c) { return check_hodge(c, 3); }},
          {"hodge-p3", [](const RunConfig& c) { return check_hodge(c, 4); }},
          {"gldim", [](const RunConfig& c) { return check_gldim(c); }},
          {"koszul-dual-2", [](const RunConfig& c) { return check_koszul_dual(c, 2); }},
          {"koszul-dual-3", [](const RunConfig& c) { return check_koszul_dual(c, 3); }},
          {"rolled-up-hilbert-2", [](const RunConfig& c) { return check_rolled_up_hilbert(c, 2); }},
          {"rolled-up-hilbert-3", [](const RunConfig& c) { return check_rolled_up_hilbert(c, 3); }},
          {"dft-iso-2", [](const RunConfig& c) { return check_dft_iso(c, 2, 5, 6); }},
          {"dft-iso-3", [](const RunConfig& c) { return check_dft_iso(c, 3, 7, 4); }},
          {"b0-gldim-2", [](const RunConfig& c) { return check_b0_gldim(c, 2); }},
          {"b0-gldim-3", [](const RunConfig& c) { return check_b0_gldim(c, 3); }},
          {"twisted-hh-graded", [](const RunConfig& c) { return check_twisted_hh_graded(c); }},
          {"sl-duality-2", [](const RunConfig& c) { return check_sl_duality(c, 2); }},
          {"sl-duality-3", [](const RunConfig& c) { return check_sl_duality(c, 3); }},
          {"veronese-2", [](const RunConfig& c) { return check_veronese(c, 2); }},
          {"veronese-3", [](const RunConfig& c) { return check_veronese(c, 3); }},
          {"veronese-4", [](const RunConfig& c) { return check_veronese(c, 4); }},
          {"bott-sanity", [](const RunConfig& c) { return check_bott_sanity(c); }},
          {"engine-validation", [](const RunConfig& c) { return check_engine_validation(c); }},
      };
  return reg;
}

inline std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : check_registry()) ids.push_back(id);
  return ids;
}

inline CheckReport run_check(const std::string& id, const RunConfig& cfg) {
  for (const auto& [rid, fn] : check_registry()) {
    if (rid != id) continue;
    auto start = std::chrono::steady_clock::now();
    CheckReport rep;
    try {
      rep = fn(cfg);
    } catch (const InsufficientPrecisionError& e) {
      rep.check_id = id;
      rep.verdict = Verdict::kInsufficientPrecision;
      rep.detail = e.what();
    } catch (const ResourceLimitError& e) {
      rep.check_id = id;
      rep.verdict = Verdict::kInsufficientPrecision;
      rep.detail = e.what();
    }
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
  }
  throw UsageError("unknown check id '" + id + "'");
}

// Fan the checks across a small worker pool; results come back in input
// order, each check being an independent pure task.
inline std::vector<CheckReport> run_checks(const std::vector<std::string>& ids,
                                           const RunConfig& cfg) {
  for (const auto& id : ids) {
    bool known = false;
    for (const auto& [rid, fn] : check_registry()) known = known || rid == id;
    if (!known) throw UsageError("unknown check id '" + id + "'");
  }
  std::vector<CheckReport> out(ids.size());
  if (cfg.jobs <= 1) {
    for (std::size_t k = 0; k < ids.size(); ++k) out[k] = run_check(ids[k], cfg);
    return out;
  }
  std::mutex mu;
  std::size_t next = 0;
  auto worker = [&]() {
    while (true) {
      std::size_t mine;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= ids.size()) return;
        mine = next++;
      }
      out[mine] = run_check(ids[mine], cfg);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(cfg.jobs, static_cast<int>(ids.size())); ++t)
    pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

inline int aggregate_exit_code(const std::vector<CheckReport>& reports) {
  bool fail = false, insufficient = false;
  for (const auto& r : reports) {
    fail = fail || r.verdict == Verdict::kFail;
    insufficient = insufficient || r.verdict == Verdict::kInsufficientPrecision;
  }
  if (fail) return 1;
  if (insufficient) return 3;
  return 0;
}

// ---------------------------------------------------------------------------
// JSON serialization (ordered, so emitted reports re-serialize bytewise).

inline nlohmann::ordered_json table_to_json(const DimTable& t) {
  nlohmann::ordered_json j;
  j["min_i"] = t.window.min_i;
  j["max_i"] = t.window.max_i;
  if (t.window.graded()) {
    j["min_d"] = t.window.internal->first;
    j["max_d"] = t.window.internal->second;
  } else {
    j["min_d"] = nullptr;
    j["max_d"] = nullptr;
  }
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [key, value] : t.entries()) {
    nlohmann::ordered_json e = nlohmann::ordered_json::array();
    e.push_back(key.i);
    if (key.internal)
      e.push_back(*key.internal);
    else
      e.push_back(nullptr);
    e.push_back(value);
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

inline DimTable table_from_json(const nlohmann::ordered_json& j) {
  DimTable t;
  t.window.min_i = j.at("min_i").get<int>();
  t.window.max_i = j.at("max_i").get<int>();
  if (!j.at("min_d").is_null())
    t.window.internal = {j.at("min_d").get<int>(), j.at("max_d").get<int>()};
  for (const auto& e : j.at("entries")) {
    if (e.at(1).is_null())
      t.set(e.at(0).get<int>(), e.at(2).get<long>());
    else
      t.set(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long>());
  }
  return t;
}

inline nlohmann::ordered_json report_to_json(const CheckReport& rep, bool include_runtime = true) {
  nlohmann::ordered_json j;
  j["check_id"] = rep.check_id;
  nlohmann::ordered_json params;
  for (const auto& [k, v] : rep.parameters) params[k] = v;
  j["parameters"] = params;
  for (const auto* side : {&rep.left, &rep.right}) {
    nlohmann::ordered_json s;
    s["provenance"] = side->provenance;
    s["description"] = side->description;
    s["table"] = table_to_json(side->table);
    j[side == &rep.left ? "left" : "right"] = s;
  }
  j["verdict"] = verdict_str(rep.verdict);
  j["detail"] = rep.detail;
  if (include_runtime) j["runtime_ms"] = rep.runtime_ms;
  return j;
}

inline CheckReport report_from_json(const nlohmann::ordered_json& j) {
  CheckReport rep;
  rep.check_id = j.at("check_id").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items())
    rep.parameters[k] = v.get<std::string>();
  for (const char* key : {"left", "right"}) {
    SideReport side;
    side.provenance = j.at(key).at("provenance").get<std::string>();
    side.description = j.at(key).at("description").get<std::string>();
    side.table = table_from_json(j.at(key).at("table"));
    (std::string(key) == "left" ? rep.left : rep.right) = side;
  }
  std::string v = j.at("verdict").get<std::string>();
  rep.verdict = v == "pass" ? Verdict::kPass
                            : (v == "fail" ? Verdict::kFail : Verdict::kInsufficientPrecision);
  rep.detail = j.at("detail").get<std::string>();
  if (j.contains("runtime_ms")) rep.runtime_ms = j.at("runtime_ms").get<long>();
  return rep;
}

}  // namespace hlab
