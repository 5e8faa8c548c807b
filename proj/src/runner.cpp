// Copyright 2026 the greedylab authors
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

#include "greedylab/runner.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "greedylab/condest.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/suites.hpp"

namespace greedylab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

Weight weight_from_spec(const std::string& spec) {
  if (spec.rfind("power:", 0) == 0)
    return Weight::power(std::strtod(spec.c_str() + 6, nullptr));
  if (spec.rfind("list:", 0) == 0) {
    Vec entries;
    for (const std::string& tok : split(spec.substr(5), ';'))
      if (!tok.empty()) entries.push_back(std::strtod(tok.c_str(), nullptr));
    return Weight::explicit_list(entries);
  }
  throw std::runtime_error("config: bad weight spec: " + spec);
}

SymSpace space_from(const ConfigSection& sec) {
  const std::string name = sec.get_or("space", "l2");
  if (name == "c0") return SymSpace::c0();
  if (name == "variation") return SymSpace::variation();
  if (name == "weak_lorentz")
    return SymSpace::weak_lorentz(weight_from_spec(sec.get("weight")));
  if (name == "lorentz")
    return SymSpace::lorentz(sec.get_double_or("q", 1.0),
                             weight_from_spec(sec.get("weight")));
  if (name == "lp") return SymSpace::lp(sec.get_double("p"));
  if (name.size() > 1 && name[0] == 'l') {
    char* end = nullptr;
    const double p = std::strtod(name.c_str() + 1, &end);
    if (end && *end == '\0') return SymSpace::lp(p);
  }
  throw std::runtime_error("config: unknown space: " + name);
}

BasisRep basis_from(const ConfigSection& sec, const SymSpace& space) {
  const std::string name = sec.get_or("basis", "unit");
  auto single = [&](const std::string& n) -> BasisRep {
    if (n == "unit") return unit_vector_basis(space);
    if (n == "summing") return summing_basis();
    if (n == "difference") return difference_basis();
    throw std::runtime_error("config: unknown basis: " + n);
  };
  const auto plus = name.find('+');
  if (plus != std::string::npos)
    return direct_sum(single(name.substr(0, plus)), single(name.substr(plus + 1)));
  return single(name);
}

bool wants_gauge(const ConfigSection& sec) {
  return sec.has("partition") || sec.has("blocks") || sec.has("sizes");
}

Partition partition_from(const ConfigSection& sec) {
  const std::string kind = sec.get_or("partition", "dyadic");
  if (kind == "dyadic")
    return Partition::dyadic(
        static_cast<std::size_t>(sec.get_int_or("blocks", 7)));
  if (kind == "explicit") {
    std::vector<std::size_t> sizes;
    for (const std::string& tok : split(sec.get("sizes"), ';'))
      if (!tok.empty())
        sizes.push_back(static_cast<std::size_t>(std::strtoull(tok.c_str(), nullptr, 10)));
    return Partition(std::move(sizes));
  }
  throw std::runtime_error("config: unknown partition kind: " + kind);
}

GaugeSpace gauge_from(const ConfigSection& sec) {
  const SymSpace space = space_from(sec);
  return GaugeSpace(basis_from(sec, space), space, partition_from(sec));
}

SearchBudget budget_from(const ConfigSection& sec) {
  SearchBudget b;
  b.random_sets = static_cast<std::size_t>(sec.get_int_or("budget", 64));
  return b;
}

std::uint64_t seed_for(const ConfigSection& sec, std::uint64_t cli_seed) {
  return static_cast<std::uint64_t>(sec.get_int_or("seed", static_cast<std::int64_t>(cli_seed)));
}

void echo_section(Report& rep, const ConfigSection& sec) {
  for (const auto& [k, v] : sec.values)
    rep.metadata["section." + sec.name + "." + k] = v;
}

std::string key_of(const ConfigSection& sec, const std::string& stem) {
  return sec.name + "/" + stem;
}

LambdaFn lambda_from(const ConfigSection& sec,
                     std::shared_ptr<SymSpace>* keep_alive) {
  const std::string spec = sec.get_or("lambda", "space");
  if (spec.rfind("power:", 0) == 0) {
    const double a = std::strtod(spec.c_str() + 6, nullptr);
    return [a](std::size_t m) { return std::pow(static_cast<double>(m), a); };
  }
  if (spec == "log")
    return [](std::size_t m) { return std::log(static_cast<double>(m) + 1.0); };
  if (spec == "space") {
    auto sp = std::make_shared<SymSpace>(space_from(sec));
    *keep_alive = sp;
    return [sp](std::size_t m) { return sp->lambda(m); };
  }
  throw std::runtime_error("config: bad lambda spec: " + spec);
}

void base_metadata(Report& rep, const Config& cfg, std::uint64_t seed) {
  rep.metadata["tool"] = "greedylab 0.1.0";
  rep.metadata["seed"] = std::to_string(seed);
  rep.metadata["timestamp"] = std::to_string(
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
  (void)cfg;
}

}  // namespace

Report cmd_norm(const Config& cfg, std::uint64_t seed) {
  Report rep;
  rep.command = "norm";
  base_metadata(rep, cfg, seed);
  for (const ConfigSection& sec : cfg.sections) {
    echo_section(rep, sec);
    const bool gauge_mode = wants_gauge(sec);
    std::unique_ptr<GaugeSpace> y;
    SymSpace space = space_from(sec);
    BasisRep basis = basis_from(sec, space);
    if (gauge_mode) y = std::make_unique<GaugeSpace>(gauge_from(sec));
    for (const auto& [k, v] : sec.values) {
      if (k.rfind("vector", 0) != 0) continue;
      Vec f;
      for (const std::string& tok : split(v, ' '))
        if (!tok.empty()) f.push_back(std::strtod(tok.c_str(), nullptr));
      const auto start = Clock::now();
      double value;
      if (gauge_mode)
        value = y->norm(f);
      else if (sec.has("basis"))
        value = basis.norm(f);
      else
        value = space.norm(f);
      rep.add(key_of(sec, "norm[" + k + "]"), value, true, "", ms_since(start));
    }
  }
  return rep;
}

Report cmd_constants(const Config& cfg, std::uint64_t seed) {
  Report rep;
  rep.command = "constants";
  base_metadata(rep, cfg, seed);
  for (const ConfigSection& sec : cfg.sections) {
    echo_section(rep, sec);
    const std::uint64_t s = seed_for(sec, seed);
    const SearchBudget budget = budget_from(sec);
    const std::string quantity = sec.get_or("quantity", "L");
    const bool exact = sec.get_or("mode", "search") == "exact";
    const bool gauge_mode = wants_gauge(sec);

    if (quantity == "witness") {
      if (!gauge_mode)
        throw std::runtime_error("config: witness sweep needs a partition");
      const GaugeSpace y = gauge_from(sec);
      const std::size_t r_min = static_cast<std::size_t>(sec.get_int_or("r_min", 1));
      const std::size_t r_max = static_cast<std::size_t>(
          sec.get_int_or("r_max", static_cast<std::int64_t>(y.partition().blocks())));
      std::vector<std::pair<double, double>> table;
      for (std::size_t r = r_min; r <= r_max; ++r) {
        const auto start = Clock::now();
        const ProjNormResult w = gauge_witness_lower_bound(y, r, budget, s + r);
        const std::size_t m = y.partition().cumulative(r);
        table.emplace_back(static_cast<double>(m), w.value);
        rep.add(key_of(sec, "witness_lb[r=" + std::to_string(r) +
                                ",m=" + std::to_string(m) + "]"),
                w.value, false, encode_witness("proj", w.witness_f, w.witness_set),
                ms_since(start));
      }
      if (table.size() >= 3) {
        const GrowthFit fit = log_growth_fit(table);
        rep.add(key_of(sec, "fit_slope_vs_logm"), fit.slope, false);
        rep.add(key_of(sec, "fit_intercept"), fit.intercept, false);
        rep.add(key_of(sec, "fit_residual"), fit.residual, false);
      }
      continue;
    }

    const SymSpace space = space_from(sec);
    std::unique_ptr<GaugeSpace> y;
    BasisRep basis = basis_from(sec, space);
    std::vector<WitnessCandidate> extras;
    if (gauge_mode) {
      y = std::make_unique<GaugeSpace>(gauge_from(sec));
      basis = gauge_unit_basis(*y);
    }
    const std::size_t m_min = static_cast<std::size_t>(sec.get_int_or("m_min", 1));
    const std::size_t m_max = static_cast<std::size_t>(sec.get_int_or("m_max", 8));
    for (std::size_t m = m_min; m <= m_max; ++m) {
      const auto start = Clock::now();
      if (gauge_mode) {
        extras.clear();
        for (std::size_t r = 1; r <= y->partition().blocks(); ++r) {
          if (y->partition().cumulative(r) > m) break;
          const ProjNormResult w = gauge_witness_lower_bound(*y, r, budget, s + r);
          extras.emplace_back(w.witness_f, w.witness_set);
        }
      }
      ProjNormResult res;
      if (quantity == "L") {
        res = compute_L_m(basis, m, exact, budget, s + m, extras);
        rep.add(key_of(sec, "L[m=" + std::to_string(m) + "]"), res.value,
                res.exact, encode_witness("proj", res.witness_f, res.witness_set),
                ms_since(start));
      } else if (quantity == "k") {
        const std::size_t dim = static_cast<std::size_t>(
            sec.get_int_or("dim", static_cast<std::int64_t>(std::max<std::size_t>(2 * m, 8))));
        res = compute_k_m(basis, m, dim, exact, budget, s + m);
        rep.add(key_of(sec, "k[m=" + std::to_string(m) + "]"), res.value,
                res.exact, encode_witness("proj", res.witness_f, res.witness_set),
                ms_since(start));
      } else {
        throw std::runtime_error("config: unknown quantity: " + quantity);
      }
    }
  }
  return rep;
}

Report cmd_greedy(const Config& cfg, std::uint64_t seed) {
  Report rep;
  rep.command = "greedy";
  base_metadata(rep, cfg, seed);
  for (const ConfigSection& sec : cfg.sections) {
    echo_section(rep, sec);
    const std::uint64_t s = seed_for(sec, seed);
    const std::string quantity = sec.get_or("quantity", "qg");
    const bool gauge_mode = wants_gauge(sec);
    std::unique_ptr<GaugeSpace> y;
    std::unique_ptr<SymSpace> space;
    NormHandle normer;
    if (gauge_mode) {
      y = std::make_unique<GaugeSpace>(gauge_from(sec));
      normer = NormHandle::of(*y);
    } else {
      space = std::make_unique<SymSpace>(space_from(sec));
      normer = NormHandle::of(*space);
    }
    std::size_t dim = static_cast<std::size_t>(
        sec.get_int_or("dim", gauge_mode ? static_cast<std::int64_t>(y->dim()) : 16));
    if (gauge_mode) dim = std::min(dim, y->dim());
    const std::size_t trials = static_cast<std::size_t>(sec.get_int_or("trials", 200));

    if (quantity == "qg") {
      const auto start = Clock::now();
      const QgEstimate est = qg_ratio_estimate(normer, dim, trials, s);
      const double ms = ms_since(start);
      rep.add(key_of(sec, "qg_residual_ratio"), est.max_residual_ratio, false,
              encode_witness("resid", est.residual_witness.f,
                             greedy_set(est.residual_witness.f,
                                        est.residual_witness.m)),
              ms);
      rep.add(key_of(sec, "qg_projection_ratio"), est.max_projection_ratio,
              false,
              encode_witness("proj", est.projection_witness.f,
                             greedy_set(est.projection_witness.f,
                                        est.projection_witness.m)),
              0.0);
      rep.add(key_of(sec, "partial_sum_ratio"), est.max_partial_sum_ratio, false);
      if (gauge_mode) {
        const GaugeConstants c = y->constants();
        if (c.applicable) {
          const double cs = y->partition().c_sigma();
          const double cd = dini_constant(
              [&](std::size_t m) { return y->space().lambda(m); }, y->dim());
          const double bound = est.max_partial_sum_ratio + c.c_a +
                               (1.0 + cs) * (3.0 + cs) * cd;
          rep.add(key_of(sec, "qg_bound"), bound, false);
          rep.add(key_of(sec, "qg_within_bound"),
                  est.max_residual_ratio <= bound ? 1.0 : 0.0, true);
        }
      }
      if (normer.one_unconditional)
        rep.add(key_of(sec, "qg_within_one"),
                est.max_residual_ratio <= 1.0 + 1e-9 &&
                        est.max_projection_ratio <= 1.0 + 1e-9
                    ? 1.0
                    : 0.0,
                true);
      continue;
    }

    const std::size_t m_min = static_cast<std::size_t>(sec.get_int_or("m_min", 1));
    const std::size_t m_max = static_cast<std::size_t>(sec.get_int_or("m_max", 8));
    for (std::size_t m = m_min; m <= m_max && m <= dim; ++m) {
      const auto start = Clock::now();
      if (quantity == "phi") {
        const bool exact = sec.get_or("mode", "search") == "exact";
        const PhiResult phi = fundamental_phi(
            normer, m, dim, exact,
            static_cast<std::size_t>(sec.get_int_or("budget", 64)), s + m);
        rep.add(key_of(sec, "phi[m=" + std::to_string(m) + "]"), phi.value,
                phi.exact, encode_witness("ind", {}, phi.witness_set),
                ms_since(start));
        if (phi.upper_bound > 0)
          rep.add(key_of(sec, "phi_upper[m=" + std::to_string(m) + "]"),
                  phi.upper_bound, false);
      } else if (quantity == "superdem") {
        const SuperDemocracyResult sd = superdemocracy_ratio(normer, m, dim, trials, s + m);
        rep.add(key_of(sec, "superdem_ratio[m=" + std::to_string(m) + "]"),
                sd.ratio, sd.exact, "", ms_since(start));
        if (sd.cap > 0)
          rep.add(key_of(sec, "superdem_cap[m=" + std::to_string(m) + "]"),
                  sd.cap, false);
      } else {
        throw std::runtime_error("config: unknown quantity: " + quantity);
      }
    }
  }
  return rep;
}

Report cmd_weights(const Config& cfg, std::uint64_t seed) {
  Report rep;
  rep.command = "weights";
  base_metadata(rep, cfg, seed);
  for (const ConfigSection& sec : cfg.sections) {
    echo_section(rep, sec);
    const unsigned b_max = static_cast<unsigned>(sec.get_int_or("b_max", 64));
    const std::size_t m_max = static_cast<std::size_t>(sec.get_int_or("m_max", 10000));
    std::shared_ptr<SymSpace> keep;
    if (sec.has("lambda") || sec.has("space")) {
      const LambdaFn lam = lambda_from(sec, &keep);
      const auto start = Clock::now();
      const auto lrp = check_lrp(lam, b_max, m_max);
      rep.add(key_of(sec, "lrp_b"), lrp ? static_cast<double>(*lrp) : 0.0, true,
              "", ms_since(start));
      const auto urp = check_urp(lam, b_max, m_max);
      rep.add(key_of(sec, "urp_b"), urp ? static_cast<double>(*urp) : 0.0, true);
      rep.add(key_of(sec, "dini"), dini_constant(lam, m_max), true);
    }
    if (sec.has("bidemocracy_m_max")) {
      const SymSpace space = space_from(sec);
      const std::uint64_t s = seed_for(sec, seed);
      const std::size_t mm =
          static_cast<std::size_t>(sec.get_int("bidemocracy_m_max"));
      const std::size_t budget =
          static_cast<std::size_t>(sec.get_int_or("budget", 128));
      for (std::size_t m = 1; m <= mm; ++m) {
        const BidemocracyRow row = bidemocracy_row(space, m, budget, s + m);
        IndexSet prefix(m);
        for (std::size_t j = 0; j < m; ++j) prefix[j] = j;
        rep.add(key_of(sec, "mu[m=" + std::to_string(m) + "]"), row.mu,
                row.exact, encode_witness("dual", row.witness, prefix));
        rep.add(key_of(sec, "bidemocracy_product[m=" + std::to_string(m) + "]"),
                row.product, row.exact);
      }
    }
    if (wants_gauge(sec)) {
      const Partition part = partition_from(sec);
      rep.add(key_of(sec, "c_sigma"), part.c_sigma(), true);
      rep.add(key_of(sec, "c_sigma_shift"), part.c_sigma_shift(), true);
      rep.add(key_of(sec, "log_growth"), part.log_growth(), true);
      if (sec.has("basis")) {
        const GaugeSpace y = gauge_from(sec);
        const GaugeConstants c = y.constants();
        rep.add(key_of(sec, "c1"), c.c1, true);
        rep.add(key_of(sec, "c2"), c.c2, true);
        rep.add(key_of(sec, "c3"), c.c3, true);
        rep.add(key_of(sec, "c4"), c.c4, true);
        rep.add(key_of(sec, "kappa"), c.kappa, true);
        rep.add(key_of(sec, "nu_max"), c.nu_max, true);
        rep.add(key_of(sec, "c_a"), c.c_a, true);
        rep.add(key_of(sec, "c_a_applicable"), c.applicable ? 1.0 : 0.0, true);
      }
    }
  }
  return rep;
}

Report cmd_verify(const Config& cfg, std::uint64_t seed) {
  Report rep;
  rep.command = "verify";
  base_metadata(rep, cfg, seed);
  for (const ConfigSection& sec : cfg.sections) {
    echo_section(rep, sec);
    const std::uint64_t s = seed_for(sec, seed);
    const std::size_t trials = static_cast<std::size_t>(sec.get_int_or("trials", 1000));
    auto emit = [&](const std::string& stem, const SweepResult& r, double ms) {
      rep.add(key_of(sec, stem + "_violations"),
              static_cast<double>(r.violations), true, "", ms);
      rep.add(key_of(sec, stem + "_worst_slack"), r.worst_slack, false);
      rep.add(key_of(sec, stem + "_samples"), static_cast<double>(r.samples), true);
    };
    if (!wants_gauge(sec)) {
      // Space-only sections still exercise the averaging bound against a
      // default dyadic partition covering the requested dimension.
      const SymSpace space = space_from(sec);
      const std::size_t dim = static_cast<std::size_t>(sec.get_int_or("dim", 64));
      std::size_t blocks = 1;
      while (Partition::dyadic(blocks).total() < dim) ++blocks;
      const Partition part = Partition::dyadic(blocks);
      const auto start = Clock::now();
      emit("avg", averaging_projection_sweep(space, part, dim, trials, s),
           ms_since(start));
      emit("lambda_mean", lambda_mean_sweep(space, std::min<std::size_t>(dim, 128)), 0.0);
      continue;
    }
    const GaugeSpace y = gauge_from(sec);
    auto timed = [&](auto&& fn, const std::string& stem) {
      const auto start = Clock::now();
      const SweepResult r = fn();
      emit(stem, r, ms_since(start));
    };
    timed([&] {
      return averaging_projection_sweep(y.space(), y.partition(), y.dim(), trials, s);
    }, "avg");
    timed([&] { return sandwich_sweep(y, trials, s + 1); }, "sandwich");
    timed([&] { return embedding_sweep(y, trials, s + 2); }, "embedding");
    timed([&] { return commuting_sweep(y, trials, s + 3, 1e-12); }, "commuting");
    timed([&] { return roundtrip_sweep(y, trials, s + 4, 1e-12); }, "roundtrip");
    timed([&] { return block_functional_sweep(y, trials, s + 5); }, "block_functional");
    if (y.space().is_l1())
      timed([&] { return block_functional_l1_sweep(y, trials, s + 6); },
            "block_functional_l1");
    timed([&] { return q_estimate_sweep(y, trials, s + 7); }, "q_estimate");
    if (y.constants().applicable)
      timed([&] { return tail_projection_sweep(y, trials, s + 8); },
            "tail_projection");
    timed([&] {
      return lambda_mean_sweep(y.space(), std::min<std::size_t>(y.dim(), 128));
    }, "lambda_mean");
  }
  return rep;
}

std::size_t verify_violations(const Report& report) {
  std::size_t total = 0;
  for (const ReportRow& r : report.rows)
    if (r.key.find("_violations") != std::string::npos)
      total += static_cast<std::size_t>(r.value);
  return total;
}

RecheckResult recheck_report(const Report& report) {
  RecheckResult out;
  // Rebuild the per-section configs from the metadata echo.
  std::map<std::string, ConfigSection> sections;
  for (const auto& [k, v] : report.metadata) {
    if (k.rfind("section.", 0) != 0) continue;
    const std::string rest = k.substr(8);
    const auto dotpos = rest.find('.');
    if (dotpos == std::string::npos) continue;
    const std::string name = rest.substr(0, dotpos);
    sections[name].name = name;
    sections[name].values[rest.substr(dotpos + 1)] = v;
  }
  for (const ReportRow& row : report.rows) {
    if (row.witness_payload.empty()) continue;
    std::string kind;
    Vec f;
    IndexSet a;
    if (!decode_witness(row.witness_payload, &kind, &f, &a)) {
      ++out.failed;
      out.detail += row.key + ": undecodable witness\n";
      continue;
    }
    const auto slash = row.key.find('/');
    const std::string sec_name =
        slash == std::string::npos ? "default" : row.key.substr(0, slash);
    const auto it = sections.find(sec_name);
    if (it == sections.end()) {
      ++out.failed;
      out.detail += row.key + ": no section echo\n";
      continue;
    }
    const ConfigSection& sec = it->second;
    std::unique_ptr<GaugeSpace> y;
    SymSpace space = space_from(sec);
    BasisRep basis = basis_from(sec, space);
    std::function<double(const Vec&)> norm;
    if (wants_gauge(sec)) {
      y = std::make_unique<GaugeSpace>(gauge_from(sec));
      const GaugeSpace* yp = y.get();
      norm = [yp](const Vec& g) { return yp->norm(g); };
    } else if (sec.has("basis")) {
      norm = basis.coeff_norm;
    } else {
      norm = [&space](const Vec& g) { return space.norm(g); };
    }
    double value = 0.0;
    bool feasible = true;
    if (kind == "proj") {
      const double d = norm(f);
      value = d > 0 ? norm(coordinate_projection(f, a)) / d : 0.0;
    } else if (kind == "resid") {
      const double d = norm(f);
      value = d > 0 ? norm(coordinate_projection_complement(f, a)) / d : 0.0;
    } else if (kind == "ind") {
      Vec ind;
      for (std::size_t j : a) {
        if (j >= ind.size()) ind.resize(j + 1, 0.0);
        ind[j] = 1.0;
      }
      value = norm(ind);
    } else if (kind == "dual") {
      double s = 0.0;
      for (std::size_t j : a)
        if (j < f.size()) s += f[j];
      value = s;
      feasible = space.norm(f) <= 1.0 + 1e-9;
    } else {
      ++out.failed;
      out.detail += row.key + ": unknown witness kind '" + kind + "'\n";
      continue;
    }
    ++out.checked;
    const double tol = 1e-9 * std::max(1.0, std::abs(row.value));
    if (!feasible || std::abs(value - row.value) > tol) {
      ++out.failed;
      out.detail += row.key + ": stored " + format_double(row.value) +
                    " recomputed " + format_double(value) + "\n";
    }
  }
  return out;
}

}  // namespace greedylab
