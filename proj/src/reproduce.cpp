#include "burstkit/reproduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "burstkit/bounds.hpp"
#include "burstkit/error.hpp"

namespace burstkit {

namespace {

CodeHandle handle(std::string name, std::variant<LinearCode, ExplicitCode> code) {
  return CodeHandle{std::move(name), {}, std::move(code)};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string count_detail(std::size_t ok, std::size_t total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) { return sat_pow(b, e); }

}  // namespace

bool ReproduceReport::passed() const { return failures() == 0; }

std::size_t ReproduceReport::failures() const {
  std::size_t f = 0;
  for (const auto& r : rows) f += r.pass ? 0 : 1;
  return f;
}

Json ReproduceReport::to_json() const {
  Json rs = Json::array();
  for (const auto& r : rows) rs.push_back(Json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return Json{{"item", item}, {"config", config}, {"passed", passed()}, {"rows", std::move(rs)}};
}

std::string ReproduceReport::to_csv() const {
  std::ostringstream os;
  for (const auto& r : rows) os << csv_escape(item) << ',' << csv_escape(r.name) << ',' << (r.pass ? "pass" : "fail") << ',' << csv_escape(r.detail) << '\n';
  return os.str();
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw DomainError("draw from an empty range");
  return rng() % n;
}

ReproduceReport reproduce_example1(std::uint64_t q, const Limits& limits) {
  FieldPtr field = field_for_size(q);
  const CodeHandle code = handle("ex1", example_code_1(field));
  ReproduceReport rep{"example1", Json{{"q", q}, {"n", 4}, {"tau", 2}, {"ell", 2}}, {}};
  const BigInt size = code.size();
  rep.rows.push_back({"size = 2q - 2", size == BigInt(2 * q - 2), size.str()});

  const CertReport cert = certify(code, 2, 2, false, limits);
  rep.rows.push_back({"detects single 2-burst", cert.detects, cert.detects ? "true" : "false"});
  rep.rows.push_back({"max list <= 2", cert.max_list <= 2, "max_list=" + std::to_string(cert.max_list)});

  const BoundVerdict v = general_code_ell2(q, 4, 2, size);
  rep.rows.push_back({"general_ell2 attained with equality",
                      v.satisfied.value_or(false) && v.max_size && *v.max_size == size, v.exact_terms});
  const BoundVerdict any = general_code_any_ell(q, 4, 2, 2, size);
  rep.rows.push_back({"general_any_ell satisfied", any.satisfied.value_or(false), any.exact_terms});
  const BoundVerdict sp = sphere_packing(q, 4, 2, 2, size);
  rep.rows.push_back({"sphere_packing satisfied", sp.satisfied.value_or(false), sp.exact_terms});
  return rep;
}

ReproduceReport reproduce_example2(std::uint64_t q, const Limits& limits) {
  FieldPtr field = field_for_size(q);
  ReproduceReport rep{"example2", Json{{"q", q}, {"n", 4}, {"tau", 2}, {"ell", 2}}, {}};
  for (std::uint32_t d = 1; d < q; ++d) {
    const CodeHandle code = handle("ex2", example_code_2(field, Fe{d}));
    const std::string tag = "delta=" + std::to_string(d) + ": ";
    const BigInt size = code.size();
    rep.rows.push_back({tag + "size = 2q", size == BigInt(2 * q), size.str()});
    const CertReport cert = certify(code, 2, 2, false, limits);
    rep.rows.push_back({tag + "does not detect 2-bursts", !cert.detects, cert.detects ? "true" : "false"});
    rep.rows.push_back({tag + "max list <= 2", cert.max_list <= 2, "max_list=" + std::to_string(cert.max_list)});
    const BoundVerdict v = no_detection_ell2(q, 4, 2, size);
    rep.rows.push_back({tag + "no_detection_ell2 attained with equality",
                        v.satisfied.value_or(false) && v.max_size && *v.max_size == size, v.exact_terms});
    const BoundVerdict sp = sphere_packing(q, 4, 2, 2, size);
    rep.rows.push_back({tag + "sphere_packing satisfied", sp.satisfied.value_or(false), sp.exact_terms});
  }
  return rep;
}

ReproduceReport reproduce_appendix_a(std::uint64_t q, std::size_t samples, std::uint64_t seed, const Limits& limits) {
  FieldPtr field = field_for_size(q);
  const std::uint64_t all = ipow(q, 6);
  const bool exhaustive = all <= 729;
  const std::uint64_t total = exhaustive ? all : samples;
  ReproduceReport rep{"appendix_a",
                      Json{{"q", q}, {"n", 8}, {"tau", 3}, {"ell", 2}, {"exhaustive", exhaustive}, {"count", total}},
                      {}};
  if (!exhaustive) rep.config["seed"] = seed;

  std::mt19937_64 rng(seed);
  std::size_t detects = 0, decodable = 0, packing = 0;
  std::string first_failure;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    AppendixStars stars;
    std::uint64_t rest = idx;
    for (auto& s : stars) {
      if (exhaustive) {
        s = Fe{static_cast<std::uint32_t>(rest % q)};
        rest /= q;
      } else {
        s = Fe{static_cast<std::uint32_t>(draw(rng, q))};
      }
    }
    const CodeHandle code = handle("appxa", appendix_a_code(field, stars));
    const CertReport cert = certify(code, 3, 2, false, limits);
    detects += cert.detects ? 1 : 0;
    decodable += cert.decodable.value_or(false) ? 1 : 0;
    if (cert.decodable.value_or(false))
      packing += sphere_packing(q, 8, 3, 2, code.size()).satisfied.value_or(false) ? 1 : 0;
    if ((!cert.detects || !cert.decodable.value_or(false)) && first_failure.empty()) {
      first_failure = "stars=";
      for (Fe s : stars) first_failure += std::to_string(s.value) + " ";
    }
  }
  const std::string suffix = first_failure.empty() ? "" : " first failure " + first_failure;
  rep.rows.push_back({"detects single 3-burst", detects == total, count_detail(detects, total) + suffix});
  rep.rows.push_back({"max list <= 2", decodable == total, count_detail(decodable, total) + suffix});
  rep.rows.push_back({"sphere_packing satisfied", packing == decodable, count_detail(packing, decodable)});

  const BigInt size = big_pow(q, 4);
  for (BoundId id : {BoundId::reiger_group, BoundId::reiger_group_relaxed, BoundId::reiger_linear}) {
    const BoundVerdict v = evaluate_bound(id, q, 8, 3, 2, size);
    rep.rows.push_back({std::string(bound_name(id)) + " not applicable", !v.applicable, v.hypotheses});
  }
  rep.rows.push_back({"redundancy 4 below tau + ceil(tau/ell)", 4 < reiger_linear_min_r(3, 2),
                      "min_r=" + std::to_string(reiger_linear_min_r(3, 2))});
  return rep;
}

std::vector<RsCase> rs_grid_cases(std::size_t n) {
  std::vector<RsCase> out;
  for (std::size_t ell = 1; ell <= 3; ++ell)
    for (std::size_t tau = 1; tau <= 4; ++tau) {
      const std::size_t r = reiger_linear_min_r(tau, ell);
      if (r + 1 <= n) out.push_back({ell, tau, r});
    }
  return out;
}

ReproduceReport reproduce_rs_grid(std::uint64_t q, const Limits& limits) {
  FieldPtr field = field_for_size(q);
  const std::size_t n = q - 1;
  ReproduceReport rep{"rs_grid", Json{{"q", q}, {"n", n}}, {}};
  for (const RsCase& c : rs_grid_cases(n)) {
    const std::string tag = "ell=" + std::to_string(c.ell) + " tau=" + std::to_string(c.tau);
    const CodeHandle code = handle("rs", rs_code(field, n, c.r));
    const CertReport cert = certify(code, c.tau, c.ell, false, limits);
    rep.rows.push_back({tag + " r=" + std::to_string(c.r) + ": certified",
                        cert.detects && cert.decodable.value_or(false),
                        "max_list=" + std::to_string(cert.max_list) + " bursts=" + std::to_string(cert.work.bursts)});
    if (cert.decodable.value_or(false)) {
      const BoundVerdict sp = sphere_packing(q, n, c.tau, c.ell, code.size());
      rep.rows.push_back({tag + " r=" + std::to_string(c.r) + ": sphere_packing satisfied",
                          sp.satisfied.value_or(false), sp.exact_terms});
    }
    if ((c.ell + 1) * c.tau <= n && c.tau <= c.r - 1) {
      const CodeHandle weaker = handle("rs", rs_code(field, n, c.r - 1));
      const CertReport refuted = certify(weaker, c.tau, c.ell, false, limits);
      const bool replayed = refuted.witness.size() == c.ell + 1 && replay_witness(weaker, c.tau, false, refuted.witness);
      rep.rows.push_back({tag + " r=" + std::to_string(c.r - 1) + ": refuted with witness",
                          refuted.max_list >= c.ell + 1 && replayed,
                          "max_list=" + std::to_string(refuted.max_list) + (replayed ? " witness replayed" : "")});
    }
  }
  return rep;
}

namespace {

std::vector<std::uint32_t> random_composition(std::mt19937_64& rng, std::uint32_t r, std::size_t parts) {
  // Choose parts - 1 distinct cut points in [1, r).
  std::vector<std::uint32_t> cuts;
  while (cuts.size() + 1 < parts) {
    const auto c = static_cast<std::uint32_t>(1 + draw(rng, r - 1));
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::uint32_t> mu;
  std::uint32_t prev = 0;
  for (auto c : cuts) {
    mu.push_back(c - prev);
    prev = c;
  }
  mu.push_back(r - prev);
  return mu;
}

struct Draft {
  Fe alpha;
  std::vector<std::uint32_t> mu;
  std::vector<Fe> beta;
};

Draft random_draft(const Field& f, std::mt19937_64& rng, std::size_t max_ell, std::uint32_t max_r) {
  const std::uint32_t top = std::min<std::uint32_t>(max_r, f.q() - 1);
  if (top < 2) throw DomainError("field too small for a resultant instance");
  const std::size_t ell_cap = std::min<std::size_t>(max_ell, top - 1);
  const std::size_t ell = 1 + draw(rng, ell_cap);
  const auto r = static_cast<std::uint32_t>(ell + 1 + draw(rng, top - ell));
  Draft d;
  do {
    d.alpha = Fe{static_cast<std::uint32_t>(1 + draw(rng, f.q() - 1))};
  } while (f.element_order(d.alpha) < r);
  d.mu = random_composition(rng, r, ell + 1);
  for (std::size_t i = 0; i <= ell; ++i) d.beta.push_back(Fe{static_cast<std::uint32_t>(1 + draw(rng, f.q() - 1))});
  return d;
}

}  // namespace

ResultantInstance random_resultant_instance(const FieldPtr& field, std::mt19937_64& rng, std::size_t max_ell,
                                            std::uint32_t max_r) {
  Draft d = random_draft(*field, rng, max_ell, max_r);
  return ResultantInstance(field, d.alpha, std::move(d.mu), std::move(d.beta));
}

ResultantInstance boundary_resultant_instance(const FieldPtr& field, std::mt19937_64& rng, std::size_t max_ell,
                                              std::uint32_t max_r) {
  Draft d = random_draft(*field, rng, max_ell, max_r);
  const std::size_t parts = d.mu.size();
  std::size_t i = draw(rng, parts), k = draw(rng, parts - 1);
  if (k >= i) ++k;
  const std::int64_t mi = d.mu[i], mk = d.mu[k];
  const std::int64_t choices[3] = {-mi, mk - 1, mk};
  const std::int64_t t = choices[draw(rng, 3)];
  d.beta[k] = field->mul(d.beta[i], field->pow(d.alpha, t));
  return ResultantInstance(field, d.alpha, std::move(d.mu), std::move(d.beta));
}

namespace {

// Res(M_0, M_1) from root lists: prod over roots a of M_0 and b of M_1 of (a - b).
Fe resultant_by_roots(const ResultantInstance& inst) {
  const Field& f = *inst.field();
  Fe acc = f.one();
  for (std::uint32_t s = 0; s < inst.tau(0); ++s)
    for (std::uint32_t t = 0; t < inst.tau(1); ++t) {
      const Fe a = f.mul(inst.beta()[0], f.pow(inst.alpha(), s));
      const Fe b = f.mul(inst.beta()[1], f.pow(inst.alpha(), t));
      acc = f.mul(acc, f.sub(a, b));
    }
  return acc;
}

}  // namespace

ReproduceReport reproduce_resultant_grid(std::uint64_t seed, std::size_t per_field) {
  ReproduceReport rep{"resultant_grid", Json{{"seed", seed}, {"per_field", per_field}, {"fields", {13, 16, 17}}}, {}};
  std::mt19937_64 rng(seed);
  for (std::uint64_t q : {13u, 16u, 17u}) {
    FieldPtr field = field_for_size(q);
    const std::string tag = "GF(" + std::to_string(q) + ") ";
    std::size_t mismatch = 0, singular = 0, equiv_bad = 0, replay_bad = 0, lemma_bad = 0;
    auto equivalence = [&](const ResultantInstance& inst) {
      std::optional<RelationWitness> rel;
      try {
        rel = find_relation(inst);
      } catch (const std::logic_error&) {
        ++replay_bad;
        return;
      }
      if (rel.has_value() != condition_ii(inst).has_value()) ++equiv_bad;
    };
    for (std::size_t s = 0; s < per_field; ++s) {
      const ResultantInstance inst = random_resultant_instance(field, rng);
      const Fe direct = delta_direct(inst);
      singular += direct.is_zero() ? 1 : 0;
      if (direct != delta_closed_form(inst)) ++mismatch;
      equivalence(inst);
      const ResultantInstance star(field, inst.alpha(), inst.mu(), lemma_one_beta(field, inst.alpha(), inst.mu()));
      if (delta_direct(star).is_zero()) ++lemma_bad;
    }
    rep.rows.push_back({tag + "direct = closed form", mismatch == 0,
                        std::to_string(mismatch) + " mismatches over " + std::to_string(per_field) + " (" +
                            std::to_string(singular) + " singular)"});
    rep.rows.push_back({tag + "partial-sum assignment nonsingular", lemma_bad == 0, std::to_string(lemma_bad) + " zero"});

    const std::size_t boundary = 200;
    for (std::size_t s = 0; s < boundary; ++s) equivalence(boundary_resultant_instance(field, rng));
    rep.rows.push_back({tag + "relation exists iff ratio condition", equiv_bad == 0,
                        std::to_string(equiv_bad) + " discrepancies over " + std::to_string(per_field + boundary)});
    rep.rows.push_back({tag + "relations replay", replay_bad == 0, std::to_string(replay_bad) + " failed replays"});

    std::size_t sylvester_bad = 0;
    const std::size_t pairs = 200;
    for (std::size_t s = 0; s < pairs; ++s) {
      const ResultantInstance inst = random_resultant_instance(field, rng, 1);
      Fe res = resultant_by_roots(inst);
      if ((inst.mu()[0] * inst.mu()[1]) % 2 == 1) res = field->neg(res);
      if (res != delta_closed_form(inst)) ++sylvester_bad;
    }
    rep.rows.push_back({tag + "ell=1 matches classical resultant", sylvester_bad == 0,
                        std::to_string(sylvester_bad) + " mismatches over " + std::to_string(pairs)});
  }
  return rep;
}

std::vector<ReproduceReport> run_reproduce(const std::string& item, const ReproduceOptions& opts) {
  auto qs = [&](std::vector<std::uint64_t> defaults) { return opts.q.empty() ? defaults : opts.q; };
  std::vector<ReproduceReport> out;
  if (item == "example1") {
    for (auto q : qs({2, 3, 4, 5})) out.push_back(reproduce_example1(q, opts.limits));
  } else if (item == "example2") {
    for (auto q : qs({2, 3, 4, 5})) out.push_back(reproduce_example2(q, opts.limits));
  } else if (item == "appendix_a") {
    for (auto q : qs({2, 3, 4, 5})) out.push_back(reproduce_appendix_a(q, opts.samples, opts.seed, opts.limits));
  } else if (item == "rs_grid") {
    for (auto q : qs({7, 8, 16, 17})) out.push_back(reproduce_rs_grid(q, opts.limits));
  } else if (item == "resultant_grid") {
    out.push_back(reproduce_resultant_grid(opts.seed, opts.per_field));
  } else {
    throw DomainError("unknown reproduce item: " + item);
  }
  return out;
}

}  // namespace burstkit
