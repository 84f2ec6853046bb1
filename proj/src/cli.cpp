#include "burstkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "burstkit/bounds.hpp"
#include "burstkit/error.hpp"
#include "burstkit/json_io.hpp"
#include "burstkit/reproduce.hpp"

namespace burstkit {

namespace {

struct Options {
  std::string out_path;

  // count-bursts, bounds, construct
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t tau = 0;
  std::uint64_t ell = 0;
  std::uint64_t r = 0;
  bool phased = false;
  std::string size;
  std::string bound = "all";

  // construct / certify --construct
  std::string kind;
  std::uint32_t delta = 1;
  std::vector<std::uint32_t> stars;

  // decode / certify
  std::string code_path;
  std::string y;

  // resultant
  std::uint64_t field_q = 0;
  std::optional<std::uint32_t> alpha;
  std::vector<std::uint32_t> mu;
  std::vector<std::uint32_t> beta;
  bool closed_form = false;
  bool direct = false;
  bool both = false;
  bool witness = false;

  // reproduce
  std::string item;
  std::vector<std::uint64_t> qs;
  std::uint64_t seed = 7;
  std::size_t samples = 500;
  std::size_t per_field = 1000;
  std::string format = "json";
};

Json envelope(const std::string& command, Json config, Json result) {
  return Json{{"schema", kSchemaTag}, {"command", command}, {"config", std::move(config)}, {"result", std::move(result)}};
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw DomainError("cannot open output file " + o.out_path);
  f << text;
}

void emit_json(const Options& o, std::ostream& out, const Json& j) { emit(o, out, j.dump(2) + "\n"); }

CodeHandle build_construct(const Options& o) {
  if (o.q == 0) throw DomainError("--q is required");
  FieldPtr field = field_for_size(o.q);
  const std::string q = std::to_string(o.q);
  if (o.kind == "rs") {
    const std::size_t n = o.n == 0 ? o.q - 1 : o.n;
    CodeHandle h{"rs", {{"q", q}, {"n", std::to_string(n)}, {"r", std::to_string(o.r)}}, rs_code(field, n, o.r)};
    h.meta["alpha"] = std::to_string(rs_alpha(*field, n).value);
    return h;
  }
  if (o.kind == "ex1") return CodeHandle{"ex1", {{"q", q}}, example_code_1(field)};
  if (o.kind == "ex2") {
    if (o.delta >= o.q) throw DomainError("--delta must be a field element");
    return CodeHandle{"ex2", {{"q", q}, {"delta", std::to_string(o.delta)}}, example_code_2(field, Fe{o.delta})};
  }
  if (o.kind == "appxa") {
    AppendixStars s{};
    if (!o.stars.empty() && o.stars.size() != 6) throw DomainError("--stars takes exactly six values");
    std::string text;
    for (std::size_t i = 0; i < 6; ++i) {
      const std::uint32_t v = o.stars.empty() ? 0 : o.stars[i];
      if (v >= o.q) throw DomainError("star values must be field elements");
      s[i] = Fe{v};
      text += (i ? "," : "") + std::to_string(v);
    }
    return CodeHandle{"appxa", {{"q", q}, {"stars", text}}, appendix_a_code(field, s)};
  }
  throw DomainError("unknown construction: " + o.kind);
}

CodeHandle load_code(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot read code file " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ShapeError(std::string("malformed code file: ") + e.what());
  }
  return code_from_json(j);
}

Json construct_config(const Options& o) {
  Json c{{"kind", o.kind}, {"q", o.q}};
  if (o.kind == "rs") {
    c["n"] = o.n == 0 ? o.q - 1 : o.n;
    c["r"] = o.r;
  }
  if (o.kind == "ex2") c["delta"] = o.delta;
  if (o.kind == "appxa") c["stars"] = o.stars.empty() ? std::vector<std::uint32_t>(6, 0) : o.stars;
  return c;
}

std::vector<std::uint32_t> parse_csv_u32(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(tok, &used);
    if (used != tok.size()) throw DomainError("not an integer: " + tok);
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

int cmd_count_bursts(const Options& o, std::ostream& out) {
  const BigInt count = o.phased ? count_phased_bursts(o.q, o.n, o.tau) : count_bursts(o.q, o.n, o.tau);
  emit_json(o, out,
            envelope("count-bursts", Json{{"q", o.q}, {"n", o.n}, {"tau", o.tau}, {"phased", o.phased}},
                     Json{{"count", count.str()}}));
  return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  emit_json(o, out, code_to_json(build_construct(o)));
  return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const CodeHandle code = load_code(o.code_path);
  const Word y = word_from_json(*code.field(), Json(parse_csv_u32(o.y)));
  if (y.size() != code.n()) throw ShapeError("received word has the wrong length");
  const ListDecodeResult res = decode(code, y, o.tau, o.phased, Limits::from_env());
  Json result = decode_to_json(res);
  Json config{{"code", o.code_path}, {"y", word_to_json(y)}, {"tau", o.tau}, {"phased", o.phased}};
  if (o.ell > 0) {
    config["ell"] = o.ell;
    result["within_ell"] = res.candidates.size() <= o.ell;
  }
  emit_json(o, out, envelope("decode", std::move(config), std::move(result)));
  return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  if (o.code_path.empty() == o.kind.empty()) throw DomainError("give exactly one of --code or --construct");
  const CodeHandle code = o.code_path.empty() ? build_construct(o) : load_code(o.code_path);
  if (o.ell == 0) throw DomainError("--ell must be positive");
  const CertReport rep = certify(code, o.tau, o.ell, o.phased, Limits::from_env());
  Json config{{"tau", o.tau}, {"ell", o.ell}, {"phased", o.phased}};
  if (o.code_path.empty())
    config["construct"] = construct_config(o);
  else
    config["code"] = o.code_path;
  Json result = cert_to_json(rep);
  result["size"] = code.size().str();
  result["n"] = code.n();
  const bool certified = rep.detects && rep.decodable.value_or(false);
  result["certified"] = certified;
  if (!rep.witness.empty()) result["witness_replays"] = replay_witness(code, o.tau, o.phased, rep.witness);
  emit_json(o, out, envelope("certify", std::move(config), std::move(result)));
  return certified ? kExitOk : kExitRefuted;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  BigInt size;
  try {
    size = BigInt(o.size);
  } catch (const std::exception&) {
    throw DomainError("--size must be a nonnegative integer");
  }
  if (size < 0) throw DomainError("--size must be a nonnegative integer");
  std::vector<BoundId> ids;
  if (o.bound == "all") {
    ids = all_bounds();
  } else {
    const auto id = parse_bound(o.bound);
    if (!id) throw DomainError("unknown bound: " + o.bound);
    ids.push_back(*id);
  }
  Json arr = Json::array();
  for (BoundId id : ids) arr.push_back(verdict_to_json(evaluate_bound(id, o.q, o.n, o.tau, o.ell, size)));
  emit_json(o, out,
            envelope("bounds",
                     Json{{"q", o.q}, {"n", o.n}, {"tau", o.tau}, {"ell", o.ell}, {"size", size.str()},
                          {"bound", o.bound}},
                     std::move(arr)));
  return kExitOk;
}

int cmd_resultant(const Options& o, std::ostream& out) {
  FieldPtr field = field_for_size(o.field_q);
  const Fe alpha = o.alpha ? field->element(*o.alpha) : field->generator();
  std::vector<Fe> beta;
  for (auto b : o.beta) beta.push_back(field->element(b));
  const ResultantInstance inst(field, alpha, o.mu, beta);

  const bool want_direct = o.direct || o.both || !o.closed_form;
  const bool want_closed = o.closed_form || o.both || !o.direct;
  Json result;
  std::optional<Fe> d, c;
  if (want_direct) {
    d = delta_direct(inst);
    result["delta_direct"] = d->value;
  }
  if (want_closed) {
    c = delta_closed_form(inst);
    result["delta_closed_form"] = c->value;
  }
  result["delta"] = (d ? *d : *c).value;
  result["kappa"] = kappa(field, alpha, inst.mu()).value;
  result["r"] = inst.r();
  if (const auto w = condition_ii(inst))
    result["condition_ii"] = Json{{"i", w->i}, {"k", w->k}, {"t", w->t}};
  else
    result["condition_ii"] = nullptr;
  if (o.witness) {
    if (const auto rel = find_relation(inst)) {
      Json u = Json::array();
      for (const auto& p : rel->u) u.push_back(poly_to_json(p));
      result["relation"] = Json{{"u", std::move(u)}, {"replays", replay_relation(inst, *rel)}};
    } else {
      result["relation"] = nullptr;
    }
  }
  Json config{{"field", field_to_json(*field)}, {"alpha", alpha.value}, {"mu", o.mu}, {"beta", o.beta}};
  emit_json(o, out, envelope("resultant", std::move(config), std::move(result)));
  return d && c && *d != *c ? kExitRefuted : kExitOk;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  ReproduceOptions ro;
  ro.q = o.qs;
  ro.seed = o.seed;
  ro.samples = o.samples;
  ro.per_field = o.per_field;
  ro.limits = Limits::from_env();
  const auto reports = run_reproduce(o.item, ro);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (o.format == "csv") {
    std::string text = "item,check,status,detail\n";
    for (const auto& r : reports) text += r.to_csv();
    emit(o, out, text);
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    Json config{{"item", o.item}, {"q", o.qs}, {"seed", o.seed}, {"samples", o.samples}, {"per_field", o.per_field}};
    emit_json(o, out, envelope("reproduce", std::move(config), Json{{"passed", ok}, {"reports", std::move(arr)}}));
  }
  return ok ? kExitOk : kExitRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burst-error list decoding toolkit", "burstkit"};
  app.require_subcommand(1);
  Options o;
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "Write the report to a file"); };

  auto* count = app.add_subcommand("count-bursts", "Number of tau-bursts in F^n");
  count->add_option("--q", o.q, "Alphabet size")->required();
  count->add_option("--n", o.n, "Block length")->required();
  count->add_option("--tau", o.tau, "Burst length")->required();
  count->add_flag("--phased", o.phased, "Count phased bursts only");
  out_opt(count);

  auto construct_opts = [&](CLI::App* sub, const std::string& kind_flag) {
    sub->add_option(kind_flag, o.kind, "rs | ex1 | ex2 | appxa")->check(CLI::IsMember({"rs", "ex1", "ex2", "appxa"}));
    sub->add_option("--q", o.q, "Field size");
    sub->add_option("--n", o.n, "RS length (default q - 1)");
    sub->add_option("--r", o.r, "RS redundancy");
    sub->add_option("--delta", o.delta, "Example 2 parameter (nonzero element index)");
    sub->add_option("--stars", o.stars, "Six star values for appxa")->delimiter(',');
  };
  auto* construct = app.add_subcommand("construct", "Emit a code file");
  construct_opts(construct, "--kind");
  construct->get_option("--kind")->required();
  out_opt(construct);

  auto* dec = app.add_subcommand("decode", "Complete burst list decoding of one word");
  dec->add_option("--code", o.code_path, "Code file")->required();
  dec->add_option("--y", o.y, "Received word, comma separated element indices")->required();
  dec->add_option("--tau", o.tau, "Burst length")->required();
  dec->add_option("--ell", o.ell, "List size to report against");
  dec->add_flag("--phased", o.phased, "Phased bursts only");
  out_opt(dec);

  auto* cert = app.add_subcommand("certify", "Detection and list-size certification");
  cert->add_option("--code", o.code_path, "Code file");
  construct_opts(cert, "--construct");
  cert->add_option("--tau", o.tau, "Burst length")->required();
  cert->add_option("--ell", o.ell, "List size")->required();
  cert->add_flag("--phased", o.phased, "Phased bursts only");
  out_opt(cert);

  auto* bnd = app.add_subcommand("bounds", "Evaluate redundancy bounds for a code size");
  bnd->add_option("--q", o.q, "Alphabet size")->required();
  bnd->add_option("--n", o.n, "Block length")->required();
  bnd->add_option("--tau", o.tau, "Burst length")->required();
  bnd->add_option("--ell", o.ell, "List size")->required();
  bnd->add_option("--size", o.size, "Code size")->required();
  bnd->add_option("--bound", o.bound, "Bound id or all");
  out_opt(bnd);

  auto* res = app.add_subcommand("resultant", "Generalized resultant of an instance");
  res->add_option("--field", o.field_q, "Field size q")->required();
  res->add_option("--alpha", o.alpha, "Element index of alpha (default: the generator)");
  res->add_option("--mu", o.mu, "Block sizes, comma separated")->delimiter(',')->required();
  res->add_option("--beta", o.beta, "Element indices, comma separated")->delimiter(',')->required();
  res->add_flag("--closed-form", o.closed_form, "Closed form only");
  res->add_flag("--direct", o.direct, "Determinant only");
  res->add_flag("--both", o.both, "Both, compared (default)");
  res->add_flag("--witness", o.witness, "Include a polynomial relation when singular");
  out_opt(res);

  auto* rep = app.add_subcommand("reproduce", "Run a packaged experiment");
  rep->add_option("item", o.item, "example1 | example2 | appendix_a | rs_grid | resultant_grid")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "appendix_a", "rs_grid", "resultant_grid"}));
  rep->add_option("--q", o.qs, "Field sizes, comma separated")->delimiter(',');
  rep->add_option("--seed", o.seed, "RNG seed");
  rep->add_option("--samples", o.samples, "Random star vectors for large q");
  rep->add_option("--per-field", o.per_field, "Resultant instances per field");
  rep->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  out_opt(rep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count_bursts(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (dec->parsed()) return cmd_decode(o, out);
    if (cert->parsed()) return cmd_certify(o, out);
    if (bnd->parsed()) return cmd_bounds(o, out);
    if (res->parsed()) return cmd_resultant(o, out);
    if (rep->parsed()) return cmd_reproduce(o, out);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace burstkit
