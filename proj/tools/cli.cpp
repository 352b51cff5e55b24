#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>

#include "symfun/criteria.hpp"
#include "symfun/deformed.hpp"
#include "symfun/errors.hpp"
#include "symfun/oracle.hpp"
#include "symfun/seqfile.hpp"
#include "symfun/symfunc.hpp"
#include "symfun/tabloids.hpp"

namespace symfun::cli {

namespace {

using json = nlohmann::ordered_json;

struct FamilyOptions {
  std::string family;
  std::string ring;
  std::optional<int> at_root;
  std::string at_value;
  std::string at_q;
  std::string at_t;
  int bound = 16;
};

struct Options {
  bool manifest = false;
  int jobs = 1;
  FamilyOptions fam;
  std::string expr, to = "m", basis = "s", skew_to;
  std::string lambda, mu, shape, type, seq_file;
  std::optional<int> n, max_degree;
  bool list = false;
};

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) throw ParseError("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

void add_family_options(CLI::App* sub, FamilyOptions& f, bool family_required = true) {
  auto* fam = sub->add_option("--family", f.family, "m, f, skew-m, skew-f, skew-h, skew-e, s, skew-s, hl-P, hl-Q, big-S, whittaker, mac-P, mac-J, p");
  if (family_required) fam->required();
  sub->add_option("--ring", f.ring, "Q, Z, Qt, Qqt (default from the family)");
  auto* root = sub->add_option("--at-root", f.at_root, "specialise at a primitive k-th root of unity");
  auto* value = sub->add_option("--at-value", f.at_value, "specialise the parameter at a rational value");
  auto* q = sub->add_option("--at-q", f.at_q, "q value for mac-P / mac-J");
  auto* t = sub->add_option("--at-t", f.at_t, "t value for mac-P / mac-J");
  root->excludes(value)->excludes(q)->excludes(t);
  value->excludes(q)->excludes(t);
  q->needs(t);
  t->needs(q);
  sub->add_option("--bound", f.bound, "exponent bound for the (q,t) independence test")->capture_default_str();
}

FamilySpec family_spec(const FamilyOptions& o) {
  FamilySpec spec;
  spec.family = parse_family(o.family);
  if (!o.ring.empty()) {
    spec.ring = parse_ring(o.ring);
  } else {
    switch (spec.family) {
      case Family::hl_P: case Family::hl_Q: case Family::big_S: case Family::whittaker: spec.ring = Ring::Qt; break;
      case Family::mac_P: case Family::mac_J: spec.ring = Ring::Qqt; break;
      default: spec.ring = Ring::Q; break;
    }
  }
  if (o.at_root) spec.at = RootOfUnity{*o.at_root};
  if (!o.at_value.empty()) spec.at = ParameterValue{parse_rational(o.at_value)};
  if (!o.at_q.empty()) spec.at = ParameterPair{parse_rational(o.at_q), parse_rational(o.at_t)};
  spec.exponent_bound = o.bound;
  validate(spec);
  return spec;
}

json manifest(const CLI::App& app, const CLI::App* sub) {
  json opts = json::object();
  for (const auto* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->get_name().empty()) continue;
    auto res = opt->results();
    if (res.empty()) {
      if (!opt->get_default_str().empty()) opts[opt->get_name()] = opt->get_default_str();
      continue;
    }
    opts[opt->get_name()] = res.size() == 1 ? json(res[0]) : json(res);
  }
  json out;
  out["manifest"] = {{"program", app.get_name()}, {"subcommand", sub->get_name()}, {"options", opts}};
  return out;
}

int expand(const Options& o, std::ostream& out) {
  Basis target = basis_from_letter(o.to.size() == 1 ? o.to[0] : '?');
  Ring ring = o.fam.ring.empty() ? Ring::Q : parse_ring(o.fam.ring);
  if (ring == Ring::Q || ring == Ring::Z)
    out << to_basis(parse_symfunc(o.expr), target).to_string() << "\n";
  else
    out << to_basis(parse_symfunc_ratfunc(o.expr), target).to_string() << "\n";
  return 0;
}

int inner(const Options& o, std::ostream& out) {
  FamilySpec spec = family_spec(o.fam);
  Partition lambda = Partition::parse(o.lambda), mu = Partition::parse(o.mu);
  int n = o.n.value_or(lambda.size() - mu.size());
  out << render(inner_value(spec, lambda, mu, n)) << "\n";
  return 0;
}

int skew_cmd(const Options& o, std::ostream& out) {
  Partition lambda = Partition::parse(o.lambda), mu = Partition::parse(o.mu);
  if (o.basis == "hl-P") {
    out << skew_hl_P(lambda, mu).to_string() << "\n";
    return 0;
  }
  Basis b = basis_from_letter(o.basis.size() == 1 ? o.basis[0] : '?');
  Basis target = o.skew_to.empty() ? b : basis_from_letter(o.skew_to.size() == 1 ? o.skew_to[0] : '?');
  out << to_basis(skew(b, lambda, mu), target).to_string() << "\n";
  return 0;
}

int tabloids(const Options& o, std::ostream& out) {
  Partition shape = Partition::parse(o.shape), type = Partition::parse(o.type);
  if (shape.size() != type.size()) throw SizeMismatch("shape and type sizes differ");
  out << "w=" << tabloid_weight(shape, type) << "\n";
  if (o.list)
    for (const auto& t : enumerate_tabloids(shape, type)) out << t.to_string() << "\n";
  return 0;
}

json record_head(int n, const FamilySpec& spec) {
  json r;
  r["n"] = n;
  r["family"] = family_name(spec.family);
  r["ring"] = ring_name(spec.ring);
  return r;
}

int check(const Options& o, std::ostream& out) {
  FamilySpec spec = family_spec(o.fam);
  auto entries = read_sequence_file(o.seq_file);
  SeqVerdict v = check_sequence(spec, entries);
  for (const auto& d : v.per_n) {
    json r = record_head(d.n, spec);
    r["criterion"] = d.criterion.holds;
    r["reason"] = d.criterion.label();
    r["value"] = d.value;
    out << r.dump() << "\n";
  }
  json total;
  total["overall"] = v.overall;
  total["family"] = family_name(spec.family);
  total["ring"] = ring_name(spec.ring);
  total["at"] = describe(spec.at);
  out << total.dump() << "\n";
  return v.overall ? 0 : 1;
}

int oracle(const Options& o, std::ostream& out) {
  FamilySpec spec = family_spec(o.fam);
  Sequence seq{spec, read_sequence_file(o.seq_file)};
  int N = o.max_degree.value_or(std::min<int>(default_max_degree(spec.ring), static_cast<int>(seq.entries.size())));
  auto v = oracle_verdict(seq, N, o.jobs);
  for (const auto& d : v) {
    const auto& e = seq.entries[static_cast<size_t>(d.n - 1)];
    json r = record_head(d.n, spec);
    r["criterion"] = d.det_ok;
    std::string reason = "none";
    try {
      reason = criterion(spec, e.lambda, e.mu, d.n).label();
    } catch (const UnsupportedCombination&) {
    }
    r["reason"] = reason;
    r["value"] = render(d.inner);
    r["det"] = render(d.det);
    r["independent"] = d.independent;
    r["generates"] = d.generates;
    r["inner_ok"] = d.inner_ok;
    out << r.dump() << "\n";
  }
  const bool overall = v.empty() || v.back().generates;
  json total;
  total["overall"] = overall;
  total["independent"] = v.empty() || v.back().independent;
  total["family"] = family_name(spec.family);
  total["ring"] = ring_name(spec.ring);
  total["at"] = describe(spec.at);
  total["max_degree"] = N;
  out << total.dump() << "\n";
  return overall ? 0 : 1;
}

int probe(const Options& o, std::ostream& out) {
  auto entries = read_sequence_file(o.seq_file);
  auto recs = conjecture_probe(entries, o.max_degree.value_or(4));
  int candidates = 0;
  for (const auto& r : recs) {
    json j;
    j["n"] = r.n;
    j["lambda"] = r.lambda.to_string();
    j["mu"] = r.mu.to_string();
    j["value"] = r.value.to_string();
    j["nonzero"] = r.nonzero;
    j["contains"] = r.contains;
    j["column_separated"] = r.column_separated;
    j["ribbon"] = r.ribbon;
    j["candidate"] = r.candidate;
    candidates += r.candidate;
    out << j.dump() << "\n";
  }
  json total;
  total["records"] = recs.size();
  total["candidates"] = candidates;
  out << total.dump() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generating sets of symmetric functions", "symfun"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--seed-manifest", o.manifest, "print the full configuration as the first record");
  app.add_option("--jobs", o.jobs, "worker threads for per-degree work")->check(CLI::PositiveNumber);

  auto* ex = app.add_subcommand("expand", "change of basis");
  ex->add_option("--expr", o.expr, "e.g. \"s[2,1]\" or \"(1 - t)*m[2]\"")->required();
  ex->add_option("--to", o.to, "target basis: m, h, e, p, s, f")->capture_default_str();
  ex->add_option("--ring", o.fam.ring, "Q (default), Qt or Qqt coefficients");

  auto* in = app.add_subcommand("inner", "<u_n, p_n> for one family member");
  add_family_options(in, o.fam);
  in->add_option("--lambda", o.lambda)->required();
  in->add_option("--mu", o.mu);
  in->add_option("--n", o.n);

  auto* sk = app.add_subcommand("skew", "skew function expansion");
  sk->add_option("--basis", o.basis, "m, h, e, s, f or hl-P")->capture_default_str();
  sk->add_option("--lambda", o.lambda)->required();
  sk->add_option("--mu", o.mu);
  sk->add_option("--to", o.skew_to, "output basis (default: the input basis)");

  auto* tb = app.add_subcommand("tabloids", "domino tabloid weights");
  tb->add_option("--shape", o.shape)->required();
  tb->add_option("--type", o.type)->required();
  tb->add_flag("--list", o.list, "also list every tabloid");

  auto* ck = app.add_subcommand("check", "per-degree criteria for a sequence file");
  add_family_options(ck, o.fam);
  ck->add_option("--seq-file", o.seq_file)->required();

  auto* orc = app.add_subcommand("oracle", "determinant verdicts for a sequence file");
  add_family_options(orc, o.fam);
  orc->add_option("--seq-file", o.seq_file)->required();
  orc->add_option("--max-degree", o.max_degree)->check(CLI::PositiveNumber);

  auto* pr = app.add_subcommand("probe", "skew Hall-Littlewood experiment");
  pr->add_option("--seq-file", o.seq_file)->required();
  pr->add_option("--max-degree", o.max_degree)->check(CLI::Range(1, 5));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (o.manifest) out << manifest(app, sub).dump() << "\n";
    if (sub == ex) return expand(o, out);
    if (sub == in) return inner(o, out);
    if (sub == sk) return skew_cmd(o, out);
    if (sub == tb) return tabloids(o, out);
    if (sub == ck) return check(o, out);
    if (sub == orc) return oracle(o, out);
    return probe(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace symfun::cli
