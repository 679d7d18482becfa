// cfh: command-line front end for the exact Hankel / C-fraction toolbox.
//
// Subcommands: expand, transform, closedform, polys, reconstruct, verify, job.
// Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
// 2 input error, 3 verification failure.  Values are exact: JSON output uses
// plain numbers for integers that fit in 64 bits and strings otherwise.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfhankel/cfhankel.hpp"

using namespace cfhankel;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kVerifyFailure = 3;

json value_json(const Scalar& v) {
  if (v.is_constant()) {
    Rational r = v.rational_value();
    if (r.is_integer()) {
      BigInt n = r.numerator();
      if (n >= std::numeric_limits<long long>::min() &&
          n <= std::numeric_limits<long long>::max())
        return json(n.convert_to<long long>());
    }
  }
  return json(v.str());
}

std::vector<long long> parse_long_csv(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "' in " + what);
    }
  }
  if (out.empty()) throw ParseError("empty list for " + what);
  return out;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

// Smallest ring containing every variable mentioned by the given scalar texts.
Ring ring_for_texts(const std::vector<std::string>& texts) {
  int acount = 0;
  bool with_q = false, with_u = false;
  static const std::regex avar("a([0-9]+)");
  for (const std::string& t : texts) {
    for (auto it = std::sregex_iterator(t.begin(), t.end(), avar); it != std::sregex_iterator();
         ++it)
      acount = std::max(acount, std::stoi((*it)[1].str()) + 1);
    if (t.find('q') != std::string::npos) with_q = true;
    if (t.find('u') != std::string::npos) with_u = true;
  }
  return Ring(acount, with_q, with_u);
}

struct SourceOpts {
  std::string builtin;
  std::string b_text;
  std::string powers_text;
  std::string coeffs_text;
  std::string numerators_text;
  bool symbolic = false;
  bool with_q = false;
  bool with_u = false;
  long long stretch = 2;
  std::string a_text, q_text, u_text;
  long long order = -1;  // -1: derive from the consumer's needs
};

void add_source_options(CLI::App* cmd, SourceOpts& o, bool with_order = true) {
  cmd->add_option("--builtin", o.builtin,
                  "builtin series: catalan, catalan-shifted, catalan-stretched, motzkin, "
                  "motzkin-u, eisenstein");
  cmd->add_option("--stretch", o.stretch, "stretch width for catalan-stretched (default 2)");
  cmd->add_option("--a", o.a_text, "coefficient for catalan-stretched, e.g. 2 or a0");
  cmd->add_option("--u", o.u_text, "parameter for motzkin-u, e.g. 3 or u");
  cmd->add_option("--q", o.q_text, "parameter for eisenstein, e.g. 2 or q");
  cmd->add_option("--b", o.b_text, "b-sequence, comma separated, starting -1,0");
  cmd->add_option("--powers", o.powers_text, "fraction power sequence, comma separated");
  cmd->add_option("--numerators", o.numerators_text,
                  "fraction numerators, comma separated scalar expressions");
  cmd->add_flag("--symbolic", o.symbolic, "use symbolic numerators a0, a1, ...");
  cmd->add_flag("--with-q", o.with_q, "declare q alongside the symbolic numerators");
  cmd->add_flag("--with-u", o.with_u, "declare u alongside the symbolic numerators");
  cmd->add_option("--coeffs", o.coeffs_text, "explicit series coefficients, comma separated");
  if (with_order) cmd->add_option("--order", o.order, "series truncation order");
}

std::optional<Scalar> parse_param(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Scalar::parse(Ring(1, true, true), text);
}

// Builds the series a subcommand works on, truncated at `order`.
PowerSeries resolve_series(const SourceOpts& o, long long order) {
  if (order < 0) throw ParamOutOfRangeError("series order must be given or derivable");
  int sources = (!o.builtin.empty()) + (!o.b_text.empty()) + (!o.powers_text.empty()) +
                (!o.coeffs_text.empty());
  if (sources != 1)
    throw ParseError("give exactly one of --builtin, --b, --powers, --coeffs");
  if (!o.builtin.empty()) {
    BuiltinParams prm;
    prm.stretch = o.stretch;
    prm.a = parse_param(o.a_text);
    prm.q = parse_param(o.q_text);
    prm.u = parse_param(o.u_text);
    return builtin_series(o.builtin, order, prm);
  }
  if (!o.coeffs_text.empty()) {
    std::vector<std::string> parts = split_csv(o.coeffs_text);
    Ring ints;
    std::vector<Scalar> coeffs;
    for (const std::string& p : parts) coeffs.push_back(Scalar::constant(Rational::parse(p), ints));
    PowerSeries s(ints, std::move(coeffs));
    if (order > s.order())
      throw InsufficientOrderError("only " + std::to_string(s.order() + 1) +
                                   " coefficients given, order " + std::to_string(order) +
                                   " requested");
    return order == s.order() ? s : s.truncated(order);
  }
  CFrac cf;
  if (!o.b_text.empty())
    cf.powers = BSeq::parse(o.b_text).powers();
  else
    cf.powers = parse_long_csv(o.powers_text, "--powers");
  if (o.symbolic != o.numerators_text.empty())
    throw ParseError("fraction sources need exactly one of --symbolic, --numerators");
  if (o.symbolic) {
    long long depth = expansion_depth(cf.powers, order);
    Ring ring(static_cast<int>(depth), o.with_q, o.with_u);
    for (long long j = 0; j < depth; ++j)
      cf.numerators.push_back(Scalar::a(ring, static_cast<int>(j)));
  } else {
    std::vector<std::string> parts = split_csv(o.numerators_text);
    Ring ring = ring_for_texts(parts);
    for (const std::string& p : parts) cf.numerators.push_back(Scalar::parse(ring, p));
  }
  return cfrac_expand(cf, order);
}

void print_indexed(const std::string& fmt, const std::vector<Scalar>& values, long long first,
                   const std::string& head) {
  if (fmt == "json") {
    json arr = json::array();
    for (const Scalar& v : values) arr.push_back(value_json(v));
    std::cout << arr.dump() << "\n";
    return;
  }
  int width = static_cast<int>(std::to_string(first + static_cast<long long>(values.size())).size());
  width = std::max(width, static_cast<int>(head.size()));
  std::cout << std::left << std::setw(width + 2) << head << "value\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    std::cout << std::left << std::setw(width + 2) << (first + static_cast<long long>(i))
              << values[i].str() << "\n";
}

// Human form of a one-variable polynomial, highest power first.
std::string pretty_poly(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long long j = p.degree(); j >= 0; --j) {
    const Scalar& c = p.coeff(j);
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool negated = false;
    if (c.is_single_term() && cs.size() > 1 && cs[0] == '-') {
      cs = cs.substr(1);
      negated = true;
    }
    if (out.empty())
      out += negated ? "-" : "";
    else
      out += negated ? " - " : " + ";
    bool unit = cs == "1";
    bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    if (j == 0) {
      out += composite ? "(" + cs + ")" : cs;
      continue;
    }
    if (!unit) out += (composite ? "(" + cs + ")" : cs) + "*";
    out += j == 1 ? "x" : "x^" + std::to_string(j);
  }
  return out;
}

json poly_json(const XPoly& p) {
  json arr = json::array();
  for (long long j = 0; j <= p.degree(); ++j) arr.push_back(value_json(p.coeff(j)));
  return arr;
}

struct CheckList {
  long long cases = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& name) {
    ++cases;
    if (!ok) failures.push_back(name);
  }
};

int finish_suite(const std::string& fmt, const std::string& suite, const CheckList& checks) {
  if (fmt == "json") {
    json out{{"suite", suite}, {"cases", checks.cases}, {"failures", checks.failures}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << suite << ": " << (checks.cases - static_cast<long long>(checks.failures.size()))
              << "/" << checks.cases << " checks passed\n";
    for (const std::string& f : checks.failures) std::cout << "FAIL " << f << "\n";
  }
  return checks.failures.empty() ? kOk : kVerifyFailure;
}

BSeq extended_bseq(const BSeq& b, long long min_index) {
  std::vector<long long> v = b.values();
  while (static_cast<long long>(v.size()) - 2 < min_index) v.push_back(v.back() + 1);
  return BSeq(std::move(v));
}

void run_orthogonality(const BSeq& b0, long long kmax, CheckList& checks) {
  if (kmax < 1) throw ParamOutOfRangeError("kmax must be at least 1");
  // one level past kmax keeps the expansion depth strictly ahead of the order
  BSeq b = extended_bseq(b0, kmax + 1);
  const long long order = b.b(kmax - 1) + b.b(kmax) + 1;
  CFrac cf;
  cf.powers = b.powers();
  const long long depth = expansion_depth(cf.powers, order);
  const long long acount = std::max(depth, kmax);
  Ring ring(static_cast<int>(acount));
  for (long long j = 0; j < acount; ++j) cf.numerators.push_back(Scalar::a(ring, static_cast<int>(j)));
  PowerSeries f = cfrac_expand(cf, order);

  for (long long k = 0; k <= kmax; ++k) {
    XPoly rk = r_poly(b, cf.numerators, k);
    bool zeros = true;
    for (long long n = 0; n < b.b(k); ++n)
      if (!lambda_apply(f, rk, n).is_zero()) zeros = false;
    checks.check(zeros, "orthogonality k=" + std::to_string(k));
    Scalar prod = Scalar::one(ring);
    for (long long j = 0; j < k; ++j) prod = prod * cf.numerators[static_cast<std::size_t>(j)];
    checks.check(lambda_apply(f, rk, b.b(k)) == prod, "normalization k=" + std::to_string(k));
    if (k == 0) continue;
    Convergents c = convergents(b, cf.numerators, k);
    checks.check(rk == c.B.reversed(b.b(k - 1) + 1), "reversal k=" + std::to_string(k));
    PowerSeries residue =
        poly_times_series(c.B, f) - poly_times_series(c.A, PowerSeries::one(ring, order));
    const long long split = b.b(k - 1) + b.b(k) + 1;
    bool tail = residue.coeff(split) == prod;
    for (long long n = 0; n < split; ++n)
      if (!residue.coeff(n).is_zero()) tail = false;
    checks.check(tail, "tail k=" + std::to_string(k));
  }
}

void run_closedform_suite(const BSeq& b, long long up_to, CheckList& checks) {
  const long long order = 2 * up_to;
  CFrac cf;
  cf.powers = b.powers();
  const long long depth = expansion_depth(cf.powers, order);
  Ring ring(static_cast<int>(depth));
  for (long long j = 0; j < depth; ++j) cf.numerators.push_back(Scalar::a(ring, static_cast<int>(j)));
  PowerSeries f = cfrac_expand(cf, order);
  std::vector<Scalar> t = hankel_transform(f, 0, up_to);
  for (long long n = 0; n <= up_to; ++n) {
    const Scalar& got = t[static_cast<std::size_t>(n)];
    bool ok = b.contains_value(n) ? got == buslaev_d(b, b.last_index_of(n)).to_scalar(ring)
                                  : got.is_zero();
    checks.check(ok, "closedform n=" + std::to_string(n));
  }
}

PowerSeries random_unit_series(std::mt19937& rng, long long order) {
  Ring ints;
  PowerSeries s(ints, order);
  s.set_coeff(0, Scalar::one(ints));
  for (long long n = 1; n <= order; ++n) {
    long long num = static_cast<long long>(rng() % 11) - 5;
    long long den = 1 + static_cast<long long>(rng() % 5);
    s.set_coeff(n, Scalar::constant(Rational(BigInt(num), BigInt(den)), ints));
  }
  return s;
}

void run_reductions(long long count, unsigned seed, CheckList& checks) {
  std::mt19937 rng(seed);
  Ring ints;
  for (long long i = 0; i < count; ++i) {
    PowerSeries s = random_unit_series(rng, 12);
    std::string tag = " i=" + std::to_string(i);
    for (long long n = 0; n <= 5; ++n) {
      ReductionParams prm;
      prm.n = n;
      checks.check(verify_reduction(s, ReductionIdentity::reciprocal_shift2, prm).equal,
                   "reciprocal-shift2 n=" + std::to_string(n) + tag);
      checks.check(verify_reduction(s, ReductionIdentity::reciprocal_shift1, prm).equal,
                   "reciprocal-shift1 n=" + std::to_string(n) + tag);
    }
    for (long long m = 1; m <= 3; ++m)
      for (long long n = 0; n + m <= 5; ++n) {
        ReductionParams prm;
        prm.m = m;
        prm.n = n;
        checks.check(verify_reduction(s, ReductionIdentity::backshift, prm).equal,
                     "backshift m=" + std::to_string(m) + " n=" + std::to_string(n) + tag);
      }
    PowerSeries g = random_unit_series(rng, 12);
    Scalar a = Scalar::constant(Rational(1 + static_cast<long long>(rng() % 5)), ints);
    for (long long p = 1; p <= 3; ++p) {
      PowerSeries head = PowerSeries::one(ints, 12);
      PowerSeries f = series_reciprocal(head - (a * g).shifted_up(p));
      for (long long m = 0; m <= 3; ++m)
        for (long long n = 0; n + m <= 5; ++n) {
          ReductionParams prm;
          prm.m = m;
          prm.n = n;
          prm.p = p;
          prm.a = a;
          checks.check(verify_reduction(f, ReductionIdentity::tail_factor, prm).equal,
                       "tail-factor p=" + std::to_string(p) + " m=" + std::to_string(m) +
                           " n=" + std::to_string(n) + tag);
        }
    }
  }
}

void run_condensation(const std::string& builtin, long long up_to, CheckList& checks) {
  std::vector<std::string> names;
  if (!builtin.empty())
    names.push_back(builtin);
  else
    names = {"catalan", "catalan-shifted", "catalan-stretched", "motzkin", "motzkin-u",
             "eisenstein"};
  for (const std::string& name : names) {
    PowerSeries s = builtin_series(name, 2 * up_to + 2);
    for (long long n = 0; n <= up_to; ++n)
      checks.check(condensation_check(s, n).holds,
                   "condensation " + name + " n=" + std::to_string(n));
  }
}

// ---- job files ----------------------------------------------------------

struct JobErrors {
  std::vector<std::string> messages;
  void add(const std::string& path, const std::string& what) {
    messages.push_back(path + ": " + what);
  }
  bool ok() const { return messages.empty(); }
};

struct Job {
  std::vector<long long> powers;
  std::optional<BSeq> b;
  std::vector<Scalar> numerators;
  bool symbolic = false;
  bool with_q = false, with_u = false;
  long long order = 0;
  json tasks;
};

long long require_int(const json& j, const std::string& path, JobErrors& errs, long long fallback,
                      long long min_value = std::numeric_limits<long long>::min()) {
  if (!j.is_number_integer()) {
    errs.add(path, "expected integer");
    return fallback;
  }
  long long v = j.get<long long>();
  if (v < min_value) {
    errs.add(path, "value " + std::to_string(v) + " below minimum " + std::to_string(min_value));
    return fallback;
  }
  return v;
}

Job load_job(const json& root, JobErrors& errs) {
  Job job;
  if (!root.is_object()) {
    errs.add("$", "expected an object");
    return job;
  }
  for (const auto& [key, _] : root.items())
    if (key != "powers" && key != "b" && key != "numerators" && key != "symbolic" &&
        key != "order" && key != "tasks" && key != "q" && key != "u")
      errs.add("$." + key, "unknown key");

  const bool has_powers = root.contains("powers"), has_b = root.contains("b");
  if (has_powers == has_b) {
    errs.add("$", "give exactly one of \"powers\", \"b\"");
    return job;
  }
  if (has_powers) {
    if (!root["powers"].is_array() || root["powers"].empty()) {
      errs.add("$.powers", "expected a non-empty array");
      return job;
    }
    for (std::size_t i = 0; i < root["powers"].size(); ++i) {
      long long v = require_int(root["powers"][i], "$.powers[" + std::to_string(i) + "]", errs, 1, 1);
      job.powers.push_back(v);
    }
  } else {
    if (!root["b"].is_array() || root["b"].empty()) {
      errs.add("$.b", "expected a non-empty array");
      return job;
    }
    std::vector<long long> values;
    for (std::size_t i = 0; i < root["b"].size(); ++i)
      values.push_back(require_int(root["b"][i], "$.b[" + std::to_string(i) + "]", errs, 0));
    if (!errs.ok()) return job;
    try {
      job.b = BSeq(values);
    } catch (const Error& e) {
      errs.add("$.b", e.what());
      return job;
    }
    job.powers = job.b->powers();
  }

  if (root.contains("q")) {
    if (!root["q"].is_boolean())
      errs.add("$.q", "expected boolean");
    else
      job.with_q = root["q"].get<bool>();
  }
  if (root.contains("u")) {
    if (!root["u"].is_boolean())
      errs.add("$.u", "expected boolean");
    else
      job.with_u = root["u"].get<bool>();
  }

  if (!root.contains("order")) {
    errs.add("$.order", "missing");
    return job;
  }
  job.order = require_int(root["order"], "$.order", errs, 0, 0);

  const bool has_nums = root.contains("numerators");
  job.symbolic = root.contains("symbolic") && root["symbolic"].is_boolean() &&
                 root["symbolic"].get<bool>();
  if (root.contains("symbolic") && !root["symbolic"].is_boolean())
    errs.add("$.symbolic", "expected boolean");
  if (has_nums == job.symbolic) {
    errs.add("$", "give exactly one of \"numerators\", \"symbolic\": true");
    return job;
  }
  if (has_nums) {
    if (!root["numerators"].is_array() || root["numerators"].empty()) {
      errs.add("$.numerators", "expected a non-empty array");
      return job;
    }
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < root["numerators"].size(); ++i) {
      if (!root["numerators"][i].is_string()) {
        errs.add("$.numerators[" + std::to_string(i) + "]", "expected a scalar string");
        return job;
      }
      texts.push_back(root["numerators"][i].get<std::string>());
    }
    Ring ring = ring_for_texts(texts);
    for (std::size_t i = 0; i < texts.size(); ++i) {
      try {
        job.numerators.push_back(Scalar::parse(ring, texts[i]));
      } catch (const Error& e) {
        errs.add("$.numerators[" + std::to_string(i) + "]", e.what());
      }
    }
  } else {
    long long depth = 0;
    try {
      depth = expansion_depth(job.powers, job.order);
    } catch (const Error& e) {
      errs.add("$.powers", e.what());
      return job;
    }
    Ring ring(static_cast<int>(depth), job.with_q, job.with_u);
    for (long long j = 0; j < depth; ++j)
      job.numerators.push_back(Scalar::a(ring, static_cast<int>(j)));
  }

  if (!root.contains("tasks") || !root["tasks"].is_array() || root["tasks"].empty()) {
    errs.add("$.tasks", "expected a non-empty array");
    return job;
  }
  job.tasks = root["tasks"];
  return job;
}

json run_job_task(const Job& job, const json& task, const std::string& path, JobErrors& errs) {
  std::string op;
  json prm = json::object();
  if (task.is_string()) {
    op = task.get<std::string>();
  } else if (task.is_object()) {
    if (!task.contains("op") || !task["op"].is_string()) {
      errs.add(path + ".op", "missing operation name");
      return {};
    }
    op = task["op"].get<std::string>();
    prm = task;
  } else {
    errs.add(path, "expected a string or an object");
    return {};
  }

  auto expand_series = [&]() {
    CFrac cf{job.powers, job.numerators};
    return cfrac_expand(cf, job.order);
  };
  auto need_b = [&]() -> const BSeq& {
    if (!job.b) throw ParseError(op + " needs \"b\", not \"powers\"");
    return *job.b;
  };

  json out{{"op", op}};
  if (op == "expand") {
    PowerSeries f = expand_series();
    json arr = json::array();
    for (long long n = 0; n <= f.order(); ++n) arr.push_back(value_json(f.coeff(n)));
    out["coeffs"] = arr;
  } else if (op == "transform") {
    long long offset = prm.contains("offset") ? require_int(prm["offset"], path + ".offset", errs, 0, 0) : 0;
    long long fallback = std::max<long long>((job.order - offset) / 2, 0);
    long long upto = prm.contains("upto") ? require_int(prm["upto"], path + ".upto", errs, 0, 0) : fallback;
    if (!errs.ok()) return {};
    std::vector<Scalar> t = hankel_transform(expand_series(), offset, upto);
    json arr = json::array();
    for (const Scalar& v : t) arr.push_back(value_json(v));
    out["offset"] = offset;
    out["values"] = arr;
  } else if (op == "closedform") {
    const BSeq& b = need_b();
    long long k = prm.contains("k") ? require_int(prm["k"], path + ".k", errs, 0, 0) : b.K();
    if (!errs.ok()) return {};
    out["k"] = k;
    out["value"] = buslaev_d(b, k).str();
  } else if (op == "polys") {
    std::string kind = "r";
    if (prm.contains("kind")) {
      if (!prm["kind"].is_string() ||
          (prm["kind"] != json("r") && prm["kind"] != json("p"))) {
        errs.add(path + ".kind", "expected \"r\" or \"p\"");
        return {};
      }
      kind = prm["kind"].get<std::string>();
    }
    json arr = json::array();
    if (kind == "r") {
      const BSeq& b = need_b();
      long long upto = prm.contains("upto") ? require_int(prm["upto"], path + ".upto", errs, 0, 0)
                                            : b.K();
      if (!errs.ok()) return {};
      for (long long k = 0; k <= upto; ++k) arr.push_back(poly_json(r_poly(b, job.numerators, k)));
    } else {
      long long upto = prm.contains("upto") ? require_int(prm["upto"], path + ".upto", errs, 0, 0)
                                            : (job.order + 1) / 2;
      if (!errs.ok()) return {};
      PowerSeries f = expand_series();
      for (long long n = 0; n <= upto; ++n) arr.push_back(poly_json(p_poly(f, n)));
    }
    out["kind"] = kind;
    out["polys"] = arr;
  } else if (op == "reconstruct") {
    long long fallback = std::max<long long>((job.order - 2) / 2, 0);
    long long upto = prm.contains("upto") ? require_int(prm["upto"], path + ".upto", errs, 0, 0) : fallback;
    if (!errs.ok()) return {};
    CFracReconstruction rec = reconstruct_cfrac(expand_series(), upto);
    json arr = json::array();
    for (const Scalar& v : rec.numerators) arr.push_back(value_json(v));
    out["complete"] = rec.complete;
    out["numerators"] = arr;
    if (!rec.complete)
      out["failure"] = json{{"error", "zero-determinant"},
                            {"index", rec.failure_index},
                            {"offset", rec.failure_offset}};
  } else {
    errs.add(path + (task.is_object() ? ".op" : ""), "unknown operation '" + op + "'");
    return {};
  }
  return out;
}

// ---- subcommand drivers --------------------------------------------------

struct Cli {
  SourceOpts src;
  std::string format = "json";
  long long offset = 0;
  long long upto = -1;
  long long k = -1;
  long long kmax = 6;
  long long count = 20;
  unsigned seed = 0;
  std::string kind = "r";
  std::string suite;
  std::string job_path;
};

int run_expand(const Cli& cli) {
  long long order = cli.src.order;
  if (order < 0 && !cli.src.coeffs_text.empty())
    order = static_cast<long long>(split_csv(cli.src.coeffs_text).size()) - 1;
  if (order < 0) throw ParseError("expand needs --order");
  PowerSeries f = resolve_series(cli.src, order);
  std::vector<Scalar> coeffs;
  for (long long n = 0; n <= f.order(); ++n) coeffs.push_back(f.coeff(n));
  print_indexed(cli.format, coeffs, 0, "n");
  return kOk;
}

int run_transform(const Cli& cli) {
  if (cli.upto < 0) throw ParseError("transform needs --upto");
  long long order = cli.src.order < 0 ? cli.offset + 2 * cli.upto : cli.src.order;
  PowerSeries f = resolve_series(cli.src, order);
  print_indexed(cli.format, hankel_transform(f, cli.offset, cli.upto), 0, "n");
  return kOk;
}

int run_closedform(const Cli& cli) {
  if (cli.src.b_text.empty()) throw ParseError("closedform needs --b");
  if (cli.k < 0) throw ParseError("closedform needs --k");
  BSeq b = BSeq::parse(cli.src.b_text);
  SignedMonomial d = buslaev_d(b, cli.k);
  if (!cli.src.numerators_text.empty()) {
    std::vector<std::string> parts = split_csv(cli.src.numerators_text);
    Ring ring = ring_for_texts(parts);
    std::vector<Scalar> nums;
    for (const std::string& p : parts) nums.push_back(Scalar::parse(ring, p));
    Scalar value = Scalar::zero(ring);
    if (d.sign != 0) {
      value = Scalar::constant(Rational(d.sign), ring);
      for (const auto& [j, e] : d.exponents) {
        if (j >= static_cast<int>(nums.size()))
          throw IndexOutOfRangeError("numerator a" + std::to_string(j) + " not given");
        value = value * nums[static_cast<std::size_t>(j)].pow(e);
      }
    }
    if (cli.format == "json")
      std::cout << value_json(value).dump() << "\n";
    else
      std::cout << value.str() << "\n";
    return kOk;
  }
  if (!cli.src.symbolic) throw ParseError("closedform needs --symbolic or --numerators");
  std::cout << d.str() << "\n";
  return kOk;
}

int run_polys(const Cli& cli) {
  long long upto = cli.upto;
  std::vector<XPoly> polys;
  std::string label;
  if (cli.kind == "r") {
    if (cli.src.b_text.empty()) throw ParseError("polys --kind r needs --b");
    BSeq b = BSeq::parse(cli.src.b_text);
    if (upto < 0) upto = b.K();
    std::vector<Scalar> nums;
    if (!cli.src.numerators_text.empty()) {
      std::vector<std::string> parts = split_csv(cli.src.numerators_text);
      Ring ring = ring_for_texts(parts);
      for (const std::string& p : parts) nums.push_back(Scalar::parse(ring, p));
    } else {
      long long acount = std::max<long long>(upto, 1);
      Ring ring(static_cast<int>(acount), cli.src.with_q, cli.src.with_u);
      for (long long j = 0; j < acount; ++j) nums.push_back(Scalar::a(ring, static_cast<int>(j)));
    }
    for (long long k = 0; k <= upto; ++k) polys.push_back(r_poly(b, nums, k));
    label = "r";
  } else if (cli.kind == "p") {
    if (upto < 0) throw ParseError("polys --kind p needs --upto");
    long long order = cli.src.order < 0 ? std::max<long long>(2 * upto - 1, 0) : cli.src.order;
    PowerSeries f = resolve_series(cli.src, order);
    for (long long n = 0; n <= upto; ++n) polys.push_back(p_poly(f, n));
    label = "p";
  } else {
    throw ParseError("polys --kind must be r or p");
  }
  if (cli.format == "json") {
    json arr = json::array();
    for (const XPoly& p : polys) arr.push_back(poly_json(p));
    std::cout << arr.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < polys.size(); ++i)
      std::cout << label << "_" << i << ": " << pretty_poly(polys[i]) << "\n";
  }
  return kOk;
}

int run_reconstruct(const Cli& cli) {
  if (cli.upto < 0) throw ParseError("reconstruct needs --upto");
  long long order = cli.src.order < 0 ? 2 * cli.upto + 2 : cli.src.order;
  PowerSeries f = resolve_series(cli.src, order);
  CFracReconstruction rec = reconstruct_cfrac(f, cli.upto);
  if (cli.format == "json") {
    json arr = json::array();
    for (const Scalar& v : rec.numerators) arr.push_back(value_json(v));
    json out{{"complete", rec.complete}, {"numerators", arr}};
    if (!rec.complete)
      out["failure"] = json{{"error", "zero-determinant"},
                            {"index", rec.failure_index},
                            {"offset", rec.failure_offset}};
    std::cout << out.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < rec.numerators.size(); ++i)
      std::cout << "a" << i << "  " << rec.numerators[i].str() << "\n";
    if (!rec.complete)
      std::cout << "zero determinant at index " << rec.failure_index << ", offset "
                << rec.failure_offset << "\n";
  }
  return rec.complete ? kOk : kVerifyFailure;
}

int run_verify(const Cli& cli) {
  CheckList checks;
  if (cli.suite == "orthogonality") {
    if (cli.src.b_text.empty()) throw ParseError("verify --suite orthogonality needs --b");
    run_orthogonality(BSeq::parse(cli.src.b_text), cli.kmax, checks);
  } else if (cli.suite == "closedform") {
    if (cli.src.b_text.empty()) throw ParseError("verify --suite closedform needs --b");
    BSeq b = BSeq::parse(cli.src.b_text);
    // largest index the depth bound supports without extending b
    long long cap = (b.b(b.K()) + b.b(b.K() - 1)) / 2;
    run_closedform_suite(b, cli.upto < 0 ? std::min<long long>(cap, 10) : cli.upto, checks);
  } else if (cli.suite == "reductions") {
    run_reductions(cli.count, cli.seed, checks);
  } else if (cli.suite == "condensation") {
    run_condensation(cli.src.builtin, cli.upto < 0 ? 5 : cli.upto, checks);
  } else {
    throw UnknownNameError("unknown suite '" + cli.suite +
                           "' (orthogonality, closedform, reductions, condensation)");
  }
  return finish_suite(cli.format, cli.suite, checks);
}

int run_job(const Cli& cli) {
  std::ifstream in(cli.job_path);
  if (!in) {
    std::cerr << "error: cannot open '" << cli.job_path << "'\n";
    return kInputError;
  }
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    std::cerr << "error: " << cli.job_path << ": " << e.what() << "\n";
    return kInputError;
  }
  JobErrors errs;
  Job job = load_job(root, errs);
  json results = json::array();
  if (errs.ok()) {
    for (std::size_t i = 0; i < job.tasks.size(); ++i) {
      json r = run_job_task(job, job.tasks[i], "$.tasks[" + std::to_string(i) + "]", errs);
      if (!errs.ok()) break;
      results.push_back(std::move(r));
    }
  }
  if (!errs.ok()) {
    for (const std::string& m : errs.messages) std::cerr << "error: " << m << "\n";
    return kInputError;
  }
  if (cli.format == "json") {
    std::cout << json{{"results", results}}.dump() << "\n";
  } else {
    for (const json& r : results) std::cout << r.dump() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"exact Hankel transforms, C-fraction expansion, and closed-form checks"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", cli.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* expand = app.add_subcommand("expand", "expand a fraction or builtin into a series");
  add_source_options(expand, cli.src);
  add_format(expand);

  CLI::App* transform = app.add_subcommand("transform", "Hankel transform of a series");
  add_source_options(transform, cli.src);
  transform->add_option("--offset", cli.offset, "entry offset of the determinants (default 0)");
  transform->add_option("--upto", cli.upto, "largest determinant index");
  add_format(transform);

  CLI::App* closedform =
      app.add_subcommand("closedform", "closed-form Hankel determinant of a b-sequence");
  closedform->add_option("--b", cli.src.b_text, "b-sequence, comma separated, starting -1,0");
  closedform->add_option("--k", cli.k, "index into the b-sequence");
  closedform->add_flag("--symbolic", cli.src.symbolic, "print the signed monomial in a0, a1, ...");
  closedform->add_option("--numerators", cli.src.numerators_text,
                         "evaluate the monomial at these numerators");
  add_format(closedform);

  CLI::App* polys = app.add_subcommand("polys", "recurrence or bordered-determinant polynomials");
  add_source_options(polys, cli.src);
  polys->add_option("--kind", cli.kind, "r (recurrence) or p (bordered determinant)");
  polys->add_option("--upto", cli.upto, "largest polynomial index");
  add_format(polys);

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "recover C-fraction numerators from a series");
  add_source_options(reconstruct, cli.src);
  reconstruct->add_option("--upto", cli.upto, "recover a_0 .. a_{2*upto+1}");
  add_format(reconstruct);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cli.suite,
                     "orthogonality, closedform, reductions, or condensation")
      ->required();
  verify->add_option("--b", cli.src.b_text, "b-sequence for orthogonality/closedform");
  verify->add_option("--kmax", cli.kmax, "largest polynomial index (orthogonality)");
  verify->add_option("--upto", cli.upto, "largest determinant index (closedform/condensation)");
  verify->add_option("--count", cli.count, "number of random series (reductions)");
  verify->add_option("--seed", cli.seed, "random seed (reductions)");
  verify->add_option("--builtin", cli.src.builtin, "restrict condensation to one builtin");
  add_format(verify);

  CLI::App* job = app.add_subcommand("job", "run every task of a JSON job file");
  job->add_option("file", cli.job_path, "job description path")->required();
  add_format(job);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::cout << app.help();
      return kOk;
    }
    std::cerr << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (expand->parsed()) return run_expand(cli);
    if (transform->parsed()) return run_transform(cli);
    if (closedform->parsed()) return run_closedform(cli);
    if (polys->parsed()) return run_polys(cli);
    if (reconstruct->parsed()) return run_reconstruct(cli);
    if (verify->parsed()) return run_verify(cli);
    if (job->parsed()) return run_job(cli);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
