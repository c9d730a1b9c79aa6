#include "homacm/query.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <memory>
#include <sstream>

#include "homacm/bundle_datum.hpp"
#include "homacm/classifier.hpp"
#include "homacm/closed_forms.hpp"
#include "homacm/criteria.hpp"

namespace homacm {

using Json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kValueOptions{"--I", "--polarization", "--weight", "--twists",
                                             "--format", "--cap", "--block", "--seed"};

bool takes_weight(const std::string& cmd) {
  return cmd != "enumerate-acm" && cmd != "enumerate-ulrich" && cmd != "universal-weights";
}

long parse_int(const std::string& tok, const std::string& what) {
  long v = 0;
  const char* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (tok.empty() || ec != std::errc() || p != end)
    throw UsageError(what + ": '" + tok + "' is not an integer");
  return v;
}

std::vector<int> parse_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) throw UsageError(what + ": empty list");
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(static_cast<int>(parse_int(tok, what)));
  if (text.back() == ',') throw UsageError(what + ": trailing comma in '" + text + "'");
  return out;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    default: return "text";
  }
}

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw UsageError("--format: '" + s + "' is not one of text, json, csv");
}

// Runs the module constructors so that every precondition is checked at parse time.
void validate(const QuerySpec& q) {
  if (std::find(known_commands().begin(), known_commands().end(), q.command) == known_commands().end())
    throw UsageError("unknown command '" + q.command + "'");
  const LieType type = LieType::parse(q.type_token);
  const auto rs = std::make_shared<const RootSystem>(RootSystem::build(type));
  if (q.command == "line-bundle") {
    if (type.family == Family::E || type.family == Family::F || type.family == Family::G)
      throw UsageError("line-bundle: family " + std::string(1, static_cast<char>(type.family)) +
                       " has no printed line-bundle criterion");
    if (q.I.size() != 2) throw UsageError("line-bundle: --I must list exactly two indices d1,d2");
  }
  const PolarizedSpace ps(rs, q.I, q.polarization);
  if (takes_weight(q.command)) {
    if (q.weight.empty()) throw UsageError(q.command + ": --weight is required");
    BundleWeight(ps, WeightVector(q.weight));
  }
  if (q.command == "sufficient" && !q.block) throw UsageError("sufficient: --block m is required");
  if (q.command == "verify-closed-form" && !ps.minimal())
    throw UsageError("verify-closed-form: the closed forms cover the minimal polarization only");
  if (q.twists && q.twists->first > q.twists->second)
    throw UsageError("--twists: lower end " + std::to_string(q.twists->first) + " exceeds upper end " +
                     std::to_string(q.twists->second));
  if (q.cap && *q.cap == 0) throw UsageError("--cap must be positive");
}

struct Context {
  LieType type;
  std::shared_ptr<const RootSystem> rs;
  std::unique_ptr<PolarizedSpace> ps;

  explicit Context(const QuerySpec& q)
      : type(LieType::parse(q.type_token)),
        rs(std::make_shared<const RootSystem>(RootSystem::build(type))),
        ps(std::make_unique<PolarizedSpace>(rs, q.I, q.polarization)) {}
};

Json rational_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

std::string rational_text(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json bigint_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<std::int64_t>::max())) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Json weight_json(const WeightVector& w) { return Json(w.coeffs); }

// One row per bundle in csv mode.
struct BundleSummary {
  WeightVector weight;
  int dim = 0;
  AssociatedDatum datum;
  bool acm = false;
  bool ulrich = false;
  BigInt rank;
};

BundleSummary summarize(const PolarizedSpace& ps, const WeightVector& w) {
  const BundleWeight bw(ps, w);
  BundleSummary s{w, ps.dimension(), associated_datum(ps, bw), false, false, bundle_rank(ps, bw)};
  s.acm = is_acm(s.datum);
  s.ulrich = is_ulrich(s.datum, s.dim);
  return s;
}

const std::string kCsvHeader = "family,rank,I,weight,dim,m_num,m_den,M_num,M_den,acm,ulrich,rank_of_bundle";

std::string csv_row(const QuerySpec& q, const LieType& type, const BundleSummary& s) {
  std::ostringstream o;
  o << static_cast<char>(type.family) << ',' << type.rank << ",\"" << join(q.I) << "\",\"" << join(s.weight.coeffs)
    << "\"," << s.dim << ',' << s.datum.m.numerator() << ',' << s.datum.m.denominator() << ','
    << s.datum.M.numerator() << ',' << s.datum.M.denominator() << ',' << (s.acm ? "true" : "false") << ','
    << (s.ulrich ? "true" : "false") << ',' << s.rank.str();
  return o.str();
}

Json summary_json(const BundleSummary& s) {
  Json entries = Json::array();
  for (const auto& [v, mult] : s.datum.entries)
    entries.push_back({{"num", v.numerator()}, {"den", v.denominator()}, {"mult", mult}});
  return Json{{"weight", weight_json(s.weight)},
              {"dim", s.dim},
              {"entries", entries},
              {"m", rational_json(s.datum.m)},
              {"M", rational_json(s.datum.M)},
              {"acm", s.acm},
              {"ulrich", s.ulrich},
              {"rank_of_bundle", bigint_json(s.rank)}};
}

void summary_text(std::ostream& out, const BundleSummary& s) {
  out << "weight: " << s.weight.to_string() << "\n"
      << "dim X: " << s.dim << "\n"
      << "datum:";
  for (const auto& [v, mult] : s.datum.entries) {
    out << ' ' << rational_text(v);
    if (mult > 1) out << "^" << mult;
  }
  out << "\n"
      << "m: " << rational_text(s.datum.m) << "\n"
      << "M: " << rational_text(s.datum.M) << "\n"
      << "acm: " << (s.acm ? "true" : "false") << "\n"
      << "ulrich: " << (s.ulrich ? "true" : "false") << "\n"
      << "rank: " << s.rank.str() << "\n";
}

// Emits the report in the requested format. `extra` holds command-specific fields.
void emit_bundle(const QuerySpec& q, const Context& c, const BundleSummary& s, const Json& extra,
                 std::ostream& out) {
  switch (q.format) {
    case OutputFormat::Json: {
      Json j{{"input", to_json(q)}};
      const Json body = summary_json(s);
      for (const auto& [k, v] : body.items()) j[k] = v;
      for (const auto& [k, v] : extra.items()) j[k] = v;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      out << kCsvHeader;
      for (const auto& [k, v] : extra.items()) out << ',' << k;
      out << "\n" << csv_row(q, c.type, s);
      for (const auto& [k, v] : extra.items()) out << ',' << (v.is_string() ? '"' + v.get<std::string>() + '"' : v.dump());
      out << "\n";
      break;
    }
    default:
      summary_text(out, s);
      for (const auto& [k, v] : extra.items())
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

EnumerationOptions enumeration_options(const QuerySpec& q) {
  EnumerationOptions o;
  o.cap = q.cap ? *q.cap : default_candidate_cap();
  o.tight = q.tight;
  return o;
}

void emit_list(const QuerySpec& q, const Context& c, const std::vector<WeightVector>& ws, std::ostream& out) {
  std::vector<BundleSummary> rows;
  rows.reserve(ws.size());
  for (const auto& w : ws) rows.push_back(summarize(*c.ps, w));
  switch (q.format) {
    case OutputFormat::Json: {
      Json list = Json::array();
      for (const auto& s : rows) list.push_back({{"weight", weight_json(s.weight)}, {"rank", bigint_json(s.rank)}});
      Json j{{"input", to_json(q)}, {"dim", c.ps->dimension()}, {"count", rows.size()}, {"weights", list}};
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << kCsvHeader << "\n";
      for (const auto& s : rows) out << csv_row(q, c.type, s) << "\n";
      break;
    default:
      out << q.command << " on " << c.type.to_string() << "/P_{" << join(q.I) << "}, dim X = " << c.ps->dimension()
          << ": " << rows.size() << (rows.size() == 1 ? " weight" : " weights") << "\n";
      for (const auto& s : rows) out << "  " << s.weight.to_string() << "  rank " << s.rank.str() << "\n";
  }
}

void run_cohomology(const QuerySpec& q, const Context& c, std::ostream& out) {
  const BundleWeight bw(*c.ps, WeightVector(q.weight));
  long lo, hi;
  if (q.twists) {
    std::tie(lo, hi) = *q.twists;
  } else {
    const AssociatedDatum d = associated_datum(*c.ps, bw);
    lo = static_cast<long>(floor_of(d.m)) - 1;
    hi = static_cast<long>(ceil_of(d.M)) + 1;
  }
  std::vector<CohomologyRecord> recs;
  for (long t = lo; t <= hi; ++t) recs.push_back(cohomology(*c.ps, bw, t));
  switch (q.format) {
    case OutputFormat::Json: {
      Json list = Json::array();
      for (const auto& r : recs) {
        if (const auto* nz = std::get_if<NonZeroCohomology>(&r.outcome))
          list.push_back({{"twist", r.twist},
                          {"all_zero", false},
                          {"degree", nz->degree},
                          {"dominant_weight", weight_json(nz->dominant_weight)},
                          {"dimension", bigint_json(nz->dimension)}});
        else
          list.push_back({{"twist", r.twist}, {"all_zero", true}});
      }
      out << Json{{"input", to_json(q)}, {"dim", c.ps->dimension()}, {"cohomology", list}}.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "twist,degree,dominant_weight,dimension\n";
      for (const auto& r : recs) {
        if (const auto* nz = std::get_if<NonZeroCohomology>(&r.outcome))
          out << r.twist << ',' << nz->degree << ",\"" << join(nz->dominant_weight.coeffs) << "\","
              << nz->dimension.str() << "\n";
        else
          out << r.twist << ",,,0\n";
      }
      break;
    default:
      out << "cohomology of " << WeightVector(q.weight).to_string() << " twisted by -t varpi on "
          << c.type.to_string() << "/P_{" << join(q.I) << "}\n";
      for (const auto& r : recs) {
        out << "  t = " << r.twist << ": ";
        if (const auto* nz = std::get_if<NonZeroCohomology>(&r.outcome))
          out << "H^" << nz->degree << " = V" << nz->dominant_weight.to_string() << ", dim " << nz->dimension.str()
              << "\n";
        else
          out << "all zero\n";
      }
  }
}

void run_universal(const QuerySpec& q, const Context& c, std::ostream& out) {
  const auto cat = universal_weights(c.type, q.I);
  std::vector<BundleSummary> rows;
  for (const auto& u : cat) rows.push_back(summarize(*c.ps, u.weight));
  switch (q.format) {
    case OutputFormat::Json: {
      Json list = Json::array();
      for (size_t k = 0; k < cat.size(); ++k) {
        Json e{{"name", cat[k].name}};
        const Json body = summary_json(rows[k]);
        for (const auto& [key, v] : body.items()) e[key] = v;
        list.push_back(e);
      }
      out << Json{{"input", to_json(q)}, {"bundles", list}}.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "name," << kCsvHeader << "\n";
      for (size_t k = 0; k < cat.size(); ++k) out << cat[k].name << ',' << csv_row(q, c.type, rows[k]) << "\n";
      break;
    default:
      for (size_t k = 0; k < cat.size(); ++k)
        out << cat[k].name << ": " << rows[k].weight.to_string() << "  acm " << (rows[k].acm ? "true" : "false")
            << "\n";
  }
}

Json closed_form_json(const PolarizedSpace& ps, const WeightVector& w) {
  const ClosedFormVerdict v = verify_closed_form(ps, w);
  if (std::holds_alternative<ClosedFormMatch>(v)) return Json{{"closed_form", "match"}};
  const auto& mm = std::get<ClosedFormMismatch>(v);
  const auto erratum = explain_mismatch(ps, w, mm);
  return Json{{"closed_form", "mismatch"},
              {"entries_agree", mm.entries_agree()},
              {"M_closed", rational_text(mm.M_closed)},
              {"M_general", rational_text(mm.M_general)},
              {"erratum", erratum ? Json(*erratum) : Json(nullptr)},
              {"detail", mm.describe()}};
}

int dispatch(const QuerySpec& q, std::ostream& out) {
  const Context c(q);
  const std::string& cmd = q.command;
  if (cmd == "enumerate-acm") {
    std::vector<WeightVector> ws;
    for (auto& b : enumerate_acm(*c.ps, enumeration_options(q))) ws.push_back(std::move(b.lambda0));
    emit_list(q, c, ws, out);
    return 0;
  }
  if (cmd == "enumerate-ulrich") {
    emit_list(q, c, enumerate_ulrich(*c.ps, enumeration_options(q)), out);
    return 0;
  }
  if (cmd == "universal-weights") {
    run_universal(q, c, out);
    return 0;
  }
  if (cmd == "cohomology") {
    run_cohomology(q, c, out);
    return 0;
  }

  const WeightVector w(q.weight);
  const BundleSummary s = summarize(*c.ps, w);
  Json extra = Json::object();
  if (cmd == "verify-closed-form") {
    extra = closed_form_json(*c.ps, w);
  } else if (cmd == "line-bundle") {
    const int n = c.type.family == Family::A ? c.type.rank + 1 : c.type.rank;
    extra["closed_criterion"] =
        line_bundle_acm_closed(c.type.family, n, q.I[0], q.I[1], w[q.I[0] - 1], w[q.I[1] - 1]);
  } else if (cmd == "sufficient") {
    extra["sufficient"] = sufficient_acm(c.type, q.I, *q.block, w);
  } else if (cmd == "datum" || cmd == "acm" || cmd == "ulrich" || cmd == "rank") {
    const CanonicalBundle cb = canonical_twist(*c.ps, BundleWeight(*c.ps, w));
    extra["canonical_weight"] = join(cb.lambda0.coeffs);
    extra["canonical_twist"] = cb.twist;
  }
  emit_bundle(q, c, s, extra, out);
  return 0;
}

}  // namespace

QuerySpec parse_spec(const std::vector<std::string>& args) {
  // "--opt value" becomes "--opt=value" so that values such as "-1,3" are not read as flags.
  std::vector<std::string> joined;
  for (size_t k = 0; k < args.size(); ++k) {
    if (std::find(kValueOptions.begin(), kValueOptions.end(), args[k]) != kValueOptions.end() &&
        k + 1 < args.size()) {
      joined.push_back(args[k] + "=" + args[k + 1]);
      ++k;
    } else {
      joined.push_back(args[k]);
    }
  }

  CLI::App app{"homacm"};
  std::string command, type_token, I_text, pol_text, weight_text, twists_text, format_text = "text";
  std::optional<std::uint64_t> cap, seed;
  std::optional<int> block;
  bool tight = false;
  app.add_option("command", command)->required();
  app.add_option("type", type_token)->required();
  app.add_option("--I", I_text);
  app.add_option("--polarization", pol_text);
  app.add_option("--weight", weight_text);
  app.add_option("--twists", twists_text);
  app.add_option("--format", format_text);
  app.add_option("--cap", cap);
  app.add_option("--block", block);
  app.add_option("--seed", seed);
  app.add_flag("--tight", tight);

  std::vector<std::string> reversed(joined.rbegin(), joined.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  QuerySpec q;
  q.command = command;
  q.type_token = type_token;
  if (I_text.empty()) throw UsageError("--I is required");
  q.I = parse_list(I_text, "--I");
  q.polarization = pol_text.empty() ? std::vector<int>(q.I.size(), 1) : parse_list(pol_text, "--polarization");
  if (!weight_text.empty()) q.weight = parse_list(weight_text, "--weight");
  if (!twists_text.empty()) {
    const auto t = parse_list(twists_text, "--twists");
    if (t.size() != 2) throw UsageError("--twists expects two integers lo,hi, got '" + twists_text + "'");
    q.twists = std::pair<long, long>{t[0], t[1]};
  }
  q.format = parse_format(format_text);
  q.cap = cap;
  q.tight = tight;
  q.block = block;
  q.seed = seed;
  try {
    validate(q);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  return q;
}

Json to_json(const QuerySpec& q) {
  Json j{{"command", q.command},
         {"type", q.type_token},
         {"I", q.I},
         {"polarization", q.polarization},
         {"weight", q.weight},
         {"format", format_name(q.format)},
         {"tight", q.tight}};
  j["twists"] = q.twists ? Json::array({q.twists->first, q.twists->second}) : Json(nullptr);
  j["cap"] = q.cap ? Json(*q.cap) : Json(nullptr);
  j["block"] = q.block ? Json(*q.block) : Json(nullptr);
  j["seed"] = q.seed ? Json(*q.seed) : Json(nullptr);
  return j;
}

QuerySpec spec_from_json(const Json& j) {
  QuerySpec q;
  q.command = j.at("command").get<std::string>();
  q.type_token = j.at("type").get<std::string>();
  q.I = j.at("I").get<std::vector<int>>();
  q.polarization = j.at("polarization").get<std::vector<int>>();
  q.weight = j.at("weight").get<std::vector<int>>();
  q.format = parse_format(j.at("format").get<std::string>());
  q.tight = j.at("tight").get<bool>();
  if (!j.at("twists").is_null()) q.twists = std::pair<long, long>{j["twists"][0].get<long>(), j["twists"][1].get<long>()};
  if (!j.at("cap").is_null()) q.cap = j["cap"].get<std::uint64_t>();
  if (!j.at("block").is_null()) q.block = j["block"].get<int>();
  if (!j.at("seed").is_null()) q.seed = j["seed"].get<std::uint64_t>();
  return q;
}

int run(const QuerySpec& q, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(q, out);
  } catch (const CandidateCapExceeded& e) {
    err << "homacm: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    err << "homacm: " << e.what() << "\n";
    return 2;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    out << "usage: homacm <command> <type> --I i,j,... [--polarization n,...] [--weight a1,...,ar]\n"
           "              [--twists lo,hi] [--format text|json|csv] [--cap N] [--tight] [--block m] [--seed S]\n"
           "commands:";
    for (const auto& c : known_commands()) out << ' ' << c;
    out << "\n";
    return args.empty() ? 2 : 0;
  }
  QuerySpec q;
  try {
    q = parse_spec(args);
  } catch (const UsageError& e) {
    err << "homacm: " << e.what() << "\n";
    return 2;
  }
  return run(q, out, err);
}

}  // namespace homacm
