#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "excoll/collection.hpp"
#include "excoll/diophantine.hpp"
#include "excoll/enumeration.hpp"
#include "excoll/families.hpp"
#include "excoll/geometry.hpp"
#include "excoll/mutation.hpp"
#include "excoll/pair_table.hpp"
#include "excoll/serialization.hpp"
#include "excoll/vanishing.hpp"
#include "excoll/verification.hpp"

namespace excoll::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv, Markdown };

struct Options {
  std::string variety;
  std::string divisor;
  std::optional<Coeff> window;
  std::optional<Coeff> param_range;
  std::string format;
  std::string input;
  std::string collection;
  std::optional<std::size_t> index;
  std::string degrees;
  std::string direction = "right";
  bool normalize = false;
  std::string target;
};

bool use_color(std::ostream& err) {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return &err == &std::cerr && isatty(STDERR_FILENO);
}

std::string paint(bool color, std::string_view code, std::string_view text) {
  if (!color) return std::string(text);
  return "\033[" + std::string(code) + "m" + std::string(text) + "\033[0m";
}

Format parse_format(const std::string& text) {
  if (text.empty()) return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "markdown") return Format::Markdown;
  throw UsageError("unknown format '" + text + "' (expected json, csv or markdown)");
}

VarietyTag require_variety(const Options& o) {
  if (o.variety.empty()) throw UsageError("--variety is required");
  const auto tag = parse_variety(o.variety);
  if (!tag) throw UsageError("unknown variety '" + o.variety + "' (expected point, line or cubic)");
  return *tag;
}

DivisorClass require_divisor(const Options& o) {
  if (o.divisor.empty()) throw UsageError("--divisor is required");
  try {
    return parse_divisor(o.divisor);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Collection read_collection(const Options& o) {
  std::string text;
  if (!o.collection.empty()) {
    text = o.collection;
  } else if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot read '" + o.input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    throw UsageError("a collection is required (--input FILE or --collection JSON)");
  }
  try {
    const auto j = json::parse(text);
    // A bare array of classes takes its variety from --variety.
    if (j.is_array()) return Collection{require_variety(o), j.get<std::vector<DivisorClass>>()};
    auto c = j.get<Collection>();
    if (!o.variety.empty() && require_variety(o) != c.variety) {
      throw UsageError("--variety does not match the collection's variety");
    }
    return c;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed collection JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed collection JSON: ") + e.what());
  }
}

std::vector<Coeff> parse_list(const std::string& text) {
  std::vector<Coeff> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("malformed integer list '" + text + "'");
    }
  }
  return out;
}

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flat objects render as a one-row CSV or a key/value markdown table.
void emit_flat(const json& j, Format f, std::ostream& out) {
  if (f == Format::Csv) {
    std::string header;
    std::string row;
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      const auto text = cell_text(v);
      header += (first ? "" : ",") + k;
      row += (first ? "" : ",") + (text.find(',') != std::string::npos ? "\"" + text + "\"" : text);
      first = false;
    }
    out << header << '\n' << row << '\n';
  } else {
    out << "| key | value |\n|---|---|\n";
    for (const auto& [k, v] : j.items()) out << "| " << k << " | " << cell_text(v) << " |\n";
  }
}

std::string entries_text(const Collection& c) {
  std::string s;
  for (const auto& d : c.entries) s += (s.empty() ? "" : " ") + ("(" + format_pair(d) + ")");
  return s;
}

void emit_collection(const Collection& c, Format f, std::ostream& out) {
  switch (f) {
    case Format::Json: out << dump_json(c); break;
    case Format::Text: out << json(c).dump() << '\n'; break;
    case Format::Csv:
      out << "position,a,b\n";
      for (std::size_t i = 0; i < c.size(); ++i)
        out << i + 1 << ',' << c.entries[i].a << ',' << c.entries[i].b << '\n';
      break;
    case Format::Markdown:
      out << "| position | divisor |\n|---|---|\n";
      for (std::size_t i = 0; i < c.size(); ++i)
        out << "| " << i + 1 << " | " << format_divisor(c.entries[i]) << " |\n";
      break;
  }
}

int cmd_chi(const Options& o, Format f, std::ostream& out) {
  const auto tag = require_variety(o);
  const auto d = require_divisor(o);
  const Coeff chi = euler_char(variety_model(tag), d);
  if (f == Format::Text) {
    out << chi << '\n';
  } else {
    const json j{{"variety", tag}, {"divisor", d}, {"chi", chi}};
    f == Format::Json ? void(out << dump_json(j)) : emit_flat(j, f, out);
  }
  return kExitOk;
}

int cmd_vanish(const Options& o, Format f, std::ostream& out) {
  const auto tag = require_variety(o);
  const auto d = require_divisor(o);
  const auto& model = variety_model(tag);
  const Verdict v = coh_zero(model, d);
  const auto c = matching_case(tag, d);
  json j{{"variety", tag},
         {"divisor", d},
         {"verdict", v},
         {"chi", euler_char(model, d)},
         {"h0_vanishes", h0_vanishes(model, d)},
         {"h3_vanishes", h3_vanishes(model, d)}};
  j["case"] = c ? json(*c) : json(nullptr);
  if (f == Format::Text) {
    out << to_string(v);
    if (c) out << " (case " << *c << ")";
    out << '\n';
  } else {
    f == Format::Json ? void(out << dump_json(j)) : emit_flat(j, f, out);
  }
  return kExitOk;
}

int cmd_pairs_table(const Options& o, Format f, std::ostream& out) {
  const auto tag = require_variety(o);
  const Coeff w = o.window.value_or(15);
  if (w < 10) throw UsageError("--window must be >= 10 for pair tables");
  const auto table = pair_table(tag, w);
  switch (f) {
    case Format::Json: out << dump_json(table); break;
    case Format::Csv: out << render_csv(table); break;
    case Format::Text:
    case Format::Markdown: out << render_markdown(table); break;
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, Format f, std::ostream& out) {
  const auto tag = require_variety(o);
  const Coeff w = o.window.value_or(15);
  if (w < 1) throw UsageError("--window must be >= 1");
  const auto report = enumerate_collections(tag, w);
  auto labels_text = [](const ConfirmedCollection& c) {
    std::string s;
    for (const auto& l : c.labels) s += (s.empty() ? "" : " ") + format_label(l);
    return s.empty() ? std::string("unmatched") : s;
  };
  switch (f) {
    case Format::Json: out << dump_json(report); break;
    case Format::Csv:
      out << "status,labels,entries\n";
      for (const auto& c : report.confirmed)
        out << "confirmed," << labels_text(c) << ',' << entries_text(c.collection) << '\n';
      for (const auto& c : report.undetermined) out << "undetermined,," << entries_text(c) << '\n';
      break;
    case Format::Markdown:
      out << "| status | type | entries |\n|---|---|---|\n";
      for (const auto& c : report.confirmed)
        out << "| confirmed | " << labels_text(c) << " | " << entries_text(c.collection) << " |\n";
      for (const auto& c : report.undetermined) out << "| undetermined | | " << entries_text(c) << " |\n";
      break;
    case Format::Text:
      for (const auto& c : report.confirmed) out << labels_text(c) << "  " << entries_text(c.collection) << '\n';
      for (const auto& c : report.undetermined) out << "undetermined  " << entries_text(c) << '\n';
      out << "confirmed: " << report.confirmed.size() << ", undetermined: " << report.undetermined.size()
          << ", window: " << report.window << '\n';
      break;
  }
  return kExitOk;
}

int cmd_classify(const Options& o, Format f, std::ostream& out) {
  const auto c = read_collection(o);
  const auto labels = classify_collection(c);
  const Verdict v = collection_verdict(c);
  json names = json::array();
  for (const auto& l : labels) names.push_back(format_label(l));
  switch (f) {
    case Format::Json: out << dump_json(json{{"collection", c}, {"labels", labels}, {"verdict", v}}); break;
    case Format::Text:
      if (labels.empty()) out << "no listed type";
      for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << format_label(labels[i]);
      out << " (verdict " << to_string(v) << ")\n";
      break;
    default: emit_flat(json{{"labels", names}, {"verdict", v}}, f, out); break;
  }
  return kExitOk;
}

int cmd_rotate(const Options& o, Format f, std::ostream& out) {
  const auto c = read_collection(o);
  if (o.direction != "right" && o.direction != "left") throw UsageError("--direction must be right or left");
  Collection n = normalize(c);
  if (n.size() != kFullLength) throw UsageError("rotation needs a collection of length 6");
  emit_collection(o.direction == "right" ? helix_rotate_right(n) : helix_rotate_left(n), f, out);
  return kExitOk;
}

int cmd_transpose(const Options& o, Format f, std::ostream& out) {
  const auto c = read_collection(o);
  if (!o.index) throw UsageError("--index is required (1-based position of the first swapped entry)");
  if (*o.index < 1 || *o.index + 1 > c.size()) throw UsageError("--index out of range");
  emit_collection(transpose_orthogonal(c, *o.index - 1), f, out);
  return kExitOk;
}

int cmd_augment(const Options& o, Format f, std::ostream& out) {
  if (o.degrees.empty()) throw UsageError("--degrees is required (comma-separated)");
  if (!o.index) throw UsageError("--index is required");
  const auto degrees = parse_list(o.degrees);
  Collection c;
  try {
    c = augment_point_blowup(degrees, *o.index);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit_collection(o.normalize ? normalize(c) : c, f, out);
  return kExitOk;
}

int cmd_dioph(const Options& o, Format f, std::ostream& out) {
  const Coeff w = o.window.value_or(50);
  if (w < 1) throw UsageError("--window must be >= 1");
  const auto sols = solve_conic_triples(w);
  switch (f) {
    case Format::Json: out << dump_json(json{{"window", w}, {"solutions", sols}}); break;
    case Format::Csv:
      out << "a1,b1,a2,b2,a3,b3\n";
      for (const auto& s : sols) out << s[0] << ',' << s[1] << ',' << s[2] << ',' << s[3] << ',' << s[4] << ',' << s[5] << '\n';
      break;
    case Format::Markdown:
      out << "| a1 | b1 | a2 | b2 | a3 | b3 |\n|---|---|---|---|---|---|\n";
      for (const auto& s : sols)
        out << "| " << s[0] << " | " << s[1] << " | " << s[2] << " | " << s[3] << " | " << s[4] << " | " << s[5]
            << " |\n";
      break;
    case Format::Text:
      for (const auto& s : sols)
        out << '(' << s[0] << ',' << s[1] << ',' << s[2] << ',' << s[3] << ',' << s[4] << ',' << s[5] << ")\n";
      out << "solutions: " << sols.size() << ", window: " << w << '\n';
      break;
  }
  return kExitOk;
}

int cmd_verify(const Options& o, Format f, std::ostream& out, bool color) {
  const auto target = parse_verify_target(o.target);
  if (!target) throw UsageError("unknown verification target '" + o.target + "'");
  VerifyOptions vo;
  vo.window = o.window;
  vo.param_range = o.param_range;
  if (!o.variety.empty()) vo.variety = require_variety(o);
  VerificationResult r;
  try {
    r = verify(*target, vo);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  switch (f) {
    case Format::Json:
      out << dump_json(
          json{{"target", r.target}, {"passed", r.passed}, {"summary", r.summary}, {"mismatches", r.mismatches}});
      break;
    case Format::Csv:
      out << "target,passed,mismatches\n" << r.target << ',' << (r.passed ? "true" : "false") << ','
          << r.mismatches.size() << '\n';
      break;
    case Format::Markdown:
    case Format::Text:
      for (const auto& line : r.summary) out << line << '\n';
      for (const auto& line : r.mismatches) out << "mismatch: " << line << '\n';
      out << r.target << ": " << (r.passed ? paint(color, "32", "PASS") : paint(color, "31", "FAIL")) << '\n';
      break;
  }
  return r.passed ? kExitOk : kExitVerificationFailed;
}

// CLI11 reads "-1,2" as a flag. Glue values that start with '-' onto the
// option that takes them ("--divisor=-1,2").
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> valued{"--divisor", "--degrees", "--window", "--param-range", "--index"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value = std::find(valued.begin(), valued.end(), args[i]) != valued.end();
    if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) != 0)) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  const bool color = use_color(err);
  CLI::App app{"Exceptional collections of line bundles on three blow-ups of P^3", "excoll"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--variety", o.variety, "point | line | cubic");
    sub->add_option("--divisor", o.divisor, "divisor class a,b (aH + bE)");
    sub->add_option("--window", o.window, "search window");
    sub->add_option("--param-range", o.param_range, "parameter range for relation search");
    sub->add_option("--format", o.format, "json | csv | markdown");
    sub->add_option("--input", o.input, "collection JSON file");
  };

  struct Entry {
    CLI::App* app;
    int (*run)(const Options&, Format, std::ostream&);
  };
  std::vector<Entry> simple;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, Format, std::ostream&)) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    simple.push_back({sub, fn});
    return sub;
  };

  add("chi", "Euler characteristic of O(D)", cmd_chi);
  add("vanish", "cohomological vanishing verdict for O(D)", cmd_vanish);
  add("pairs-table", "exceptional-pair table by family", cmd_pairs_table);
  add("enumerate", "enumerate length-6 exceptional collections", cmd_enumerate);
  auto* classify = add("classify", "match a collection against the listed types", cmd_classify);
  auto* rotate = add("rotate", "helix rotation of a collection", cmd_rotate);
  auto* transpose = add("transpose", "swap a completely orthogonal adjacent pair", cmd_transpose);
  auto* augment = add("augment", "augmented collection on the blow-up of P^3 at a point", cmd_augment);
  add("dioph", "solve the conic triple system", cmd_dioph);
  for (auto* sub : {classify, rotate, transpose}) {
    sub->add_option("--collection", o.collection, "inline collection JSON");
  }
  rotate->add_option("--direction", o.direction, "right | left");
  transpose->add_option("--index", o.index, "1-based position i; swaps entries i and i+1");
  augment->add_option("--index", o.index, "1-based switching position");
  augment->add_option("--degrees", o.degrees, "comma-separated degrees of the collection on P^3");
  augment->add_flag("--normalize", o.normalize, "subtract the first entry");

  auto* verify_cmd = app.add_subcommand("verify", "reproduce a published result");
  add_common(verify_cmd);
  verify_cmd->add_option("target", o.target, "prop4.3 prop5.5 prop6.4 thm4.4 thm5.6 thm6.5 tables relations "
                                              "claim4.5 claim6.2 claim6.3")
      ->required();

  auto args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << paint(color, "31", "error: ") << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Format f = parse_format(o.format);
    if (verify_cmd->parsed()) return cmd_verify(o, f, out, color);
    for (const auto& e : simple) {
      if (e.app->parsed()) return e.run(o, f, out);
    }
    err << paint(color, "31", "error: ") << "no subcommand given\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << paint(color, "31", "error: ") << e.what() << '\n';
    return kExitUsage;
  } catch (const NotOrthogonalError& e) {
    err << paint(color, "31", "error: ") << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << paint(color, "31", "error: ") << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << paint(color, "31", "error: ") << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace excoll::cli
