#include "iwahori/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "iwahori/errors.hpp"
#include "iwahori/formulas.hpp"
#include "iwahori/parallel.hpp"
#include "iwahori/serialize.hpp"
#include "iwahori/verify.hpp"

namespace iwahori::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kCharacterNames = {"triv", "sign", "neg-long", "neg-short"};

std::vector<CartanType> selected_types(const CliConfig& cfg) {
  std::vector<CartanType> out;
  if (!cfg.types.empty()) {
    for (const auto& t : cfg.types) out.push_back(CartanType::parse(t));
    return out;
  }
  for (char family : {'A', 'B', 'C', 'D', 'G'}) {
    for (int r = 1; r <= cfg.max_rank; ++r) {
      CartanType t{family, r};
      if (is_admissible(t)) out.push_back(t);
    }
  }
  return out;
}

void check_character_name(const std::string& name) {
  if (name.empty()) return;
  if (std::find(kCharacterNames.begin(), kCharacterNames.end(), name) == kCharacterNames.end()) {
    throw ParseError("unknown character '" + name + "' (expected triv, sign, neg-long or neg-short)");
  }
}

Coweight parse_lambda(const std::string& text, std::size_t rank) {
  std::string s;
  for (char c : text) {
    if (c != '[' && c != ']') s += c;
  }
  if (s.find_first_not_of(" \t") == std::string::npos) return Coweight::zero(rank);
  return parse_coweight(s, rank);
}

/// "1,2,1" in 1-based generator numbers, as printed in the usual references.
std::vector<int> parse_word(const std::string& text, std::size_t rank) {
  std::vector<int> word;
  if (text.empty() || text == "e") return word;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw ParseError("bad generator '" + tok + "' in word '" + text + "'");
    }
    if (v < 1 || static_cast<std::size_t>(v) > rank) {
      throw ParseError("generator " + tok + " out of range 1.." + std::to_string(rank));
    }
    word.push_back(v - 1);
  }
  return word;
}

/// Character a formula is tied to, or nullopt when the user picks it.
std::optional<std::string> fixed_character(Formula f) {
  switch (f) {
    case Formula::WeylChar:
    case Formula::DemazureChar: return "-";
    case Formula::CasselmanShalika: return "sign";
    case Formula::Macdonald: return "triv";
    case Formula::Shalika: return "neg-short";
    case Formula::BesselValue: return "neg-long";
    default: return std::nullopt;
  }
}

struct Evaluation {
  std::string character;
  GroupRingElem value;
  json extra = json::object();
  /// Set when the report is printed but a precondition of the formula fails.
  std::string domain_failure;
};

json text_or_null(const std::optional<GroupRingElem>& f) {
  return f ? json(f->to_string()) : json(nullptr);
}

Evaluation evaluate(const WeylDatum& d, Formula f, const std::string& character,
                    const Coweight& lambda, const std::string& word_text) {
  Evaluation ev{character, GroupRingElem::zero(d.rank()), json::object(), ""};
  auto eps = [&] { return HeckeCharacter::by_name(d.rs(), character); };
  switch (f) {
    case Formula::TheoremLhs: ev.value = theorem_lhs(d, eps(), lambda); break;
    case Formula::TheoremRhs: ev.value = theorem_rhs(d, eps(), lambda); break;
    case Formula::WeylChar: ev.value = weyl_character(d, lambda); break;
    case Formula::DemazureChar: ev.value = demazure_character(d, lambda); break;
    case Formula::CasselmanShalika: {
      const auto r = casselman_shalika(d, lambda);
      ev.value = r.closed_form;
      ev.extra["theorem_value"] = r.theorem_value.to_string();
      ev.extra["unit"] = r.unit;
      ev.extra["measure"] = r.measure.to_string();
      break;
    }
    case Formula::Macdonald: ev.value = macdonald(d, lambda); break;
    case Formula::Shalika: {
      const auto r = shalika(d, lambda);
      ev.value = r.theorem_form;
      ev.extra["rewritten_form"] = r.rewritten_form.to_string();
      ev.extra["forms_agree"] = r.forms_agree();
      break;
    }
    case Formula::BesselValue: {
      const auto r = bessel_report(d);
      ev.value = r.theorem_value;
      ev.extra["quoted_product"] = r.quoted_product.to_string();
      ev.extra["ratio"] = text_or_null(r.ratio);
      ev.extra["unit_monomial"] = r.ratio_is_unit_monomial();
      ev.extra["inverted_product"] = r.inverted_product.to_string();
      ev.extra["inverted_ratio"] = text_or_null(r.inverted_ratio);
      if (!r.ratio_is_unit_monomial()) {
        ev.domain_failure = "value is not a unit monomial multiple of the quoted product";
      }
      break;
    }
    case Formula::IwahoriImage: {
      const WeylGroup& W = d.W();
      const std::vector<int> word = parse_word(word_text, d.rank());
      const std::size_t w = W.from_word(word);
      if (static_cast<std::size_t>(W[w].length) != word.size()) {
        throw NonReducedWord("word '" + word_text + "' is not reduced");
      }
      const auto r = iwahori_image(d, eps(), w, lambda);
      ev.value = r.value;
      ev.extra["word"] = word_text.empty() ? "e" : word_text;
      ev.extra["measure"] = r.measure.to_string();
      break;
    }
  }
  return ev;
}

json row_json(const std::string& type, const Evaluation& ev, const Coweight& lambda, Formula f) {
  json j = ev.extra;
  j["type"] = type;
  j["character"] = ev.character;
  j["lambda"] = lambda.to_string();
  j["formula"] = to_string(f);
  j["value"] = ev.value.to_string();
  j["terms"] = to_json(ev.value);
  return j;
}

std::string csv_row(const std::string& type, const std::string& character, const Coweight& lambda,
                    Formula f, const GroupRingElem& value) {
  return csv_field(type) + "," + csv_field(character) + "," + csv_field(lambda.to_string()) + "," +
         csv_field(to_string(f)) + "," + csv_field(value.to_string()) + "\n";
}

const char* kCsvHeader = "type,character,lambda,formula,value\n";

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InadmissibleType& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

void check_output(const std::string& output) {
  if (output != "json" && output != "csv" && output != "text") {
    throw ParseError("unknown output format '" + output + "'");
  }
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_atomically(const std::string& path, const std::string& contents) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  try {
    std::ofstream f;
    f.exceptions(std::ios::failbit | std::ios::badbit);
    f.open(tmp, std::ios::binary | std::ios::trunc);
    f << contents;
    f.close();
    std::filesystem::rename(tmp, target);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_output(cfg.output);
    check_character_name(cfg.character);
    VerifyOptions opts;
    opts.box_radius = cfg.box;
    opts.box_cap = cfg.box_cap;
    opts.mutation = parse_mutation(cfg.mutate);
    std::vector<Suite> suites;
    for (const auto& s : cfg.suites) suites.push_back(parse_suite(s));
    if (suites.empty()) suites = all_suites();
    const std::vector<CartanType> types = selected_types(cfg);
    if (cfg.jobs > 0) set_jobs(cfg.jobs);

    json all = json::array();
    std::optional<CheckResult> first_failure;
    if (cfg.output == "csv") out << "identity,type,character,status,count\n";
    for (const CartanType& t : types) {
      const DatumPtr d = WeylDatum::make(t);
      if (!cfg.character.empty() && !cfg.types.empty()) {
        HeckeCharacter::by_name(d->rs(), cfg.character);
      }
      for (Suite s : suites) {
        if (!suite_applies(s, *d)) continue;
        for (const CheckResult& r : run_suite(s, *d, opts, cfg.character)) {
          if (cfg.output == "text") {
            out << (r.passed ? "PASS " : "FAIL ") << r.identity << " " << r.type << " " << r.character
                << " " << r.count << std::endl;
          } else if (cfg.output == "csv") {
            out << csv_field(r.identity) << "," << r.type << "," << r.character << ","
                << (r.passed ? "pass" : "fail") << "," << r.count << "\n";
          }
          all.push_back(to_json(r));
          if (!r.passed && !first_failure) first_failure = r;
        }
        if (first_failure && !cfg.keep_going) break;
      }
      if (first_failure && !cfg.keep_going) break;
    }
    if (cfg.output == "json") {
      json report{{"passed", !first_failure}, {"results", all}};
      if (first_failure) report["first_failure"] = to_json(*first_failure);
      out << report.dump(2) << "\n";
    } else if (first_failure) {
      out << "witness " << to_json(*first_failure).dump() << "\n";
    }
    if (first_failure) {
      err << "verification failed: " << first_failure->identity << " on " << first_failure->type
          << "\n";
      return static_cast<int>(kVerifyFailed);
    }
    return static_cast<int>(kOk);
  });
}

int run_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_output(cfg.output);
    check_character_name(cfg.character);
    if (cfg.types.size() != 1) throw ParseError("eval needs exactly one --type");
    if (cfg.formulas.size() != 1) throw ParseError("eval needs exactly one --formula");
    const Formula f = parse_formula(cfg.formulas.front());
    const DatumPtr d = WeylDatum::make(CartanType::parse(cfg.types.front()));
    if (cfg.jobs > 0) set_jobs(cfg.jobs);
    const Coweight lambda = parse_lambda(cfg.lambda, d->rank());

    std::string character = cfg.character;
    if (const auto fixed = fixed_character(f)) {
      if (!character.empty() && *fixed != "-" && character != *fixed) {
        throw InvalidCharacter(std::string("formula ") + to_string(f) + " is defined for the " +
                               *fixed + " character, not " + character);
      }
      character = *fixed;
    } else if (character.empty()) {
      throw ParseError(std::string("formula ") + to_string(f) + " needs --character");
    }
    if (character != "-") HeckeCharacter::by_name(d->rs(), character);

    const Evaluation ev = evaluate(*d, f, character, lambda, cfg.word);
    const std::string type = d->type().to_string();
    if (cfg.output == "json") {
      out << row_json(type, ev, lambda, f).dump(2) << "\n";
    } else if (cfg.output == "csv") {
      out << kCsvHeader << csv_row(type, character, lambda, f, ev.value);
    } else {
      out << ev.value.to_string() << "\n";
      for (const auto& [k, v] : ev.extra.items()) {
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
    if (!ev.domain_failure.empty()) {
      err << "domain error: " << to_string(f) << ": " << ev.domain_failure << "\n";
      return static_cast<int>(kDomainError);
    }
    return static_cast<int>(kOk);
  });
}

int run_table(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_character_name(cfg.character);
    if (cfg.height < 0) throw ParseError("--height must be non-negative");
    std::vector<Formula> formulas;
    for (const auto& name : cfg.formulas) formulas.push_back(parse_formula(name));
    if (formulas.empty()) formulas = {Formula::TheoremLhs, Formula::TheoremRhs};
    for (Formula f : formulas) {
      if (f == Formula::BesselValue || f == Formula::IwahoriImage) {
        throw ParseError(std::string("formula ") + to_string(f) + " cannot be tabulated over lambda");
      }
    }
    if (cfg.jobs > 0) set_jobs(cfg.jobs);

    std::string dir = cfg.out_dir;
    if (dir.empty()) {
      const char* env = std::getenv("IWAHORI_OUTPUT_DIR");
      dir = env && *env ? env : ".";
    }

    for (const CartanType& t : selected_types(cfg)) {
      const DatumPtr d = WeylDatum::make(t);
      const std::string type = t.to_string();
      std::vector<std::string> chars;
      if (!cfg.character.empty()) {
        HeckeCharacter::by_name(d->rs(), cfg.character);
        chars.push_back(cfg.character);
      } else {
        for (const auto& e : HeckeCharacter::all(d->rs())) chars.push_back(e.name());
      }
      std::sort(chars.begin(), chars.end());
      const std::vector<Coweight> lambdas = dominant_up_to_height(d->rank(), cfg.height);

      struct Job {
        std::string character;
        std::size_t lambda;
        Formula formula;
      };
      std::vector<Job> jobs;
      // Formulas without a character come first, under "-".
      for (std::size_t l = 0; l < lambdas.size(); ++l) {
        for (Formula f : formulas) {
          if (fixed_character(f) == std::optional<std::string>("-")) jobs.push_back({"-", l, f});
        }
      }
      for (const auto& c : chars) {
        for (std::size_t l = 0; l < lambdas.size(); ++l) {
          for (Formula f : formulas) {
            const auto fixed = fixed_character(f);
            if (!fixed || *fixed == c) jobs.push_back({c, l, f});
          }
        }
      }
      const auto evals = parallel_map(jobs.size(), [&](std::size_t k) {
        const Job& j = jobs[k];
        return evaluate(*d, j.formula, j.character, lambdas[j.lambda], "");
      });

      std::string csv = kCsvHeader;
      json rows = json::array();
      for (std::size_t k = 0; k < jobs.size(); ++k) {
        const Coweight& lambda = lambdas[jobs[k].lambda];
        csv += csv_row(type, jobs[k].character, lambda, jobs[k].formula, evals[k].value);
        rows.push_back(row_json(type, evals[k], lambda, jobs[k].formula));
      }
      std::filesystem::create_directories(dir);
      const std::string base = (std::filesystem::path(dir) / ("table_" + type)).string();
      write_atomically(base + ".csv", csv);
      write_atomically(base + ".json", rows.dump(2) + "\n");
      out << "wrote " << base << ".csv and .json (" << jobs.size() << " rows)\n";
    }
    return static_cast<int>(kOk);
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact Iwahori-Hecke module computations"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  auto* eval = app.add_subcommand("eval", "Evaluate one formula");
  auto* table = app.add_subcommand("table", "Write tables of formula values over dominant lambda");

  for (CLI::App* sub : {verify, eval, table}) {
    sub->add_option("--type", cfg.types, "Cartan type, e.g. B2 (repeatable or comma separated)")
        ->delimiter(',');
    sub->add_option("--max-rank", cfg.max_rank, "Largest rank when no --type is given");
    sub->add_option("--character", cfg.character, "triv, sign, neg-long or neg-short");
    sub->add_option("--jobs", cfg.jobs, "Worker threads (0: runtime default)");
  }
  verify->add_option("--box", cfg.box, "Coordinate radius of the test box");
  verify->add_option("--box-cap", cfg.box_cap, "Largest number of box points per check");
  verify->add_option("--suite", cfg.suites, "Suites to run (default all)")->delimiter(',');
  verify->add_option("--mutate", cfg.mutate, "Negative control to inject");
  verify->add_flag("--keep-going", cfg.keep_going, "Do not stop at the first failing suite");
  verify->add_option("--output", cfg.output, "json, csv or text");

  eval->add_option("--lambda", cfg.lambda, "Coweight in fundamental coordinates, e.g. 1,0");
  eval->add_option("--formula", cfg.formulas, "Formula name")->required();
  eval->add_option("--word", cfg.word, "Reduced word for iwahori-image, 1-based, e.g. 1,2");
  eval->add_option("--output", cfg.output, "json, csv or text");

  table->add_option("--formula", cfg.formulas, "Formulas (default theorem-lhs,theorem-rhs)")
      ->delimiter(',');
  table->add_option("--height", cfg.height, "Largest coordinate sum of dominant lambda");
  table->add_option("--out-dir", cfg.out_dir, "Output directory (default $IWAHORI_OUTPUT_DIR or .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kParseError);
  }
  if (verify->parsed()) return run_verify(cfg, out, err);
  if (eval->parsed()) return run_eval(cfg, out, err);
  return run_table(cfg, out, err);
}

}  // namespace iwahori::cli
