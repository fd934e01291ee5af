#include "kstab/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "kstab/cli/corpus.hpp"
#include "kstab/cli/documents.hpp"
#include "kstab/cli/input.hpp"
#include "kstab/cli/stratify.hpp"
#include "kstab/errors.hpp"
#include "kstab/optimizer.hpp"

namespace kstab::cli {

namespace {

struct Options {
  std::vector<std::string> files;
  bool use_corpus = false;
  std::vector<std::string> directions;
  int digits = kDefaultDigits;
  long mmax = 0;
  unsigned threads = 1;
  std::string out_path;
};

std::vector<InputSpec> gather_inputs(const Options& o) {
  std::vector<InputSpec> inputs;
  if (o.use_corpus) inputs = corpus();
  for (const auto& f : o.files) {
    auto more = load_inputs(f);
    inputs.insert(inputs.end(), more.begin(), more.end());
  }
  if (inputs.empty()) throw InvalidInput("no inputs (give files or --corpus)");
  return inputs;
}

Json one_or_many(std::vector<Json> docs) {
  if (docs.size() == 1) return std::move(docs.front());
  auto a = Json::array();
  for (auto& d : docs) a.push_back(std::move(d));
  return a;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidInput("field 'out': cannot write '" + path + "'");
  f << text;
}

void emit(const Json& doc, const Options& o, std::ostream& out, bool out_is_document) {
  std::string text = doc.dump(2) + "\n";
  if (out_is_document && !o.out_path.empty()) {
    write_text(o.out_path, text);
  } else {
    out << text;
  }
}

Json cmd_report(const Options& o) {
  std::vector<VecQ> dirs;
  for (const auto& s : o.directions) dirs.push_back(parse_direction(s));
  std::vector<Json> docs;
  for (const auto& spec : gather_inputs(o)) {
    auto ctx = make_context(spec);
    for (const auto& v : dirs)
      if (v.size() != ctx.dim())
        throw InvalidInput("field 'v': " + spec.name + " needs " + std::to_string(ctx.dim()) + " entries");
    docs.push_back(report_document(spec, ctx, dirs, o.digits));
  }
  return one_or_many(std::move(docs));
}

Json cmd_destabilize(const Options& o) {
  std::vector<Json> docs;
  for (const auto& spec : gather_inputs(o)) {
    auto ctx = make_context(spec);
    docs.push_back(destab_document(spec.name, ctx, optimal_destabilizer(ctx), o.digits));
  }
  return one_or_many(std::move(docs));
}

Json cmd_stratify(const Options& o) { return stratum_document(stratify(gather_inputs(o), o.threads), o.digits); }

Json cmd_oracle(const Options& o, std::ostream& err) {
  auto inputs = gather_inputs(o);
  if (inputs.size() != 1) throw InvalidInput("oracle takes exactly one input");
  if (o.directions.size() != 1) throw InvalidInput("field 'v': oracle needs exactly one --v");
  auto ctx = make_context(inputs.front());
  VecQ v = parse_direction(o.directions.front());
  long mmax = o.mmax;
  if (mmax == 0) mmax = 60 * dilation_index(ctx.polytope());
  if (mmax < 0) throw InvalidInput("field 'mmax': must be positive");
  auto res = oracle_document(inputs.front(), ctx, v, mmax, o.digits);
  if (!o.out_path.empty()) {
    write_text(o.out_path, res.columns);
    err << "wrote " << res.document["rows"].size() << " rows to " << o.out_path << "\n";
  }
  return res.document;
}

Json cmd_limits(const Options& o) {
  if (o.files.size() != 1) throw InvalidInput("limits takes exactly one weighted point file");
  if (o.directions.size() != 1) throw InvalidInput("field 'v': limits needs exactly one --v");
  auto w = load_weighted_point(o.files.front());
  return limits_document(w, parse_direction(o.directions.front()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact torus-equivariant K-stability invariants of toric log Fano data"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--digits", o.digits, "Significant digits of decimal annotations")->check(CLI::Range(1, 200));
  };
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("files", o.files, "Input documents");
    sub->add_flag("--corpus", o.use_corpus, "Run over the bundled fixtures");
    sub->add_option("--out", o.out_path, "Write the document to PATH instead of stdout");
  };

  auto* report = app.add_subcommand("report", "Volume, barycenter, covariance, verdict, invariants at --v");
  add_inputs(report);
  add_common(report);
  report->add_option("--v", o.directions, "Direction a,b,... (repeatable)");

  auto* destab = app.add_subcommand("destabilize", "Optimal destabilizing one-parameter subgroup");
  add_inputs(destab);
  add_common(destab);

  auto* strat = app.add_subcommand("stratify", "Group inputs by M^mu, strictly descending");
  add_inputs(strat);
  add_common(strat);
  strat->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* oracle = app.add_subcommand("oracle", "Lattice-point series and extrapolated moments");
  oracle->add_option("file", o.files, "Input document")->required();
  oracle->add_option("--v", o.directions, "Integral direction a,b,...")->required();
  oracle->add_option("--mmax", o.mmax, "Largest dilate (default 60r)");
  oracle->add_option("--out", o.out_path, "Write a columnar data dump to PATH");
  add_common(oracle);

  auto* limits = app.add_subcommand("limits", "Limit of a weighted point under a one-parameter subgroup");
  limits->add_option("pointfile", o.files, "WeightedPoint document")->required();
  limits->add_option("--v", o.directions, "Direction a,b,...")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*report) emit(cmd_report(o), o, out, true);
    else if (*destab) emit(cmd_destabilize(o), o, out, true);
    else if (*strat) emit(cmd_stratify(o), o, out, true);
    else if (*oracle) emit(cmd_oracle(o, err), o, out, false);
    else if (*limits) emit(cmd_limits(o), o, out, false);
  } catch (const CertificateFailure& e) {
    err << "kstab: certificate failure: " << e.what() << "\n";
    return kCertificateError;
  } catch (const InvalidInput& e) {
    err << "kstab: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "kstab: malformed document: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace kstab::cli
