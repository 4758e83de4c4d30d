#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "epimc/bisim.hpp"
#include "epimc/error.hpp"
#include "epimc/global_mc.hpp"
#include "epimc/model_json.hpp"
#include "epimc/qbf.hpp"
#include "epimc/quantified.hpp"
#include "epimc/semantics.hpp"
#include "epimc/syntax.hpp"
#include "epimc/translate.hpp"
#include "epimc/updates.hpp"

namespace epimc::cli {

namespace {

using nlohmann::json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    out.push_back(item.substr(first, item.find_last_not_of(" \t") - first + 1));
  }
  return out;
}

WorldId resolve_point(const LoadedModel& lm, const std::string& world) {
  if (!world.empty()) return lm.model.world(world);
  if (lm.point) return *lm.point;
  throw InputError("no world given and the model has no point");
}

bool check_at(const PointedModel& pm, const Formula& f) {
  return is_quantifier_free(f) ? eval(pm, f) : check_quantified(pm, f);
}

json names_of(const KripkeModel& m, const WorldSet& s) {
  json out = json::array();
  s.for_each([&](WorldId w) { out.push_back(m.world_name(w)); });
  return out;
}

json classes_json(const KripkeModel& m, const Partition& p) {
  json out = json::array();
  for (const WorldSet& block : p.blocks) out.push_back(names_of(m, block));
  return out;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const EmptyGroupError*>(&e)) return "empty_group";
  if (dynamic_cast<const SyntaxError*>(&e)) return "syntax";
  if (dynamic_cast<const InputError*>(&e)) return "input";
  if (dynamic_cast<const UnsupportedFragment*>(&e)) return "unsupported_fragment";
  if (dynamic_cast<const EmptyDomainError*>(&e)) return "empty_domain";
  if (dynamic_cast<const ClosureError*>(&e)) return "closure";
  if (dynamic_cast<const NoDistinguisher*>(&e)) return "no_distinguisher";
  return "internal";
}

// CLI11 only accepts one-letter short options; -m1 and friends become long.
std::vector<std::string> normalise(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a == "-m1" || a == "-m2" || a == "-w1" || a == "-w2") a = "-" + a;
  }
  return args;
}

struct Options {
  bool json = false;
  std::string model, world, formula, queries;
  std::string share, topic, announce;
  bool share_given = false, worlds = false;
  std::string model1, model2, world1, world2, atoms;
  bool atoms_given = false;
  std::string instance;
  bool emit_model = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int check() {
    const LoadedModel lm = load_model(o_.model);
    const WorldId w = resolve_point(lm, o_.world);
    const PointedModel pm(lm.model, w);
    std::vector<Formula> formulas;
    if (o_.queries.empty() && o_.formula.empty()) throw InputError("check needs -f or -q");
    if (!o_.queries.empty()) {
      formulas = parse_query_file(read_file(o_.queries));
    } else {
      formulas.push_back(parse_formula(o_.formula));
    }
    bool all = true;
    json results = json::array();
    for (const Formula& f : formulas) {
      const bool r = check_at(pm, f);
      all = all && r;
      if (o_.json) {
        results.push_back({{"formula", print_formula(f)}, {"result", r}});
      } else if (formulas.size() > 1) {
        out_ << (r ? "true" : "false") << '\t' << print_formula(f) << '\n';
      } else {
        out_ << (r ? "true" : "false") << '\n';
      }
    }
    if (o_.json) {
      out_ << json{{"world", lm.model.world_name(w)}, {"results", results}}.dump() << '\n';
    }
    return all ? kTrue : kFalse;
  }

  int global_check() {
    const LoadedModel lm = load_model(o_.model);
    const WorldSet s = global_mc(lm.model, parse_formula(o_.formula));
    out_ << names_of(lm.model, s).dump() << '\n';
    return kTrue;
  }

  int update() {
    if (o_.share_given == !o_.announce.empty()) {
      throw InputError("update needs exactly one of --share/--topic or --announce");
    }
    const LoadedModel lm = load_model(o_.model);
    const KripkeModel& m = lm.model;
    KripkeModel result = m;
    if (o_.share_given) {
      if (o_.topic.empty()) throw InputError("--share needs --topic");
      const auto agents = split_list(o_.share);
      const WorldSet t = truthset(m, parse_formula(o_.topic));
      result = partial_comm_update(m, AgentSet(agents.begin(), agents.end()), t);
    } else {
      const WorldSet t = truthset(m, parse_formula(o_.announce));
      result = o_.worlds ? pa_world_update(m, t) : pa_edge_update(m, t);
    }
    std::optional<WorldId> point;
    if (lm.point) point = result.find_world(m.world_name(*lm.point));
    out_ << model_to_json(result, point).dump(2) << '\n';
    return kTrue;
  }

  int bisim() {
    const LoadedModel l1 = load_model(o_.model1);
    const LoadedModel l2 = load_model(o_.model2);
    const WorldId w1 = resolve_point(l1, o_.world1);
    const WorldId w2 = resolve_point(l2, o_.world2);
    std::optional<AtomSet> atoms;
    if (o_.atoms_given) {
      const auto list = split_list(o_.atoms);
      atoms = AtomSet(list.begin(), list.end());
    }
    const KripkeModel u = disjoint_union(l1.model, l2.model);
    const Partition p = bisim_classes(u, atoms);
    const WorldId x = w1;
    const WorldId y = l1.model.world_count() + w2;
    const bool same = p.same_block(x, y);
    json j{{"bisimilar", same}, {"classes", classes_json(u, p)}};
    if (!same) j["distinguisher"] = print_formula(distinguishing_formula(u, x, y, atoms));
    if (o_.json) {
      out_ << j.dump() << '\n';
    } else {
      out_ << (same ? "true" : "false") << '\n';
      for (const auto& block : j["classes"]) out_ << block.dump() << '\n';
      if (!same) out_ << "distinguished by " << j["distinguisher"].get<std::string>() << '\n';
    }
    return same ? kTrue : kFalse;
  }

  int classes() {
    const LoadedModel lm = load_model(o_.model);
    std::optional<AtomSet> atoms;
    if (o_.atoms_given) {
      const auto list = split_list(o_.atoms);
      atoms = AtomSet(list.begin(), list.end());
    }
    out_ << json{{"classes", classes_json(lm.model, bisim_classes(lm.model, atoms))}}.dump() << '\n';
    return kTrue;
  }

  int translate_formula() {
    const Formula t = translate(parse_formula(o_.formula));
    if (o_.json) {
      out_ << json{{"formula", print_formula(t)}, {"size", formula_size(t)}}.dump() << '\n';
    } else {
      out_ << print_formula(t) << '\n';
    }
    return kTrue;
  }

  int qbf() {
    const QbfInstance q = parse_qbf(read_file(o_.instance));
    const bool oracle = eval_qbf(q);
    const QbfEncoding enc = encode(q);
    const bool encoded = check_quantified(enc.model, enc.formula);
    if (oracle != encoded) throw Error("encoded verdict disagrees with the oracle");
    if (o_.json) {
      json j{{"instance", print_qbf(q)}, {"oracle", oracle}, {"encoded", encoded}};
      if (o_.emit_model) {
        j["model"] = model_to_json(enc.model.model, enc.model.point);
        j["formula"] = print_formula(enc.formula);
      }
      out_ << j.dump() << '\n';
    } else {
      out_ << "oracle: " << (oracle ? "true" : "false") << '\n';
      out_ << "encoded: " << (encoded ? "true" : "false") << '\n';
      if (o_.emit_model) {
        out_ << model_to_json(enc.model.model, enc.model.point).dump(2) << '\n';
        out_ << print_formula(enc.formula) << '\n';
      }
    }
    return encoded ? kTrue : kFalse;
  }

  int validate_model() {
    const std::vector<std::string> problems = validate(read_model_description(o_.model));
    if (o_.json) {
      out_ << json{{"violations", problems}}.dump() << '\n';
    } else if (problems.empty()) {
      out_ << "ok\n";
    } else {
      for (const auto& p : problems) out_ << p << '\n';
    }
    return problems.empty() ? kTrue : kFalse;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Model checking for epistemic logic with distributed knowledge and communication"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output and error objects");

  auto* check = app.add_subcommand("check", "Evaluate a formula at a world");
  check->add_option("-m,--model", o.model, "Model JSON")->required();
  check->add_option("-w,--world", o.world, "World (defaults to the model's point)");
  auto* f_opt = check->add_option("-f,--formula", o.formula, "Formula");
  auto* q_opt = check->add_option("-q,--queries", o.queries, "Query file, one formula per line");
  f_opt->excludes(q_opt);

  auto* global = app.add_subcommand("global-check", "Worlds satisfying a formula, by labelling");
  global->add_option("-m,--model", o.model, "Model JSON")->required();
  global->add_option("-f,--formula", o.formula, "Formula")->required();

  auto* update = app.add_subcommand("update", "Apply communication or an announcement");
  update->add_option("-m,--model", o.model, "Model JSON")->required();
  auto* share = update->add_option("--share", o.share, "Sharing agents, comma separated");
  update->add_option("--topic", o.topic, "Topic formula");
  update->add_option("--announce", o.announce, "Announced formula");
  update->add_flag("--worlds", o.worlds, "Remove worlds instead of edges");

  auto* bisim = app.add_subcommand("bisim", "Collective bisimilarity of two pointed models");
  bisim->add_option("--m1", o.model1, "First model")->required();
  bisim->add_option("--w1", o.world1, "First world");
  bisim->add_option("--m2", o.model2, "Second model")->required();
  bisim->add_option("--w2", o.world2, "Second world");
  auto* b_atoms = bisim->add_option("--atoms", o.atoms, "Atoms, comma separated");

  auto* classes = app.add_subcommand("classes", "Bisimulation classes of a model");
  classes->add_option("-m,--model", o.model, "Model JSON")->required();
  auto* c_atoms = classes->add_option("--atoms", o.atoms, "Atoms, comma separated");

  auto* translate = app.add_subcommand("translate", "Rewrite updates away");
  translate->add_option("-f,--formula", o.formula, "Formula")->required();

  auto* qbf = app.add_subcommand("qbf", "Decide a QBF directly and through the encoding");
  qbf->add_option("-i,--instance", o.instance, "Instance file")->required();
  qbf->add_flag("--emit-model", o.emit_model, "Print the encoded model and formula");

  auto* validate_cmd = app.add_subcommand("validate", "List model invariant violations");
  validate_cmd->add_option("-m,--model", o.model, "Model JSON")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> args = normalise(raw);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    if (o.json) {
      out << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return kError;
  }
  o.share_given = share->count() > 0;
  o.atoms_given = b_atoms->count() > 0 || c_atoms->count() > 0;

  Runner r(o, out);
  try {
    if (*check) return r.check();
    if (*global) return r.global_check();
    if (*update) return r.update();
    if (*bisim) return r.bisim();
    if (*classes) return r.classes();
    if (*translate) return r.translate_formula();
    if (*qbf) return r.qbf();
    return r.validate_model();
  } catch (const std::exception& e) {
    if (o.json) {
      json j{{"kind", error_kind(e)}, {"message", e.what()}};
      if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) j["position"] = s->position();
      out << json{{"error", j}}.dump() << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return kError;
  }
}

}  // namespace epimc::cli
