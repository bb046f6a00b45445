#include "cct/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cct/classlab.hpp"
#include "cct/cli/spec_file.hpp"
#include "cct/closure.hpp"
#include "cct/errors.hpp"
#include "cct/homset.hpp"

namespace cct::cli {

const char* const kToolVersion = CCT_VERSION;

namespace {

using nlohmann::json;

// ---- inputs ---------------------------------------------------------------

struct Workspace {
  const Options& opts;
  std::optional<Environment> env;

  explicit Workspace(const Options& o) : opts(o) {
    if (o.spec) env = parse_spec_file(*o.spec, o.limits);
  }

  FiniteGroup group(const std::string& name) const {
    if (env) {
      if (const Definition* d = env->find(name)) {
        if (d->group) return *d->group;
        if (d->spec->factors().size() == 1) return d->spec->factors().front();
        throw UsageError("'" + name + "' is a free product; a single group is needed here");
      }
    }
    if (auto g = builtin_group(name, opts.limits)) return *g;
    throw UndefinedName(name, 0);
  }

  GeneratorSpec generator(const std::string& name) const {
    if (env) {
      if (const Definition* d = env->find(name); d && d->spec) return *d->spec;
    }
    return GeneratorSpec::single(group(name), name);
  }
};

const std::string& require(const std::optional<std::string>& flag, const char* name, const Options& opts) {
  if (!flag) throw UsageError(std::string("--") + name + " is required for '" + opts.command + "'");
  return *flag;
}

json group_input(const std::string& role, const std::string& name, const FiniteGroup& g) {
  return {{"role", role}, {"name", name}, {"order", g.order()}, {"abelian", g.is_abelian()}};
}

json spec_input(const std::string& role, const std::string& name, const GeneratorSpec& a) {
  json orders = json::array();
  for (const FiniteGroup& f : a.factors()) orders.push_back(f.order());
  return {{"role", role}, {"name", name}, {"factor_orders", orders}, {"free_product", a.is_free_product()}};
}

json subgroup_json(const Subgroup& s) {
  json elements = json::array();
  json labels = json::array();
  s.members().for_each([&](Element x) {
    elements.push_back(x);
    labels.push_back(s.parent().label(x));
  });
  return {{"order", s.order()}, {"elements", elements}, {"labels", labels}};
}

std::string subgroup_text(const Subgroup& s) {
  std::string out = "order " + std::to_string(s.order()) + " {";
  std::size_t shown = 0;
  s.members().for_each([&](Element x) {
    if (shown == 24) out += ", ...";
    if (shown < 24) out += (shown ? ", " : "") + s.parent().label(x);
    ++shown;
  });
  return out + "}";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string list_text(const std::vector<T>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "]";
}

std::vector<Element> images_of(std::span<const Element> map, std::span<const Element> gens) {
  std::vector<Element> out;
  for (Element g : gens) out.push_back(map[g]);
  return out;
}

// ---- commands -------------------------------------------------------------

struct Outcome {
  json inputs = json::array();
  json result = json::object();
  std::vector<Finding> findings;
  std::ostringstream text;
};

void cmd_socle(const Workspace& ws, Outcome& o) {
  const std::string& gname = require(ws.opts.gen, "gen", ws.opts);
  const std::string& tname = require(ws.opts.target, "target", ws.opts);
  const GeneratorSpec a = ws.generator(gname);
  const FiniteGroup h = ws.group(tname);
  o.inputs = {spec_input("generator", gname, a), group_input("target", tname, h)};

  const Subgroup s = socle(a, h, ws.opts.limits);
  const bool normal = is_normal(h, s);
  o.result = {{"socle", subgroup_json(s)}, {"generated", s.is_whole()}, {"normal", normal}};
  if (!normal) o.findings.push_back({"normality", tname, normality_witness(h, s)->what()});
  o.text << "socle of " << tname << " for " << gname << ": " << subgroup_text(s) << "\n"
         << "generated: " << bool_text(s.is_whole()) << "\n";
}

void cmd_radical(const Workspace& ws, Outcome& o) {
  const std::string& gname = require(ws.opts.gen, "gen", ws.opts);
  const std::string& tname = require(ws.opts.target, "target", ws.opts);
  const GeneratorSpec a = ws.generator(gname);
  const FiniteGroup h = ws.group(tname);
  o.inputs = {spec_input("generator", gname, a), group_input("target", tname, h)};

  const RadicalChain chain = radical(a, h, ws.opts.limits);
  json stages = json::array();
  std::vector<std::size_t> orders;
  for (const Subgroup& s : chain.stages) {
    stages.push_back(subgroup_json(s));
    orders.push_back(s.order());
  }
  const RadicalPropertyCheck check = verify_radical_property(a, h, ws.opts.limits);
  o.result = {{"chain", stages},
              {"chain_orders", orders},
              {"length", chain.length()},
              {"radical", subgroup_json(chain.radical())},
              {"constructible", chain.radical().is_whole()},
              {"quotient_order", check.quotient.order()},
              {"universal_property", check.holds}};
  if (!check.holds) {
    o.findings.push_back({"radical-universal-property", tname,
                          "factor " + std::to_string(*check.factor) + " maps nontrivially, generator images " +
                              list_text(check.offending->gen_images())});
  }
  o.text << "radical chain of " << tname << " for " << gname << ": orders " << list_text(orders) << "\n"
         << "radical: " << subgroup_text(chain.radical()) << "\n"
         << "constructible: " << bool_text(chain.radical().is_whole()) << "\n";
}

void cmd_homs(const Workspace& ws, Outcome& o) {
  const std::string& gname = require(ws.opts.gen, "gen", ws.opts);
  const std::string& tname = require(ws.opts.target, "target", ws.opts);
  const FiniteGroup a = ws.group(gname);
  const FiniteGroup h = ws.group(tname);
  o.inputs = {group_input("domain", gname, a), group_input("codomain", tname, h)};

  const std::vector<Element> gens(a.generators().begin(), a.generators().end());
  json listed = json::array();
  std::size_t count = 0;
  for_each_hom(
      a, h,
      [&](std::span<const Element> map) {
        if (count < ws.opts.limit) {
          const Homomorphism f(a, h, std::vector<Element>(map.begin(), map.end()));
          const Subgroup img = image(f);
          listed.push_back({{"index", count},
                            {"generator_images", images_of(map, gens)},
                            {"image_order", img.order()},
                            {"injective", f.is_injective()},
                            {"surjective", f.is_surjective()}});
        }
        ++count;
        return true;
      },
      ws.opts.limits);
  o.result = {{"count", count},
              {"domain_generators", gens},
              {"homomorphisms", listed},
              {"truncated", count > ws.opts.limit}};
  o.text << "homomorphisms " << gname << " -> " << tname << ": " << count << "\n";
  for (const json& f : listed) {
    o.text << "  #" << f["index"].get<std::size_t>() << " generators -> "
           << list_text(f["generator_images"].get<std::vector<Element>>()) << ", image order "
           << f["image_order"].get<std::size_t>() << "\n";
  }
  if (count > ws.opts.limit) o.text << "  ... (" << count - ws.opts.limit << " more)\n";
}

void cmd_iso(const Workspace& ws, Outcome& o) {
  const std::string& gname = require(ws.opts.gen, "gen", ws.opts);
  const std::string& tname = require(ws.opts.target, "target", ws.opts);
  const FiniteGroup g = ws.group(gname);
  const FiniteGroup h = ws.group(tname);
  o.inputs = {group_input("source", gname, g), group_input("target", tname, h)};

  const auto iso = find_isomorphism(g, h, ws.opts.limits);
  json witness = nullptr;
  if (iso) {
    witness = {{"generators", std::vector<Element>(g.generators().begin(), g.generators().end())}, {"generator_images", iso->gen_images()}, {"map", iso->full_map()}};
    if (!iso->is_injective() || !iso->is_surjective() || iso->multiplicativity_violation(ws.opts.seed)) {
      o.findings.push_back({"iso-witness", gname + " -> " + tname, "witness is not a bijective homomorphism"});
    }
  }
  o.result = {{"isomorphic", iso.has_value()}, {"witness", witness}};
  o.text << gname << (iso ? " is isomorphic to " : " is not isomorphic to ") << tname << "\n";
  if (iso) o.text << "  generators -> " << list_text(iso->gen_images()) << "\n";
}

Catalog catalog_from(const Workspace& ws, std::size_t default_max_order) {
  Catalog catalog;
  if (ws.env) {
    for (const Definition& d : ws.env->definitions()) {
      if (d.group) catalog.add(d.name, *d.group, d.text);
    }
    return catalog;
  }
  return build_small_catalog(ws.opts.max_order.value_or(default_max_order), ws.opts.limits);
}

void cmd_classify(const Workspace& ws, Outcome& o) {
  const Catalog catalog = catalog_from(ws, 8);
  for (const CatalogEntry& e : catalog.entries()) o.inputs.push_back(group_input("member", e.name, e.group));

  json classes = json::array();
  const auto partition = classify_up_to_iso(catalog, ws.opts.limits);
  for (const auto& cls : partition) {
    json members = json::array();
    for (std::size_t i : cls) members.push_back(catalog.entries()[i].name);
    const CatalogEntry& rep = catalog.entries()[cls.front()];
    classes.push_back({{"representative", rep.name}, {"order", rep.group.order()}, {"members", members}});
    o.text << rep.name << " (order " << rep.group.order() << "):";
    for (std::size_t i : cls) o.text << " " << catalog.entries()[i].name;
    o.text << "\n";
  }
  o.result = {{"class_count", partition.size()}, {"entry_count", catalog.size()}, {"classes", classes}};
  o.text << partition.size() << " classes among " << catalog.size() << " groups\n";
}

void cmd_hierarchy(const Workspace& ws, Outcome& o) {
  const std::string& gname = require(ws.opts.gen, "gen", ws.opts);
  const std::string& tname = require(ws.opts.target, "target", ws.opts);
  const GeneratorSpec a = ws.generator(gname);
  const FiniteGroup g = ws.group(tname);
  o.inputs = {spec_input("generator", gname, a), group_input("target", tname, g)};

  const HierarchyReport r = hierarchy_report(a, g, ws.opts.limits);
  o.result = {{"socle", subgroup_json(r.socle)},
              {"radical", subgroup_json(r.radical)},
              {"socle_in_radical", r.socle_in_radical},
              {"generated", r.generated},
              {"constructible", r.constructible},
              {"chain_length", r.chain_length}};
  if (!r.socle_in_radical) o.findings.push_back({"socle-in-radical", tname, subgroup_text(r.socle)});
  o.text << "socle:   " << subgroup_text(r.socle) << "\n"
         << "radical: " << subgroup_text(r.radical) << "\n"
         << "socle in radical: " << bool_text(r.socle_in_radical) << "\n"
         << "generated: " << bool_text(r.generated) << "\n"
         << "constructible: " << bool_text(r.constructible) << "\n"
         << "chain length: " << r.chain_length << "\n";
}

ClassPredicate parse_class(const Workspace& ws, const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "p-group") {
    std::size_t p = 0;
    try {
      p = std::stoul(arg);
    } catch (const std::exception&) {
      throw UsageError("--class p-group:P needs a prime P");
    }
    if (p < 2) throw UsageError("--class p-group:P needs a prime P");
    for (std::size_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw UsageError("--class p-group:P needs a prime P");
    }
    return p_group_predicate(p);
  }
  if (kind == "member" && !arg.empty()) {
    std::vector<FiniteGroup> members;
    std::istringstream names(arg);
    for (std::string name; std::getline(names, name, ',');) members.push_back(ws.group(name));
    return member_predicate("member{" + arg + "}", std::move(members));
  }
  throw UsageError("--class expects p-group:P or member:NAME,NAME,...");
}

void cmd_factor(const Workspace& ws, Outcome& o) {
  const std::string& gname = require(ws.opts.gen, "gen", ws.opts);
  const std::string& tname = require(ws.opts.target, "target", ws.opts);
  const std::string& cname = require(ws.opts.class_spec, "class", ws.opts);
  const FiniteGroup k = ws.group(gname);
  const FiniteGroup h = ws.group(tname);
  o.inputs = {group_input("domain", gname, k), group_input("codomain", tname, h)};
  const ClassPredicate pred = parse_class(ws, cname);

  const std::vector<Homomorphism> homs = enumerate_homs(k, h, ws.opts.limits);
  if (ws.opts.hom_index && *ws.opts.hom_index >= homs.size()) {
    throw UsageError("--hom " + std::to_string(*ws.opts.hom_index) + " is out of range (" +
                     std::to_string(homs.size()) + " homomorphisms)");
  }
  json results = json::array();
  std::size_t factored = 0;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (ws.opts.hom_index && i != *ws.opts.hom_index) continue;
    if (!ws.opts.hom_index && results.size() >= ws.opts.limit) break;
    const Homomorphism& f = homs[i];
    const Subgroup img = image(f);
    const auto m = factor_through_class({f, pred}, ws.opts.limits);
    if (m) {
      ++factored;
      if (!img.is_subset_of(*m) || !pred.holds(as_group(*m, ws.opts.limits).group)) {
        o.findings.push_back({"factor-witness", gname + " -> " + tname, "hom #" + std::to_string(i)});
      }
    }
    results.push_back({{"index", i},
                       {"generator_images", f.gen_images()},
                       {"image", subgroup_json(img)},
                       {"through", m ? subgroup_json(*m) : json(nullptr)}});
    o.text << "#" << i << " generators -> " << list_text(f.gen_images()) << ": "
           << (m ? "factors through " + subgroup_text(*m) : std::string("no subgroup in class")) << "\n";
  }
  o.result = {{"class", pred.name}, {"hom_count", homs.size()}, {"factored", factored}, {"results", results}};
}

void cmd_verify(const Workspace& ws, Outcome& o) {
  const Options& opts = ws.opts;
  const Catalog subjects = catalog_from(ws, 12);

  std::vector<GeneratorSpec> gens;
  if (opts.gen) {
    gens.push_back(ws.generator(*opts.gen));
  } else if (ws.env) {
    for (const Definition& d : ws.env->definitions()) {
      if (d.spec) gens.push_back(*d.spec);
    }
  }
  if (gens.empty()) {
    for (const char* name : {"z2", "z3", "z4", "s3"}) gens.push_back(ws.generator(name));
  }

  for (const CatalogEntry& e : subjects.entries()) o.inputs.push_back(group_input("subject", e.name, e.group));
  for (const GeneratorSpec& a : gens) o.inputs.push_back(spec_input("generator", a.name(), a));

  // Functoriality runs over every ordered pair of small subjects.
  constexpr std::size_t kFunctorMax = 12;
  std::size_t checks = 0;
  for (const CatalogEntry& e : subjects.entries()) {
    auto found = check_group(e.name, e.group, opts.seed, opts.limits);
    o.findings.insert(o.findings.end(), found.begin(), found.end());
    ++checks;
  }
  for (const GeneratorSpec& a : gens) {
    std::vector<CoreflectionData> data;
    for (const CatalogEntry& e : subjects.entries()) {
      data.push_back(compute_coreflections(a, e.group, opts.limits));
      const std::string subject = a.name() + " @ " + e.name;
      auto found = check_coreflections(a, subject, e.group, data.back(), opts.limits);
      o.findings.insert(o.findings.end(), found.begin(), found.end());
      ++checks;
    }
    for (std::size_t i = 0; i < subjects.size(); ++i) {
      const FiniteGroup& h = subjects.entries()[i].group;
      if (h.order() > kFunctorMax) continue;
      for (std::size_t j = 0; j < subjects.size(); ++j) {
        const FiniteGroup& g = subjects.entries()[j].group;
        if (g.order() > kFunctorMax) continue;
        const std::string subject =
            a.name() + " @ " + subjects.entries()[i].name + " -> " + subjects.entries()[j].name;
        auto found = check_functoriality(subject, h, data[i], g, data[j], opts.limits);
        o.findings.insert(o.findings.end(), found.begin(), found.end());
        ++checks;
      }
    }
  }
  o.result = {{"subject_count", subjects.size()},
              {"generator_count", gens.size()},
              {"checks_run", checks},
              {"finding_count", o.findings.size()}};
  o.text << "verified " << subjects.size() << " groups against " << gens.size() << " generators: " << checks
         << " checks, " << o.findings.size() << " findings\n";
}

void cmd_catalog(const Workspace& ws, Outcome& o) {
  const std::size_t max_order = ws.opts.max_order.value_or(24);
  const Catalog catalog = build_small_catalog(max_order, ws.opts.limits);
  json entries = json::array();
  o.text << "# small group catalog, orders <= " << max_order << "\n";
  for (const CatalogEntry& e : catalog.entries()) {
    entries.push_back(
        {{"name", e.name}, {"order", e.group.order()}, {"abelian", e.group.is_abelian()}, {"recipe", e.recipe}});
    o.text << e.recipe << "\n";
  }
  o.result = {{"max_order", max_order}, {"count", catalog.size()}, {"entries", entries}};
}

json args_echo(const Options& opts) {
  json args = {{"format", opts.format}, {"seed", opts.seed}};
  if (opts.spec) args["spec"] = *opts.spec;
  if (opts.gen) args["gen"] = *opts.gen;
  if (opts.target) args["target"] = *opts.target;
  if (opts.max_order) args["max_order"] = *opts.max_order;
  if (opts.budget) args["budget"] = *opts.budget;
  if (opts.class_spec) args["class"] = *opts.class_spec;
  if (opts.hom_index) args["hom"] = *opts.hom_index;
  if (opts.command == "homs" || opts.command == "factor") args["limit"] = opts.limit;
  return args;
}

std::string findings_text(const std::vector<Finding>& findings) {
  std::string out;
  for (const Finding& f : findings) out += "FAILURE " + f.check + " [" + f.subject + "]: " + f.witness + "\n";
  return out;
}

}  // namespace

Report make_report(const Options& opts, json inputs, json result, const std::vector<Finding>& findings,
                   std::string text, double elapsed_ms) {
  json found = json::array();
  for (const Finding& f : findings) found.push_back({{"check", f.check}, {"subject", f.subject}, {"witness", f.witness}});
  const bool ok = findings.empty();
  Report r;
  r.json = {{"tool", {{"name", "cct"}, {"version", kToolVersion}}},
            {"command", opts.command},
            {"args", args_echo(opts)},
            {"inputs", std::move(inputs)},
            {"result", std::move(result)},
            {"findings", std::move(found)},
            {"status", ok ? "ok" : "failure"},
            {"timing", {{"elapsed_ms", elapsed_ms}}}};
  r.text = std::move(text) + findings_text(findings);
  // Catalog text is a spec file; keep it parseable.
  if (opts.command != "catalog") r.text += std::string("status: ") + (ok ? "ok" : "failure") + "\n";
  r.exit_code = ok ? 0 : 1;
  return r;
}

Report run(const Options& opts) {
  using Handler = void (*)(const Workspace&, Outcome&);
  static const std::map<std::string, Handler> handlers = {
      {"socle", cmd_socle},   {"radical", cmd_radical},     {"homs", cmd_homs},
      {"iso", cmd_iso},       {"classify", cmd_classify},   {"hierarchy", cmd_hierarchy},
      {"factor", cmd_factor}, {"verify", cmd_verify},       {"catalog", cmd_catalog},
  };
  const auto it = handlers.find(opts.command);
  if (it == handlers.end()) throw UsageError("unknown command '" + opts.command + "'");

  const auto start = std::chrono::steady_clock::now();
  Options effective = opts;
  if (opts.budget) effective.limits.max_cosets = *opts.budget;
  const Workspace ws(effective);
  Outcome o;
  it->second(ws, o);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return make_report(effective, std::move(o.inputs), std::move(o.result), o.findings, o.text.str(), elapsed);
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"cct: socle and radical computations for finite groups", "cct"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string("cct ") + kToolVersion);

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec commands[] = {
      {"socle", "subgroup generated by images of the generator"},
      {"radical", "radical chain and radical of the target"},
      {"homs", "enumerate homomorphisms gen -> target"},
      {"iso", "decide isomorphism of gen and target"},
      {"classify", "isomorphism classes of a spec file or the catalog"},
      {"hierarchy", "socle, radical and class membership summary"},
      {"factor", "factor homomorphisms through a subgroup in a class"},
      {"verify", "run the invariant suite on a spec file or the catalog"},
      {"catalog", "print the small-group catalog as spec-file lines"},
  };
  for (const Spec& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--spec", opts.spec, "group spec file")->check(CLI::ExistingFile);
    sub->add_option("--gen", opts.gen, "generator (or domain) name");
    sub->add_option("--target", opts.target, "target group name");
    sub->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-order", opts.max_order, "catalog order bound")->check(CLI::Range(1, 1 << 30));
    sub->add_option("--budget", opts.budget, "coset budget for presentations")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opts.seed, "seed for sampled checks");
    if (std::string(c.name) == "factor") {
      sub->add_option("--class", opts.class_spec, "p-group:P or member:NAME,NAME")->required();
      sub->add_option("--hom", opts.hom_index, "only this homomorphism index");
    }
    if (std::string(c.name) == "homs" || std::string(c.name) == "factor") {
      sub->add_option("--limit", opts.limit, "maximum number listed");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  opts.command = app.get_subcommands().front()->get_name();

  if (const char* env = std::getenv("CCT_ORDER_MAX"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
      err << "usage error: CCT_ORDER_MAX must be a positive integer\n";
      return 2;
    }
    opts.limits.order_max = static_cast<std::size_t>(v);
  }

  try {
    const Report r = run(opts);
    if (opts.format == "json") {
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return r.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace cct::cli
