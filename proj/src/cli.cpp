#include "fintop/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "fintop/duality.hpp"
#include "fintop/io.hpp"

namespace fintop::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string law;
  std::string dot;
  std::string alpha = "all";
  std::string file;
  std::size_t enumerate = 0;
  std::string random;
  std::string format = "text";
  bool witness = false;
  std::size_t jobs = 1;
  bool proper_only = false;
};

struct AlphaRun {
  Alpha requested;
  Alpha effective;
};

struct Item {
  std::string name;
  InputKind kind = InputKind::space;
  FinSpace space;
  FiniteLattice lattice;
  FinCategory category;
  /// for the karoubi suite on spaces: a small universe of corpus spaces
  std::vector<FinSpace> universe;
};

struct Outcome {
  std::vector<ojson> rows;
  int status = Exit::ok;
};

struct Corpus {
  std::vector<Item> items;
  std::string source;
  ojson seed;  // null unless random
};

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input:
    case ErrorCode::not_closed_under_union:
    case ErrorCode::not_closed_under_intersection:
    case ErrorCode::missing_empty_or_full:
    case ErrorCode::not_continuous:
    case ErrorCode::shape_mismatch:
    case ErrorCode::cap_exceeded:
    case ErrorCode::not_open:
    case ErrorCode::not_a_frame:
    case ErrorCode::invalid_category:
    case ErrorCode::not_idempotent:
    case ErrorCode::not_a_split_pair:
      return true;
    default:
      return false;
  }
}

std::vector<AlphaRun> alpha_runs(const RunConfig& cfg, ojson& notes) {
  std::vector<Alpha> requested;
  if (cfg.alpha == "all") requested.assign(kAllAlphas.begin(), kAllAlphas.end());
  else requested.push_back(parse_alpha(cfg.alpha));
  std::vector<AlphaRun> out;
  for (auto a : requested) {
    const Alpha eff = cfg.proper_only && a == Alpha::zero ? Alpha::one : a;
    out.push_back({a, eff});
  }
  if (cfg.proper_only && std::find(requested.begin(), requested.end(), Alpha::zero) != requested.end())
    notes.push_back("--proper-only: alpha 0 runs on proper filters, i.e. as alpha 1");
  return out;
}

Item space_item(std::string name, FinSpace x) {
  Item it;
  it.name = std::move(name);
  it.space = std::move(x);
  return it;
}

Item item_from_json(std::string name, const json& j) {
  Item it;
  it.name = std::move(name);
  it.kind = detect_kind(j);
  switch (it.kind) {
    case InputKind::space: it.space = space_from_json(j); break;
    case InputKind::lattice: it.lattice = lattice_from_json(j); break;
    case InputKind::category: it.category = category_from_json(j); break;
  }
  return it;
}

Corpus resolve_corpus(const RunConfig& cfg, const std::vector<std::string>& positional) {
  Corpus c;
  std::vector<std::string> files = positional;
  if (!cfg.file.empty()) files.insert(files.begin(), cfg.file);
  const int sources = (!files.empty()) + (cfg.enumerate > 0) + (!cfg.random.empty());
  if (sources == 0) throw Error(ErrorCode::invalid_input, "no input: give a file, --enumerate N or --random SEED:COUNT");
  if (sources > 1) throw Error(ErrorCode::invalid_input, "give exactly one of a file, --enumerate and --random");

  if (!files.empty()) {
    for (const auto& f : files) {
      const json j = load_json_file(f);
      std::string name = j.is_object() && j.contains("name") && j["name"].is_string()
                             ? j["name"].get<std::string>()
                             : std::filesystem::path(f).stem().string();
      c.items.push_back(item_from_json(std::move(name), j));
    }
    c.source = "file " + files.front() + (files.size() > 1 ? " (+" + std::to_string(files.size() - 1) + ")" : "");
  } else if (cfg.enumerate > 0) {
    const auto spaces = enumerate_t0_spaces(cfg.enumerate);
    for (std::size_t i = 0; i < spaces.size(); ++i)
      c.items.push_back(space_item("n" + std::to_string(cfg.enumerate) + "#" + std::to_string(i), spaces[i]));
    c.source = "enumerate " + std::to_string(cfg.enumerate) + " (" + std::to_string(spaces.size()) + " spaces)";
  } else {
    const auto colon = cfg.random.find(':');
    std::uint64_t seed = 0;
    std::size_t count = 0;
    try {
      if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
      seed = std::stoull(cfg.random.substr(0, colon));
      count = std::stoul(cfg.random.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_input, "--random expects SEED:COUNT, got " + cfg.random);
    }
    // random DAG on 1..4 points, closed transitively, then Alexandrov
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t n = 1 + rng() % 4;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rng() & 1) pairs.emplace_back(i, j);
      c.items.push_back(space_item("random#" + std::to_string(k), alexandrov(Preorder::from_pairs(n, pairs))));
    }
    c.source = "random " + cfg.random;
    c.seed = seed;
  }
  return c;
}

const FinSpace& require_space(const Item& it) {
  if (it.kind != InputKind::space) throw Error(ErrorCode::invalid_input, it.name + " is not a space");
  return it.space;
}

ojson row_head(const std::string& key, const std::string& name, const AlphaRun& a) {
  ojson row;
  row[key] = name;
  row["alpha"] = std::string(to_string(a.effective));
  if (a.requested != a.effective) row["requested_alpha"] = std::string(to_string(a.requested));
  return row;
}

ojson checks_json(const LawReport& r, ojson& failures) {
  ojson checks = ojson::object();
  for (const auto& c : r.checks) {
    checks[c.law] = c.skipped ? "skipped" : c.passed ? "pass" : "fail";
    if (!c.passed && !c.skipped) failures[c.law] = c.detail;
  }
  return checks;
}

std::string describe_map(const ContinuousMap& f) {
  std::string out;
  for (std::size_t p = 0; p < f.dom().size(); ++p) {
    if (!out.empty()) out += ", ";
    out += f.dom().label(p) + " -> " + f.cod().label(f(p));
  }
  return out;
}

// ------------------------------------------------------------- classify

ojson classify_row(const Item& it, const AlphaRun& a, bool witness) {
  const FinSpace& x = require_space(it);
  ojson row = row_head("space", it.name, a);
  const auto sep = separation_flags(x);
  const FilterSpace tx = filter_space(x, a.effective);
  const auto cc = is_core_compact(tx);
  const auto st = is_stable(tx);
  auto res = algebra_structure(tx);
  ojson w = ojson::object();
  if (sep.indistinguishable)
    w["t0"] = x.label(sep.indistinguishable->first) + " and " + x.label(sep.indistinguishable->second) +
              " are indistinguishable";
  if (sep.bad_irreducible) w["sober"] = "irreducible closed set " + x.format(*sep.bad_irreducible) + " has no unique generic point";
  if (!cc.holds) w["core_compact"] = cc.witness;
  if (!st.holds) w["stable"] = st.witness;

  row["t0"] = sep.is_t0;
  row["sober"] = sep.is_sober;
  row["core_compact"] = cc.holds;
  row["stable"] = st.holds;
  if (auto* fail = std::get_if<AlgebraFailure>(&res)) {
    row["algebra"] = false;
    row["disconnected"] = nullptr;
    row["distributive"] = false;
    w["algebra"] = "condition " + std::to_string(fail->condition) + ": " + fail->reason;
  } else {
    const auto& alg = std::get<AlgebraStructure>(res);
    const auto open = disconnectedness_witness(alg);
    const auto verdict = decide_distributive(x, a.effective);
    row["algebra"] = true;
    row["disconnected"] = !open;
    row["distributive"] = verdict.distributive();
    if (open) w["disconnected"] = "mu(" + x.format(*open) + ") = " + x.format(mu(alg, *open)) + " is not open";
    if (witness && verdict.splitting) row["splitting"] = describe_map(*verdict.splitting);
  }
  if (witness) row["witness"] = w.empty() ? ojson(nullptr) : w;
  return row;
}

// ---------------------------------------------------------------- check

std::vector<ContinuousMap> naturality_maps(const FinSpace& x) {
  constexpr std::size_t kLimit = 64;
  std::vector<ContinuousMap> maps;
  for_each_continuous_map(x, x, [&](const std::vector<std::size_t>& t) {
    maps.push_back(ContinuousMap::check(x, x, t));
    return maps.size() < kLimit;
  });
  return maps;
}

bool check_row(const Item& it, const AlphaRun& a, const std::string& law, ojson& row) {
  const Alpha alpha = a.effective;
  ojson failures = ojson::object();
  bool bad = false;

  if (law == "monad" || law == "kz") {
    const FinSpace& x = require_space(it);
    row = row_head("space", it.name, a);
    if (law == "monad") {
      const auto maps = naturality_maps(x);
      const auto r = check_monad_laws(x, alpha, maps);
      row["naturality_maps"] = maps.size();
      row["checks"] = checks_json(r, failures);
      bad = !r.all_passed();
    }
    const bool kz = check_kz(x, alpha);
    row["kz"] = kz;
    if (!kz) failures["kz"] = "T y_X is not below y_TX";
    bad = bad || !kz;
  } else if (law == "tdist") {
    const FinSpace& x = require_space(it);
    row = row_head("space", it.name, a);
    const auto v = decide_distributive(x, alpha);
    row["algebra"] = v.algebra;
    row["by_adjoint_search"] = v.by_adjoint_search;
    row["by_characterization"] = v.by_characterization;
    row["by_formula"] = v.by_formula;
    row["by_split_epi"] = v.by_split_epi;
    row["distributive"] = v.distributive();
    if (is_core_compact(x, alpha).holds) {
      const auto irr = stable_iff_irreducible(x, alpha);
      row["stable_iff_irreducible"] = irr.agrees();
      if (!irr.agrees()) {
        failures["stable_iff_irreducible"] = "stable=" + std::to_string(irr.stable) +
                                             " irreducible=" + std::to_string(irr.all_limit_sets_irreducible) +
                                             " " + irr.witness;
        bad = true;
      }
    } else {
      row["stable_iff_irreducible"] = "n/a";
    }
    if (!v.reason.empty()) row["reason"] = v.reason;
  } else if (law == "mulaws") {
    const FinSpace& x = require_space(it);
    row = row_head("space", it.name, a);
    auto res = algebra_structure(x, alpha);
    if (auto* alg = std::get_if<AlgebraStructure>(&res)) {
      const auto r = mu_laws_report(*alg);
      row["checks"] = checks_json(r, failures);
      bad = !r.all_passed();
    } else {
      row["checks"] = "skipped: not an algebra";
    }
  } else if (law == "duality") {
    if (it.kind == InputKind::space) {
      row = row_head("space", it.name, a);
      const auto v = round_trip_space(it.space, alpha);
      row["distributive"] = v.distributive;
      row["unit_homeomorphism"] = v.unit_homeomorphism;
      row["split_subobject"] = v.split_subobject;
      row["consistent"] = v.consistent;
      if (!v.consistent) failures["round_trip"] = v.detail;
      bad = !v.consistent;
    } else if (it.kind == InputKind::lattice) {
      row = row_head("lattice", it.name, a);
      const auto frame = FiniteFrame::validate(it.lattice);
      const auto e = eta_check(frame, alpha);
      row["separates_points"] = e.separates_points;
      row["eta_injective"] = e.injective;
      row["eta_preserves_meets"] = e.preserves_meets;
      row["eta_iso"] = e.iso();
      const bool strict = alpha == Alpha::omega || alpha == Alpha::Omega;
      bad = !e.separates_points || !e.injective || !e.preserves_meets || (strict && !e.iso());
      if (bad) failures["eta"] = e.witness;
    } else {
      throw Error(ErrorCode::invalid_input, it.name + ": the duality suite takes spaces or lattices");
    }
  } else if (law == "karoubi") {
    if (it.kind == InputKind::category) {
      row = ojson{{"category", it.name}};
      const auto k = karoubi_envelope(it.category);
      const auto kk = karoubi_envelope(k.category);
      const bool idem = is_equivalence(k.category, kk.category, kk.embedding);
      const bool already_split = !unsplit_idempotent(it.category);
      const bool equiv = is_equivalence(it.category, k.category, k.embedding);
      row["objects"] = it.category.object_count();
      row["arrows"] = it.category.arrow_count();
      row["kar_objects"] = k.category.object_count();
      row["kar_arrows"] = k.category.arrow_count();
      row["kar_all_split"] = true;
      row["kar_kar_equivalent"] = idem;
      row["equivalent_to_kar"] = equiv;
      if (!idem) failures["kar_kar"] = "kar(kar(C)) is not equivalent to kar(C)";
      if (equiv != already_split) failures["split"] = "C ~ kar(C) disagrees with idempotent splitting in C";
      bad = !idem || equiv != already_split;
    } else {
      row = row_head("universe", it.name, a);
      const auto r = comparison_functor(it.universe, alpha);
      row["fully_faithful"] = r.fully_faithful();
      ojson sizes = ojson::array();
      for (auto [kl, fr] : r.hom_sizes) sizes.push_back({kl, fr});
      row["hom_sizes"] = sizes;
      if (!r.fully_faithful()) failures["comparison_functor"] = r.detail;
      bad = !r.fully_faithful();
      constexpr std::size_t kKaroubiLimit = 24;
      const auto kl = kleisli_category(it.universe, alpha);
      if (kl.category.arrow_count() <= kKaroubiLimit) {
        const auto k = karoubi_envelope(kl.category);
        const auto kk = karoubi_envelope(k.category);
        const bool idem = is_equivalence(k.category, kk.category, kk.embedding);
        row["kleisli_kar_kar_equivalent"] = idem;
        if (!idem) failures["kar_kar"] = "kar(kar(C)) is not equivalent to kar(C)";
        bad = bad || !idem;
      } else {
        row["kleisli_kar_kar_equivalent"] = "skipped: " + std::to_string(kl.category.arrow_count()) + " arrows";
      }
    }
  } else {
    throw Error(ErrorCode::invalid_input, "unknown law " + law);
  }
  if (!failures.empty()) row["failures"] = failures;
  return bad;
}

// -------------------------------------------------------------- dualize

ojson dualize_row(const Item& it, const AlphaRun& a) {
  if (it.kind == InputKind::space) {
    const FinSpace& x = it.space;
    ojson row = row_head("space", it.name, a);
    const auto frame = opens_frame(x);
    const auto f = alpha_filter_space(frame, a.effective);
    const auto v = round_trip_space(x, a.effective);
    row["frame_elements"] = frame.labels();
    ojson covers = ojson::array();
    for (auto [lo, hi] : frame.covering_pairs()) covers.push_back({frame.label(lo), frame.label(hi)});
    row["frame_covers"] = covers;
    row["filter_points"] = f.space.labels();
    row["homeomorphic_to_input"] = find_homeomorphism(f.space, x).has_value();
    row["distributive"] = v.distributive;
    row["unit_homeomorphism"] = v.unit_homeomorphism;
    row["split_subobject"] = v.split_subobject;
    row["round_trip"] = v.consistent;
    return row;
  }
  if (it.kind == InputKind::lattice) {
    const auto frame = FiniteFrame::validate(it.lattice);
    ojson row = row_head("lattice", it.name, a);
    const auto f = alpha_filter_space(frame, a.effective);
    ojson primes = ojson::array();
    for (std::size_t g = 0; g < frame.size(); ++g)
      if (frame.is_join_prime(g)) primes.push_back(frame.label(g));
    row["join_primes"] = primes;
    row["filter_points"] = f.space.labels();
    ojson opens = ojson::array();
    for (const auto& u : f.space.opens()) opens.push_back(f.space.format(u));
    row["filter_opens"] = opens;
    bool discrete = true;
    for (std::size_t i = 0; i < f.space.size(); ++i) discrete = discrete && f.space.min_nbhd(i).count() == 1;
    row["discrete"] = discrete;
    const auto e = eta_check(frame, a.effective);
    row["eta_iso"] = e.iso();
    if (!e.iso()) row["eta_witness"] = e.witness;
    return row;
  }
  throw Error(ErrorCode::invalid_input, it.name + ": dualize takes a space or a lattice");
}

// ------------------------------------------------------------ rendering

std::string scalar_text(const ojson& v) {
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(std::ostream& out, const ojson& row) {
  std::vector<std::string> inline_parts;
  std::vector<std::string> lines;
  auto add = [&](const std::string& key, const ojson& v) {
    const std::string text = scalar_text(v);
    if (v.is_string() && text.find(' ') != std::string::npos) lines.push_back(key + ": " + text);
    else inline_parts.push_back(key + "=" + text);
  };
  bool first = true;
  std::string head;
  for (const auto& [key, v] : row.items()) {
    if (first) {
      head = scalar_text(v);
      first = false;
      continue;
    }
    if (v.is_object()) {
      for (const auto& [sub, sv] : v.items()) add(key + "." + sub, sv);
    } else {
      add(key, v);
    }
  }
  out << head;
  for (const auto& p : inline_parts) out << "  " << p;
  out << "\n";
  for (const auto& l : lines) out << "    " << l << "\n";
}

// ----------------------------------------------------------- scheduling

template <class Work>
std::vector<Outcome> run_pool(const std::vector<Item>& items, std::size_t jobs, Work work) {
  std::vector<Outcome> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      Outcome& o = results[i];
      try {
        o.status = work(items[i], o.rows);
      } catch (const Error& e) {
        o.status = is_input_error(e.code()) ? Exit::input_error : Exit::violation;
        o.rows.push_back(ojson{{"item", items[i].name}, {"error", e.what()}});
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, items.size()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<Item> universes_of(const std::vector<Item>& items) {
  constexpr std::size_t kUniverse = 3;
  std::vector<Item> out;
  std::vector<Item> categories;
  for (std::size_t i = 0; i < items.size();) {
    if (items[i].kind == InputKind::category) {
      categories.push_back(items[i++]);
      continue;
    }
    Item u;
    u.kind = InputKind::space;
    std::string names;
    for (std::size_t k = 0; k < kUniverse && i < items.size() && items[i].kind == InputKind::space; ++k, ++i) {
      u.universe.push_back(items[i].space);
      names += (names.empty() ? "" : ",") + items[i].name;
    }
    if (u.universe.empty()) throw Error(ErrorCode::invalid_input, items[i].name + ": karoubi takes spaces or categories");
    u.name = "{" + names + "}";
    out.push_back(std::move(u));
  }
  out.insert(out.end(), categories.begin(), categories.end());
  return out;
}

int emit(std::ostream& out, const RunConfig& cfg, const Corpus& corpus, const ojson& notes,
         const std::vector<Outcome>& results) {
  int status = Exit::ok;
  std::size_t rows = 0, violations = 0, errors = 0;
  for (const auto& o : results) {
    rows += o.rows.size();
    if (o.status == Exit::input_error) ++errors;
    if (o.status == Exit::violation) ++violations;
    status = std::max(status, o.status == Exit::input_error ? 2 : o.status);
  }
  if (errors > 0) status = Exit::input_error;

  if (cfg.format == "json") {
    ojson doc;
    doc["command"] = cfg.command;
    if (!cfg.law.empty()) doc["law"] = cfg.law;
    doc["source"] = corpus.source;
    if (!corpus.seed.is_null()) doc["seed"] = corpus.seed;
    doc["alpha"] = cfg.alpha;
    if (!notes.empty()) doc["notes"] = notes;
    ojson all = ojson::array();
    for (const auto& o : results)
      for (const auto& r : o.rows) all.push_back(r);
    doc["results"] = all;
    doc["summary"] = {{"rows", rows}, {"violations", violations}, {"input_errors", errors}};
    out << doc.dump(2) << "\n";
  } else {
    out << "# fintop " << cfg.command << (cfg.law.empty() ? "" : " --law " + cfg.law) << "\n";
    out << "# source: " << corpus.source << "  alpha: " << cfg.alpha << "\n";
    if (!corpus.seed.is_null()) out << "# seed: " << corpus.seed.dump() << "\n";
    for (const auto& n : notes) out << "# note: " << n.get<std::string>() << "\n";
    for (const auto& o : results)
      for (const auto& r : o.rows) render_text(out, r);
    out << "# summary: " << rows << " rows, " << violations << " violations, " << errors << " input errors\n";
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::vector<std::string> positional;
  CLI::App app{"Finite-space workbench for filter monads, their algebras and distributivity", "fintop"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "0, 1, omega, Omega or all")
        ->check(CLI::IsMember({"0", "1", "omega", "Omega", "w", "W", "all"}));
    sub->add_option("--file", cfg.file, "input JSON file");
    sub->add_option("--enumerate", cfg.enumerate, "all labelled T0 spaces on N points");
    sub->add_option("--random", cfg.random, "SEED:COUNT random spaces");
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--witness", cfg.witness, "print witnesses for negative verdicts");
    sub->add_option("--jobs", cfg.jobs, "worker threads over the corpus")->check(CLI::PositiveNumber);
    sub->add_flag("--proper-only", cfg.proper_only, "run alpha 0 on proper filters only");
    sub->add_option("inputs", positional, "input JSON files");
  };
  auto* classify = app.add_subcommand("classify", "per-space, per-alpha classification");
  common(classify);
  auto* check = app.add_subcommand("check", "run a theorem suite over the corpus");
  common(check);
  check->add_option("--law", cfg.law, "monad, kz, tdist, mulaws, duality or karoubi")
      ->required()
      ->check(CLI::IsMember({"monad", "kz", "tdist", "mulaws", "duality", "karoubi"}));
  auto* dualize = app.add_subcommand("dualize", "frame of opens, alpha-filter space and round trip");
  common(dualize);
  auto* xport = app.add_subcommand("export", "DOT output");
  common(xport);
  xport->add_option("--dot", cfg.dot, "order, filters or frame")
      ->required()
      ->check(CLI::IsMember({"order", "filters", "frame"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return Exit::input_error;
  }
  for (auto* sub : {classify, check, dualize, xport})
    if (sub->parsed()) cfg.command = sub->get_name();
  if (cfg.alpha == "w") cfg.alpha = "omega";
  if (cfg.alpha == "W") cfg.alpha = "Omega";

  try {
    ojson notes = ojson::array();
    const auto alphas = alpha_runs(cfg, notes);
    Corpus corpus = resolve_corpus(cfg, positional);

    if (cfg.command == "export") {
      if (corpus.items.size() != 1) throw Error(ErrorCode::invalid_input, "export takes a single input");
      const Item& it = corpus.items.front();
      if (cfg.dot == "frame") {
        if (it.kind == InputKind::lattice) out << FiniteFrame::validate(it.lattice).to_dot("frame");
        else out << opens_frame(require_space(it)).to_dot("frame");
      } else if (cfg.dot == "order") {
        out << order_to_dot(require_space(it), false, "order");
      } else {
        if (alphas.size() != 1) throw Error(ErrorCode::invalid_input, "--dot filters needs a single --alpha");
        out << order_to_dot(filter_space(require_space(it), alphas.front().effective).space(), false, "filters");
      }
      return Exit::ok;
    }

    std::vector<Outcome> results;
    if (cfg.command == "classify") {
      results = run_pool(corpus.items, cfg.jobs, [&](const Item& it, std::vector<ojson>& rows) {
        for (const auto& a : alphas) rows.push_back(classify_row(it, a, cfg.witness));
        return int{Exit::ok};
      });
    } else if (cfg.command == "check") {
      if (cfg.law == "karoubi") corpus.items = universes_of(corpus.items);
      results = run_pool(corpus.items, cfg.jobs, [&](const Item& it, std::vector<ojson>& rows) {
        int status = Exit::ok;
        if (it.kind == InputKind::category) {
          ojson row;
          if (check_row(it, alphas.front(), cfg.law, row)) status = Exit::violation;
          rows.push_back(row);
          return status;
        }
        for (const auto& a : alphas) {
          ojson row;
          if (check_row(it, a, cfg.law, row)) status = Exit::violation;
          rows.push_back(row);
        }
        return status;
      });
    } else {
      results = run_pool(corpus.items, cfg.jobs, [&](const Item& it, std::vector<ojson>& rows) {
        for (const auto& a : alphas) rows.push_back(dualize_row(it, a));
        return int{Exit::ok};
      });
    }
    const int status = emit(out, cfg, corpus, notes, results);
    for (const auto& o : results)
      if (o.status != Exit::ok)
        for (const auto& r : o.rows)
          if (r.contains("error")) err << r["item"].get<std::string>() << ": " << r["error"].get<std::string>() << "\n";
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? Exit::input_error : Exit::violation;
  }
}

}  // namespace fintop::cli
