#include "polya/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "polya/character.hpp"
#include "polya/error.hpp"
#include "polya/orbits.hpp"
#include "polya/perm.hpp"
#include "polya/semisym.hpp"
#include "polya/symfun.hpp"

namespace polya {

namespace {

struct CommandInfo {
  Command command;
  std::string_view name;
  std::size_t operands;  // number of (group, character) pairs
  bool needs_char;
  std::string_view help;
};

constexpr CommandInfo command_table[] = {
  {Command::characters, "characters", 1, false, "list the linear characters of a group"},
  {Command::cycle_index, "cycle-index", 1, true, "print the cycle index Z(chi) in power sums"},
  {Command::orbits, "orbits", 1, true, "orbit census of [0,n]^d with H-orbit counts"},
  {Command::gn, "gn", 1, true, "weighted sum over chi-orbit representatives"},
  {Command::verify, "verify", 1, true, "compare g_n with the specialized cycle index"},
  {Command::verify_product, "verify-product", 2, true, "product rule for a direct product (W,chi) x (V,theta)"},
  {Command::verify_plethysm, "verify-plethysm", 2, true, "insertion rule for wreath(V,W), inner (V,theta) first"},
  {Command::verify_basis, "verify-basis", 1, true, "projector rank, trace and basis checks on the tensor power"},
};

CommandInfo const &info(Command c)
{
  for (auto const &i : command_table)
    if (i.command == c)
      return i;
  throw std::logic_error("unknown command");
}

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t int_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap)
{
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / std::max<std::uint64_t>(base, 1))
      return cap + 1;
    r *= base;
  }
  return r;
}

struct Operands {
  std::vector<GroupPtr> groups;
  std::vector<LinearCharacter> chars;
};

Operands parse_operands(JobSpec const &spec)
{
  auto const &ci = info(spec.command);
  if (spec.groups.size() != ci.operands)
    throw InvalidInput(std::string(ci.name) + " expects " + std::to_string(ci.operands) +
                       " --group option(s), got " + std::to_string(spec.groups.size()));
  if (spec.chars.size() > ci.operands || (!ci.needs_char && !spec.chars.empty()))
    throw InvalidInput(std::string(ci.name) + " accepts at most " +
                       std::to_string(ci.needs_char ? ci.operands : 0) +
                       " --char option(s)");

  Operands ops;
  for (auto const &text : spec.groups)
    ops.groups.push_back(
      std::make_shared<PermGroup const>(parse_group(text, spec.caps.group_order)));
  if (ci.needs_char)
    for (std::size_t k = 0; k < ci.operands; ++k)
      ops.chars.push_back(parse_character(k < spec.chars.size() ? spec.chars[k] : "unit",
                                          ops.groups[k], !spec.unchecked));
  return ops;
}

std::string value_list(LinearCharacter const &chi)
{
  std::string out;
  auto const &g = chi.group();
  for (auto const &gen : g.generators()) {
    if (!out.empty())
      out += ' ';
    out += gen.to_cycle_string() + "->" + chi.value_of(gen).to_string();
  }
  return out.empty() ? "(trivial group)" : out;
}

int emit_poly_check(std::ostream &out, Format format, std::string const &label,
                    std::string const &lhs_name, std::string const &rhs_name,
                    std::string const &lhs, std::string const &rhs, bool equal,
                    nlohmann::json &doc)
{
  doc[label] = {{"equal", equal}, {lhs_name, lhs}, {rhs_name, rhs}};
  if (format != Format::json) {
    if (equal) {
      out << label << ": verified: " << lhs << '\n';
    } else {
      out << label << ": MISMATCH\n"
          << "  " << lhs_name << ": " << lhs << '\n'
          << "  " << rhs_name << ": " << rhs << '\n';
    }
  }
  return equal ? exit_ok : exit_mismatch;
}

int execute(JobSpec const &spec, Operands const &ops, std::ostream &out)
{
  auto const json = spec.format == Format::json;
  auto const &caps = spec.caps;

  switch (spec.command) {
  case Command::characters: {
    auto chars = enumerate_linear_characters(ops.groups[0]);
    auto const &g = *ops.groups[0];
    if (json) {
      nlohmann::json doc = {{"group", g.name()}, {"order", g.order()}};
      auto arr = nlohmann::json::array();
      for (auto const &chi : chars) {
        auto values = nlohmann::json::array();
        for (auto const &gen : g.generators())
          values.push_back({{"generator", gen.to_cycle_string()},
                            {"exponent", chi.exponent(g.index_of(gen))}});
        arr.push_back({{"name", chi.name()},
                       {"modulus", chi.modulus()},
                       {"image_order", chi.image_order()},
                       {"unit", chi.is_unit()},
                       {"values", values}});
      }
      doc["characters"] = arr;
      out << doc.dump(2) << '\n';
    } else {
      out << g.name() << ": order " << g.order() << ", " << chars.size()
          << " linear character" << (chars.size() == 1 ? "" : "s") << '\n';
      for (auto const &chi : chars)
        out << chi.name() << "\timage_order=" << chi.image_order() << '\t'
            << value_list(chi) << '\n';
    }
    return exit_ok;
  }

  case Command::cycle_index: {
    auto z = cycle_index(ops.chars[0]);
    if (json)
      out << nlohmann::json{{"group", ops.groups[0]->name()},
                            {"character", ops.chars[0].name()},
                            {"cycle_index", z.to_json()},
                            {"text", z.to_string()}}
               .dump(2)
          << '\n';
    else
      out << z.to_string() << '\n';
    return exit_ok;
  }

  case Command::orbits: {
    auto records = orbit_census(ops.chars[0], spec.n, caps);
    if (json)
      out << nlohmann::json{{"group", ops.groups[0]->name()},
                            {"character", ops.chars[0].name()},
                            {"n", spec.n},
                            {"orbits", census_to_json(records)}}
               .dump(2)
          << '\n';
    else
      out << census_to_tsv(records);
    return exit_ok;
  }

  case Command::gn: {
    auto g = weighted_sum_g(ops.chars[0], spec.n, caps);
    if (json)
      out << nlohmann::json{{"group", ops.groups[0]->name()},
                            {"character", ops.chars[0].name()},
                            {"n", spec.n},
                            {"gn", g.to_json()},
                            {"text", g.to_string()}}
               .dump(2)
          << '\n';
    else
      out << g.to_string() << '\n';
    return exit_ok;
  }

  case Command::verify: {
    auto report = verify_main_theorem(ops.chars[0], spec.n, caps);
    nlohmann::json doc = {{"group", ops.groups[0]->name()},
                          {"character", ops.chars[0].name()},
                          {"n", spec.n}};
    int rc = emit_poly_check(out, spec.format, "g_n", "orbit_sum", "cycle_index",
                             report.lhs.to_string(), report.rhs.to_string(),
                             report.equal, doc);
    if (json)
      out << doc.dump(2) << '\n';
    return rc;
  }

  case Command::verify_product: {
    auto lambda = product_character(ops.chars[0], ops.chars[1]);
    auto z_embedded = cycle_index(lambda);
    auto z_product = psum_mul(cycle_index(ops.chars[0]), cycle_index(ops.chars[1]));
    nlohmann::json doc = {{"group", lambda.group().name()},
                          {"character", lambda.name()},
                          {"n", spec.n}};
    int rc = emit_poly_check(out, spec.format, "Z", "embedded", "product",
                             z_embedded.to_string(), z_product.to_string(),
                             z_embedded == z_product, doc);
    auto g = weighted_sum_g(lambda, spec.n, caps);
    auto s = specialize(z_product, spec.n, caps);
    rc = std::max(rc, emit_poly_check(out, spec.format, "g_n", "orbit_sum", "product",
                                      g.to_string(), s.to_string(), g == s, doc));
    if (json)
      out << doc.dump(2) << '\n';
    return rc;
  }

  case Command::verify_plethysm: {
    auto mu = wreath_character(ops.chars[0], ops.chars[1]);
    auto z_wreath = cycle_index(mu);
    auto z_inserted = plethysm_insert(cycle_index(ops.chars[1]), cycle_index(ops.chars[0]));
    nlohmann::json doc = {{"group", mu.group().name()},
                          {"character", mu.name()},
                          {"n", spec.n}};
    int rc = emit_poly_check(out, spec.format, "Z", "wreath", "insertion",
                             z_wreath.to_string(), z_inserted.to_string(),
                             z_wreath == z_inserted, doc);
    auto g = weighted_sum_g(mu, spec.n, caps);
    auto s = specialize(z_inserted, spec.n, caps);
    rc = std::max(rc, emit_poly_check(out, spec.format, "g_n", "orbit_sum", "insertion",
                                      g.to_string(), s.to_string(), g == s, doc));
    if (json)
      out << doc.dump(2) << '\n';
    return rc;
  }

  case Command::verify_basis: {
    auto module = MonomialModule::tensor_power(ops.groups[0], spec.n, caps);
    auto report = verify_basis_prop(module, ops.chars[0]);
    if (json) {
      out << basis_report_json(report, ops.groups[0]->name(), ops.chars[0].name(), spec.n,
                               ops.groups[0]->degree())
               .dump(2)
          << '\n';
    } else {
      out << "dim=" << report.dim << " trace=" << report.trace.get_str()
          << " rank=" << report.rank << " J_size=" << report.j_size
          << " idempotent=" << report.idempotent
          << " kernel_family=" << report.kernel_family_rank << '/'
          << report.kernel_family_size << " ok=" << (report.ok ? "true" : "false") << '\n';
    }
    return report.ok ? exit_ok : exit_mismatch;
  }
  }
  return exit_usage;
}

} // namespace

std::string_view command_name(Command c)
{
  return info(c).name;
}

Command parse_command(std::string_view name)
{
  for (auto const &i : command_table)
    if (i.name == name)
      return i.command;
  throw InvalidInput("unknown command \"" + std::string(name) + "\"");
}

std::string JobSpec::describe() const
{
  std::string out(command_name(command));
  for (std::size_t k = 0; k < groups.size(); ++k) {
    out += " group=" + groups[k];
    if (k < chars.size())
      out += " char=" + chars[k];
  }
  if (command != Command::characters && command != Command::cycle_index)
    out += " n=" + std::to_string(n);
  if (unchecked)
    out += " unchecked";
  return out;
}

int run(JobSpec const &spec, std::ostream &out, std::ostream &err)
{
  try {
    auto ops = parse_operands(spec);
    return execute(spec, ops, out);
  } catch (InvalidInput const &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (CapExceeded const &e) {
    err << "cap exceeded: " << e.what() << '\n';
    return exit_cap;
  } catch (CheckFailed const &e) {
    err << "check failed: " << e.what() << '\n';
    return exit_mismatch;
  }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint32_t> parse_n_list(std::string const &text)
{
  auto number = [&](std::string const &s) -> std::uint32_t {
    if (s.empty() || s.size() > 6 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw InvalidInput("catalog: bad n value \"" + text + "\"");
    return static_cast<std::uint32_t>(std::stoul(s));
  };

  std::vector<std::uint32_t> out;
  if (auto dash = text.find('-'); dash != std::string::npos) {
    auto lo = number(trim(text.substr(0, dash)));
    auto hi = number(trim(text.substr(dash + 1)));
    if (lo > hi)
      throw InvalidInput("catalog: empty n range \"" + text + "\"");
    for (auto k = lo; k <= hi; ++k)
      out.push_back(k);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(number(trim(item)));
  return out;
}

} // namespace

std::vector<JobSpec> parse_catalog(std::string_view text, Caps const &caps)
{
  std::vector<JobSpec> jobs;
  std::stringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;

    auto where = [&] { return "catalog line " + std::to_string(line_no) + ": "; };

    // split on ';' outside of brackets so group expressions stay intact
    std::vector<std::string> fields;
    int depth = 0;
    std::string cur;
    for (char c : line) {
      if (c == '(' || c == '[' || c == '{')
        ++depth;
      else if (c == ')' || c == ']' || c == '}')
        --depth;
      if (c == ';' && depth == 0) {
        fields.push_back(trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(trim(cur));

    JobSpec base;
    base.caps = caps;
    try {
      base.command = parse_command(fields[0]);
    } catch (InvalidInput const &e) {
      throw InvalidInput(where() + e.what());
    }

    std::vector<std::uint32_t> ns{0};
    std::uint64_t maxpoints = 0;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      auto const &field = fields[f];
      if (field.empty())
        continue;
      if (field == "unchecked") {
        base.unchecked = true;
        continue;
      }
      auto eq = field.find('=');
      if (eq == std::string::npos)
        throw InvalidInput(where() + "expected key=value, got \"" + field + "\"");
      auto key = trim(field.substr(0, eq));
      auto value = trim(field.substr(eq + 1));
      if (key == "group")
        base.groups.push_back(value);
      else if (key == "char")
        base.chars.push_back(value);
      else if (key == "n")
        ns = parse_n_list(value);
      else if (key == "maxpoints")
        maxpoints = parse_n_list(value).at(0);
      else
        throw InvalidInput(where() + "unknown key \"" + key + "\"");
    }

    // canonical group names and per-position character lists
    std::vector<GroupPtr> groups;
    try {
      for (auto &g : base.groups) {
        groups.push_back(std::make_shared<PermGroup const>(parse_group(g, caps.group_order)));
        g = groups.back()->name();
      }
    } catch (InvalidInput const &e) {
      throw InvalidInput(where() + e.what());
    }

    std::vector<std::vector<std::string>> choices;
    for (std::size_t k = 0; k < base.chars.size(); ++k) {
      if (base.chars[k] != "*") {
        choices.push_back({base.chars[k]});
        continue;
      }
      if (k >= groups.size())
        throw InvalidInput(where() + "char=* has no matching group");
      std::vector<std::string> names;
      for (auto const &chi : enumerate_linear_characters(groups[k]))
        names.push_back(chi.name());
      choices.push_back(std::move(names));
    }

    std::size_t degree = 0;
    if (!groups.empty()) {
      degree = groups[0]->degree();
      for (std::size_t k = 1; k < groups.size(); ++k)
        degree = base.command == Command::verify_plethysm ? degree * groups[k]->degree()
                                                          : degree + groups[k]->degree();
    }

    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
      for (auto n : ns) {
        if (maxpoints != 0 && int_pow(n + 1, degree, maxpoints) > maxpoints)
          continue;
        JobSpec job = base;
        job.n = n;
        for (std::size_t k = 0; k < choices.size(); ++k)
          job.chars[k] = choices[k][pick[k]];
        jobs.push_back(std::move(job));
      }
      std::size_t k = choices.size();
      while (k-- > 0) {
        if (++pick[k] < choices[k].size())
          break;
        pick[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1))
        break;
    }
  }
  return jobs;
}

int run_suite(std::vector<JobSpec> const &jobs, SuiteOptions const &options,
              std::ostream &out, std::ostream &err)
{
  if (jobs.empty()) {
    err << "error: catalog contains no jobs\n";
    return exit_usage;
  }

  struct Result {
    int code = 0;
    std::string output;
    std::string errors;
  };
  std::vector<Result> results(jobs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      JobSpec job = jobs[i];
      job.format = Format::text;
      std::ostringstream o, e;
      results[i].code = run(job, o, e);
      results[i].output = o.str();
      results[i].errors = e.str();
    }
  };

  unsigned const workers = std::max(1u, std::min<unsigned>(options.jobs, jobs.size()));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < workers; ++t)
    threads.emplace_back(worker);
  worker();
  for (auto &t : threads)
    t.join();

  auto status = [](int code) {
    switch (code) {
    case exit_ok: return "PASS";
    case exit_mismatch: return "FAIL";
    case exit_cap: return "CAP";
    default: return "ERROR";
    }
  };

  std::size_t passed = 0, failed = 0, usage = 0, capped = 0;
  for (auto const &r : results) {
    passed += r.code == exit_ok;
    failed += r.code == exit_mismatch;
    capped += r.code == exit_cap;
    usage += r.code == exit_usage;
  }

  if (options.format == Format::json) {
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      nlohmann::json entry = {{"job", jobs[i].describe()}, {"status", status(results[i].code)}};
      if (results[i].code != exit_ok)
        entry["detail"] = results[i].output + results[i].errors;
      arr.push_back(entry);
    }
    out << nlohmann::json{{"jobs", arr},
                          {"passed", passed},
                          {"failed", failed},
                          {"capped", capped},
                          {"errors", usage}}
             .dump(2)
        << '\n';
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      out << status(results[i].code) << ' ' << jobs[i].describe() << '\n';
      if (results[i].code != exit_ok) {
        std::stringstream detail(results[i].output + results[i].errors);
        for (std::string l; std::getline(detail, l);)
          out << "    " << l << '\n';
      }
    }
    out << "summary: " << jobs.size() << " jobs, " << passed << " passed, " << failed
        << " failed, " << capped << " capped, " << usage << " errors\n";
  }

  if (usage)
    return exit_usage;
  if (capped)
    return exit_cap;
  return failed ? exit_mismatch : exit_ok;
}

// ---------------------------------------------------------------------------

int cli_main(int argc, char **argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Generalized cycle indices and weighted orbit enumeration"};
  app.require_subcommand(1);

  Caps caps;
  try {
    caps = Caps::from_env();
  } catch (InvalidInput const &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  JobSpec spec;
  std::string format = "text";
  std::uint64_t cap = 0;
  std::string catalog;
  unsigned jobs = 1;
  std::map<std::string, std::string> const formats{{"text", "text"}, {"json", "json"}, {"tsv", "tsv"}};

  std::vector<std::pair<CLI::App *, Command>> subcommands;
  for (auto const &ci : command_table) {
    auto *sub = app.add_subcommand(std::string(ci.name), std::string(ci.help));
    sub->add_option("--group", spec.groups, "group expression, e.g. S(3) or wreath(S(2),C(3))")
      ->required();
    if (ci.needs_char)
      sub->add_option("--char", spec.chars, "unit | sign | index:k | vals{g1:k,...}");
    if (ci.command != Command::characters && ci.command != Command::cycle_index)
      sub->add_option("--n", spec.n, "largest figure index (hypercube [0,n]^d)");
    sub->add_option("--format", format)->check(CLI::IsMember(formats));
    sub->add_option("--cap", cap, "orbit work cap, (n+1)^d * |W|");
    sub->add_flag("--unchecked", spec.unchecked, "skip homomorphism validation");
    subcommands.emplace_back(sub, ci.command);
  }

  auto *suite = app.add_subcommand("suite", "run a catalog of verification jobs");
  suite->add_option("--catalog", catalog, "catalog file")->required();
  suite->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  suite->add_option("--format", format)->check(CLI::IsMember(formats));
  suite->add_option("--cap", cap, "orbit work cap, (n+1)^d * |W|");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  if (cap != 0)
    caps.orbit_work = cap;
  Format const fmt = format == "json" ? Format::json : format == "tsv" ? Format::tsv : Format::text;

  if (suite->parsed()) {
    std::ifstream in(catalog);
    if (!in) {
      err << "error: cannot read catalog " << catalog << '\n';
      return exit_usage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return run_suite(parse_catalog(buf.str(), caps), {fmt, jobs}, out, err);
    } catch (InvalidInput const &e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    } catch (CapExceeded const &e) {
      err << "cap exceeded: " << e.what() << '\n';
      return exit_cap;
    }
  }

  for (auto const &[sub, command] : subcommands) {
    if (sub->parsed()) {
      spec.command = command;
      spec.format = fmt;
      spec.caps = caps;
      return run(spec, out, err);
    }
  }
  return exit_usage;
}

} // namespace polya
