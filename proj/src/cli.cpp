#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "context.hpp"
#include "tf/cli.hpp"
#include "tf/limits.hpp"

namespace tf {

std::string status_name(Status s) {
  switch (s) {
    case Status::Complete: return "complete";
    case Status::Consistent: return "consistent";
    case Status::PaperPredicts: return "paper-predicts";
    case Status::HypothesisNotMet: return "hypothesis-not-met";
    case Status::NotCheckable: return "not-checkable";
    case Status::Inconsistent: return "inconsistent";
    case Status::Error: return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Complete:
    case Status::Consistent:
    case Status::PaperPredicts: return 0;
    case Status::HypothesisNotMet: return 2;
    case Status::NotCheckable: return 3;
    case Status::Inconsistent:
    case Status::Error: return 1;
  }
  return 1;
}

std::string Report::dump_json() const { return json.dump(2) + "\n"; }

std::string Report::text() const {
  std::ostringstream out;
  const auto& s = json.at("session");
  out << "session " << s.value("label", std::string()) << "  [" << status_name(status) << "]\n";
  for (const auto& op : json.at("operations")) {
    out << "  " << op.at("op").get<std::string>();
    if (!op.at("inputs").empty()) out << " " << op.at("inputs").dump();
    out << " -> " << op.at("result").dump() << "\n";
  }
  return out.str();
}

namespace {

using json = nlohmann::json;
using detail::Context;
using detail::height_json;
using detail::show;

// Corpus.

std::string numbered_ring(int n) { return "ring x1..x" + std::to_string(n) + ";\n"; }

std::optional<std::string> fermat_source(const std::string& name) {
  int d = 0, n = 0;
  char tail = 0;
  if (std::sscanf(name.c_str(), "fermat-%d-%d%c", &d, &n, &tail) != 2) return std::nullopt;
  if (d < 2 || d > 12 || n < 2 || n > 12) return std::nullopt;
  std::string f;
  for (int i = 1; i <= n; ++i) f += (i > 1 ? " + x" : "x") + std::to_string(i) + "^" + std::to_string(d);
  return "# Fermat hypersurface of degree " + std::to_string(d) + " in " + std::to_string(n) + " variables\n" +
         numbered_ring(n) + "ideal I = " + f + ";\n";
}

// Operations.

template <class F>
json op_presentation(Context<F>& ctx) {
  const auto& a = ctx.base();
  json gens = json::array();
  for (const auto& g : ctx.input().ideal.generators()) gens.push_back(show(g));
  json r{{"variables", ctx.ring()->names()},
         {"weights", ctx.ring()->weights()},
         {"order", ctx.ring()->order().name()},
         {"generators", gens},
         {"homogeneous", ctx.graded()},
         {"dim", a.dim()},
         {"height", height_json(a.ideal.height())}};
  try {
    int e = ctx.embedding_dimension();
    r["edim"] = e;
    r["ecodim"] = e - a.dim();
  } catch (const Error&) {
    r["edim"] = nullptr;
    r["ecodim"] = nullptr;
  }
  return r;
}

template <class F>
json op_mu_mod_cube(Context<F>& ctx) {
  return {{"value", mu_mod_cube(ctx.base().ideal)}, {"bound", ctx.nvars() - 1}};
}

template <class F>
json op_tangent(Context<F>& ctx) {
  const auto& s = ctx.tangent();
  return {{"variables", s.ring()->nvars()}, {"generators", s.ideal.generators().size()}, {"dim", s.dim()}};
}

template <class F>
json op_rees(Context<F>& ctx) {
  const auto& r = ctx.rees();
  json fresh = json::array();
  for (const auto& g : r.report.new_generators) fresh.push_back(show(g));
  return {{"witness", show(r.report.witness)},
          {"steps", r.report.steps},
          {"linear_type", r.report.linear_type},
          {"new_generators", fresh},
          {"basis_size", r.report.j_sat.basis().size()},
          {"dim", r.algebra.dim()}};
}

template <class F>
json op_ft(Context<F>& ctx, int t) {
  auto rep = ft_check(ctx.omega(), t);
  json records = json::array();
  for (const auto& rec : rep.records) {
    records.push_back({{"index", rec.index}, {"height", height_json(rec.height)}, {"bound", rec.bound}});
  }
  return {{"t", t}, {"rank", rep.rank}, {"verdict", rep.verdict}, {"fitting", records}};
}

template <class F>
json op_edim(Context<F>& ctx, int t) {
  return {{"t", t}, {"verdict", ctx.edim(t)}};
}

template <class F>
json op_cm(Context<F>& ctx, const std::string& which) {
  return {{"algebra", which}, {"value", is_cohen_macaulay(ctx.algebra(which))}};
}

template <class F>
json op_gorenstein(Context<F>& ctx, const std::string& which) {
  return {{"algebra", which}, {"value", is_gorenstein(ctx.algebra(which))}};
}

template <class F>
json op_cy(Context<F>& ctx, const std::string& which) {
  const auto& a = ctx.algebra(which);
  bool v = cy_type_check(a);
  return {{"algebra", which}, {"value", v}, {"a_invariant", a.ideal.hilbert_series().a_invariant()}};
}

template <class F>
json op_betti(Context<F>& ctx, const std::string& which) {
  auto res = resolve(ctx.algebra(which).ideal);
  json table = json::array();
  for (const auto& [ij, b] : res.betti().entries) table.push_back({ij.first, ij.second, b});
  return {{"algebra", which}, {"betti", table}, {"length", res.length()}};
}

template <class F>
json op_depth(Context<F>& ctx, const std::string& which) {
  auto pd = projdim_depth(ctx.algebra(which));
  return {{"algebra", which}, {"projdim", pd.pd}, {"depth", pd.depth}};
}

template <class F>
json op_hilbert(Context<F>& ctx, const std::string& which) {
  auto hs = ctx.algebra(which).ideal.hilbert_series();
  return {{"algebra", which}, {"series", hs.to_string()}, {"dim", hs.dim}, {"a_invariant", hs.a_invariant()}};
}

template <class F>
json op_spread(Context<F>& ctx) {
  return {{"value", analytic_spread(ctx.omega())}};
}

template <class F>
json op_quadric_spread(Context<F>& ctx) {
  auto q = spread_of_quadric_part(ctx.base().ideal);
  return {{"quadrics", q.quadrics},
          {"spread", q.spread},
          {"jacobian_rank", q.jacobian_rank},
          {"height", q.height},
          {"equals_twice_height", q.equals_twice_height}};
}

template <class F>
json op_koszul(Context<F>& ctx) {
  return {{"zero", koszul_h1(ctx.base().ideal).is_zero()}};
}

std::vector<std::string> citations_for(const std::string& op) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"presentation", {"quotient-presentation"}},
      {"mu_mod_cube", {"quadratic-part-bound"}},
      {"tangent_algebra", {"tangent-algebra-presentation"}},
      {"rees_algebra", {"rees-algebra-as-saturation", "linear-type"}},
      {"ft_check", {"fitting-height-condition"}},
      {"edim_criterion", {"edim-form-of-fitting-condition"}},
      {"is_cohen_macaulay", {"cohen-macaulay-test"}},
      {"is_gorenstein", {"gorenstein-test"}},
      {"cy_type_check", {"calabi-yau-type"}},
      {"betti", {"graded-free-resolution"}},
      {"depth", {"graded-free-resolution"}},
      {"hilbert_series", {"hilbert-series"}},
      {"analytic_spread", {"analytic-spread"}},
      {"quadric_spread", {"spread-of-quadric-part"}},
      {"koszul_h1", {"koszul-homology"}},
  };
  auto it = table.find(op);
  return it == table.end() ? std::vector<std::string>{} : it->second;
}

/// Runs one operation under the per-operation limits and records it.
class OpLog {
 public:
  explicit OpLog(const RunOptions& options) : options_(options) {}

  template <class Fn>
  void run(const std::string& op, json inputs, Fn&& fn) {
    thread_work_counters() = {};
    auto start = std::chrono::steady_clock::now();
    json result;
    {
      ScopedLimits limits(ComputeLimits::with_timeout(std::chrono::duration<double>(options_.timeout_seconds),
                                                      options_.max_degree));
      try {
        result = fn();
        if (!result.contains("status")) result["status"] = "complete";
      } catch (const Error& e) {
        try {
          result = {{"status", "not-checkable"}, {"reason", detail::not_checkable_reason()}};
        } catch (const Error&) {
          result = {{"status", "error"}, {"reason", std::string(e.what())}};
        }
      }
    }
    push(op, std::move(inputs), std::move(result), start);
  }

  void push(const std::string& op, json inputs, json result, std::chrono::steady_clock::time_point start) {
    const auto& w = thread_work_counters();
    json timing{{"s_pairs", w.pairs}, {"reductions", w.reductions}, {"zero_reductions", w.zero_reductions}};
    if (options_.wall_clock) {
      timing["wall_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    std::string st = result.value("status", "complete");
    if (st == "error") worst_ = Status::Error;
    if (st == "not-checkable" && worst_ != Status::Error) worst_ = Status::NotCheckable;
    json cites = op == "audit" ? json::array({inputs.value("tag", "")}) : json(citations_for(op));
    ops_.push_back({{"op", op},
                    {"inputs", std::move(inputs)},
                    {"result", std::move(result)},
                    {"citations", std::move(cites)},
                    {"timing", std::move(timing)}});
  }

  json& operations() { return ops_; }
  Status status() const { return worst_; }
  void set_status(Status s) { worst_ = s; }

 private:
  const RunOptions& options_;
  json ops_ = json::array();
  Status worst_ = Status::Complete;
};

template <class F>
void battery(Context<F>& ctx, OpLog& log) {
  json in{{"ideal", ctx.name()}};
  log.run("presentation", in, [&] { return op_presentation(ctx); });
  log.run("mu_mod_cube", in, [&] { return op_mu_mod_cube(ctx); });
  log.run("tangent_algebra", in, [&] { return op_tangent(ctx); });
  log.run("rees_algebra", in, [&] { return op_rees(ctx); });
  for (int t = 0; t <= 2; ++t) {
    log.run("ft_check", {{"ideal", ctx.name()}, {"t", t}}, [&] { return op_ft(ctx, t); });
  }
  for (int t = 0; t <= 2; ++t) {
    log.run("edim_criterion", {{"ideal", ctx.name()}, {"t", t}}, [&] { return op_edim(ctx, t); });
  }
  for (const char* which : {"base", "tangent", "rees"}) {
    log.run("is_cohen_macaulay", {{"ideal", ctx.name()}, {"algebra", which}}, [&] { return op_cm(ctx, which); });
  }
  log.run("is_gorenstein", {{"ideal", ctx.name()}, {"algebra", "base"}}, [&] { return op_gorenstein(ctx, "base"); });
  log.run("cy_type_check", {{"ideal", ctx.name()}, {"algebra", "base"}}, [&] { return op_cy(ctx, "base"); });
}

int int_arg(const std::vector<std::string>& args, std::size_t i, const CheckStmt& c) {
  if (i >= args.size()) {
    throw ParseError("'" + c.op + "' needs an integer argument", c.pos.line, c.pos.column);
  }
  try {
    std::size_t used = 0;
    int v = std::stoi(args[i], &used);
    if (used != args[i].size() || v < 0 || v > 64) throw std::invalid_argument("range");
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid integer '" + args[i] + "'", c.pos.line, c.pos.column);
  }
}

template <class F>
void run_check(const CheckStmt& c, std::vector<std::unique_ptr<Context<F>>>& contexts, OpLog& log,
               const RunOptions& options) {
  // The first argument may name an ideal; the first ideal is the default.
  std::vector<std::string> args = c.args;
  Context<F>* ctx = contexts.empty() ? nullptr : contexts.front().get();
  if (!args.empty()) {
    for (auto& p : contexts) {
      if (p->name() == args.front()) {
        ctx = p.get();
        args.erase(args.begin());
        break;
      }
    }
  }
  if (!ctx) throw ParseError("'check' needs an ideal", c.pos.line, c.pos.column);
  auto& x = *ctx;
  auto which = [&](std::size_t i) { return i < args.size() ? args[i] : std::string("base"); };
  json in{{"ideal", x.name()}};
  const std::string& op = c.op;
  if (op == "battery") {
    battery(x, log);
  } else if (op == "presentation") {
    log.run(op, in, [&] { return op_presentation(x); });
  } else if (op == "mu_mod_cube") {
    log.run(op, in, [&] { return op_mu_mod_cube(x); });
  } else if (op == "tangent" || op == "tangent_algebra") {
    log.run("tangent_algebra", in, [&] { return op_tangent(x); });
  } else if (op == "rees" || op == "rees_algebra") {
    log.run("rees_algebra", in, [&] { return op_rees(x); });
  } else if (op == "ft" || op == "ft_check") {
    int t = int_arg(args, 0, c);
    in["t"] = t;
    log.run("ft_check", in, [&] { return op_ft(x, t); });
  } else if (op == "edim" || op == "edim_criterion") {
    int t = int_arg(args, 0, c);
    in["t"] = t;
    log.run("edim_criterion", in, [&] { return op_edim(x, t); });
  } else if (op == "cm" || op == "is_cohen_macaulay") {
    in["algebra"] = which(0);
    log.run("is_cohen_macaulay", in, [&] { return op_cm(x, which(0)); });
  } else if (op == "gorenstein" || op == "is_gorenstein") {
    in["algebra"] = which(0);
    log.run("is_gorenstein", in, [&] { return op_gorenstein(x, which(0)); });
  } else if (op == "cy" || op == "cy_type_check") {
    in["algebra"] = which(0);
    log.run("cy_type_check", in, [&] { return op_cy(x, which(0)); });
  } else if (op == "betti") {
    in["algebra"] = which(0);
    log.run("betti", in, [&] { return op_betti(x, which(0)); });
  } else if (op == "depth") {
    in["algebra"] = which(0);
    log.run("depth", in, [&] { return op_depth(x, which(0)); });
  } else if (op == "hilbert" || op == "hilbert_series") {
    in["algebra"] = which(0);
    log.run("hilbert_series", in, [&] { return op_hilbert(x, which(0)); });
  } else if (op == "spread" || op == "analytic_spread") {
    log.run("analytic_spread", in, [&] { return op_spread(x); });
  } else if (op == "quadric_spread") {
    log.run("quadric_spread", in, [&] { return op_quadric_spread(x); });
  } else if (op == "koszul_h1") {
    log.run("koszul_h1", in, [&] { return op_koszul(x); });
  } else if (op == "audit") {
    if (args.empty()) throw ParseError("'check audit' needs a tag", c.pos.line, c.pos.column);
    thread_work_counters() = {};
    auto start = std::chrono::steady_clock::now();
    auto rep = detail::run_audit(args[0], x, options);
    in["tag"] = args[0];
    json result = rep.to_json();
    log.push("audit", in, result, start);
  } else {
    throw ParseError("unknown operation '" + op + "'", c.pos.line, c.pos.column);
  }
}

json session_json(const std::string& label, const SessionAst& ast, std::uint32_t characteristic,
                  const RunOptions& options) {
  json ideals = json::array();
  for (const auto& d : ast.ideals) ideals.push_back(d.name);
  return {{"label", label},
          {"characteristic", characteristic},
          {"variables", ast.names},
          {"ideals", ideals},
          {"order", options.order ? json(*options.order) : json(nullptr)},
          {"max_degree", options.max_degree},
          {"timeout_seconds", options.timeout_seconds}};
}

template <class F>
std::vector<std::unique_ptr<Context<F>>> make_contexts(const Session<F>& session) {
  std::vector<std::unique_ptr<Context<F>>> out;
  for (const auto& [name, ideal] : session.ideals) out.push_back(std::make_unique<Context<F>>(name, ideal));
  return out;
}

template <class F>
Session<F> bind(const SessionAst& ast, const F& field, const RunOptions& options) {
  std::optional<MonomialOrder> order;
  if (options.order) order = MonomialOrder::parse(*options.order);
  return instantiate(ast, field, order);
}

/// Field dispatch: the session's 'char' unless overridden.
template <class Body>
Report with_field(const SessionAst& ast, const RunOptions& options, Body&& body) {
  std::uint32_t p = options.characteristic.value_or(ast.characteristic.value_or(32003));
  if (p != 0 && !is_prime(p)) throw Error("characteristic must be 0 or a prime");
  if (p == 0) return body(RationalField(), p);
  return body(PrimeField(p), p);
}

Report error_report(const std::string& label, const std::string& what) {
  Report r;
  r.status = Status::Error;
  r.json = {{"session", {{"label", label}}},
            {"operations", json::array({{{"op", "parse"},
                                         {"inputs", json::object()},
                                         {"result", {{"status", "error"}, {"reason", what}}},
                                         {"citations", json::array()},
                                         {"timing", json::object()}}})}};
  return r;
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"veronese",    "catalecticant-1", "catalecticant-2", "catalecticant-3", "catalecticant-4",
          "cusp",        "fermat-5-5",      "generic-2x3",     "node"};
}

std::optional<std::string> corpus_source(const std::string& name) {
  if (name == "veronese") {
    return "# 2x2 minors of the generic symmetric 3x3 matrix\n" + numbered_ring(6) +
           "ideal I = minors 2 symmetric 3;\n";
  }
  if (name.rfind("catalecticant-", 0) == 0 && name.size() == 15 && name[14] >= '1' && name[14] <= '4') {
    int r = name[14] - '0';
    return "# 2x2 minors of the 2x4 matrix with rows x1..x4 and x" + std::to_string(r + 1) + "..x" +
           std::to_string(r + 4) + "\n" + numbered_ring(r + 4) + "ideal I = minors 2 catalecticant " +
           std::to_string(r) + ";\n";
  }
  if (name == "cusp") return std::string("char 0;\nring x y;\nideal I = y^2 - x^3;\n");
  if (name == "node") return std::string("ring x y;\nideal I = y^2 - x^2 - x^3;\n");
  if (name == "generic-2x3") return "# maximal minors of a generic 2x3 matrix\n" + numbered_ring(6) + "ideal I = minors 2 generic 2 3;\n";
  return fermat_source(name);
}

Report evaluate(const std::string& source, const std::string& label, const RunOptions& options) {
  SessionAst ast;
  try {
    ast = parse_session(source);
  } catch (const Error& e) {
    return error_report(label, e.what());
  }
  try {
    return with_field(ast, options, [&](auto field, std::uint32_t p) {
      auto session = bind(ast, field, options);
      auto contexts = make_contexts(session);
      OpLog log(options);
      if (ast.checks.empty()) {
        for (auto& c : contexts) battery(*c, log);
      } else {
        for (const auto& c : ast.checks) run_check(c, contexts, log, options);
      }
      Report r;
      r.status = log.status();
      r.json = {{"session", session_json(label, ast, p, options)}, {"operations", std::move(log.operations())}};
      return r;
    });
  } catch (const Error& e) {
    return error_report(label, e.what());
  }
}

Report run_example(const std::string& name, const RunOptions& options) {
  auto src = corpus_source(name);
  if (!src) throw Error("unknown example '" + name + "'");
  return evaluate(*src, name, options);
}

Report run_corpus(const RunOptions& options) {
  auto names = corpus_names();
  std::vector<std::future<Report>> jobs;
  for (const auto& n : names) {
    jobs.push_back(std::async(std::launch::async, [&options, n] { return run_example(n, options); }));
  }
  Report all;
  all.json = {{"session", {{"label", "corpus"}, {"examples", names}}}, {"operations", json::array()}};
  Status worst = Status::Complete;
  json examples = json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Report r = jobs[i].get();
    if (r.status == Status::Error) worst = Status::Error;
    if (r.status == Status::NotCheckable && worst != Status::Error) worst = Status::NotCheckable;
    for (auto& op : r.json["operations"]) {
      op["inputs"]["example"] = names[i];
      all.json["operations"].push_back(std::move(op));
    }
    examples.push_back(std::move(r.json["session"]));
  }
  all.json["session"]["sessions"] = std::move(examples);
  all.status = worst;
  return all;
}

Report audit(const std::string& tag, const std::string& source, const std::string& label, const RunOptions& options) {
  auto tags = audit_tags();
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) throw Error("unknown audit tag '" + tag + "'");
  SessionAst ast;
  try {
    ast = parse_session(source);
  } catch (const Error& e) {
    return error_report(label, e.what());
  }
  try {
    return with_field(ast, options, [&](auto field, std::uint32_t p) {
      auto session = bind(ast, field, options);
      if (session.ideals.empty()) throw Error("the input defines no ideal");
      auto contexts = make_contexts(session);
      OpLog log(options);
      thread_work_counters() = {};
      auto start = std::chrono::steady_clock::now();
      auto rep = detail::run_audit(tag, *contexts.front(), options);
      log.push("audit", {{"ideal", contexts.front()->name()}, {"tag", tag}}, rep.to_json(), start);
      Report r;
      r.status = rep.status;
      r.json = {{"session", session_json(label, ast, p, options)}, {"operations", std::move(log.operations())}};
      return r;
    });
  } catch (const Error& e) {
    return error_report(label, e.what());
  }
}

}  // namespace tf
