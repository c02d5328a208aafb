#include <algorithm>
#include <functional>

#include "context.hpp"
#include "tf/limits.hpp"

namespace tf {

std::string item_state_name(ItemState s) {
  switch (s) {
    case ItemState::Holds: return "holds";
    case ItemState::Fails: return "fails";
    case ItemState::Assumed: return "assumed";
    case ItemState::Predicted: return "predicted";
    case ItemState::Unknown: return "unknown";
  }
  return "unknown";
}

Status derive_status(const AuditReport& r) {
  auto any = [](const std::vector<AuditItem>& items, ItemState s) {
    return std::any_of(items.begin(), items.end(), [&](const AuditItem& i) { return i.state == s; });
  };
  if (any(r.hypotheses, ItemState::Fails)) return Status::HypothesisNotMet;
  if (any(r.hypotheses, ItemState::Unknown)) return Status::NotCheckable;
  if (any(r.conclusions, ItemState::Fails)) return Status::Inconsistent;
  if (any(r.conclusions, ItemState::Unknown)) return Status::NotCheckable;
  if (any(r.conclusions, ItemState::Predicted)) return Status::PaperPredicts;
  return Status::Consistent;
}

nlohmann::json AuditReport::to_json() const {
  auto items = [](const std::vector<AuditItem>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& i : v) out.push_back({{"name", i.name}, {"state", item_state_name(i.state)}, {"detail", i.detail}});
    return out;
  };
  return {{"tag", tag},
          {"hypotheses", items(hypotheses)},
          {"conclusions", items(conclusions)},
          {"notes", notes},
          {"status", status_name(status)}};
}

std::vector<std::string> audit_tags() {
  return {"reduced-vs-torsionfree", "cube-order-torsion", "ecodim2-omega-cm",   "quadric-spread",
          "cm-rees-forces-F1",      "ci-normality",       "codim2-linear-type", "codim2-normal",
          "codim3-gorenstein",      "cy-complete-intersection", "cy-ecodim3"};
}

namespace detail {

namespace {

using Eval = std::function<std::pair<ItemState, json>()>;

ItemState holds_if(bool b) { return b ? ItemState::Holds : ItemState::Fails; }

template <class F>
class Auditor {
 public:
  Auditor(std::string tag, Context<F>& ctx, const RunOptions& options) : ctx_(ctx), options_(options) {
    report_.tag = std::move(tag);
  }

  void hypothesis(std::string name, const Eval& eval) { report_.hypotheses.push_back(evaluate(std::move(name), eval)); }
  void conclusion(std::string name, const Eval& eval) { report_.conclusions.push_back(evaluate(std::move(name), eval)); }
  void assumed(std::string name, std::string why) {
    report_.hypotheses.push_back({std::move(name), ItemState::Assumed, {{"reason", std::move(why)}}});
  }
  void predicted(std::string name, json detail) {
    report_.conclusions.push_back({std::move(name), ItemState::Predicted, std::move(detail)});
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  /// Characteristic zero is required: holds over Q, assumed (with a
  /// warning) over GF(p).
  void char_zero() {
    if (ctx_.characteristic() == 0) {
      hypothesis("characteristic zero", [] { return std::make_pair(ItemState::Holds, json{{"characteristic", 0}}); });
    } else {
      assumed("characteristic zero", "computed over GF(" + std::to_string(ctx_.characteristic()) + ")");
      note("warning: the statement is for characteristic zero; GF(p) results are a proxy, rerun with --char 0");
    }
  }

  AuditReport finish() {
    report_.status = derive_status(report_);
    return std::move(report_);
  }

  Context<F>& ctx() { return ctx_; }

 private:
  AuditItem evaluate(std::string name, const Eval& eval) {
    AuditItem item;
    item.name = std::move(name);
    ScopedLimits limits(ComputeLimits::with_timeout(std::chrono::duration<double>(options_.timeout_seconds),
                                                    options_.max_degree));
    try {
      auto [state, detail] = eval();
      item.state = state;
      item.detail = std::move(detail);
    } catch (const Error& e) {
      item.state = ItemState::Unknown;
      try {
        item.detail = {{"reason", not_checkable_reason()}};
      } catch (const Error&) {
        item.detail = {{"reason", std::string(e.what())}};
      }
    }
    return item;
  }

  Context<F>& ctx_;
  const RunOptions& options_;
  AuditReport report_;
};

// Shared items.

template <class F>
void ecodim_at_most(Auditor<F>& a, int bound) {
  a.hypothesis("embedding codimension at most " + std::to_string(bound), [&a, bound] {
    int e = a.ctx().ecodim();
    return std::make_pair(holds_if(e <= bound), json{{"ecodim", e}, {"bound", bound}});
  });
}

template <class F>
void edim_item(Auditor<F>& a, int t, bool as_hypothesis) {
  std::string name = "edim at most 2 dim - " + std::to_string(t) + " off the regular locus";
  Eval e = [&a, t] {
    bool v = a.ctx().edim(t);
    return std::make_pair(holds_if(v), json{{"edim_criterion", v}, {"t", t}});
  };
  if (as_hypothesis) {
    a.hypothesis(name, e);
  } else {
    a.conclusion(name, e);
  }
}

template <class F>
void cohen_macaulay_base(Auditor<F>& a) {
  a.hypothesis("base ring Cohen-Macaulay", [&a] {
    bool v = is_cohen_macaulay(a.ctx().base());
    return std::make_pair(holds_if(v), json{{"is_cohen_macaulay", v}});
  });
}

template <class F>
void complete_intersection(Auditor<F>& a) {
  a.hypothesis("complete intersection", [&a] {
    int mu = a.ctx().mu();
    int h = a.ctx().base().ideal.height();
    return std::make_pair(holds_if(mu == h), json{{"minimal_generators", mu}, {"height", height_json(h)}});
  });
}

template <class F>
void isolated_singularity(Auditor<F>& a, const std::string& name) {
  a.hypothesis(name, [&a] {
    int d = a.ctx().singular_locus_dim();
    return std::make_pair(holds_if(d <= 0), json{{"singular_locus_dim", d}});
  });
}

/// Torsion present means the tangent algebra is predicted non-reduced; a
/// nilpotent torsion generator certifies it. Without torsion the prediction
/// is that it is reduced.
template <class F>
void reducedness_conclusion(Auditor<F>& a) {
  auto& ctx = a.ctx();
  a.conclusion("tangent algebra reduced iff torsionfree", [&ctx] {
    const auto& rees = ctx.rees();
    if (rees.report.linear_type) {
      return std::make_pair(ItemState::Predicted, json{{"linear_type", true}, {"predicted_reduced", true}});
    }
    const auto& j = rees.report.j;
    for (const auto& g : rees.report.new_generators) {
      if (j.radical_contains(g)) {
        return std::make_pair(ItemState::Holds, json{{"linear_type", false}, {"nilpotent_torsion", show(g)}});
      }
    }
    return std::make_pair(ItemState::Predicted,
                          json{{"linear_type", false}, {"nilpotent_torsion", nullptr}, {"predicted_reduced", false}});
  });
}

// Audits.

template <class F>
void reduced_vs_torsionfree(Auditor<F>& a) {
  auto& ctx = a.ctx();
  a.assumed("base ring reduced", "reducedness is not decided by the tool");
  a.hypothesis("ideal inside the square of the maximal ideal", [&ctx] {
    int o = ctx.base().ideal.order();
    return std::make_pair(holds_if(o >= 2), json{{"order", o}});
  });
  a.hypothesis("quadratic part bound mu_mod_cube <= dim R - 1", [&ctx] {
    int mu = mu_mod_cube(ctx.base().ideal);
    int bound = ctx.nvars() - 1;
    return std::make_pair(holds_if(mu <= bound), json{{"mu_mod_cube", mu}, {"bound", bound}});
  });
  a.hypothesis("bound at the other non-minimal primes", [&ctx] {
    int d = ctx.singular_locus_dim();
    // Away from an isolated singular point every localisation is regular.
    return std::make_pair(d <= 0 ? ItemState::Holds : ItemState::Assumed,
                          json{{"singular_locus_dim", d}, {"checked_at_origin_only", d > 0}});
  });
  reducedness_conclusion(a);
}

template <class F>
void cube_order_torsion(Auditor<F>& a) {
  auto& ctx = a.ctx();
  a.assumed("base ring reduced", "reducedness is not decided by the tool");
  a.hypothesis("ideal inside the cube of the maximal ideal", [&ctx] {
    int o = ctx.base().ideal.order();
    return std::make_pair(holds_if(o >= 3), json{{"order", o}});
  });
  isolated_singularity(a, "isolated singularity");
  reducedness_conclusion(a);
}

template <class F>
void ecodim2_omega_cm(Auditor<F>& a) {
  auto& ctx = a.ctx();
  a.assumed("base ring normal", "normality is not decided by the tool");
  cohen_macaulay_base(a);
  a.hypothesis("embedding codimension 2", [&ctx] {
    int e = ctx.ecodim();
    return std::make_pair(holds_if(e == 2), json{{"ecodim", e}});
  });
  a.hypothesis("almost complete intersection in codimension 2", [&ctx] {
    int mu = ctx.mu();
    if (mu <= 3) return std::make_pair(ItemState::Holds, json{{"minimal_generators", mu}});
    // mu(I_p) <= 3 off V(Fitt_3(I/I^2)); its height in A must exceed 2.
    const auto& base = ctx.base();
    auto idx = minimal_generator_indices(ctx.ring(), base.ideal.generators());
    std::vector<Polynomial<F>> gens;
    for (int i : idx) gens.push_back(base.ideal.generators()[static_cast<std::size_t>(i)]);
    auto syz = syzygies(PolyMatrix<F>::row(ctx.ring(), gens));
    int size = mu - 3;
    Ideal<F> fitt = base.ideal;
    if (size <= std::min(syz.rows(), syz.cols())) {
      fitt = Ideal<F>(ctx.ring(), minors(syz, size)) + base.ideal;
    }
    int h = height_in_quotient(fitt, base.ideal);
    return std::make_pair(holds_if(h >= 3), json{{"minimal_generators", mu}, {"conormal_fitting_height", height_json(h)}});
  });
  a.conclusion("differentials mod torsion Cohen-Macaulay only if regular", [&ctx] {
    auto m = omega_mod_torsion(ctx.base(), &ctx.rees());
    bool cm = is_cohen_macaulay(m);
    bool regular = ctx.ecodim() == 0;
    return std::make_pair(holds_if(!cm || regular), json{{"omega_mod_torsion_cm", cm}, {"regular", regular}});
  });
}

template <class F>
void quadric_spread(Auditor<F>& a) {
  auto& ctx = a.ctx();
  a.char_zero();
  a.assumed("base ring a normal domain", "normality is not decided by the tool");
  a.hypothesis("ideal inside the square of the maximal ideal", [&ctx] {
    int o = ctx.base().ideal.order();
    return std::make_pair(holds_if(o >= 2), json{{"order", o}});
  });
  std::optional<QuadricSpread<F>> q;
  a.hypothesis("spread of the quadrics differs from twice the height", [&ctx, &q] {
    q = spread_of_quadric_part(ctx.base().ideal);
    return std::make_pair(holds_if(!q->equals_twice_height),
                          json{{"quadrics", q->quadrics}, {"spread", q->spread}, {"height", q->height}});
  });
  a.conclusion("spread equals the Jacobian rank of the quadrics", [&q] {
    if (!q) throw Error("quadric spread unavailable");
    return std::make_pair(holds_if(q->spread == q->jacobian_rank),
                          json{{"spread", q->spread}, {"jacobian_rank", q->jacobian_rank}});
  });
  a.predicted("normal tangent algebra iff reflexive symmetric powers", json::object());
}

template <class F>
void cm_rees_forces_f1(Auditor<F>& a) {
  auto& ctx = a.ctx();
  a.char_zero();
  complete_intersection(a);
  edim_item(a, 0, true);
  a.conclusion("Cohen-Macaulay Rees algebra forces edim at most 2 dim - 1", [&ctx] {
    bool f1 = ctx.edim(1);
    if (f1) return std::make_pair(ItemState::Holds, json{{"edim_criterion_1", true}});
    bool cm = is_cohen_macaulay(ctx.rees().algebra);
    return std::make_pair(holds_if(!cm), json{{"edim_criterion_1", false}, {"rees_cm", cm}});
  });
}

/// Under (F_1) the module of differentials is of linear type.
template <class F>
void f_implies_linear_type(Auditor<F>& a, int t) {
  auto& ctx = a.ctx();
  a.conclusion("edim at most 2 dim - " + std::to_string(t) + " gives linear type", [&ctx, t] {
    bool f = ctx.edim(t);
    if (!f) return std::make_pair(ItemState::Holds, json{{"edim_criterion_" + std::to_string(t), false}});
    bool lt = ctx.rees().report.linear_type;
    return std::make_pair(holds_if(lt), json{{"edim_criterion_" + std::to_string(t), true}, {"linear_type", lt}});
  });
}

template <class F>
void linear_type_iff_f1(Auditor<F>& a) {
  auto& ctx = a.ctx();
  a.conclusion("linear type iff edim at most 2 dim - 1", [&ctx] {
    bool lt = ctx.rees().report.linear_type;
    bool f1 = ctx.edim(1);
    return std::make_pair(holds_if(lt == f1), json{{"linear_type", lt}, {"edim_criterion_1", f1}});
  });
}

template <class F>
void ci_normality(Auditor<F>& a) {
  auto& ctx = a.ctx();
  complete_intersection(a);
  a.assumed("base ring a normal domain", "normality is not decided by the tool");
  f_implies_linear_type(a, 1);
  f_implies_linear_type(a, 2);
  a.conclusion("normal Rees algebra iff edim at most 2 dim - 2", [&ctx] {
    bool f2 = ctx.edim(2);
    return std::make_pair(ItemState::Predicted, json{{"edim_criterion_2", f2}, {"predicted_rees_normal", f2}});
  });
}

template <class F>
void codim2_common(Auditor<F>& a) {
  a.assumed("base ring reduced", "reducedness is not decided by the tool");
  cohen_macaulay_base(a);
  ecodim_at_most(a, 2);
  edim_item(a, 0, true);
}

template <class F>
void codim2_linear_type(Auditor<F>& a) {
  auto& ctx = a.ctx();
  codim2_common(a);
  a.conclusion("tangent algebra Cohen-Macaulay", [&ctx] {
    bool v = is_cohen_macaulay(ctx.tangent());
    return std::make_pair(holds_if(v), json{{"is_cohen_macaulay", v}});
  });
  linear_type_iff_f1(a);
}

template <class F>
void codim2_normal(Auditor<F>& a) {
  auto& ctx = a.ctx();
  codim2_common(a);
  a.assumed("base ring normal", "normality is not decided by the tool");
  f_implies_linear_type(a, 2);
  a.conclusion("linear type and normal iff edim at most 2 dim - 2", [&ctx] {
    bool f2 = ctx.edim(2);
    bool lt = ctx.rees().report.linear_type;
    // Not linear type rules out the left side, so both sides must be false.
    if (!lt) return std::make_pair(holds_if(!f2), json{{"edim_criterion_2", f2}, {"linear_type", false}});
    return std::make_pair(ItemState::Predicted, json{{"edim_criterion_2", f2}, {"linear_type", true}});
  });
}

template <class F>
void codim3_gorenstein(Auditor<F>& a) {
  auto& ctx = a.ctx();
  a.assumed("base ring reduced", "reducedness is not decided by the tool");
  a.hypothesis("base ring Gorenstein", [&ctx] {
    bool v = is_gorenstein(ctx.base());
    return std::make_pair(holds_if(v), json{{"is_gorenstein", v}});
  });
  ecodim_at_most(a, 3);
  edim_item(a, 0, true);
  a.conclusion("tangent algebra Gorenstein", [&ctx] {
    bool v = is_gorenstein(ctx.tangent());
    return std::make_pair(holds_if(v), json{{"is_gorenstein", v}});
  });
  a.note("Gorenstein property of the tangent algebra is decided from its Hilbert series and socle (or Betti data), not by a self-duality argument");
  linear_type_iff_f1(a);
}

template <class F>
std::vector<int> minimal_degrees(const Ideal<F>& i) {
  std::vector<int> out;
  for (int k : minimal_generator_indices(i.ring(), i.generators())) {
    out.push_back(i.generators()[static_cast<std::size_t>(k)].degree());
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

template <class F>
void cy_common(Auditor<F>& a) {
  auto& ctx = a.ctx();
  a.char_zero();
  a.hypothesis("standard graded", [&ctx] {
    bool v = ctx.standard_graded();
    return std::make_pair(holds_if(v), json{{"standard_graded", v}});
  });
  a.hypothesis("non-degenerate", [&ctx] {
    int e = ctx.embedding_dimension();
    return std::make_pair(holds_if(e == ctx.nvars()), json{{"edim", e}, {"variables", ctx.nvars()}});
  });
  isolated_singularity(a, "smooth projective variety");
  a.hypothesis("Calabi-Yau type", [&ctx] {
    bool v = cy_type_check(ctx.base());
    return std::make_pair(holds_if(v), json{{"cy_type_check", v}});
  });
}

template <class F>
void cy_complete_intersection(Auditor<F>& a) {
  auto& ctx = a.ctx();
  cy_common(a);
  complete_intersection(a);
  a.conclusion("tangent algebra a complete intersection of the doubled degrees", [&ctx] {
    auto d = minimal_degrees(ctx.base().ideal);
    auto doubled = d;
    doubled.insert(doubled.end(), d.begin(), d.end());
    std::sort(doubled.rbegin(), doubled.rend());
    const auto& j = ctx.tangent().ideal;
    auto dj = minimal_degrees(j);
    bool ci = static_cast<int>(dj.size()) == j.height();
    return std::make_pair(holds_if(ci && dj == doubled), json{{"degrees", dj}, {"expected", doubled}});
  });
  a.conclusion("tangent algebra of Calabi-Yau type", [&ctx] {
    bool v = cy_type_check(ctx.tangent());
    return std::make_pair(holds_if(v), json{{"cy_type_check", v}});
  });
  a.conclusion("linear type exactly when the top degree exceeds 2", [&ctx] {
    int d1 = minimal_degrees(ctx.base().ideal).front();
    bool lt = ctx.rees().report.linear_type;
    json detail{{"top_degree", d1}, {"linear_type", lt}};
    if (d1 >= 3) return std::make_pair(holds_if(lt), detail);
    bool cm = is_cohen_macaulay(ctx.rees().algebra);
    detail["rees_cm"] = cm;
    return std::make_pair(holds_if(!lt && !cm), detail);
  });
  a.conclusion("edim at most 2 dim - 2 iff d1 >= 4 or d2 >= 3", [&ctx] {
    auto d = minimal_degrees(ctx.base().ideal);
    bool degrees = d[0] >= 4 || (d.size() > 1 && d[1] >= 3);
    bool f2 = ctx.edim(2);
    return std::make_pair(holds_if(f2 == degrees), json{{"edim_criterion_2", f2}, {"degree_condition", degrees}});
  });
  a.predicted("Rees projective scheme arithmetically normal of Calabi-Yau type iff the degree condition", json::object());
}

template <class F>
void cy_ecodim3(Auditor<F>& a) {
  auto& ctx = a.ctx();
  cy_common(a);
  a.hypothesis("not a complete intersection", [&ctx] {
    int mu = ctx.mu();
    int h = ctx.base().ideal.height();
    return std::make_pair(holds_if(mu > h), json{{"minimal_generators", mu}, {"height", height_json(h)}});
  });
  cohen_macaulay_base(a);
  a.hypothesis("projective dimension at least 2", [&ctx] {
    int d = ctx.base().dim() - 1;
    return std::make_pair(holds_if(d >= 2), json{{"projective_dim", d}});
  });
  ecodim_at_most(a, 3);
  a.conclusion("tangent algebra Gorenstein of Calabi-Yau type", [&ctx] {
    bool v = cy_type_check(ctx.tangent());
    return std::make_pair(holds_if(v), json{{"cy_type_check", v}});
  });
  a.conclusion("linear type exactly when the projective dimension exceeds 2", [&ctx] {
    int d = ctx.base().dim() - 1;
    bool lt = ctx.rees().report.linear_type;
    return std::make_pair(holds_if(lt == (d >= 3)), json{{"projective_dim", d}, {"linear_type", lt}});
  });
  a.conclusion("edim at most 2 dim - 2 iff projective dimension at least 4", [&ctx] {
    int d = ctx.base().dim() - 1;
    bool f2 = ctx.edim(2);
    return std::make_pair(holds_if(f2 == (d >= 4)), json{{"edim_criterion_2", f2}, {"projective_dim", d}});
  });
  a.predicted("tangent scheme arithmetically normal iff projective dimension at least 4", json::object());
}

}  // namespace

template <class F>
AuditReport run_audit(const std::string& tag, Context<F>& ctx, const RunOptions& options) {
  Auditor<F> a(tag, ctx, options);
  if (tag == "reduced-vs-torsionfree") {
    reduced_vs_torsionfree(a);
  } else if (tag == "cube-order-torsion") {
    cube_order_torsion(a);
  } else if (tag == "ecodim2-omega-cm") {
    ecodim2_omega_cm(a);
  } else if (tag == "quadric-spread") {
    quadric_spread(a);
  } else if (tag == "cm-rees-forces-F1") {
    cm_rees_forces_f1(a);
  } else if (tag == "ci-normality") {
    ci_normality(a);
  } else if (tag == "codim2-linear-type") {
    codim2_linear_type(a);
  } else if (tag == "codim2-normal") {
    codim2_normal(a);
  } else if (tag == "codim3-gorenstein") {
    codim3_gorenstein(a);
  } else if (tag == "cy-complete-intersection") {
    cy_complete_intersection(a);
  } else if (tag == "cy-ecodim3") {
    cy_ecodim3(a);
  } else {
    throw Error("unknown audit tag '" + tag + "'");
  }
  return a.finish();
}

template AuditReport run_audit(const std::string&, Context<PrimeField>&, const RunOptions&);
template AuditReport run_audit(const std::string&, Context<RationalField>&, const RunOptions&);

}  // namespace detail
}  // namespace tf
