#pragma once

// Lazily computed objects attached to one input ideal, shared by the
// battery, the 'check' operations and the audits.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tf/cli.hpp"
#include "tf/homology.hpp"
#include "tf/linalg.hpp"
#include "tf/session.hpp"

namespace tf::detail {

using json = nlohmann::json;

inline json height_json(int h) { return h == kInfiniteHeight ? json("inf") : json(h); }

template <class F>
std::string show(const Polynomial<F>& p) {
  return display_normalize(p).to_string();
}

template <class F>
class Context {
 public:
  Context(std::string name, const Ideal<F>& i)
      : name_(std::move(name)), input_(PresentedAlgebra<F>::quotient(i)), base_(graded_form(input_)) {}

  const std::string& name() const { return name_; }
  const PresentedAlgebra<F>& input() const { return input_; }
  /// Same algebra, regraded with positive weights when the ideal is
  /// quasi-homogeneous.
  const PresentedAlgebra<F>& base() const { return base_; }
  const RingPtr<F>& ring() const { return base_.ring(); }
  int nvars() const { return ring()->nvars(); }
  bool graded() const { return base_.ideal.is_homogeneous(); }
  bool standard_graded() const { return graded() && ring()->standard_grading(); }
  std::uint32_t characteristic() const { return ring()->field().characteristic(); }

  const PresentedModule<F>& omega() {
    if (!omega_) omega_ = omega_presentation(base_);
    return *omega_;
  }
  const PresentedAlgebra<F>& tangent() {
    if (!tangent_) tangent_ = tangent_algebra(base_);
    return *tangent_;
  }
  const ReesResult<F>& rees() {
    if (!rees_) rees_ = rees_algebra(base_);
    return *rees_;
  }
  const PresentedAlgebra<F>& algebra(const std::string& which) {
    if (which == "base") return base_;
    if (which == "tangent") return tangent();
    if (which == "rees") return rees().algebra;
    throw Error("unknown algebra '" + which + "' (expected base, tangent or rees)");
  }
  bool edim(int t) {
    auto it = edim_.find(t);
    if (it != edim_.end()) return it->second;
    bool v = edim_criterion(base_, t);
    edim_.emplace(t, v);
    return v;
  }

  /// Zariski embedding dimension at the origin: n minus the rank of the
  /// linear parts of the generators.
  int embedding_dimension() const {
    const F& k = ring()->field();
    std::vector<std::vector<typename F::Element>> rows;
    for (const auto& g : base_.ideal.generators()) {
      std::vector<typename F::Element> row(static_cast<std::size_t>(nvars()), k.zero());
      for (const auto& t : g.terms()) {
        int d = t.monomial.total_degree();
        if (d == 0) throw Error("the origin does not lie on the variety");
        if (d != 1) continue;
        for (int v = 0; v < nvars(); ++v) {
          if (t.monomial[v]) row[static_cast<std::size_t>(v)] = t.coefficient;
        }
      }
      rows.push_back(std::move(row));
    }
    return nvars() - (rows.empty() ? 0 : matrix_rank(k, std::move(rows)));
  }
  int ecodim() const { return embedding_dimension() - base_.dim(); }

  /// Minimal number of generators of the ideal (graded input; otherwise the
  /// number of given generators when it already equals the height).
  int mu() {
    if (!mu_) {
      const auto& gens = base_.ideal.generators();
      if (graded()) {
        mu_ = static_cast<int>(minimal_generator_indices(ring(), gens).size());
      } else if (static_cast<int>(gens.size()) == base_.ideal.height()) {
        mu_ = static_cast<int>(gens.size());
      } else {
        throw NotGraded("minimal number of generators needs graded input");
      }
    }
    return *mu_;
  }
  bool complete_intersection() { return mu() == base_.ideal.height(); }

  /// Krull dimension of the singular locus I + I_c(Jacobian), c the height.
  int singular_locus_dim() {
    if (!sing_dim_) sing_dim_ = fitting_ideal(omega(), base_.dim()).dim();
    return *sing_dim_;
  }

 private:
  std::string name_;
  PresentedAlgebra<F> input_;
  PresentedAlgebra<F> base_;
  std::optional<PresentedModule<F>> omega_;
  std::optional<PresentedAlgebra<F>> tangent_;
  std::optional<ReesResult<F>> rees_;
  std::map<int, bool> edim_;
  std::optional<int> mu_;
  std::optional<int> sing_dim_;
};

/// Describes an exception that makes an item or operation not checkable;
/// rethrows anything else.
inline json not_checkable_reason() {
  try {
    throw;
  } catch (const Timeout&) {
    return "time budget exhausted";
  } catch (const DegreeCapExceeded& e) {
    return std::string(e.what());
  } catch (const NotGraded& e) {
    return std::string(e.what());
  } catch (const NoWitness& e) {
    return std::string(e.what());
  }
}

template <class F>
AuditReport run_audit(const std::string& tag, Context<F>& ctx, const RunOptions& options);

}  // namespace tf::detail
