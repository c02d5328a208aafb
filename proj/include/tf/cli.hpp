#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tf {

struct RunOptions {
  std::optional<std::uint32_t> characteristic;  ///< overrides 'char' in the input
  std::optional<std::string> order;             ///< monomial order name
  int max_degree = 64;
  double timeout_seconds = 600.0;               ///< per operation
  bool wall_clock = false;                      ///< add elapsed seconds to "timing"
};

/// Overall outcome of a run or an audit.
///   complete / consistent / paper-predicts -> exit 0
///   hypothesis-not-met                     -> exit 2
///   not-checkable                          -> exit 3
///   inconsistent / error                   -> exit 1
enum class Status { Complete, Consistent, PaperPredicts, HypothesisNotMet, NotCheckable, Inconsistent, Error };

std::string status_name(Status s);
int exit_code(Status s);

/// State of one hypothesis or conclusion of an audited statement.
///   holds / fails: computed.
///   assumed: a hypothesis the tool cannot decide (normality, reducedness);
///            taken as given and listed in the report.
///   predicted: a conclusion outside what the tool computes; reported as
///              what the statement predicts.
///   unknown: computable in principle but the budget ran out or the input
///            lies outside the implemented method.
enum class ItemState { Holds, Fails, Assumed, Predicted, Unknown };

std::string item_state_name(ItemState s);

struct AuditItem {
  std::string name;
  ItemState state = ItemState::Unknown;
  nlohmann::json detail = nlohmann::json::object();
};

struct AuditReport {
  std::string tag;
  std::vector<AuditItem> hypotheses;
  std::vector<AuditItem> conclusions;
  std::vector<std::string> notes;
  Status status = Status::NotCheckable;

  nlohmann::json to_json() const;
};

/// Fixed rule table, first match wins:
///   1. a hypothesis fails               -> hypothesis-not-met
///   2. a hypothesis is unknown          -> not-checkable
///   3. a conclusion fails               -> inconsistent
///   4. a conclusion is unknown          -> not-checkable
///   5. a conclusion is predicted        -> paper-predicts
///   6. otherwise                        -> consistent
Status derive_status(const AuditReport& r);

struct Report {
  nlohmann::json json;
  Status status = Status::Complete;

  /// Sorted-key JSON, two-space indent, trailing newline.
  std::string dump_json() const;
  /// One line per operation.
  std::string text() const;
};

/// Tags accepted by `audit`.
std::vector<std::string> audit_tags();

/// Built-in examples: veronese, catalecticant-1..4, cusp, fermat-5-5,
/// generic-2x3, node. Any fermat-d-n with 2 <= n <= 12 and 2 <= d <= 12 is
/// also accepted by corpus_source.
std::vector<std::string> corpus_names();
std::optional<std::string> corpus_source(const std::string& name);

/// Runs every 'check' statement of the input (the full battery on each
/// ideal when there are none).
Report evaluate(const std::string& source, const std::string& label, const RunOptions& options);
Report run_example(const std::string& name, const RunOptions& options);
/// All corpus examples, concurrently; operations are reported in corpus order.
Report run_corpus(const RunOptions& options);
/// Audits the first ideal of the input against the tagged statement.
Report audit(const std::string& tag, const std::string& source, const std::string& label, const RunOptions& options);

}  // namespace tf
