#pragma once

#include <map>
#include <string>
#include <vector>

#include "crowdagg/util.hpp"

namespace crowdagg {

// One observed label: worker `worker_id` gave item `item_id` the class
// index `label` (0-based, < num_classes of the owning dataset).
struct LabelRecord {
  std::string item_id;
  std::string worker_id;
  int label = 0;
};

// Sparse worker x item observation table plus optional gold labels.
// Immutable by convention once validated; safe to share across runs.
struct LabelDataset {
  std::vector<LabelRecord> records;
  int num_classes = 0;
  std::map<std::string, int> gold;  // empty when no gold labels are known
  bool ordinal = false;             // true for ratings, false for categories

  std::vector<std::string> item_ids() const;    // sorted, unique
  std::vector<std::string> worker_ids() const;  // sorted, unique
  std::map<std::string, std::vector<LabelRecord>> votes_by_item() const;

  // Throws std::runtime_error on any invariant violation: label out of
  // range, duplicate (item, worker) pair, gold label out of range, or a
  // gold item that never appears in the records.
  void validate() const;
};

// Reads a `item,worker,label` CSV (header required) and, optionally, a
// `item,label` gold CSV. Parse failures report file, row and column.
LabelDataset load_dataset(const std::string& labels_path, int num_classes,
                          const std::string& gold_path = "",
                          bool ordinal = false);

std::map<std::string, int> load_gold(const std::string& path, int num_classes);

void write_labels_csv(const LabelDataset& ds, const std::string& path);
void write_gold_csv(const std::map<std::string, int>& gold,
                    const std::string& path);
void write_predictions_csv(const std::map<std::string, int>& pred,
                           const std::string& path);

}  // namespace crowdagg
