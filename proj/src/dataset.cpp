#include "crowdagg/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crowdagg {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int row, int col,
                             const std::string& what) {
  std::ostringstream os;
  os << path << ":" << row;
  if (col >= 0) os << ":col" << col;
  os << ": " << what;
  throw std::runtime_error(os.str());
}

int parse_label(const std::string& path, int row, int col,
                const std::string& field) {
  const std::string t = trim(field);
  if (t.empty()) parse_fail(path, row, col, "empty label field");
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(t, &used);
  } catch (const std::exception&) {
    parse_fail(path, row, col, "label is not an integer: '" + t + "'");
  }
  if (used != t.size())
    parse_fail(path, row, col, "label is not an integer: '" + t + "'");
  return value;
}

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

void check_header(const std::string& path, const std::string& line,
                  const std::vector<std::string>& expect) {
  auto fields = split(line, ',');
  if (fields.size() != expect.size())
    parse_fail(path, 1, -1, "bad header, expected " + std::to_string(expect.size()) + " columns");
  for (std::size_t i = 0; i < expect.size(); ++i) {
    if (trim(fields[i]) != expect[i])
      parse_fail(path, 1, static_cast<int>(i + 1),
                 "bad header field '" + trim(fields[i]) + "', expected '" + expect[i] + "'");
  }
}

}  // namespace

std::vector<std::string> LabelDataset::item_ids() const {
  std::set<std::string> ids;
  for (const auto& r : records) ids.insert(r.item_id);
  return {ids.begin(), ids.end()};
}

std::vector<std::string> LabelDataset::worker_ids() const {
  std::set<std::string> ids;
  for (const auto& r : records) ids.insert(r.worker_id);
  return {ids.begin(), ids.end()};
}

std::map<std::string, std::vector<LabelRecord>> LabelDataset::votes_by_item() const {
  std::map<std::string, std::vector<LabelRecord>> out;
  for (const auto& r : records) out[r.item_id].push_back(r);
  return out;
}

void LabelDataset::validate() const {
  if (num_classes < 1)
    throw std::runtime_error("dataset: num_classes must be at least 1");
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : records) {
    if (r.label < 0 || r.label >= num_classes)
      throw std::runtime_error("dataset: label " + std::to_string(r.label) +
                               " out of range [0," + std::to_string(num_classes) +
                               ") for item " + r.item_id);
    if (!seen.insert({r.item_id, r.worker_id}).second)
      throw std::runtime_error("dataset: duplicate vote by worker " + r.worker_id +
                               " on item " + r.item_id);
  }
  std::set<std::string> items;
  for (const auto& r : records) items.insert(r.item_id);
  for (const auto& [item, label] : gold) {
    if (label < 0 || label >= num_classes)
      throw std::runtime_error("dataset: gold label out of range for item " + item);
    if (!items.count(item))
      throw std::runtime_error("dataset: gold item " + item + " has no votes");
  }
}

LabelDataset load_dataset(const std::string& labels_path, int num_classes,
                          const std::string& gold_path, bool ordinal) {
  auto in = open_or_fail(labels_path);
  LabelDataset ds;
  ds.num_classes = num_classes;
  ds.ordinal = ordinal;

  std::string line;
  if (!std::getline(in, line)) parse_fail(labels_path, 1, -1, "empty file");
  check_header(labels_path, line, {"item", "worker", "label"});

  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != 3)
      parse_fail(labels_path, row, -1,
                 "expected 3 columns, got " + std::to_string(fields.size()));
    LabelRecord rec;
    rec.item_id = trim(fields[0]);
    rec.worker_id = trim(fields[1]);
    if (rec.item_id.empty()) parse_fail(labels_path, row, 1, "empty item id");
    if (rec.worker_id.empty()) parse_fail(labels_path, row, 2, "empty worker id");
    rec.label = parse_label(labels_path, row, 3, fields[2]);
    ds.records.push_back(std::move(rec));
  }
  if (!gold_path.empty()) ds.gold = load_gold(gold_path, num_classes);
  ds.validate();
  return ds;
}

std::map<std::string, int> load_gold(const std::string& path, int num_classes) {
  auto in = open_or_fail(path);
  std::map<std::string, int> gold;
  std::string line;
  if (!std::getline(in, line)) parse_fail(path, 1, -1, "empty file");
  check_header(path, line, {"item", "label"});
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != 2)
      parse_fail(path, row, -1, "expected 2 columns, got " + std::to_string(fields.size()));
    const std::string item = trim(fields[0]);
    if (item.empty()) parse_fail(path, row, 1, "empty item id");
    const int label = parse_label(path, row, 2, fields[1]);
    if (label < 0 || label >= num_classes)
      parse_fail(path, row, 2, "gold label out of range");
    if (gold.count(item)) parse_fail(path, row, 1, "duplicate gold item " + item);
    gold[item] = label;
  }
  return gold;
}

void write_labels_csv(const LabelDataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << "item,worker,label\n";
  for (const auto& r : ds.records)
    out << r.item_id << "," << r.worker_id << "," << r.label << "\n";
}

void write_gold_csv(const std::map<std::string, int>& gold, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << "item,label\n";
  for (const auto& [item, label] : gold) out << item << "," << label << "\n";
}

void write_predictions_csv(const std::map<std::string, int>& pred, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << "item,label\n";
  for (const auto& [item, label] : pred) out << item << "," << label << "\n";
}

}  // namespace crowdagg
