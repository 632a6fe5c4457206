#pragma once
#include <string>
#include <vector>

#include "mhelm/types.hpp"

namespace mhelm {

// One published benchmark table: labeled rows x columns with the printed
// values, row-major. `bench` re-computes each cell and emits the published
// number alongside in a `paper_value` column.
struct PublishedTable {
  std::string id;          // e.g. "5.1_boundary"
  std::string title;
  std::string row_header;  // meaning of the row labels
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<double> values;  // rows.size() * cols.size(), row-major

  double at(size_t r, size_t c) const { return values[r * cols.size() + c]; }
};

const std::vector<PublishedTable>& published_tables();
const PublishedTable& published_table(const std::string& id);  // throws ConfigError

}  // namespace mhelm
