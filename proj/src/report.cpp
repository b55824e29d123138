#include <qgdual/report.hpp>

namespace qgdual {

std::vector<std::vector<int>> all_configs(int d, int L) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(L), 0);
  while (true) {
    out.push_back(cur);
    int i = L - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == d - 1) cur[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  return out;
}

bool is_markov_config(const std::vector<int>& states) {
  for (int s : states)
    if (s < 0 || s > 2) return false;
  return true;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["algebra"] = algebra;
  j["L"] = L;
  j["all_pass"] = all_pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["check_name"] = c.name;
    cj["status"] = c.status;
    if (c.first_failure) {
      cj["first_failure"] = {{"row", c.first_failure->row},
                             {"col", c.first_failure->col},
                             {"value", c.first_failure->value}};
    }
    if (!c.note.empty()) cj["note"] = c.note;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  return j;
}

}  // namespace qgdual
