#include "output.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace hefp::cli {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const OutputTable& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << csv_cell(cells[i]);
    }
    os << '\n';
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string render_json(const OutputTable& t) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["kind"] = t.kind;
  j["columns"] = t.columns;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t i = 0; i < t.columns.size() && i < r.size(); ++i) {
      if (r[i].empty()) obj[t.columns[i]] = nullptr;
      else obj[t.columns[i]] = r[i];
    }
    rows.push_back(std::move(obj));
  }
  if (!t.notes.empty()) j["notes"] = t.notes;
  return j.dump(2) + "\n";
}

std::string render_pretty(const OutputTable& t) {
  std::vector<size_t> width(t.columns.size());
  for (size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& r : t.rows) {
    for (size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < width.size(); ++i) {
      const std::string& c = i < cells.size() ? cells[i] : std::string();
      os << c << std::string(width[i] - c.size() + (i + 1 < width.size() ? 2 : 0), ' ');
    }
    os << '\n';
  };
  line(t.columns);
  size_t total = 0;
  for (size_t w : width) total += w + 2;
  os << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
  for (const auto& r : t.rows) line(r);
  return os.str();
}

}  // namespace

std::string render(const OutputTable& table, Format format) {
  switch (format) {
    case Format::csv: return render_csv(table);
    case Format::json: return render_json(table);
    case Format::pretty: return render_pretty(table);
  }
  return {};
}

}  // namespace hefp::cli
