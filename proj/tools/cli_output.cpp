#include "cli_output.hpp"

#include "reflect/arith.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cli {

Json report_json(const reflect::Report& r) {
  Json j;
  j["identity"] = r.identity;
  j["range"] = r.range;
  j["checked"] = std::to_string(r.checked);
  j["status"] = r.pass() ? "pass" : "fail";
  j["violations"] = r.violations;
  j["warnings"] = r.warnings;
  j["rows"] = r.rows;
  return j;
}

reflect::Report report_from_json(const Json& j) {
  reflect::Report r;
  r.identity = j.value("identity", "");
  r.range = j.value("range", "");
  r.checked = std::stol(j.value("checked", std::string("0")));
  r.violations = j.value("violations", std::vector<std::string>{});
  r.warnings = j.value("warnings", std::vector<std::string>{});
  r.rows = j.value("rows", std::vector<std::vector<std::string>>{});
  return r;
}

Json envelope(const std::string& command, const Json& body) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  return doc;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& r) {
    return r.is_array() && std::all_of(r.begin(), r.end(), [](const Json& c) { return !c.is_structured(); });
  });
}

bool is_record_list(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& r) {
    return r.is_object() && std::all_of(r.begin(), r.end(), [](const Json& c) { return !c.is_structured(); });
  });
}

void table(std::ostringstream& out, const std::string& indent, const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows) {
  std::size_t cols = header.size();
  for (const auto& r : rows) cols = std::max(cols, r.size());
  std::vector<std::size_t> w(cols, 0);
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    out << indent;
    for (std::size_t i = 0; i < cols; ++i) {
      std::string c = i < r.size() ? r[i] : "";
      out << c << std::string(w[i] - c.size() + 2, ' ');
    }
    out << "\n";
  };
  if (!header.empty()) {
    line(header);
    std::vector<std::string> rule;
    for (auto x : w) rule.push_back(std::string(x, '-'));
    line(rule);
  }
  for (const auto& r : rows) line(r);
}

void render(std::ostringstream& out, const Json& v, const std::string& indent) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& x = it.value();
    if (!x.is_structured()) {
      out << indent << it.key() << ": " << scalar(x) << "\n";
    } else if (x.is_array() && x.empty()) {
      out << indent << it.key() << ": (none)\n";
    } else if (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& c) { return !c.is_structured(); })) {
      out << indent << it.key() << ":\n";
      for (const auto& c : x) out << indent << "  " << scalar(c) << "\n";
    } else if (is_table(x)) {
      out << indent << it.key() << ":\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : x) {
        std::vector<std::string> row;
        for (const auto& c : r) row.push_back(scalar(c));
        rows.push_back(row);
      }
      table(out, indent + "  ", {}, rows);
    } else if (is_record_list(x)) {
      out << indent << it.key() << ":\n";
      std::vector<std::string> header;
      for (auto c = x.front().begin(); c != x.front().end(); ++c) header.push_back(c.key());
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : x) {
        std::vector<std::string> row;
        for (const auto& h : header) row.push_back(r.contains(h) ? scalar(r[h]) : "");
        rows.push_back(row);
      }
      table(out, indent + "  ", header, rows);
    } else if (x.is_object()) {
      out << indent << it.key() << ":\n";
      render(out, x, indent + "  ");
    } else {
      out << indent << it.key() << ":\n";
      for (const auto& c : x) {
        if (c.is_object()) {
          render(out, c, indent + "  ");
          out << "\n";
        } else {
          out << indent << "  " << c.dump() << "\n";
        }
      }
    }
  }
}

}  // namespace

std::string pretty(const Json& doc) {
  std::ostringstream out;
  render(out, doc, "");
  return out.str();
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

SweepResult resumable_sweep(const std::string& command, const Json& params, const std::vector<long>& items,
                            const std::function<reflect::Report(const std::vector<long>&)>& check,
                            const std::optional<std::string>& state_path, long max_chunks, std::size_t chunk) {
  reflect::Report total;
  std::size_t done = 0;
  if (state_path && std::filesystem::exists(*state_path)) {
    std::ifstream in(*state_path);
    Json st = Json::parse(in, nullptr, false);
    if (st.is_discarded() || st.value("schema", "") != kSchema)
      throw reflect::BadInput("resume file is not a reflect-rings state file");
    if (st.value("command", "") != command || st["params"] != params)
      throw reflect::BadInput("resume file belongs to a different sweep");
    done = std::stoul(st.value("done", std::string("0")));
    if (done > items.size()) throw reflect::BadInput("resume file is ahead of the item list");
    total = report_from_json(st["report"]);
  }
  auto save = [&] {
    if (!state_path) return;
    Json st;
    st["schema"] = kSchema;
    st["command"] = command;
    st["params"] = params;
    st["done"] = std::to_string(done);
    st["total"] = std::to_string(items.size());
    st["report"] = report_json(total);
    std::string tmp = *state_path + ".tmp";
    {
      std::ofstream out(tmp);
      out << st.dump() << "\n";
    }
    std::filesystem::rename(tmp, *state_path);
  };
  long chunks = 0;
  while (done < items.size() && (max_chunks <= 0 || chunks < max_chunks)) {
    ++chunks;
    std::size_t end = std::min(items.size(), done + chunk);
    std::vector<long> batch(items.begin() + static_cast<long>(done), items.begin() + static_cast<long>(end));
    reflect::Report r = check(batch);
    if (total.identity.empty()) total.identity = r.identity;
    total.merge(r);
    done = end;
    save();
  }
  if (total.identity.empty()) total.identity = check({}).identity;
  return {total, done, items.size()};
}

}  // namespace cli
